//! Steady-state rate laws, all in packets per second.

use crate::error::Error;
use crate::math;
use crate::signal::SignalLevel;

/// Marks per RTT of the reference window law (DCTCP with probabilistic marking).
pub const DEFAULT_V0: f64 = 2.0;
/// RTT knee of the compromise mark-rate law, seconds.
pub const DEFAULT_R0: f64 = 500e-6;
/// Mark rate constant of the RTT-independent law, marks/s (one mark per ms).
pub const DEFAULT_C0: f64 = 1000.0;

fn positive(x: f64, what: &'static str) -> Result<(), Error> {
    if x.is_finite() && x > 0.0 {
        Ok(())
    } else {
        Err(Error::Domain(what))
    }
}

/// Window law W = v0/p: rate v0/(R p).
pub fn rate_dctcp(sig: SignalLevel, total_rtt: f64, v0: f64) -> Result<f64, Error> {
    positive(total_rtt, "total_rtt must be finite and > 0")?;
    positive(v0, "v0 must be finite and > 0")?;
    if sig.is_unmarked() {
        return Err(Error::UnboundedRate("rate_dctcp"));
    }
    Ok(v0 / (total_rtt * sig.p()))
}

/// RTT-independent rate law r = c0 u^2.
pub fn rate_comp4(sig: SignalLevel, c0: f64) -> Result<f64, Error> {
    positive(c0, "c0 must be finite and > 0")?;
    if sig.is_unmarked() {
        return Err(Error::UnboundedRate("rate_comp4"));
    }
    Ok(c0 * sig.u() * sig.u())
}

/// Signal at which the RTT-independent law sustains `rate_pkts`: u = sqrt(r/c0).
pub fn comp4_signal_for_rate(rate_pkts: f64, c0: f64) -> Result<SignalLevel, Error> {
    positive(rate_pkts, "packet rate must be finite and > 0")?;
    positive(c0, "c0 must be finite and > 0")?;
    SignalLevel::from_u(math::sqrt(rate_pkts / c0))
}

/// Marks per RTT that the compromise law pins: v0/lg(r0/rtt + 1).
pub fn comp5_marks_per_rtt(total_rtt: f64, v0: f64, r0: f64) -> Result<f64, Error> {
    positive(total_rtt, "total_rtt must be finite and > 0")?;
    positive(v0, "v0 must be finite and > 0")?;
    positive(r0, "r0 must be finite and > 0")?;
    Ok(v0 / math::log2(r0 / total_rtt + 1.0))
}

/// Mark rate of the compromise law: f(R) = v0/(R lg(r0/R + 1)).
///
/// Strictly decreasing in R, approaching v0 ln2 / r0 from above.
pub fn comp5_marks_per_sec(total_rtt: f64, v0: f64, r0: f64) -> Result<f64, Error> {
    let per_rtt = comp5_marks_per_rtt(total_rtt, v0, r0)?;
    Ok(per_rtt / total_rtt)
}

/// Compromise rate law r = u * f(R).
pub fn rate_comp5(sig: SignalLevel, total_rtt: f64, v0: f64, r0: f64) -> Result<f64, Error> {
    if sig.is_unmarked() {
        return Err(Error::UnboundedRate("rate_comp5"));
    }
    Ok(sig.u() * comp5_marks_per_sec(total_rtt, v0, r0)?)
}

/// Classic (Reno-style) law W = sqrt(1.5/p), evaluated at the coupled signal.
pub fn rate_classic(sig_classic: SignalLevel, total_rtt: f64) -> Result<f64, Error> {
    positive(total_rtt, "total_rtt must be finite and > 0")?;
    if sig_classic.is_unmarked() {
        return Err(Error::UnboundedRate("rate_classic"));
    }
    Ok(math::sqrt(1.5 / sig_classic.p()) / total_rtt)
}
