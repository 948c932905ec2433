//! Flow descriptions and per-flow steady-state records.

use alloc::string::String;

use crate::error::Error;

/// Congestion-control law a flow runs, with its per-law constants.
#[derive(Debug, Clone, PartialEq)]
pub enum ControlLaw {
    /// Window law W = v0/p: rate scales as 1/(R p).
    DctcpLike { v0: f64 },
    /// RTT-independent rate law r = c0 u^2 (c0 in marks/s).
    Compromise4 { c0: f64 },
    /// Marks per RTT pinned to v0/lg(r0/R + 1): rate r = u * v0/(R lg(r0/R + 1)).
    Compromise5 { v0: f64, r0: f64 },
    /// Reno-style window W = sqrt(1.5/p), driven by the coupled Classic signal.
    ClassicTcp,
}

impl ControlLaw {
    pub fn validate(&self) -> Result<(), Error> {
        let ok = |x: f64| x.is_finite() && x > 0.0;
        match *self {
            ControlLaw::DctcpLike { v0 } if !ok(v0) => {
                Err(Error::Domain("v0 must be finite and > 0"))
            }
            ControlLaw::Compromise4 { c0 } if !ok(c0) => {
                Err(Error::Domain("c0 must be finite and > 0"))
            }
            ControlLaw::Compromise5 { v0, r0 } if !ok(v0) || !ok(r0) => {
                Err(Error::Domain("v0 and r0 must be finite and > 0"))
            }
            _ => Ok(()),
        }
    }

    /// Scalable laws keep marks per RTT from falling as rate grows; Classic
    /// TCP does not.
    pub fn is_scalable(&self) -> bool {
        !matches!(self, ControlLaw::ClassicTcp)
    }
}

/// One flow in a scenario.
#[derive(Debug, Clone, PartialEq)]
pub struct FlowSpec {
    pub id: String,
    /// Base (queue-free) round-trip time, seconds.
    pub base_rtt: f64,
    /// Segment size, bits.
    pub segment_size: f64,
    pub law: ControlLaw,
}

impl FlowSpec {
    pub fn validate(&self) -> Result<(), Error> {
        if !(self.base_rtt.is_finite() && self.base_rtt > 0.0) {
            return Err(Error::InvalidScenario("base_rtt must be finite and > 0"));
        }
        if !(self.segment_size.is_finite() && self.segment_size > 0.0) {
            return Err(Error::InvalidScenario("segment_size must be finite and > 0"));
        }
        self.law.validate().map_err(|_| Error::InvalidScenario("law constant out of range"))
    }
}

/// Steady-state operating point of one flow.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FlowState {
    /// Packets per second.
    pub rate_pkts: f64,
    /// Bits per second; always rate_pkts * segment_size.
    pub rate_bits: f64,
    /// Segments in flight; always rate_pkts * total_rtt.
    pub window: f64,
    /// Base RTT plus queue delay, seconds.
    pub total_rtt: f64,
    /// Congestion marks seen per round trip, p * window.
    pub marks_per_rtt: f64,
}

impl FlowState {
    /// Derive the dependent fields from a packet rate, keeping the window and
    /// bit-rate identities exact by construction.
    pub fn from_rate(rate_pkts: f64, total_rtt: f64, segment_size: f64, p: f64) -> Self {
        let window = rate_pkts * total_rtt;
        FlowState {
            rate_pkts,
            rate_bits: rate_pkts * segment_size,
            window,
            total_rtt,
            marks_per_rtt: p * window,
        }
    }

    /// Marking probability the flow saw; 0 for an empty window.
    pub fn p_seen(&self) -> f64 {
        if self.window > 0.0 {
            self.marks_per_rtt / self.window
        } else {
            0.0
        }
    }
}

/// Window that carries `rate_bits` over `rtt` in `segment_size`-bit segments.
pub fn window_for(rate_bits: f64, rtt: f64, segment_size: f64) -> Result<f64, Error> {
    if !(rate_bits.is_finite() && rate_bits > 0.0) {
        return Err(Error::Domain("bit-rate must be finite and > 0"));
    }
    if !(rtt.is_finite() && rtt > 0.0) {
        return Err(Error::Domain("rtt must be finite and > 0"));
    }
    if !(segment_size.is_finite() && segment_size > 0.0) {
        return Err(Error::Domain("segment size must be finite and > 0"));
    }
    Ok(rate_bits * rtt / segment_size)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn window_of_one_segment() {
        // 2 Mb/s over 6 ms in 12 kb segments needs exactly one segment in flight.
        let w = window_for(2e6, 6e-3, 12_000.0).unwrap();
        assert!((w - 1.0).abs() < 1e-12);
    }

    #[test]
    fn window_rejects_bad_args() {
        assert!(window_for(0.0, 6e-3, 12_000.0).is_err());
        assert!(window_for(2e6, -1.0, 12_000.0).is_err());
        assert!(window_for(2e6, 6e-3, f64::NAN).is_err());
    }

    #[test]
    fn state_identities_hold() {
        let st = FlowState::from_rate(100_000.0, 1e-3, 12_000.0, 0.02);
        assert_eq!(st.window, st.rate_pkts * st.total_rtt);
        assert_eq!(st.rate_bits, st.rate_pkts * 12_000.0);
        assert!((st.marks_per_rtt - 2.0).abs() < 1e-12);
    }

    #[test]
    fn law_validation() {
        assert!(ControlLaw::DctcpLike { v0: 2.0 }.validate().is_ok());
        assert!(ControlLaw::DctcpLike { v0: 0.0 }.validate().is_err());
        assert!(ControlLaw::Compromise4 { c0: -1.0 }.validate().is_err());
        assert!(ControlLaw::Compromise5 { v0: 2.0, r0: 0.0 }.validate().is_err());
        assert!(ControlLaw::ClassicTcp.validate().is_ok());
        assert!(ControlLaw::ClassicTcp.is_scalable() == false);
        assert!(ControlLaw::Compromise5 { v0: 2.0, r0: 5e-4 }.is_scalable());
    }

    #[test]
    fn flow_validation() {
        let mut f = FlowSpec {
            id: "a".to_string(),
            base_rtt: 1e-3,
            segment_size: 12_000.0,
            law: ControlLaw::DctcpLike { v0: 2.0 },
        };
        assert!(f.validate().is_ok());
        f.base_rtt = 0.0;
        assert!(f.validate().is_err());
    }
}
