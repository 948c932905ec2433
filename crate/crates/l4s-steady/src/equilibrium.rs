//! Fixed-point solvers: the marking level at which competing flows exactly
//! fill a bottleneck.
//!
//! Single-queue scenarios are solved by bisection on the unmarked run length
//! `u`, not on `p`: every scalable law's demand is strictly increasing and
//! unbounded in `u`, so the search is never pinned against the `p = 1` wall.
//! Demand that exceeds capacity even at `p = 1` is reported as a saturated
//! equilibrium, not an error; that is the regime where the queue grows.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::Error;
use crate::flow::{ControlLaw, FlowSpec, FlowState};
use crate::laws;
use crate::math;
use crate::signal::{Coupling, SignalLevel};

/// Queue delay an L4S AQM aims for, seconds.
pub const DEFAULT_L4S_QUEUE_DELAY: f64 = 500e-6;
/// Queue delay a Classic AQM aims for, seconds.
pub const DEFAULT_CLASSIC_QUEUE_DELAY: f64 = 15e-3;

/// A bottleneck shared by a set of flows.
#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    /// Link capacity, bits/s.
    pub capacity: f64,
    pub flows: Vec<FlowSpec>,
    /// Steady queue delay seen by scalable flows, seconds.
    pub queue_delay: f64,
    /// Steady queue delay seen by Classic flows (the other DualQ queue), seconds.
    pub classic_queue_delay: f64,
    pub coupling: Coupling,
}

impl Scenario {
    /// Scenario with default queue targets and coupling.
    pub fn new(capacity: f64, flows: Vec<FlowSpec>) -> Self {
        Scenario {
            capacity,
            flows,
            queue_delay: DEFAULT_L4S_QUEUE_DELAY,
            classic_queue_delay: DEFAULT_CLASSIC_QUEUE_DELAY,
            coupling: Coupling::default(),
        }
    }

    /// Field-level checks; flow count is left to the caller.
    pub fn validate_fields(&self) -> Result<(), Error> {
        if !(self.capacity.is_finite() && self.capacity > 0.0) {
            return Err(Error::InvalidScenario("capacity must be finite and > 0"));
        }
        if !(self.queue_delay.is_finite() && self.queue_delay >= 0.0) {
            return Err(Error::InvalidScenario("queue_delay must be finite and >= 0"));
        }
        if !(self.classic_queue_delay.is_finite() && self.classic_queue_delay >= 0.0) {
            return Err(Error::InvalidScenario("classic_queue_delay must be finite and >= 0"));
        }
        Coupling::new(self.coupling.k, self.coupling.exponent)?;
        for f in &self.flows {
            f.validate()?;
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<(), Error> {
        self.validate_fields()?;
        if self.flows.is_empty() {
            return Err(Error::InvalidScenario("scenario needs at least one flow"));
        }
        Ok(())
    }

    pub fn has_classic(&self) -> bool {
        self.flows.iter().any(|f| !f.law.is_scalable())
    }

    /// Total RTT of one flow at this scenario's queue delays.
    pub fn total_rtt(&self, flow: &FlowSpec) -> f64 {
        if flow.law.is_scalable() {
            flow.base_rtt + self.queue_delay
        } else {
            flow.base_rtt + self.classic_queue_delay
        }
    }
}

/// Bisection control; tolerance is relative on the capacity residual.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverConfig {
    pub tol: f64,
    pub max_iter: u32,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig { tol: 1e-6, max_iter: 200 }
    }
}

/// One flow's solved operating point.
#[derive(Debug, Clone, PartialEq)]
pub struct SolvedFlow {
    pub id: String,
    /// True for ClassicTcp flows, which sit in the Classic queue.
    pub classic: bool,
    pub state: FlowState,
    /// True when fitting capacity would need p > 1: the law has a positive
    /// rate floor at full marking and total demand still exceeds capacity.
    pub saturated: bool,
}

/// Solved operating point of a whole scenario.
#[derive(Debug, Clone, PartialEq)]
pub struct Equilibrium {
    /// L4S marking level.
    pub signal: SignalLevel,
    /// Coupled Classic level; present only for DualQ solutions.
    pub signal_classic: Option<SignalLevel>,
    pub per_flow: Vec<SolvedFlow>,
    /// Total demand over capacity; within tol of 1 unless saturated.
    pub utilization: f64,
}

impl Equilibrium {
    pub fn is_saturated(&self) -> bool {
        self.per_flow.iter().any(|f| f.saturated)
    }
}

/// Rate of one flow at the given signal levels, packets/s.
fn flow_rate(
    flow: &FlowSpec,
    sig: SignalLevel,
    sig_classic: Option<SignalLevel>,
    total_rtt: f64,
) -> Result<f64, Error> {
    match flow.law {
        ControlLaw::DctcpLike { v0 } => laws::rate_dctcp(sig, total_rtt, v0),
        ControlLaw::Compromise4 { c0 } => laws::rate_comp4(sig, c0),
        ControlLaw::Compromise5 { v0, r0 } => laws::rate_comp5(sig, total_rtt, v0, r0),
        ControlLaw::ClassicTcp => {
            let sc = sig_classic.ok_or(Error::WrongSolver(
                "Classic flow evaluated without a coupled signal",
            ))?;
            laws::rate_classic(sc, total_rtt)
        }
    }
}

/// True when the law still sends at full marking, so it alone cannot shed
/// demand below its floor.
fn has_rate_floor(law: &ControlLaw) -> bool {
    matches!(law, ControlLaw::DctcpLike { .. } | ControlLaw::ClassicTcp)
}

/// Total demand in bits/s at an L4S signal level.
fn total_demand(scn: &Scenario, sig: SignalLevel, sig_classic: Option<SignalLevel>) -> Result<f64, Error> {
    let mut sum = 0.0;
    for f in &scn.flows {
        sum += flow_rate(f, sig, sig_classic, scn.total_rtt(f))? * f.segment_size;
    }
    Ok(sum)
}

fn build_equilibrium(
    scn: &Scenario,
    sig: SignalLevel,
    sig_classic: Option<SignalLevel>,
    demand: f64,
    saturated: bool,
) -> Result<Equilibrium, Error> {
    let mut per_flow = Vec::with_capacity(scn.flows.len());
    for f in &scn.flows {
        let rtt = scn.total_rtt(f);
        let rate = flow_rate(f, sig, sig_classic, rtt)?;
        let p_seen = if f.law.is_scalable() {
            sig.p()
        } else {
            sig_classic.map(|s| s.p()).unwrap_or(0.0)
        };
        per_flow.push(SolvedFlow {
            id: f.id.clone(),
            classic: !f.law.is_scalable(),
            state: FlowState::from_rate(rate, rtt, f.segment_size, p_seen),
            saturated: saturated && has_rate_floor(&f.law),
        });
    }
    Ok(Equilibrium {
        signal: sig,
        signal_classic: sig_classic,
        per_flow,
        utilization: demand / scn.capacity,
    })
}

/// Solve a scenario whose flows are all scalable and share one queue.
pub fn solve_single_queue(scn: &Scenario, cfg: SolverConfig) -> Result<Equilibrium, Error> {
    scn.validate()?;
    if scn.has_classic() {
        return Err(Error::WrongSolver("scenario has Classic flows; use solve_dualq"));
    }

    let demand_at = |u: f64| -> Result<f64, Error> {
        total_demand(scn, SignalLevel::from_u(u)?, None)
    };

    let x = scn.capacity;
    let d0 = demand_at(0.0)?;
    if d0 > x * (1.0 + cfg.tol) {
        // Even full marking leaves floored laws over capacity.
        let sig = SignalLevel::from_u(0.0)?;
        return build_equilibrium(scn, sig, None, d0, true);
    }
    if (d0 - x).abs() <= x * cfg.tol {
        let sig = SignalLevel::from_u(0.0)?;
        return build_equilibrium(scn, sig, None, d0, false);
    }

    // Geometric bracket expansion; demand must rise strictly along the sweep.
    let mut u_lo = 0.0;
    let mut d_lo = d0;
    let mut u_hi = 1.0;
    let mut d_hi = demand_at(u_hi)?;
    let mut expansions = 0;
    loop {
        if d_hi <= d_lo {
            return Err(Error::NonMonotoneDemand { u_lo, u_hi });
        }
        if d_hi >= x {
            break;
        }
        expansions += 1;
        if expansions > cfg.max_iter {
            return Err(Error::NoBracket { demand_at_hi: d_hi, capacity: x });
        }
        u_lo = u_hi;
        d_lo = d_hi;
        u_hi *= 2.0;
        d_hi = demand_at(u_hi)?;
    }

    let mut last_residual = f64::INFINITY;
    for _ in 0..cfg.max_iter {
        let mid = 0.5 * (u_lo + u_hi);
        let d = demand_at(mid)?;
        last_residual = (d - x).abs() / x;
        if last_residual <= cfg.tol {
            let sig = SignalLevel::from_u(mid)?;
            return build_equilibrium(scn, sig, None, d, false);
        }
        if d < x {
            u_lo = mid;
        } else {
            u_hi = mid;
        }
    }
    Err(Error::NoConvergence { residual: last_residual, tol: cfg.tol })
}

/// Solve a DualQ scenario: scalable flows on the L4S queue, Classic flows on
/// their own queue driven by the coupled signal.
pub fn solve_dualq(scn: &Scenario, cfg: SolverConfig) -> Result<Equilibrium, Error> {
    scn.validate()?;
    if !scn.has_classic() {
        // Degenerate partition: identical to the single-queue solution.
        return solve_single_queue(scn, cfg);
    }

    let eval = |p: f64| -> Result<(SignalLevel, SignalLevel, f64), Error> {
        let sig = SignalLevel::from_p(p)?;
        let sig_c = scn.coupling.classic_signal(sig)?;
        let d = total_demand(scn, sig, Some(sig_c))?;
        Ok((sig, sig_c, d))
    };

    let x = scn.capacity;
    let (sig1, sig_c1, d1) = eval(1.0)?;
    if d1 > x * (1.0 + cfg.tol) {
        return build_equilibrium(scn, sig1, Some(sig_c1), d1, true);
    }
    if (d1 - x).abs() <= x * cfg.tol {
        return build_equilibrium(scn, sig1, Some(sig_c1), d1, false);
    }

    // Demand falls as p rises; expand the bracket downward until it encloses
    // capacity.
    let mut p_hi = 1.0;
    let mut d_hi = d1;
    let mut p_lo = 0.5;
    let mut d_lo = eval(p_lo)?.2;
    let mut expansions = 0;
    loop {
        if d_lo <= d_hi {
            return Err(Error::NonMonotoneDemand {
                u_lo: 1.0 / p_hi - 1.0,
                u_hi: 1.0 / p_lo - 1.0,
            });
        }
        if d_lo >= x {
            break;
        }
        expansions += 1;
        if expansions > cfg.max_iter {
            return Err(Error::NoBracket { demand_at_hi: d_lo, capacity: x });
        }
        p_hi = p_lo;
        d_hi = d_lo;
        p_lo *= 0.5;
        d_lo = eval(p_lo)?.2;
    }

    let mut last_residual = f64::INFINITY;
    for _ in 0..cfg.max_iter {
        let mid = 0.5 * (p_lo + p_hi);
        let (sig, sig_c, d) = eval(mid)?;
        last_residual = (d - x).abs() / x;
        if last_residual <= cfg.tol {
            return build_equilibrium(scn, sig, Some(sig_c), d, false);
        }
        if d >= x {
            p_lo = mid;
        } else {
            p_hi = mid;
        }
    }
    Err(Error::NoConvergence { residual: last_residual, tol: cfg.tol })
}

/// Base RTT below which a window-law flow saturates its signal: v0 * s / x.
pub fn saturation_rtt_bound(v0: f64, segment_size: f64, rate_bits: f64) -> Result<f64, Error> {
    for (x, what) in [
        (v0, "v0 must be finite and > 0"),
        (segment_size, "segment size must be finite and > 0"),
        (rate_bits, "bit-rate must be finite and > 0"),
    ] {
        if !(x.is_finite() && x > 0.0) {
            return Err(Error::Domain(what));
        }
    }
    Ok(v0 * segment_size / rate_bits)
}

/// Saturation membership over a log-spaced rate x RTT grid.
///
/// A cell is saturated iff rtt < v0 * s / x strictly; a cell exactly on the
/// boundary is not saturated.
#[derive(Debug, Clone, PartialEq)]
pub struct SaturationGrid {
    pub v0: f64,
    pub segment_size: f64,
    /// Ascending, bits/s.
    pub rates: Vec<f64>,
    /// Ascending, seconds.
    pub rtts: Vec<f64>,
    /// Row-major over (rtt, rate).
    pub saturated: Vec<bool>,
}

impl SaturationGrid {
    pub fn at(&self, rtt_idx: usize, rate_idx: usize) -> bool {
        self.saturated[rtt_idx * self.rates.len() + rate_idx]
    }
}

fn log_axis(range: (f64, f64), points: usize) -> Result<Vec<f64>, Error> {
    let (lo, hi) = range;
    if !(lo.is_finite() && hi.is_finite() && lo > 0.0 && lo < hi) {
        return Err(Error::Domain("axis range must satisfy 0 < lo < hi"));
    }
    if points < 2 {
        return Err(Error::Domain("axis needs at least 2 points"));
    }
    let ratio = hi / lo;
    let n = points - 1;
    let mut axis = Vec::with_capacity(points);
    axis.push(lo);
    for i in 1..n {
        axis.push(lo * math::powf(ratio, i as f64 / n as f64));
    }
    axis.push(hi);
    Ok(axis)
}

pub fn saturation_region_grid(
    v0: f64,
    segment_size: f64,
    rate_range: (f64, f64),
    rtt_range: (f64, f64),
    points: usize,
) -> Result<SaturationGrid, Error> {
    let rates = log_axis(rate_range, points)?;
    let rtts = log_axis(rtt_range, points)?;
    saturation_grid_on_axes(v0, segment_size, rates, rtts)
}

/// Same membership rule on caller-chosen axes; both must ascend.
pub fn saturation_grid_on_axes(
    v0: f64,
    segment_size: f64,
    rates: Vec<f64>,
    rtts: Vec<f64>,
) -> Result<SaturationGrid, Error> {
    if !(v0.is_finite() && v0 > 0.0) {
        return Err(Error::Domain("v0 must be finite and > 0"));
    }
    if !(segment_size.is_finite() && segment_size > 0.0) {
        return Err(Error::Domain("segment size must be finite and > 0"));
    }
    if rates.is_empty() || rtts.is_empty() {
        return Err(Error::Domain("grid axes must be non-empty"));
    }
    let ok = |axis: &[f64]| {
        axis[0] > 0.0
            && axis.iter().all(|x| x.is_finite())
            && axis.windows(2).all(|w| w[0] < w[1])
    };
    if !ok(&rates) || !ok(&rtts) {
        return Err(Error::Domain("grid axes must be positive and ascend strictly"));
    }
    let mut saturated = Vec::with_capacity(rates.len() * rtts.len());
    for &rtt in &rtts {
        for &rate in &rates {
            saturated.push(rtt < saturation_rtt_bound(v0, segment_size, rate)?);
        }
    }
    Ok(SaturationGrid { v0, segment_size, rates, rtts, saturated })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laws::{comp5_marks_per_rtt, comp5_marks_per_sec};
    use alloc::format;
    use alloc::string::ToString;
    use alloc::vec;

    fn comp5_flow(id: &str, base_rtt: f64) -> FlowSpec {
        FlowSpec {
            id: id.to_string(),
            base_rtt,
            segment_size: 12_000.0,
            law: ControlLaw::Compromise5 { v0: 2.0, r0: 500e-6 },
        }
    }

    fn dctcp_flow(id: &str, base_rtt: f64) -> FlowSpec {
        FlowSpec {
            id: id.to_string(),
            base_rtt,
            segment_size: 12_000.0,
            law: ControlLaw::DctcpLike { v0: 2.0 },
        }
    }

    fn classic_flow(id: &str, base_rtt: f64) -> FlowSpec {
        FlowSpec {
            id: id.to_string(),
            base_rtt,
            segment_size: 12_000.0,
            law: ControlLaw::ClassicTcp,
        }
    }

    #[test]
    fn comp5_pair_matches_closed_form() {
        let scn = Scenario::new(1e9, vec![comp5_flow("fast", 10e-6), comp5_flow("slow", 100e-3)]);
        let eq = solve_single_queue(&scn, SolverConfig::default()).unwrap();

        // Closed form: u* = X / sum(f(R_i) s_i).
        let fsum: f64 = scn
            .flows
            .iter()
            .map(|f| comp5_marks_per_sec(scn.total_rtt(f), 2.0, 500e-6).unwrap() * f.segment_size)
            .sum();
        let u_star = 1e9 / fsum;
        assert!((eq.signal.u() - u_star).abs() / u_star < 2e-6, "u = {}, oracle {}", eq.signal.u(), u_star);

        // Virtual marks per RTT sit on the pinned curve.
        for (sf, f) in eq.per_flow.iter().zip(&scn.flows) {
            let pinned = comp5_marks_per_rtt(scn.total_rtt(f), 2.0, 500e-6).unwrap();
            let virtual_per_rtt = sf.state.window / eq.signal.u();
            assert!((virtual_per_rtt - pinned).abs() / pinned < 1e-9);
        }

        // Rate imbalance equals the ratio of mark-rate curves.
        let r_ratio = eq.per_flow[0].state.rate_pkts / eq.per_flow[1].state.rate_pkts;
        let f_ratio = comp5_marks_per_sec(scn.total_rtt(&scn.flows[0]), 2.0, 500e-6).unwrap()
            / comp5_marks_per_sec(scn.total_rtt(&scn.flows[1]), 2.0, 500e-6).unwrap();
        assert!((r_ratio - f_ratio).abs() / f_ratio < 1e-6);

        assert!((eq.utilization - 1.0).abs() <= 1e-6);
        assert!(!eq.is_saturated());
    }

    #[test]
    fn single_queue_rejects_classic() {
        let scn = Scenario::new(1e9, vec![comp5_flow("a", 1e-3), classic_flow("c", 1e-3)]);
        assert!(matches!(
            solve_single_queue(&scn, SolverConfig::default()),
            Err(Error::WrongSolver(_))
        ));
    }

    #[test]
    fn dctcp_floor_saturates_small_link() {
        // Floor demand v0 s / R = 24 Mb/s against a 2 Mb/s link.
        let mut scn = Scenario::new(2e6, vec![dctcp_flow("d", 1e-3)]);
        scn.queue_delay = 0.0;
        let eq = solve_single_queue(&scn, SolverConfig::default()).unwrap();
        assert!(eq.is_saturated());
        assert_eq!(eq.signal.p(), 1.0);
        assert!((eq.utilization - 12.0).abs() < 1e-9);
        assert!(eq.per_flow[0].saturated);
    }

    #[test]
    fn mixed_scalable_feasible_is_unsaturated() {
        let scn = Scenario::new(1e9, vec![dctcp_flow("d", 10e-3), comp5_flow("c", 10e-3)]);
        let eq = solve_single_queue(&scn, SolverConfig::default()).unwrap();
        assert!(!eq.is_saturated());
        assert!((eq.utilization - 1.0).abs() <= 1e-6);
        // Window identity holds per flow.
        for sf in &eq.per_flow {
            assert_eq!(sf.state.window, sf.state.rate_pkts * sf.state.total_rtt);
        }
    }

    #[test]
    fn flow_order_is_irrelevant() {
        let a = comp5_flow("a", 10e-6);
        let b = dctcp_flow("b", 3e-3);
        let c = comp5_flow("c", 80e-3);
        let eq1 = solve_single_queue(
            &Scenario::new(4e8, vec![a.clone(), b.clone(), c.clone()]),
            SolverConfig::default(),
        )
        .unwrap();
        let eq2 = solve_single_queue(
            &Scenario::new(4e8, vec![c, a, b]),
            SolverConfig::default(),
        )
        .unwrap();
        assert_eq!(eq1.signal, eq2.signal);
        for sf in &eq1.per_flow {
            let other = eq2.per_flow.iter().find(|o| o.id == sf.id).unwrap();
            assert_eq!(sf.state, other.state);
        }
    }

    #[test]
    fn scale_invariance_of_signal() {
        // Scaling capacity and all segment sizes together leaves u* unchanged.
        let base = Scenario::new(2e8, vec![comp5_flow("a", 1e-3), dctcp_flow("b", 20e-3)]);
        let eq0 = solve_single_queue(&base, SolverConfig::default()).unwrap();
        for alpha in [2.0, 10.0, 1000.0] {
            let mut scaled = base.clone();
            scaled.capacity *= alpha;
            for f in &mut scaled.flows {
                f.segment_size *= alpha;
            }
            let eq = solve_single_queue(&scaled, SolverConfig::default()).unwrap();
            let rel = (eq.signal.u() - eq0.signal.u()).abs() / eq0.signal.u();
            assert!(rel < 1e-5, "u drifted by {rel} at alpha = {alpha}");
        }
    }

    #[test]
    fn dualq_without_classic_delegates() {
        let scn = Scenario::new(1e9, vec![comp5_flow("a", 1e-3)]);
        let single = solve_single_queue(&scn, SolverConfig::default()).unwrap();
        let dual = solve_dualq(&scn, SolverConfig::default()).unwrap();
        assert_eq!(single, dual);
        assert!(dual.signal_classic.is_none());
    }

    #[test]
    fn dualq_dctcp_vs_classic_window_ratio() {
        // Equal total RTTs: zero both queue delays, same base RTT.
        let mut scn = Scenario::new(1e9, vec![dctcp_flow("d", 10e-3), classic_flow("c", 10e-3)]);
        scn.queue_delay = 0.0;
        scn.classic_queue_delay = 0.0;
        let eq = solve_dualq(&scn, SolverConfig::default()).unwrap();

        let expect = 2.0 / 2.0 * math::sqrt(2.0 / 3.0);
        let got = eq.per_flow[0].state.window / eq.per_flow[1].state.window;
        assert!((got - expect).abs() / expect < 1e-5, "window ratio {got}, want {expect}");

        // Stored Classic signal must be exactly the coupled transform.
        let recomputed = scn.coupling.classic_signal(eq.signal).unwrap();
        assert_eq!(eq.signal_classic.unwrap(), recomputed);
    }

    #[test]
    fn dualq_saturation_reported() {
        // Classic + DCTCP floors exceed a tiny link even at p = 1.
        let mut scn = Scenario::new(1e5, vec![dctcp_flow("d", 1e-3), classic_flow("c", 1e-3)]);
        scn.queue_delay = 0.0;
        scn.classic_queue_delay = 0.0;
        let eq = solve_dualq(&scn, SolverConfig::default()).unwrap();
        assert!(eq.is_saturated());
        assert!(eq.per_flow.iter().all(|f| f.saturated), "both floored laws flagged");
        assert!(eq.utilization > 1.0);
    }

    #[test]
    fn empty_scenario_rejected() {
        let scn = Scenario::new(1e9, vec![]);
        assert!(matches!(
            solve_single_queue(&scn, SolverConfig::default()),
            Err(Error::InvalidScenario(_))
        ));
    }

    #[test]
    fn rtt_bound_example() {
        let b = saturation_rtt_bound(2.0, 12_000.0, 2e6).unwrap();
        assert!((b - 12e-3).abs() < 1e-15);
        assert!(saturation_rtt_bound(0.0, 12_000.0, 2e6).is_err());
    }

    #[test]
    fn grid_boundary_cell_not_saturated() {
        // Axes chosen so (2 Mb/s, 6 ms) and the exact bound 12 ms are cells.
        let g = saturation_region_grid(2.0, 12_000.0, (1e6, 4e6), (3e-3, 12e-3), 3).unwrap();
        assert_eq!(g.rates[1], 2e6);
        assert_eq!(g.rtts[1], 6e-3);
        assert!(g.at(1, 1), "6 ms at 2 Mb/s sits below the 12 ms bound: saturated");
        assert!(!g.at(2, 1), "cell exactly on the bound is not saturated");
        assert!(g.at(0, 2), "3 ms at 4 Mb/s is saturated (bound 6 ms)");
        // Every cell agrees with the recomputed bound.
        for (i, &rtt) in g.rtts.iter().enumerate() {
            for (j, &rate) in g.rates.iter().enumerate() {
                let bound = saturation_rtt_bound(2.0, 12_000.0, rate).unwrap();
                assert_eq!(g.at(i, j), rtt < bound, "cell ({i},{j})");
            }
        }
    }

    #[test]
    fn grid_rejects_bad_ranges() {
        assert!(saturation_region_grid(2.0, 12_000.0, (4e6, 1e6), (1e-3, 1e-2), 3).is_err());
        assert!(saturation_region_grid(2.0, 12_000.0, (1e6, 4e6), (1e-2, 1e-2), 3).is_err());
        assert!(saturation_region_grid(2.0, 12_000.0, (1e6, 4e6), (1e-3, 1e-2), 1).is_err());
        assert!(saturation_region_grid(2.0, 12_000.0, (0.0, 4e6), (1e-3, 1e-2), 3).is_err());
    }

    #[test]
    fn utilization_within_tol_for_feasible_solutions() {
        for cap in [1e7, 1e8, 1e9, 1e10] {
            let scn = Scenario::new(cap, vec![comp5_flow("a", 2e-3), comp5_flow("b", 40e-3)]);
            let eq = solve_single_queue(&scn, SolverConfig::default()).unwrap();
            assert!(
                (eq.utilization - 1.0).abs() <= 1e-6,
                "utilization {} at capacity {cap}",
                eq.utilization
            );
            let _ = format!("{:?}", eq); // Equilibrium stays debuggable
        }
    }
}
