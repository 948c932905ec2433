//! Fluid relaxation of a bottleneck queue under an idealized AQM.
//!
//! This is a verification device for the equilibrium solvers, not a model of
//! the controllers' transient behaviour: explicit Euler on the queue delay,
//! with flows re-evaluating their steady-state laws every step. The update is
//! under-relaxed when it starts oscillating so that stiff AQM gains still
//! settle; damping never moves the fixed point.

use alloc::string::String;
use alloc::vec::Vec;

use crate::equilibrium::{
    solve_dualq, solve_single_queue, Equilibrium, Scenario, SolvedFlow, SolverConfig,
};
use crate::error::Error;
use crate::flow::{ControlLaw, FlowState};
use crate::laws;
use crate::signal::SignalLevel;

/// Queue delay beyond which a run is declared divergent, seconds.
pub const DIVERGENCE_QUEUE_DELAY: f64 = 10.0;
/// Successive-change threshold on the queue delay, seconds.
pub const STEADY_QUEUE_DELTA: f64 = 1e-9;
/// Relative demand residual required alongside the queue-delta criterion.
const STEADY_RESIDUAL: f64 = 1e-6;
/// Relative rate agreement that counts as matching the solver.
const SOLVER_MATCH_TOL: f64 = 0.01;
/// Under-relaxation bounds for the oscillation damper.
const ETA_FLOOR: f64 = 1e-12;
const ETA_GROWTH: f64 = 1.05;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AqmMode {
    /// p = clamp(gain * (q - target), 0, 1).
    Proportional,
    /// p = 1 above target, 0 below.
    Step,
}

/// Idealized AQM: a memoryless map from queue delay to marking probability.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AqmConfig {
    /// Queue delay the AQM aims for, seconds.
    pub target_delay: f64,
    /// Marking probability per second of queue excess.
    pub gain: f64,
    pub mode: AqmMode,
}

impl AqmConfig {
    /// Proportional AQM whose p-offset at full marking stays far below the
    /// target itself.
    pub fn for_target(target_delay: f64) -> Self {
        AqmConfig {
            target_delay,
            gain: 4e3 / target_delay.max(1e-6),
            mode: AqmMode::Proportional,
        }
    }

    pub fn p_of(&self, q: f64) -> f64 {
        match self.mode {
            AqmMode::Proportional => ((q - self.target_delay) * self.gain).clamp(0.0, 1.0),
            AqmMode::Step => {
                if q > self.target_delay {
                    1.0
                } else {
                    0.0
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SimConfig {
    pub scenario: Scenario,
    pub aqm: AqmConfig,
    /// Euler step, seconds; None picks min base RTT / 10.
    pub step: Option<f64>,
    /// Simulated time budget, seconds.
    pub horizon: f64,
    pub initial_queue: f64,
    /// When false, every law runs on raw p (capped at 1) instead of the
    /// virtual-mark signal 1/u, restoring the rate floors that make
    /// signalling saturate.
    pub virtual_marks: bool,
    /// Trajectory is thinned to at most this many samples.
    pub max_samples: usize,
}

impl SimConfig {
    pub fn new(scenario: Scenario) -> Self {
        let aqm = AqmConfig::for_target(scenario.queue_delay);
        SimConfig {
            scenario,
            aqm,
            step: None,
            horizon: 5.0,
            initial_queue: 0.0,
            virtual_marks: true,
            max_samples: 1000,
        }
    }

    fn default_step(&self) -> f64 {
        let min_rtt = self
            .scenario
            .flows
            .iter()
            .map(|f| f.base_rtt)
            .fold(f64::INFINITY, f64::min);
        if min_rtt.is_finite() {
            min_rtt / 10.0
        } else {
            1e-3
        }
    }

    fn validate(&self) -> Result<f64, Error> {
        self.scenario.validate_fields()?;
        let dt = self.step.unwrap_or_else(|| self.default_step());
        if !(dt.is_finite() && dt > 0.0) {
            return Err(Error::Domain("sim step must be finite and > 0"));
        }
        if !(self.horizon.is_finite() && self.horizon >= dt) {
            return Err(Error::Domain("horizon must be finite and >= one step"));
        }
        if !(self.initial_queue.is_finite() && self.initial_queue >= 0.0) {
            return Err(Error::Domain("initial queue must be finite and >= 0"));
        }
        if !(self.aqm.target_delay.is_finite() && self.aqm.target_delay >= 0.0) {
            return Err(Error::Domain("AQM target must be finite and >= 0"));
        }
        if !(self.aqm.gain.is_finite() && self.aqm.gain >= 0.0) {
            return Err(Error::Domain("AQM gain must be finite and >= 0"));
        }
        if self.max_samples < 2 {
            return Err(Error::Domain("max_samples must be at least 2"));
        }
        Ok(dt)
    }
}

/// One recorded instant. Per-flow vectors follow scenario flow order.
#[derive(Debug, Clone, PartialEq)]
pub struct Sample {
    pub t: f64,
    pub queue_delay: f64,
    pub p: f64,
    pub rate_bits: Vec<f64>,
    pub window: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Verdict {
    /// Queue change fell below the steady threshold before the horizon.
    pub reached_steady: bool,
    /// Queue delay exceeded the divergence bound; data, not an error.
    pub diverged: bool,
    /// Worst per-flow relative rate deviation from the equilibrium solver;
    /// None when the solver has no comparable answer (saturated or
    /// inapplicable).
    pub solver_match_rel: Option<f64>,
    /// Steady, not divergent, and matching the solver where comparable.
    pub converged: bool,
    pub final_state: Equilibrium,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub flow_ids: Vec<String>,
    /// Euler step actually used, seconds.
    pub step: f64,
    pub samples: Vec<Sample>,
    pub verdict: Verdict,
}

/// Signal variable a law divides by: the virtual mark rate 1/u, or raw p when
/// virtual marks are off.
fn sigma(sig: SignalLevel, virtual_marks: bool) -> f64 {
    if virtual_marks {
        sig.virtual_mark_rate()
    } else {
        sig.p()
    }
}

/// Law rate in the simulator's signal convention, packets/s. `sig` must not
/// be the unmarked sentinel.
fn sim_rate(
    law: &ControlLaw,
    sig: SignalLevel,
    sig_classic: Option<SignalLevel>,
    total_rtt: f64,
    virtual_marks: bool,
) -> Result<f64, Error> {
    let s = sigma(sig, virtual_marks);
    match *law {
        ControlLaw::DctcpLike { v0 } => Ok(v0 / (total_rtt * s)),
        ControlLaw::Compromise4 { c0 } => Ok(c0 / (s * s)),
        ControlLaw::Compromise5 { v0, r0 } => {
            Ok(laws::comp5_marks_per_sec(total_rtt, v0, r0)? / s)
        }
        ControlLaw::ClassicTcp => {
            let sc = sig_classic.ok_or(Error::WrongSolver(
                "Classic flow evaluated without a coupled signal",
            ))?;
            laws::rate_classic(sc, total_rtt)
        }
    }
}

struct StepEval {
    p: f64,
    sig: SignalLevel,
    sig_classic: Option<SignalLevel>,
    /// Per-flow total RTT at this instant: base plus the simulated queue for
    /// flows on the simulated queue.
    rtts: Vec<f64>,
    rate_pkts: Vec<f64>,
    demand_bits: f64,
}

fn evaluate(
    scn: &Scenario,
    q: f64,
    p: f64,
    virtual_marks: bool,
    has_classic: bool,
) -> Result<StepEval, Error> {
    let sig = SignalLevel::from_p(p)?;
    let sig_classic = if has_classic {
        Some(scn.coupling.classic_signal(sig)?)
    } else {
        None
    };
    // The simulated queue is the scalable (L4S) one; Classic flows sit behind
    // their own queue, held at its configured delay.
    let rtts: Vec<f64> = scn
        .flows
        .iter()
        .map(|f| {
            if f.law.is_scalable() {
                f.base_rtt + q
            } else {
                f.base_rtt + scn.classic_queue_delay
            }
        })
        .collect();
    let mut rate_pkts = Vec::with_capacity(scn.flows.len());
    let mut demand_bits = 0.0;
    if p == 0.0 && !scn.flows.is_empty() {
        // Unmarked growth surrogate: every law wants unbounded rate at p = 0,
        // so push twice the capacity through the queue until marking starts.
        let share = 2.0 * scn.capacity / scn.flows.len() as f64;
        for f in &scn.flows {
            rate_pkts.push(share / f.segment_size);
        }
        demand_bits = 2.0 * scn.capacity;
    } else {
        for (f, &rtt) in scn.flows.iter().zip(&rtts) {
            let r = sim_rate(&f.law, sig, sig_classic, rtt, virtual_marks)?;
            rate_pkts.push(r);
            demand_bits += r * f.segment_size;
        }
    }
    Ok(StepEval { p, sig, sig_classic, rtts, rate_pkts, demand_bits })
}

/// True when the law, in the simulator's active signal convention, still
/// sends at a positive floor rate under full marking.
fn floored_in_sim(law: &ControlLaw, virtual_marks: bool) -> bool {
    match law {
        ControlLaw::ClassicTcp => true,
        _ => !virtual_marks,
    }
}

fn final_equilibrium(scn: &Scenario, eval: &StepEval, virtual_marks: bool) -> Equilibrium {
    let pinned = eval.p == 1.0;
    let pinned_classic = eval.sig_classic.map(|s| s.p() == 1.0).unwrap_or(false);
    let per_flow = scn
        .flows
        .iter()
        .zip(eval.rate_pkts.iter().zip(&eval.rtts))
        .map(|(f, (&r, &rtt))| {
            let p_seen = if f.law.is_scalable() {
                eval.sig.p()
            } else {
                eval.sig_classic.map(|s| s.p()).unwrap_or(0.0)
            };
            let pinned_here = if f.law.is_scalable() { pinned } else { pinned_classic };
            SolvedFlow {
                id: f.id.clone(),
                classic: !f.law.is_scalable(),
                state: FlowState::from_rate(r, rtt, f.segment_size, p_seen),
                saturated: pinned_here && floored_in_sim(&f.law, virtual_marks),
            }
        })
        .collect();
    Equilibrium {
        signal: eval.sig,
        signal_classic: eval.sig_classic,
        per_flow,
        utilization: eval.demand_bits / scn.capacity,
    }
}

/// Compare final simulated rates against the solver; None when the solver has
/// no comparable feasible answer.
fn solver_match(scn: &Scenario, final_state: &Equilibrium) -> Option<f64> {
    if scn.flows.is_empty() {
        return Some(0.0);
    }
    let solved = if scn.has_classic() {
        solve_dualq(scn, SolverConfig::default())
    } else {
        solve_single_queue(scn, SolverConfig::default())
    };
    let eq = match solved {
        Ok(eq) if !eq.is_saturated() => eq,
        _ => return None,
    };
    let mut worst = 0.0_f64;
    for (a, b) in final_state.per_flow.iter().zip(&eq.per_flow) {
        let rel = (a.state.rate_bits - b.state.rate_bits).abs() / b.state.rate_bits;
        worst = worst.max(rel);
    }
    Some(worst)
}

/// Run the Euler relaxation with a caller-supplied demand model.
///
/// `demand` maps the current queue delay to a full per-flow evaluation;
/// returns the trajectory with the verdict filled in except for the solver
/// comparison.
fn relax(
    scn: &Scenario,
    dt: f64,
    horizon: f64,
    initial_queue: f64,
    max_samples: usize,
    virtual_marks: bool,
    step_scale: f64,
    mut demand: impl FnMut(f64) -> Result<StepEval, Error>,
) -> Result<(Trajectory, StepEval), Error> {
    let capacity = scn.capacity;
    let total_steps = libm::ceil(horizon / dt) as u64;
    let mut samples: Vec<Sample> = Vec::new();
    let mut stride: u64 = 1;
    let mut last_sampled: Option<u64> = None;

    let mut q = initial_queue;
    let mut eta = 1.0_f64;
    let mut prev_sign = 0i8;
    let mut prev_mag = 0.0_f64;
    let mut reached_steady = false;
    let mut diverged = false;

    let mut idx: u64 = 0;
    let mut eval = demand(q)?;
    loop {
        if idx % stride == 0 {
            push_sample(&mut samples, &mut stride, max_samples, idx, dt, q, scn, &eval);
            last_sampled = Some(idx);
        }

        let g = (eval.demand_bits - capacity) / capacity;
        let raw_dq = dt * g;
        if raw_dq.abs() < STEADY_QUEUE_DELTA && g.abs() <= STEADY_RESIDUAL {
            reached_steady = true;
            break;
        }
        if q == 0.0 && raw_dq < 0.0 {
            // Pinned at an empty queue with demand below capacity.
            reached_steady = true;
            break;
        }
        if idx >= total_steps {
            break;
        }

        // Demand blows up as p -> 0+, so bound each move to a fraction of the
        // current queue scale; growth stays geometric instead of leaping
        // decades in one step.
        let cap = 0.25 * (q + step_scale + dt);
        let bounded_dq = raw_dq.clamp(-cap, cap);

        // Back off only when an oscillation is not dying out on its own;
        // shrinking flips are ordinary damped convergence.
        let sign = if raw_dq > 0.0 { 1 } else { -1 };
        if prev_sign != 0 && sign != prev_sign {
            if bounded_dq.abs() >= prev_mag {
                eta = (eta * 0.5).max(ETA_FLOOR);
            }
        } else {
            eta = (eta * ETA_GROWTH).min(1.0);
        }
        prev_sign = sign;
        prev_mag = bounded_dq.abs();

        q = (q + eta * bounded_dq).max(0.0);
        idx += 1;
        eval = demand(q)?;

        if q > DIVERGENCE_QUEUE_DELAY {
            diverged = true;
            break;
        }
    }

    if last_sampled != Some(idx) {
        push_sample(&mut samples, &mut stride, max_samples, idx, dt, q, scn, &eval);
    }

    let final_state = final_equilibrium(scn, &eval, virtual_marks);
    let traj = Trajectory {
        flow_ids: scn.flows.iter().map(|f| f.id.clone()).collect(),
        step: dt,
        samples,
        verdict: Verdict {
            reached_steady,
            diverged,
            solver_match_rel: None,
            converged: false,
            final_state,
        },
    };
    Ok((traj, eval))
}

#[allow(clippy::too_many_arguments)]
fn push_sample(
    samples: &mut Vec<Sample>,
    stride: &mut u64,
    max_samples: usize,
    idx: u64,
    dt: f64,
    q: f64,
    scn: &Scenario,
    eval: &StepEval,
) {
    let window = eval
        .rate_pkts
        .iter()
        .zip(&eval.rtts)
        .map(|(&r, &rtt)| r * rtt)
        .collect();
    let rate_bits = scn
        .flows
        .iter()
        .zip(&eval.rate_pkts)
        .map(|(f, &r)| r * f.segment_size)
        .collect();
    samples.push(Sample { t: idx as f64 * dt, queue_delay: q, p: eval.p, rate_bits, window });
    if samples.len() >= max_samples {
        // Thin to every other sample and double the stride.
        let mut keep = 0;
        samples.retain(|_| {
            keep += 1;
            (keep - 1) % 2 == 0
        });
        *stride *= 2;
    }
}

/// Relax a scenario under the idealized AQM until the queue settles.
pub fn simulate(cfg: &SimConfig) -> Result<Trajectory, Error> {
    let dt = cfg.validate()?;
    let scn = &cfg.scenario;
    let has_classic = scn.has_classic();
    let (mut traj, _) = relax(
        scn,
        dt,
        cfg.horizon,
        cfg.initial_queue,
        cfg.max_samples,
        cfg.virtual_marks,
        cfg.aqm.target_delay,
        |q| evaluate(scn, q, cfg.aqm.p_of(q), cfg.virtual_marks, has_classic),
    )?;

    // Compare against the solver only when the simulated laws are the ones the
    // solver uses: virtual marks swap the window law's signal variable.
    let comparable = cfg.virtual_marks
        && !scn
            .flows
            .iter()
            .any(|f| matches!(f.law, ControlLaw::DctcpLike { .. }));
    let m = if comparable || scn.flows.is_empty() {
        solver_match(scn, &traj.verdict.final_state)
    } else {
        None
    };
    traj.verdict.solver_match_rel = m;
    traj.verdict.converged = traj.verdict.reached_steady
        && !traj.verdict.diverged
        && m.map(|rel| rel <= SOLVER_MATCH_TOL).unwrap_or(true);
    Ok(traj)
}

/// Relax a single Classic flow whose window cannot fall below `d` segments.
///
/// The controller is modelled as capacity-seeking: W = max(d, X R0/s). When
/// even the floor exceeds the capacity window, the queue must grow until a
/// window of d segments fits, i.e. total RTT = d s / X.
pub fn simulate_classic_window_floor(cfg: &SimConfig, d: f64) -> Result<Trajectory, Error> {
    let dt = cfg.validate()?;
    let scn = &cfg.scenario;
    if scn.flows.len() != 1 || scn.flows[0].law != ControlLaw::ClassicTcp {
        return Err(Error::WrongSolver(
            "window-floor relaxation takes exactly one Classic flow",
        ));
    }
    if !(d.is_finite() && d >= 1.0) {
        return Err(Error::Domain("window floor d must be finite and >= 1"));
    }
    let flow = &scn.flows[0];
    let base = flow.base_rtt;
    let s = flow.segment_size;
    let capacity_window = scn.capacity * base / s;
    let w = d.max(capacity_window);
    let aqm = cfg.aqm;

    let (mut traj, eval) = relax(
        scn,
        dt,
        cfg.horizon,
        cfg.initial_queue,
        cfg.max_samples,
        cfg.virtual_marks,
        aqm.target_delay,
        |q| {
            let p = aqm.p_of(q);
            let sig = SignalLevel::from_p(p)?;
            let rate = w / (base + q);
            Ok(StepEval {
                p,
                sig,
                sig_classic: Some(sig),
                rtts: alloc::vec![base + q],
                rate_pkts: alloc::vec![rate],
                demand_bits: rate * s,
            })
        },
    )?;

    // The floor binding is the saturation statement for this model.
    let floor_binds = d > capacity_window;
    traj.verdict.final_state.per_flow[0].saturated = floor_binds && eval.demand_bits > 0.0;
    traj.verdict.solver_match_rel = None;
    traj.verdict.converged = traj.verdict.reached_steady && !traj.verdict.diverged;
    Ok(traj)
}
