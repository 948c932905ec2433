//! Report and figure-series generation on top of the law and solver layers.
//!
//! Everything here is plumbing: each emitted point is a direct call into
//! `laws`, `signal` or `equilibrium`, so series regenerate bit-identically.

use alloc::string::String;
use alloc::string::ToString;
use alloc::vec::Vec;

use crate::equilibrium::{saturation_grid_on_axes, Equilibrium, SaturationGrid};
use crate::error::Error;
use crate::laws;
use crate::signal::SignalLevel;

/// One row of the queue-cushioning table.
#[derive(Debug, Clone, PartialEq)]
pub struct ImbalanceRow {
    pub label: String,
    /// Queuing delay common to both flows, seconds.
    pub q: f64,
    pub r1: f64,
    pub r2: f64,
    /// (r1 + q) / (r2 + q).
    pub imbalance: f64,
}

/// Base RTTs of the published cushioning table.
pub const TABLE1_R1: f64 = 200e-3;
pub const TABLE1_R2: f64 = 2e-3;

/// Queue regimes of the published cushioning table.
pub const TABLE1_QUEUES: [(&str, f64); 3] = [
    ("Drop Tail", 200e-3),
    ("PIE AQM", 15e-3),
    ("L4S AQM", 500e-6),
];

/// Total-RTT imbalance (r1+q)/(r2+q) for each queue regime.
pub fn table1(r1: f64, r2: f64, q_list: &[(&str, f64)]) -> Result<Vec<ImbalanceRow>, Error> {
    if !(r1.is_finite() && r1 > 0.0 && r2.is_finite() && r2 > 0.0) {
        return Err(Error::Domain("base RTTs must be finite and > 0"));
    }
    let mut rows = Vec::with_capacity(q_list.len());
    for &(label, q) in q_list {
        if !(q.is_finite() && q >= 0.0) {
            return Err(Error::Domain("queue delay must be finite and >= 0"));
        }
        rows.push(ImbalanceRow {
            label: label.to_string(),
            q,
            r1,
            r2,
            imbalance: (r1 + q) / (r2 + q),
        });
    }
    Ok(rows)
}

/// Steady-state packet-rate ratio f(ri)/f(rj) of two compromise-law flows
/// sharing one queue; the signal term is common and cancels.
pub fn rate_imbalance_comp5(ri: f64, rj: f64, v0: f64, r0: f64) -> Result<f64, Error> {
    Ok(laws::comp5_marks_per_sec(ri, v0, r0)? / laws::comp5_marks_per_sec(rj, v0, r0)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FigureId {
    /// Saturation region over (capacity, RTT).
    F1,
    /// Virtual-mark rate 1/u against p.
    F2,
    /// Inter-mark and inter-packet times against bit-rate.
    F3,
    /// Compromise-law marks per RTT against RTT.
    F4,
    /// Compromise-law marks per second against RTT.
    F5,
}

impl FigureId {
    pub const ALL: [FigureId; 5] = [
        FigureId::F1,
        FigureId::F2,
        FigureId::F3,
        FigureId::F4,
        FigureId::F5,
    ];

    pub fn number(self) -> u32 {
        match self {
            FigureId::F1 => 1,
            FigureId::F2 => 2,
            FigureId::F3 => 3,
            FigureId::F4 => 4,
            FigureId::F5 => 5,
        }
    }
}

impl TryFrom<u32> for FigureId {
    type Error = Error;
    fn try_from(n: u32) -> Result<Self, Error> {
        match n {
            1 => Ok(FigureId::F1),
            2 => Ok(FigureId::F2),
            3 => Ok(FigureId::F3),
            4 => Ok(FigureId::F4),
            5 => Ok(FigureId::F5),
            _ => Err(Error::Domain("figure id must be 1..=5")),
        }
    }
}

impl core::fmt::Display for FigureId {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "F{}", self.number())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AxisScale {
    Linear,
    Log,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Axis {
    pub label: &'static str,
    pub unit: &'static str,
    pub scale: AxisScale,
}

/// One named (x, y) trace.
#[derive(Debug, Clone, PartialEq)]
pub struct Curve {
    pub name: &'static str,
    pub points: Vec<(f64, f64)>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum FigureData {
    Curves(Vec<Curve>),
    Grid(SaturationGrid),
}

#[derive(Debug, Clone, PartialEq)]
pub struct FigureSeries {
    pub figure_id: FigureId,
    pub x_axis: Axis,
    pub y_axis: Axis,
    pub data: FigureData,
}

/// Inputs shared by the figure generators; ranges are the ones visible in
/// the published plots and may be overridden.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FigureParams {
    pub v0: f64,
    pub r0: f64,
    pub c0: f64,
    pub segment_size: f64,
    /// Bit-rate axis, bits/s (figures 1 and 3).
    pub rate_range: (f64, f64),
    /// RTT axis, seconds (figures 1, 4 and 5).
    pub rtt_range: (f64, f64),
    /// Marking-probability axis (figure 2).
    pub p_range: (f64, f64),
    pub points_per_decade: usize,
}

impl Default for FigureParams {
    fn default() -> Self {
        FigureParams {
            v0: laws::DEFAULT_V0,
            r0: laws::DEFAULT_R0,
            c0: laws::DEFAULT_C0,
            segment_size: 12_000.0,
            rate_range: (1e5, 1e11),
            rtt_range: (1e-6, 1.0),
            p_range: (1e-4, 0.9999999),
            points_per_decade: 10,
        }
    }
}

impl FigureParams {
    fn validate(&self) -> Result<(), Error> {
        for (x, what) in [
            (self.v0, "v0 must be finite and > 0"),
            (self.r0, "r0 must be finite and > 0"),
            (self.c0, "c0 must be finite and > 0"),
            (self.segment_size, "segment size must be finite and > 0"),
        ] {
            if !(x.is_finite() && x > 0.0) {
                return Err(Error::Domain(what));
            }
        }
        for r in [self.rate_range, self.rtt_range, self.p_range] {
            if !(r.0.is_finite() && r.1.is_finite() && r.0 > 0.0 && r.0 < r.1) {
                return Err(Error::Domain("axis range must satisfy 0 < lo < hi"));
            }
        }
        if self.points_per_decade == 0 {
            return Err(Error::Domain("points per decade must be >= 1"));
        }
        Ok(())
    }
}

/// Log-spaced points over `range` plus any in-range anchors, ascending and
/// deduplicated. Anchors pin the x values the published discussion reads off.
fn log_points(range: (f64, f64), per_decade: usize, anchors: &[f64]) -> Vec<f64> {
    let (lo, hi) = range;
    let decades = crate::math::log2(hi / lo) / crate::math::log2(10.0);
    let steps = ((decades * per_decade as f64) as usize).max(1);
    let mut xs = Vec::with_capacity(steps + 1 + anchors.len());
    let llo = crate::math::log2(lo);
    let lhi = crate::math::log2(hi);
    for k in 0..=steps {
        let x = if k == 0 {
            lo
        } else if k == steps {
            hi
        } else {
            crate::math::powf(2.0, llo + (lhi - llo) * k as f64 / steps as f64)
        };
        xs.push(x);
    }
    for &a in anchors {
        if a >= lo && a <= hi {
            xs.push(a);
        }
    }
    xs.sort_unstable_by(|a, b| a.partial_cmp(b).unwrap());
    xs.dedup();
    xs
}

/// Generate the data behind one published figure.
pub fn figure_data(figure_id: FigureId, params: &FigureParams) -> Result<FigureSeries, Error> {
    params.validate()?;
    let p = params;
    match figure_id {
        FigureId::F1 => {
            // Example cell the saturation discussion reads off: 2 Mb/s, 6 ms.
            let rates = log_points(p.rate_range, p.points_per_decade, &[2e6]);
            let rtts = log_points(p.rtt_range, p.points_per_decade, &[6e-3]);
            let grid = saturation_grid_on_axes(p.v0, p.segment_size, rates, rtts)?;
            Ok(FigureSeries {
                figure_id,
                x_axis: Axis { label: "available capacity", unit: "b/s", scale: AxisScale::Log },
                y_axis: Axis { label: "total RTT", unit: "s", scale: AxisScale::Log },
                data: FigureData::Grid(grid),
            })
        }
        FigureId::F2 => {
            let ps = log_points(p.p_range, p.points_per_decade, &[0.01, 0.5]);
            let mut points = Vec::with_capacity(ps.len());
            for x in ps {
                points.push((x, SignalLevel::from_p(x)?.virtual_mark_rate()));
            }
            let curves = alloc::vec![Curve { name: "virtual mark rate", points }];
            Ok(FigureSeries {
                figure_id,
                x_axis: Axis { label: "marking probability", unit: "1", scale: AxisScale::Log },
                y_axis: Axis { label: "1/u", unit: "1", scale: AxisScale::Log },
                data: FigureData::Curves(curves),
            })
        }
        FigureId::F3 => {
            // Example vertical the discussion reads off: 1 Gb/s.
            let xs = log_points(p.rate_range, p.points_per_decade, &[1e9]);
            let mut inter_mark = Vec::with_capacity(xs.len());
            let mut inter_packet = Vec::with_capacity(xs.len());
            for x in xs {
                let r = x / p.segment_size;
                let sig = laws::comp4_signal_for_rate(r, p.c0)?;
                inter_mark.push((x, 1.0 / (sig.p() * r)));
                inter_packet.push((x, 1.0 / r));
            }
            let curves = alloc::vec![
                Curve { name: "inter-mark time", points: inter_mark },
                Curve { name: "inter-packet time", points: inter_packet },
            ];
            Ok(FigureSeries {
                figure_id,
                x_axis: Axis { label: "flow bit-rate", unit: "b/s", scale: AxisScale::Log },
                y_axis: Axis { label: "time", unit: "s", scale: AxisScale::Log },
                data: FigureData::Curves(curves),
            })
        }
        FigureId::F4 | FigureId::F5 => {
            // Anchors: the knee RTT r0 plus the two RTTs quoted against the
            // published curves, 10 us and 130 ms.
            let xs = log_points(p.rtt_range, p.points_per_decade, &[p.r0, 10e-6, 130e-3]);
            let mut points = Vec::with_capacity(xs.len());
            for x in xs {
                let y = match figure_id {
                    FigureId::F4 => laws::comp5_marks_per_rtt(x, p.v0, p.r0)?,
                    _ => laws::comp5_marks_per_sec(x, p.v0, p.r0)?,
                };
                points.push((x, y));
            }
            let (name, label, unit) = match figure_id {
                FigureId::F4 => ("marks per RTT", "marks per RTT", "1"),
                _ => ("marks per second", "marks per second", "1/s"),
            };
            let curves = alloc::vec![Curve { name, points }];
            Ok(FigureSeries {
                figure_id,
                x_axis: Axis { label: "total RTT", unit: "s", scale: AxisScale::Log },
                y_axis: Axis { label, unit, scale: AxisScale::Log },
                data: FigureData::Curves(curves),
            })
        }
    }
}

impl FigureSeries {
    /// Every point finite; log-scale axes strictly positive.
    pub fn check(&self) -> Result<(), Error> {
        let need_pos_x = self.x_axis.scale == AxisScale::Log;
        let need_pos_y = self.y_axis.scale == AxisScale::Log;
        match &self.data {
            FigureData::Curves(curves) => {
                for c in curves {
                    for &(x, y) in &c.points {
                        if !(x.is_finite() && y.is_finite()) {
                            return Err(Error::Domain("figure point must be finite"));
                        }
                        if (need_pos_x && x <= 0.0) || (need_pos_y && y <= 0.0) {
                            return Err(Error::Domain("log-scale point must be > 0"));
                        }
                    }
                }
            }
            FigureData::Grid(g) => {
                for v in g.rates.iter().chain(g.rtts.iter()) {
                    if !(v.is_finite() && *v > 0.0) {
                        return Err(Error::Domain("grid axis value must be > 0"));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Default dominance factor: a flow "thrives" above ten times the tolerable
/// rate. The threshold pair is parametric because no standard value exists.
pub const DEFAULT_DOMINANCE: f64 = 10.0;

#[derive(Debug, Clone, PartialEq)]
pub struct StarvationFlag {
    pub id: String,
    pub classic: bool,
    pub rate_bits: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct StarvationReport {
    pub tolerable_rate: f64,
    pub dominance: f64,
    pub flags: Vec<StarvationFlag>,
}

impl StarvationReport {
    pub fn classic_flagged(&self) -> impl Iterator<Item = &StarvationFlag> {
        self.flags.iter().filter(|f| f.classic)
    }
    pub fn scalable_flagged(&self) -> impl Iterator<Item = &StarvationFlag> {
        self.flags.iter().filter(|f| !f.classic)
    }
}

/// Flag flows pushed toward starvation: rate below `tolerable_rate` while
/// some other flow exceeds `dominance` times that rate.
pub fn starvation_report(
    eq: &Equilibrium,
    tolerable_rate: f64,
    dominance: f64,
) -> Result<StarvationReport, Error> {
    if !(tolerable_rate.is_finite() && tolerable_rate > 0.0) {
        return Err(Error::Domain("tolerable rate must be finite and > 0"));
    }
    if !(dominance.is_finite() && dominance >= 1.0) {
        return Err(Error::Domain("dominance factor must be finite and >= 1"));
    }
    let mut flags = Vec::new();
    for (i, f) in eq.per_flow.iter().enumerate() {
        if f.state.rate_bits >= tolerable_rate {
            continue;
        }
        let dominated = eq
            .per_flow
            .iter()
            .enumerate()
            .any(|(j, g)| j != i && g.state.rate_bits > dominance * tolerable_rate);
        if dominated {
            flags.push(StarvationFlag {
                id: f.id.clone(),
                classic: f.classic,
                rate_bits: f.state.rate_bits,
            });
        }
    }
    Ok(StarvationReport { tolerable_rate, dominance, flags })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StatusRow {
    pub number: u8,
    pub requirement: &'static str,
    pub status: &'static str,
}

/// Resolution status of the six steady-state scaling requirements.
pub const STATUS_SUMMARY: [StatusRow; 6] = [
    StatusRow {
        number: 1,
        requirement: "Scalable congestion signalling",
        status: "Good compromise #5 or #4?",
    },
    StatusRow {
        number: 2,
        requirement: "Limited RTT-dependence",
        status: "Good compromise #5 or #4?",
    },
    StatusRow {
        number: 3,
        requirement: "Unlimited responsiveness",
        status: "To be resolved",
    },
    StatusRow {
        number: 4,
        requirement: "Low relative queuing delay",
        status: "Separate scope: AQM requirement",
    },
    StatusRow {
        number: 5,
        requirement: "Unsaturated signalling",
        status: "Resolved",
    },
    StatusRow {
        number: 6,
        requirement: "Coexistence with Classic TCP",
        status: "Resolved",
    },
];

pub fn status_summary() -> &'static [StatusRow; 6] {
    &STATUS_SUMMARY
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equilibrium::{saturation_rtt_bound, SolvedFlow};
    use crate::flow::FlowState;
    use alloc::vec;

    #[test]
    fn table1_reproduces_published_rows() {
        let rows = table1(TABLE1_R1, TABLE1_R2, &TABLE1_QUEUES).unwrap();
        assert_eq!(rows.len(), 3);
        // (200+200)/(2+200), (200+15)/(2+15), (200+0.5)/(2+0.5)
        assert!((rows[0].imbalance - 1.980_198_02).abs() < 5e-4);
        assert!((rows[1].imbalance - 12.647_058_82).abs() < 5e-3);
        assert!((rows[2].imbalance - 80.2).abs() < 5e-2);
        assert_eq!(libm::round(rows[0].imbalance) as i32, 2);
        assert_eq!(libm::round(rows[1].imbalance) as i32, 13);
        assert_eq!(libm::round(rows[2].imbalance) as i32, 80);
        assert_eq!(rows[0].label, "Drop Tail");
        assert_eq!(rows[2].q, 500e-6);
    }

    #[test]
    fn table1_equal_rtts_give_unity() {
        let rows = table1(0.1, 0.1, &[("a", 0.0), ("b", 1.0)]).unwrap();
        for r in rows {
            assert_eq!(r.imbalance, 1.0);
        }
    }

    #[test]
    fn table1_monotone_from_rtt_ratio_to_one() {
        // q = 0 gives the bare RTT ratio; growing q cushions it toward 1.
        let mut qs = Vec::new();
        for k in 0..60 {
            qs.push(("q", 1e-6 * crate::math::powf(10.0, k as f64 * 0.12)));
        }
        let rows = table1(TABLE1_R1, TABLE1_R2, &qs).unwrap();
        let bare = table1(TABLE1_R1, TABLE1_R2, &[("zero", 0.0)]).unwrap()[0].imbalance;
        assert!((bare - 100.0).abs() < 1e-9);
        let mut prev = bare;
        for r in &rows {
            assert!(r.imbalance < prev);
            assert!(r.imbalance > 1.0);
            prev = r.imbalance;
        }
        assert!(rows.last().unwrap().imbalance < 1.02);
    }

    #[test]
    fn comp5_imbalance_published_pair() {
        let ratio = rate_imbalance_comp5(10e-6, 130e-3, 2.0, 500e-6).unwrap();
        assert!((ratio - 12.692_346_17).abs() / 12.692_346_17 < 1e-9);
    }

    #[test]
    fn comp5_imbalance_identity_and_wide_span() {
        assert_eq!(rate_imbalance_comp5(3e-3, 3e-3, 2.0, 500e-6).unwrap(), 1.0);
        // Five orders of RTT span collapse to about two orders of rate span.
        let ratio = rate_imbalance_comp5(1e-6, 200e-3, 2.0, 500e-6).unwrap();
        assert!((ratio - 80.329_368_08).abs() / 80.329_368_08 < 1e-9);
        assert!(ratio > 10.0 && ratio < 1000.0);
    }

    #[test]
    fn figure_ids_round_trip() {
        for n in 1u32..=5 {
            let id = FigureId::try_from(n).unwrap();
            assert_eq!(id.number(), n);
        }
        assert!(FigureId::try_from(0).is_err());
        assert!(FigureId::try_from(6).is_err());
    }

    #[test]
    fn every_figure_is_finite_and_log_positive() {
        let p = FigureParams::default();
        for id in FigureId::ALL {
            let s = figure_data(id, &p).unwrap();
            s.check().unwrap();
        }
    }

    #[test]
    fn figures_regenerate_bit_identically() {
        let p = FigureParams::default();
        for id in FigureId::ALL {
            let a = figure_data(id, &p).unwrap();
            let b = figure_data(id, &p).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn fig1_matches_bound_at_every_cell() {
        let s = figure_data(FigureId::F1, &FigureParams::default()).unwrap();
        let g = match s.data {
            FigureData::Grid(g) => g,
            _ => panic!("figure 1 is a grid"),
        };
        for (i, &rtt) in g.rtts.iter().enumerate() {
            for (j, &rate) in g.rates.iter().enumerate() {
                let bound = saturation_rtt_bound(2.0, 12_000.0, rate).unwrap();
                assert_eq!(g.at(i, j), rtt < bound);
            }
        }
        // The discussed cell: 2 Mb/s at 6 ms sits inside the region (bound 12 ms).
        let j = g.rates.iter().position(|&x| x == 2e6).unwrap();
        let i = g.rtts.iter().position(|&x| x == 6e-3).unwrap();
        assert!(g.at(i, j));
    }

    #[test]
    fn fig2_passes_through_half_and_anchors() {
        let s = figure_data(FigureId::F2, &FigureParams::default()).unwrap();
        let curves = match s.data {
            FigureData::Curves(c) => c,
            _ => panic!("figure 2 is a curve"),
        };
        let pts = &curves[0].points;
        let at = |x: f64| pts.iter().find(|p| p.0 == x).map(|p| p.1).unwrap();
        assert_eq!(at(0.5), 1.0);
        assert!((at(0.01) - 0.010_101_010_1).abs() < 1e-9);
        let last = pts.last().unwrap();
        assert_eq!(last.0, 0.9999999);
        assert!((last.1 - 9_999_999.0).abs() / 9_999_999.0 < 1e-7);
    }

    #[test]
    fn fig3_gigabit_vertical() {
        let s = figure_data(FigureId::F3, &FigureParams::default()).unwrap();
        let curves = match s.data {
            FigureData::Curves(c) => c,
            _ => panic!("figure 3 is two curves"),
        };
        assert_eq!(curves.len(), 2);
        let mark = curves[0].points.iter().find(|p| p.0 == 1e9).unwrap().1;
        let pkt = curves[1].points.iter().find(|p| p.0 == 1e9).unwrap().1;
        assert!((pkt - 1.2e-5).abs() < 1e-18);
        assert!((mark - 1.215_445_115e-4).abs() / 1.215_445_115e-4 < 1e-9);
        assert!((mark / pkt - 10.128_709_29).abs() < 1e-6);
    }

    #[test]
    fn fig4_knee_pins_v0() {
        let s = figure_data(FigureId::F4, &FigureParams::default()).unwrap();
        let curves = match s.data {
            FigureData::Curves(c) => c,
            _ => panic!("figure 4 is a curve"),
        };
        let y = curves[0].points.iter().find(|p| p.0 == 500e-6).unwrap().1;
        assert!((y - 2.0).abs() < 1e-12);
    }

    #[test]
    fn fig5_flattens_near_asymptote() {
        let s = figure_data(FigureId::F5, &FigureParams::default()).unwrap();
        let curves = match s.data {
            FigureData::Curves(c) => c,
            _ => panic!("figure 5 is a curve"),
        };
        let pts = &curves[0].points;
        let floor = 2.0 * core::f64::consts::LN_2 / 500e-6;
        let mut prev = f64::INFINITY;
        for &(_, y) in pts {
            assert!(y < prev);
            assert!(y > floor);
            prev = y;
        }
        let right = pts.last().unwrap().1;
        assert!((right - 2773.281_812).abs() / 2773.281_812 < 1e-6);
        assert!((right - 2800.0).abs() / 2800.0 < 0.05);
    }

    fn solved(id: &str, classic: bool, rate_bits: f64) -> SolvedFlow {
        SolvedFlow {
            id: id.to_string(),
            classic,
            state: FlowState::from_rate(rate_bits / 12_000.0, 10e-3, 12_000.0, 0.01),
            saturated: false,
        }
    }

    fn eq_of(flows: Vec<SolvedFlow>) -> Equilibrium {
        Equilibrium {
            signal: SignalLevel::from_p(0.01).unwrap(),
            signal_classic: None,
            per_flow: flows,
            utilization: 1.0,
        }
    }

    #[test]
    fn starvation_skips_balanced_pair() {
        // Rates 13:1, threshold at half the smaller rate: nobody is below it.
        let eq = eq_of(vec![solved("a", false, 13e6), solved("b", false, 1e6)]);
        let rep = starvation_report(&eq, 0.5e6, DEFAULT_DOMINANCE).unwrap();
        assert!(rep.flags.is_empty());
    }

    #[test]
    fn starvation_flags_dominated_classic() {
        let eq = eq_of(vec![solved("c", true, 0.1e6), solved("s", false, 100e6)]);
        let rep = starvation_report(&eq, 1e6, DEFAULT_DOMINANCE).unwrap();
        assert_eq!(rep.flags.len(), 1);
        assert_eq!(rep.flags[0].id, "c");
        assert!(rep.flags[0].classic);
        assert_eq!(rep.classic_flagged().count(), 1);
        assert_eq!(rep.scalable_flagged().count(), 0);
    }

    #[test]
    fn starvation_needs_a_comparator() {
        let eq = eq_of(vec![solved("lone", true, 0.1e6)]);
        let rep = starvation_report(&eq, 1e6, DEFAULT_DOMINANCE).unwrap();
        assert!(rep.flags.is_empty());
    }

    #[test]
    fn starvation_invariant_under_relabeling() {
        let a = eq_of(vec![
            solved("x", false, 0.2e6),
            solved("y", false, 50e6),
            solved("z", true, 0.3e6),
        ]);
        let b = eq_of(vec![
            solved("z", true, 0.3e6),
            solved("x", false, 0.2e6),
            solved("y", false, 50e6),
        ]);
        let ra = starvation_report(&a, 1e6, DEFAULT_DOMINANCE).unwrap();
        let rb = starvation_report(&b, 1e6, DEFAULT_DOMINANCE).unwrap();
        let mut ia: Vec<&str> = ra.flags.iter().map(|f| f.id.as_str()).collect();
        let mut ib: Vec<&str> = rb.flags.iter().map(|f| f.id.as_str()).collect();
        ia.sort_unstable();
        ib.sort_unstable();
        assert_eq!(ia, ib);
        assert_eq!(ia, vec!["x", "z"]);
    }

    #[test]
    fn status_table_matches_published_resolutions() {
        let rows = status_summary();
        assert_eq!(rows.len(), 6);
        assert_eq!(rows[2].status, "To be resolved");
        assert!(rows[3].status.starts_with("Separate scope"));
        assert_eq!(rows[4].status, "Resolved");
        assert_eq!(rows[5].status, "Resolved");
        assert!(rows[0].status.contains("#5"));
        assert!(rows[1].status.contains("#5"));
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.number as usize, i + 1);
        }
    }
}
