//! Rendering of solver, simulator and figure results: text reports, CSV
//! series and JSON documents. All numeric text goes through `sig9` so files
//! diff cleanly; JSON carries raw numbers.

use l4s_steady::analysis::{AxisScale, FigureData, FigureSeries};
use l4s_steady::equilibrium::{Equilibrium, SaturationGrid};
use l4s_steady::fluidsim::Trajectory;
use l4s_steady::ControlLaw;
use serde_json::json;

use crate::numfmt::sig9;

pub fn law_name(law: &ControlLaw) -> &'static str {
    match law {
        ControlLaw::DctcpLike { .. } => "dctcp",
        ControlLaw::Compromise4 { .. } => "compromise4",
        ControlLaw::Compromise5 { .. } => "compromise5",
        ControlLaw::ClassicTcp => "classic",
    }
}

fn yesno(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Laws of the scenario flows, in flow order, for report labels.
pub fn solve_text(eq: &Equilibrium, laws: &[&'static str]) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "p = {}  (1/u = {})\n",
        sig9(eq.signal.p()),
        sig9(eq.signal.virtual_mark_rate())
    ));
    if let Some(c) = eq.signal_classic {
        out.push_str(&format!("p_C = {}\n", sig9(c.p())));
    }
    out.push_str(&format!("utilization = {}\n", sig9(eq.utilization)));
    out.push_str(&format!("saturated = {}\n", yesno(eq.is_saturated())));
    for (f, law) in eq.per_flow.iter().zip(laws) {
        let s = &f.state;
        out.push_str(&format!(
            "flow {}: law={} rate={} b/s ({} pkt/s) window={} pkt marks_rtt={} total_rtt={} s p_seen={} saturated={}\n",
            f.id,
            law,
            sig9(s.rate_bits),
            sig9(s.rate_pkts),
            sig9(s.window),
            sig9(s.marks_per_rtt),
            sig9(s.total_rtt),
            sig9(s.p_seen()),
            yesno(f.saturated),
        ));
    }
    out
}

pub fn solve_json(eq: &Equilibrium, laws: &[&'static str]) -> serde_json::Value {
    let flows: Vec<_> = eq
        .per_flow
        .iter()
        .zip(laws)
        .map(|(f, law)| {
            json!({
                "id": f.id,
                "law": law,
                "classic": f.classic,
                "rate_bits": f.state.rate_bits,
                "rate_pkts": f.state.rate_pkts,
                "window": f.state.window,
                "marks_per_rtt": f.state.marks_per_rtt,
                "total_rtt": f.state.total_rtt,
                "p_seen": f.state.p_seen(),
                "saturated": f.saturated,
            })
        })
        .collect();
    json!({
        "p": eq.signal.p(),
        "virtual_mark_rate": eq.signal.virtual_mark_rate(),
        "p_classic": eq.signal_classic.map(|c| c.p()),
        "utilization": eq.utilization,
        "saturated": eq.is_saturated(),
        "flows": flows,
    })
}

pub fn verdict_line(traj: &Trajectory) -> String {
    let v = &traj.verdict;
    let m = match v.solver_match_rel {
        Some(rel) => format!("{}%", sig9(rel * 100.0)),
        None => "n/a".to_string(),
    };
    format!(
        "verdict: steady={} diverged={} solver_match={} converged={}",
        yesno(v.reached_steady),
        yesno(v.diverged),
        m,
        yesno(v.converged)
    )
}

pub fn final_state_text(traj: &Trajectory, laws: &[&'static str]) -> String {
    let mut out = String::new();
    if let Some(s) = traj.samples.last() {
        out.push_str(&format!(
            "final: t={} s queue={} s p={}\n",
            sig9(s.t),
            sig9(s.queue_delay),
            sig9(s.p)
        ));
    }
    for (f, law) in traj.verdict.final_state.per_flow.iter().zip(laws) {
        let s = &f.state;
        out.push_str(&format!(
            "flow {}: law={} rate={} b/s window={} pkt total_rtt={} s saturated={}\n",
            f.id,
            law,
            sig9(s.rate_bits),
            sig9(s.window),
            sig9(s.total_rtt),
            yesno(f.saturated),
        ));
    }
    out
}

pub fn trajectory_csv(traj: &Trajectory) -> String {
    let mut header = String::from("t_s,queue_s,p");
    for id in &traj.flow_ids {
        header.push_str(&format!(",rate_{id}_bps"));
    }
    for id in &traj.flow_ids {
        header.push_str(&format!(",window_{id}_pkt"));
    }
    let mut out = header;
    out.push('\n');
    for s in &traj.samples {
        out.push_str(&sig9(s.t));
        out.push(',');
        out.push_str(&sig9(s.queue_delay));
        out.push(',');
        out.push_str(&sig9(s.p));
        for r in &s.rate_bits {
            out.push(',');
            out.push_str(&sig9(*r));
        }
        for w in &s.window {
            out.push(',');
            out.push_str(&sig9(*w));
        }
        out.push('\n');
    }
    out
}

fn column(label: &str, unit: &str) -> String {
    format!("{} [{}]", label, unit)
}

/// Curves share one x grid by construction; the grid becomes the first column.
pub fn figure_csv(s: &FigureSeries) -> String {
    let mut out = String::new();
    match &s.data {
        FigureData::Curves(curves) => {
            out.push_str(&column(s.x_axis.label, s.x_axis.unit));
            for c in curves {
                out.push(',');
                out.push_str(&column(c.name, s.y_axis.unit));
            }
            out.push('\n');
            let n = curves[0].points.len();
            for c in curves {
                assert_eq!(c.points.len(), n, "curves share one x grid");
            }
            for i in 0..n {
                out.push_str(&sig9(curves[0].points[i].0));
                for c in curves {
                    assert_eq!(c.points[i].0, curves[0].points[i].0);
                    out.push(',');
                    out.push_str(&sig9(c.points[i].1));
                }
                out.push('\n');
            }
        }
        FigureData::Grid(g) => {
            out.push_str(&column(s.x_axis.label, s.x_axis.unit));
            out.push(',');
            out.push_str(&column(s.y_axis.label, s.y_axis.unit));
            out.push_str(",saturated\n");
            for (i, &rtt) in g.rtts.iter().enumerate() {
                for (j, &rate) in g.rates.iter().enumerate() {
                    out.push_str(&sig9(rate));
                    out.push(',');
                    out.push_str(&sig9(rtt));
                    out.push(',');
                    out.push(if g.at(i, j) { '1' } else { '0' });
                    out.push('\n');
                }
            }
        }
    }
    out
}

fn axis_json(label: &str, unit: &str, scale: AxisScale) -> serde_json::Value {
    json!({
        "label": label,
        "unit": unit,
        "scale": match scale { AxisScale::Log => "log", AxisScale::Linear => "linear" },
    })
}

pub fn figure_json(s: &FigureSeries) -> serde_json::Value {
    let mut doc = json!({
        "figure_id": s.figure_id.to_string(),
        "x_axis": axis_json(s.x_axis.label, s.x_axis.unit, s.x_axis.scale),
        "y_axis": axis_json(s.y_axis.label, s.y_axis.unit, s.y_axis.scale),
    });
    match &s.data {
        FigureData::Curves(curves) => {
            let arr: Vec<_> = curves
                .iter()
                .map(|c| {
                    json!({
                        "name": c.name,
                        "points": c.points.iter().map(|&(x, y)| json!([x, y])).collect::<Vec<_>>(),
                    })
                })
                .collect();
            doc["curves"] = json!(arr);
        }
        FigureData::Grid(g) => {
            let rows: Vec<Vec<bool>> = g
                .rtts
                .iter()
                .enumerate()
                .map(|(i, _)| (0..g.rates.len()).map(|j| g.at(i, j)).collect())
                .collect();
            doc["grid"] = json!({
                "v0": g.v0,
                "segment_size": g.segment_size,
                "rates": g.rates,
                "rtts": g.rtts,
                "saturated": rows,
            });
        }
    }
    doc
}

pub fn figure_summary(s: &FigureSeries) -> String {
    match &s.data {
        FigureData::Curves(curves) => {
            let pts = &curves[0].points;
            let (x0, x1) = (pts[0].0, pts[pts.len() - 1].0);
            let mut ylo = f64::INFINITY;
            let mut yhi = f64::NEG_INFINITY;
            for c in curves {
                for &(_, y) in &c.points {
                    ylo = ylo.min(y);
                    yhi = yhi.max(y);
                }
            }
            format!(
                "{}: {} curve(s), {} points, x {}..{} [{}], y {}..{} [{}]",
                s.figure_id,
                curves.len(),
                pts.len(),
                sig9(x0),
                sig9(x1),
                s.x_axis.unit,
                sig9(ylo),
                sig9(yhi),
                s.y_axis.unit
            )
        }
        FigureData::Grid(g) => {
            let sat = g.saturated.iter().filter(|&&b| b).count();
            format!(
                "{}: {}x{} grid, x {}..{} [{}], y {}..{} [{}], saturated {}/{}",
                s.figure_id,
                g.rtts.len(),
                g.rates.len(),
                sig9(g.rates[0]),
                sig9(g.rates[g.rates.len() - 1]),
                s.x_axis.unit,
                sig9(g.rtts[0]),
                sig9(g.rtts[g.rtts.len() - 1]),
                s.y_axis.unit,
                sat,
                g.saturated.len()
            )
        }
    }
}

/// Long-form helper used by figure tests: the curve rows as (x, y) pairs.
pub fn grid_cell(g: &SaturationGrid, rate: f64, rtt: f64) -> Option<bool> {
    let j = g.rates.iter().position(|&x| x == rate)?;
    let i = g.rtts.iter().position(|&x| x == rtt)?;
    Some(g.at(i, j))
}

pub fn table1_csv(rows: &[l4s_steady::analysis::ImbalanceRow]) -> String {
    let mut out = String::from("label,q_s,r1_s,r2_s,imbalance\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            r.label,
            sig9(r.q),
            sig9(r.r1),
            sig9(r.r2),
            sig9(r.imbalance)
        ));
    }
    out
}

pub fn status_text() -> String {
    let mut out = String::new();
    for row in l4s_steady::analysis::status_summary() {
        out.push_str(&format!("{}. {} | {}\n", row.number, row.requirement, row.status));
    }
    out
}
