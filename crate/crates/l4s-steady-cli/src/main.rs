//! Command-line front end: scenario files in, CSV/JSON out.
//!
//! Exit codes: 0 success, 2 usage or parse error, 3 infeasible (saturated)
//! equilibrium. Identical inputs produce byte-identical outputs.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use l4s_steady::analysis::{self, FigureId, FigureParams};
use l4s_steady::equilibrium::{solve_dualq, solve_single_queue, Scenario, SolverConfig};
use l4s_steady::fluidsim::{simulate, AqmMode, SimConfig};
use l4s_steady_cli::{report, scenario, units};

const EXIT_USAGE: u8 = 2;
const EXIT_SATURATED: u8 = 3;

/// Print to stdout, leaving quietly when the reader has gone away (a closed
/// pipe must not read as a crash).
fn emit(text: impl AsRef<str>) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if out
        .write_all(text.as_ref().as_bytes())
        .and_then(|_| out.flush())
        .is_err()
    {
        std::process::exit(0);
    }
}

#[derive(Parser)]
#[command(
    name = "l4s-steady",
    version,
    about = "Steady-state analysis of L4S scalable congestion controllers"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Total-RTT imbalance across queue regimes (CSV on stdout).
    Table1(Table1Args),
    /// Emit the data series behind one figure (CSV and JSON files).
    Fig(FigArgs),
    /// Solve a scenario file for its steady state.
    Solve(SolveArgs),
    /// Relax a scenario file to steady state with the fluid queue model.
    Simulate(SimArgs),
    /// Resolution status of the six steady-state scaling requirements.
    Status,
}

#[derive(Args)]
struct Table1Args {
    /// First base RTT, e.g. "200 ms".
    #[arg(long)]
    r1: Option<String>,
    /// Second base RTT, e.g. "2 ms".
    #[arg(long)]
    r2: Option<String>,
    /// Extra queue delay rows, labeled by the literal quantity, e.g. "1 s".
    #[arg(long = "q")]
    q: Vec<String>,
}

#[derive(Args)]
struct FigArgs {
    /// Figure number, 1 to 5.
    #[arg(long)]
    id: u32,
    /// Directory the figN.csv and figN.json files go to.
    #[arg(long, default_value = ".")]
    out: PathBuf,
    #[arg(long)]
    v0: Option<f64>,
    /// Knee RTT, e.g. "500 us".
    #[arg(long)]
    r0: Option<String>,
    #[arg(long)]
    c0: Option<f64>,
    /// Segment size, e.g. "12 kb".
    #[arg(long)]
    segment: Option<String>,
    /// Bit-rate axis low edge, e.g. "100 kb/s".
    #[arg(long)]
    rate_min: Option<String>,
    /// Bit-rate axis high edge, e.g. "100 Gb/s".
    #[arg(long)]
    rate_max: Option<String>,
    /// RTT axis low edge, e.g. "1 us".
    #[arg(long)]
    rtt_min: Option<String>,
    /// RTT axis high edge, e.g. "1 s".
    #[arg(long)]
    rtt_max: Option<String>,
    /// Marking-probability axis low edge.
    #[arg(long)]
    p_min: Option<f64>,
    /// Marking-probability axis high edge.
    #[arg(long)]
    p_max: Option<f64>,
    #[arg(long)]
    points_per_decade: Option<usize>,
}

#[derive(Args)]
struct SolveArgs {
    /// Scenario file (TOML).
    file: PathBuf,
    /// Relative residual tolerance of the bisection.
    #[arg(long)]
    tol: Option<f64>,
    /// Emit the report as JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum AqmModeArg {
    Proportional,
    Step,
}

#[derive(Args)]
struct SimArgs {
    /// Scenario file (TOML).
    file: PathBuf,
    /// Simulated time budget, e.g. "5 s".
    #[arg(long)]
    horizon: Option<String>,
    /// Euler step, e.g. "10 us"; default is a tenth of the shortest base RTT.
    #[arg(long)]
    step: Option<String>,
    /// Run every law on raw p (capped at 1) instead of the virtual-mark
    /// signal 1/u, restoring the rate floors that make signalling saturate.
    #[arg(long)]
    no_virtual_marks: bool,
    /// Write the sampled trajectory as CSV to this path.
    #[arg(long)]
    out: Option<PathBuf>,
    /// AQM target queue delay; default is the scenario queue_delay.
    #[arg(long)]
    target: Option<String>,
    /// AQM proportional gain, marking probability per second of queue excess.
    #[arg(long)]
    gain: Option<f64>,
    #[arg(long, value_enum)]
    aqm_mode: Option<AqmModeArg>,
    /// Starting queue delay, e.g. "0 s".
    #[arg(long)]
    initial_queue: Option<String>,
    /// Trajectory is thinned to at most this many samples.
    #[arg(long)]
    max_samples: Option<usize>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res = match cli.cmd {
        Cmd::Table1(a) => cmd_table1(a),
        Cmd::Fig(a) => cmd_fig(a),
        Cmd::Solve(a) => cmd_solve(a),
        Cmd::Simulate(a) => cmd_simulate(a),
        Cmd::Status => {
            emit(report::status_text());
            Ok(ExitCode::SUCCESS)
        }
    };
    match res {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn cmd_table1(a: Table1Args) -> Result<ExitCode, String> {
    let r1 = match &a.r1 {
        Some(s) => units::parse_time(s)?,
        None => analysis::TABLE1_R1,
    };
    let r2 = match &a.r2 {
        Some(s) => units::parse_time(s)?,
        None => analysis::TABLE1_R2,
    };
    let mut rows: Vec<(&str, f64)> = analysis::TABLE1_QUEUES.to_vec();
    let mut extra: Vec<(String, f64)> = Vec::new();
    for q in &a.q {
        extra.push((q.clone(), units::parse_time(q)?));
    }
    for (label, q) in &extra {
        rows.push((label.as_str(), *q));
    }
    let table = analysis::table1(r1, r2, &rows).map_err(|e| e.to_string())?;
    emit(report::table1_csv(&table));
    Ok(ExitCode::SUCCESS)
}

fn fig_params(a: &FigArgs) -> Result<FigureParams, String> {
    let mut p = FigureParams::default();
    if let Some(v) = a.v0 {
        p.v0 = v;
    }
    if let Some(s) = &a.r0 {
        p.r0 = units::parse_time(s)?;
    }
    if let Some(c) = a.c0 {
        p.c0 = c;
    }
    if let Some(s) = &a.segment {
        p.segment_size = units::parse_size(s)?;
    }
    if let Some(s) = &a.rate_min {
        p.rate_range.0 = units::parse_rate(s)?;
    }
    if let Some(s) = &a.rate_max {
        p.rate_range.1 = units::parse_rate(s)?;
    }
    if let Some(s) = &a.rtt_min {
        p.rtt_range.0 = units::parse_time(s)?;
    }
    if let Some(s) = &a.rtt_max {
        p.rtt_range.1 = units::parse_time(s)?;
    }
    if let Some(x) = a.p_min {
        p.p_range.0 = x;
    }
    if let Some(x) = a.p_max {
        p.p_range.1 = x;
    }
    if let Some(n) = a.points_per_decade {
        p.points_per_decade = n;
    }
    Ok(p)
}

fn cmd_fig(a: FigArgs) -> Result<ExitCode, String> {
    let id = FigureId::try_from(a.id).map_err(|e| e.to_string())?;
    let params = fig_params(&a)?;
    let series = analysis::figure_data(id, &params).map_err(|e| e.to_string())?;
    series.check().map_err(|e| e.to_string())?;

    std::fs::create_dir_all(&a.out).map_err(|e| format!("create {}: {e}", a.out.display()))?;
    let csv_path = a.out.join(format!("fig{}.csv", a.id));
    let json_path = a.out.join(format!("fig{}.json", a.id));
    write_atomic(&csv_path, report::figure_csv(&series).as_bytes())?;
    let json = format!("{:#}\n", report::figure_json(&series));
    write_atomic(&json_path, json.as_bytes())?;

    emit(format!(
        "wrote {} {}\n{}\n",
        csv_path.display(),
        json_path.display(),
        report::figure_summary(&series)
    ));
    Ok(ExitCode::SUCCESS)
}

fn write_atomic(path: &std::path::Path, bytes: &[u8]) -> Result<(), String> {
    let tmp = path.with_extension("tmp");
    std::fs::write(&tmp, bytes).map_err(|e| format!("write {}: {e}", tmp.display()))?;
    std::fs::rename(&tmp, path).map_err(|e| format!("rename {}: {e}", path.display()))
}

fn law_names(scn: &Scenario) -> Vec<&'static str> {
    scn.flows.iter().map(|f| report::law_name(&f.law)).collect()
}

fn cmd_solve(a: SolveArgs) -> Result<ExitCode, String> {
    let scn = scenario::load(&a.file)?;
    let mut cfg = SolverConfig::default();
    if let Some(t) = a.tol {
        cfg.tol = t;
    }
    let eq = if scn.has_classic() {
        solve_dualq(&scn, cfg)
    } else {
        solve_single_queue(&scn, cfg)
    }
    .map_err(|e| e.to_string())?;

    let laws = law_names(&scn);
    if a.json {
        emit(format!("{:#}\n", report::solve_json(&eq, &laws)));
    } else {
        emit(report::solve_text(&eq, &laws));
    }
    if eq.is_saturated() {
        return Ok(ExitCode::from(EXIT_SATURATED));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_simulate(a: SimArgs) -> Result<ExitCode, String> {
    let scn = scenario::load(&a.file)?;
    let mut cfg = SimConfig::new(scn);
    if let Some(s) = &a.horizon {
        cfg.horizon = units::parse_time(s)?;
    }
    if let Some(s) = &a.step {
        cfg.step = Some(units::parse_time(s)?);
    }
    cfg.virtual_marks = !a.no_virtual_marks;
    if let Some(s) = &a.target {
        let t = units::parse_time(s)?;
        cfg.aqm = l4s_steady::fluidsim::AqmConfig::for_target(t);
    }
    if let Some(g) = a.gain {
        cfg.aqm.gain = g;
    }
    if let Some(m) = a.aqm_mode {
        cfg.aqm.mode = match m {
            AqmModeArg::Proportional => AqmMode::Proportional,
            AqmModeArg::Step => AqmMode::Step,
        };
    }
    if let Some(s) = &a.initial_queue {
        cfg.initial_queue = units::parse_time(s)?;
    }
    if let Some(n) = a.max_samples {
        cfg.max_samples = n;
    }

    let laws = law_names(&cfg.scenario);
    let traj = simulate(&cfg).map_err(|e| e.to_string())?;
    if let Some(path) = &a.out {
        write_atomic(path, report::trajectory_csv(&traj).as_bytes())?;
        emit(format!("wrote {}\n", path.display()));
    }
    emit(format!("{}\n", report::verdict_line(&traj)));
    emit(report::final_state_text(&traj, &laws));
    Ok(ExitCode::SUCCESS)
}
