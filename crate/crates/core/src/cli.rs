//! Command-line front end.
//!
//! Every command is a pure function of its arguments (including the seed).
//! Output is a single JSON document or a CSV table with a header row.
//! Exit codes: 0 success, 2 usage or validation error, 3 numerical
//! consistency failure, 4 domain rejection (product or maximally entangled
//! state where the operation needs neither).

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use serde::{Deserialize, Serialize};

use crate::engine::{
    cabello_probs, check_conditions, nogo_verify, Branch, CabelloProbs, ConditionTolerance,
    Settings,
};
use crate::error::{Error, Result};
use crate::lhv::{local_bound_check, quantum_violation, sample_probs, StrategyRow};
use crate::optimize::{
    cos_beta_grid, folded_cos_beta, maximize_gap, optimum_settings, stationarity_residual,
    sweep_points, HardyOptions, MaximizeOptions, OptimumRecord, Stationarity,
};
use crate::quantum::{joint_probability_oracle, Direction, Outcome, SchmidtState};

/// Oracle/closed-form disagreement above which `probs` reports a numerical failure.
pub const ORACLE_DELTA_TOL: f64 = 1e-12;

#[derive(Debug, Parser)]
#[command(name = "cabello", version, about = "Cabello nonlocality for two-qubit pure states")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Joint probabilities q1..q4, trace-oracle deltas and the condition verdict.
    #[command(allow_negative_numbers = true)]
    Probs(ProbsArgs),
    /// Maximize q4 - q1 for one state.
    #[command(allow_negative_numbers = true)]
    Optimize(OptimizeArgs),
    /// Maximize over a grid of cos(beta) values, with the Hardy value per point.
    #[command(allow_negative_numbers = true)]
    Sweep(SweepArgs),
    /// Randomized check that q4 = q1 for the maximally entangled state.
    #[command(allow_negative_numbers = true)]
    Nogo(NogoArgs),
    /// Deterministic-strategy table for the local bound, optionally with a
    /// quantum violation and Monte Carlo estimates.
    #[command(allow_negative_numbers = true)]
    Lhv(LhvArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct StateArgs {
    /// Schmidt angle beta.
    #[arg(long, conflicts_with = "cos_beta")]
    pub beta: Option<f64>,
    /// cos(beta) in [0, 1].
    #[arg(long)]
    pub cos_beta: Option<f64>,
    /// Relative Schmidt phase gamma.
    #[arg(long, default_value_t = 0.0)]
    pub gamma: f64,
}

#[derive(Debug, Clone, Args)]
pub struct SettingsArgs {
    #[arg(long)]
    pub theta_f: Option<f64>,
    #[arg(long)]
    pub theta_d: Option<f64>,
    #[arg(long)]
    pub theta_g: Option<f64>,
    #[arg(long)]
    pub theta_e: Option<f64>,
    #[arg(long, default_value_t = 0.0)]
    pub phi_f: f64,
    #[arg(long, default_value_t = 0.0)]
    pub phi_d: f64,
    #[arg(long, default_value_t = 0.0)]
    pub phi_g: f64,
    #[arg(long, default_value_t = 0.0)]
    pub phi_e: f64,
}

#[derive(Debug, Clone, Args)]
pub struct ProbsArgs {
    #[command(flatten)]
    pub state: StateArgs,
    #[command(flatten)]
    pub settings: SettingsArgs,
    /// Uniform tolerance for every condition clause (default: 1e-12 for the
    /// zero clauses, 1e-9 for the positivity clauses).
    #[arg(long)]
    pub tol: Option<f64>,
    /// Angles (beta, gamma, theta, phi) are given in degrees.
    #[arg(long)]
    pub degrees: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct OptimizeArgs {
    #[command(flatten)]
    pub state: StateArgs,
    /// Sign of cos(phi_D + phi_E - gamma): -1 or +1.
    #[arg(long, default_value = "-1", value_parser = parse_branch)]
    pub branch: Branch,
    /// Coarse grid points per theta axis.
    #[arg(long, default_value_t = 400)]
    pub grid: usize,
    #[arg(long, default_value_t = 1e-10)]
    pub refine_tol: f64,
    #[arg(long)]
    pub degrees: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    /// Number of grid points; cos(beta) = k / (N + 1) for k = 1..N.
    #[arg(long, default_value_t = 99)]
    pub grid: usize,
    /// Coarse grid points per theta axis at each state.
    #[arg(long, default_value_t = 400)]
    pub theta_grid: usize,
    #[arg(long, default_value = "-1", value_parser = parse_branch)]
    pub branch: Branch,
    #[arg(long, default_value_t = 1e-10)]
    pub refine_tol: f64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct NogoArgs {
    #[arg(long, default_value_t = 10_000)]
    pub trials: u64,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct LhvArgs {
    #[command(flatten)]
    pub state: StateArgs,
    #[command(flatten)]
    pub settings: SettingsArgs,
    /// Monte Carlo trials per observable pair (needs a state and settings).
    #[arg(long)]
    pub trials: Option<u64>,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long)]
    pub degrees: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

fn parse_branch(s: &str) -> std::result::Result<Branch, String> {
    match s.trim() {
        "-1" | "minus" | "-" => Ok(Branch::Minus),
        "+1" | "1" | "plus" | "+" => Ok(Branch::Plus),
        other => Err(format!("branch must be -1 or +1, got {other:?}")),
    }
}

/// Rendered command output and the exit code it should produce.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rendered {
    pub text: String,
    pub exit_code: i32,
}

impl Rendered {
    fn ok(text: String) -> Self {
        Self { text, exit_code: 0 }
    }
}

pub fn run(cli: &Cli) -> Result<Rendered> {
    match &cli.command {
        Command::Probs(a) => cmd_probs(a),
        Command::Optimize(a) => cmd_optimize(a),
        Command::Sweep(a) => cmd_sweep(a),
        Command::Nogo(a) => cmd_nogo(a),
        Command::Lhv(a) => cmd_lhv(a),
    }
}

pub fn output_args(cli: &Cli) -> &OutputArgs {
    match &cli.command {
        Command::Probs(a) => &a.output,
        Command::Optimize(a) => &a.output,
        Command::Sweep(a) => &a.output,
        Command::Nogo(a) => &a.output,
        Command::Lhv(a) => &a.output,
    }
}

fn angle(v: f64, degrees: bool) -> f64 {
    if degrees {
        v.to_radians()
    } else {
        v
    }
}

fn parse_state(args: &StateArgs, degrees: bool) -> Result<Option<SchmidtState>> {
    let gamma = angle(args.gamma, degrees);
    match (args.beta, args.cos_beta) {
        (Some(_), Some(_)) => Err(Error::invalid("give exactly one of --beta and --cos-beta")),
        (Some(b), None) => SchmidtState::new(angle(b, degrees), gamma).map(Some),
        (None, Some(c)) => SchmidtState::from_cos_beta(c, gamma).map(Some),
        (None, None) => Ok(None),
    }
}

fn require_state(args: &StateArgs, degrees: bool) -> Result<SchmidtState> {
    parse_state(args, degrees)?.ok_or_else(|| Error::invalid("one of --beta or --cos-beta is required"))
}

fn parse_settings(args: &SettingsArgs, degrees: bool) -> Result<Option<Settings>> {
    let thetas = [args.theta_f, args.theta_d, args.theta_g, args.theta_e];
    if thetas.iter().all(Option::is_none) {
        return Ok(None);
    }
    let [Some(tf), Some(td), Some(tg), Some(te)] = thetas else {
        return Err(Error::invalid(
            "all of --theta-f, --theta-d, --theta-g, --theta-e are required",
        ));
    };
    let dir = |t: f64, p: f64| Direction::new(angle(t, degrees), angle(p, degrees));
    Ok(Some(Settings {
        f: dir(tf, args.phi_f)?,
        d: dir(td, args.phi_d)?,
        g: dir(tg, args.phi_g)?,
        e: dir(te, args.phi_e)?,
    }))
}

fn csv_float(v: f64) -> String {
    format!("{v:.16e}")
}

fn csv_table(header: &[&str], rows: &[Vec<String>]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::invalid(format!("csv: {e}"));
    w.write_record(header).map_err(io)?;
    for r in rows {
        w.write_record(r).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::invalid(format!("csv: {e}")))?;
    String::from_utf8(bytes).map_err(|e| Error::invalid(format!("csv: {e}")))
}

fn json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)
        .map_err(|e| Error::Numerical(format!("json: {e}")))?;
    s.push('\n');
    Ok(s)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StateReport {
    pub beta: f64,
    pub cos_beta: f64,
    pub gamma: f64,
}

impl From<&SchmidtState> for StateReport {
    fn from(s: &SchmidtState) -> Self {
        Self {
            beta: s.beta(),
            cos_beta: s.cos_beta(),
            gamma: s.gamma(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProbsReport {
    pub state: StateReport,
    pub settings: Settings,
    pub probs: CabelloProbs,
    /// Trace-oracle values for (F+,G+), (D+,G-), (F-,E+), (D+,E+).
    pub oracle: [f64; 4],
    pub oracle_delta: [f64; 4],
    pub max_oracle_delta: f64,
    pub gap: f64,
    pub local_violation: f64,
    pub verdict: String,
    pub holds: bool,
}

pub fn probs_report(state: &SchmidtState, settings: &Settings, tol: ConditionTolerance) -> Result<ProbsReport> {
    use Outcome::*;
    let probs = cabello_probs(state, settings);
    let s = settings;
    let oracle = [
        joint_probability_oracle(state, &s.f, Plus, &s.g, Plus)?,
        joint_probability_oracle(state, &s.d, Plus, &s.g, Minus)?,
        joint_probability_oracle(state, &s.f, Minus, &s.e, Plus)?,
        joint_probability_oracle(state, &s.d, Plus, &s.e, Plus)?,
    ];
    let closed = probs.as_array();
    let oracle_delta: [f64; 4] = std::array::from_fn(|k| (closed[k] - oracle[k]).abs());
    let verdict = check_conditions(&probs, tol);
    Ok(ProbsReport {
        state: state.into(),
        settings: *settings,
        probs,
        oracle,
        oracle_delta,
        max_oracle_delta: oracle_delta.iter().copied().fold(0.0, f64::max),
        gap: probs.gap(),
        local_violation: probs.local_violation(),
        verdict: verdict.to_string(),
        holds: verdict.holds(),
    })
}

fn cmd_probs(a: &ProbsArgs) -> Result<Rendered> {
    let state = require_state(&a.state, a.degrees)?;
    let settings = parse_settings(&a.settings, a.degrees)?
        .ok_or_else(|| Error::invalid("probs needs --theta-f, --theta-d, --theta-g, --theta-e"))?;
    let tol = match a.tol {
        Some(t) if t > 0.0 && t.is_finite() => ConditionTolerance::uniform(t),
        Some(t) => return Err(Error::invalid(format!("--tol must be positive, got {t}"))),
        None => ConditionTolerance::default(),
    };
    let r = probs_report(&state, &settings, tol)?;
    let text = match a.output.format {
        Format::Json => json(&r)?,
        Format::Csv => {
            let mut row = vec![csv_float(r.state.beta), csv_float(r.state.gamma)];
            row.extend(r.probs.as_array().map(csv_float));
            row.extend(r.oracle_delta.map(csv_float));
            row.push(csv_float(r.gap));
            row.push(csv_float(r.local_violation));
            row.push(r.verdict.clone());
            csv_table(
                &[
                    "beta", "gamma", "q1", "q2", "q3", "q4", "delta_q1", "delta_q2", "delta_q3",
                    "delta_q4", "gap", "local_violation", "verdict",
                ],
                &[row],
            )?
        }
    };
    let exit_code = if r.max_oracle_delta > ORACLE_DELTA_TOL { 3 } else { 0 };
    Ok(Rendered { text, exit_code })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OptimizeReport {
    pub record: OptimumRecord,
    pub folded_cos_beta: f64,
    /// Full settings realizing the optimum at the requested gamma.
    pub settings: Settings,
    pub stationarity: Stationarity,
    pub note: Option<String>,
}

const SWEEP_HEADER: [&str; 14] = [
    "index",
    "beta",
    "cos_beta",
    "cabello_gap",
    "hardy_value",
    "theta_d_star",
    "theta_e_star",
    "q1_star",
    "q4_star",
    "stationarity_residual",
    "branch",
    "symmetric_optimum",
    "no_go",
    "error",
];

fn record_row(index: usize, r: &OptimumRecord) -> Vec<String> {
    vec![
        index.to_string(),
        csv_float(r.beta),
        csv_float(r.cos_beta),
        csv_float(r.gap_star),
        csv_float(r.hardy_star),
        csv_float(r.theta_d_star),
        csv_float(r.theta_e_star),
        csv_float(r.q1_star),
        csv_float(r.q4_star),
        csv_float(r.stationarity_residual),
        r.branch.to_string(),
        r.symmetric_optimum.to_string(),
        r.no_go.to_string(),
        String::new(),
    ]
}

fn cmd_optimize(a: &OptimizeArgs) -> Result<Rendered> {
    let state = require_state(&a.state, a.degrees)?;
    let opts = MaximizeOptions {
        grid_size: a.grid,
        refine_tol: a.refine_tol,
        branch: a.branch,
        hardy: HardyOptions::default(),
    };
    let record = maximize_gap(state.beta(), &opts)?;
    let settings = optimum_settings(&record, state.gamma())?.settings;
    let stationarity = if record.no_go {
        Stationarity {
            analytic: [0.0; 2],
            finite_difference: [0.0; 2],
        }
    } else {
        stationarity_residual(record.beta, record.theta_d_star, record.theta_e_star, record.branch)?
    };
    let note = record.no_go.then(|| {
        "maximally entangled state: q4 = q1 for every setting with q2 = q3 = 0".to_string()
    });
    let report = OptimizeReport {
        folded_cos_beta: folded_cos_beta(record.beta),
        record,
        settings,
        stationarity,
        note,
    };
    let text = match a.output.format {
        Format::Json => json(&report)?,
        Format::Csv => csv_table(&SWEEP_HEADER, &[record_row(0, &report.record)])?,
    };
    Ok(Rendered::ok(text))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub index: usize,
    pub beta: f64,
    pub cos_beta: f64,
    pub record: Option<OptimumRecord>,
    pub error: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepArgmax {
    pub index: usize,
    pub cos_beta: f64,
    /// cos(beta) of the equivalent state with cos(beta) <= 1/sqrt(2).
    pub folded_cos_beta: f64,
    pub cabello_gap: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub branch: Branch,
    pub rows: Vec<SweepRow>,
    pub argmax: Option<SweepArgmax>,
    pub hardy_max: Option<f64>,
    pub failures: usize,
}

pub fn sweep_report(grid: usize, opts: &MaximizeOptions) -> Result<SweepReport> {
    let betas = cos_beta_grid(grid)?;
    let results = sweep_points(&betas, opts);
    let rows: Vec<SweepRow> = betas
        .iter()
        .zip(results)
        .enumerate()
        .map(|(index, (&beta, r))| {
            let (record, error) = match r {
                Ok(rec) => (Some(rec), None),
                Err(e) => (None, Some(e.to_string())),
            };
            SweepRow {
                index,
                beta,
                cos_beta: beta.cos(),
                record,
                error,
            }
        })
        .collect();

    let mut argmax: Option<SweepArgmax> = None;
    let mut hardy_max: Option<f64> = None;
    for row in &rows {
        let Some(rec) = &row.record else { continue };
        if argmax.map_or(true, |m| rec.gap_star > m.cabello_gap) {
            argmax = Some(SweepArgmax {
                index: row.index,
                cos_beta: rec.cos_beta,
                folded_cos_beta: folded_cos_beta(rec.beta),
                cabello_gap: rec.gap_star,
            });
        }
        hardy_max = Some(hardy_max.map_or(rec.hardy_star, |h: f64| h.max(rec.hardy_star)));
    }
    let failures = rows.iter().filter(|r| r.error.is_some()).count();
    Ok(SweepReport {
        branch: opts.branch,
        rows,
        argmax,
        hardy_max,
        failures,
    })
}

fn cmd_sweep(a: &SweepArgs) -> Result<Rendered> {
    let opts = MaximizeOptions {
        grid_size: a.theta_grid,
        refine_tol: a.refine_tol,
        branch: a.branch,
        hardy: HardyOptions::default(),
    };
    let report = sweep_report(a.grid, &opts)?;
    let text = match a.output.format {
        Format::Json => json(&report)?,
        Format::Csv => {
            let rows: Vec<Vec<String>> = report
                .rows
                .iter()
                .map(|row| match (&row.record, &row.error) {
                    (Some(rec), _) => record_row(row.index, rec),
                    (None, err) => {
                        let mut v = vec![row.index.to_string(), csv_float(row.beta), csv_float(row.cos_beta)];
                        v.extend(std::iter::repeat(String::new()).take(SWEEP_HEADER.len() - 4));
                        v.push(err.clone().unwrap_or_default());
                        v
                    }
                })
                .collect();
            csv_table(&SWEEP_HEADER, &rows)?
        }
    };
    let exit_code = if report.failures > 0 { 4 } else { 0 };
    Ok(Rendered { text, exit_code })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NogoWorst {
    pub trial: u64,
    pub gamma: f64,
    pub theta_d: f64,
    pub theta_e: f64,
    pub phi_d: f64,
    pub phi_e: f64,
    pub q1: f64,
    pub q4: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NogoSummary {
    pub beta: f64,
    pub trials: u64,
    pub seed: u64,
    pub max_abs_gap: f64,
    /// Largest q2 or q3 seen; both should vanish on the sampled family.
    pub max_zero_clause: f64,
    pub worst: Option<NogoWorst>,
}

/// Samples `(γ, θ_D, θ_E, φ_D, φ_E)` uniformly from `ChaCha20Rng(seed)` and
/// records the largest `|q4 − q1|`. The draws for `n` trials are a prefix of
/// those for any larger `n`.
pub fn nogo_sweep(trials: u64, seed: u64) -> Result<NogoSummary> {
    use std::f64::consts::{FRAC_PI_4, PI, TAU};
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let mut max_abs_gap: f64 = 0.0;
    let mut max_zero_clause: f64 = 0.0;
    let mut worst = None;
    for trial in 0..trials {
        let gamma = rng.random_range(0.0..TAU);
        let theta_d = rng.random_range(0.0..=PI);
        let theta_e = rng.random_range(0.0..=PI);
        let phi_d = rng.random_range(0.0..TAU);
        let phi_e = rng.random_range(0.0..TAU);
        let r = nogo_verify(gamma, theta_d, theta_e, phi_d, phi_e)?;
        max_zero_clause = max_zero_clause.max(r.probs.q2).max(r.probs.q3);
        if worst.is_none() || r.gap.abs() > max_abs_gap {
            max_abs_gap = max_abs_gap.max(r.gap.abs());
            worst = Some(NogoWorst {
                trial,
                gamma,
                theta_d,
                theta_e,
                phi_d,
                phi_e,
                q1: r.probs.q1,
                q4: r.probs.q4,
            });
        }
    }
    Ok(NogoSummary {
        beta: FRAC_PI_4,
        trials,
        seed,
        max_abs_gap,
        max_zero_clause,
        worst,
    })
}

fn cmd_nogo(a: &NogoArgs) -> Result<Rendered> {
    let s = nogo_sweep(a.trials, a.seed)?;
    let text = match a.output.format {
        Format::Json => json(&s)?,
        Format::Csv => csv_table(
            &["beta", "trials", "seed", "max_abs_gap", "max_zero_clause"],
            &[vec![
                csv_float(s.beta),
                s.trials.to_string(),
                s.seed.to_string(),
                csv_float(s.max_abs_gap),
                csv_float(s.max_zero_clause),
            ]],
        )?,
    };
    Ok(Rendered::ok(text))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ViolationBlock {
    pub state: StateReport,
    pub probs: CabelloProbs,
    /// q4 - q1 - q2 - q3.
    pub violation: f64,
    pub gap: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MonteCarloBlock {
    pub seed: u64,
    pub trials_per_pair: u64,
    /// Counts of (F+,G+), (D+,G-), (F-,E+), (D+,E+).
    pub event_counts: [u64; 4],
    pub estimates: CabelloProbs,
    pub exact: CabelloProbs,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LhvReport {
    pub all_hold: bool,
    pub strategies: Vec<StrategyRow>,
    pub quantum: Option<ViolationBlock>,
    pub monte_carlo: Option<MonteCarloBlock>,
}

fn cmd_lhv(a: &LhvArgs) -> Result<Rendered> {
    let bound = local_bound_check();
    let state = parse_state(&a.state, a.degrees)?;
    let settings = parse_settings(&a.settings, a.degrees)?;
    let pair = match (state, settings) {
        (Some(st), Some(se)) => Some((st, se)),
        (None, None) => None,
        _ => return Err(Error::invalid("lhv needs both a state and full settings, or neither")),
    };
    if a.trials.is_some() && pair.is_none() {
        return Err(Error::invalid("--trials needs a state and settings"));
    }

    let quantum = pair.map(|(st, se)| {
        let probs = cabello_probs(&st, &se);
        ViolationBlock {
            state: (&st).into(),
            probs,
            violation: quantum_violation(&st, &se),
            gap: probs.gap(),
        }
    });
    let monte_carlo = match (a.trials, pair) {
        (Some(n), Some((st, se))) => {
            let stats = sample_probs(&st, &se, n, a.seed)?;
            Some(MonteCarloBlock {
                seed: a.seed,
                trials_per_pair: n,
                event_counts: stats.event_counts(),
                estimates: stats.estimates(),
                exact: cabello_probs(&st, &se),
            })
        }
        _ => None,
    };

    let report = LhvReport {
        all_hold: bound.all_hold,
        strategies: bound.per_strategy,
        quantum,
        monte_carlo,
    };
    let text = match a.output.format {
        Format::Json => json(&report)?,
        Format::Csv => {
            let rows: Vec<Vec<String>> = report
                .strategies
                .iter()
                .map(|r| {
                    let s = r.strategy;
                    vec![
                        s.f.to_string(),
                        s.d.to_string(),
                        s.g.to_string(),
                        s.e.to_string(),
                        r.lhs.to_string(),
                        r.rhs.to_string(),
                        r.holds.to_string(),
                    ]
                })
                .collect();
            csv_table(&["F", "D", "G", "E", "lhs", "rhs", "holds"], &rows)?
        }
    };
    Ok(Rendered::ok(text))
}
