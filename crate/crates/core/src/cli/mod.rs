//! Command-line front end.
//!
//! Subcommands: `solve` (solution curve), `coeffs` (coefficient table),
//! `radius` (radius sequence), `validate` (comparison against an oracle) and
//! `figures` (parameter sweeps, one CSV per panel). All tables are CSV with a
//! header row; summary lines are appended as `# ` comments.

pub mod figures;

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::format::{fmt_f64, parse_number, parse_number_list, write_atomic, CsvTable, Series, SvgPlot};
use crate::oracles::{abm_solve, exact_beta1_bernoulli, highprec_coefficients, ValidationReport, MIN_DIGITS};
use crate::radius::DEFAULT_RADIUS_TERMS;
use crate::series::{uniform_grid, DEFAULT_TAIL_TOL};
use crate::{
    closed_c1, closed_c2, closed_c3, compute_coefficients, radius_sequence, raw_coefficient, Error,
    ProblemSpec, Result, SeriesSolution,
};

pub use figures::{panel, panel_names, write_panel, Panel, PanelKind, Sweep};

/// Number of series terms for solution curves.
pub const DEFAULT_SOLUTION_TERMS: usize = 200;
pub const DEFAULT_SAMPLES: usize = 500;
pub const DEFAULT_ABM_STEPS: usize = 8192;

/// Environment variable capping worker threads.
pub const THREADS_ENV: &str = "FRAC_BERNOULLI_THREADS";

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "frac-bernoulli", version, about = "Series solutions of D^β u + a0 u = a1 u^(p+1)")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate the truncated series on a uniform grid (CSV `t,u`).
    Solve(SolveArgs),
    /// Print normalized coefficients (CSV `n,d_n,sign,log10_abs_c_n`).
    Coeffs(CoeffsArgs),
    /// Radius-of-convergence sequence (CSV `n,r_n`).
    Radius(RadiusArgs),
    /// Compare the series against an independent oracle.
    Validate(ValidateArgs),
    /// Regenerate the figure panels as CSV (and optionally SVG).
    Figures(FiguresArgs),
}

/// Problem parameters. Values accept expressions such as `1/3` or `sqrt(1/3)`.
#[derive(Debug, Clone, Args)]
pub struct SpecArgs {
    #[arg(long, default_value = "1/2", allow_hyphen_values = true)]
    pub beta: String,
    #[arg(long, default_value = "-1", allow_hyphen_values = true)]
    pub a0: String,
    #[arg(long, default_value = "-1", allow_hyphen_values = true)]
    pub a1: String,
    #[arg(long, default_value_t = 1)]
    pub p: usize,
    #[arg(long, default_value = "1/2", allow_hyphen_values = true)]
    pub u0: String,
}

impl SpecArgs {
    pub fn to_spec(&self) -> Result<ProblemSpec> {
        ProblemSpec::new(
            parse_number(&self.beta)?,
            parse_number(&self.a0)?,
            parse_number(&self.a1)?,
            self.p,
            parse_number(&self.u0)?,
        )
    }
}

#[derive(Debug, Clone, Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub spec: SpecArgs,
    #[arg(long, default_value_t = DEFAULT_SOLUTION_TERMS)]
    pub n_terms: usize,
    /// Right end of the grid; defaults to the safe range for a 1e-10 tail.
    #[arg(long)]
    pub t_max: Option<String>,
    #[arg(long, default_value_t = DEFAULT_SAMPLES)]
    pub samples: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub svg: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct CoeffsArgs {
    #[command(flatten)]
    pub spec: SpecArgs,
    #[arg(long, default_value_t = DEFAULT_SOLUTION_TERMS)]
    pub n_terms: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct RadiusArgs {
    #[command(flatten)]
    pub spec: SpecArgs,
    #[arg(long, default_value_t = DEFAULT_RADIUS_TERMS)]
    pub n_terms: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub svg: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OracleKind {
    /// Closed-form solution, requires beta = 1.
    Beta1,
    /// Fractional Adams–Bashforth–Moulton solver.
    Abm,
    /// Extended-precision rerun of the recursion.
    Highprec,
    /// Closed formulas for c_1, c_2, c_3.
    Closed,
}

impl OracleKind {
    fn name(self) -> &'static str {
        match self {
            OracleKind::Beta1 => "beta1",
            OracleKind::Abm => "abm",
            OracleKind::Highprec => "highprec",
            OracleKind::Closed => "closed",
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct ValidateArgs {
    #[command(flatten)]
    pub spec: SpecArgs,
    #[arg(long, value_enum)]
    pub oracle: OracleKind,
    #[arg(long, default_value_t = DEFAULT_SOLUTION_TERMS)]
    pub n_terms: usize,
    #[arg(long)]
    pub t_max: Option<String>,
    #[arg(long, default_value_t = DEFAULT_SAMPLES)]
    pub samples: usize,
    /// ABM grid size.
    #[arg(long, default_value_t = DEFAULT_ABM_STEPS)]
    pub steps: usize,
    /// Decimal digits for the extended-precision oracle.
    #[arg(long, default_value_t = MIN_DIGITS)]
    pub digits: u32,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct FiguresArgs {
    /// Panel name (`f1-left` … `f7-right`) or `all`.
    #[arg(long, default_value = "all")]
    pub panel: String,
    /// Directory receiving `<panel>.csv`.
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
    /// Directory receiving `<panel>.svg`.
    #[arg(long)]
    pub svg: Option<PathBuf>,
    /// Override the β sweep, e.g. `1,1/2,1/3`.
    #[arg(long)]
    pub betas: Option<String>,
    #[arg(long)]
    pub u0s: Option<String>,
    #[arg(long)]
    pub ps: Option<String>,
    /// Series terms (default 200 for solution panels, 300 for radius panels).
    #[arg(long)]
    pub n_terms: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_SAMPLES)]
    pub samples: usize,
    #[arg(long)]
    pub t_max: Option<String>,
}

/// Result of a successful run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Done,
    ValidationFailed,
}

/// Parses `std::env::args`, runs, and returns the process exit code.
pub fn main() -> i32 {
    let config = RunConfig::parse();
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    exit_code(run(&config, &mut lock))
}

pub fn exit_code(result: Result<Outcome>) -> i32 {
    match result {
        Ok(Outcome::Done) => EXIT_OK,
        Ok(Outcome::ValidationFailed) => EXIT_VALIDATION_FAILED,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::InvalidSpec(_) | Error::Parse(_) | Error::Domain { .. } | Error::InvalidGrid(_) => EXIT_USAGE,
                _ => 1,
            }
        }
    }
}

/// Executes one subcommand; CSV without `--out` goes to `stdout`.
pub fn run(config: &RunConfig, stdout: &mut dyn Write) -> Result<Outcome> {
    match &config.command {
        Command::Solve(a) => solve(a, stdout),
        Command::Coeffs(a) => coeffs(a, stdout),
        Command::Radius(a) => radius(a, stdout),
        Command::Validate(a) => validate(a, stdout),
        Command::Figures(a) => figures::run(a, stdout),
    }
}

fn emit(table: &CsvTable, out: Option<&Path>, stdout: &mut dyn Write) -> Result<()> {
    let text = table.render();
    match out {
        Some(path) => write_atomic(path, &text),
        None => Ok(stdout.write_all(text.as_bytes())?),
    }
}

fn parse_opt(v: &Option<String>) -> Result<Option<f64>> {
    v.as_deref().map(parse_number).transpose()
}

fn series_for(spec: &ProblemSpec, n_terms: usize) -> Result<SeriesSolution> {
    let table = compute_coefficients(spec, n_terms)?;
    if let Some(n) = table.overflow_at() {
        eprintln!("warning: coefficients overflow at n = {n}; series truncated");
    }
    Ok(SeriesSolution::from_table(&table))
}

fn resolve_t_max(sol: &SeriesSolution, t_max: &Option<String>) -> Result<f64> {
    let t = match parse_opt(t_max)? {
        Some(t) => t,
        None => sol.safe_t_max(DEFAULT_TAIL_TOL),
    };
    if !(t >= 0.0 && t.is_finite()) {
        // constant series: no natural range
        return if t == f64::INFINITY { Ok(1.0) } else { Err(Error::Domain { function: "t-max", value: t }) };
    }
    Ok(t)
}

fn solve(a: &SolveArgs, stdout: &mut dyn Write) -> Result<Outcome> {
    let spec = a.spec.to_spec()?;
    let sol = series_for(&spec, a.n_terms)?;
    let t_max = resolve_t_max(&sol, &a.t_max)?;
    let grid = uniform_grid(t_max, a.samples);
    let values = sol.evaluate_grid(&grid)?;
    let mut table = CsvTable::new(["t", "u"]);
    for (t, u) in grid.iter().zip(&values) {
        table.push_numbers(&[*t, *u]);
    }
    emit(&table, a.out.as_deref(), stdout)?;
    if let Some(svg) = &a.svg {
        let plot = SvgPlot {
            title: spec_title(&spec),
            x_label: "t".into(),
            y_label: "u(t)".into(),
            series: vec![Series { label: "u".into(), points: grid.into_iter().zip(values).collect() }],
        };
        write_atomic(svg, &plot.render())?;
    }
    Ok(Outcome::Done)
}

fn coeffs(a: &CoeffsArgs, stdout: &mut dyn Write) -> Result<Outcome> {
    let spec = a.spec.to_spec()?;
    let table = compute_coefficients(&spec, a.n_terms)?;
    let mut csv = CsvTable::new(["n", "d_n", "sign", "log10_abs_c_n"]);
    for n in 0..table.valid_len() {
        let c = raw_coefficient(&table, 1, n)?;
        csv.rows.push(vec![
            n.to_string(),
            fmt_f64(table.d1()[n]),
            c.sign().to_string(),
            fmt_f64(if c.is_zero() { f64::NEG_INFINITY } else { c.log10_abs() }),
        ]);
    }
    if let Some(n) = table.overflow_at() {
        csv.trailer.push(format!("overflow_at={n}"));
    }
    emit(&csv, a.out.as_deref(), stdout)?;
    Ok(Outcome::Done)
}

fn radius(a: &RadiusArgs, stdout: &mut dyn Write) -> Result<Outcome> {
    let spec = a.spec.to_spec()?;
    let table = compute_coefficients(&spec, a.n_terms)?;
    let limit = table.valid_len().saturating_sub(1).min(a.n_terms);
    let seq = radius_sequence(&table, limit)?;
    let mut csv = CsvTable::new(["n", "r_n"]);
    for &(n, r) in &seq.entries {
        csv.rows.push(vec![n.to_string(), fmt_f64(r)]);
    }
    csv.trailer.push(format!("tail_summary={}", fmt_f64(seq.tail_summary)));
    emit(&csv, a.out.as_deref(), stdout)?;
    if let Some(svg) = &a.svg {
        let plot = SvgPlot {
            title: spec_title(&spec),
            x_label: "n".into(),
            y_label: "r_n".into(),
            series: vec![Series {
                label: "r_n".into(),
                points: seq.entries.iter().map(|&(n, r)| (n as f64, r)).collect(),
            }],
        };
        write_atomic(svg, &plot.render())?;
    }
    Ok(Outcome::Done)
}

/// Acceptance thresholds of the `validate` subcommand.
pub mod tolerance {
    /// Sup-norm error against the `β = 1` closed form.
    pub const BETA1_ABS: f64 = 1e-8;
    /// Sup-norm difference against the ABM solver.
    pub const ABM_ABS: f64 = 1e-3;
    /// Error against extended precision, relative to `1 + |u|`.
    pub const HIGHPREC_REL: f64 = 1e-9;
    pub const CLOSED_REL: f64 = 1e-10;
    pub const CLOSED_ABS: f64 = 1e-12;
}

/// Builds a validation report for one oracle and decides PASS/FAIL.
pub fn validate_spec(
    spec: &ProblemSpec,
    oracle: OracleKind,
    n_terms: usize,
    t_max: Option<f64>,
    samples: usize,
    steps: usize,
    digits: u32,
) -> Result<(ValidationReport, bool, f64)> {
    let sol = series_for(spec, n_terms)?;
    let t_max = match t_max {
        Some(t) => t,
        None => resolve_t_max(&sol, &None)?,
    };
    let grid = uniform_grid(t_max, samples);
    match oracle {
        OracleKind::Beta1 => {
            let values = sol.evaluate_grid(&grid)?;
            let rows = grid
                .iter()
                .zip(values)
                .map(|(&t, u)| Ok((t, u, exact_beta1_bernoulli(spec, t)?)))
                .collect::<Result<Vec<_>>>()?;
            let r = ValidationReport::from_points(oracle.name(), rows);
            let pass = r.max_abs_err <= tolerance::BETA1_ABS;
            Ok((r, pass, tolerance::BETA1_ABS))
        }
        OracleKind::Abm => {
            let nodes = abm_solve(spec, t_max, steps)?;
            let stride = (steps / samples.max(2).saturating_sub(1)).max(1);
            let rows = nodes
                .iter()
                .enumerate()
                .filter(|(j, _)| j % stride == 0 || *j == steps)
                .map(|(_, &(t, u))| Ok((t, sol.evaluate(t)?, u)))
                .collect::<Result<Vec<_>>>()?;
            let r = ValidationReport::from_points(oracle.name(), rows);
            let pass = r.max_abs_err <= tolerance::ABM_ABS;
            Ok((r, pass, tolerance::ABM_ABS))
        }
        OracleKind::Highprec => {
            let hp = highprec_coefficients(spec, sol.order(), digits)?;
            let rows = grid
                .iter()
                .map(|&t| Ok((t, sol.evaluate(t)?, hp.evaluate(t)?)))
                .collect::<Result<Vec<_>>>()?;
            let r = ValidationReport::from_points(oracle.name(), rows);
            let pass = r
                .per_point
                .iter()
                .all(|&(_, s, o)| (s - o).abs() <= tolerance::HIGHPREC_REL * (1.0 + o.abs()));
            Ok((r, pass, tolerance::HIGHPREC_REL))
        }
        OracleKind::Closed => {
            let table = compute_coefficients(spec, 3)?;
            let closed = [closed_c1(spec), closed_c2(spec), closed_c3(spec)];
            let rows = (1..=3)
                .map(|n| Ok((n as f64, raw_coefficient(&table, 1, n)?.to_real(), closed[n - 1])))
                .collect::<Result<Vec<_>>>()?;
            let r = ValidationReport::from_points(oracle.name(), rows);
            let pass = r.per_point.iter().all(|&(_, s, o)| {
                let d = (s - o).abs();
                d <= tolerance::CLOSED_REL * o.abs() || d <= tolerance::CLOSED_ABS
            });
            Ok((r, pass, tolerance::CLOSED_REL))
        }
    }
}

fn validate(a: &ValidateArgs, stdout: &mut dyn Write) -> Result<Outcome> {
    let spec = a.spec.to_spec()?;
    let (report, pass, tol) =
        validate_spec(&spec, a.oracle, a.n_terms, parse_opt(&a.t_max)?, a.samples, a.steps, a.digits)?;
    let x = if a.oracle == OracleKind::Closed { "n" } else { "t" };
    let mut csv = CsvTable::new([x, "series", "oracle", "abs_err"]);
    for &(t, s, o) in &report.per_point {
        csv.push_numbers(&[t, s, o, (s - o).abs()]);
    }
    let summary = format!(
        "{} oracle={} max_abs_err={} max_rel_err={} tol={}",
        if pass { "PASS" } else { "FAIL" },
        report.oracle_name,
        fmt_f64(report.max_abs_err),
        fmt_f64(report.max_rel_err),
        fmt_f64(tol)
    );
    csv.trailer.push(summary.clone());
    emit(&csv, a.out.as_deref(), stdout)?;
    if a.out.is_some() {
        writeln!(stdout, "{summary}")?;
    }
    Ok(if pass { Outcome::Done } else { Outcome::ValidationFailed })
}

fn spec_title(spec: &ProblemSpec) -> String {
    format!(
        "beta={} a0={} a1={} p={} u0={}",
        short(spec.beta),
        short(spec.a0),
        short(spec.a1),
        spec.p,
        short(spec.u0)
    )
}

/// Compact label form of a parameter value.
pub(crate) fn short(v: f64) -> String {
    let s = format!("{v:.4}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".into()
    } else {
        s.to_string()
    }
}

pub(crate) fn threads_from_env() -> Option<usize> {
    std::env::var(THREADS_ENV).ok()?.trim().parse().ok().filter(|&n| n > 0)
}

pub(crate) fn parse_list_opt(v: &Option<String>) -> Result<Option<Vec<f64>>> {
    v.as_deref().map(parse_number_list).transpose()
}
