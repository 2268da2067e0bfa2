//! Command-line front end: parses a run configuration, runs the simulation or
//! sweep, and writes a CSV table plus a JSON manifest.
//!
//! Output is deterministic: fixed column order, reals printed with 17
//! significant digits in scientific notation, `\n` line endings.
//!
//! Exit statuses: 0 success, 1 usage error, 2 I/O failure, 3 invariant violation.

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;
use thiserror::Error;

use crate::error::WalkError;
use crate::experiments::{
    check_norm, check_q1_closed_form, pi_fraction_grid, sweep_sigma_vs_inverse_period, sweep_sigma_vs_steps,
    sweep_sigma_vs_theta, theta_grid, TrendThresholds, DEFAULT_PERIODS, DEFAULT_STEPS, DEFAULT_THETA_DIVISIONS,
};
use crate::observables::{distribution, moments, symmetry_residual};
use crate::potential::PotentialProfile;
use crate::state::initial_state;

#[derive(Debug, Error)]
pub enum CliError {
    /// Help, version, or a malformed command line straight from the parser.
    #[error("{0}")]
    Parse(#[from] clap::Error),
    #[error("usage error: {flag}: {message}")]
    Usage { flag: &'static str, message: String },
    #[error("i/o error: {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("invariant violation: {0}")]
    Invariant(WalkError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(e) if !e.use_stderr() => 0,
            CliError::Parse(_) | CliError::Usage { .. } => 1,
            CliError::Io { .. } => 2,
            CliError::Invariant(_) => 3,
        }
    }
}

impl From<WalkError> for CliError {
    fn from(e: WalkError) -> Self {
        match e {
            WalkError::InvalidInput(message) => CliError::Usage { flag: "input", message },
            other => CliError::Invariant(other),
        }
    }
}

fn usage(flag: &'static str, message: impl Into<String>) -> CliError {
    CliError::Usage { flag, message: message.into() }
}

#[derive(Debug, Parser)]
#[command(name = "qwalk", version, about = "Quantum walks on a line in a periodic potential")]
struct Cli {
    #[command(subcommand)]
    command: CliCommand,
}

#[derive(Debug, Subcommand)]
enum CliCommand {
    /// Probability distribution after N steps (`position,probability`).
    Simulate(RawArgs),
    /// σ against the number of steps (`n,sigma`).
    SweepSteps(RawArgs),
    /// σ against θ (`theta,sigma`).
    SweepTheta(RawArgs),
    /// σ against the inverse period (`q,inv_q,sigma`).
    SweepPeriod(RawArgs),
    /// σ²/N² of the q = 1 walk against 1 - |cos θ| (`theta,sigma2_over_N2,law,residual`).
    CheckQ1(RawArgs),
}

/// Flags shared by every subcommand; which forms are legal depends on the command.
#[derive(Debug, Args)]
struct RawArgs {
    /// Period: an integer, or for sweep-period a range `a:b` or list `a,b,c`.
    #[arg(long, allow_hyphen_values = true)]
    q: Option<String>,
    /// Angle in radians: a number, or for grid commands `start:stop:count` or a list.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "theta_pi")]
    theta: Option<String>,
    /// Like --theta, in multiples of π (0.25 means π/4).
    #[arg(long = "theta-pi", allow_hyphen_values = true)]
    theta_pi: Option<String>,
    /// Step count, or for sweep-steps a range `a:b`, `a:b:stride` or list.
    #[arg(long, allow_hyphen_values = true)]
    steps: Option<String>,
    /// CSV destination; the manifest goes next to it. Without it CSV goes to stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

/// A fully validated run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunConfig {
    pub command: Command,
    pub output_path: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Command {
    Simulate { q: u32, theta: f64, steps: usize },
    SweepSteps { q: u32, theta: f64, steps: Vec<usize> },
    SweepTheta { q: u32, thetas: Vec<f64>, steps: usize },
    SweepPeriod { theta: f64, periods: Vec<u32>, steps: usize },
    CheckQ1 { thetas: Vec<f64>, steps: usize },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Simulate { .. } => "simulate",
            Command::SweepSteps { .. } => "sweep-steps",
            Command::SweepTheta { .. } => "sweep-theta",
            Command::SweepPeriod { .. } => "sweep-period",
            Command::CheckQ1 { .. } => "check-q1",
        }
    }
}

/// Parses `argv` (without the program name) into a validated config.
pub fn parse_args<I, T>(argv: I) -> Result<RunConfig, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv = std::iter::once(OsString::from("qwalk")).chain(argv.into_iter().map(Into::into));
    let cli = Cli::try_parse_from(argv)?;
    let (raw, command) = match cli.command {
        CliCommand::Simulate(raw) => {
            let command = Command::Simulate {
                q: single_period(raw.q.as_deref())?,
                theta: single_angle(&raw)?,
                steps: single_steps(raw.steps.as_deref(), 100, 0)?,
            };
            (raw, command)
        }
        CliCommand::SweepSteps(raw) => {
            let command = Command::SweepSteps {
                q: single_period(raw.q.as_deref())?,
                theta: single_angle(&raw)?,
                steps: step_list(raw.steps.as_deref())?,
            };
            (raw, command)
        }
        CliCommand::SweepTheta(raw) => {
            let command = Command::SweepTheta {
                q: single_period(raw.q.as_deref())?,
                thetas: angle_grid(&raw, || pi_fraction_grid(0..=2 * DEFAULT_THETA_DIVISIONS))?,
                steps: single_steps(raw.steps.as_deref(), DEFAULT_STEPS, 1)?,
            };
            (raw, command)
        }
        CliCommand::SweepPeriod(raw) => {
            let command = Command::SweepPeriod {
                theta: single_angle(&raw)?,
                periods: period_list(raw.q.as_deref())?,
                steps: single_steps(raw.steps.as_deref(), DEFAULT_STEPS, 1)?,
            };
            (raw, command)
        }
        CliCommand::CheckQ1(raw) => {
            if raw.q.as_deref().is_some_and(|q| q.trim() != "1") {
                return Err(usage("--q", "check-q1 always runs with q = 1"));
            }
            let command = Command::CheckQ1 {
                thetas: angle_grid(&raw, || pi_fraction_grid(1..=2 * DEFAULT_THETA_DIVISIONS - 1))?,
                steps: single_steps(raw.steps.as_deref(), DEFAULT_STEPS, 100)?,
            };
            (raw, command)
        }
    };
    Ok(RunConfig { command, output_path: raw.out })
}

fn parse_num<T: std::str::FromStr>(flag: &'static str, text: &str) -> Result<T, CliError> {
    text.trim()
        .parse()
        .map_err(|_| usage(flag, format!("cannot parse {text:?}")))
}

fn parse_period(text: &str) -> Result<u32, CliError> {
    let q: i64 = parse_num("--q", text)?;
    if q < 1 {
        return Err(usage("--q", format!("period must be at least 1, got {q}")));
    }
    u32::try_from(q).map_err(|_| usage("--q", format!("period {q} too large")))
}

fn single_period(text: Option<&str>) -> Result<u32, CliError> {
    parse_period(text.ok_or_else(|| usage("--q", "required"))?)
}

fn period_list(text: Option<&str>) -> Result<Vec<u32>, CliError> {
    let Some(text) = text else {
        return Ok(DEFAULT_PERIODS.collect());
    };
    if let Some((a, b)) = text.split_once(':') {
        let (a, b) = (parse_period(a)?, parse_period(b)?);
        if a > b {
            return Err(usage("--q", format!("empty range {text:?}")));
        }
        return Ok((a..=b).collect());
    }
    text.split(',').map(parse_period).collect()
}

fn parse_steps(text: &str, min: usize) -> Result<usize, CliError> {
    let n: i64 = parse_num("--steps", text)?;
    if n < min as i64 {
        return Err(usage("--steps", format!("must be at least {min}, got {n}")));
    }
    Ok(n as usize)
}

fn single_steps(text: Option<&str>, default: usize, min: usize) -> Result<usize, CliError> {
    text.map_or(Ok(default), |t| parse_steps(t, min))
}

fn step_list(text: Option<&str>) -> Result<Vec<usize>, CliError> {
    let Some(text) = text else {
        return Ok((1..=DEFAULT_STEPS).collect());
    };
    let parts: Vec<&str> = text.split(':').collect();
    match parts.as_slice() {
        [single] => single.split(',').map(|s| parse_steps(s, 1)).collect(),
        [a, b] | [a, b, _] => {
            let (a, b) = (parse_steps(a, 1)?, parse_steps(b, 1)?);
            let stride = match parts.get(2) {
                Some(s) => parse_steps(s, 1)?,
                None => 1,
            };
            if a > b {
                return Err(usage("--steps", format!("empty range {text:?}")));
            }
            Ok((a..=b).step_by(stride).collect())
        }
        _ => Err(usage("--steps", format!("expected n, a:b or a:b:stride, got {text:?}"))),
    }
}

/// The angle flag in use, with the factor that converts its values to radians.
fn angle_flag(raw: &RawArgs) -> Option<(&'static str, &str, f64)> {
    match (&raw.theta, &raw.theta_pi) {
        (Some(t), _) => Some(("--theta", t.as_str(), 1.0)),
        (None, Some(t)) => Some(("--theta-pi", t.as_str(), std::f64::consts::PI)),
        (None, None) => None,
    }
}

fn parse_angle(flag: &'static str, text: &str, scale: f64) -> Result<f64, CliError> {
    let v: f64 = parse_num(flag, text)?;
    if !v.is_finite() {
        return Err(usage(flag, format!("angle must be finite, got {text:?}")));
    }
    Ok(v * scale)
}

fn single_angle(raw: &RawArgs) -> Result<f64, CliError> {
    let (flag, text, scale) = angle_flag(raw).ok_or_else(|| usage("--theta", "required (or --theta-pi)"))?;
    parse_angle(flag, text, scale)
}

fn angle_grid(raw: &RawArgs, default: impl FnOnce() -> Vec<f64>) -> Result<Vec<f64>, CliError> {
    let Some((flag, text, scale)) = angle_flag(raw) else {
        return Ok(default());
    };
    let parts: Vec<&str> = text.split(':').collect();
    match parts.as_slice() {
        [list] => list.split(',').map(|t| parse_angle(flag, t, scale)).collect(),
        [start, stop, count] => {
            let count: i64 = parse_num(flag, count)?;
            if count < 2 {
                return Err(usage(flag, format!("grid count must be at least 2, got {count}")));
            }
            let (start, stop) = (parse_angle(flag, start, 1.0)?, parse_angle(flag, stop, 1.0)?);
            let grid = theta_grid(start, stop, count as usize).map_err(|e| usage(flag, e.to_string()))?;
            Ok(grid.into_iter().map(|t| t * scale).collect())
        }
        _ => Err(usage(flag, format!("expected a value, a list, or start:stop:count, got {text:?}"))),
    }
}

/// Shortest unambiguous form would vary with the value; this one never does.
fn real(v: f64) -> String {
    format!("{v:.16e}")
}

/// CSV text plus the summary numbers that go into the manifest.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub csv: String,
    pub rows: usize,
    pub summary: serde_json::Value,
}

/// Runs the configured computation without touching the filesystem.
pub fn compute(command: &Command) -> Result<Table, CliError> {
    let mut csv = String::new();
    let (rows, summary) = match command {
        Command::Simulate { q, theta, steps } => {
            let profile = PotentialProfile::new(*q, *theta)?;
            let mut state = initial_state((*steps).max(1))?;
            state.evolve(&profile, *steps)?;
            check_norm(&state)?;
            let dist = distribution(&state);
            csv.push_str("position,probability\n");
            for (x, p) in dist.iter() {
                writeln!(csv, "{x},{}", real(p)).expect("string write");
            }
            let m = moments(&dist);
            let summary = serde_json::json!({
                "mean": m.mean,
                "sigma": m.sigma,
                "symmetry_residual": symmetry_residual(&dist),
                "norm": state.norm_sqr(),
            });
            (dist.positions.len(), summary)
        }
        Command::SweepSteps { q, theta, steps } => {
            let r = sweep_sigma_vs_steps(*q, *theta, steps)?;
            csv.push_str("n,sigma\n");
            for (&n, s) in steps.iter().zip(&r.sigma) {
                writeln!(csv, "{n},{}", real(*s)).expect("string write");
            }
            (steps.len(), serde_json::json!({ "fit": r.fit().ok() }))
        }
        Command::SweepTheta { q, thetas, steps } => {
            let r = sweep_sigma_vs_theta(*q, thetas, *steps)?;
            csv.push_str("theta,sigma\n");
            for (t, s) in r.rows() {
                writeln!(csv, "{},{}", real(t), real(s)).expect("string write");
            }
            (thetas.len(), serde_json::Value::Null)
        }
        Command::SweepPeriod { theta, periods, steps } => {
            let r = sweep_sigma_vs_inverse_period(*theta, periods, *steps)?;
            csv.push_str("q,inv_q,sigma\n");
            for ((q, inv), s) in periods.iter().zip(&r.independent).zip(&r.sigma) {
                writeln!(csv, "{q},{},{}", real(*inv), real(*s)).expect("string write");
            }
            (periods.len(), serde_json::json!({ "fit": r.fit().ok() }))
        }
        Command::CheckQ1 { thetas, steps } => {
            let table = check_q1_closed_form(thetas, *steps)?;
            csv.push_str("theta,sigma2_over_N2,law,residual\n");
            for row in &table {
                writeln!(
                    csv,
                    "{},{},{},{}",
                    real(row.theta),
                    real(row.sigma2_over_n2),
                    real(row.law),
                    real(row.residual)
                )
                .expect("string write");
            }
            let max_residual = table.iter().map(|r| r.residual).fold(0.0, f64::max);
            (table.len(), serde_json::json!({ "max_residual": max_residual }))
        }
    };
    Ok(Table { csv, rows, summary })
}

#[derive(Debug, Serialize)]
struct Manifest<'a> {
    tool: &'static str,
    version: &'static str,
    config: &'a RunConfig,
    csv_path: &'a Path,
    rows: usize,
    thresholds: TrendThresholds,
    summary: &'a serde_json::Value,
    wall_clock_seconds: f64,
}

/// Manifest path for a CSV destination: `out.csv` becomes `out.manifest.json`.
pub fn manifest_path(csv_path: &Path) -> PathBuf {
    csv_path.with_extension("manifest.json")
}

fn write_file(path: &Path, contents: &[u8]) -> Result<(), CliError> {
    std::fs::write(path, contents).map_err(|source| CliError::Io { path: path.to_owned(), source })
}

/// Runs `config`, writing the CSV (and manifest, when writing to a file).
pub fn run(config: &RunConfig, stdout: &mut dyn std::io::Write) -> Result<(), CliError> {
    let started = Instant::now();
    let table = compute(&config.command)?;
    match &config.output_path {
        None => stdout
            .write_all(table.csv.as_bytes())
            .map_err(|source| CliError::Io { path: PathBuf::from("<stdout>"), source }),
        Some(path) => {
            write_file(path, table.csv.as_bytes())?;
            let manifest = Manifest {
                tool: "qwalk",
                version: env!("CARGO_PKG_VERSION"),
                config,
                csv_path: path,
                rows: table.rows,
                thresholds: TrendThresholds::default(),
                summary: &table.summary,
                wall_clock_seconds: started.elapsed().as_secs_f64(),
            };
            let mut json = serde_json::to_string_pretty(&manifest).expect("manifest serializes");
            json.push('\n');
            write_file(&manifest_path(path), json.as_bytes())
        }
    }
}

/// Entry point for the binary; returns the process exit status.
pub fn main_with_args<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let result = parse_args(argv).and_then(|config| run(&config, &mut std::io::stdout().lock()));
    match result {
        Ok(()) => 0,
        Err(CliError::Parse(e)) => {
            let _ = e.print();
            CliError::Parse(e).exit_code()
        }
        Err(e) => {
            eprintln!("qwalk: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn parse(args: &[&str]) -> Result<RunConfig, CliError> {
        parse_args(args.iter().copied())
    }

    #[test]
    fn simulate_config() {
        let c = parse(&["simulate", "--q", "4", "--theta", "0.5236", "--steps", "100", "--out", "d.csv"]).unwrap();
        assert_eq!(c.output_path, Some(PathBuf::from("d.csv")));
        let Command::Simulate { q, theta, steps } = c.command else { panic!("wrong command") };
        assert_eq!((q, steps), (4, 100));
        assert!((theta - PI / 6.0).abs() < 1e-4);
    }

    #[test]
    fn sweep_period_config() {
        let c = parse(&["sweep-period", "--theta", "1.0472", "--q", "1:10", "--steps", "200"]).unwrap();
        let Command::SweepPeriod { theta, periods, steps } = c.command else { panic!("wrong command") };
        assert_eq!(periods, (1..=10).collect::<Vec<_>>());
        assert_eq!(steps, 200);
        assert!((theta - PI / 3.0).abs() < 1e-4);
    }

    #[test]
    fn usage_errors_name_the_flag() {
        let e = parse(&["simulate", "--q", "0"]).unwrap_err();
        assert_eq!(e.exit_code(), 1);
        assert!(e.to_string().contains("--q"), "{e}");

        let e = parse(&["simulate", "--q", "2", "--theta", "abc"]).unwrap_err();
        assert!(e.to_string().contains("--theta"), "{e}");

        let e = parse(&["simulate", "--q", "2", "--theta", "0.1", "--steps", "-3"]).unwrap_err();
        assert!(e.to_string().contains("--steps"), "{e}");

        let e = parse(&["simulate", "--bogus", "1"]).unwrap_err();
        assert_eq!(e.exit_code(), 1);
        assert!(e.to_string().contains("--bogus"), "{e}");

        let e = parse(&["sweep-theta", "--q", "2", "--theta", "0:1:1"]).unwrap_err();
        assert!(e.to_string().contains("count"), "{e}");

        assert_eq!(parse(&["check-q1", "--steps", "50"]).unwrap_err().exit_code(), 1);
    }

    #[test]
    fn help_exits_zero() {
        assert_eq!(parse(&["--help"]).unwrap_err().exit_code(), 0);
    }

    #[test]
    fn theta_pi_flag_and_grids() {
        let c = parse(&["sweep-theta", "--q", "2", "--theta-pi", "0:2:5"]).unwrap();
        let Command::SweepTheta { thetas, .. } = c.command else { panic!("wrong command") };
        assert_eq!(thetas.len(), 5);
        assert!((thetas[1] - PI / 2.0).abs() < 1e-15);
        assert!((thetas[4] - 2.0 * PI).abs() < 1e-15);

        let c = parse(&["simulate", "--q", "1", "--theta-pi", "0.25"]).unwrap();
        let Command::Simulate { theta, steps, .. } = c.command else { panic!("wrong command") };
        assert!((theta - PI / 4.0).abs() < 1e-15);
        assert_eq!(steps, 100);

        assert!(parse(&["simulate", "--q", "1", "--theta", "1", "--theta-pi", "1"]).is_err());
    }

    #[test]
    fn step_lists() {
        let c = parse(&["sweep-steps", "--q", "1", "--theta", "1", "--steps", "10,20,30"]).unwrap();
        let Command::SweepSteps { steps, .. } = c.command else { panic!("wrong command") };
        assert_eq!(steps, vec![10, 20, 30]);
        let c = parse(&["sweep-steps", "--q", "1", "--theta", "1", "--steps", "50:200:50"]).unwrap();
        let Command::SweepSteps { steps, .. } = c.command else { panic!("wrong command") };
        assert_eq!(steps, vec![50, 100, 150, 200]);
    }

    #[test]
    fn defaults_follow_figure_grids() {
        let c = parse(&["check-q1"]).unwrap();
        let Command::CheckQ1 { thetas, steps } = c.command else { panic!("wrong command") };
        assert_eq!((thetas.len(), steps), (47, 200));
        let c = parse(&["sweep-period", "--theta-pi", "0.25"]).unwrap();
        let Command::SweepPeriod { periods, .. } = c.command else { panic!("wrong command") };
        assert_eq!(periods, (1..=10).collect::<Vec<_>>());
    }

    #[test]
    fn ballistic_sweep_row() {
        let table = compute(&Command::SweepSteps { q: 1, theta: PI / 2.0, steps: vec![10] }).unwrap();
        let lines: Vec<&str> = table.csv.lines().collect();
        assert_eq!(lines[0], "n,sigma");
        let sigma: f64 = lines[1].split(',').nth(1).unwrap().parse().unwrap();
        assert!((sigma - 10.0).abs() < 1e-10);
        assert_eq!(lines.len(), 2);
    }

    #[test]
    fn real_format_has_seventeen_digits() {
        assert_eq!(real(0.1), "1.0000000000000001e-1");
        assert_eq!(real(100.0), "1.0000000000000000e2");
        assert_eq!(real(0.1).parse::<f64>().unwrap(), 0.1);
    }

    #[test]
    fn manifest_sits_next_to_csv() {
        assert_eq!(manifest_path(Path::new("out/d.csv")), PathBuf::from("out/d.manifest.json"));
    }
}
