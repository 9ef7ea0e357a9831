//! Command-line harness: configure the verification suites, run them, and
//! emit a structured report.
//!
//! Exit codes: 0 when every check passes, 1 when at least one check fails,
//! 2 for configuration and usage errors.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::Deserialize;

use tps_core::report::{serialize_report, ReportFormat, SuiteConfig, SuiteSelection};
use tps_core::suites::run_suite;

/// Environment variable selecting the worker-pool size (0 or unset: all
/// available cores).
const WORKERS_ENV: &str = "TPS_WORKERS";

#[derive(Debug, Parser)]
#[command(
    name = "tps",
    version,
    about = "Numerical verification of the phase-space geometry"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run verification suites and emit a report
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Config file (TOML, same keys as the flags); flags take precedence
    #[arg(long)]
    config: Option<PathBuf>,

    /// Suite: geometry | connections | statmech | heisenberg | all
    #[arg(long)]
    suite: Option<String>,

    /// Dimension parameters, comma separated (e.g. 1,2,3)
    #[arg(long, value_delimiter = ',')]
    n: Option<Vec<usize>>,

    /// Sampled chart points per check
    #[arg(long)]
    points: Option<usize>,

    /// Seed for the deterministic samplers
    #[arg(long)]
    seed: Option<u64>,

    /// Tolerance for closed-form residuals
    #[arg(long)]
    tol_closed: Option<f64>,

    /// Tolerance for finite-difference residuals
    #[arg(long)]
    tol_fd: Option<f64>,

    /// Statistical model to include (repeatable)
    #[arg(long = "model")]
    models: Vec<String>,

    /// Output format: json | text
    #[arg(long)]
    format: Option<String>,

    /// Output path; stdout when absent
    #[arg(long)]
    out: Option<PathBuf>,
}

/// File-config mirror of the flags.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    suite: Option<String>,
    n: Option<Vec<usize>>,
    points: Option<usize>,
    seed: Option<u64>,
    tol_closed: Option<f64>,
    tol_fd: Option<f64>,
    models: Option<Vec<String>>,
    format: Option<String>,
    out: Option<PathBuf>,
    workers: Option<usize>,
}

fn load_file_config(path: &PathBuf) -> Result<FileConfig> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read config file {}", path.display()))?;
    toml::from_str(&text).with_context(|| format!("bad config file {}", path.display()))
}

fn workers_from_env() -> Result<usize> {
    match std::env::var(WORKERS_ENV) {
        Ok(value) => value
            .parse::<usize>()
            .with_context(|| format!("{WORKERS_ENV} must be a non-negative integer")),
        Err(_) => Ok(0),
    }
}

struct ResolvedRun {
    config: SuiteConfig,
    format: ReportFormat,
    out: Option<PathBuf>,
}

fn resolve(args: &VerifyArgs) -> Result<ResolvedRun> {
    let file = match &args.config {
        Some(path) => load_file_config(path)?,
        None => FileConfig::default(),
    };
    let defaults = SuiteConfig::default();

    let suite_name = args
        .suite
        .clone()
        .or(file.suite)
        .unwrap_or_else(|| "all".to_string());
    let suite = SuiteSelection::parse(&suite_name)?;

    let models = if !args.models.is_empty() {
        args.models.clone()
    } else {
        file.models.unwrap_or(defaults.models)
    };

    let mut workers = workers_from_env()?;
    if workers == 0 {
        workers = file.workers.unwrap_or(0);
    }

    let config = SuiteConfig {
        suite,
        n_values: args.n.clone().or(file.n).unwrap_or(defaults.n_values),
        points: args.points.or(file.points).unwrap_or(defaults.points),
        seed: args.seed.or(file.seed).unwrap_or(defaults.seed),
        tol_closed: args
            .tol_closed
            .or(file.tol_closed)
            .unwrap_or(defaults.tol_closed),
        tol_fd: args.tol_fd.or(file.tol_fd).unwrap_or(defaults.tol_fd),
        models,
        workers,
    };
    config.validate()?;

    let format_name = args
        .format
        .clone()
        .or(file.format)
        .unwrap_or_else(|| "text".to_string());
    let format = ReportFormat::parse(&format_name)?;

    Ok(ResolvedRun {
        config,
        format,
        out: args.out.clone().or(file.out),
    })
}

fn verify(args: &VerifyArgs) -> Result<bool> {
    let run = resolve(args)?;
    let report = run_suite(&run.config)?;
    let rendered = serialize_report(&report, run.format);
    match &run.out {
        Some(path) => std::fs::write(path, rendered)
            .with_context(|| format!("cannot write report to {}", path.display()))?,
        None => print!("{rendered}"),
    }
    Ok(report.all_passed())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match &cli.command {
        Command::Verify(args) => match verify(args) {
            Ok(true) => ExitCode::SUCCESS,
            Ok(false) => ExitCode::from(1),
            Err(error) => {
                eprintln!("error: {error:#}");
                ExitCode::from(2)
            }
        },
    }
}
