//! Argument parsing and execution for the `statespace` scenario runner.
//!
//! Exit codes: 0 on success, 2 for usage or configuration errors, 3 when the
//! report cannot be written.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::Parser;
use statespace::{emit_csv, run_scenario, ScenarioConfig, ScenarioKind};
use thiserror::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "statespace",
    version,
    about = "Run a state-space scenario and write its report as CSV",
    after_help = "Scenarios: interference, correlation-sweep, uncertainty, basis-roundtrip, group-demo"
)]
struct Args {
    /// Scenario to run.
    #[arg(long, value_parser = parse_scenario)]
    scenario: ScenarioKind,

    /// Output file (default: standard output).
    #[arg(long)]
    out: Option<PathBuf>,

    /// Quantum grid cells.
    #[arg(long, default_value_t = ScenarioConfig::DEFAULT_N)]
    n: usize,

    /// Classical position cells (default: n).
    #[arg(long)]
    nx: Option<usize>,

    /// Classical momentum cells.
    #[arg(long, default_value_t = ScenarioConfig::DEFAULT_NP)]
    np: usize,

    #[arg(long, default_value_t = -10.0, allow_negative_numbers = true)]
    xmin: f64,

    #[arg(long, default_value_t = 10.0, allow_negative_numbers = true)]
    xmax: f64,

    #[arg(long, default_value_t = -10.0, allow_negative_numbers = true)]
    pmin: f64,

    #[arg(long, default_value_t = 10.0, allow_negative_numbers = true)]
    pmax: f64,

    /// Wavepacket position spread.
    #[arg(long, default_value_t = 1.0)]
    sigma: f64,

    /// Packet separation.
    #[arg(long, default_value_t = 4.0, allow_negative_numbers = true)]
    d: f64,

    /// Packet mean momentum.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    p0: f64,

    /// Phase applied to the second packet, in radians.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    b: f64,

    /// Phase step of the correlation sweep (default: pi/32).
    #[arg(long, default_value_t = ScenarioConfig::DEFAULT_STEP)]
    step: f64,
}

fn parse_scenario(s: &str) -> Result<ScenarioKind, String> {
    s.parse::<ScenarioKind>().map_err(|e| e.to_string())
}

/// A parsed command line.
#[derive(Debug, Clone, PartialEq)]
pub struct CliConfig {
    pub scenario: ScenarioConfig,
    pub out: Option<PathBuf>,
}

pub fn parse_args<I, T>(argv: I) -> Result<CliConfig, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args = Args::try_parse_from(argv)?;
    let scenario = ScenarioConfig {
        scenario: args.scenario,
        n: args.n,
        nx: args.nx,
        np: args.np,
        x_min: args.xmin,
        x_max: args.xmax,
        p_min: args.pmin,
        p_max: args.pmax,
        sigma: args.sigma,
        d: args.d,
        p0: args.p0,
        phase: args.b,
        step: args.step,
    };
    Ok(CliConfig {
        scenario,
        out: args.out,
    })
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Usage(#[from] statespace::Error),

    #[error("cannot write report to {path}: {source}")]
    Io { path: String, source: io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Io { .. } => EXIT_IO,
        }
    }
}

/// Runs the configured scenario and writes the CSV report.
pub fn execute(config: &CliConfig) -> Result<(), CliError> {
    let report = run_scenario(&config.scenario)?;
    let io_error = |source| CliError::Io {
        path: config
            .out
            .as_ref()
            .map_or_else(|| "<stdout>".to_string(), |p| p.display().to_string()),
        source,
    };
    match &config.out {
        Some(path) => {
            let file = File::create(path).map_err(io_error)?;
            emit_csv(&report, &mut BufWriter::new(file)).map_err(io_error)
        }
        None => {
            let stdout = io::stdout();
            let mut lock = BufWriter::new(stdout.lock());
            emit_csv(&report, &mut lock).map_err(io_error)?;
            lock.flush().map_err(io_error)
        }
    }
}
