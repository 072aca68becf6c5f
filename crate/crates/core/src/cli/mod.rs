//! Command-line front-end.

mod amplitude;
mod config;
mod flow;
mod output;
mod spectrum;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use landau_bohm::verify::{run_suite, Suite, VerifyOptions};

pub use config::Format;
use config::RunConfig;

#[derive(Debug, Parser)]
#[command(name = "landau-bohm", version, about = "Landau-problem amplitudes, flows and spectra with oracle checks")]
pub struct Cli {
    /// JSON file with any of hbar, mass, charge, field, format, tol.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Output file (default stdout).
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Tolerance override for residual checks.
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub tol: Option<f64>,
    #[arg(long, global = true)]
    pub hbar: Option<f64>,
    #[arg(long, global = true)]
    pub mass: Option<f64>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub charge: Option<f64>,
    #[arg(long, global = true)]
    pub field: Option<f64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Energies on a grid of quantum numbers.
    Spectrum(spectrum::SpectrumArgs),
    /// Sector amplitude profile on a grid.
    Amplitude(amplitude::AmplitudeArgs),
    /// Run a verification suite and print a JSON report.
    Verify(VerifyArgs),
    /// Closed-form shifted momentum and azimuthal action.
    Flow(flow::FlowArgs),
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value = "all")]
    pub suite: Suite,
    #[arg(long, hide = true)]
    pub inject_fault: bool,
}

/// Failure of a command, mapped to an exit code.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(std::io::Error),
}

impl From<landau_bohm::Error> for CliError {
    fn from(e: landau_bohm::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

pub fn run(cli: Cli) -> ExitCode {
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(cli: Cli) -> Result<ExitCode, CliError> {
    let cfg = RunConfig::resolve(&cli)?;
    match &cli.command {
        Command::Spectrum(a) => {
            let table = spectrum::run(a, &cfg)?;
            output::emit(&table, &cfg)?;
        }
        Command::Amplitude(a) => {
            let table = amplitude::run(a, &cfg)?;
            output::emit(&table, &cfg)?;
        }
        Command::Flow(a) => {
            let table = flow::run(a, &cfg)?;
            output::emit(&table, &cfg)?;
        }
        Command::Verify(a) => {
            let report = run_suite(a.suite, &VerifyOptions { tol: cfg.tol, inject_fault: a.inject_fault });
            output::write_text(&(report.to_json() + "\n"), cfg.out.as_deref())?;
            if !report.pass {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
