//! Command-line front end: one experiment per invocation, driven by a TOML
//! config file.

mod config;
mod manifest;
mod run;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

pub use config::{
    EstimatesSection, Experiment, ExperimentConfig, FracOperator, FracopsSection, GronwallSection,
    InitialData, LimitCheckSection, SpecfunSection, SpecialFunction, Tolerances, ENV_PREFIX,
};
pub use manifest::Manifest;
pub use run::{
    grid, initial_data, limit_check, ml_policy, read_signal_csv, run, solver_config, LimitCheck,
    LimitRow, RunOutcome,
};

use crate::error::Error;

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_CONFIG: u8 = 2;
pub const EXIT_NUMERICAL: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "tfns", version, about = "Time-fractional Navier–Stokes experiments on the periodic torus")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// March the mild formulation and write diagnostics and snapshots
    Simulate(CommonArgs),
    /// Compare fractional runs with the classical solver as alpha → 1
    LimitCheck(CommonArgs),
    /// Solve twice from distinct Picard initializations and measure the gap
    Uniqueness(CommonArgs),
    /// Power inequality, GNS and maximal-regularity ratios
    Estimates(CommonArgs),
    /// Gronwall inequality on the difference of two perturbed runs
    GronwallCheck(CommonArgs),
    /// Evaluate special functions on a parameter grid
    Specfun(CommonArgs),
    /// Apply a Caputo derivative or RL integral to a sampled signal
    Fracops(CommonArgs),
}

#[derive(Debug, clap::Args)]
pub struct CommonArgs {
    /// TOML config file; defaults are used when omitted
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Output directory (overrides `output_dir`)
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Seed for random initial data and ensembles
    #[arg(long)]
    pub seed: Option<u64>,
    /// Worker threads for parallel sections
    #[arg(long)]
    pub threads: Option<usize>,
}

impl Command {
    pub fn split(&self) -> (Experiment, &CommonArgs) {
        match self {
            Command::Simulate(a) => (Experiment::Simulate, a),
            Command::LimitCheck(a) => (Experiment::LimitCheck, a),
            Command::Uniqueness(a) => (Experiment::Uniqueness, a),
            Command::Estimates(a) => (Experiment::Estimates, a),
            Command::GronwallCheck(a) => (Experiment::GronwallCheck, a),
            Command::Specfun(a) => (Experiment::Specfun, a),
            Command::Fracops(a) => (Experiment::Fracops, a),
        }
    }
}

/// Exit status for an error: 2 for configuration problems, 3 for numerical
/// failures, 1 otherwise.
pub fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Config { .. } | Error::Domain(_) => EXIT_CONFIG,
        e if e.is_numerical() => EXIT_NUMERICAL,
        _ => EXIT_FAILURE,
    }
}

fn execute(cli: &Cli) -> crate::Result<RunOutcome> {
    let (experiment, args) = cli.command.split();
    let (mut cfg, raw) = ExperimentConfig::load(args.config.as_deref())?;
    match cfg.experiment {
        Some(e) if e != experiment => {
            return Err(Error::Config {
                key: "experiment".into(),
                message: format!("config selects `{}` but `{}` was invoked", e.name(), experiment.name()),
            })
        }
        _ => cfg.experiment = Some(experiment),
    }
    if let Some(dir) = &args.output {
        cfg.output_dir = dir.clone();
    }
    if let Some(seed) = args.seed {
        if let InitialData::RandomBandlimited { seed: s, .. } = &mut cfg.initial_data {
            *s = seed;
        }
        cfg.estimates.seed = seed;
    }
    if let Some(n) = args.threads {
        if n == 0 {
            return Err(Error::Config { key: "--threads".into(), message: "must be at least 1".into() });
        }
        // a second initialization in the same process is harmless
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    cfg.validate()?;
    run(&cfg, &raw)
}

/// Parses arguments, runs the experiment and maps errors to exit codes.
pub fn main_with_args<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK });
        }
    };
    match execute(&cli) {
        Ok(outcome) => {
            println!("wrote {} artifacts to {}", outcome.files.len() + 2, outcome.output_dir.display());
            ExitCode::from(EXIT_OK)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
