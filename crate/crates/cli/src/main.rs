use std::fs;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use hqmm_cli::commands::{
    lift_check_summary, run_compare, run_emit_qubit, run_lift, run_sweep_theta, run_validate,
    run_verify_paper,
};
use hqmm_cli::{CliError, CliResult, FileKind, LogBase};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum LogBaseArg {
    Nat,
    Bit,
}

impl From<LogBaseArg> for LogBase {
    fn from(value: LogBaseArg) -> Self {
        match value {
            LogBaseArg::Nat => LogBase::Nat,
            LogBaseArg::Bit => LogBase::Bit,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FileKindArg {
    Model,
    Hmm,
    Effects,
}

impl From<FileKindArg> for FileKind {
    fn from(value: FileKindArg) -> Self {
        match value {
            FileKindArg::Model => FileKind::Model,
            FileKindArg::Hmm => FileKind::Hmm,
            FileKindArg::Effects => FileKind::Effects,
        }
    }
}

/// Hidden quantum Markov models under two causal architectures.
#[derive(Debug, Parser)]
#[command(name = "hqmm", version, about)]
struct Cli {
    /// Tolerance for Hermiticity, positivity and normalisation checks.
    #[arg(long, global = true, default_value_t = 1e-10)]
    tol: f64,

    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = hqmm_core::DEFAULT_SEED)]
    seed: u64,

    /// Base for entropy columns (natural log or bits).
    #[arg(long, global = true, value_enum, default_value_t = LogBaseArg::Nat)]
    log_base: LogBaseArg,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a model, hmm, or effects file and report its shape.
    Validate {
        path: PathBuf,
        /// Skip autodetection and validate as this kind.
        #[arg(long, value_enum)]
        kind: Option<FileKindArg>,
    },
    /// Write the qubit model at a given angle as a model file.
    EmitQubit {
        #[arg(long)]
        theta: f64,
        /// Number of repeated steps in the emitted model.
        #[arg(long, default_value_t = 1)]
        steps: usize,
        #[arg(long, default_value = "conventional")]
        architecture: String,
    },
    /// Evaluate an effects file against a model under both architectures.
    Compare {
        model: PathBuf,
        effects: PathBuf,
    },
    /// Scan the qubit model across an angle range and emit per-angle columns.
    SweepTheta {
        #[arg(long, default_value_t = std::f64::consts::PI / 16.0)]
        min: f64,
        #[arg(long, default_value_t = 15.0 * std::f64::consts::PI / 16.0)]
        max: f64,
        #[arg(long, default_value_t = 33)]
        steps: usize,
    },
    /// Lift a classical HMM file to a model file.
    Lift {
        hmm: PathBuf,
        /// Truncate a per-step chain, or replicate a single-step one.
        #[arg(long)]
        steps: Option<usize>,
        #[arg(long, default_value = "conventional")]
        architecture: String,
        /// Run a randomized architecture-agreement check with this many
        /// trials per step (summary goes to standard error).
        #[arg(long, default_value_t = 0)]
        check: usize,
    },
    /// Recompute the closed-form claims of the qubit analysis.
    VerifyPaper {
        /// Single angle to check.
        #[arg(long, conflicts_with = "grid")]
        theta: Option<f64>,
        /// Check the default 33-point angle grid.
        #[arg(long)]
        grid: bool,
    },
}

fn read(path: &PathBuf) -> CliResult<String> {
    fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn run(cli: Cli) -> CliResult<()> {
    let tol = cli.tol;
    let log_base = LogBase::from(cli.log_base);
    match cli.command {
        Command::Validate { path, kind } => {
            let text = read(&path)?;
            print!("{}", run_validate(&text, kind.map(Into::into), tol)?);
        }
        Command::EmitQubit {
            theta,
            steps,
            architecture,
        } => {
            print!("{}", run_emit_qubit(theta, steps, &architecture)?);
        }
        Command::Compare { model, effects } => {
            let model_text = read(&model)?;
            let effects_text = read(&effects)?;
            print!("{}", run_compare(&model_text, &effects_text, tol)?);
        }
        Command::SweepTheta { min, max, steps } => {
            print!("{}", run_sweep_theta(min, max, steps, log_base)?);
        }
        Command::Lift {
            hmm,
            steps,
            architecture,
            check,
        } => {
            let text = read(&hmm)?;
            print!("{}", run_lift(&text, steps, &architecture, tol)?);
            if check > 0 {
                eprint!("{}", lift_check_summary(&text, check, cli.seed, tol)?);
            }
        }
        Command::VerifyPaper { theta, grid } => {
            print!("{}", run_verify_paper(theta, grid, tol, log_base)?);
        }
    }
    Ok(())
}

fn main() {
    let cli = Cli::parse();
    if let Err(err) = run(cli) {
        eprintln!("error: {err}");
        std::process::exit(err.exit_code());
    }
}
