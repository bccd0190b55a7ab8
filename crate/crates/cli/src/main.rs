//! Command-line front end: reads instance files, writes JSON reports.
//!
//! Exit codes: 0 success (whatever the verdict), 1 self-check failure,
//! 2 input error, 3 size limit exceeded.

mod instance;
mod selfcheck;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use symtensor::combinatorics::Limits;
use symtensor::decision::{decide_equality, gamas_nonvanishing, gamas_standard, DecideOptions};
use symtensor::tensor::symmetrize;
use symtensor::{character_table, ColumnSystem, Tableau};

use crate::instance::ProblemInstance;

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Limit(String),
    SelfcheckFailed,
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::SelfcheckFailed => 1,
            CliError::Input(_) => 2,
            CliError::Limit(_) => 3,
        }
    }
}

impl From<symtensor::Error> for CliError {
    fn from(e: symtensor::Error) -> Self {
        match e {
            symtensor::Error::LimitExceeded { .. } => CliError::Limit(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

#[derive(Parser)]
#[command(name = "symtensor", version, about = "Exact symmetrized decomposable tensors over the rationals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Write the report here instead of stdout.
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
    /// Largest degree n accepted by factorial-size enumerations.
    #[arg(long, value_name = "INT", default_value_t = Limits::DEFAULT_MAX_N)]
    max_n: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether v^⊗T_λ is nonzero.
    Gamas {
        #[arg(long, value_name = "PATH")]
        input: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Decide whether v^⊗T_λ = u^⊗T_λ.
    Equal {
        #[arg(long, value_name = "PATH")]
        input: PathBuf,
        /// Report every failing column system instead of stopping at the first.
        #[arg(long)]
        exhaustive_failures: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Compute v^⊗T_λ.
    Symmetrize {
        #[arg(long, value_name = "PATH")]
        input: PathBuf,
        /// Emit only dim, order and the number of nonzero entries.
        #[arg(long)]
        shape_only: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Print the character table of S_n.
    Characters {
        #[arg(long, value_name = "N")]
        n: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Cross-check deciders against the tensor oracle on random instances.
    Selfcheck {
        #[arg(long, value_name = "N")]
        n: usize,
        #[arg(long, value_name = "K", default_value_t = 20)]
        trials: usize,
        #[arg(long, value_name = "S", default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Serialize)]
struct GamasReport {
    nonzero: bool,
    witness_system: Option<ColumnSystem>,
    standard_witness: Option<Tableau>,
}

#[derive(Serialize)]
struct TensorShape {
    dim: usize,
    order: usize,
    nnz: usize,
}

fn emit<T: Serialize>(value: &T, output: Option<&Path>) -> Result<(), CliError> {
    let mut text = serde_json::to_string(value).map_err(|e| CliError::Input(e.to_string()))?;
    text.push('\n');
    match output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display()))),
        None => std::io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Input(format!("stdout: {e}"))),
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Gamas { input, common } => {
            let limits = Limits::new(common.max_n);
            let inst = ProblemInstance::load(&input)?;
            let witness_system = gamas_nonvanishing(&inst.v, &inst.lambda, limits)?;
            let standard_witness = gamas_standard(&inst.v, &inst.lambda, limits)?;
            let report = GamasReport { nonzero: witness_system.is_some(), witness_system, standard_witness };
            emit(&report, common.output.as_deref())
        }
        Command::Equal { input, exhaustive_failures, common } => {
            let inst = ProblemInstance::load(&input)?;
            let u = inst.u.as_ref().ok_or_else(|| CliError::Input("instance has no \"u\" family".into()))?;
            let options = DecideOptions { limits: Limits::new(common.max_n), exhaustive_failures };
            let verdict = decide_equality(&inst.v, u, &inst.lambda, options)?;
            emit(&verdict, common.output.as_deref())
        }
        Command::Symmetrize { input, shape_only, common } => {
            let inst = ProblemInstance::load(&input)?;
            let tensor = symmetrize(&inst.v, &inst.lambda, Limits::new(common.max_n))?;
            if shape_only {
                let shape = TensorShape { dim: tensor.dim(), order: tensor.order(), nnz: tensor.nnz() };
                emit(&shape, common.output.as_deref())
            } else {
                emit(&tensor, common.output.as_deref())
            }
        }
        Command::Characters { n, common } => {
            if n == 0 {
                return Err(CliError::Input("--n must be positive".into()));
            }
            Limits::new(common.max_n).check(n)?;
            emit(&character_table(n)?, common.output.as_deref())
        }
        Command::Selfcheck { n, trials, seed, common } => {
            if n == 0 {
                return Err(CliError::Input("--n must be positive".into()));
            }
            let report = selfcheck::run(n, trials, seed, Limits::new(common.max_n))?;
            emit(&report, common.output.as_deref())?;
            if report.passed {
                Ok(())
            } else {
                Err(CliError::SelfcheckFailed)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            match &e {
                CliError::Input(msg) => eprintln!("error: {msg}"),
                CliError::Limit(msg) => eprintln!("error: {msg}"),
                CliError::SelfcheckFailed => eprintln!("error: self-check found failing properties"),
            }
            ExitCode::from(e.exit_code())
        }
    }
}
