//! Command-line front end: machine files, complexity reports, sweeps,
//! sampling and the correlation games.
//!
//! Exit status is 0 on success, 1 for domain or contract errors (bad
//! parameters, invalid machines) and 2 for I/O, parse and usage errors.

mod report;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use qcomplexity::games;
use qcomplexity::process::{self, EpsilonMachine, ProcessFamily};
use qcomplexity::qmachine::{self, complexity_sweep_with, uniform_grid};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] qcomplexity::Error),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("writing output: {0}")]
    Output(#[from] std::io::Error),
    /// The input was read fine but fails a check the command performs.
    #[error("{0}")]
    Rejected(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) if e.is_parse_error() => 2,
            CliError::Core(_) | CliError::Rejected(_) => 1,
            CliError::Io { .. } | CliError::Output(_) => 2,
        }
    }
}

type CliResult<T = ()> = Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(
    name = "qcomplexity",
    version,
    about = "Classical and quantum memory costs of processes, and correlation games"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Inspect a machine file.
    #[command(subcommand)]
    Machine(MachineCommand),
    /// Print C_mu and C_q of a machine file (after minimization).
    Complexity { file: PathBuf },
    /// Sweep a built-in family over an evenly spaced grid of p and write CSV.
    Sweep(SweepArgs),
    /// Sample a symbol sequence from a built-in family.
    Sample(SampleArgs),
    /// Evaluate a correlation game.
    #[command(subcommand)]
    Game(GameCommand),
}

#[derive(Debug, Subcommand)]
pub enum MachineCommand {
    /// Check normalization, probability ranges and strong connectivity.
    Validate { file: PathBuf },
    /// Merge equivalent states and print the result as a machine file.
    Minimize {
        file: PathBuf,
        /// Write here instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Print the stationary distribution over states.
    Stationary { file: PathBuf },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    And,
    Xor,
}

impl From<Family> for ProcessFamily {
    fn from(f: Family) -> Self {
        match f {
            Family::And => ProcessFamily::And,
            Family::Xor => ProcessFamily::Xor,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Csv,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    /// Number of grid points on [0, 1], endpoints included.
    #[arg(long)]
    pub grid: usize,
    /// Add columns for the unminimized five-state machine.
    #[arg(long)]
    pub raw_topology: bool,
    /// Write here instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SampleArgs {
    #[arg(long, value_enum, default_value = "and")]
    pub family: Family,
    #[arg(long)]
    pub p: f64,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Subcommand)]
pub enum GameCommand {
    /// Two-site AND game via CHSH correlations on a Bell pair.
    Chsh {
        /// Search measurement angles by coordinate ascent from all-zero angles
        /// instead of using the known optimum.
        #[arg(long)]
        optimize: bool,
        /// Sweep budget for --optimize.
        #[arg(long, default_value_t = 1000)]
        iters: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Three-site AND protocol on a GHZ state.
    Ghz {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit status.
pub fn run<I, A>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = A>,
    A: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
                return 2;
            }
            let _ = out.write_all(text.as_bytes());
            return 0;
        }
    };
    match execute(&cli.command, out, err) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

pub fn execute(command: &Command, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    match command {
        Command::Machine(MachineCommand::Validate { file }) => validate(&load(file)?, out),
        Command::Machine(MachineCommand::Minimize { file, output }) => {
            let m = process::minimize_default(&load(file)?);
            emit(output.as_deref(), &m.to_json(), out)
        }
        Command::Machine(MachineCommand::Stationary { file }) => {
            let pi = process::stationary(&load(file)?)?;
            out.write_all(report::stationary(&pi).as_bytes())?;
            Ok(())
        }
        Command::Complexity { file } => {
            let m = load(file)?;
            let minimal = process::minimize_default(&m);
            let c_mu = qmachine::causal_statistical_complexity(&m)?;
            let c_q = qmachine::quantum_complexity(&m)?;
            out.write_all(report::complexity(m.num_states(), minimal.num_states(), c_mu, c_q).as_bytes())?;
            Ok(())
        }
        Command::Sweep(a) => {
            let family = ProcessFamily::from(a.family);
            let table = complexity_sweep_with(family, &uniform_grid::<f64>(a.grid)?, a.raw_topology)?;
            // XOR is retrodictively deterministic only at p in {0, 1}, so C_q
            // may fall below C_mu in between; say so rather than hide it.
            let gaps = table.gaps(1e-9).count();
            if family == ProcessFamily::Xor && gaps > 0 {
                writeln!(
                    err,
                    "note: C_q < C_mu at {gaps} of {} grid points for the {family} family",
                    table.rows.len()
                )?;
            }
            emit(a.output.as_deref(), &table.to_csv(), out)
        }
        Command::Sample(a) => {
            let m = ProcessFamily::from(a.family).build(a.p)?;
            let seq = process::sample(&m, a.n, a.seed)?;
            writeln!(out, "{}", seq.render())?;
            Ok(())
        }
        Command::Game(GameCommand::Chsh {
            optimize,
            iters,
            format,
        }) => {
            let text = if *optimize {
                let start = games::BipartiteStrategy::bell_real_plane([0.0; 2], [0.0; 2]);
                let r = games::optimize_chsh(&start, *iters)?;
                report::chsh(&r.strategy, &r.outcome, Some((r.converged, r.sweeps)), *format)
            } else {
                let s = games::BipartiteStrategy::tsirelson();
                report::chsh(&s, &games::chsh_value(&s), None, *format)
            };
            out.write_all(text.as_bytes())?;
            Ok(())
        }
        Command::Game(GameCommand::Ghz { format }) => {
            out.write_all(report::ghz(*format).as_bytes())?;
            Ok(())
        }
    }
}

fn load(path: &Path) -> CliResult<EpsilonMachine<f64>> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(EpsilonMachine::from_json(&text)?)
}

fn emit(path: Option<&Path>, text: &str, out: &mut dyn Write) -> CliResult {
    match path {
        Some(p) => fs::write(p, text).map_err(|source| CliError::Io {
            path: p.to_path_buf(),
            source,
        }),
        None => Ok(out.write_all(text.as_bytes())?),
    }
}

fn validate(m: &EpsilonMachine<f64>, out: &mut dyn Write) -> CliResult {
    let r = process::validate(m);
    out.write_all(report::validation(m, &r).as_bytes())?;
    if r.is_valid() {
        Ok(())
    } else {
        Err(CliError::Rejected(format!(
            "machine has {} violation(s)",
            r.violations.len()
        )))
    }
}
