//! `tn2`: batch driver for the engine. Every report is exact and deterministic
//! for a fixed invocation; exit codes are 0 (all pass), 1 (a check failed),
//! 2 (parse or config error) and 3 (inconclusive at the truncation used).

mod commands;
mod demo;
mod suites;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use tn2::lab::{LabError, Status};
use tn2::parse::{parse_half, ParseError};
use tn2::pbw::ModuleError;
use tn2::zoo::ZooError;

#[derive(Parser, Debug)]
#[command(name = "tn2", version, about = "Exact computation for the twisted N=2 superconformal algebra")]
struct Cli {
    #[command(flatten)]
    settings: Flags,
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug, Clone)]
struct Flags {
    /// Generators with |index| <= window/2 take part in scans.
    #[arg(long, global = true, default_value_t = 6)]
    window: i32,
    /// Weight bound of the truncation, an integer or half-integer.
    #[arg(long, global = true, default_value = "2")]
    max_weight: String,
    /// Length bound of the truncation.
    #[arg(long, global = true, default_value_t = 3)]
    max_length: u64,
    /// Seed for every randomized suite.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Module configuration file.
    #[arg(long, global = true)]
    spec: Option<PathBuf>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Bracket of two linear combinations.
    Bracket {
        x: String,
        y: String,
        /// Presentation name; inferred from the generators when omitted.
        #[arg(long)]
        algebra: Option<String>,
    },
    /// Exhaustive graded Jacobi on the window.
    Jacobi {
        #[arg(long, default_value = "twisted")]
        algebra: String,
    },
    /// Apply a word of generators (rightmost first) to a module vector.
    Act {
        word: String,
        /// Defaults to the first basis vector.
        #[arg(long)]
        vector: Option<String>,
    },
    /// Descend from a vector to a nonzero element of 1⊗M.
    Reduce {
        /// A module vector, or a bare exponent vector such as `{1:1}`.
        vector: String,
        #[arg(long, default_value = "1/2")]
        u: String,
    },
    /// Kernel of the annihilating generators above t on the truncation.
    Annihilator {
        #[arg(long, default_value = "1/2")]
        t: String,
    },
    /// Exponent vectors of the truncation, in descending principal order.
    Enumerate,
    /// Whether a span is stable under the generators of a subalgebra.
    Closure {
        /// Vectors separated by `;`, or `@path` with one vector per line.
        #[arg(long)]
        subspace: String,
        /// One of b, t0, t-, p, frak-t, b+t0, t(<s>).
        #[arg(long, default_value = "b")]
        selector: String,
    },
    /// Run a named verification suite.
    Verify {
        suite: String,
        #[arg(long, default_value = "1/2")]
        u: String,
        /// Presentation names for the jacobi suite; all presets when omitted.
        #[arg(long)]
        algebra: Option<String>,
    },
    /// Walk through one module family.
    Demo { name: String },
}

/// Effective settings shared by every subcommand.
#[derive(Debug, Clone)]
pub struct Settings {
    pub window: i32,
    pub max_weight2: i64,
    pub max_length: u64,
    pub seed: u64,
    pub spec: Option<PathBuf>,
}

/// What a command prints and how it exits.
pub struct Outcome {
    pub text: String,
    pub status: Status,
}

impl Outcome {
    pub fn pass(text: String) -> Self {
        Outcome { text, status: Status::Pass }
    }
}

#[derive(Debug)]
pub enum CliError {
    /// Unparseable input or bad configuration; exit 2.
    Input(String),
    /// The result is not decided at this truncation; exit 3.
    Inconclusive(String),
    /// A check failed while running; exit 1.
    Check(String),
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<ModuleError> for CliError {
    fn from(e: ModuleError) -> Self {
        match e {
            ModuleError::Truncation(_) => CliError::Inconclusive(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<ZooError> for CliError {
    fn from(e: ZooError) -> Self {
        match e {
            ZooError::Module(m) => m.into(),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<LabError> for CliError {
    fn from(e: LabError) -> Self {
        match e {
            LabError::Module(m) => m.into(),
            LabError::Precondition(_) | LabError::ZeroVector | LabError::AlreadyInM => CliError::Input(e.to_string()),
            LabError::Budget(_) | LabError::Invariant(_) => CliError::Check(e.to_string()),
        }
    }
}

fn settings(flags: &Flags) -> Result<Settings, CliError> {
    let max_weight2 = parse_half(&flags.max_weight)?;
    if max_weight2 < 0 || flags.window < 0 {
        return Err(CliError::Input(format!(
            "bounds must be nonnegative: --max-weight {} --window {}",
            flags.max_weight, flags.window
        )));
    }
    Ok(Settings {
        window: flags.window,
        max_weight2: max_weight2 as i64,
        max_length: flags.max_length,
        seed: flags.seed,
        spec: flags.spec.clone(),
    })
}

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let s = settings(&cli.settings)?;
    match &cli.command {
        Command::Bracket { x, y, algebra } => commands::bracket(x, y, algebra.as_deref()),
        Command::Jacobi { algebra } => commands::jacobi(&s, algebra),
        Command::Act { word, vector } => commands::act(&s, word, vector.as_deref()),
        Command::Reduce { vector, u } => commands::reduce(&s, vector, parse_half(u)?),
        Command::Annihilator { t } => commands::annihilator(&s, parse_half(t)?),
        Command::Enumerate => Ok(commands::enumerate(&s)),
        Command::Closure { subspace, selector } => commands::closure(&s, subspace, selector),
        Command::Verify { suite, u, algebra } => {
            let ctx = suites::Context { settings: s, u2: parse_half(u)?, algebra: algebra.clone() };
            suites::SuiteRegistry::with_presets().run(suite, &ctx)
        }
        Command::Demo { name } => demo::run(&s, name),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (text, code) = match run(&cli) {
        Ok(o) => {
            let code = match o.status {
                Status::Pass => 0,
                Status::Fail => 1,
                Status::Inconclusive => 3,
            };
            (o.text, code)
        }
        Err(e) => {
            let (msg, code) = match e {
                CliError::Input(m) => (m, 2),
                CliError::Check(m) => (m, 1),
                CliError::Inconclusive(m) => (format!("inconclusive at bound: {m}"), 3),
            };
            eprintln!("error: {msg}");
            return ExitCode::from(code);
        }
    };
    match &cli.settings.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::from(code)
}
