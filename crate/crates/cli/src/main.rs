//! `fjl`: command-line front end for the fuzzy justification logic workbench.
//!
//! Exit status is 0 when a command succeeds or a check passes, 1 when a
//! check fails and 2 for usage and input errors.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use fjl_core::harness::Suite;
use fjl_core::LogicConfig;

#[derive(Debug, Parser)]
#[command(name = "fjl", version, about = "Fuzzy justification logic workbench")]
struct Cli {
    /// Print reports as JSON.
    #[arg(long, global = true)]
    json: bool,

    /// Base seed for randomized commands.
    #[arg(long, global = true, env = "FJL_SEED", default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct LogicArgs {
    /// BL, L, G, Pi, RPL, BLJ, LJ, GJ, PiJ, RPLJ or J, optionally with +jT or +jD.
    #[arg(long, default_value = "RPLJ")]
    logic: LogicConfig,

    /// Constant specification: `total`, `empty` or a file with one entry per line.
    #[arg(long, default_value = "total")]
    cs: String,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse a formula and print its canonical and primitive forms.
    Parse {
        formula: String,
        #[arg(long, default_value = "RPLJ")]
        logic: LogicConfig,
    },
    /// Evaluate a formula in a model file.
    Eval {
        #[arg(long)]
        model: PathBuf,
        /// World to evaluate at; every world when omitted.
        #[arg(long)]
        world: Option<String>,
        #[arg(long)]
        formula: String,
    },
    /// Check the evidence conditions, frame conditions and t-norm of a model.
    ValidateModel {
        #[arg(long)]
        model: PathBuf,
        #[command(flatten)]
        logic: LogicArgs,
        /// Formulas whose evidence pairs are checked, besides the tabled ones.
        #[arg(long = "formula")]
        formulas: Vec<String>,
    },
    /// Check a derivation in the line-oriented proof format.
    CheckProof {
        proof: PathBuf,
        #[command(flatten)]
        logic: LogicArgs,
    },
    /// Check a finite constant specification for shape and downward closure.
    CheckCs {
        file: PathBuf,
        #[arg(long, default_value = "RPLJ")]
        logic: LogicConfig,
    },
    /// Lift a derivation into a justification term and print the result.
    Internalize {
        proof: PathBuf,
        #[command(flatten)]
        logic: LogicArgs,
        /// Also write the lifted derivation to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Bound the degree of a formula over a theory from below and above.
    Degree {
        #[arg(long)]
        formula: String,
        /// A theory member; repeatable.
        #[arg(long = "theory")]
        theory: Vec<String>,
        #[command(flatten)]
        logic: LogicArgs,
        /// Forward-chaining rounds for the lower bound.
        #[arg(long, default_value_t = 4)]
        depth: usize,
        /// Hill-climbing runs for the upper bound.
        #[arg(long, default_value_t = 16)]
        restarts: u64,
        /// Write the lower-bound derivation and the upper-bound model here.
        #[arg(long)]
        witness_dir: Option<PathBuf>,
    },
    /// Search for an admissible model refuting a formula.
    Countermodel {
        #[arg(long)]
        formula: String,
        #[command(flatten)]
        logic: LogicArgs,
        #[arg(long, default_value_t = 2000)]
        trials: u64,
        #[arg(long, default_value_t = 3)]
        max_worlds: usize,
        #[arg(long, default_value_t = 12)]
        max_denominator: u64,
        /// Write the model file here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a property suite, or `all`.
    Suite {
        name: SuiteName,
        /// Restrict suites over several logics to this one.
        #[arg(long)]
        logic: Option<LogicConfig>,
        /// Number of seeds, starting at `--seed`.
        #[arg(long)]
        seeds: Option<u64>,
    },
    /// Write the reference proofs to a directory, or compare them with it.
    Golden {
        #[arg(long, default_value = "golden")]
        dir: PathBuf,
        #[arg(long)]
        check: bool,
    },
}

#[derive(Debug, Clone, Copy)]
enum SuiteName {
    All,
    One(Suite),
}

impl std::str::FromStr for SuiteName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "all" {
            return Ok(SuiteName::All);
        }
        s.parse().map(SuiteName::One).map_err(|e| {
            let names: Vec<&str> = Suite::ALL.iter().map(|x| x.name()).collect();
            format!("{e}; expected `all` or one of {}", names.join(", "))
        })
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {}", chain(&e));
            ExitCode::from(2)
        }
    }
}

/// The error and its causes, skipping causes already quoted by the message
/// above them.
fn chain(e: &anyhow::Error) -> String {
    let mut out = String::new();
    let mut previous = String::new();
    for cause in e.chain() {
        let text = cause.to_string();
        if !previous.contains(&text) {
            if !out.is_empty() {
                out.push_str(": ");
            }
            out.push_str(&text);
        }
        previous = text;
    }
    out
}
