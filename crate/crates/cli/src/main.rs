//! `reject-lab`: reject-option Bayes and mutual-information classifiers on
//! known univariate class models, with CSV output.

mod commands;
mod config;
mod failure;
mod table;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use config::{resolve, Mode, Overrides};
use failure::Failure;

#[derive(Parser)]
#[command(
    name = "reject-lab",
    version,
    about = "Reject-option Bayes and mutual-information classifiers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct CaseArgs {
    /// Built-in example: example1, example2, example3 or example4.
    #[arg(long, conflicts_with = "config")]
    preset: Option<String>,
    /// JSON experiment configuration.
    #[arg(long, value_name = "PATH")]
    config: Option<PathBuf>,
    #[arg(long, value_enum)]
    mode: Option<Mode>,
    /// Allow the reject decision.
    #[arg(long, overrides_with = "no_reject")]
    reject: bool,
    #[arg(long, overrides_with = "reject")]
    no_reject: bool,
    /// Write CSV here instead of stdout.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Monte-Carlo sample size; enables the oracle row for `run`.
    #[arg(long, value_name = "N")]
    oracle_n: Option<u64>,
    #[arg(long, value_name = "S", env = "REJECT_LAB_SEED")]
    seed: Option<u64>,
}

impl CaseArgs {
    fn overrides(&self) -> Overrides {
        Overrides {
            preset: self.preset.clone(),
            config: self.config.clone(),
            mode: self.mode,
            reject: match (self.reject, self.no_reject) {
                (true, _) => Some(true),
                (_, true) => Some(false),
                _ => None,
            },
            out: self.out.clone(),
            oracle_n: self.oracle_n,
            seed: self.seed,
        }
    }

    fn names_case(&self) -> bool {
        self.preset.is_some() || self.config.is_some()
    }
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one classifier and print its outcome row.
    Run(CaseArgs),
    /// Both classifiers across prior ratios p(t1)/p(t2).
    Sweep {
        #[command(flatten)]
        case: CaseArgs,
        /// Comma-separated prior ratios.
        #[arg(long, value_delimiter = ',')]
        ratios: Option<Vec<f64>>,
    },
    /// Conditional-entropy error bounds.
    Bounds(CaseArgs),
    /// Cost matrices that induce the same rejection thresholds.
    Redundancy {
        #[command(flatten)]
        case: CaseArgs,
        #[arg(long, default_value_t = 4)]
        count: usize,
    },
    /// Compare a classifier with a Monte-Carlo estimate of its outcome.
    Oracle(CaseArgs),
}

fn dispatch(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Run(a) => commands::run(&resolve(&a.overrides(), "example1")?),
        Command::Sweep { case, ratios } => {
            let c = resolve(&case.overrides(), "example2")?;
            let modes = case.mode.map_or(vec![Mode::Bayes, Mode::Mi], |m| vec![m]);
            commands::sweep(&c, ratios.as_deref(), &modes)
        }
        Command::Bounds(a) => {
            if a.names_case() {
                let c = resolve(&a.overrides(), "example1")?;
                commands::bounds_report(Some(&c), c.out.as_deref())
            } else {
                commands::bounds_report(None, a.out.as_deref())
            }
        }
        Command::Redundancy { case, count } => {
            let mut o = case.overrides();
            o.reject = Some(o.reject.unwrap_or(true));
            commands::redundancy(&resolve(&o, "example1")?, count)
        }
        Command::Oracle(a) => commands::oracle(&resolve(&a.overrides(), "example1")?),
    }
}

fn main() -> ExitCode {
    match dispatch(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("reject-lab: {f}");
            f.exit_code()
        }
    }
}
