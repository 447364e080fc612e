//! `ego`: run scenarios, verify theorems, print evaluators.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ego_cli::error::{EXIT_OK, EXIT_VERIFY_FAILED};
use ego_cli::eval::{eval, Relation};
use ego_cli::run::{run_scenario, RunOptions};
use ego_cli::verify::{verify, Bounds, Suite};
use ego_cli::CliError;

/// Levels accepted by `EGO_LOG_LEVEL`.
const LOG_LEVELS: [&str; 5] = ["error", "warn", "info", "debug", "trace"];

#[derive(Debug, Parser)]
#[command(name = "ego", version, about = "A homeostatic individual over nested sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run a scenario and write its trace.
    Run {
        /// Scenario file (TOML).
        #[arg(long)]
        scenario: PathBuf,
        /// Where to write the JSON-lines trace.
        #[arg(long)]
        trace: Option<PathBuf>,
        /// Clock budget, overriding the scenario's.
        #[arg(long)]
        budget: Option<u64>,
        /// Filler seed, overriding the scenario's.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Check the theorems or replay the worked examples.
    Verify {
        /// Which checks to run.
        #[arg(long, value_enum)]
        suite: SuiteArg,
        /// Deepest formula enumerated exhaustively (at most 4).
        #[arg(long, default_value_t = Bounds::default().max_depth)]
        max_depth: u32,
        /// Widest set enumerated exhaustively.
        #[arg(long, default_value_t = Bounds::default().max_width)]
        max_width: usize,
    },
    /// Build and classify one relational evaluator.
    Eval {
        #[command(flatten)]
        relation: RelationArg,
        /// First formula, e.g. "{0}".
        a: String,
        /// Second formula, e.g. "{0,{0}}".
        b: String,
        /// Also print the evaluator spelled out in braces.
        #[arg(long)]
        show_expansion: bool,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SuiteArg {
    Selfref,
    Lineage,
    Examples,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct RelationArg {
    /// a = b
    #[arg(long)]
    eq: bool,
    /// a ∈ b
    #[arg(long = "in")]
    member: bool,
    /// a ⊆ b
    #[arg(long)]
    subset: bool,
    /// a ∩ b
    #[arg(long)]
    cap: bool,
    /// a ∪ b
    #[arg(long)]
    cup: bool,
}

impl RelationArg {
    fn relation(&self) -> Relation {
        match (self.eq, self.member, self.subset, self.cap) {
            (true, ..) => Relation::Eq,
            (_, true, ..) => Relation::In,
            (_, _, true, _) => Relation::Subset,
            (_, _, _, true) => Relation::Cap,
            _ => Relation::Cup,
        }
    }
}

fn init_logging() {
    let level = std::env::var("EGO_LOG_LEVEL").unwrap_or_else(|_| "error".into());
    let known = LOG_LEVELS.contains(&level.as_str());
    env_logger::Builder::new()
        .parse_filters(if known { &level } else { "error" })
        .init();
    if !known {
        log::error!("EGO_LOG_LEVEL={level:?} is not one of {LOG_LEVELS:?}; using error");
    }
}

/// Prints to stdout, ignoring a closed pipe (as in `ego run … | head`).
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn dispatch(command: Command) -> Result<u8, CliError> {
    match command {
        Command::Run {
            scenario,
            trace,
            budget,
            seed,
        } => {
            let outcome = run_scenario(&RunOptions {
                scenario,
                trace,
                budget,
                seed,
            })?;
            emit(&format!("{}\n", outcome.summary_json()));
            Ok(outcome.exit_code())
        }
        Command::Verify {
            suite,
            max_depth,
            max_width,
        } => {
            let suite = match suite {
                SuiteArg::Selfref => Suite::SelfRef,
                SuiteArg::Lineage => Suite::Lineage,
                SuiteArg::Examples => Suite::Examples,
            };
            let bounds = Bounds {
                max_depth,
                max_width,
                ..Bounds::default()
            };
            let summary = verify(suite, &bounds)?;
            for c in &summary.checks {
                emit(&format!("{c}\n"));
            }
            Ok(if summary.passed() { EXIT_OK } else { EXIT_VERIFY_FAILED })
        }
        Command::Eval {
            relation,
            a,
            b,
            show_expansion,
        } => {
            emit(&eval(relation.relation(), &a, &b, show_expansion)?);
            Ok(EXIT_OK)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    init_logging();
    match dispatch(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("ego: {e}");
            e.exit()
        }
    }
}
