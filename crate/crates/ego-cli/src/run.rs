//! `ego run`: a scenario from file to trace.

use std::fs;
use std::path::{Path, PathBuf};

use ego_engine::{write_trace, RunReport, RunStatus, TraceRecord};
use ego_environment::{Scenario, ScenarioEnvironment};
use log::info;

use crate::error::{CliError, EXIT_DESTROYED, EXIT_OK};

/// Options of `ego run`.
#[derive(Debug, Clone, Default)]
pub struct RunOptions {
    /// The scenario file.
    pub scenario: PathBuf,
    /// Where to write the trace, if anywhere.
    pub trace: Option<PathBuf>,
    /// Overrides the scenario's clock budget.
    pub budget: Option<u64>,
    /// Overrides the scenario's seed.
    pub seed: Option<u64>,
}

/// The result of a run.
#[derive(Debug, Clone)]
pub struct RunOutcome {
    /// Summary of the run.
    pub report: RunReport,
    /// Every transition.
    pub trace: Vec<TraceRecord>,
    /// Where the trace was written.
    pub trace_path: Option<PathBuf>,
}

impl RunOutcome {
    /// The exit code: destruction is distinct from success.
    pub fn exit_code(&self) -> u8 {
        match self.report.status {
            RunStatus::Destroyed => EXIT_DESTROYED,
            RunStatus::Equilibrium | RunStatus::BudgetExhausted => EXIT_OK,
        }
    }

    /// The report as pretty JSON, with the trace path.
    pub fn summary_json(&self) -> String {
        let mut v = serde_json::to_value(&self.report).expect("reports serialise");
        v["trace"] = serde_json::json!(self.trace_path.as_ref().map(|p| p.display().to_string()));
        serde_json::to_string_pretty(&v).expect("reports serialise")
    }
}

/// The trace as JSON lines.
pub fn trace_bytes(records: &[TraceRecord]) -> Vec<u8> {
    let mut out = Vec::new();
    write_trace(records, &mut out).expect("writing to memory cannot fail");
    out
}

/// Runs a parsed scenario with optional overrides.
pub fn run_parsed(
    mut scenario: Scenario,
    budget: Option<u64>,
    seed: Option<u64>,
) -> Result<(RunReport, Vec<TraceRecord>), CliError> {
    if let Some(b) = budget {
        scenario.schedule.budget = b;
    }
    if let Some(s) = seed {
        scenario.seed.value = s;
    }
    let mut env = ScenarioEnvironment::new(scenario)?;
    let (engine, report) = env.run()?;
    Ok((report, engine.trace().to_vec()))
}

fn io_error(path: &Path) -> impl FnOnce(std::io::Error) -> CliError + '_ {
    move |source| CliError::Io {
        path: path.display().to_string(),
        source,
    }
}

/// Loads, runs and traces a scenario.
pub fn run_scenario(opts: &RunOptions) -> Result<RunOutcome, CliError> {
    let text = fs::read_to_string(&opts.scenario).map_err(io_error(&opts.scenario))?;
    let scenario = Scenario::from_toml(&text)?;
    let (report, trace) = run_parsed(scenario, opts.budget, opts.seed)?;
    info!("{} clocks, status {:?}", report.clocks, report.status);
    if let Some(path) = &opts.trace {
        fs::write(path, trace_bytes(&trace)).map_err(io_error(path))?;
    }
    Ok(RunOutcome {
        report,
        trace,
        trace_path: opts.trace.clone(),
    })
}
