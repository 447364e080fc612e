//! The `ego` binary: output and exit codes.

use std::path::PathBuf;
use std::process::{Command, Output};

fn ego(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ego"))
        .args(args)
        .env_remove("EGO_LOG_LEVEL")
        .output()
        .expect("binary runs")
}

fn scenario(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../scenarios")
        .join(name)
        .display()
        .to_string()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn run_writes_the_golden_trace_and_a_summary() {
    let dir = tempfile::tempdir().unwrap();
    let trace = dir.path().join("trace.jsonl");
    let out = ego(&[
        "run",
        "--scenario",
        &scenario("three-modalities.toml"),
        "--trace",
        trace.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let summary: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(summary["status"], "Equilibrium");
    assert_eq!(summary["clocks"], 3);
    let golden = std::fs::read(scenario("golden/three-modalities.jsonl")).unwrap();
    assert_eq!(std::fs::read(trace).unwrap(), golden);
}

#[test]
fn destroyed_individual_exits_with_three() {
    let out = ego(&["run", "--scenario", &scenario("destroy.toml")]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn budget_override_is_honoured() {
    let out = ego(&["run", "--scenario", &scenario("three-modalities.toml"), "--budget", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let summary: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(summary["status"], "BudgetExhausted");
    assert_eq!(summary["clocks"], 1);
}

#[test]
fn seed_override_changes_drift_traces() {
    let dir = tempfile::tempdir().unwrap();
    let mut traces = Vec::new();
    for seed in ["5", "5", "6"] {
        let path = dir.path().join(format!("t{}.jsonl", traces.len()));
        let out = ego(&[
            "run",
            "--scenario",
            &scenario("drift.toml"),
            "--seed",
            seed,
            "--trace",
            path.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
        traces.push(std::fs::read(path).unwrap());
    }
    assert_eq!(traces[0], traces[1]);
    assert_ne!(traces[0], traces[2]);
}

#[test]
fn missing_scenario_is_a_usage_or_io_error() {
    let out = ego(&["run", "--scenario", "/nonexistent/scenario.toml"]);
    assert_ne!(out.status.code(), Some(0));
    assert!(!out.stderr.is_empty());
}

#[test]
fn eval_prints_the_evaluator_and_its_class() {
    let out = ego(&["eval", "--eq", "{0}", "{0,{0}}"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("{{{∅} ≡ {∅, {∅}}} ∧ {{∅ ≡ ∅} ∧ {∅ ≡ {∅}}}}"), "{text}");
    assert!(text.contains("class: Contradiction"), "{text}");

    let out = ego(&["eval", "--in", "{0}", "{0,{0}}"]);
    assert!(stdout(&out).contains("class: Tautology"));
}

#[test]
fn malformed_input_and_missing_relation_are_usage_errors() {
    assert_eq!(ego(&["eval", "--eq", "{0", "{0}"]).status.code(), Some(2));
    assert_eq!(ego(&["eval", "{0}", "{0}"]).status.code(), Some(2));
    assert_eq!(ego(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn verify_examples_passes_and_deep_runs_are_refused() {
    let out = ego(&["verify", "--suite", "examples"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(!stdout(&out).contains("FAIL"));
    let out = ego(&["verify", "--suite", "lineage", "--max-depth", "5"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn unknown_log_level_falls_back_with_a_warning() {
    let out = Command::new(env!("CARGO_BIN_EXE_ego"))
        .args(["eval", "--eq", "0", "0"])
        .env("EGO_LOG_LEVEL", "loud")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("EGO_LOG_LEVEL"));
}
