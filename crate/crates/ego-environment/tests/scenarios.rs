//! The shipped scenarios, run end to end.

use std::path::PathBuf;

use ego_engine::{write_trace, Environment, Op, PromotionKind, RunStatus};
use ego_environment::{Scenario, ScenarioEnvironment};

fn path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../scenarios")
        .join(name)
}

fn scenario(name: &str) -> Scenario {
    Scenario::load(path(name)).unwrap()
}

fn trace_of(s: Scenario) -> Vec<u8> {
    let mut env = ScenarioEnvironment::new(s).unwrap();
    let (engine, _) = env.run().unwrap();
    let mut out = Vec::new();
    write_trace(engine.trace(), &mut out).unwrap();
    out
}

#[test]
fn initial_load_has_the_declared_shape() {
    let mut env = ScenarioEnvironment::new(scenario("three-modalities.toml")).unwrap();
    let sizes: Vec<usize> = env.initial_load().unwrap().iter().map(|m| m.states.len()).collect();
    assert_eq!(sizes, vec![10, 11, 8]);
}

#[test]
fn three_modalities_matches_the_golden_trace() {
    let golden = std::fs::read(path("golden/three-modalities.jsonl")).unwrap();
    assert_eq!(trace_of(scenario("three-modalities.toml")), golden);
}

#[test]
fn the_golden_run_ignores_the_seed() {
    let mut s = scenario("three-modalities.toml");
    let a = trace_of(s.clone());
    s.seed.value = 99;
    assert_eq!(trace_of(s), a);
}

#[test]
fn same_seed_same_bytes_other_seed_other_fillers() {
    let s = scenario("drift.toml");
    assert_eq!(trace_of(s.clone()), trace_of(s.clone()));
    let mut t = s.clone();
    t.seed.value += 1;
    assert_ne!(trace_of(t), trace_of(s));
}

#[test]
fn the_model_change_brings_a_new_perturbation_category() {
    let mut env = ScenarioEnvironment::new(scenario("drift.toml")).unwrap();
    let (engine, report) = env.run().unwrap();
    let perceived: Vec<(u64, String)> = engine
        .trace()
        .iter()
        .filter(|r| r.op == Op::Perceive)
        .map(|r| (r.clock, r.label.clone().unwrap()))
        .collect();
    assert!(perceived.iter().all(|(c, l)| (*c < 6) == (l == "{O}")), "{perceived:?}");
    assert!(perceived.iter().any(|(_, l)| l == "{P}"));
    assert_eq!(report.status, RunStatus::BudgetExhausted);
    let last = report.deficits.last().unwrap();
    assert_eq!(last.deficits, vec![(1, 0), (2, 5)]);
}

#[test]
fn fillers_never_repeat_a_token() {
    let mut env = ScenarioEnvironment::new(scenario("drift.toml")).unwrap();
    let tokens: Vec<_> = env.glossary().into_keys().collect();
    for clock in 1..=10 {
        for g in env.perturbations(clock).groups {
            for x in &g[1..] {
                let tags: Vec<_> = x.members().iter().filter(|m| !tokens.contains(m)).collect();
                assert_eq!(tags.len(), 1, "one filler per later instance");
            }
        }
    }
}

#[test]
fn a_model_without_matching_states_emits_no_event() {
    let text = r#"
        [schedule]
        budget = 2
        [symbols]
        A = "01"
        B = "10"
        X = "11"
        [[modalities]]
        id = 1
        count = 2
        properties = ["A"]
        [eem.1]
        a = ["X"]
        b = ["B"]
        c = ["A", "X"]
    "#;
    let mut env = ScenarioEnvironment::new(Scenario::from_toml(text).unwrap()).unwrap();
    let engine = env.start().unwrap();
    let batch = env.perturbations(1);
    assert_eq!(batch.groups.len(), 1);
    let response = env.sensory_response(1, &engine.snapshot(), &batch);
    assert!(response.events.is_empty());
}

#[test]
fn promotion_and_emotion_scenarios() {
    let mut env = ScenarioEnvironment::new(scenario("promotion.toml")).unwrap();
    let (_, report) = env.run().unwrap();
    let kinds: Vec<(u64, PromotionKind)> = report.promotions.iter().map(|p| (p.clock, p.kind)).collect();
    assert_eq!(
        kinds,
        vec![
            (2, PromotionKind::PerceptualSymbol),
            (3, PromotionKind::ObjectiveSymbol),
            (4, PromotionKind::MentalImage)
        ]
    );

    let mut env = ScenarioEnvironment::new(scenario("emotion.toml")).unwrap();
    let (engine, report) = env.run().unwrap();
    assert_eq!(report.emotions, 2);
    assert_eq!(ego_engine::audit::audit_emotions(engine.trace()), Ok(2));
}

#[test]
fn destroy_scenario_stops_at_once() {
    let mut env = ScenarioEnvironment::new(scenario("destroy.toml")).unwrap();
    let (_, report) = env.run().unwrap();
    assert_eq!(report.status, RunStatus::Destroyed);
    assert_eq!(report.clocks, 1);
}
