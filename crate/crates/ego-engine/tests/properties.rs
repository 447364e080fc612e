//! Invariants over randomly scripted runs.

mod common;

use common::*;
use ego_categorize::{is_instance, Category};
use ego_engine::audit::{audit_emotions, replay_indices};
use ego_engine::{run, Op, RunStatus};
use proptest::prelude::*;

const SPEC: [(u32, &str, usize); 2] = [(1, "AB", 5), (2, "CD", 4)];
const POOL: &[&str] = &["AC", "BD", "ABE", "CDF", "AF", "BE", "CE", "DF", "ACE", "BDF"];

fn script() -> impl Strategy<Value = Vec<(u64, Vec<Scripted>)>> {
    let event = (1u32..=2, 0usize..3, 0usize..4, 0..POOL.len(), 0usize..5, 0..POOL.len())
        .prop_map(|(m, nx, remove, x, nz, z)| ev(m, (["G", "H", "GH"][x % 3], nx), remove, (POOL[z], nz)));
    prop::collection::vec(prop::collection::vec(event, 0..3), 1..6)
        .prop_map(|clocks| clocks.into_iter().enumerate().map(|(i, e)| (i as u64 + 1, e)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn runs_keep_their_invariants(clocks in script()) {
        let budget = clocks.len() as u64;
        let mut env = ScriptEnv::new(&SPEC, clocks);
        let mut engine = engine(&SPEC);
        let organisation = engine.organisation().clone();
        let report = run(&mut engine, &mut env, budget).unwrap();

        // The organisation never changes.
        prop_assert_eq!(engine.organisation(), &organisation);

        // Summing trace deltas replays the index.
        let replayed = replay_indices(engine.trace());
        for (k, index) in engine.ledger().iter() {
            prop_assert_eq!(replayed.get(k.as_str()).copied().unwrap_or(0), index);
        }

        // Compliant states are instances of their modality's category, and
        // the states of one behaviour are pairwise distinct.
        for m in engine.modalities() {
            let c = Category::from_properties(m.properties().clone());
            for e in m.states().iter().filter(|e| &e.category == m.category()) {
                prop_assert!(is_instance(&e.formula, &c));
            }
        }
        for r in engine.trace().iter().filter(|r| r.op == Op::Produce && r.modality.is_some()) {
            let mut f = r.formulas.clone();
            f.sort();
            f.dedup();
            prop_assert_eq!(f.len(), r.formulas.len());
        }

        // Every emotional chain honours the contract.
        prop_assert_eq!(audit_emotions(engine.trace()).unwrap(), engine.emotions().len());

        // Destruction is terminal.
        if report.status == RunStatus::Destroyed {
            prop_assert_eq!(report.clocks, engine.trace().iter().map(|r| r.clock).max().unwrap());
            prop_assert!(engine.begin_clock().is_err());
        }
    }

    #[test]
    fn identical_scripts_give_identical_traces(clocks in script()) {
        let budget = clocks.len() as u64;
        let traces: Vec<_> = (0..2)
            .map(|_| {
                let mut env = ScriptEnv::new(&SPEC, clocks.clone());
                let mut engine = engine(&SPEC);
                run(&mut engine, &mut env, budget).unwrap();
                engine.trace().to_vec()
            })
            .collect();
        prop_assert_eq!(&traces[0], &traces[1]);
    }
}
