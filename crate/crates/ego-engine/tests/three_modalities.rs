//! The three-modality run, checked cell by cell.

mod common;

use common::*;
use ego_categorize::{is_instance, Category};
use ego_engine::{run, ModalityId, Op, RunStatus};

#[test]
fn deficits_per_clock() {
    let (mut engine, mut env) = three_modalities();
    let report = run(&mut engine, &mut env, 3).unwrap();
    let d: Vec<Vec<(u32, usize)>> = report.deficits.iter().map(|c| c.deficits.clone()).collect();
    assert_eq!(
        d,
        vec![
            vec![(1, 5), (2, 0), (3, 0)],
            vec![(1, 5), (2, 3), (3, 0)],
            vec![(1, 0), (2, 0), (3, 0)],
        ]
    );
    assert_eq!(report.status, RunStatus::Equilibrium);
    assert_eq!(report.clocks, 3);
}

#[test]
fn manipulation_fails_on_the_first_two_clocks() {
    let (mut engine, mut env) = three_modalities();
    run(&mut engine, &mut env, 3).unwrap();
    let failed: Vec<(u64, Option<u32>)> = engine
        .trace()
        .iter()
        .filter(|r| r.op == Op::ManipulateFailed)
        .map(|r| (r.clock, r.modality))
        .collect();
    assert_eq!(failed, vec![(1, Some(1)), (2, Some(1)), (2, Some(2))]);
}

#[test]
fn third_clock_recomposes_in_order_with_the_expected_consumptions() {
    let (mut engine, mut env) = three_modalities();
    run(&mut engine, &mut env, 3).unwrap();
    let clock3: Vec<_> = engine.trace().iter().filter(|r| r.clock == 3).collect();
    let order: Vec<u32> = clock3
        .iter()
        .filter(|r| r.op == Op::Produce && r.modality.is_some())
        .map(|r| r.modality.unwrap())
        .collect();
    assert_eq!(order, vec![1, 3, 2]);

    // Consumptions of surplus elements per behaviour, between produces.
    let mut per_behaviour: Vec<Vec<(String, u64)>> = vec![Vec::new()];
    for r in &clock3 {
        match r.op {
            Op::Consume if !r.formulas.is_empty() => per_behaviour
                .last_mut()
                .unwrap()
                .push((r.label.clone().unwrap(), r.count.unwrap())),
            Op::Produce if r.modality.is_some() => per_behaviour.push(Vec::new()),
            _ => {}
        }
    }
    per_behaviour.pop();
    let counts: Vec<Vec<u64>> = per_behaviour.iter().map(|b| b.iter().map(|c| c.1).collect()).collect();
    assert_eq!(counts, vec![vec![5, 5, 5], vec![4, 4], vec![3, 3]]);
    let mut ma: Vec<&str> = per_behaviour[0].iter().map(|c| c.0.as_str()).collect();
    ma.sort();
    assert_eq!(ma, vec!["{A,E,F,P}", "{B,D,V}", "{C,G,K}"]);
}

#[test]
fn final_structure_and_residuals() {
    let (mut engine, mut env) = three_modalities();
    run(&mut engine, &mut env, 3).unwrap();
    for (id, n) in [(1, 10), (2, 11), (3, 8)] {
        assert_eq!(engine.modality(ModalityId(id)).unwrap().compliant_count(), n);
    }
    for (label, index) in [("{C,G,K}", 1), ("{A,E,F,P}", 0), ("{B,D,V}", 3)] {
        assert_eq!(engine.ledger().index(&key(&engine, label)), index, "{label}");
    }
    assert!(engine.emotions().is_empty());
}

#[test]
fn trace_deltas_replay_the_ledger() {
    let (mut engine, mut env) = three_modalities();
    run(&mut engine, &mut env, 3).unwrap();
    let replayed = replay(engine.trace());
    for (k, index) in engine.ledger().iter() {
        assert_eq!(
            replayed.get(k.as_str()).copied().unwrap_or(0),
            index,
            "{}",
            engine.label(k)
        );
    }
}

#[test]
fn produced_states_comply_and_are_distinct() {
    let (mut engine, mut env) = three_modalities();
    run(&mut engine, &mut env, 3).unwrap();
    for m in engine.modalities() {
        let c = Category::from_properties(m.properties().clone());
        let own: Vec<_> = m.states().iter().filter(|e| e.category == *m.category()).collect();
        for e in &own {
            assert!(is_instance(&e.formula, &c));
        }
        for (i, a) in own.iter().enumerate() {
            for b in &own[i + 1..] {
                assert_ne!(a.formula, b.formula);
            }
        }
    }
}

#[test]
fn organisation_never_changes() {
    let (mut engine, mut env) = three_modalities();
    let before = engine.organisation().clone();
    run(&mut engine, &mut env, 3).unwrap();
    assert_eq!(engine.organisation(), &before);
}
