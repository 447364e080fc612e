//! Checks run on a recorded trace alone, without the engine.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::trace::{Op, TraceRecord};

/// A trace line breaking the emotional contract.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("trace line {line}: {reason}")]
pub struct ContractViolation {
    /// Zero-based index of the offending record.
    pub line: usize,
    /// What went wrong.
    pub reason: String,
}

/// Per-category homeostatic index replayed from the deltas of a trace.
pub fn replay_indices(trace: &[TraceRecord]) -> BTreeMap<String, i64> {
    let mut out = BTreeMap::new();
    for r in trace {
        if let (Some(k), Some(d)) = (&r.category, r.delta) {
            *out.entry(k.clone()).or_insert(0) += d;
        }
    }
    out
}

struct Episode {
    emotional: String,
    previous: Option<String>,
}

/// Verifies every emotional chain in a trace and returns how many there
/// are.
///
/// Replaying the index from the deltas, each chain must
/// 1. start from a state of a category in equilibrium, paired with an
///    element of a category with a positive index;
/// 2. feed each intermediate output into the next step together with
///    another element of a positive-index category;
/// 3. end with an element of the starting category, which is then back in
///    equilibrium.
pub fn audit_emotions(trace: &[TraceRecord]) -> Result<usize, ContractViolation> {
    let mut index: BTreeMap<&str, i64> = BTreeMap::new();
    let mut open: Option<Episode> = None;
    let mut done = 0;
    for (line, r) in trace.iter().enumerate() {
        let fail = |reason: String| Err(ContractViolation { line, reason });
        let key = r.category.as_deref();
        let before = key.map_or(0, |k| index.get(k).copied().unwrap_or(0));
        match (r.op, &mut open) {
            (Op::Endogenous, None) => {
                let Some(k) = key else {
                    return fail("emotional state without a category".into());
                };
                if before != 0 {
                    return fail(format!("emotional category has index {before}, not 0"));
                }
                open = Some(Episode {
                    emotional: k.to_string(),
                    previous: None,
                });
            }
            (Op::Consume, Some(ep)) => {
                let k = key.unwrap_or_default();
                if r.formulas.is_empty() {
                    // An intermediate output used as first factor.
                    if ep.previous.as_deref() != Some(k) {
                        return fail("first factor is not the previous output".into());
                    }
                    ep.previous = None;
                } else {
                    if before <= 0 {
                        return fail(format!("second factor drawn from index {before}"));
                    }
                    if before + r.delta.unwrap_or(0) < 0 {
                        return fail("second factor drained below equilibrium".into());
                    }
                }
            }
            (Op::Produce, Some(ep)) => {
                let k = key.unwrap_or_default();
                if r.modality.is_some() {
                    if k != ep.emotional {
                        return fail("last output is not in the emotional category".into());
                    }
                    if before + r.delta.unwrap_or(0) != 0 {
                        return fail("emotional category not restored".into());
                    }
                    open = None;
                    done += 1;
                } else {
                    ep.previous = Some(k.to_string());
                }
            }
            (Op::Endogenous, Some(_)) => return fail("emotional chain interrupted".into()),
            (_, Some(_)) if r.delta.is_some() => return fail(format!("{:?} inside an emotional chain", r.op)),
            _ => {}
        }
        if let (Some(k), Some(d)) = (key, r.delta) {
            *index.entry(k).or_insert(0) += d;
        }
    }
    match open {
        Some(_) => Err(ContractViolation {
            line: trace.len(),
            reason: "trace ends inside an emotional chain".into(),
        }),
        None => Ok(done),
    }
}
