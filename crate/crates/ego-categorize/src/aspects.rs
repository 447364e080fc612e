//! Subassemblies and common aspects.

use std::collections::HashSet;

use ego_core::{Assembly, EFormula};
use ego_lineage::{code_nodes, subassembly_at, NodeCode};

/// Every node of `x` with its node code, taking the canonical member order
/// as the drawing order. Equal values at different positions are listed
/// once per position.
pub fn subassemblies(x: &EFormula) -> Vec<(NodeCode, EFormula)> {
    let tree = Assembly::from(x);
    code_nodes(&tree)
        .into_values()
        .map(|code| {
            let node = subassembly_at(&tree, &code).expect("code produced for this tree");
            (code, node.normalize())
        })
        .collect()
}

/// The distinct values occurring anywhere in `x`, `x` included.
pub fn subterms(x: &EFormula) -> HashSet<EFormula> {
    let mut seen = HashSet::new();
    let mut stack = vec![x.clone()];
    while let Some(node) = stack.pop() {
        if seen.insert(node.clone()) {
            stack.extend(node.members().iter().cloned());
        }
    }
    seen
}

/// Whether `y` occurs somewhere in `x` (including `x` itself).
pub fn is_subassembly(y: &EFormula, x: &EFormula) -> bool {
    if y.desc() > x.desc() {
        return false;
    }
    let mut seen = HashSet::new();
    let mut stack = vec![x];
    while let Some(node) = stack.pop() {
        if node == y {
            return true;
        }
        if node.desc() > y.desc() && seen.insert(node) {
            stack.extend(node.members());
        }
    }
    false
}

/// Values with an occurrence in `x` none of whose proper ancestors is a
/// blocked value. Blocked nodes are themselves reachable but not entered.
fn free_values(x: &EFormula, blocked: &HashSet<EFormula>) -> HashSet<EFormula> {
    let mut seen = HashSet::new();
    let mut stack = vec![x.clone()];
    while let Some(node) = stack.pop() {
        if seen.insert(node.clone()) && !blocked.contains(&node) {
            stack.extend(node.members().iter().cloned());
        }
    }
    seen
}

/// The common aspects of the inputs: the maximal shared subassemblies.
///
/// Candidates are the subassemblies of the first input that occur in every
/// input, scanned from largest to smallest (descendant count, then canonical
/// order). A candidate is selected when each input has an occurrence of it
/// that is not strictly inside an occurrence of an aspect selected earlier.
/// Largest-first scanning guarantees that a value is only ever excluded by a
/// larger aspect that actually contains that occurrence, so the result does
/// not depend on input order or on how the inputs are drawn.
///
/// # Panics
/// On an empty input list.
pub fn common_aspects(xs: &[EFormula]) -> Vec<EFormula> {
    assert!(!xs.is_empty(), "common aspects of nothing");
    let all: Vec<HashSet<EFormula>> = xs.iter().map(subterms).collect();
    let mut candidates: Vec<EFormula> = all[0]
        .iter()
        .filter(|v| all[1..].iter().all(|s| s.contains(*v)))
        .cloned()
        .collect();
    candidates.sort_by(|a, b| b.cmp(a));
    let mut selected: Vec<EFormula> = Vec::new();
    let mut blocked: HashSet<EFormula> = HashSet::new();
    let mut free: Vec<HashSet<EFormula>> = all;
    for c in candidates {
        if free.iter().all(|f| f.contains(&c)) {
            blocked.insert(c.clone());
            selected.push(c);
            free = xs.iter().map(|x| free_values(x, &blocked)).collect();
        }
    }
    selected.sort();
    selected
}
