//! Exhaustive enumeration of small canonical formulas, used as test corpora.

use crate::formula::EFormula;

/// Every canonical formula with at most `max_nodes` tree nodes, sorted in
/// canonical order (so by node count first).
pub fn formulas_up_to_nodes(max_nodes: usize) -> Vec<EFormula> {
    // by_size[s] holds every formula with exactly s nodes.
    let mut by_size: Vec<Vec<EFormula>> = vec![Vec::new(); max_nodes.max(1) + 1];
    if max_nodes == 0 {
        return Vec::new();
    }
    by_size[1].push(EFormula::empty());
    for size in 2..=max_nodes {
        // Pool of candidate members, in canonical order.
        let pool: Vec<EFormula> = by_size[1..size].iter().flatten().cloned().collect();
        let mut out = Vec::new();
        let mut chosen = Vec::new();
        choose(&pool, 0, size - 1, &mut chosen, &mut out);
        out.sort();
        by_size[size] = out;
    }
    by_size.into_iter().flatten().collect()
}

/// Picks strictly increasing pool indices whose node counts sum to `budget`.
fn choose(pool: &[EFormula], start: usize, budget: usize, chosen: &mut Vec<EFormula>, out: &mut Vec<EFormula>) {
    if budget == 0 {
        if !chosen.is_empty() {
            out.push(EFormula::set(chosen.iter().cloned()));
        }
        return;
    }
    for i in start..pool.len() {
        let size = pool[i].desc() as usize;
        if size > budget {
            // The pool is sorted by node count.
            break;
        }
        chosen.push(pool[i].clone());
        choose(pool, i + 1, budget - size, chosen, out);
        chosen.pop();
    }
}

/// Every canonical formula of depth at most `max_depth` (the hereditarily
/// finite sets of rank ≤ `max_depth`). There are 1, 2, 4, 16 and 65536 of
/// them for depths 0–4; larger depths are refused.
pub fn formulas_up_to_depth(max_depth: u32) -> Vec<EFormula> {
    assert!(max_depth <= 4, "depth {max_depth} has too many formulas to list");
    let mut level = vec![EFormula::empty()];
    for _ in 0..max_depth {
        let n = level.len();
        let mut next = Vec::with_capacity(1 << n);
        for mask in 0u64..(1u64 << n) {
            next.push(EFormula::set(
                (0..n).filter(|i| mask & (1 << i) != 0).map(|i| level[i].clone()),
            ));
        }
        next.sort();
        level = next;
    }
    level
}
