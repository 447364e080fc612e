//! Property-level searches behind manipulation and emotional chains.
//!
//! Everything here works on property sets only: a category is the set of
//! its common aspects, and a candidate list is in canonical key order. The
//! first solution in that order wins, and shorter solutions always win over
//! longer ones.

use std::collections::BTreeSet;

use ego_core::EFormula;

/// The properties of one category.
pub type Props = BTreeSet<EFormula>;

fn union_all<'a>(sets: impl IntoIterator<Item = &'a Props>) -> Props {
    sets.into_iter().flat_map(|s| s.iter().cloned()).collect()
}

fn intersect(a: &Props, b: &Props) -> Props {
    a.intersection(b).cloned().collect()
}

/// Calls `f` on every `k`-subset of `0..n` in lexicographic order until it
/// returns true; returns that subset.
fn first_combination(n: usize, k: usize, f: &mut impl FnMut(&[usize]) -> bool) -> Option<Vec<usize>> {
    if k == 0 || k > n {
        return None;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if f(&idx) {
            return Some(idx);
        }
        // Advance the rightmost index that still has room.
        let i = (0..k).rev().find(|&i| idx[i] < n - k + i)?;
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// The smallest set of at least two factor categories whose properties
/// together include `target`, using at most `max_factors` of them.
///
/// Only candidates sharing a property with `target` take part. Returns
/// indices into `candidates`, ascending.
pub fn find_cover(target: &Props, candidates: &[Props], max_factors: usize) -> Option<Vec<usize>> {
    let useful: Vec<usize> = (0..candidates.len())
        .filter(|&i| !candidates[i].is_disjoint(target))
        .collect();
    for k in 2..=max_factors.min(useful.len()) {
        let found = first_combination(useful.len(), k, &mut |c| {
            let u = union_all(c.iter().map(|&i| &candidates[useful[i]]));
            target.is_subset(&u)
        });
        if let Some(c) = found {
            return Some(c.into_iter().map(|i| useful[i]).collect());
        }
    }
    None
}

/// The categories produced by the binary steps of a manipulation with the
/// given factors: `K₁ = (F₁ ∪ F₂) ∩ P`, then `Kᵢ = (Kᵢ₋₁ ∪ Fᵢ₊₁) ∩ P`.
/// The last one is `target` whenever the factors cover it.
pub fn manipulation_outputs(target: &Props, factors: &[&Props]) -> Vec<Props> {
    let mut out = Vec::new();
    if factors.len() < 2 {
        return out;
    }
    let mut acc = intersect(factors[0], target);
    for f in &factors[1..] {
        acc = intersect(&union_all([&acc, *f]), target);
        out.push(acc.clone());
    }
    out
}

/// A base emotional chain for the emotional category `e`: the fewest
/// categories, each sharing a property with `e`, whose shared properties
/// together make up `e`.
pub fn find_base_chain(e: &Props, candidates: &[Props], max_len: usize) -> Option<Vec<usize>> {
    let useful: Vec<usize> = (0..candidates.len())
        .filter(|&i| !candidates[i].is_disjoint(e))
        .collect();
    for k in 1..=max_len.min(useful.len()) {
        let found = first_combination(useful.len(), k, &mut |c| {
            let u: Props = c.iter().flat_map(|&i| intersect(&candidates[useful[i]], e)).collect();
            e.is_subset(&u)
        });
        if let Some(c) = found {
            return Some(c.into_iter().map(|i| useful[i]).collect());
        }
    }
    None
}

/// Outputs of a base emotional chain: `E ∩ c₁`, then the previous output
/// joined with `cᵢ ∩ E`; the last output is `E` itself.
pub fn base_outputs(e: &Props, chain: &[&Props]) -> Vec<Props> {
    let mut out = Vec::new();
    let mut acc = Props::new();
    for (i, c) in chain.iter().enumerate() {
        acc = union_all([&acc, &intersect(c, e)]);
        out.push(if i + 1 == chain.len() { e.clone() } else { acc.clone() });
    }
    out
}

/// Whether an ordered chain satisfies the complex-emotion requirements:
/// consecutive categories share a property, the first and last share one
/// with `e`, and the union of all of them includes `e`.
pub fn is_complex_chain(e: &Props, chain: &[&Props]) -> bool {
    match (chain.first(), chain.last()) {
        (Some(first), Some(last)) => {
            !first.is_disjoint(e)
                && !last.is_disjoint(e)
                && chain.windows(2).all(|w| !w[0].is_disjoint(w[1]))
                && e.is_subset(&union_all(chain.iter().copied()))
        }
        _ => false,
    }
}

/// The shortest complex emotional chain (ordered, no repeats), first in
/// lexicographic index order.
pub fn find_complex_chain(e: &Props, candidates: &[Props], max_len: usize) -> Option<Vec<usize>> {
    fn extend(e: &Props, candidates: &[Props], len: usize, path: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        if path.len() == len {
            let chain: Vec<&Props> = path.iter().map(|&i| &candidates[i]).collect();
            return is_complex_chain(e, &chain);
        }
        for i in 0..candidates.len() {
            if used[i] {
                continue;
            }
            let ok = match path.last() {
                None => !candidates[i].is_disjoint(e),
                Some(&p) => !candidates[p].is_disjoint(&candidates[i]),
            };
            if !ok {
                continue;
            }
            used[i] = true;
            path.push(i);
            if extend(e, candidates, len, path, used) {
                return true;
            }
            path.pop();
            used[i] = false;
        }
        false
    }
    for len in 1..=max_len.min(candidates.len()) {
        let mut path = Vec::new();
        let mut used = vec![false; candidates.len()];
        if extend(e, candidates, len, &mut path, &mut used) {
            return Some(path);
        }
    }
    None
}

/// Outputs of a complex emotional chain: `(E ∩ c₁) ∪ (c₁ ∩ c₂)`, then the
/// previous output joined with `cᵢ ∩ cᵢ₊₁` and `cᵢ ∩ E`; the last output
/// is `E` itself.
pub fn complex_outputs(e: &Props, chain: &[&Props]) -> Vec<Props> {
    let mut out = Vec::new();
    let mut acc = Props::new();
    for (i, c) in chain.iter().enumerate() {
        if i + 1 == chain.len() {
            out.push(e.clone());
            break;
        }
        acc = union_all([&acc, &intersect(c, e), &intersect(c, chain[i + 1])]);
        out.push(acc.clone());
    }
    out
}
