//! Seeded random generation of formulas and ordered trees.

use rand::Rng;

use crate::assembly::Assembly;
use crate::formula::EFormula;

/// A random canonical formula of depth at most `max_depth` whose sets have
/// between 1 and `max_width` written members (before deduplication).
///
/// Below the root each position becomes `∅` with probability 1/3, which keeps
/// the expected size small while still reaching the depth bound regularly.
pub fn random_formula<R: Rng + ?Sized>(rng: &mut R, max_depth: u32, max_width: usize) -> EFormula {
    random_formula_at(rng, max_depth, max_width.max(1), true)
}

fn random_formula_at<R: Rng + ?Sized>(rng: &mut R, depth_left: u32, max_width: usize, root: bool) -> EFormula {
    if depth_left == 0 || (!root && rng.gen_ratio(1, 3)) || (root && rng.gen_ratio(1, 16)) {
        return EFormula::empty();
    }
    let width = rng.gen_range(1..=max_width);
    EFormula::set((0..width).map(|_| random_formula_at(rng, depth_left - 1, max_width, false)))
}

/// A random ordered tree with exactly `nodes` nodes (at least 1), built by
/// attaching each new node under a uniformly chosen earlier node; children
/// keep their attachment order. Repeated equal siblings are allowed.
pub fn random_tree<R: Rng + ?Sized>(rng: &mut R, nodes: usize) -> Assembly {
    let nodes = nodes.max(1);
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); nodes];
    for id in 1..nodes {
        let parent = rng.gen_range(0..id);
        children[parent].push(id);
    }
    // Assemble bottom-up: ids are topologically ordered (parent < child).
    let mut built: Vec<Option<Assembly>> = vec![None; nodes];
    for id in (0..nodes).rev() {
        let kids = children[id]
            .iter()
            .map(|&c| built[c].take().expect("child built before parent"))
            .collect();
        built[id] = Some(Assembly::branch(kids));
    }
    built[0].take().expect("root")
}
