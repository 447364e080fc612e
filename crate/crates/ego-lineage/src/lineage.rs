//! Descendant counts and lineage sets.

use std::collections::BTreeMap;
use std::fmt;

use ego_core::{Assembly, EFormula};

use crate::codes::{code_nodes, NodeCode};

/// Descendant count of a canonical term: `∅` counts 1, a set counts one plus
/// the counts of its members.
pub fn desc(x: &EFormula) -> u64 {
    x.desc()
}

/// Descendant count of a raw tree. Unlike [`desc`] this is sensitive to
/// repeated members, so equal sets may differ here.
pub fn desc_raw(x: &Assembly) -> u64 {
    x.node_count() as u64
}

/// Descendant counts along one root-to-leaf path, root first; always ends
/// in 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Lineage(Vec<u64>);

impl Lineage {
    /// The counts, root first.
    pub fn values(&self) -> &[u64] {
        &self.0
    }
}

impl From<Vec<u64>> for Lineage {
    fn from(v: Vec<u64>) -> Self {
        Lineage(v)
    }
}

impl fmt::Display for Lineage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("⟨")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("⟩")
    }
}

/// The set of all lineages of a term, stored sorted and deduplicated so that
/// comparison is a linear scan and the set can serve as a hash key.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LineageSet(Vec<Lineage>);

impl LineageSet {
    /// Lineages in sorted order.
    pub fn lineages(&self) -> &[Lineage] {
        &self.0
    }

    /// Number of distinct lineages.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false: every term has at least one lineage.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Builds a set from arbitrary lineages (sorting and deduplicating).
    pub fn from_lineages<I: IntoIterator<Item = Lineage>>(items: I) -> LineageSet {
        let mut v: Vec<Lineage> = items.into_iter().collect();
        v.sort();
        v.dedup();
        LineageSet(v)
    }
}

impl fmt::Display for LineageSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{l}")?;
        }
        f.write_str("}")
    }
}

/// All root-to-leaf descendant tuples of a canonical term.
pub fn lineage_set(x: &EFormula) -> LineageSet {
    let mut out = Vec::new();
    let mut path = Vec::new();
    collect(x, &mut path, &mut out);
    LineageSet::from_lineages(out)
}

fn collect(x: &EFormula, path: &mut Vec<u64>, out: &mut Vec<Lineage>) {
    path.push(x.desc());
    if x.is_empty() {
        out.push(Lineage(path.clone()));
    } else {
        for m in x.members() {
            collect(m, path, out);
        }
    }
    path.pop();
}

/// Set equality decided by comparing lineage sets.
pub fn fast_equal(x: &EFormula, y: &EFormula) -> bool {
    x.desc() == y.desc() && lineage_set(x) == lineage_set(y)
}

/// The lineage set of every node of a canonical term, keyed by node code
/// (the canonical member order is taken as the drawing order).
pub fn lineage_sets_per_node(x: &EFormula) -> BTreeMap<NodeCode, LineageSet> {
    let tree = Assembly::from(x);
    code_nodes(&tree)
        .into_iter()
        .map(|(path, code)| {
            let mut node = x;
            for &i in path.indices() {
                node = &node.members()[i];
            }
            (code, lineage_set(node))
        })
        .collect()
}
