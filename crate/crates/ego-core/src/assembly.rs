//! Raw, ordered trees.
//!
//! An [`Assembly`] keeps its members in the order they were written and may
//! repeat them. It is what the parser produces and what node codification
//! walks. All set-level algorithms work on the normal form returned by
//! [`Assembly::normalize`].

use std::fmt;

use crate::formula::EFormula;

/// A rooted ordered tree over the single leaf `∅`.
///
/// A node without children *is* `∅`: the language has no other memberless
/// term, so an empty child list and the leaf coincide. The derived equality
/// is ordered structural identity; use [`set_equal`] for set equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Assembly {
    children: Vec<Assembly>,
}

impl Assembly {
    /// The leaf `∅`.
    pub fn leaf() -> Assembly {
        Assembly { children: Vec::new() }
    }

    /// A set written with the given members, in order. An empty list yields
    /// `∅`.
    pub fn branch(children: Vec<Assembly>) -> Assembly {
        Assembly { children }
    }

    /// `{x}`.
    pub fn singleton(x: Assembly) -> Assembly {
        Assembly { children: vec![x] }
    }

    /// Whether this is `∅`.
    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    /// Members in written order.
    pub fn children(&self) -> &[Assembly] {
        &self.children
    }

    /// Mutable access to the written members.
    pub fn children_mut(&mut self) -> &mut Vec<Assembly> {
        &mut self.children
    }

    /// Number of tree nodes (the raw descendant count).
    pub fn node_count(&self) -> usize {
        1 + self.children.iter().map(Assembly::node_count).sum::<usize>()
    }

    /// Nesting depth; `∅` has depth 0.
    pub fn depth(&self) -> usize {
        self.children.iter().map(|c| c.depth() + 1).max().unwrap_or(0)
    }

    /// Bottom-up deduplication of equal siblings followed by canonical
    /// ordering.
    pub fn normalize(&self) -> EFormula {
        EFormula::set(self.children.iter().map(Assembly::normalize))
    }

    /// ASCII rendering in written order, e.g. `{0,0}`.
    pub fn render(&self) -> String {
        self.to_string()
    }
}

impl From<&EFormula> for Assembly {
    fn from(x: &EFormula) -> Self {
        Assembly {
            children: x.members().iter().map(Assembly::from).collect(),
        }
    }
}

impl From<EFormula> for Assembly {
    fn from(x: EFormula) -> Self {
        Assembly::from(&x)
    }
}

impl From<&Assembly> for EFormula {
    fn from(x: &Assembly) -> Self {
        x.normalize()
    }
}

impl fmt::Display for Assembly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.children.is_empty() {
            return f.write_str("0");
        }
        f.write_str("{")?;
        for (i, c) in self.children.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            fmt::Display::fmt(c, f)?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Assembly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Assembly({self})")
    }
}

/// Set equality: same members up to order and repetition, recursively.
pub fn set_equal(x: &Assembly, y: &Assembly) -> bool {
    x.normalize() == y.normalize()
}

/// Membership: `y` is a set with some member set-equal to `x`. Never true
/// for `y = ∅`.
pub fn is_member(x: &Assembly, y: &Assembly) -> bool {
    let x = x.normalize();
    y.children().iter().any(|c| c.normalize() == x)
}

/// Canonical form of a raw assembly (free-function form of
/// [`Assembly::normalize`]).
pub fn normalize(a: &Assembly) -> EFormula {
    a.normalize()
}
