//! Symbolic evaluator trees.
//!
//! An evaluator is kept as a tree of equivalences, conjunctions and
//! disjunctions before it is spelled out in braces. Subtrees are shared, the
//! truth value under both assignments of `∅` is cached at every node, and
//! the brace formula is only built on request, so classification stays cheap
//! even when the formula itself would be huge.

use std::fmt;
use std::sync::{Arc, OnceLock};

use ego_core::sugar::{and, equiv, or};
use ego_core::{EFormula, SentenceClass, TruthValue};

/// One node of an evaluator tree.
#[derive(Debug)]
pub enum Node {
    /// `{x ≡ y}` between two formulas.
    Equiv(EFormula, EFormula),
    /// `{a ≡ b}` between two evaluators.
    Iff(Expansion, Expansion),
    /// `{a₁ ∧ … ∧ aₙ}`, n ≥ 2.
    And(Vec<Expansion>),
    /// `{a₁ ∨ … ∨ aₙ}`, n ≥ 2.
    Or(Vec<Expansion>),
}

struct Inner {
    node: Node,
    truth: [bool; 2],
    formula: OnceLock<EFormula>,
}

/// A shared evaluator tree. Cloning is cheap.
#[derive(Clone)]
pub struct Expansion(Arc<Inner>);

fn truth_pair(x: &EFormula) -> [bool; 2] {
    [x.truth(TruthValue::T).is_true(), x.truth(TruthValue::F).is_true()]
}

impl Expansion {
    fn new(node: Node) -> Expansion {
        let truth = match &node {
            Node::Equiv(x, y) => {
                let (a, b) = (truth_pair(x), truth_pair(y));
                [a[0] == b[0], a[1] == b[1]]
            }
            Node::Iff(a, b) => [a.0.truth[0] == b.0.truth[0], a.0.truth[1] == b.0.truth[1]],
            Node::And(xs) => [xs.iter().all(|e| e.0.truth[0]), xs.iter().all(|e| e.0.truth[1])],
            Node::Or(xs) => [xs.iter().any(|e| e.0.truth[0]), xs.iter().any(|e| e.0.truth[1])],
        };
        Expansion(Arc::new(Inner {
            node,
            truth,
            formula: OnceLock::new(),
        }))
    }

    /// `{x ≡ y}`.
    pub fn equiv(x: EFormula, y: EFormula) -> Expansion {
        Self::new(Node::Equiv(x, y))
    }

    /// `{a ≡ b}` between evaluators.
    pub fn iff(a: Expansion, b: Expansion) -> Expansion {
        Self::new(Node::Iff(a, b))
    }

    /// Conjunction; a single operand is returned as is.
    ///
    /// # Panics
    /// On an empty operand list.
    pub fn and(mut xs: Vec<Expansion>) -> Expansion {
        assert!(!xs.is_empty(), "empty conjunction");
        if xs.len() == 1 {
            return xs.pop().expect("one operand");
        }
        Self::new(Node::And(xs))
    }

    /// Disjunction; a single operand is returned as is.
    ///
    /// # Panics
    /// On an empty operand list.
    pub fn or(mut xs: Vec<Expansion>) -> Expansion {
        assert!(!xs.is_empty(), "empty disjunction");
        if xs.len() == 1 {
            return xs.pop().expect("one operand");
        }
        Self::new(Node::Or(xs))
    }

    /// The top node.
    pub fn node(&self) -> &Node {
        &self.0.node
    }

    /// Truth value under an assignment of `∅`.
    pub fn truth(&self, v: TruthValue) -> TruthValue {
        TruthValue::from_bool(self.0.truth[usize::from(v == TruthValue::F)])
    }

    /// Tautology, contradiction or contingent.
    pub fn classify(&self) -> SentenceClass {
        match self.0.truth {
            [true, true] => SentenceClass::Tautology,
            [false, false] => SentenceClass::Contradiction,
            _ => SentenceClass::Contingent,
        }
    }

    /// Whether two handles share the same tree.
    pub fn ptr_eq(&self, other: &Expansion) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    /// The evaluator spelled out as a canonical brace formula.
    pub fn formula(&self) -> EFormula {
        self.0
            .formula
            .get_or_init(|| match &self.0.node {
                Node::Equiv(x, y) => equiv(x.clone(), y.clone()),
                Node::Iff(a, b) => equiv(a.formula(), b.formula()),
                Node::And(xs) => and(xs.iter().map(Expansion::formula)),
                Node::Or(xs) => or(xs.iter().map(Expansion::formula)),
            })
            .clone()
    }
}

impl fmt::Display for Expansion {
    /// Connective notation with `∅`: `{{∅ ≡ ∅} ∧ {∅ ≡ {∅}}}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn list(f: &mut fmt::Formatter<'_>, xs: &[Expansion], sep: &str) -> fmt::Result {
            f.write_str("{")?;
            for (i, x) in xs.iter().enumerate() {
                if i > 0 {
                    f.write_str(sep)?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("}")
        }
        match &self.0.node {
            Node::Equiv(x, y) => write!(f, "{{{} ≡ {}}}", x.pretty(), y.pretty()),
            Node::Iff(a, b) => write!(f, "{{{a} ≡ {b}}}"),
            Node::And(xs) => list(f, xs, " ∧ "),
            Node::Or(xs) => list(f, xs, " ∨ "),
        }
    }
}

impl fmt::Debug for Expansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Expansion({self})")
    }
}
