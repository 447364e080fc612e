//! Two-valued NAND semantics.
//!
//! `∅` is the only propositional variable. A set `{X₁, …, Xₙ}` is false
//! exactly when all of its members are true, so `{X}` is the negation of `X`
//! and `{X₁, …, Xₙ}` is the NAND of its members.

use std::fmt;

use crate::assembly::Assembly;

/// A truth value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TruthValue {
    /// True.
    T,
    /// False.
    F,
}

impl TruthValue {
    /// `true ↦ T`, `false ↦ F`.
    pub fn from_bool(b: bool) -> TruthValue {
        if b {
            TruthValue::T
        } else {
            TruthValue::F
        }
    }

    /// `T ↦ true`.
    pub fn is_true(self) -> bool {
        self == TruthValue::T
    }

    /// Both assignments of `∅`, in the order `T`, `F`.
    pub const ALL: [TruthValue; 2] = [TruthValue::T, TruthValue::F];
}

/// Classification of a formula over both assignments of `∅`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SentenceClass {
    /// True under both assignments.
    Tautology,
    /// False under both assignments.
    Contradiction,
    /// Value depends on the assignment (for example the bare `∅`).
    Contingent,
}

impl fmt::Display for SentenceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SentenceClass::Tautology => "tautology",
            SentenceClass::Contradiction => "contradiction",
            SentenceClass::Contingent => "contingent",
        })
    }
}

/// Evaluates a raw assembly under `∅ = v`.
///
/// Works on the raw tree: duplicated members do not change a NAND.
pub fn eval_truth(x: &Assembly, v: TruthValue) -> TruthValue {
    if x.is_leaf() {
        return v;
    }
    let all_true = x.children().iter().all(|c| eval_truth(c, v).is_true());
    TruthValue::from_bool(!all_true)
}

/// Classifies a raw assembly by evaluating it under both assignments.
pub fn classify(x: &Assembly) -> SentenceClass {
    match (eval_truth(x, TruthValue::T), eval_truth(x, TruthValue::F)) {
        (TruthValue::T, TruthValue::T) => SentenceClass::Tautology,
        (TruthValue::F, TruthValue::F) => SentenceClass::Contradiction,
        _ => SentenceClass::Contingent,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse;

    #[test]
    fn leaf_tracks_assignment() {
        let x = parse("0").unwrap();
        assert_eq!(eval_truth(&x, TruthValue::T), TruthValue::T);
        assert_eq!(eval_truth(&x, TruthValue::F), TruthValue::F);
        assert_eq!(classify(&x), SentenceClass::Contingent);
    }

    #[test]
    fn singleton_negates() {
        let x = parse("{0}").unwrap();
        assert_eq!(eval_truth(&x, TruthValue::T), TruthValue::F);
        assert_eq!(eval_truth(&x, TruthValue::F), TruthValue::T);
    }

    #[test]
    fn excluded_middle_is_tautology() {
        // {∅, {∅}} = NAND(∅, ¬∅).
        let x = parse("{0,{0}}").unwrap();
        assert_eq!(eval_truth(&x, TruthValue::T), TruthValue::T);
        assert_eq!(classify(&x), SentenceClass::Tautology);
    }

    #[test]
    fn raw_and_canonical_agree() {
        let x = parse("{{0,0},{0},{{0}}}").unwrap();
        let f = x.normalize();
        for v in TruthValue::ALL {
            assert_eq!(eval_truth(&x, v), f.truth(v));
        }
    }
}
