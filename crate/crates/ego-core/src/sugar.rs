//! Propositional connectives as brace patterns.
//!
//! | connective | brace form |
//! |---|---|
//! | `~X` | `{X}` |
//! | `X₁ ∧ … ∧ Xₙ` | `{{X₁, …, Xₙ}}` |
//! | `X₁ ∨ … ∨ Xₙ` | `{{X₁}, …, {Xₙ}}` |
//! | `X₁ ⊃ X₂` | `{X₁, {X₂}}` |
//! | `X₁ ≡ X₂` | `{{{X₁, {X₂}}, {X₂, {X₁}}}}` |
//!
//! The results are canonical formulas (duplicates removed).

use std::fmt;

use thiserror::Error;

use crate::formula::EFormula;

/// A propositional connective.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Connective {
    /// Negation, arity 1.
    Not,
    /// Conjunction, arity ≥ 1.
    And,
    /// Disjunction, arity ≥ 1.
    Or,
    /// Material implication, arity 2.
    Implies,
    /// Material equivalence, arity 2.
    Equiv,
}

impl fmt::Display for Connective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Connective::Not => "not",
            Connective::And => "and",
            Connective::Or => "or",
            Connective::Implies => "implies",
            Connective::Equiv => "equiv",
        })
    }
}

/// Wrong number of operands for a connective.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{connective} expects {expected} operand(s), got {found}")]
pub struct ArityError {
    /// The connective.
    pub connective: Connective,
    /// Human-readable expected arity.
    pub expected: &'static str,
    /// Number of operands supplied.
    pub found: usize,
}

/// Expands a connective into its brace form.
pub fn desugar(connective: Connective, args: &[EFormula]) -> Result<EFormula, ArityError> {
    let arity_error = |expected| ArityError {
        connective,
        expected,
        found: args.len(),
    };
    match connective {
        Connective::Not => match args {
            [x] => Ok(not(x.clone())),
            _ => Err(arity_error("exactly 1")),
        },
        Connective::And if !args.is_empty() => Ok(and(args.iter().cloned())),
        Connective::Or if !args.is_empty() => Ok(or(args.iter().cloned())),
        Connective::And | Connective::Or => Err(arity_error("at least 1")),
        Connective::Implies => match args {
            [a, b] => Ok(implies(a.clone(), b.clone())),
            _ => Err(arity_error("exactly 2")),
        },
        Connective::Equiv => match args {
            [a, b] => Ok(equiv(a.clone(), b.clone())),
            _ => Err(arity_error("exactly 2")),
        },
    }
}

/// `{X}`.
pub fn not(x: EFormula) -> EFormula {
    EFormula::singleton(x)
}

/// `{{X₁, …, Xₙ}}`. Arity is not checked here (an empty list yields `{∅}`);
/// use [`desugar`] for checked construction.
pub fn and<I: IntoIterator<Item = EFormula>>(xs: I) -> EFormula {
    EFormula::singleton(EFormula::set(xs))
}

/// `{{X₁}, …, {Xₙ}}`.
pub fn or<I: IntoIterator<Item = EFormula>>(xs: I) -> EFormula {
    EFormula::set(xs.into_iter().map(EFormula::singleton))
}

/// `{X₁, {X₂}}`.
pub fn implies(a: EFormula, b: EFormula) -> EFormula {
    EFormula::pair(a, EFormula::singleton(b))
}

/// `{{{X₁, {X₂}}, {X₂, {X₁}}}}`.
pub fn equiv(a: EFormula, b: EFormula) -> EFormula {
    let forward = implies(a.clone(), b.clone());
    let backward = implies(b, a);
    EFormula::singleton(EFormula::pair(forward, backward))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::truth::{SentenceClass, TruthValue};

    fn e() -> EFormula {
        EFormula::empty()
    }

    fn values(x: &EFormula) -> [bool; 2] {
        [x.truth(TruthValue::T).is_true(), x.truth(TruthValue::F).is_true()]
    }

    #[test]
    fn not_of_empty() {
        assert_eq!(desugar(Connective::Not, &[e()]).unwrap().render(), "{0}");
    }

    #[test]
    fn literal_forms() {
        let a = e();
        let b = EFormula::singleton(e());
        assert_eq!(
            desugar(Connective::Or, &[a.clone(), b.clone()]).unwrap().render(),
            "{{0},{{0}}}"
        );
        assert_eq!(
            desugar(Connective::And, &[a.clone(), b.clone()]).unwrap().render(),
            "{{0,{0}}}"
        );
        assert_eq!(
            desugar(Connective::Implies, &[a.clone(), b.clone()]).unwrap().render(),
            "{0,{{0}}}"
        );
    }

    #[test]
    fn equivalence_classification() {
        assert_eq!(equiv(e(), e()).classify(), SentenceClass::Tautology);
        assert_eq!(
            equiv(e(), EFormula::singleton(e())).classify(),
            SentenceClass::Contradiction
        );
    }

    #[test]
    fn truth_tables() {
        // ∅ and {∅} realise every pair of values over the two assignments
        // only together with constants, so tabulate over a small pool.
        let pool = [
            e(),
            EFormula::singleton(e()),
            EFormula::pair(e(), EFormula::singleton(e())),
            EFormula::singleton(EFormula::pair(e(), EFormula::singleton(e()))),
        ];
        for a in &pool {
            assert_eq!(values(&not(a.clone())), values(a).map(|v| !v));
            for b in &pool {
                let (va, vb) = (values(a), values(b));
                let and_ab = values(&and([a.clone(), b.clone()]));
                let or_ab = values(&or([a.clone(), b.clone()]));
                let imp_ab = values(&implies(a.clone(), b.clone()));
                let eq_ab = values(&equiv(a.clone(), b.clone()));
                for i in 0..2 {
                    assert_eq!(and_ab[i], va[i] && vb[i]);
                    assert_eq!(or_ab[i], va[i] || vb[i]);
                    assert_eq!(imp_ab[i], !va[i] || vb[i]);
                    assert_eq!(eq_ab[i], va[i] == vb[i]);
                }
            }
        }
    }

    #[test]
    fn arity_errors() {
        assert!(desugar(Connective::Not, &[]).is_err());
        assert!(desugar(Connective::And, &[]).is_err());
        assert!(desugar(Connective::Or, &[]).is_err());
        assert!(desugar(Connective::Implies, &[e()]).is_err());
        let err = desugar(Connective::Equiv, &[e(), e(), e()]).unwrap_err();
        assert_eq!(err.found, 3);
        assert_eq!(err.to_string(), "equiv expects exactly 2 operand(s), got 3");
    }
}
