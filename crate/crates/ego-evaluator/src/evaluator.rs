//! The equality evaluator and the relations built on it.

use std::collections::HashMap;

use ego_core::{EFormula, ResourceError, SentenceClass};

use crate::error::EvalError;
use crate::expansion::Expansion;
use crate::pairing::{container, enumerate_pairings, pairing_count};

/// Builds evaluators, sharing every `{x = y}` subtree it has already built.
///
/// Reuse one builder for many evaluators over related formulas; the memo
/// grows with the number of distinct argument pairs seen.
#[derive(Debug, Clone)]
pub struct Evaluator {
    pairing_limit: u64,
    memo: HashMap<(EFormula, EFormula), Expansion>,
}

impl Default for Evaluator {
    fn default() -> Self {
        Self::new()
    }
}

impl Evaluator {
    /// Default bound on the number of pairings enumerated for one argument
    /// pair.
    pub const DEFAULT_PAIRING_LIMIT: u64 = 10_000;

    /// A builder with the default pairing limit.
    pub fn new() -> Evaluator {
        Evaluator {
            pairing_limit: Self::DEFAULT_PAIRING_LIMIT,
            memo: HashMap::new(),
        }
    }

    /// Sets the pairing limit.
    ///
    /// # Panics
    /// If `limit` is zero.
    pub fn with_pairing_limit(mut self, limit: u64) -> Evaluator {
        assert!(limit > 0, "pairing limit must be positive");
        self.pairing_limit = limit;
        self
    }

    /// The configured pairing limit.
    pub fn pairing_limit(&self) -> u64 {
        self.pairing_limit
    }

    /// `{x = y}`: a tautology when `x` and `y` are the same set and a
    /// contradiction otherwise.
    ///
    /// * Both containers are `{∅}`: `{x ≡ y}`.
    /// * Exactly one is: `{{x ≡ y} ∧ P}` where `P` conjoins `{w = z}` over
    ///   the pairs of the single pairing.
    /// * Neither is: `{{x ≡ y} ∧ {P₁ ∨ … ∨ Pₙ}}` over all pairings.
    ///
    /// Single-operand conjunctions and disjunctions are written as their
    /// operand.
    pub fn equality(&mut self, x: &EFormula, y: &EFormula) -> Result<Expansion, EvalError> {
        if let Some(e) = self.memo.get(&(x.clone(), y.clone())) {
            return Ok(e.clone());
        }
        let unit = EFormula::singleton(EFormula::empty());
        let (cx, cy) = (container(x), container(y));
        let head = Expansion::equiv(x.clone(), y.clone());
        let result = if cx == unit && cy == unit {
            head
        } else {
            let required = pairing_count(x, y);
            if required > u128::from(self.pairing_limit) {
                return Err(ResourceError::PairingsExceeded {
                    limit: self.pairing_limit,
                    required,
                }
                .into());
            }
            let pairings = enumerate_pairings(x, y, self.pairing_limit).pairings;
            let mut alternatives = Vec::with_capacity(pairings.len());
            for pairing in &pairings {
                let mut conjuncts = Vec::with_capacity(pairing.pairs.len());
                for (w, z) in &pairing.pairs {
                    conjuncts.push(self.equality(w, z)?);
                }
                alternatives.push(Expansion::and(conjuncts));
            }
            Expansion::and(vec![head, Expansion::or(alternatives)])
        };
        self.memo.insert((x.clone(), y.clone()), result.clone());
        Ok(result)
    }

    /// `{x ∈ y}`: `{x = y₁}` for a single member, otherwise the disjunction
    /// of `{x = yᵢ}` over the members of `y`.
    pub fn membership(&mut self, x: &EFormula, y: &EFormula) -> Result<Expansion, EvalError> {
        if y.is_empty() {
            return Err(EvalError::Domain {
                operation: "membership",
                reason: "the right-hand side has no members",
            });
        }
        let disjuncts = y
            .members()
            .iter()
            .map(|yi| self.equality(x, yi))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Expansion::or(disjuncts))
    }

    /// `{x ⊆ y}`: the conjunction of `{xᵢ ∈ y}` over the members of `x`.
    pub fn subset(&mut self, x: &EFormula, y: &EFormula) -> Result<Expansion, EvalError> {
        if x.is_empty() || y.is_empty() {
            return Err(EvalError::Domain {
                operation: "subset",
                reason: "both sides must have members",
            });
        }
        let conjuncts = x
            .members()
            .iter()
            .map(|xi| self.membership(xi, y))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Expansion::and(conjuncts))
    }

    /// The formula that is a tautology exactly when `z` is the intersection
    /// of `x` and `y`: the conjunction over members `xᵢ` of `x` of
    /// `{{xᵢ ∈ z} ≡ {xᵢ ∈ y}}`.
    ///
    /// When `z` has no members the membership `{xᵢ ∈ z}` is undefined; it is
    /// replaced by the contradiction `{∅ ≡ {∅}}`, so the formula holds
    /// exactly when no member of `x` belongs to `y`.
    pub fn intersection_check(&mut self, x: &EFormula, y: &EFormula, z: &EFormula) -> Result<Expansion, EvalError> {
        domain_pair("intersection", x, y)?;
        let falsum = self.equality(&EFormula::empty(), &EFormula::singleton(EFormula::empty()))?;
        let conjuncts = x
            .members()
            .iter()
            .map(|xi| {
                let in_y = self.membership(xi, y)?;
                let in_z = if z.is_empty() {
                    falsum.clone()
                } else {
                    self.membership(xi, z)?
                };
                Ok(Expansion::iff(in_z, in_y))
            })
            .collect::<Result<Vec<_>, EvalError>>()?;
        Ok(Expansion::and(conjuncts))
    }

    /// The formula that is a tautology exactly when every member of `x` and
    /// of `y` is a member of `z`.
    pub fn union_check(&mut self, x: &EFormula, y: &EFormula, z: &EFormula) -> Result<Expansion, EvalError> {
        domain_pair("union", x, y)?;
        if z.is_empty() {
            return Err(EvalError::Domain {
                operation: "union",
                reason: "a union of non-empty sets has members",
            });
        }
        let conjuncts = x
            .members()
            .iter()
            .chain(y.members())
            .map(|m| self.membership(m, z))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Expansion::and(conjuncts))
    }
}

fn domain_pair(operation: &'static str, x: &EFormula, y: &EFormula) -> Result<(), EvalError> {
    if x.is_empty() || y.is_empty() {
        Err(EvalError::Domain {
            operation,
            reason: "both sides must have members",
        })
    } else {
        Ok(())
    }
}

/// Whether verification formulas are built and checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Verification {
    /// Compute the result directly.
    #[default]
    Skip,
    /// Also build the defining formula and require it to be a tautology.
    Check,
}

/// Result of [`intersection`] or [`union`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetOperation {
    /// The resulting set (`∅` for an empty intersection).
    pub formula: EFormula,
    /// True when an intersection came out empty.
    pub disjoint: bool,
}

/// The members of `x` that are members of `y`.
pub fn intersection(x: &EFormula, y: &EFormula, verification: Verification) -> Result<SetOperation, EvalError> {
    domain_pair("intersection", x, y)?;
    let formula = EFormula::set(x.members().iter().filter(|m| y.contains(m)).cloned());
    if verification == Verification::Check {
        let check = Evaluator::new().intersection_check(x, y, &formula)?;
        require_tautology("intersection", &check)?;
    }
    Ok(SetOperation {
        disjoint: formula.is_empty(),
        formula,
    })
}

/// The members of `x` together with those of `y`.
pub fn union(x: &EFormula, y: &EFormula, verification: Verification) -> Result<SetOperation, EvalError> {
    domain_pair("union", x, y)?;
    let formula = EFormula::set(x.members().iter().chain(y.members()).cloned());
    if verification == Verification::Check {
        let check = Evaluator::new().union_check(x, y, &formula)?;
        require_tautology("union", &check)?;
    }
    Ok(SetOperation {
        formula,
        disjoint: false,
    })
}

fn require_tautology(operation: &'static str, e: &Expansion) -> Result<(), EvalError> {
    match e.classify() {
        SentenceClass::Tautology => Ok(()),
        found => Err(EvalError::VerificationFailed { operation, found }),
    }
}

/// `{x = y}` as a brace formula, built with the default pairing limit.
pub fn equality_evaluator(x: &EFormula, y: &EFormula) -> Result<EFormula, EvalError> {
    Ok(Evaluator::new().equality(x, y)?.formula())
}

/// `{x ∈ y}` as a brace formula.
pub fn membership_evaluator(x: &EFormula, y: &EFormula) -> Result<EFormula, EvalError> {
    Ok(Evaluator::new().membership(x, y)?.formula())
}

/// `{x ⊆ y}` as a brace formula.
pub fn subset_evaluator(x: &EFormula, y: &EFormula) -> Result<EFormula, EvalError> {
    Ok(Evaluator::new().subset(x, y)?.formula())
}

/// Whether the equality evaluator of `x` and `y` is a tautology when they
/// are equal and a contradiction when they are not.
pub fn check_self_reference(x: &EFormula, y: &EFormula) -> Result<bool, EvalError> {
    check_self_reference_with(&mut Evaluator::new(), x, y)
}

/// [`check_self_reference`] reusing a builder.
pub fn check_self_reference_with(ev: &mut Evaluator, x: &EFormula, y: &EFormula) -> Result<bool, EvalError> {
    let expected = if x == y {
        SentenceClass::Tautology
    } else {
        SentenceClass::Contradiction
    };
    Ok(ev.equality(x, y)?.classify() == expected)
}
