//! Relational evaluators: formulas that decide set relations by their truth
//! table.
//!
//! For any two formulas `x` and `y`, [`Evaluator::equality`] builds a
//! formula `{x = y}` that is a tautology when `x` and `y` denote the same
//! set and a contradiction when they do not. Membership, inclusion,
//! intersection and union evaluators are assembled from it.
//!
//! Evaluators are kept as shared [`Expansion`] trees with cached truth
//! values; [`Expansion::formula`] spells one out in braces on request.
//!
//! ```
//! use ego_core::{parse_formula, SentenceClass};
//! use ego_evaluator::Evaluator;
//!
//! let x = parse_formula("{0}").unwrap();
//! let y = parse_formula("{0,{0}}").unwrap();
//! let e = Evaluator::new().equality(&x, &y).unwrap();
//! assert_eq!(e.to_string(), "{{{∅} ≡ {∅, {∅}}} ∧ {{∅ ≡ ∅} ∧ {∅ ≡ {∅}}}}");
//! assert_eq!(e.classify(), SentenceClass::Contradiction);
//! ```

#![warn(missing_docs)]

mod error;
mod evaluator;
mod expansion;
mod pairing;
mod reconstruct;

pub use error::EvalError;
pub use evaluator::{
    check_self_reference, check_self_reference_with, equality_evaluator, intersection, membership_evaluator,
    subset_evaluator, union, Evaluator, SetOperation, Verification,
};
pub use expansion::{Expansion, Node};
pub use pairing::{
    container, enumerate_pairings, enumerate_pairings_exact, pairing_count, surjection_count, Direction, Pairing,
    Pairings,
};
pub use reconstruct::{reconstruct_arguments, reconstruct_arguments_with};
