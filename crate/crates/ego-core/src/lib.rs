//! Finite nested-set terms over a single atom.
//!
//! Every term of the language is built from the empty set `∅` (written `0`
//! in ASCII) with braces: `0`, `{0}`, `{0,{0}}`, … The same term is read two
//! ways at once:
//!
//! * as a **finite set** given by listing its members, and
//! * as a **sentence** of propositional logic whose only variable is `∅`,
//!   where braces act as NAND: `{X₁, …, Xₙ}` is false exactly when every
//!   `Xᵢ` is true.
//!
//! [`Assembly`] is the raw ordered tree produced by the parser; [`EFormula`]
//! is its canonical normal form (no repeated members, fixed member order),
//! on which every set-level algorithm operates.
//!
//! ```
//! use ego_core::{parse, SentenceClass, TruthValue};
//!
//! let x = parse("{{0},0,{0}}").unwrap();
//! let f = x.normalize();
//! assert_eq!(f.render(), "{0,{0}}");
//! assert_eq!(f.truth(TruthValue::T), TruthValue::T);
//! assert_eq!(f.classify(), SentenceClass::Tautology);
//! ```

#![warn(missing_docs)]

mod assembly;
pub mod enumerate;
mod formula;
#[cfg(feature = "rand")]
pub mod gen;
mod limits;
mod parse;
pub mod sugar;
mod truth;

pub use assembly::{is_member, normalize, set_equal, Assembly};
pub use formula::{EFormula, RenderBytes};
pub use limits::{Limits, ResourceError};
pub use parse::{parse, parse_formula, parse_with, ParseError, SyntaxError, SyntaxErrorKind};
pub use sugar::{desugar, ArityError, Connective};
pub use truth::{classify, eval_truth, SentenceClass, TruthValue};
