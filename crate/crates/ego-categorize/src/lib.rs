//! Categorization over nested-set terms.
//!
//! A *subassembly* of `x` is `x` itself or any member, recursively. A
//! *common aspect* of several inputs is a subassembly shared by all of them
//! that is not merely a part of a larger shared subassembly. The *category*
//! of the inputs is the set of their common aspects; a formula is an
//! *instance* of a category when it contains every one of its aspects.
//!
//! ```
//! use ego_categorize::{category, is_instance};
//! use ego_core::parse_formula;
//!
//! let u = parse_formula("{0,{{0}},{0,{{0}}}}").unwrap();
//! let v = parse_formula("{{0},{{0}}}").unwrap();
//! let c = category(&[u.clone(), v]);
//! assert_eq!(c.properties().pretty(), "{∅, {{∅}}}");
//! assert!(is_instance(&u, &c));
//! ```

#![warn(missing_docs)]

mod aspects;
mod category;
mod ledger;

pub use aspects::{common_aspects, is_subassembly, subassemblies, subterms};
pub use category::{category, has_properties, is_generic, is_instance, Category, CategoryKey, CategoryRegistry};
pub use ledger::{ledger_apply, HomeostaticLedger};
