//! Structural fingerprints of nested-set terms.
//!
//! * [`desc`] counts the nodes below and including a term.
//! * A **lineage** is the tuple of descendant counts met on a root-to-leaf
//!   path; [`lineage_set`] collects all of them. Two canonical terms denote
//!   the same set exactly when their lineage sets coincide, which gives
//!   [`fast_equal`], an equality test that never builds an evaluator.
//! * [`code_nodes`] assigns every node of a drawn (ordered) tree a digit
//!   string; the map is injective and [`subassembly_at`] inverts it.
//!
//! ```
//! use ego_lineage::{lineage_set, fast_equal};
//! use ego_core::parse_formula;
//!
//! let x = parse_formula("{0,{{0}},{0,{0}}}").unwrap();
//! assert_eq!(lineage_set(&x).to_string(), "{⟨9,1⟩, ⟨9,3,2,1⟩, ⟨9,4,1⟩, ⟨9,4,2,1⟩}");
//! assert!(fast_equal(&x, &parse_formula("{{{0},0},{{0}},0,0}").unwrap()));
//! ```

#![warn(missing_docs)]

mod codes;
mod lineage;

pub use codes::{code_nodes, h_sequence, h_term, subassembly_at, CodeError, NodeCode, NodePath};
pub use lineage::{desc, desc_raw, fast_equal, lineage_set, lineage_sets_per_node, Lineage, LineageSet};
