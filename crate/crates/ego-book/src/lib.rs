//! The guide in `book/`, one module per chapter, so that `cargo test
//! --doc` compiles and runs every code block of the book. A failing block
//! is reported under the module of its chapter.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/formulas.md")]
pub mod formulas {}
#[doc = include_str!("../../../book/src/evaluators.md")]
pub mod evaluators {}
#[doc = include_str!("../../../book/src/lineages.md")]
pub mod lineages {}
#[doc = include_str!("../../../book/src/encodings.md")]
pub mod encodings {}
#[doc = include_str!("../../../book/src/categories.md")]
pub mod categories {}
#[doc = include_str!("../../../book/src/individual.md")]
pub mod individual {}
#[doc = include_str!("../../../book/src/scenarios.md")]
pub mod scenarios {}
