//! The `ego` command line, as a library.
//!
//! * [`run`]: load a scenario, run the individual, write its trace.
//! * [`verify`]: exhaustive and seeded checks of the evaluator and lineage
//!   theorems, and a replay of the worked examples.
//! * [`eval`]: build, print and classify one relational evaluator.
//!
//! Exit codes are part of the interface: see [`error`].

#![warn(missing_docs)]

pub mod error;
pub mod eval;
pub mod run;
pub mod verify;

pub use error::CliError;
