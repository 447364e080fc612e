//! A deterministic environment for the homeostatic engine.
//!
//! The environment knows things the individual never sees: which tokens
//! its perturbations carry, which states they destroy and what appears in
//! their place. It talks to the engine only through the two messages of
//! [`ego_engine::Environment`].
//!
//! Environment events are bit strings. Each token is translated into a
//! formula with the E-binary codec, and an *instance* of a group of tokens
//! is the set of their formulas, plus one tag member that makes instances
//! distinct: a seeded random filler, or an ordinal when fillers are off.
//! The first instance of every group carries no tag.
//!
//! ```
//! use ego_environment::{Scenario, ScenarioEnvironment};
//!
//! let scenario = Scenario::from_toml(r#"
//!     [schedule]
//!     budget = 1
//!     [symbols]
//!     A = "0001"
//!     B = "0010"
//!     [[modalities]]
//!     id = 1
//!     count = 3
//!     properties = ["A", "B"]
//! "#).unwrap();
//! let mut env = ScenarioEnvironment::new(scenario).unwrap();
//! let specs = env.initial_load().unwrap();
//! assert_eq!(specs[0].states.len(), 3);
//! assert_eq!(specs[0].states[0].len(), 2);
//! ```

#![warn(missing_docs)]

mod scenario;
mod world;

pub use scenario::{
    EemDecl, Fillers, GroupDecl, ModalityDecl, Scenario, ScenarioError, Schedule, ScriptClock, ScriptEvent, SeedSection,
};
pub use world::{carries, instance, ScenarioEnvironment, FILLER_GENERATOR};
