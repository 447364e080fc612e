//! A homeostatic individual over nested-set terms.
//!
//! The individual is split into *modalities*, each holding internal states.
//! At clock 0 the category of every modality's states is fixed; together
//! these categories are the *organisation*, and the individual's only goal
//! is to keep, in every modality, as many states complying with it as it
//! started with.
//!
//! Each clock the environment perturbs the structure: compliant states
//! disappear and non-compliant *emergents* appear. The engine then
//!
//! 1. categorises perturbations and emergents ([`Engine::perceive`]),
//! 2. stops for good if a modality lost every compliant state
//!    ([`Engine::classify_change`]),
//! 3. repeatedly picks the modality missing the most states
//!    ([`Engine::select_target`]), looks for surplus categories whose
//!    properties together recompose its category ([`Engine::manipulate`]),
//!    and produces new compliant states from their elements
//!    ([`Engine::behave`]),
//! 4. reassigns surplus elements whose category includes a deficit category
//!    ([`Engine::genus_event`]),
//! 5. once every modality is complete, drains the remaining surplus through
//!    emotional chains ([`Engine::run_emotions`]).
//!
//! A perturbation category that recalls a stored behaviour directly becomes
//! a perceptual symbol, and an objective one when the recall repeats on
//! consecutive clocks. Every change is written to a [`TraceRecord`] log and
//! the homeostatic index of each category is kept in a ledger.
//!
//! ```
//! use ego_core::{parse_formula, EFormula};
//! use ego_engine::{Engine, EngineConfig, Event, ModalityId, ModalitySpec};
//!
//! let f = |s: &str| parse_formula(s).unwrap();
//! let (p, q) = (f("{{{0}}}"), f("{{0,{0}}}"));
//! // Two states sharing the properties p and q.
//! let states = vec![EFormula::pair(p.clone(), q.clone()), EFormula::set([p.clone(), q.clone(), f("0")])];
//! let m = ModalityId(1);
//! let mut engine = Engine::init(vec![ModalitySpec { id: m, states: states.clone() }], EngineConfig::default()).unwrap();
//! assert_eq!(engine.modality(m).unwrap().properties(), &EFormula::pair(p.clone(), q.clone()));
//!
//! // A compliant state disappears; emergents carry p and q separately.
//! engine.begin_clock().unwrap();
//! let with = |x: &EFormula| vec![EFormula::singleton(x.clone()), EFormula::pair(x.clone(), f("0"))];
//! engine.perceive(Event::exogenous(m, vec![], vec![states[0].clone()], with(&p))).unwrap();
//! engine.perceive(Event::exogenous(m, vec![], vec![], with(&q))).unwrap();
//! assert_eq!(engine.modality(m).unwrap().deficit(), 1);
//!
//! // The clock ends with one new state recomposed from p and q.
//! engine.finish_clock().unwrap();
//! assert_eq!(engine.modality(m).unwrap().deficit(), 0);
//! ```

#![warn(missing_docs)]

pub mod archetype;
pub mod audit;
mod contract;
mod engine;
mod error;
mod model;
mod plan;
pub mod search;
mod trace;

pub use archetype::{Archetype, ArchetypeStore, Typology};
pub use contract::{
    run, ClockDeficits, Environment, PerturbationBatch, Residual, RunReport, RunStatus, SensoryEvent, SensoryResponse,
};
pub use engine::{accidental_members, ordinal, ChangeKind, Engine, EngineConfig, ModalitySpec, Perceived};
pub use error::EngineError;
pub use model::{Element, Event, EventKind, Modality, ModalityId, ModalitySnapshot, Organisation, StructureSnapshot};
pub use plan::{EmotionChain, EmotionKind, Plan, Promotion, PromotionKind, Step};
pub use trace::{read_trace, write_trace, Op, TraceRecord};
