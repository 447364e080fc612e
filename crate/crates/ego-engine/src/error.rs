//! Engine errors.

use thiserror::Error;

use crate::model::ModalityId;

/// Why an engine operation was refused.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    /// Initialisation was given no modalities.
    #[error("no modalities")]
    NoModalities,
    /// A modality started with no internal states.
    #[error("modality {0} has no internal states")]
    EmptyModality(ModalityId),
    /// Two modalities were declared with the same id.
    #[error("modality {0} declared twice")]
    DuplicateModality(ModalityId),
    /// A starting state appears in more than one modality.
    #[error("starting state {state} appears in modalities {first} and {second}")]
    OverlappingStates {
        /// Canonical text of the shared state.
        state: String,
        /// The first modality holding it.
        first: ModalityId,
        /// The second modality holding it.
        second: ModalityId,
    },
    /// No modality has this id.
    #[error("unknown modality {0}")]
    UnknownModality(ModalityId),
    /// An event removed a state its modality does not hold.
    #[error("modality {modality} holds no state {state}")]
    StateNotPresent {
        /// The modality.
        modality: ModalityId,
        /// Canonical text of the missing state.
        state: String,
    },
    /// A sensory event referred to a perturbation group that was not sent.
    #[error("no perturbation group {0} in this clock's batch")]
    UnknownGroup(usize),
    /// A surplus category does not include the deficit category.
    #[error("category {surplus} does not include every property of {deficit}")]
    NotIncluded {
        /// Label of the surplus category.
        surplus: String,
        /// Label of the deficit category.
        deficit: String,
    },
    /// No category with this key is known.
    #[error("unknown category {0}")]
    UnknownCategory(String),
    /// An archetype with this name is already stored.
    #[error("archetype name already stored: {0}")]
    DuplicateName(String),
    /// No archetype has this name.
    #[error("no archetype named {0}")]
    UnknownName(String),
    /// An archetype name is not of the form `{individual, serial, typology}`.
    #[error("malformed archetype name: {0}")]
    MalformedName(String),
    /// A nesting of archetype names refers back to itself.
    #[error("archetype nesting cycles through {0}")]
    Cycle(String),
    /// The individual was destroyed; no further clocks run.
    #[error("the individual was destroyed at clock {0}")]
    Destroyed(u64),
}
