//! Evaluator errors.

use ego_core::ResourceError;
use thiserror::Error;

/// Why an evaluator could not be built.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    /// An argument is outside the relation's domain (for example `∅` on
    /// the right of a membership test).
    #[error("{operation}: {reason}")]
    Domain {
        /// The relation being built.
        operation: &'static str,
        /// What was wrong with the arguments.
        reason: &'static str,
    },
    /// The pairing limit or another resource bound was hit.
    #[error(transparent)]
    Resource(#[from] ResourceError),
    /// A verification formula did not classify as a tautology.
    #[error("{operation}: verification formula is {found}, expected a tautology")]
    VerificationFailed {
        /// The operation whose result was checked.
        operation: &'static str,
        /// The classification actually obtained.
        found: ego_core::SentenceClass,
    },
}
