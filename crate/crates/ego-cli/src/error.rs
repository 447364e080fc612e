//! Errors and the exit codes they map to.

use std::process::ExitCode;

use thiserror::Error;

/// Exit code: success, equilibrium or budget exhausted.
pub const EXIT_OK: u8 = 0;
/// Exit code: a verification check failed.
pub const EXIT_VERIFY_FAILED: u8 = 1;
/// Exit code: bad arguments or unreadable input.
pub const EXIT_USAGE: u8 = 2;
/// Exit code: the individual was destroyed.
pub const EXIT_DESTROYED: u8 = 3;
/// Exit code: a resource limit was hit.
pub const EXIT_RESOURCE: u8 = 4;

/// Why a command could not complete.
#[derive(Debug, Error)]
pub enum CliError {
    /// Bad arguments or malformed input.
    #[error("{0}")]
    Usage(String),
    /// A size, depth or pairing bound was exceeded.
    #[error("resource limit: {0}")]
    Resource(String),
    /// Reading or writing a file failed.
    #[error("{path}: {source}")]
    Io {
        /// The file.
        path: String,
        /// The underlying error.
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    /// The process exit code for this error.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io { .. } => EXIT_USAGE,
            CliError::Resource(_) => EXIT_RESOURCE,
        }
    }

    /// As a process exit code.
    pub fn exit(&self) -> ExitCode {
        ExitCode::from(self.exit_code())
    }
}

impl From<ego_evaluator::EvalError> for CliError {
    fn from(e: ego_evaluator::EvalError) -> Self {
        match e {
            ego_evaluator::EvalError::Resource(r) => CliError::Resource(r.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<ego_core::ParseError> for CliError {
    fn from(e: ego_core::ParseError) -> Self {
        match e {
            ego_core::ParseError::Resource(r) => CliError::Resource(r.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<ego_environment::ScenarioError> for CliError {
    fn from(e: ego_environment::ScenarioError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<ego_engine::EngineError> for CliError {
    fn from(e: ego_engine::EngineError) -> Self {
        CliError::Usage(format!("the scenario drove the individual into an error: {e}"))
    }
}
