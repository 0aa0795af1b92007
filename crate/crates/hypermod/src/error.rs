use std::path::PathBuf;

use hypermod_core::Error;

/// Failure of a command, carrying the process exit code it maps to.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Precondition(String),
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0} check(s) failed")]
    Verify(usize),
}

impl CliError {
    /// 1 failed checks, 2 usage, 3 unreadable or invalid input, 4 capacity,
    /// 5 unmet precondition, 6 solver trouble, 7 internal inconsistency.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Verify(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Io { .. } | CliError::Input(_) => 3,
            CliError::Precondition(_) => 5,
            CliError::Core(e) => match e {
                Error::Validation(_) => 3,
                Error::Capacity { .. } => 4,
                Error::Argument(_) | Error::Infeasible(_) => 5,
                Error::NonConvergence { .. } | Error::Accuracy(_) => 6,
                Error::Unbounded(_) | Error::Consistency(_) => 7,
            },
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
