use matroid_torsion::Error as CoreError;
use thiserror::Error;

/// Process exit status.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExitCode {
    Success = 0,
    CheckFailure = 1,
    InputError = 2,
    BudgetExceeded = 3,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}:{line}:{column}: {message}")]
    Syntax { path: String, line: usize, column: usize, message: String },

    #[error("{path}: {message}")]
    Invalid { path: String, message: String },

    #[error(transparent)]
    Core(#[from] CoreError),

    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Core(
                CoreError::TorsionTooLarge { .. }
                | CoreError::NodeBudgetExceeded { .. }
                | CoreError::GroundTooLarge { .. },
            ) => ExitCode::BudgetExceeded,
            CliError::Core(CoreError::Internal(_)) => ExitCode::CheckFailure,
            _ => ExitCode::InputError,
        }
    }
}
