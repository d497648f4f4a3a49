use hyparr_core::Error as CoreError;
use thiserror::Error;

/// Process exit statuses.
pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_HYPOTHESIS: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),

    /// The arrangement does not satisfy a theorem's hypotheses.
    #[error("{0}")]
    Hypothesis(String),

    #[error("{0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Hypothesis(_) => EXIT_HYPOTHESIS,
            CliError::Internal(_) => EXIT_FAILURE,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::Degenerate(_) => CliError::Hypothesis(e.to_string()),
            CoreError::Internal(_) => CliError::Internal(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}
