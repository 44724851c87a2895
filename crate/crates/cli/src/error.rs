use graded_basic_core::Error as AlgebraError;

/// Failures of a command, each tied to a process exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Unreadable file, bad JSON, or values that do not fit the schema.
    #[error("{context}: {message}")]
    Input { context: String, message: String },
    /// The Cayley-Bacharach bound failed for a point set.
    #[error("bound violated: {0}")]
    BoundViolation(String),
    /// The inputs do not satisfy the hypothesis of the requested operation.
    #[error("{0}")]
    Hypothesis(AlgebraError),
    /// A result did not pass its own width check.
    #[error("post-condition failed: {0}")]
    PostCheck(String),
    #[error("{0}")]
    Algebra(AlgebraError),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn input(context: impl Into<String>, message: impl ToString) -> Self {
        CliError::Input { context: context.into(), message: message.to_string() }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input { .. } | CliError::Io(_) => 1,
            CliError::BoundViolation(_) => 2,
            CliError::Hypothesis(_) => 3,
            CliError::PostCheck(_) => 4,
            CliError::Algebra(e) => match e {
                AlgebraError::Internal(_) => 5,
                _ => 1,
            },
        }
    }
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::HypothesisViolation { .. } | AlgebraError::GenerationFailure { .. } => CliError::Hypothesis(e),
            other => CliError::Algebra(other),
        }
    }
}
