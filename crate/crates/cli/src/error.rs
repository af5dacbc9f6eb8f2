use thiserror::Error;

/// Failures surfaced by the command-line layer, with their exit codes.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),

    #[error("{path}: {message}")]
    Load { path: String, message: String },

    #[error(transparent)]
    Core(#[from] triplex::Error),
}

impl CliError {
    /// `2` for usage and validation problems, `3` for budget and size-guard
    /// aborts, `1` when a certificate built during the run fails.
    pub fn exit_code(&self) -> i32 {
        use triplex::Error as E;
        match self {
            CliError::Usage(_) | CliError::Load { .. } => 2,
            CliError::Core(E::DegreeBudgetExceeded { .. } | E::SizeGuard { .. }) => 3,
            CliError::Core(E::PbwCertificateFailure { .. } | E::VerificationFailure(_)) => 1,
            CliError::Core(_) => 2,
        }
    }
}
