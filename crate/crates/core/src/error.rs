use thiserror::Error;

/// Errors raised by the kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("malformed rational `{0}`")]
    MalformedRational(String),

    #[error("duplicate structure-constant entry for arguments {0:?}")]
    DuplicateEntry(Vec<usize>),

    #[error("invalid Lie algebra: {0}")]
    InvalidLieAlgebra(String),

    #[error("invalid triple system: {0}")]
    InvalidTripleSystem(String),

    #[error("map is not a Lie algebra automorphism: {0}")]
    NotAutomorphism(String),

    #[error("map does not square to the identity")]
    NotInvolution,

    #[error("closure failure: {0}")]
    ClosureFailure(String),

    #[error("degree budget exceeded: operation needs degree {needed}, truncation cap is {cap}")]
    DegreeBudgetExceeded { needed: usize, cap: usize },

    #[error("size guard exceeded: {count} free monomials requested, limit is {limit}")]
    SizeGuard { count: u128, limit: usize },

    #[error("PBW certificate failure at degree {degree}: quotient dimension {found}, symmetric algebra predicts {expected}")]
    PbwCertificateFailure { degree: usize, expected: usize, found: usize },

    #[error("verification failure: {0}")]
    VerificationFailure(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
