use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse scalar literal {literal:?}: {reason}")]
    ParseScalar { literal: String, reason: String },

    #[error("polynomial degree {degree} exceeds the supported maximum of {max}")]
    DegreeTooLarge { degree: usize, max: usize },

    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("index {index} out of range (expected 0..3)")]
    IndexOutOfRange { index: usize },

    #[error("not a permutation of {{0, 1, 2}}: {0:?}")]
    InvalidPermutation([usize; 3]),

    #[error("vectors are linearly dependent")]
    DependentVectors,

    #[error("subspace is not an ideal")]
    NotAnIdeal,

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("field mode mismatch: {0}")]
    FieldMismatch(String),

    /// An enumeration contradicted a structural theorem; this always signals a bug.
    #[error("inconsistency detected: {0}")]
    InconsistencyDetected(String),

    /// A finite enumeration exceeded the proven bound; this always signals a bug.
    #[error("bound violation: {0}")]
    BoundViolation(String),
}
