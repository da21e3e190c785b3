use thiserror::Error;

/// Errors raised anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("entries {entries:?} are not a signed permutation of 1..{dim}")]
    NotAPermutation { dim: usize, entries: Vec<i32> },

    #[error("move element {element} is out of range for dimension {dim}")]
    MoveOutOfRange { element: i32, dim: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid definition: {0}")]
    InvalidDefinition(String),

    #[error("the Beta Hilbert curve is defined only for d >= 3, not d = {0}")]
    BetaUndefined(usize),

    #[error("unknown name `{0}`")]
    UnknownName(String),

    #[error("the definition does not traverse a full cube")]
    NotCubic,

    #[error("the traversal is not equal to its own reverse under a cube symmetry")]
    NotSymmetric,

    #[error("rank {rank} is out of range for {bits} bits")]
    RankOutOfRange { rank: String, bits: usize },

    #[error("{0}")]
    OutOfDomain(String),
}

pub type Result<T> = std::result::Result<T, Error>;
