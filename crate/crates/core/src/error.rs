use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    /// A factorial-size enumeration was requested above the configured guard.
    #[error("size limit exceeded: n = {n} but the limit is {max_n}")]
    LimitExceeded { n: usize, max_n: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("selected vectors are linearly dependent")]
    DependentSelection,

    #[error("selections span different subspaces")]
    SpansDiffer,

    #[error("malformed rational {0:?}")]
    ParseRational(String),

    #[error("malformed tensor: {0}")]
    MalformedTensor(String),
}
