use thiserror::Error;

/// Errors raised by the computational layers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid segment [{a}, {b}]: endpoints must differ by a non-negative integer")]
    InvalidSegment { a: String, b: String },

    #[error("an Arthur parameter needs at least one component")]
    EmptyParameter,

    #[error("invalid Arthur component: {0}")]
    InvalidComponent(String),

    #[error("guard exceeded: {what} is {actual}, limit is {limit}")]
    GuardExceeded {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("support mismatch: {0}")]
    SupportMismatch(String),

    #[error("infinitesimal parameter mismatch: {left} vs {right}")]
    LambdaMismatch { left: String, right: String },

    #[error("basis side mismatch: cannot convert {from} to {to}")]
    SideMismatch { from: String, to: String },

    #[error("permutation length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("matrix is not invertible over the integers: {0}")]
    NotUnimodular(String),

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("cache version mismatch: expected {expected:?}, found {found:?}")]
    VersionMismatch { expected: String, found: String },

    #[error("corrupt cache entry on line {line}: {msg}")]
    CorruptEntry { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
