use thiserror::Error;

/// Errors raised by the library.
///
/// Degeneracy is not an error: a degenerate sequence is the zero element of
/// the operad and is reported through [`crate::combinatorics::Validated`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("entry {entry} at position {position} is outside 1..={arity}")]
    EntryOutOfRange {
        entry: usize,
        position: usize,
        arity: usize,
    },
    #[error("arity {0} exceeds the supported maximum of 255")]
    ArityTooLarge(usize),
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("not a permutation: {0:?}")]
    InvalidPermutation(Vec<usize>),
    #[error("invalid overlapping partition: {0}")]
    InvalidPartition(String),
    #[error("partition has {pieces} pieces but the sequence has {entries} entries")]
    PieceCountMismatch { pieces: usize, entries: usize },
    #[error("position {position} is outside 1..={len}")]
    PositionOutOfRange { position: usize, len: usize },
    #[error("complexity {found} exceeds the allowed bound {bound}")]
    ComplexityTooHigh { found: usize, bound: usize },
    #[error("fiber of {value} has {found} elements, expected {expected}")]
    FiberSizeMismatch {
        value: usize,
        expected: usize,
        found: usize,
    },
    #[error("integrity check failed: {0}")]
    Integrity(String),
    #[error("cochain is not a cocycle")]
    NotACocycle,
    #[error("invalid simplicial complex: {0}")]
    InvalidComplex(String),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("invalid poset element: {0}")]
    InvalidPosetElement(String),
    #[error("malformed input: {0}")]
    Malformed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
