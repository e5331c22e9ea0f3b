use thiserror::Error;

use crate::poly::EntryVar;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid dimension {0}")]
    InvalidDimension(usize),

    #[error("indices are 1-based, got 0")]
    ZeroIndex,

    #[error("index {index} out of range 1..={bound}")]
    IndexOutOfRange { index: usize, bound: usize },

    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix entries are not distinct single indeterminates")]
    NotGeneric,

    #[error("no value assigned to {0}")]
    UnboundVariable(EntryVar),

    #[error("index pair ({0}, {1}) must name two distinct indices")]
    InvalidIndexPair(usize, usize),

    #[error("index pair ({0}, {1}) must be sorted ascending")]
    UnsortedIndices(usize, usize),

    #[error("dimension {n} is below the minimum {min}")]
    DimensionTooSmall { n: usize, min: usize },

    #[error("dimension {n} exceeds the maximum {max}")]
    DimensionTooLarge { n: usize, max: usize },

    #[error("entry bound must be at least 1")]
    InvalidBound,

    #[error("zero interior minor at condensation level {level}, position ({row}, {col})")]
    ZeroInteriorMinor { level: usize, row: usize, col: usize },

    #[error("zero leading minor at step {step} requires a row swap")]
    PivotBreakdown { step: usize },

    #[error("malformed matrix: {0}")]
    MalformedMatrix(String),

    /// A division that Sylvester's identity guarantees to be exact left a
    /// remainder. Only an implementation bug can produce this.
    #[error("internal invariant violated: inexact division {numerator} / {divisor}")]
    InexactDivision { numerator: String, divisor: String },
}

impl Error {
    /// True for errors that indicate a bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::InexactDivision { .. })
    }
}
