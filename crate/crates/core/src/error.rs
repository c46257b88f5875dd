use std::io;

use thiserror::Error;

/// Errors raised by the recursions, the structured containers and the text formats.
#[derive(Debug, Error)]
pub enum Error {
    /// `1 - a·a'` collapsed at step `(k, l)`: the leading structure is not positive definite.
    #[error("matrix is not positive definite (recursion step ({k}, {l}), 1 - a*a' = {factor:e})")]
    NotPositiveDefinite { k: usize, l: usize, factor: f64 },

    #[error("numerical breakdown at step ({k}, {l}): {reason}")]
    NumericalBreakdown {
        k: usize,
        l: usize,
        reason: &'static str,
    },

    /// The diagonal taken from the coefficient tables disagrees with the directly
    /// computed congruence `Rᴾᵀ R Rᴾ*`. This is an implementation bug, not a user error.
    #[error(
        "factorization mismatch at column {column}: table value {table:e}, direct value {direct:e}"
    )]
    FactorizationMismatch {
        column: usize,
        table: f64,
        direct: f64,
    },

    /// A fetch needed a pair that is neither stored nor reconstructible.
    #[error("internal index error: pair ({k}, {l}) is not available")]
    InternalIndexError { k: usize, l: usize },

    #[error("shift by {shift} moves support [{lo}, {hi}] outside [0, {len})")]
    ShiftOutOfRange {
        lo: usize,
        hi: usize,
        shift: isize,
        len: usize,
    },

    #[error("index ({i}, {j}) out of range for size {n}")]
    IndexOutOfRange { i: usize, j: usize, n: usize },

    #[error("size mismatch: expected {expected}, got {actual}")]
    SizeMismatch { expected: usize, actual: usize },

    #[error("prediction-error matrix is singular at order {order}")]
    SingularP { order: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid generator: {0}")]
    InvalidGenerator(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
