use thiserror::Error;

/// Errors produced by the exact-arithmetic and orbit-geometry operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    ZeroDivisor,

    #[error("gcd(0, 0) is undefined")]
    GcdOfZeros,

    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,

    #[error("operation requires a monic polynomial, got {0}")]
    NotMonic(String),

    #[error("rescaling factor must be nonzero")]
    ZeroScale,

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("matrix size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("matrix must be traceless, trace is {0}")]
    NotTraceless(String),

    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid quotient point: {0}")]
    InvalidQuotientPoint(String),

    #[error("n = {n} exceeds the resource guard (limit {limit})")]
    GuardExceeded { n: usize, limit: usize },

    #[error("parse error: {0}")]
    Parse(String),
}
