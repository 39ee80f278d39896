use alloc::string::String;

/// Errors raised by the core constructors and algorithms.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("degree must be at least 1, got {0}")]
    InvalidDegree(usize),
    #[error("interval length must be positive, got {0}")]
    NonPositiveLength(String),
    #[error("interval endpoints must satisfy a < b, got [{a}, {b}]")]
    InvalidInterval { a: String, b: String },
    #[error("index {index} out of range (max {max})")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("nodes {0} and {1} coincide")]
    DuplicateNodes(usize, usize),
    #[error("expected {expected} values, got {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error(
        "coefficient flavor {found} does not match the requested operation (expected {expected})"
    )]
    FlavorMismatch {
        expected: &'static str,
        found: &'static str,
    },
    #[error("rescaled coefficients were built for length {expected}, nodes span {found}")]
    LengthDisagreement { expected: String, found: String },
    #[error("zero diagonal entry at row {0}")]
    ZeroDiagonal(usize),
    #[error("matrix dimensions differ: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("argument must be positive, got {0}")]
    NonPositiveArgument(String),
    #[error("argument must be non-negative, got {0}")]
    NegativeArgument(String),
    #[error("requires interval length > 1, got {0}")]
    LengthNotAboveOne(String),
}

pub type Result<T> = core::result::Result<T, Error>;
