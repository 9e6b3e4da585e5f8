use thiserror::Error;

/// Errors raised across the library.
///
/// Input problems (bad shapes, malformed files, unsupported plants) are kept
/// apart from `Internal`, which signals that a computed identity failed to
/// hold and so points at a bug rather than at the caller.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch in {op}: {detail}")]
    DimensionMismatch { op: &'static str, detail: String },

    #[error("{op} requires a square matrix, got {rows}x{cols}")]
    NotSquare {
        op: &'static str,
        rows: usize,
        cols: usize,
    },

    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,

    #[error("minor size {k} out of range for a {rows}x{cols} matrix")]
    MinorSizeOutOfRange { k: usize, rows: usize, cols: usize },

    #[error("improper plant: {0}")]
    ImproperPlant(String),

    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid target polynomial: {0}")]
    InvalidTarget(String),

    #[error("degree violation: {0}")]
    DegreeViolation(String),

    #[error("equation {index} has degree zero; the fiber is empty or degenerate")]
    ZeroDegreeEquation { index: usize },

    #[error("system is not square: {equations} equations in {variables} variables")]
    NonSquareSystem { equations: usize, variables: usize },

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error("i/o error: {0}")]
    Io(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
