use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("the zero vector is not allowed here")]
    ZeroVector,

    #[error("vector entries must be finite")]
    NonFinite,

    #[error("degenerate polygon: {0}")]
    DegeneratePolygon(String),

    #[error("invalid space parameters: {0}")]
    InvalidSpace(String),

    #[error("operation requires a two-dimensional space")]
    NotPlanar,

    #[error("unsupported space family for {op}: {family}")]
    Unsupported { op: &'static str, family: String },

    #[error("numeric derivative did not converge: width {width:e} exceeds {limit:e}")]
    NotConverged { width: f64, limit: f64 },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("input is not on the unit sphere (norm = {0})")]
    NotUnit(String),

    #[error("support too large for exact enumeration ({0} > 20)")]
    SupportTooLarge(usize),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
