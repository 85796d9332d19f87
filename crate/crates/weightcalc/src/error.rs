use thiserror::Error;

/// Errors raised by sequence, function and matrix operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("construction error: {0}")]
    Construction(String),
    #[error("parameter error: {0}")]
    Parameter(String),
    #[error("shape error: {0}")]
    Shape(String),
    #[error("truncation error: {0}")]
    Truncation(String),
    #[error("precondition error: {0}")]
    Precondition(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
