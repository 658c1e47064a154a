use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum KseqError {
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("known data is not exact: {0}")]
    Inconsistent(String),
    #[error("node {0} cannot be determined from the known data")]
    Underdetermined(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
}
