use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A parameter is outside the documented domain of an operation.
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// Raw data has inconsistent shape (tensor dimensions, table sizes).
    #[error("structural error: {0}")]
    Structure(String),
    /// The operation is not available for the requested field class.
    #[error("unsupported: {0}")]
    Unsupported(String),
    /// A bar-complex computation would exceed the configured size cap.
    #[error("size cap exceeded: {needed} matrix rows exceed the cap of {cap}")]
    SizeCap { needed: u128, cap: u128 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidInput(msg.into()))
}
