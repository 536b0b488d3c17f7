use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or inconsistent input data.
    #[error("input error: {0}")]
    Input(String),
    /// A mathematical precondition of the requested operation does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// A configured size bound was exceeded.
    #[error("resource bound exceeded: {0}")]
    Resource(String),
    /// Exact integer arithmetic left the representable range.
    #[error("integer overflow: {0}")]
    Overflow(String),
    /// A construction was carried out but failed its own verification.
    #[error("construction failed: {0}")]
    ConstructionFailed(String),
    /// An internal consistency check failed.
    #[error("internal consistency error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}

pub(crate) fn precondition<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Precondition(msg.into()))
}
