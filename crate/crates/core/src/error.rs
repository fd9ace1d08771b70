use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// An operation's precondition does not hold for its input.
    #[error("contract violation: {0}")]
    Contract(String),

    /// A parameter lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("no unique stationary distribution: {0}")]
    NoUniqueStationary(String),

    /// A machine description could not be decoded.
    #[error("malformed machine file: {0}")]
    Format(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// True for decoding failures, as opposed to numerical or domain errors.
    pub fn is_parse_error(&self) -> bool {
        matches!(self, Error::Format(_) | Error::Json(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
