use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument is outside the domain of the operation.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A hypothesis of a closed-form bound does not hold for the given
    /// configuration. Scanners treat this as "not applicable".
    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    /// The upward scan for a regularity certificate reached its cap.
    #[error("no certificate found for t <= {cap}")]
    NoCertificate { cap: i64 },

    #[error("problem too large: {size} {what} exceeds the limit of {limit}")]
    TooLarge { what: &'static str, size: u64, limit: u64 },

    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    /// True for errors caused by the caller's input rather than by the
    /// library itself.
    pub fn is_user_error(&self) -> bool {
        matches!(self, Error::InvalidArgument(_) | Error::Precondition(_))
    }
}
