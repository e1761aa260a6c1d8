use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("order {order} exceeds the supported limit of {limit}")]
    UnsupportedOrder { order: usize, limit: usize },

    #[error("numeric failure: {0}")]
    NumericFailure(String),

    /// A self-check failed. Always a bug in this crate.
    #[error("internal error: {0}")]
    Internal(String),

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn parse(offset: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: msg.into(),
        }
    }
}
