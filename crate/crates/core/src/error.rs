use thiserror::Error;

/// Errors raised by ideal arithmetic, parsing and the homology engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or out-of-domain input.
    #[error("input error: {0}")]
    Input(String),
    /// A configured resource cap was exceeded.
    #[error("resource cap exceeded: {0}")]
    Resource(String),
    /// An exponent computation left the representable range.
    #[error("exponent overflow in {0}")]
    Overflow(&'static str),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }

    /// Process exit status used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Input(_) => 2,
            Error::Resource(_) | Error::Overflow(_) => 3,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
