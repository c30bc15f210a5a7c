use alloc::string::String;
use core::fmt;

/// Failure modes shared by every module of the crate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// An input lies outside the domain of the operation.
    Domain(String),
    /// A brute-force search would exceed its configured budget.
    Budget(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn budget(msg: impl Into<String>) -> Self {
        Error::Budget(msg.into())
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(m) => write!(f, "domain error: {m}"),
            Error::Budget(m) => write!(f, "budget exceeded: {m}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
