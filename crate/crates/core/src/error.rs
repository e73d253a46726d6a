use thiserror::Error;

/// Errors raised by the bound evaluators, oracles and the certifier.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// An argument lies outside the domain where the quantity is defined.
    #[error("domain error: {0}")]
    Domain(String),

    /// A request exceeds a hard enumeration or recursion cap.
    #[error("capacity error: {0}")]
    Capacity(String),

    /// Coefficients violate the unit-norm / ordering precondition.
    #[error("invalid coefficients: {0}")]
    Coefficients(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
