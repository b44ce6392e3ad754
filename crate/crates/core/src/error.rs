use thiserror::Error;

/// Errors raised across the crate.
///
/// The variants separate bad input (a malformed or out-of-domain value), a violated
/// construction gate (the input parses but the mathematics does not apply), and an
/// internal check that failed.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("gate `{gate}` violated: {detail}")]
    Gate { gate: &'static str, detail: String },
    #[error("check failed: {0}")]
    Assertion(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn gate(gate: &'static str, detail: impl Into<String>) -> Self {
        Error::Gate {
            gate,
            detail: detail.into(),
        }
    }

    pub(crate) fn assertion(msg: impl Into<String>) -> Self {
        Error::Assertion(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
