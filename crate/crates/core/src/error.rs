use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Input outside the mathematical domain of an operation (pole, bad degree, ...).
    #[error("domain error: {0}")]
    Domain(String),
    /// Input violating a documented precondition.
    #[error("contract violation: {0}")]
    Contract(String),
    /// Parameters that are well formed but cannot be realized (too few variables).
    #[error("infeasible: {0}")]
    Infeasible(String),
    /// A self-check inside the engine failed; always a bug.
    #[error("internal inconsistency: {0}")]
    Internal(String),
    /// Text input that could not be parsed; `token` is the offending piece.
    #[error("cannot parse `{token}`: {msg}")]
    Parse { token: String, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}

pub(crate) fn contract<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Contract(msg.into()))
}
