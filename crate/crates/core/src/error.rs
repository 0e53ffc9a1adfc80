use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// Exhaustive work would exceed a declared capacity.
    #[error("capacity error: {what} exceeds cap {cap}")]
    Capacity { what: String, cap: usize },
    /// Numeric residuals could not be brought under tolerance.
    #[error("precision error: residual {residual} above tolerance at {bits} bits; retry with more bits")]
    Precision { bits: usize, residual: String },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
