use thiserror::Error;

use crate::numerics::QuadratureError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid `{name}`: {reason}")]
    InvalidInput { name: &'static str, reason: String },

    #[error("{context}: {source}")]
    Numerical {
        context: &'static str,
        #[source]
        source: QuadratureError,
    },

    #[error("method `{method}` is not applicable: {reason}")]
    NotApplicable { method: String, reason: String },

    #[error("config error: {0}")]
    Config(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidInput {
            name,
            reason: reason.into(),
        }
    }

    pub(crate) fn numerical(context: &'static str) -> impl FnOnce(QuadratureError) -> Self {
        move |source| Error::Numerical { context, source }
    }
}

/// Checks `value` is finite and `>= 0`.
pub(crate) fn ensure_non_negative(name: &'static str, value: f64) -> Result<()> {
    if !value.is_finite() || value < 0.0 {
        return Err(Error::invalid(name, format!("must be finite and >= 0, got {value}")));
    }
    Ok(())
}

/// Checks `value` is finite and `> 0`.
pub(crate) fn ensure_positive(name: &'static str, value: f64) -> Result<()> {
    if !value.is_finite() || value <= 0.0 {
        return Err(Error::invalid(name, format!("must be finite and > 0, got {value}")));
    }
    Ok(())
}
