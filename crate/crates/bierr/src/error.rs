//! Error types shared across the crate.

use thiserror::Error;

/// Errors produced by distribution construction, threshold search,
/// decision evaluation, and simulation configuration.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A parameter is outside its mathematical domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// The closed-form Youden threshold does not apply to this pair.
    ///
    /// Raised when the hypothesis pair is not a symmetric, equal-scale
    /// location pair. Callers should fall back to the numeric solver.
    #[error("closed form inapplicable: {0}; use the numeric solver")]
    TheoremInapplicable(String),

    /// A numeric routine failed to produce a finite, converged result.
    #[error("numeric failure: {0}")]
    Numeric(String),

    /// A sample had zero standard deviation, so no t statistic exists.
    #[error("degenerate sample: standard deviation is zero")]
    DegenerateSample,

    /// A configuration value violates its invariants.
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn numeric(msg: impl Into<String>) -> Self {
        Error::Numeric(msg.into())
    }

    pub(crate) fn config(msg: impl Into<String>) -> Self {
        Error::InvalidConfig(msg.into())
    }
}
