//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors raised by numerical and geometric routines.
#[derive(Debug, Error)]
pub enum Error {
    /// Input lies outside the admissible domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A function evaluation produced a non-finite value.
    #[error("evaluation error: {0}")]
    Evaluation(String),

    /// A caller-side contract was violated (wrong shape, asymmetric input, ...).
    #[error("contract violation: {0}")]
    Contract(String),

    /// A frame coefficient matrix is numerically singular.
    #[error("singular frame matrix: |det| = {det:e}")]
    SingularFrame { det: f64 },

    /// The truncated integration window misses mass above the tolerance.
    #[error("truncation error: integrand edge magnitude {edge:e} exceeds {limit:e}")]
    Truncation { edge: f64, limit: f64 },

    /// Configuration (model description, suite settings) is invalid.
    #[error("config error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
