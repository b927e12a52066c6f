//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Argument outside the domain of a special function.
    #[error("domain error: {func}({arg}) requires {requirement}")]
    Domain {
        func: &'static str,
        arg: f64,
        requirement: &'static str,
    },

    /// Adaptive quadrature exhausted its subdivision budget.
    #[error(
        "quadrature did not converge: est_error {est_error:.3e} after {subdivisions} subdivisions"
    )]
    NonConvergence { est_error: f64, subdivisions: usize },

    /// An integrand or stencil evaluation produced NaN or ±∞.
    #[error("non-finite value encountered at argument {at}")]
    NonFinite { at: f64 },

    #[error("unknown distribution `{0}`")]
    UnknownDistribution(String),

    #[error("distribution `{0}` has no closed-form transform")]
    NoClosedForm(String),

    #[error("unknown integral-table identity `{0}`")]
    UnknownIdentity(String),

    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
