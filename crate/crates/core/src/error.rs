//! Error taxonomy for the whole engine.
//!
//! Degenerate input is always an error value, never a panic: division by zero,
//! base-locus samples, singular Jacobians and exhausted genericity budgets all
//! surface here so callers can resample or abort deliberately.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),

    #[error("division by zero over {0}")]
    DivisionByZero(&'static str),

    #[error("parameter lies in the base locus of `{0}`")]
    BasePoint(String),

    #[error("singular sample on `{label}`: jacobian rank {got}, expected {want}")]
    SingularSample {
        label: String,
        got: usize,
        want: usize,
    },

    #[error("degenerate builder input: {0}")]
    DegenerateBuilder(String),

    #[error("domain mismatch: {0}")]
    DomainMismatch(String),

    #[error("invalid polynomial map: {0}")]
    InvalidPoly(String),

    #[error("invalid variety model: {0}")]
    InvalidModel(String),

    #[error("genericity failure: {0}")]
    Genericity(String),

    #[error("tangency point could not be located: {0}")]
    TangencyNotLocated(String),

    #[error("infeasible generator parameters: {0}")]
    Infeasible(String),
}

pub type Result<T> = std::result::Result<T, Error>;
