use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid model: {0}")]
    InvalidModel(String),

    #[error("mixture density is zero at x = {x}")]
    ZeroMixtureDensity { x: f64 },

    #[error("invalid interval [{lo}, {hi}]: lower end exceeds upper end")]
    InvalidInterval { lo: f64, hi: f64 },

    /// A cost or threshold constraint failed; `constraint` names the inequality.
    #[error("constraint violated: {constraint}")]
    ConstraintViolation { constraint: String },

    #[error("degenerate thresholds (tr1 = {tr1}, tr2 = {tr2}): {reason}")]
    DegenerateThresholds { tr1: f64, tr2: f64, reason: String },

    #[error("target entropy H(T) is zero")]
    DegenerateTarget,

    #[error("boundary pair disagrees: {first} vs {second}")]
    InconsistentPair { first: f64, second: f64 },

    #[error("inconsistent input: {0}")]
    InconsistentInput(String),
}

impl Error {
    pub(crate) fn violation(constraint: impl Into<String>) -> Self {
        Error::ConstraintViolation {
            constraint: constraint.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
