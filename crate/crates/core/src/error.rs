use thiserror::Error;

use crate::step::StepFunction;

/// Rejections raised while validating raw `(time, status)` pairs.
///
/// Indices are zero-based positions in the input.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SampleError {
    #[error("observation {0}: time must be strictly positive")]
    NonPositiveTime(usize),
    #[error("observation {0}: time must be finite")]
    NonFiniteTime(usize),
    #[error("observation {0}: status must be 0 (censored) or 1 (failure)")]
    InvalidStatus(usize),
    #[error("sample is empty")]
    EmptySample,
}

#[derive(Debug, Clone, Error)]
pub enum EstimatorError {
    #[error("evaluation at t = {t} lies outside the estimator's domain (upper limit {limit})")]
    DomainExceeded { t: f64, limit: f64 },
    #[error(
        "plug-in survival must be positive before the last observed time; got {value} at t = {t}"
    )]
    NonPositiveSurvival { t: f64, value: f64 },
    #[error("censoring weight vanishes at failure time {t}")]
    ZeroWeight { t: f64 },
    #[error("self-consistency iteration did not converge in {max_iter} sweeps (last residual {residual:e})")]
    NoConvergence {
        max_iter: usize,
        residual: f64,
        last: StepFunction,
    },
}
