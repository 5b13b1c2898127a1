//! Empirical and product-limit estimators of the failure and censoring
//! survival functions.
//!
//! Every function here returns a step function whose jump grid is the full
//! set of unique observed times, so estimators can be compared pointwise.

use crate::data::{div0, JumpTable};
use crate::error::EstimatorError;
use crate::step::{RestrictedStep, StepFunction};

/// Running product `Π_{k' <= k} factor(k')`, one value per unique time.
fn running_product(jt: &JumpTable, factor: impl Fn(usize) -> f64) -> StepFunction {
    let mut acc = 1.0;
    let values = (0..jt.m())
        .map(|k| {
            acc *= factor(k);
            acc
        })
        .collect();
    StepFunction::new(1.0, jt.times().to_vec(), values)
}

/// Empirical survival of the observed times, `Ŝ₀(t) = Y(t+)/n`.
pub fn naive_survival(jt: &JumpTable) -> StepFunction {
    let n = jt.n() as f64;
    let values = jt.at_risk_after().iter().map(|&y| y as f64 / n).collect();
    StepFunction::new(1.0, jt.times().to_vec(), values)
}

/// Product-limit (Kaplan–Meier) estimator of `S(t) = P{T > t}`,
/// `Π_{u <= t} (1 − ΔN(u)/Y(u))`.
///
/// Defined for all `t >= 0`; past `X_(m)` it stays at its last value, which
/// is zero exactly when every observation at `X_(m)` is a failure.
pub fn product_limit_failure(jt: &JumpTable) -> StepFunction {
    running_product(jt, |k| {
        1.0 - div0(jt.dn()[k] as f64, jt.at_risk()[k] as f64)
    })
}

/// Product-limit estimator of `K(t) = P{U > t}` using the censoring risk set
/// `Y†(u) = Y(u) − ΔN(u)`: `Π_{u <= t} (1 − ΔC(u)/Y†(u))`.
///
/// This is the form that stays correct when failures and censorings share a
/// time. Its left limit at `X_(m)` is always positive.
pub fn product_limit_censoring_dagger(jt: &JumpTable) -> StepFunction {
    running_product(jt, |k| {
        1.0 - div0(jt.dc()[k] as f64, jt.at_risk_dagger()[k] as f64)
    })
}

/// The "swap the status labels" censoring estimator,
/// `Π_{u <= t} (1 − ΔC(u)/Y(u))`.
///
/// Agrees with [`product_limit_censoring_dagger`] only when no time before
/// `X_(m)` carries both a failure and a censoring.
pub fn product_limit_censoring_naive(jt: &JumpTable) -> StepFunction {
    running_product(jt, |k| {
        1.0 - div0(jt.dc()[k] as f64, jt.at_risk()[k] as f64)
    })
}

/// Censoring survival as the reciprocal of `Π_{u <= t} (1 + ΔC(u)/Y(u+))`,
/// the solution of the anticipating integral equation for `K̂`.
///
/// Only defined while `Y(u+) > 0`, so the domain is `[0, t_max]` with
/// `t_max < X_(m)`. A `t_max` at or beyond `X_(m)` is rejected.
pub fn censoring_via_inverse_product(
    jt: &JumpTable,
    t_max: f64,
) -> Result<RestrictedStep, EstimatorError> {
    if !(t_max >= 0.0 && t_max < jt.last_time()) {
        return Err(EstimatorError::DomainExceeded {
            t: t_max,
            limit: jt.last_time(),
        });
    }
    let upto = jt.times().partition_point(|&x| x <= t_max);
    let mut growth = 1.0;
    let values = (0..upto)
        .map(|k| {
            growth *= 1.0 + jt.dc()[k] as f64 / jt.at_risk_after()[k] as f64;
            1.0 / growth
        })
        .collect();
    let f = StepFunction::new(1.0, jt.times()[..upto].to_vec(), values);
    Ok(f.restrict(t_max, true))
}

/// Censoring survival recovered from a failure-survival estimate through
/// `K̂(t) = Y(t+) / (n Ŝ(t))` on `[0, X_(m))`.
///
/// With `s_hat` the product-limit estimator this reproduces
/// [`product_limit_censoring_dagger`] there.
pub fn censoring_from_relation(
    s_hat: &StepFunction,
    jt: &JumpTable,
) -> Result<RestrictedStep, EstimatorError> {
    let last = jt.last_time();
    let mut grid: Vec<f64> = jt
        .times()
        .iter()
        .chain(s_hat.jump_times())
        .copied()
        .filter(|&t| t < last)
        .collect();
    grid.sort_by(f64::total_cmp);
    grid.dedup();

    let n = jt.n() as f64;
    let ratio_at = |t: f64| -> Result<f64, EstimatorError> {
        let s = s_hat.eval(t);
        if s > 0.0 {
            Ok(jt.at_risk_after_time(t) as f64 / (n * s))
        } else {
            Err(EstimatorError::NonPositiveSurvival { t, value: s })
        }
    };
    let initial = ratio_at(0.0)?;
    let values = grid
        .iter()
        .map(|&t| ratio_at(t))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(StepFunction::new(initial, grid, values).restrict(last, false))
}
