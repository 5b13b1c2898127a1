//! Inverse-probability-of-censoring weighted estimators.
//!
//! Each observed failure at `X_i` is weighted by `1 / K̂(X_i−)`. The weight
//! function is a parameter so that a deliberately wrong censoring estimator
//! can be plugged in; the intended choice is
//! [`product_limit_censoring_dagger`](super::product_limit_censoring_dagger).

use crate::data::JumpTable;
use crate::error::EstimatorError;
use crate::step::StepFunction;

/// `ΔN(X_(k)) / (n K̂(X_(k)−))` for every unique time.
fn failure_masses(jt: &JumpTable, k_hat: &StepFunction) -> Result<Vec<f64>, EstimatorError> {
    let n = jt.n() as f64;
    jt.times()
        .iter()
        .zip(jt.dn())
        .map(|(&t, &dn)| {
            if dn == 0 {
                return Ok(0.0);
            }
            let weight = k_hat.left_limit(t);
            if weight > 0.0 {
                Ok(dn as f64 / (n * weight))
            } else {
                Err(EstimatorError::ZeroWeight { t })
            }
        })
        .collect()
}

/// `F̂_IPCW(t) = n⁻¹ Σ_i D_i I{X_i <= t} / K̂(X_i−)`.
pub fn ipcw_cdf(jt: &JumpTable, k_hat: &StepFunction) -> Result<StepFunction, EstimatorError> {
    let masses = failure_masses(jt, k_hat)?;
    let mut acc = 0.0;
    let values = masses
        .iter()
        .map(|&mass| {
            acc += mass;
            acc
        })
        .collect();
    Ok(StepFunction::new(0.0, jt.times().to_vec(), values))
}

/// `S̃_IPCW(t) = n⁻¹ Σ_i D_i I{X_i > t} / K̂(X_i−)`.
///
/// Always zero from `X_(m)` on. It coincides with `1 − F̂_IPCW` only when
/// every observation at `X_(m)` is a failure.
pub fn ipcw_survival_tilde(
    jt: &JumpTable,
    k_hat: &StepFunction,
) -> Result<StepFunction, EstimatorError> {
    let masses = failure_masses(jt, k_hat)?;
    // Suffix sums, so the value after the last time is an exact zero.
    let mut tail = vec![0.0; masses.len()];
    let mut acc = 0.0;
    for k in (0..masses.len()).rev() {
        tail[k] = acc;
        acc += masses[k];
    }
    Ok(StepFunction::new(acc, jt.times().to_vec(), tail))
}
