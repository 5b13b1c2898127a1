//! Fixed-point iteration for the self-consistent survival estimator.
//!
//! Starting from the empirical survival `Ŝ₀(t) = Y(t+)/n`, each sweep sets
//!
//! ```text
//! Ŝ_k(t) = Ŝ₀(t) + n⁻¹ Σ_i (1 − D_i) I{X_i <= t} Ŝ_{k−1}(t) / Ŝ_{k−1}(X_i)
//! ```
//!
//! with `0/0 = 0`. All quantities are constant between observed times, so the
//! iteration runs on the grid of unique times only.

use serde::Serialize;

use crate::data::{div0, JumpTable};
use crate::error::EstimatorError;
use crate::step::StepFunction;

pub const DEFAULT_TOLERANCE: f64 = 1e-12;
pub const DEFAULT_MAX_ITER: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SelfConsistentResult {
    pub estimate: StepFunction,
    /// Number of sweeps performed.
    pub iterations: usize,
    /// Sup-norm change over the unique times in the last sweep.
    pub final_residual: f64,
}

/// One application of the self-consistency map to grid values `current`.
///
/// `current[k]` is the value on `[X_(k), X_(k+1))`.
pub fn self_consistency_map(jt: &JumpTable, current: &[f64]) -> Vec<f64> {
    let n = jt.n() as f64;
    let mut next = Vec::with_capacity(current.len());
    // Σ_{l <= k} ΔC(X_(l)) · Ŝ(X_(k)) / Ŝ(X_(l)), accumulated as a sum of
    // ΔC / Ŝ(X_(l)) and scaled afterwards, except for l = k where the ratio
    // is exactly 1 (or 0 under 0/0 = 0).
    let mut weighted_censored = 0.0;
    for (k, &s) in current.iter().enumerate() {
        let dc = jt.dc()[k] as f64;
        let own = dc * div0(s, s);
        let redistributed = if s == 0.0 { 0.0 } else { s * weighted_censored };
        next.push(jt.at_risk_after()[k] as f64 / n + (redistributed + own) / n);
        if dc > 0.0 && s > 0.0 {
            weighted_censored += dc / s;
        }
    }
    next
}

fn sup_change(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

/// Iterates the self-consistency map until the sup-norm change between
/// sweeps is at most `tol` and the extrapolated distance to the fixed point
/// is below `tol / 10`. Fails after `max_iter` sweeps.
///
/// The estimate is zero from `X_(m)` on, where `Ŝ₀` vanishes.
pub fn self_consistent(
    jt: &JumpTable,
    tol: f64,
    max_iter: usize,
) -> Result<SelfConsistentResult, EstimatorError> {
    assert!(tol > 0.0, "tolerance must be positive");
    let n = jt.n() as f64;
    let mut current: Vec<f64> = jt.at_risk_after().iter().map(|&y| y as f64 / n).collect();
    let mut residual = f64::INFINITY;
    for iteration in 1..=max_iter {
        let next = self_consistency_map(jt, &current);
        let previous = residual;
        residual = sup_change(&next, &current);
        current = next;
        if residual <= tol && remaining_error_bound(residual, previous) <= 0.1 * tol {
            return Ok(SelfConsistentResult {
                estimate: grid_to_step(jt, current),
                iterations: iteration,
                final_residual: residual,
            });
        }
    }
    Err(EstimatorError::NoConvergence {
        max_iter,
        residual,
        last: grid_to_step(jt, current),
    })
}

/// Bound on the distance to the fixed point after a sweep that moved by
/// `residual`, given the previous sweep's change. For a map contracting at
/// rate `ρ` the remaining error is at most `residual · ρ / (1 − ρ)`; `ρ` is
/// estimated by the ratio of successive changes.
///
/// Changes at the rounding floor are taken as converged, since their ratio
/// carries no information about the contraction rate.
fn remaining_error_bound(residual: f64, previous: f64) -> f64 {
    if residual <= 4.0 * f64::EPSILON {
        return 0.0;
    }
    let rate = residual / previous;
    if rate < 1.0 {
        residual * rate / (1.0 - rate)
    } else {
        f64::INFINITY
    }
}

fn grid_to_step(jt: &JumpTable, mut values: Vec<f64>) -> StepFunction {
    let mut floor = 1.0f64;
    for v in values.iter_mut() {
        floor = floor.min(*v).max(0.0);
        *v = floor;
    }
    if let Some(last) = values.last_mut() {
        *last = 0.0;
    }
    StepFunction::new(1.0, jt.times().to_vec(), values)
}

/// Sup-norm distance between `estimate` and its image under the
/// self-consistency map, over `t = 0` and the unique times.
pub fn self_consistency_residual(jt: &JumpTable, estimate: &StepFunction) -> f64 {
    let grid: Vec<f64> = jt.times().iter().map(|&t| estimate.eval(t)).collect();
    let image = self_consistency_map(jt, &grid);
    // At t = 0 the map returns Ŝ₀(0) = 1.
    sup_change(&grid, &image).max((estimate.eval(0.0) - 1.0).abs())
}
