//! Redistribute-to-the-right, in closed form.
//!
//! Every observation starts with mass `1/n`. Moving left to right, the mass of
//! each censored observation is shared equally among the observations
//! strictly to its right; everything left at `X_(m)` stays there. The mass
//! carried by a single observation reaching `X_(k)` is
//!
//! ```text
//! J_(k) = n⁻¹ Π_{j : X_(j) < X_(k)} (1 + ΔC(X_(j)) / Y(X_(j)+))
//! ```
//!
//! and the estimate drops by `J_(k) ΔN(X_(k))` at `X_(k)` for `k < m`, and by
//! `J_(m) Y(X_(m))` at the last time, regardless of status.

use serde::Serialize;

use crate::data::JumpTable;
use crate::step::StepFunction;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RttrResult {
    pub estimate: StepFunction,
    /// Per-observation mass `J_(k)` on arrival at each unique time.
    pub jump_weights: Vec<f64>,
    /// Mass placed at each unique time.
    pub mass_ledger: Vec<f64>,
}

impl RttrResult {
    pub fn total_mass(&self) -> f64 {
        self.mass_ledger.iter().sum()
    }
}

pub fn rttr(jt: &JumpTable) -> RttrResult {
    let m = jt.m();
    let last = m - 1;
    let mut jump_weights = Vec::with_capacity(m);
    let mut weight = 1.0 / jt.n() as f64;
    for k in 0..m {
        jump_weights.push(weight);
        if k < last {
            weight *= 1.0 + jt.dc()[k] as f64 / jt.at_risk_after()[k] as f64;
        }
    }

    let mass_ledger: Vec<f64> = (0..m)
        .map(|k| {
            let count = if k < last {
                jt.dn()[k]
            } else {
                jt.at_risk()[k]
            };
            jump_weights[k] * count as f64
        })
        .collect();

    let mut placed = 0.0;
    let mut values: Vec<f64> = mass_ledger
        .iter()
        .map(|&mass| {
            placed += mass;
            1.0 - placed
        })
        .collect();
    // All mass has been placed once X_(m) is reached.
    values[last] = 0.0;

    RttrResult {
        estimate: StepFunction::new(1.0, jt.times().to_vec(), values),
        jump_weights,
        mass_ledger,
    }
}
