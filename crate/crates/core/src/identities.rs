//! Executable checks of the exact finite-sample relations between the
//! estimators.
//!
//! Every function involved is a step function on the grid of unique observed
//! times, so residuals are evaluated at `t = 0`, at each unique time (values
//! and left limits), and at one point past `X_(m)`. That grid is exhaustive.
//!
//! Two checks are conditional. `tilde-condition` and `censor-forms-agree`
//! pass when their biconditional holds in both directions: agreement within
//! tolerance when the condition holds, and a witness of disagreement when it
//! does not.

use std::fmt;

use serde::Serialize;

use crate::data::{div0, JumpTable};
use crate::error::EstimatorError;
use crate::estimators::{
    ipcw_cdf, ipcw_survival_tilde, product_limit_censoring_dagger, product_limit_censoring_naive,
    product_limit_failure, rttr, self_consistency_residual, self_consistent, DEFAULT_MAX_ITER,
};
use crate::step::StepFunction;

pub const DEFAULT_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum IdentityName {
    VolterraCensoring,
    VolterraFailure,
    ScFixedPoint,
    ScEqualsPlBeforeTail,
    Factorization,
    IpcwCdfEqualsPl,
    MassIdentity,
    TildeCondition,
    RttrEqualsSc,
    RttrMassSum,
    CensorFormsAgree,
    Ordering,
}

impl IdentityName {
    /// Canonical check order of every report.
    pub const ALL: [IdentityName; 12] = [
        IdentityName::VolterraCensoring,
        IdentityName::VolterraFailure,
        IdentityName::ScFixedPoint,
        IdentityName::ScEqualsPlBeforeTail,
        IdentityName::Factorization,
        IdentityName::IpcwCdfEqualsPl,
        IdentityName::MassIdentity,
        IdentityName::TildeCondition,
        IdentityName::RttrEqualsSc,
        IdentityName::RttrMassSum,
        IdentityName::CensorFormsAgree,
        IdentityName::Ordering,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IdentityName::VolterraCensoring => "volterra-censoring",
            IdentityName::VolterraFailure => "volterra-failure",
            IdentityName::ScFixedPoint => "sc-fixed-point",
            IdentityName::ScEqualsPlBeforeTail => "sc-equals-pl-before-tail",
            IdentityName::Factorization => "factorization",
            IdentityName::IpcwCdfEqualsPl => "ipcw-cdf-equals-pl",
            IdentityName::MassIdentity => "mass-identity",
            IdentityName::TildeCondition => "tilde-condition",
            IdentityName::RttrEqualsSc => "rttr-equals-sc",
            IdentityName::RttrMassSum => "rttr-mass-sum",
            IdentityName::CensorFormsAgree => "censor-forms-agree",
            IdentityName::Ordering => "ordering",
        }
    }

    pub fn is_conditional(self) -> bool {
        matches!(
            self,
            IdentityName::TildeCondition | IdentityName::CensorFormsAgree
        )
    }
}

impl fmt::Display for IdentityName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct IdentityCheck {
    pub name: IdentityName,
    pub max_residual: f64,
    pub tolerance: f64,
    pub passed: bool,
    /// For conditional checks, whether the condition holds on this dataset.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub condition_holds: Option<bool>,
    /// For conditional checks whose condition fails, the first grid point
    /// where the two sides differ by more than the tolerance.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<f64>,
}

impl IdentityCheck {
    fn unconditional(name: IdentityName, max_residual: f64, tolerance: f64) -> Self {
        Self {
            name,
            max_residual,
            tolerance,
            passed: max_residual <= tolerance,
            condition_holds: None,
            witness: None,
        }
    }

    /// `gaps` are `(t, |lhs − rhs|)` pairs over the evaluation grid.
    fn conditional(
        name: IdentityName,
        condition: bool,
        gaps: &[(f64, f64)],
        tolerance: f64,
    ) -> Self {
        let max_residual = worst(gaps.iter().map(|g| g.1));
        let witness = gaps.iter().find(|g| g.1 > tolerance).map(|g| g.0);
        let passed = if condition {
            max_residual <= tolerance
        } else {
            witness.is_some() && !max_residual.is_nan()
        };
        Self {
            name,
            max_residual,
            tolerance,
            passed,
            condition_holds: Some(condition),
            witness: if condition { None } else { witness },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DatasetSummary {
    pub n: usize,
    pub m: usize,
    /// Some `u < X_(m)` has both `ΔN(u) > 0` and `ΔC(u) > 0`.
    pub common_discontinuity_before_last: bool,
    /// `ΔN(X_(m))`.
    pub last_failures: usize,
    /// `Y(X_(m))`.
    pub last_at_risk: usize,
    /// `ΔN(X_(m)) = Y(X_(m))`.
    pub last_time_all_failures: bool,
    /// Range any Kaplan–Meier tail value past `X_(m)` must respect.
    pub km_tail_interval: (f64, f64),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct VerificationReport {
    pub checks: Vec<IdentityCheck>,
    pub dataset_summary: DatasetSummary,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn passed_count(&self) -> usize {
        self.checks.iter().filter(|c| c.passed).count()
    }

    pub fn get(&self, name: IdentityName) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Largest value, with any NaN poisoning the result.
fn worst(values: impl IntoIterator<Item = f64>) -> f64 {
    values.into_iter().fold(0.0, |acc: f64, v| {
        if acc.is_nan() || v.is_nan() {
            f64::NAN
        } else {
            acc.max(v)
        }
    })
}

/// `[0, Ŝ_PL(X_(m))]`: the interval a Kaplan–Meier value past the last
/// observed time must lie in. Degenerate exactly when every observation at
/// `X_(m)` is a failure.
pub fn km_tail_interval(jt: &JumpTable) -> (f64, f64) {
    (0.0, product_limit_failure(jt).eval(jt.last_time()))
}

/// A point strictly past `X_(m)`: one time unit beyond it, or the next
/// representable value when the unit step is absorbed by rounding.
pub fn point_beyond_last(jt: &JumpTable) -> f64 {
    let last = jt.last_time();
    let beyond = last + 1.0;
    if beyond > last {
        beyond
    } else {
        last.next_up()
    }
}

/// `0`, every unique time, and one point past `X_(m)`.
pub fn evaluation_grid(jt: &JumpTable) -> Vec<f64> {
    let mut grid = Vec::with_capacity(jt.m() + 2);
    grid.push(0.0);
    grid.extend_from_slice(jt.times());
    grid.push(point_beyond_last(jt));
    grid
}

/// Runs the full battery of identity checks on one dataset.
///
/// A self-consistent iteration that fails to converge is recorded as a
/// failed `sc-fixed-point` check; the dependent checks then use its last
/// iterate. Other estimator errors are returned.
pub fn verify_all(jt: &JumpTable, tol: f64) -> Result<VerificationReport, EstimatorError> {
    assert!(tol > 0.0, "tolerance must be positive");
    let grid = evaluation_grid(jt);
    let last = jt.last_time();
    let n = jt.n() as f64;

    let pl = product_limit_failure(jt);
    let k_dagger = product_limit_censoring_dagger(jt);
    let k_naive = product_limit_censoring_naive(jt);
    let (sc, sc_converged) = match self_consistent(jt, tol, DEFAULT_MAX_ITER) {
        Ok(r) => (r.estimate, true),
        Err(EstimatorError::NoConvergence { last, .. }) => (last, false),
        Err(e) => return Err(e),
    };
    let f_ipcw = ipcw_cdf(jt, &k_dagger)?;
    let s_tilde = ipcw_survival_tilde(jt, &k_dagger)?;
    let rt = rttr(jt);

    let mut checks = Vec::with_capacity(IdentityName::ALL.len());

    checks.push(IdentityCheck::unconditional(
        IdentityName::VolterraCensoring,
        volterra_censoring_residual(jt, &k_dagger),
        tol,
    ));
    checks.push(IdentityCheck::unconditional(
        IdentityName::VolterraFailure,
        volterra_failure_residual(jt, &pl, &grid),
        tol,
    ));

    let mut fixed_point = IdentityCheck::unconditional(
        IdentityName::ScFixedPoint,
        self_consistency_residual(jt, &sc),
        tol,
    );
    fixed_point.passed &= sc_converged;
    checks.push(fixed_point);

    checks.push(IdentityCheck::unconditional(
        IdentityName::ScEqualsPlBeforeTail,
        worst(grid.iter().map(|&t| {
            let truncated = if t < last { pl.eval(t) } else { 0.0 };
            (sc.eval(t) - truncated).abs()
        })),
        tol,
    ));

    checks.push(IdentityCheck::unconditional(
        IdentityName::Factorization,
        factorization_residual(jt, &pl, &k_dagger, &grid),
        tol,
    ));

    checks.push(IdentityCheck::unconditional(
        IdentityName::IpcwCdfEqualsPl,
        worst(
            grid.iter()
                .map(|&t| (f_ipcw.eval(t) - (1.0 - pl.eval(t))).abs()),
        ),
        tol,
    ));

    let failure_mass: f64 = jt
        .times()
        .iter()
        .zip(jt.dn())
        .map(|(&t, &dn)| div0(dn as f64, n * k_dagger.left_limit(t)))
        .sum();
    let last_censored = *jt.dc().last().expect("nonempty table") as f64;
    let tail_mass = div0(last_censored, n * k_dagger.left_limit(last));
    checks.push(IdentityCheck::unconditional(
        IdentityName::MassIdentity,
        (failure_mass + tail_mass - 1.0).abs(),
        tol,
    ));

    let tilde_gaps: Vec<(f64, f64)> = grid
        .iter()
        .map(|&t| (t, (s_tilde.eval(t) - (1.0 - f_ipcw.eval(t))).abs()))
        .collect();
    checks.push(IdentityCheck::conditional(
        IdentityName::TildeCondition,
        jt.last_time_all_failures(),
        &tilde_gaps,
        tol,
    ));

    checks.push(IdentityCheck::unconditional(
        IdentityName::RttrEqualsSc,
        worst(
            grid.iter()
                .map(|&t| (rt.estimate.eval(t) - sc.eval(t)).abs()),
        ),
        tol,
    ));
    checks.push(IdentityCheck::unconditional(
        IdentityName::RttrMassSum,
        (rt.total_mass() - 1.0).abs(),
        tol,
    ));

    let censor_gaps: Vec<(f64, f64)> = grid
        .iter()
        .filter(|&&t| t < last)
        .map(|&t| (t, (k_naive.eval(t) - k_dagger.eval(t)).abs()))
        .collect();
    checks.push(IdentityCheck::conditional(
        IdentityName::CensorFormsAgree,
        !jt.has_common_discontinuity_before_last(),
        &censor_gaps,
        tol,
    ));

    checks.push(IdentityCheck::unconditional(
        IdentityName::Ordering,
        worst(grid.iter().map(|&t| (sc.eval(t) - pl.eval(t)).max(0.0))),
        tol,
    ));

    debug_assert!(checks
        .iter()
        .map(|c| c.name)
        .eq(IdentityName::ALL.iter().copied()));

    let last_idx = jt.m() - 1;
    Ok(VerificationReport {
        checks,
        dataset_summary: DatasetSummary {
            n: jt.n(),
            m: jt.m(),
            common_discontinuity_before_last: jt.has_common_discontinuity_before_last(),
            last_failures: jt.dn()[last_idx],
            last_at_risk: jt.at_risk()[last_idx],
            last_time_all_failures: jt.last_time_all_failures(),
            km_tail_interval: km_tail_interval(jt),
        },
    })
}

/// `K̂(t) = 1 − Σ_{u <= t} K̂(u) ΔC(u) / Y(u+)` for `t < X_(m)`, plus
/// `K̂(0) = 1`.
pub fn volterra_censoring_residual(jt: &JumpTable, k_hat: &StepFunction) -> f64 {
    let last = jt.m() - 1;
    let mut integral = 0.0;
    let residuals = (0..last).map(|k| {
        let value = k_hat.eval(jt.times()[k]);
        integral += value * jt.dc()[k] as f64 / jt.at_risk_after()[k] as f64;
        (value - (1.0 - integral)).abs()
    });
    worst(std::iter::once((k_hat.eval(0.0) - 1.0).abs()).chain(residuals))
}

/// `Ŝ(t) = 1 − Σ_{u <= t} Ŝ(u−) ΔN(u) / Y(u)` over the grid.
pub fn volterra_failure_residual(jt: &JumpTable, s_hat: &StepFunction, grid: &[f64]) -> f64 {
    let increments: Vec<f64> = jt
        .times()
        .iter()
        .enumerate()
        .map(|(k, &u)| s_hat.left_limit(u) * div0(jt.dn()[k] as f64, jt.at_risk()[k] as f64))
        .collect();
    worst(grid.iter().map(|&t| {
        let upto = jt.times().partition_point(|&x| x <= t);
        let integral: f64 = increments[..upto].iter().sum();
        (s_hat.eval(t) - (1.0 - integral)).abs()
    }))
}

/// `Y(t+)/n = Ŝ(t) K̂(t)` on the grid and `Y(u)/n = Ŝ(u−) K̂(u−)` at every
/// positive grid point.
pub fn factorization_residual(
    jt: &JumpTable,
    s_hat: &StepFunction,
    k_hat: &StepFunction,
    grid: &[f64],
) -> f64 {
    let n = jt.n() as f64;
    let right = grid
        .iter()
        .map(|&t| (jt.at_risk_after_time(t) as f64 / n - s_hat.eval(t) * k_hat.eval(t)).abs());
    let left = grid.iter().filter(|&&t| t > 0.0).map(|&t| {
        (jt.at_risk_at_time(t) as f64 / n - s_hat.left_limit(t) * k_hat.left_limit(t)).abs()
    });
    worst(right.chain(left))
}
