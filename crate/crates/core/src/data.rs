//! Censored observations and their counting-process summary.
//!
//! Ties are detected by exact equality of the parsed `f64` time values. Two
//! times that are meant to coincide must therefore be written identically in
//! the input (for instance `2` and `2.0` parse to the same value, but `0.3`
//! and `0.1 + 0.2` do not).

use serde::Serialize;

use crate::error::SampleError;

/// Division under the convention `0/0 = 0`.
///
/// Every ratio of counts or estimator values in this crate goes through this
/// helper. A zero denominator with a nonzero numerator never arises from
/// valid data and is treated as a logic error.
#[inline]
pub fn div0(num: f64, den: f64) -> f64 {
    if den == 0.0 {
        assert!(num == 0.0, "division of {num} by zero");
        0.0
    } else {
        num / den
    }
}

/// One subject's observed time `X = min(T, U)` and failure indicator
/// `D = I{T <= U}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Observation {
    time: f64,
    failed: bool,
}

impl Observation {
    pub fn time(&self) -> f64 {
        self.time
    }

    /// `true` when the failure was observed (`status = 1`).
    pub fn is_failure(&self) -> bool {
        self.failed
    }

    pub fn status(&self) -> u8 {
        u8::from(self.failed)
    }
}

/// A validated, nonempty right-censored sample in input order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CensoredSample {
    observations: Vec<Observation>,
}

impl CensoredSample {
    pub fn observations(&self) -> &[Observation] {
        &self.observations
    }

    pub fn len(&self) -> usize {
        self.observations.len()
    }

    /// Always false; kept for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        self.observations.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Observation> {
        self.observations.iter()
    }

    /// Back to raw `(time, status)` pairs.
    pub fn to_pairs(&self) -> Vec<(f64, i64)> {
        self.observations
            .iter()
            .map(|o| (o.time, i64::from(o.status())))
            .collect()
    }
}

/// Checks raw `(time, status)` pairs and wraps them in a [`CensoredSample`].
///
/// The first offending pair determines the error.
pub fn validate_sample(raw: &[(f64, i64)]) -> Result<CensoredSample, SampleError> {
    if raw.is_empty() {
        return Err(SampleError::EmptySample);
    }
    let observations = raw
        .iter()
        .enumerate()
        .map(|(i, &(time, status))| {
            if !time.is_finite() {
                return Err(SampleError::NonFiniteTime(i));
            }
            if time <= 0.0 {
                return Err(SampleError::NonPositiveTime(i));
            }
            let failed = match status {
                0 => false,
                1 => true,
                _ => return Err(SampleError::InvalidStatus(i)),
            };
            Ok(Observation { time, failed })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CensoredSample { observations })
}

/// Counting-process skeleton of a sample, one row per unique observed time
/// `X_(1) < … < X_(m)`.
///
/// For row `k`: `dn[k] = ΔN(X_(k))`, `dc[k] = ΔC(X_(k))`,
/// `at_risk[k] = Y(X_(k))`, `at_risk_dagger[k] = Y†(X_(k)) = Y − ΔN` and
/// `at_risk_after[k] = Y(X_(k)+)`. The dagger column drops subjects failing
/// at `X_(k)` from the censoring risk set, since a tie `T = U` counts as a
/// failure.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct JumpTable {
    n: usize,
    times: Vec<f64>,
    dn: Vec<usize>,
    dc: Vec<usize>,
    at_risk: Vec<usize>,
    at_risk_dagger: Vec<usize>,
    at_risk_after: Vec<usize>,
}

pub fn build_jump_table(sample: &CensoredSample) -> JumpTable {
    let n = sample.len();
    let mut sorted: Vec<Observation> = sample.observations().to_vec();
    sorted.sort_by(|a, b| a.time.total_cmp(&b.time));

    let mut times = Vec::new();
    let mut dn = Vec::new();
    let mut dc = Vec::new();
    for obs in &sorted {
        if times.last() != Some(&obs.time) {
            times.push(obs.time);
            dn.push(0);
            dc.push(0);
        }
        let k = times.len() - 1;
        if obs.failed {
            dn[k] += 1;
        } else {
            dc[k] += 1;
        }
    }

    let m = times.len();
    let mut at_risk = Vec::with_capacity(m);
    let mut at_risk_dagger = Vec::with_capacity(m);
    let mut at_risk_after = Vec::with_capacity(m);
    let mut remaining = n;
    for k in 0..m {
        at_risk.push(remaining);
        at_risk_dagger.push(remaining - dn[k]);
        remaining -= dn[k] + dc[k];
        at_risk_after.push(remaining);
    }
    debug_assert_eq!(remaining, 0);

    JumpTable {
        n,
        times,
        dn,
        dc,
        at_risk,
        at_risk_dagger,
        at_risk_after,
    }
}

impl JumpTable {
    /// Sample size `n`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of unique observed times `m`.
    pub fn m(&self) -> usize {
        self.times.len()
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn dn(&self) -> &[usize] {
        &self.dn
    }

    pub fn dc(&self) -> &[usize] {
        &self.dc
    }

    pub fn at_risk(&self) -> &[usize] {
        &self.at_risk
    }

    pub fn at_risk_dagger(&self) -> &[usize] {
        &self.at_risk_dagger
    }

    pub fn at_risk_after(&self) -> &[usize] {
        &self.at_risk_after
    }

    /// `X_(m)`, the largest observed time.
    pub fn last_time(&self) -> f64 {
        self.times[self.m() - 1]
    }

    /// Whether every observation at `X_(m)` is a failure, i.e.
    /// `ΔN(X_(m)) = Y(X_(m))`.
    pub fn last_time_all_failures(&self) -> bool {
        let last = self.m() - 1;
        self.dn[last] == self.at_risk[last]
    }

    /// Whether some `u < X_(m)` carries both a failure and a censoring.
    pub fn has_common_discontinuity_before_last(&self) -> bool {
        let last = self.m() - 1;
        (0..last).any(|k| self.dn[k] > 0 && self.dc[k] > 0)
    }

    /// `Y(t+)`: the number of observations strictly greater than `t`.
    pub fn at_risk_after_time(&self, t: f64) -> usize {
        let k = self.times.partition_point(|&x| x <= t);
        if k == 0 {
            self.n
        } else {
            self.at_risk_after[k - 1]
        }
    }

    /// `Y(t)`: the number of observations `>= t`.
    pub fn at_risk_at_time(&self, t: f64) -> usize {
        let k = self.times.partition_point(|&x| x < t);
        if k == 0 {
            self.n
        } else {
            self.at_risk_after[k - 1]
        }
    }
}
