//! Right-continuous piecewise-constant functions on `[0, ∞)`.

use serde::{Deserialize, Serialize};

use crate::error::EstimatorError;

/// A right-continuous step function with finitely many jumps.
///
/// The function equals `initial_value` on `[0, jump_times[0])` and
/// `values[k]` on `[jump_times[k], jump_times[k + 1])`. A "jump" may leave
/// the value unchanged; estimators record every observed time so that all of
/// them share the same grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StepFunction {
    initial_value: f64,
    jump_times: Vec<f64>,
    values: Vec<f64>,
}

impl StepFunction {
    /// Panics if the lengths differ or the jump times are not strictly
    /// increasing and positive.
    pub fn new(initial_value: f64, jump_times: Vec<f64>, values: Vec<f64>) -> Self {
        assert_eq!(
            jump_times.len(),
            values.len(),
            "one value per jump time is required"
        );
        assert!(
            jump_times.first().is_none_or(|&t| t > 0.0),
            "jump times must be positive"
        );
        assert!(
            jump_times.windows(2).all(|w| w[0] < w[1]),
            "jump times must be strictly increasing"
        );
        Self {
            initial_value,
            jump_times,
            values,
        }
    }

    pub fn constant(value: f64) -> Self {
        Self::new(value, Vec::new(), Vec::new())
    }

    pub fn initial_value(&self) -> f64 {
        self.initial_value
    }

    pub fn jump_times(&self) -> &[f64] {
        &self.jump_times
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Value at `t`: the value after the largest jump time `<= t`.
    pub fn eval(&self, t: f64) -> f64 {
        let k = self.jump_times.partition_point(|&x| x <= t);
        if k == 0 {
            self.initial_value
        } else {
            self.values[k - 1]
        }
    }

    /// Limit from the left at `t`, i.e. the value after the largest jump
    /// time strictly below `t`.
    pub fn left_limit(&self, t: f64) -> f64 {
        let k = self.jump_times.partition_point(|&x| x < t);
        if k == 0 {
            self.initial_value
        } else {
            self.values[k - 1]
        }
    }

    /// Value in force after the last jump.
    pub fn tail_value(&self) -> f64 {
        self.values.last().copied().unwrap_or(self.initial_value)
    }

    /// `t ↦ 1 - f(t)`, on the same grid.
    pub fn complement(&self) -> Self {
        Self {
            initial_value: 1.0 - self.initial_value,
            jump_times: self.jump_times.clone(),
            values: self.values.iter().map(|v| 1.0 - v).collect(),
        }
    }

    pub fn is_non_increasing(&self) -> bool {
        let mut prev = self.initial_value;
        self.values.iter().all(|&v| {
            let ok = v <= prev;
            prev = v;
            ok
        })
    }

    pub fn is_non_decreasing(&self) -> bool {
        let mut prev = self.initial_value;
        self.values.iter().all(|&v| {
            let ok = v >= prev;
            prev = v;
            ok
        })
    }

    /// Restricts the function to `[0, limit]` (or `[0, limit)` when `closed`
    /// is false). Evaluation outside the domain is an error.
    pub fn restrict(self, limit: f64, closed: bool) -> RestrictedStep {
        RestrictedStep {
            inner: self,
            limit,
            closed,
        }
    }
}

/// A step function only defined up to a finite limit.
#[derive(Debug, Clone, PartialEq)]
pub struct RestrictedStep {
    inner: StepFunction,
    limit: f64,
    closed: bool,
}

impl RestrictedStep {
    pub fn limit(&self) -> f64 {
        self.limit
    }

    /// Whether the domain includes its upper limit.
    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn contains(&self, t: f64) -> bool {
        t >= 0.0 && (t < self.limit || (self.closed && t == self.limit))
    }

    pub fn eval(&self, t: f64) -> Result<f64, EstimatorError> {
        if self.contains(t) {
            Ok(self.inner.eval(t))
        } else {
            Err(EstimatorError::DomainExceeded {
                t,
                limit: self.limit,
            })
        }
    }

    pub fn left_limit(&self, t: f64) -> Result<f64, EstimatorError> {
        if t > 0.0 && t <= self.limit {
            Ok(self.inner.left_limit(t))
        } else {
            Err(EstimatorError::DomainExceeded {
                t,
                limit: self.limit,
            })
        }
    }

    /// The underlying function, without the domain guard.
    pub fn as_step(&self) -> &StepFunction {
        &self.inner
    }
}
