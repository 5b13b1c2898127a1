//! Nonparametric estimation of failure and censoring survival functions from
//! right-censored data with ties.
//!
//! The crate builds a counting-process [`JumpTable`] from a validated
//! [`CensoredSample`] and computes, as right-continuous [`StepFunction`]s:
//!
//! - the empirical survival of the observed times,
//! - product-limit estimators of the failure survival `S` and of the
//!   censoring survival `K` (tie-aware and naive forms),
//! - the self-consistent estimator by fixed-point iteration,
//! - inverse-probability-of-censoring weighted (IPCW) estimators,
//! - the redistribute-to-the-right (RTTR) estimator.
//!
//! [`identities::verify_all`] checks the exact finite-sample relations that
//! tie these estimators together and reports the residuals. [`simulate`]
//! draws synthetic samples, including discrete laws with common support that
//! force failure/censoring ties.
//!
//! ```
//! use survkit::{build_jump_table, validate_sample};
//! use survkit::estimators::product_limit_failure;
//!
//! let sample = validate_sample(&[(1.0, 1), (2.0, 0), (3.0, 1), (4.0, 1)]).unwrap();
//! let jt = build_jump_table(&sample);
//! let km = product_limit_failure(&jt);
//! assert_eq!(km.eval(3.0), 0.375);
//! ```

pub mod cli;
pub mod data;
pub mod error;
pub mod estimators;
pub mod identities;
pub mod io;
pub mod simulate;
pub mod step;

pub use data::{build_jump_table, div0, validate_sample, CensoredSample, JumpTable, Observation};
pub use error::{EstimatorError, SampleError};
pub use step::{RestrictedStep, StepFunction};
