//! Synthetic right-censored samples.
//!
//! Failure times `T` and censoring times `U` are drawn independently and
//! reported as `X = min(T, U)`, `D = I{T <= U}`. The random source is
//! ChaCha8 (`rand_chacha`) seeded from `SimConfig::seed`, with `T` drawn from
//! stream 0 and `U` from stream 1 of the same key. The two streams never share
//! output, so with a continuous law ties between `T` and `U` only arise
//! through genuine floating-point coincidence.
//!
//! Discrete laws produce values exactly on their support points, which is
//! what makes ties between failures and censorings reproducible.

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Exp, Geometric};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::data::{validate_sample, CensoredSample};
use crate::step::StepFunction;

const FAILURE_STREAM: u64 = 0;
const CENSORING_STREAM: u64 = 1;

#[derive(Debug, Error)]
pub enum SimError {
    #[error("invalid law: {0}")]
    InvalidLaw(String),
    #[error("sample size must be at least 1")]
    ZeroSampleSize,
    #[error("malformed simulation config: {0}")]
    Json(#[from] serde_json::Error),
}

/// Distribution of a latent failure or censoring time.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(
    tag = "kind",
    rename_all = "camelCase",
    rename_all_fields = "camelCase"
)]
pub enum LawSpec {
    /// `P{T > t} = exp(−rate · t)`.
    Exponential { rate: f64 },
    /// Equal mass on each support point.
    DiscreteUniform { support: Vec<f64> },
    /// `grid_step · G` with `G` geometric on `{1, 2, …}`.
    GeometricGrid { success_prob: f64, grid_step: f64 },
}

impl LawSpec {
    pub fn validate(&self) -> Result<(), SimError> {
        let positive = |x: f64| x.is_finite() && x > 0.0;
        match self {
            LawSpec::Exponential { rate } if !positive(*rate) => Err(SimError::InvalidLaw(
                format!("exponential rate must be positive and finite, got {rate}"),
            )),
            LawSpec::DiscreteUniform { support } => {
                if support.is_empty() {
                    Err(SimError::InvalidLaw("discrete support is empty".into()))
                } else if !support.iter().all(|&x| positive(x)) {
                    Err(SimError::InvalidLaw(
                        "discrete support points must be positive and finite".into(),
                    ))
                } else if !support.windows(2).all(|w| w[0] < w[1]) {
                    Err(SimError::InvalidLaw(
                        "discrete support must be strictly increasing".into(),
                    ))
                } else {
                    Ok(())
                }
            }
            LawSpec::GeometricGrid {
                success_prob,
                grid_step,
            } => {
                if !(*success_prob > 0.0 && *success_prob < 1.0) {
                    Err(SimError::InvalidLaw(format!(
                        "geometric success probability must lie in (0, 1), got {success_prob}"
                    )))
                } else if !positive(*grid_step) {
                    Err(SimError::InvalidLaw(format!(
                        "grid step must be positive and finite, got {grid_step}"
                    )))
                } else {
                    Ok(())
                }
            }
            LawSpec::Exponential { .. } => Ok(()),
        }
    }

    fn sampler(&self) -> Sampler<'_> {
        match self {
            LawSpec::Exponential { rate } => {
                Sampler::Exponential(Exp::new(*rate).expect("validated rate"))
            }
            LawSpec::DiscreteUniform { support } => Sampler::Discrete(support),
            LawSpec::GeometricGrid {
                success_prob,
                grid_step,
            } => Sampler::Grid(
                Geometric::new(*success_prob).expect("validated probability"),
                *grid_step,
            ),
        }
    }
}

enum Sampler<'a> {
    Exponential(Exp<f64>),
    Discrete(&'a [f64]),
    Grid(Geometric, f64),
}

impl Sampler<'_> {
    fn draw(&self, rng: &mut ChaCha8Rng) -> f64 {
        match self {
            Sampler::Exponential(exp) => loop {
                // A zero draw has probability ~2^-53 but would violate T > 0.
                let x = exp.sample(rng);
                if x > 0.0 {
                    break x;
                }
            },
            Sampler::Discrete(support) => support[rng.random_range(0..support.len())],
            Sampler::Grid(geometric, step) => {
                // `Geometric` counts failures before the first success.
                let trials = geometric.sample(rng).saturating_add(1);
                trials as f64 * step
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct SimConfig {
    pub failure_law: LawSpec,
    pub censoring_law: LawSpec,
    pub n: usize,
    pub seed: u64,
}

impl SimConfig {
    pub fn validate(&self) -> Result<(), SimError> {
        if self.n == 0 {
            return Err(SimError::ZeroSampleSize);
        }
        self.failure_law.validate()?;
        self.censoring_law.validate()
    }

    /// Parses and validates a JSON config.
    pub fn from_json(text: &str) -> Result<Self, SimError> {
        let config: SimConfig = serde_json::from_str(text)?;
        config.validate()?;
        Ok(config)
    }

    /// The same laws and size with the seed advanced by `offset`.
    pub fn with_seed_offset(&self, offset: u64) -> Self {
        Self {
            seed: self.seed.wrapping_add(offset),
            ..self.clone()
        }
    }
}

fn stream(seed: u64, id: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(id);
    rng
}

/// Latent `(T_i, U_i)` pairs. Panics on an invalid config.
pub fn draw_latent(config: &SimConfig) -> Vec<(f64, f64)> {
    config.validate().expect("invalid simulation config");
    let failure = config.failure_law.sampler();
    let censoring = config.censoring_law.sampler();
    let mut failure_rng = stream(config.seed, FAILURE_STREAM);
    let mut censoring_rng = stream(config.seed, CENSORING_STREAM);
    (0..config.n)
        .map(|_| {
            (
                failure.draw(&mut failure_rng),
                censoring.draw(&mut censoring_rng),
            )
        })
        .collect()
}

/// Draws a censored sample. Identical configs give bit-identical samples.
/// Panics on an invalid config; call [`SimConfig::validate`] first for
/// untrusted input.
pub fn generate(config: &SimConfig) -> CensoredSample {
    let raw: Vec<(f64, i64)> = draw_latent(config)
        .into_iter()
        .map(|(t, u)| if t <= u { (t, 1) } else { (u, 0) })
        .collect();
    validate_sample(&raw).expect("simulated times are positive and finite")
}

/// Exact survival function `P{T > t}` of a law.
#[derive(Debug, Clone, PartialEq)]
pub enum TrueSurvival {
    Exponential { rate: f64 },
    Step(StepFunction),
    GeometricGrid { success_prob: f64, grid_step: f64 },
}

impl TrueSurvival {
    pub fn eval(&self, t: f64) -> f64 {
        match self {
            TrueSurvival::Exponential { rate } => (-rate * t.max(0.0)).exp(),
            TrueSurvival::Step(f) => f.eval(t),
            TrueSurvival::GeometricGrid {
                success_prob,
                grid_step,
            } => {
                let points = grid_points_at_or_below(t, *grid_step);
                (1.0 - success_prob).powf(points as f64)
            }
        }
    }
}

/// Number of `k >= 1` with `k · step <= t`, using the same products the
/// sampler emits.
fn grid_points_at_or_below(t: f64, step: f64) -> u64 {
    if t < step {
        return 0;
    }
    let mut k = (t / step).floor() as u64;
    while ((k + 1) as f64) * step <= t {
        k += 1;
    }
    while k > 0 && (k as f64) * step > t {
        k -= 1;
    }
    k
}

pub fn true_survival(law: &LawSpec) -> TrueSurvival {
    match law {
        LawSpec::Exponential { rate } => TrueSurvival::Exponential { rate: *rate },
        LawSpec::DiscreteUniform { support } => {
            let k = support.len() as f64;
            let values = (1..=support.len()).map(|j| (k - j as f64) / k).collect();
            TrueSurvival::Step(StepFunction::new(1.0, support.clone(), values))
        }
        LawSpec::GeometricGrid {
            success_prob,
            grid_step,
        } => TrueSurvival::GeometricGrid {
            success_prob: *success_prob,
            grid_step: *grid_step,
        },
    }
}
