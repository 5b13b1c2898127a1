//! Reference computations that work directly on raw `(time, status)` pairs.
//!
//! Nothing here goes through `JumpTable` or the crate's estimators: every
//! count is an indicator sum over the raw observations, so agreement with the
//! library is a genuine cross-check.
#![allow(dead_code)]

use survkit::estimators::{
    censoring_from_relation, censoring_via_inverse_product, ipcw_cdf, ipcw_survival_tilde,
    naive_survival, product_limit_censoring_dagger, product_limit_censoring_naive,
    product_limit_failure, rttr, self_consistent,
};
use survkit::simulate::{generate, LawSpec, SimConfig};
use survkit::{build_jump_table, validate_sample, CensoredSample, JumpTable};

pub type Raw = [(f64, i64)];

pub const DATASET_A: [(f64, i64); 4] = [(1.0, 1), (2.0, 0), (3.0, 1), (4.0, 1)];
pub const DATASET_B: [(f64, i64); 4] = [(1.0, 1), (2.0, 1), (2.0, 0), (3.0, 0)];

pub fn table(raw: &Raw) -> JumpTable {
    build_jump_table(&validate_sample(raw).unwrap())
}

fn unique_times(raw: &Raw) -> Vec<f64> {
    let mut t: Vec<f64> = raw.iter().map(|o| o.0).collect();
    t.sort_by(f64::total_cmp);
    t.dedup();
    t
}

fn count(raw: &Raw, pred: impl Fn(f64, i64) -> bool) -> f64 {
    raw.iter().filter(|&&(x, d)| pred(x, d)).count() as f64
}

fn ratio(num: f64, den: f64) -> f64 {
    if den == 0.0 {
        assert_eq!(num, 0.0);
        0.0
    } else {
        num / den
    }
}

pub fn naive(raw: &Raw, t: f64) -> f64 {
    count(raw, |x, _| x > t) / raw.len() as f64
}

/// `Π_{u <= t} (1 − ΔN(u)/Y(u))`, counts taken from the raw pairs.
pub fn product_limit(raw: &Raw, t: f64) -> f64 {
    unique_times(raw)
        .into_iter()
        .filter(|&u| u <= t)
        .map(|u| {
            1.0 - ratio(
                count(raw, |x, d| x == u && d == 1),
                count(raw, |x, _| x >= u),
            )
        })
        .product()
}

/// Censoring product over `u` satisfying `in_range`, with the risk set
/// either `Y†` (`dagger = true`) or `Y`.
fn censoring_product(raw: &Raw, in_range: impl Fn(f64) -> bool, dagger: bool) -> f64 {
    unique_times(raw)
        .into_iter()
        .filter(|&u| in_range(u))
        .map(|u| {
            let censored = count(raw, |x, d| x == u && d == 0);
            let risk = if dagger {
                count(raw, |x, d| (x >= u && d == 0) || (x > u && d == 1))
            } else {
                count(raw, |x, _| x >= u)
            };
            1.0 - ratio(censored, risk)
        })
        .product()
}

pub fn censor_dagger(raw: &Raw, t: f64) -> f64 {
    censoring_product(raw, |u| u <= t, true)
}

pub fn censor_dagger_left(raw: &Raw, t: f64) -> f64 {
    censoring_product(raw, |u| u < t, true)
}

pub fn censor_naive(raw: &Raw, t: f64) -> f64 {
    censoring_product(raw, |u| u <= t, false)
}

/// `[Π_{u <= t} (1 + ΔC(u)/Y(u+))]⁻¹`.
pub fn censor_inverse(raw: &Raw, t: f64) -> f64 {
    let growth: f64 = unique_times(raw)
        .into_iter()
        .filter(|&u| u <= t)
        .map(|u| 1.0 + count(raw, |x, d| x == u && d == 0) / count(raw, |x, _| x > u))
        .product();
    1.0 / growth
}

pub fn ipcw_cdf_oracle(raw: &Raw, t: f64) -> f64 {
    raw.iter()
        .filter(|&&(x, d)| d == 1 && x <= t)
        .map(|&(x, _)| 1.0 / censor_dagger_left(raw, x))
        .sum::<f64>()
        / raw.len() as f64
}

pub fn ipcw_tilde_oracle(raw: &Raw, t: f64) -> f64 {
    raw.iter()
        .filter(|&&(x, d)| d == 1 && x > t)
        .map(|&(x, _)| 1.0 / censor_dagger_left(raw, x))
        .sum::<f64>()
        / raw.len() as f64
}

/// Literal fixed-point sweep of
/// `Ŝ(t) = Ŝ₀(t) + n⁻¹ Σ_i (1 − D_i) I{X_i <= t} Ŝ(t)/Ŝ(X_i)`,
/// iterated over the raw observations until the sup change is below `tol`.
/// Returns the grid of unique times and the values on it.
pub fn self_consistent_oracle(raw: &Raw, tol: f64) -> (Vec<f64>, Vec<f64>) {
    let times = unique_times(raw);
    let n = raw.len() as f64;
    let at = |grid: &[f64], s: &[f64], t: f64| -> f64 {
        match grid.iter().rposition(|&u| u <= t) {
            Some(k) => s[k],
            None => 1.0,
        }
    };
    let mut s: Vec<f64> = times.iter().map(|&t| naive(raw, t)).collect();
    for _ in 0..1_000_000 {
        let next: Vec<f64> = times
            .iter()
            .map(|&t| {
                let st = at(&times, &s, t);
                let sum: f64 = raw
                    .iter()
                    .filter(|&&(x, d)| d == 0 && x <= t)
                    .map(|&(x, _)| ratio(st, at(&times, &s, x)))
                    .sum();
                naive(raw, t) + sum / n
            })
            .collect();
        let change = next
            .iter()
            .zip(&s)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        s = next;
        if change <= tol {
            return (times, s);
        }
    }
    panic!("oracle fixed point did not settle");
}

pub fn self_consistent_oracle_at(raw: &Raw, t: f64) -> f64 {
    let (times, s) = self_consistent_oracle(raw, 1e-14);
    match times.iter().rposition(|&u| u <= t) {
        Some(k) => s[k],
        None => 1.0,
    }
}

/// Redistribute-to-the-right by explicit mass passing. Each observation
/// holds `1/n`; scanning the unique times left to right, every censored
/// observation at a time before the last hands its mass in equal shares to
/// the observations strictly to its right. Returns the mass settled at each
/// unique time (failures there, or everything at the last time).
pub fn rttr_mass_passing(raw: &Raw) -> (Vec<f64>, Vec<f64>) {
    let times = unique_times(raw);
    let n = raw.len();
    let mut mass = vec![1.0 / n as f64; n];
    let last = *times.last().unwrap();
    let mut settled = Vec::with_capacity(times.len());
    for &u in &times {
        if u == last {
            settled.push((0..n).filter(|&i| raw[i].0 == u).map(|i| mass[i]).sum());
            break;
        }
        settled.push(
            (0..n)
                .filter(|&i| raw[i].0 == u && raw[i].1 == 1)
                .map(|i| mass[i])
                .sum(),
        );
        let right: Vec<usize> = (0..n).filter(|&i| raw[i].0 > u).collect();
        for i in (0..n).filter(|&i| raw[i].0 == u && raw[i].1 == 0) {
            let share = mass[i] / right.len() as f64;
            for &j in &right {
                mass[j] += share;
            }
            mass[i] = 0.0;
        }
    }
    (times, settled)
}

pub fn rttr_oracle_at(raw: &Raw, t: f64) -> f64 {
    let (times, settled) = rttr_mass_passing(raw);
    1.0 - times
        .iter()
        .zip(&settled)
        .filter(|(&u, _)| u <= t)
        .map(|(_, &m)| m)
        .sum::<f64>()
}

/// One frozen expected value per evaluation point, together with the library
/// route and the oracle route that must both reproduce it.
pub struct GoldenCase {
    pub label: &'static str,
    pub dataset: &'static Raw,
    pub expected: Vec<(f64, f64)>,
    pub library: fn(&Raw, f64) -> f64,
    pub oracle: fn(&Raw, f64) -> f64,
}

fn lib_naive(raw: &Raw, t: f64) -> f64 {
    naive_survival(&table(raw)).eval(t)
}
fn lib_pl(raw: &Raw, t: f64) -> f64 {
    product_limit_failure(&table(raw)).eval(t)
}
fn lib_censor_pl(raw: &Raw, t: f64) -> f64 {
    product_limit_censoring_dagger(&table(raw)).eval(t)
}
fn lib_censor_naive(raw: &Raw, t: f64) -> f64 {
    product_limit_censoring_naive(&table(raw)).eval(t)
}
fn lib_inverse(raw: &Raw, t: f64) -> f64 {
    let jt = table(raw);
    let t_max = jt.times()[jt.m() - 2];
    let t_max = 0.5 * (t_max + jt.last_time());
    censoring_via_inverse_product(&jt, t_max)
        .unwrap()
        .eval(t)
        .unwrap()
}
fn lib_relation(raw: &Raw, t: f64) -> f64 {
    let jt = table(raw);
    censoring_from_relation(&product_limit_failure(&jt), &jt)
        .unwrap()
        .eval(t)
        .unwrap()
}
fn oracle_relation(raw: &Raw, t: f64) -> f64 {
    count(raw, |x, _| x > t) / (raw.len() as f64 * product_limit(raw, t))
}
fn lib_sc(raw: &Raw, t: f64) -> f64 {
    self_consistent(&table(raw), 1e-12, 10_000)
        .unwrap()
        .estimate
        .eval(t)
}
fn lib_ipcw_cdf(raw: &Raw, t: f64) -> f64 {
    let jt = table(raw);
    ipcw_cdf(&jt, &product_limit_censoring_dagger(&jt))
        .unwrap()
        .eval(t)
}
fn lib_ipcw_tilde(raw: &Raw, t: f64) -> f64 {
    let jt = table(raw);
    ipcw_survival_tilde(&jt, &product_limit_censoring_dagger(&jt))
        .unwrap()
        .eval(t)
}
fn lib_rttr(raw: &Raw, t: f64) -> f64 {
    rttr(&table(raw)).estimate.eval(t)
}
fn oracle_one_minus_ipcw(raw: &Raw, t: f64) -> f64 {
    1.0 - ipcw_cdf_oracle(raw, t)
}
fn lib_one_minus_ipcw(raw: &Raw, t: f64) -> f64 {
    1.0 - lib_ipcw_cdf(raw, t)
}

fn zip(points: &[f64], values: &[f64]) -> Vec<(f64, f64)> {
    assert_eq!(points.len(), values.len());
    points.iter().copied().zip(values.iter().copied()).collect()
}

/// Every estimator value listed for the two small datasets, with exact
/// rational expectations.
pub fn golden_cases() -> Vec<GoldenCase> {
    // Each interval between observed times is hit at both ends and inside.
    let a_pts = [0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0, 5.0];
    let b_pts = [0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 4.0];
    vec![
        GoldenCase {
            label: "naive A",
            dataset: &DATASET_A,
            expected: zip(
                &a_pts,
                &[1.0, 1.0, 0.75, 0.75, 0.5, 0.5, 0.25, 0.25, 0.0, 0.0],
            ),
            library: lib_naive,
            oracle: naive,
        },
        GoldenCase {
            label: "naive B",
            dataset: &DATASET_B,
            expected: zip(&b_pts, &[1.0, 1.0, 0.75, 0.75, 0.25, 0.25, 0.0, 0.0]),
            library: lib_naive,
            oracle: naive,
        },
        GoldenCase {
            label: "pl A",
            dataset: &DATASET_A,
            expected: zip(
                &a_pts,
                &[1.0, 1.0, 0.75, 0.75, 0.75, 0.75, 0.375, 0.375, 0.0, 0.0],
            ),
            library: lib_pl,
            oracle: product_limit,
        },
        GoldenCase {
            label: "pl B",
            dataset: &DATASET_B,
            expected: zip(&b_pts, &[1.0, 1.0, 0.75, 0.75, 0.5, 0.5, 0.5, 0.5]),
            library: lib_pl,
            oracle: product_limit,
        },
        GoldenCase {
            label: "censor-pl A",
            dataset: &DATASET_A,
            expected: zip(
                &a_pts,
                &[
                    1.0,
                    1.0,
                    1.0,
                    1.0,
                    2.0 / 3.0,
                    2.0 / 3.0,
                    2.0 / 3.0,
                    2.0 / 3.0,
                    2.0 / 3.0,
                    2.0 / 3.0,
                ],
            ),
            library: lib_censor_pl,
            oracle: censor_dagger,
        },
        GoldenCase {
            label: "censor-pl B",
            dataset: &DATASET_B,
            expected: zip(&b_pts, &[1.0, 1.0, 1.0, 1.0, 0.5, 0.5, 0.0, 0.0]),
            library: lib_censor_pl,
            oracle: censor_dagger,
        },
        GoldenCase {
            label: "censor-naive A",
            dataset: &DATASET_A,
            expected: zip(
                &a_pts,
                &[
                    1.0,
                    1.0,
                    1.0,
                    1.0,
                    2.0 / 3.0,
                    2.0 / 3.0,
                    2.0 / 3.0,
                    2.0 / 3.0,
                    2.0 / 3.0,
                    2.0 / 3.0,
                ],
            ),
            library: lib_censor_naive,
            oracle: censor_naive,
        },
        GoldenCase {
            label: "censor-naive B",
            dataset: &DATASET_B,
            expected: zip(
                &b_pts,
                &[1.0, 1.0, 1.0, 1.0, 2.0 / 3.0, 2.0 / 3.0, 0.0, 0.0],
            ),
            library: lib_censor_naive,
            oracle: censor_naive,
        },
        GoldenCase {
            label: "censor inverse-product A",
            dataset: &DATASET_A,
            expected: zip(
                &[0.0, 1.0, 2.0, 2.5, 3.0, 3.5],
                &[1.0, 1.0, 2.0 / 3.0, 2.0 / 3.0, 2.0 / 3.0, 2.0 / 3.0],
            ),
            library: lib_inverse,
            oracle: censor_inverse,
        },
        GoldenCase {
            label: "censor inverse-product B",
            dataset: &DATASET_B,
            expected: zip(&[0.0, 1.0, 2.0, 2.5], &[1.0, 1.0, 0.5, 0.5]),
            library: lib_inverse,
            oracle: censor_inverse,
        },
        GoldenCase {
            label: "censor from relation A",
            dataset: &DATASET_A,
            expected: zip(
                &[0.0, 1.0, 2.0, 2.5, 3.0, 3.5],
                &[1.0, 1.0, 2.0 / 3.0, 2.0 / 3.0, 2.0 / 3.0, 2.0 / 3.0],
            ),
            library: lib_relation,
            oracle: oracle_relation,
        },
        GoldenCase {
            label: "censor from relation B",
            dataset: &DATASET_B,
            expected: zip(&[0.0, 1.0, 2.0, 2.5], &[1.0, 1.0, 0.5, 0.5]),
            library: lib_relation,
            oracle: oracle_relation,
        },
        GoldenCase {
            label: "sc A",
            dataset: &DATASET_A,
            expected: zip(
                &a_pts,
                &[1.0, 1.0, 0.75, 0.75, 0.75, 0.75, 0.375, 0.375, 0.0, 0.0],
            ),
            library: lib_sc,
            oracle: self_consistent_oracle_at,
        },
        GoldenCase {
            label: "sc B",
            dataset: &DATASET_B,
            expected: zip(&b_pts, &[1.0, 1.0, 0.75, 0.75, 0.5, 0.5, 0.0, 0.0]),
            library: lib_sc,
            oracle: self_consistent_oracle_at,
        },
        GoldenCase {
            label: "ipcw-cdf A",
            dataset: &DATASET_A,
            expected: zip(
                &a_pts,
                &[0.0, 0.0, 0.25, 0.25, 0.25, 0.25, 0.625, 0.625, 1.0, 1.0],
            ),
            library: lib_ipcw_cdf,
            oracle: ipcw_cdf_oracle,
        },
        GoldenCase {
            label: "ipcw-cdf B",
            dataset: &DATASET_B,
            expected: zip(&b_pts, &[0.0, 0.0, 0.25, 0.25, 0.5, 0.5, 0.5, 0.5]),
            library: lib_ipcw_cdf,
            oracle: ipcw_cdf_oracle,
        },
        GoldenCase {
            label: "1 - ipcw-cdf B",
            dataset: &DATASET_B,
            expected: zip(&[2.0], &[0.5]),
            library: lib_one_minus_ipcw,
            oracle: oracle_one_minus_ipcw,
        },
        GoldenCase {
            label: "ipcw-surv A",
            dataset: &DATASET_A,
            expected: zip(
                &a_pts,
                &[1.0, 1.0, 0.75, 0.75, 0.75, 0.75, 0.375, 0.375, 0.0, 0.0],
            ),
            library: lib_ipcw_tilde,
            oracle: ipcw_tilde_oracle,
        },
        GoldenCase {
            label: "ipcw-surv B",
            dataset: &DATASET_B,
            expected: zip(&b_pts, &[0.5, 0.5, 0.25, 0.25, 0.0, 0.0, 0.0, 0.0]),
            library: lib_ipcw_tilde,
            oracle: ipcw_tilde_oracle,
        },
        GoldenCase {
            label: "rttr A",
            dataset: &DATASET_A,
            expected: zip(
                &a_pts,
                &[1.0, 1.0, 0.75, 0.75, 0.75, 0.75, 0.375, 0.375, 0.0, 0.0],
            ),
            library: lib_rttr,
            oracle: rttr_oracle_at,
        },
        GoldenCase {
            label: "rttr B",
            dataset: &DATASET_B,
            expected: zip(&b_pts, &[1.0, 1.0, 0.75, 0.75, 0.5, 0.5, 0.0, 0.0]),
            library: lib_rttr,
            oracle: rttr_oracle_at,
        },
    ]
}

/// Worst `(library, oracle)` deviation from the frozen values of a case.
pub fn golden_errors(case: &GoldenCase) -> (f64, f64) {
    let mut lib_err: f64 = 0.0;
    let mut oracle_err: f64 = 0.0;
    for &(t, want) in &case.expected {
        lib_err = lib_err.max(((case.library)(case.dataset, t) - want).abs());
        oracle_err = oracle_err.max(((case.oracle)(case.dataset, t) - want).abs());
    }
    (lib_err, oracle_err)
}

/// The randomized identity corpus: 1 000 datasets alternating between
/// exponential/exponential laws and discrete uniform laws sharing their
/// support, with `n` cycling through 1..=50.
pub fn randomized_corpus() -> Vec<(SimConfig, CensoredSample)> {
    (0..1000u64)
        .map(|i| {
            let n = 1 + (i as usize % 50);
            let config = if i % 2 == 0 {
                let rates = [0.5, 1.0, 2.0];
                SimConfig {
                    failure_law: LawSpec::Exponential { rate: 1.0 },
                    censoring_law: LawSpec::Exponential {
                        rate: rates[(i / 2) as usize % 3],
                    },
                    n,
                    seed: i,
                }
            } else {
                let k = 2 + (i / 2) as usize % 5;
                let support: Vec<f64> = (1..=k).map(|v| v as f64).collect();
                SimConfig {
                    failure_law: LawSpec::DiscreteUniform {
                        support: support.clone(),
                    },
                    censoring_law: LawSpec::DiscreteUniform { support },
                    n,
                    seed: i,
                }
            };
            let sample = generate(&config);
            (config, sample)
        })
        .collect()
}

pub fn is_discrete(config: &SimConfig) -> bool {
    matches!(config.failure_law, LawSpec::DiscreteUniform { .. })
}
