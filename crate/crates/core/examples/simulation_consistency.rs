//! Product-limit error against the true survival as the sample grows, for
//! continuous and tied laws.

use survkit::build_jump_table;
use survkit::estimators::product_limit_failure;
use survkit::simulate::{generate, true_survival, LawSpec, SimConfig};

fn sup_error(config: &SimConfig, horizon: f64) -> f64 {
    let sample = generate(config);
    let pl = product_limit_failure(&build_jump_table(&sample));
    let truth = true_survival(&config.failure_law);
    let mut points: Vec<f64> = pl
        .jump_times()
        .iter()
        .copied()
        .filter(|&t| t <= horizon)
        .collect();
    points.push(horizon);
    points
        .iter()
        .map(|&t| {
            let right = (pl.eval(t) - truth.eval(t)).abs();
            let left = (pl.left_limit(t) - truth.eval(t - 1e-9 * t.max(1.0))).abs();
            right.max(left)
        })
        .fold(0.0, f64::max)
}

fn main() {
    let laws = [
        (
            "exponential",
            LawSpec::Exponential { rate: 1.0 },
            LawSpec::Exponential { rate: 0.5 },
            1.5,
        ),
        (
            "geometric grid",
            LawSpec::GeometricGrid {
                success_prob: 0.3,
                grid_step: 0.5,
            },
            LawSpec::GeometricGrid {
                success_prob: 0.2,
                grid_step: 0.5,
            },
            2.0,
        ),
    ];
    for (label, failure_law, censoring_law, horizon) in laws {
        println!("{label}, horizon {horizon}");
        for n in [100, 1_000, 10_000, 100_000] {
            let config = SimConfig {
                failure_law: failure_law.clone(),
                censoring_law: censoring_law.clone(),
                n,
                seed: 2024,
            };
            println!(
                "  n = {n:>6}: sup |PL - S| = {:.5}",
                sup_error(&config, horizon)
            );
        }
    }
}
