//! Fixed-point iteration from the empirical survival of the observed times.
//! Prints the sup-norm change per sweep and compares the limit with the
//! product-limit estimator.

use survkit::estimators::{
    naive_survival, product_limit_failure, self_consistency_map, self_consistency_residual,
    self_consistent, DEFAULT_MAX_ITER, DEFAULT_TOLERANCE,
};
use survkit::{build_jump_table, validate_sample};

fn main() {
    // Last observation censored: the two estimators part ways after it.
    let raw = [
        (0.5, 1),
        (1.2, 0),
        (1.2, 1),
        (2.0, 0),
        (2.7, 1),
        (3.1, 0),
        (3.1, 0),
        (4.4, 1),
        (5.0, 0),
    ];
    let jt = build_jump_table(&validate_sample(&raw).unwrap());

    let start = naive_survival(&jt);
    let mut grid: Vec<f64> = jt.times().iter().map(|&t| start.eval(t)).collect();
    for sweep in 1..=8 {
        let next = self_consistency_map(&jt, &grid);
        let change = grid
            .iter()
            .zip(&next)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        println!("sweep {sweep}: sup change {change:e}");
        grid = next;
    }

    let sc = self_consistent(&jt, DEFAULT_TOLERANCE, DEFAULT_MAX_ITER).unwrap();
    println!(
        "converged after {} sweeps, final change {:e}, fixed-point residual {:e}",
        sc.iterations,
        sc.final_residual,
        self_consistency_residual(&jt, &sc.estimate)
    );
    let pl = product_limit_failure(&jt);
    println!("{:>5} {:>10} {:>10}", "t", "sc", "pl");
    for &t in jt.times() {
        println!("{t:>5} {:>10.6} {:>10.6}", sc.estimate.eval(t), pl.eval(t));
    }
}
