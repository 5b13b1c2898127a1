//! When a failure and a censoring share a time, swapping the status labels
//! and reusing the product-limit formula gives the wrong censoring survival.
//! The tie-aware form divides by the number still at risk after the failures.

use survkit::estimators::{product_limit_censoring_dagger, product_limit_censoring_naive};
use survkit::identities::{evaluation_grid, volterra_censoring_residual};
use survkit::{build_jump_table, validate_sample};

fn main() {
    let raw = [(1.0, 1), (2.0, 1), (2.0, 0), (3.0, 0)];
    let jt = build_jump_table(&validate_sample(&raw).unwrap());
    let naive = product_limit_censoring_naive(&jt);
    let dagger = product_limit_censoring_dagger(&jt);

    println!("{:>6} {:>10} {:>10}", "t", "naive", "tie-aware");
    for t in evaluation_grid(&jt) {
        println!("{t:>6} {:>10.4} {:>10.4}", naive.eval(t), dagger.eval(t));
    }
    println!(
        "common discontinuity before last time: {}",
        jt.has_common_discontinuity_before_last()
    );
    println!(
        "censoring Volterra residual: naive {:e}, tie-aware {:e}",
        volterra_censoring_residual(&jt, &naive),
        volterra_censoring_residual(&jt, &dagger)
    );
}
