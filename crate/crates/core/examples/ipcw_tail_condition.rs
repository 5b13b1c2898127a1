//! Inverse-probability-of-censoring weights reproduce the product-limit
//! distribution function exactly. The weighted tail sum matches the
//! product-limit survival only when everything still at risk at the last
//! time fails there.

use survkit::estimators::{
    ipcw_cdf, ipcw_survival_tilde, product_limit_censoring_dagger, product_limit_failure,
};
use survkit::identities::evaluation_grid;
use survkit::{build_jump_table, validate_sample};

fn main() {
    for raw in [
        vec![(1.0, 1), (2.0, 0), (3.0, 1), (4.0, 1)],
        vec![(1.0, 1), (2.0, 1), (2.0, 0), (3.0, 0)],
    ] {
        let jt = build_jump_table(&validate_sample(&raw).unwrap());
        let k = product_limit_censoring_dagger(&jt);
        let pl = product_limit_failure(&jt);
        let cdf = ipcw_cdf(&jt, &k).unwrap();
        let tilde = ipcw_survival_tilde(&jt, &k).unwrap();

        println!("{raw:?}");
        println!("last time all failures: {}", jt.last_time_all_failures());
        println!("{:>6} {:>8} {:>8} {:>8}", "t", "pl", "1-cdf", "tail");
        for t in evaluation_grid(&jt) {
            println!(
                "{t:>6} {:>8.4} {:>8.4} {:>8.4}",
                pl.eval(t),
                1.0 - cdf.eval(t),
                tilde.eval(t)
            );
        }
        println!();
    }
}
