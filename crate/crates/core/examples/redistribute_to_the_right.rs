//! Redistribute-to-the-right in closed form: each censored observation hands
//! its mass equally to everything at risk after it.

use survkit::estimators::{rttr, self_consistent, DEFAULT_MAX_ITER, DEFAULT_TOLERANCE};
use survkit::{build_jump_table, validate_sample};

fn main() {
    let raw = [
        (1.0, 0),
        (2.0, 1),
        (3.0, 0),
        (3.0, 1),
        (4.0, 1),
        (5.0, 0),
        (6.0, 1),
        (6.0, 0),
    ];
    let jt = build_jump_table(&validate_sample(&raw).unwrap());
    let r = rttr(&jt);
    let sc = self_consistent(&jt, DEFAULT_TOLERANCE, DEFAULT_MAX_ITER).unwrap();

    println!(
        "{:>4} {:>4} {:>4} {:>10} {:>10} {:>10} {:>10}",
        "t", "dN", "dC", "J", "mass", "rttr", "sc"
    );
    for (k, &t) in jt.times().iter().enumerate() {
        println!(
            "{t:>4} {:>4} {:>4} {:>10.6} {:>10.6} {:>10.6} {:>10.6}",
            jt.dn()[k],
            jt.dc()[k],
            r.jump_weights[k],
            r.mass_ledger[k],
            r.estimate.eval(t),
            sc.estimate.eval(t)
        );
    }
    println!("total mass {}", r.total_mass());
}
