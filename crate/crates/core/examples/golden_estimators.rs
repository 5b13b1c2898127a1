//! Every estimator on two four-point samples, side by side.
//!
//! ```text
//! cargo run --example golden_estimators
//! ```

use survkit::cli::{compute_estimator, EstimatorId};
use survkit::identities::evaluation_grid;
use survkit::{build_jump_table, validate_sample};

const IDS: [(EstimatorId, &str); 8] = [
    (EstimatorId::Naive, "naive"),
    (EstimatorId::Pl, "pl"),
    (EstimatorId::Sc, "sc"),
    (EstimatorId::Rttr, "rttr"),
    (EstimatorId::IpcwCdf, "ipcw-cdf"),
    (EstimatorId::IpcwSurv, "ipcw-surv"),
    (EstimatorId::CensorPl, "censor-pl"),
    (EstimatorId::CensorNaive, "censor-naive"),
];

fn main() {
    let samples = [
        ("A", vec![(1.0, 1), (2.0, 0), (3.0, 1), (4.0, 1)]),
        ("B", vec![(1.0, 1), (2.0, 1), (2.0, 0), (3.0, 0)]),
    ];
    for (label, raw) in samples {
        let jt = build_jump_table(&validate_sample(&raw).unwrap());
        let grid = evaluation_grid(&jt);
        println!("sample {label}: {raw:?}");
        print!("{:>14}", "t");
        for t in &grid {
            print!("{t:>8}");
        }
        println!();
        for (id, name) in IDS {
            let f = compute_estimator(&jt, id).unwrap();
            print!("{name:>14}");
            for &t in &grid {
                print!("{:>8.4}", f.eval(t));
            }
            println!();
        }
        println!();
    }
}
