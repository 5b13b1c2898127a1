//! Runs every identity check on a `time,status` CSV file (or a built-in
//! sample with ties) and prints the JSON report.
//!
//! ```text
//! cargo run --example verify_report -- data.csv
//! ```

use std::fs::File;

use survkit::identities::{verify_all, DEFAULT_TOLERANCE};
use survkit::io::read_sample;
use survkit::{build_jump_table, validate_sample};

fn main() {
    let sample = match std::env::args().nth(1) {
        Some(path) => read_sample(File::open(path).unwrap()).unwrap(),
        None => validate_sample(&[(1.0, 1), (2.0, 1), (2.0, 0), (3.0, 0)]).unwrap(),
    };
    let report = verify_all(&build_jump_table(&sample), DEFAULT_TOLERANCE).unwrap();
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
    eprintln!(
        "{}/{} checks passed",
        report.passed_count(),
        report.checks.len()
    );
}
