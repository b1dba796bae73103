//! Runs every acceptance criterion and prints one line per criterion.
//!
//! Criteria 3 and 10 check statements exactly as written; both are known to
//! fail on a sign or index direction (see README). They still print FAIL.
//! The process exits nonzero only when some other criterion fails or one of
//! the two starts passing, so any change in the outcome table is caught.

use std::process::ExitCode;
use std::time::Instant;

use weakid::selftest::{self, CRITERIA};

const KNOWN_FAILURES: [u8; 2] = [3, 10];

fn main() -> ExitCode {
    let mut unexpected = Vec::new();
    println!("acceptance criteria");
    for (id, _) in CRITERIA {
        let start = Instant::now();
        let outcome = selftest::run(id).expect("listed criterion");
        println!("{outcome} ({:.1?})", start.elapsed());
        if outcome.passed == KNOWN_FAILURES.contains(&id) {
            unexpected.push(id);
        }
    }
    let failed: Vec<u8> = CRITERIA
        .iter()
        .map(|c| c.0)
        .filter(|id| KNOWN_FAILURES.contains(id) != unexpected.contains(id))
        .collect();
    println!("failed criteria: {failed:?}");
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("outcome differs from the recorded table for criteria {unexpected:?}");
        ExitCode::FAILURE
    }
}
