//! Reporting helpers for the acceptance suite in `tests/acceptance.rs`.

use std::time::{Duration, Instant};

use polyforge::verify::Claim;

/// A claim that passes when `start` is less than `limit` ago.
pub fn within(label: &str, start: Instant, limit: Duration) -> Claim {
    let took = start.elapsed();
    let mut c = Claim::new(label, format!("{took:.2?}"), format!("< {limit:?}"));
    c.pass = took < limit;
    c
}

/// Prints every claim and a verdict line, then panics if any claim failed.
pub fn gate(criterion: &str, claims: &[Claim]) {
    for c in claims {
        println!("criterion {criterion}: {c}");
    }
    let failed: Vec<&Claim> = claims.iter().filter(|c| !c.pass).collect();
    println!("criterion {criterion}: {}", if failed.is_empty() { "PASS" } else { "FAIL" });
    assert!(failed.is_empty(), "criterion {criterion} failed: {failed:?}");
}
