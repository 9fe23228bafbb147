//! Runs the exhaustive comparison with brute force for every n up to a bound.
//!
//! cargo run --release --example verify_oracle -- 400

use std::time::Instant;

use interior_hull::hull::verify_all;

fn main() {
    let max_n = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(300);
    let start = Instant::now();
    let summary = verify_all(max_n);
    println!(
        "{} pairs ({} two-dimensional hulls) up to n = {max_n}: {} mismatches in {:.2?}",
        summary.pairs,
        summary.polygons,
        summary.mismatches.len(),
        start.elapsed()
    );
    for m in summary.mismatches.iter().take(10) {
        println!("  {m:?}");
    }
}
