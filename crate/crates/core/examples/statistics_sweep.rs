//! Averages of quotient sums, Euclid step counts and hull sizes.

use interior_hull::stats::{average_cf_length, knuth_tau, popov_leading_term, popov_sum, sweep, tau_asymptotic};

fn main() -> interior_hull::Result<()> {
    for n in [100, 1_000, 10_000] {
        let tau = knuth_tau(n)?;
        let len = average_cf_length(n)?;
        println!(
            "n = {n}: tau = {:.3} (asymptotic {:.3}), mean quotient count {:.3}",
            *tau.numer() as f64 / *tau.denom() as f64,
            tau_asymptotic(n as f64),
            *len.numer() as f64 / *len.denom() as f64
        );
    }

    for p in [101, 1_009, 10_007] {
        println!("p = {p}: sum of quotient sums {} vs leading term {:.0}", popov_sum(p)?, popov_leading_term(p as f64));
    }

    let records = sweep(2_000, 2_050)?;
    let mean = records.iter().map(|r| r.vertex_count).sum::<i64>() as f64 / records.len() as f64;
    println!("mean hull vertex count for 2000 <= n <= 2050: {mean:.2} over {} pairs", records.len());
    Ok(())
}
