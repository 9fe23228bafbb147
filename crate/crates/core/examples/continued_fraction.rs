//! Partial quotients, convergents and the distance chain of n/a.
//!
//! cargo run --example continued_fraction -- 29 11

use interior_hull::contfrac::{cf_expand, convergents, distance_profile, stark_steps, turning_determinant};

fn main() -> interior_hull::Result<()> {
    let args: Vec<i64> = std::env::args().skip(1).filter_map(|s| s.parse().ok()).collect();
    let (n, a) = match args[..] {
        [n, a, ..] => (n, a),
        _ => (29, 11),
    };

    let cf = cf_expand(n, a)?;
    assert_eq!(cf, stark_steps(n, a)?);
    println!("{n}/{a} = {:?}, sum of quotients {}", cf.quotients(), cf.sum());

    let seq = convergents(&cf)?;
    for i in -2..=seq.m() {
        println!("v_{i:<2} = {}   u_{i:<2} = {}", seq.v(i), seq.u(i));
    }

    let profile = distance_profile(&seq);
    println!("distance numerators |n B_i - a A_i|: {:?}", profile.numerators);
    for i in 0..seq.m() - 1 {
        println!("turn at v_{i}: {}", turning_determinant(&seq, i));
    }
    Ok(())
}
