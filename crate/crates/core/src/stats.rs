//! Averages over residues and per-pair sweep records.
//!
//! Division steps are counted the way Euclid runs on `(n, a)` with `a < n`:
//! one division per partial quotient, so `steps = m + 1`.

use std::io::{self, Write};

use num_rational::Ratio;
use rayon::prelude::*;

use crate::contfrac::cf_expand;
use crate::error::{domain, Result};
use crate::hull::{classify_degenerate, vertex_count_formula, HullKind};
use crate::lattice::gcd;
use crate::parallelogram::CanonicalParallelogram;

/// Euler's totient by trial division.
pub fn euler_phi(n: i64) -> i64 {
    assert!(n >= 1, "euler_phi needs n ≥ 1");
    let (mut rest, mut phi) = (n, n);
    let mut p = 2;
    while p * p <= rest {
        if rest % p == 0 {
            while rest % p == 0 {
                rest /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if rest > 1 {
        phi -= phi / rest;
    }
    phi
}

pub fn is_prime(n: i64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// `S(a, n)`: the sum of the partial quotients of `n / a`, equal to that of
/// `a / n = [0; q_0, …, q_m]`.
pub fn sum_partial_quotients(a: i64, n: i64) -> Result<i64> {
    Ok(cf_expand(n, a)?.sum())
}

/// Number of Euclid division steps on `(n, a)`, `0 < a < n`.
fn division_steps(n: i64, a: i64) -> i64 {
    let (mut num, mut den, mut steps) = (n, a, 0);
    while den != 0 {
        (num, den) = (den, num % den);
        steps += 1;
    }
    steps
}

fn coprime_residues(n: i64) -> impl Iterator<Item = i64> {
    (1..n).filter(move |&a| gcd(a, n) == 1)
}

/// Mean continued-fraction length `m + 1` of `n / a` over the `φ(n)`
/// residues `a` coprime to `n`.
pub fn average_cf_length(n: i64) -> Result<Ratio<i64>> {
    if n < 2 {
        return Err(domain(format!("average_cf_length needs n ≥ 2, got {n}")));
    }
    let total: i64 = coprime_residues(n).map(|a| division_steps(n, a)).sum();
    Ok(Ratio::new(total, euler_phi(n)))
}

/// Knuth's `τ_n`: the mean step count when Euclid is started on the pair
/// `(a, n)` with the smaller operand first, which costs one extra division
/// (`a mod n = a`) before the expansion of `n / a` begins.
pub fn knuth_tau(n: i64) -> Result<Ratio<i64>> {
    Ok(average_cf_length(n)? + 1)
}

/// `Σ_{1 ≤ a < p} S(a, p)` for prime `p`.
pub fn popov_sum(p: i64) -> Result<i64> {
    if !is_prime(p) {
        return Err(domain(format!("popov_sum needs a prime, got {p}")));
    }
    (1..p).map(|a| sum_partial_quotients(a, p)).sum()
}

/// `6/π² · p · ln²(p)`, the leading term of [`popov_sum`].
pub fn popov_leading_term(p: f64) -> f64 {
    6.0 / (std::f64::consts::PI * std::f64::consts::PI) * p * p.ln() * p.ln()
}

/// `12·ln 2/π² · ln n + 1.467`, the asymptotic for [`knuth_tau`].
pub fn tau_asymptotic(n: f64) -> f64 {
    12.0 * std::f64::consts::LN_2 / (std::f64::consts::PI * std::f64::consts::PI) * n.ln() + 1.467
}

/// One coprime pair `(a, n)` of a sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepRecord {
    pub n: i64,
    pub a: i64,
    /// Index of the last partial quotient.
    pub m: i64,
    pub steps: i64,
    pub sum_q: i64,
    pub vertex_count: i64,
    pub area2: i64,
    pub degenerate: bool,
}

impl SweepRecord {
    pub fn compute(p: CanonicalParallelogram) -> Result<Self> {
        let cf = cf_expand(p.n(), p.a())?;
        let kind = classify_degenerate(p);
        let vertex_count = match kind {
            HullKind::Point => 1,
            _ => vertex_count_formula(&cf),
        };
        Ok(Self {
            n: p.n(),
            a: p.a(),
            m: cf.m() as i64,
            steps: cf.quotients().len() as i64,
            sum_q: cf.sum(),
            vertex_count,
            area2: 2 * (p.n() - cf.sum()),
            degenerate: kind != HullKind::Polygon,
        })
    }

    /// The record's internal invariants.
    pub fn is_consistent(&self) -> bool {
        let quotient_floor = self.m == 0 || self.sum_q >= self.m + 2;
        let area =
            if self.degenerate { self.area2 == 0 } else { self.area2 == 2 * (self.n - self.sum_q) && self.area2 > 0 };
        quotient_floor && area && self.steps == self.m + 1
    }

    pub const CSV_HEADER: &'static str = "n,a,m,steps,sum_q,vertex_count,area2,degenerate";

    pub fn write_csv_row<W: Write>(&self, out: &mut W) -> io::Result<()> {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            self.n, self.a, self.m, self.steps, self.sum_q, self.vertex_count, self.area2, self.degenerate as u8
        )
    }
}

fn records_for(n: i64) -> Vec<SweepRecord> {
    coprime_residues(n)
        .map(|a| SweepRecord::compute(CanonicalParallelogram::new(a, n).expect("coprime residue")).expect("in range"))
        .collect()
}

fn check_range(n_min: i64, n_max: i64) -> Result<()> {
    if n_min < 2 || n_min > n_max {
        return Err(domain(format!("need 2 ≤ n_min ≤ n_max, got {n_min}..={n_max}")));
    }
    Ok(())
}

/// Every coprime `(a, n)` with `n_min ≤ n ≤ n_max`, in `(n, a)` order.
pub fn sweep(n_min: i64, n_max: i64) -> Result<Vec<SweepRecord>> {
    check_range(n_min, n_max)?;
    Ok((n_min..=n_max).into_par_iter().flat_map_iter(records_for).collect())
}

/// Streams the sweep as CSV. Work is parallel over blocks of `n`; rows are
/// written in `(n, a)` order by a single writer. Returns the row count.
/// An invalid range is reported as `InvalidInput`.
pub fn write_sweep_csv<W: Write>(n_min: i64, n_max: i64, out: &mut W) -> io::Result<u64> {
    check_range(n_min, n_max).map_err(|e| io::Error::new(io::ErrorKind::InvalidInput, e))?;
    writeln!(out, "{}", SweepRecord::CSV_HEADER)?;
    let mut rows = 0u64;
    let mut start = n_min;
    while start <= n_max {
        let end = (start + 255).min(n_max);
        let block: Vec<Vec<SweepRecord>> = (start..=end).into_par_iter().map(records_for).collect();
        for rec in block.iter().flatten() {
            rec.write_csv_row(out)?;
            rows += 1;
        }
        start = end + 1;
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_examples() {
        assert_eq!(euler_phi(10), 4);
        assert_eq!(euler_phi(29), 28);
        assert_eq!(euler_phi(5040), 1152);
        assert_eq!(euler_phi(1), 1);
    }

    #[test]
    fn partial_quotient_sums() {
        assert_eq!(sum_partial_quotients(11, 29).unwrap(), 8);
        assert_eq!(sum_partial_quotients(1, 10).unwrap(), 10);
        assert_eq!(sum_partial_quotients(7, 10).unwrap(), 6);
    }

    #[test]
    fn average_length_examples() {
        assert_eq!(average_cf_length(10).unwrap(), Ratio::from_integer(2));
        assert_eq!(average_cf_length(3).unwrap(), Ratio::new(3, 2));
        assert_eq!(knuth_tau(3).unwrap(), Ratio::new(5, 2));
        assert!(average_cf_length(1).is_err());
    }

    #[test]
    fn popov_examples() {
        assert_eq!(popov_sum(7).unwrap(), 34);
        assert_eq!(popov_sum(3).unwrap(), 6);
        assert!(popov_sum(9).is_err());
    }

    #[test]
    fn sweep_examples() {
        let recs = sweep(5, 5).unwrap();
        assert_eq!(recs.iter().map(|r| r.a).collect::<Vec<_>>(), vec![1, 2, 3, 4]);
        assert_eq!(sweep(2, 3).unwrap().len(), 3);
        assert!(sweep(1, 3).is_err());
        assert!(sweep(5, 4).is_err());
        let r = SweepRecord::compute(CanonicalParallelogram::new(11, 29).unwrap()).unwrap();
        assert_eq!(
            r,
            SweepRecord { n: 29, a: 11, m: 4, steps: 5, sum_q: 8, vertex_count: 10, area2: 42, degenerate: false }
        );
    }

    #[test]
    fn csv_layout() {
        let mut buf = Vec::new();
        let rows = write_sweep_csv(2, 3, &mut buf).unwrap();
        assert!(write_sweep_csv(3, 2, &mut Vec::new()).is_err());
        assert_eq!(rows, 3);
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "n,a,m,steps,sum_q,vertex_count,area2,degenerate\n2,1,0,1,2,1,0,1\n3,1,0,1,3,2,0,1\n3,2,1,2,3,2,0,1\n"
        );
    }
}
