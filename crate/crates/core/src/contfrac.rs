//! Continued fractions of `n / a` and their convergents as lattice points.
//!
//! Convergents are stored as `v_{-2} = (1,0)`, `v_{-1} = (0,1)`,
//! `v_i = v_{i-2} + q_i·v_{i-1}`; the point `v_i = (B_i, A_i)` has
//! `A_i / B_i` converging to `n / a`, ending at `v_m = (a, n)`. Indices are
//! `isize` so `-2` and `-1` can be written as they are used; physically they
//! sit at offsets 0 and 1.

use crate::error::{Error, Result};
use crate::lattice::LatticePoint;
use crate::parallelogram::CanonicalParallelogram;

/// `[q_0, …, q_m]` for `n / a` with `0 < a < n` coprime.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ContinuedFraction {
    n: i64,
    a: i64,
    quotients: Vec<i64>,
}

impl ContinuedFraction {
    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn quotients(&self) -> &[i64] {
        &self.quotients
    }

    /// Index of the last partial quotient.
    pub fn m(&self) -> usize {
        self.quotients.len() - 1
    }

    /// `q_0 + … + q_m`.
    pub fn sum(&self) -> i64 {
        self.quotients.iter().sum()
    }

    /// Evaluates the expansion back to `(numerator, denominator)`.
    pub fn evaluate(&self) -> (i64, i64) {
        let (mut num, mut den) = (1i64, 0i64);
        for &q in self.quotients.iter().rev() {
            (num, den) = (q * num + den, num);
        }
        (num, den)
    }

    fn check(n: i64, a: i64, quotients: Vec<i64>) -> Result<Self> {
        let m = quotients.len() - 1;
        if m >= 1 && quotients[m] < 2 {
            return Err(Error::Consistency(format!("expansion of {n}/{a} ends with q_m = {} < 2", quotients[m])));
        }
        let cf = Self { n, a, quotients };
        if cf.evaluate() != (n, a) {
            return Err(Error::Consistency(format!("{:?} does not evaluate to {n}/{a}", cf.quotients)));
        }
        Ok(cf)
    }
}

/// Partial quotients of `n / a` by Euclid's division steps.
pub fn cf_expand(n: i64, a: i64) -> Result<ContinuedFraction> {
    CanonicalParallelogram::new(a, n)?;
    let mut quotients = Vec::new();
    let (mut num, mut den) = (n, a);
    while den != 0 {
        quotients.push(num / den);
        (num, den) = (den, num % den);
    }
    ContinuedFraction::check(n, a, quotients)
}

/// Partial quotients of `n / a` computed geometrically: each `q_i` is the
/// largest integer keeping `v_{i-2} + q_i·v_{i-1}` on the same side of the
/// line `y = (n/a)·x` as `v_{i-2}` (or on it). Only the sign of `n·x − a·y`
/// is ever inspected; `q_i` is located by galloping and bisection.
pub fn stark_steps(n: i64, a: i64) -> Result<ContinuedFraction> {
    CanonicalParallelogram::new(a, n)?;
    let (n128, a128) = (n as i128, a as i128);
    let side = |p: (i128, i128)| n128 * p.0 - a128 * p.1;
    let mut prev2 = (1i128, 0i128);
    let mut prev1 = (0i128, 1i128);
    let mut quotients = Vec::new();
    loop {
        let s2 = side(prev2);
        let s1 = side(prev1);
        // side(prev2 + q·prev1) = s2 + q·s1 with s1 of opposite sign
        let ok = |q: i128| {
            let s = s2 + q * s1;
            s == 0 || (s > 0) == (s2 > 0)
        };
        if !ok(1) {
            return Err(Error::Consistency(format!("no admissible step for {n}/{a}")));
        }
        let mut lo = 1i128;
        let mut hi = 2i128;
        while ok(hi) {
            lo = hi;
            hi <<= 1;
        }
        while hi - lo > 1 {
            let mid = lo + ((hi - lo) >> 1);
            if ok(mid) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let q = lo;
        let v = (prev2.0 + q * prev1.0, prev2.1 + q * prev1.1);
        quotients.push(q as i64);
        if side(v) == 0 {
            if v != (a128, n128) {
                return Err(Error::Consistency(format!("walk for {n}/{a} ended at {v:?}")));
            }
            break;
        }
        prev2 = prev1;
        prev1 = v;
    }
    ContinuedFraction::check(n, a, quotients)
}

/// `v_{-2}, v_{-1}, v_0, …, v_m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvergentSequence {
    points: Vec<LatticePoint>,
}

impl ConvergentSequence {
    /// `v_i` for `-2 ≤ i ≤ m`.
    pub fn v(&self, i: isize) -> LatticePoint {
        self.points[(i + 2) as usize]
    }

    /// `u_i = v_i + (1, 0)`.
    pub fn u(&self, i: isize) -> LatticePoint {
        let v = self.v(i);
        LatticePoint::new(v.x + 1, v.y)
    }

    pub fn m(&self) -> isize {
        self.points.len() as isize - 3
    }

    /// `v_0, …, v_m`.
    pub fn convergents(&self) -> &[LatticePoint] {
        &self.points[2..]
    }

    /// All stored points, `v_{-2}` first.
    pub fn all(&self) -> &[LatticePoint] {
        &self.points
    }

    /// The target `(a, n) = v_m`.
    pub fn target(&self) -> LatticePoint {
        *self.points.last().unwrap()
    }
}

pub fn convergents(cf: &ContinuedFraction) -> Result<ConvergentSequence> {
    let mut points = Vec::with_capacity(cf.quotients.len() + 2);
    points.push(LatticePoint::new(1, 0));
    points.push(LatticePoint::new(0, 1));
    for &q in &cf.quotients {
        let k = points.len();
        let next = points[k - 2].checked_add(points[k - 1].checked_scale(q)?)?;
        points.push(next);
    }
    let seq = ConvergentSequence { points };
    if seq.target() != LatticePoint::new(cf.a, cf.n) {
        return Err(Error::Consistency(format!("convergents of {}/{} end at {}", cf.n, cf.a, seq.target())));
    }
    Ok(seq)
}

/// `|n·B_i − a·A_i|` for `i = 0..m−1`: the distance of `v_i` to the line
/// `y = (n/a)·x`, scaled by `√(n² + a²)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceProfile {
    pub numerators: Vec<i64>,
}

pub fn distance_profile(seq: &ConvergentSequence) -> DistanceProfile {
    let LatticePoint { x: a, y: n } = seq.target();
    let numerators = (0..seq.m())
        .map(|i| {
            let v = seq.v(i);
            (n as i128 * v.x as i128 - a as i128 * v.y as i128).unsigned_abs() as i64
        })
        .collect();
    DistanceProfile { numerators }
}

/// Signed `n·B_i − a·A_i`, positive to the right of the line `y = (n/a)·x`.
pub fn signed_distance_numerator(p: LatticePoint, a: i64, n: i64) -> i128 {
    n as i128 * p.x as i128 - a as i128 * p.y as i128
}

/// `E(m)`: the largest even integer strictly below `m` (`E(0) = −2`).
pub fn last_even_before(m: isize) -> isize {
    if m.rem_euclid(2) == 0 {
        m - 2
    } else {
        m - 1
    }
}

/// `O(m)`: the largest odd integer strictly below `m` (`O(0) = −1`).
pub fn last_odd_before(m: isize) -> isize {
    if m.rem_euclid(2) == 1 {
        m - 2
    } else {
        m - 1
    }
}

/// Determinant of the 3×3 matrix with rows `(1, B_j, A_j)` for
/// `j = i−2, i, i+2`; its sign is the turn direction at `v_i`.
pub fn turning_determinant(seq: &ConvergentSequence, i: isize) -> i128 {
    let (p, q, r) = (seq.v(i - 2), seq.v(i), seq.v(i + 2));
    crate::lattice::cross(p, q, r)
}

/// Which quarter of `P(a, n)` a point falls in, split by the lines
/// `y = (n/a)(x − 1/2)` and `y = n/2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QuadrantRegion {
    /// Lower left.
    P1,
    /// Lower right.
    P2,
    /// Upper right.
    P3,
    /// Upper left.
    P4,
    OnBoundary,
}

pub fn region_of(p: LatticePoint, parallelogram: CanonicalParallelogram) -> Result<QuadrantRegion> {
    if !parallelogram.strictly_contains(p) {
        return Err(crate::error::domain(format!(
            "{p} is not strictly inside P({}, {})",
            parallelogram.a(),
            parallelogram.n()
        )));
    }
    let (a, n) = (parallelogram.a() as i128, parallelogram.n() as i128);
    let slant = 2 * n * p.x as i128 - 2 * a * p.y as i128 - n;
    let level = 2 * p.y as i128 - n;
    Ok(match (slant.signum(), level.signum()) {
        (0, _) | (_, 0) => QuadrantRegion::OnBoundary,
        (-1, -1) => QuadrantRegion::P1,
        (1, -1) => QuadrantRegion::P2,
        (1, 1) => QuadrantRegion::P3,
        _ => QuadrantRegion::P4,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: i64, y: i64) -> LatticePoint {
        LatticePoint::new(x, y)
    }

    #[test]
    fn expansion_examples() {
        assert_eq!(cf_expand(29, 11).unwrap().quotients(), &[2, 1, 1, 1, 3]);
        assert_eq!(cf_expand(5, 1).unwrap().quotients(), &[5]);
        assert_eq!(cf_expand(21, 13).unwrap().quotients(), &[1, 1, 1, 1, 1, 2]);
        assert!(matches!(cf_expand(10, 4), Err(Error::Domain(_))));
        assert!(matches!(cf_expand(4, 10), Err(Error::Domain(_))));
        assert!(matches!(cf_expand(5, 0), Err(Error::Domain(_))));
    }

    #[test]
    fn stark_examples() {
        assert_eq!(stark_steps(29, 11).unwrap().quotients(), &[2, 1, 1, 1, 3]);
        assert_eq!(stark_steps(5, 2).unwrap().quotients(), &[2, 2]);
        assert_eq!(stark_steps(3, 2).unwrap().quotients(), &[1, 2]);
        let big = 1i64 << 31;
        assert_eq!(stark_steps(big - 1, 1).unwrap().quotients(), &[big - 1]);
    }

    #[test]
    fn convergent_examples() {
        let seq = convergents(&cf_expand(29, 11).unwrap()).unwrap();
        assert_eq!(seq.convergents(), &[pt(1, 2), pt(1, 3), pt(2, 5), pt(3, 8), pt(11, 29)]);
        assert_eq!(seq.v(-2), pt(1, 0));
        assert_eq!(seq.v(-1), pt(0, 1));
        assert_eq!(seq.u(-1), pt(1, 1));
        assert_eq!(seq.m(), 4);
        assert_eq!(convergents(&cf_expand(5, 1).unwrap()).unwrap().convergents(), &[pt(1, 5)]);
        assert_eq!(convergents(&cf_expand(5, 2).unwrap()).unwrap().convergents(), &[pt(1, 2), pt(2, 5)]);
    }

    #[test]
    fn distance_examples() {
        let profile = |n, a| distance_profile(&convergents(&cf_expand(n, a).unwrap()).unwrap()).numerators;
        assert_eq!(profile(29, 11), vec![7, 4, 3, 1]);
        assert_eq!(profile(5, 2), vec![1]);
        assert!(profile(5, 1).is_empty());
    }

    #[test]
    fn index_helpers() {
        assert_eq!((last_even_before(4), last_odd_before(4)), (2, 3));
        assert_eq!((last_even_before(1), last_odd_before(1)), (0, -1));
        assert_eq!((last_even_before(0), last_odd_before(0)), (-2, -1));
        assert_eq!((last_even_before(5), last_odd_before(5)), (4, 3));
    }

    #[test]
    fn turning_spot_value() {
        let seq = convergents(&cf_expand(29, 11).unwrap()).unwrap();
        assert_eq!(turning_determinant(&seq, 0), -2);
    }

    #[test]
    fn region_examples() {
        let p = CanonicalParallelogram::new(11, 29).unwrap();
        assert_eq!(region_of(pt(1, 2), p).unwrap(), QuadrantRegion::P1);
        assert_eq!(region_of(pt(4, 8), p).unwrap(), QuadrantRegion::P2);
        assert_eq!(region_of(pt(11, 27), p).unwrap(), QuadrantRegion::P3);
        assert_eq!(region_of(pt(8, 21), p).unwrap(), QuadrantRegion::P4);
        assert!(matches!(region_of(pt(0, 0), p), Err(Error::Domain(_))));
        // (1,1) in P(1,2) sits on both dividing lines
        let q = CanonicalParallelogram::new(1, 2).unwrap();
        assert_eq!(region_of(pt(1, 1), q).unwrap(), QuadrantRegion::OnBoundary);
    }
}
