//! Clean lattice parallelograms and their canonical form `P(a, n)`.

use std::collections::BTreeSet;

use crate::error::{domain, Error, Result};
use crate::lattice::{det2, egcd, gcd, AffineUnimodularMap, LatticePoint, LatticePolygon, MAX_COORD};

/// A lattice parallelogram `base + s·u + t·v`, `0 ≤ s, t ≤ 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CleanParallelogram {
    pub base: LatticePoint,
    pub u: LatticePoint,
    pub v: LatticePoint,
}

impl CleanParallelogram {
    /// Accepts only clean parallelograms.
    pub fn new(base: LatticePoint, u: LatticePoint, v: LatticePoint) -> Result<Self> {
        let p = Self { base, u, v };
        if !p.is_clean()? {
            return Err(domain(format!("parallelogram spanned by {u}, {v} has lattice points on its sides")));
        }
        Ok(p)
    }

    /// True when the only boundary lattice points are the four vertices.
    pub fn is_clean(&self) -> Result<bool> {
        if det2(self.u, self.v)? == 0 {
            return Err(domain(format!("{} and {} span a degenerate parallelogram", self.u, self.v)));
        }
        Ok(gcd(self.u.x, self.u.y) == 1 && gcd(self.v.x, self.v.y) == 1)
    }

    pub fn vertices(&self) -> Result<[LatticePoint; 4]> {
        let b = self.base;
        Ok([b, b.checked_add(self.u)?, b.checked_add(self.u)?.checked_add(self.v)?, b.checked_add(self.v)?])
    }

    /// Finds a unimodular map sending this parallelogram onto `P(a, n)`.
    ///
    /// Translate the base to the origin, swap the edges if needed so that
    /// `det(u, v) = n > 0`, send `u` to `(1, 0)` with the matrix built from
    /// Bézout coefficients of `u`, and shear along `x` so the image of `v`
    /// lands on `(a, n)` with `0 ≤ a < n`. The returned `a` is the one this
    /// construction produces, not the class minimum.
    pub fn reduce_to_canonical(&self) -> Result<(CanonicalParallelogram, AffineUnimodularMap)> {
        if !self.is_clean()? {
            return Err(domain("reduction requires a clean parallelogram"));
        }
        let (mut u, mut v) = (self.u, self.v);
        let mut n = det2(u, v)?;
        if n < 0 {
            std::mem::swap(&mut u, &mut v);
            n = -n;
        }
        if n == 1 {
            return Err(Error::NoInteriorPoints);
        }
        let (_, m1, m2) = egcd(u.x, u.y)?;
        let to_axis = AffineUnimodularMap::linear([[m1, m2], [-u.y, u.x]])?;
        let w = to_axis.apply(v)?;
        debug_assert_eq!(w.y, n);
        let k = -w.x.div_euclid(n);
        let shear = AffineUnimodularMap::linear([[1, k], [0, 1]])?;
        let translate = AffineUnimodularMap::translation(-self.base);
        let map = shear.compose(&to_axis)?.compose(&translate)?;
        let a = w.x.rem_euclid(n);
        let canon = CanonicalParallelogram::new(a, n)?;
        Ok((canon, map))
    }
}

/// `P(a, n)` with vertices `(0,0), (1,0), (a+1,n), (a,n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalParallelogram {
    a: i64,
    n: i64,
}

impl CanonicalParallelogram {
    pub fn new(a: i64, n: i64) -> Result<Self> {
        if !(0 < a && a < n) {
            return Err(domain(format!("need 0 < a < n, got a = {a}, n = {n}")));
        }
        if n > MAX_COORD {
            return Err(domain(format!("n = {n} exceeds the supported bound 2^31")));
        }
        if gcd(a, n) != 1 {
            return Err(domain(format!("gcd({a}, {n}) = {} ≠ 1", gcd(a, n))));
        }
        Ok(Self { a, n })
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    /// Counterclockwise vertices starting at the origin.
    pub fn vertices(&self) -> [LatticePoint; 4] {
        [
            LatticePoint::new(0, 0),
            LatticePoint::new(1, 0),
            LatticePoint::new(self.a + 1, self.n),
            LatticePoint::new(self.a, self.n),
        ]
    }

    pub fn outline(&self) -> LatticePolygon {
        LatticePolygon::from_convex_ccw(self.vertices().to_vec())
    }

    /// Strict interiority: `0 < y < n` and strictly between the slanted sides.
    pub fn strictly_contains(&self, p: LatticePoint) -> bool {
        let (a, n) = (self.a as i128, self.n as i128);
        let (x, y) = (p.x as i128, p.y as i128);
        0 < y && y < n && n * x - a * y > 0 && n * (x - 1) - a * y < 0
    }

    /// `{a, n − a, a⁻¹ mod n, n − a⁻¹ mod n}`, sorted and deduplicated.
    pub fn equivalence_class(&self) -> Vec<i64> {
        let inv = self.inverse_of_a();
        let class: BTreeSet<i64> = [self.a, self.n - self.a, inv, self.n - inv].into_iter().collect();
        class.into_iter().collect()
    }

    /// Smallest member of the equivalence class; a deterministic dedup key.
    pub fn canonical_representative(&self) -> i64 {
        self.equivalence_class()[0]
    }

    fn inverse_of_a(&self) -> i64 {
        let (_, x, _) = egcd(self.a, self.n).expect("a > 0");
        x.rem_euclid(self.n)
    }

    /// The `n − 1` interior points, one per row `y = k`, at `x = ⌊k·a/n⌋ + 1`.
    pub fn interior_points(&self) -> Vec<LatticePoint> {
        let (a, n) = (self.a as i128, self.n as i128);
        (1..n).map(|k| LatticePoint::new(((k * a) / n + 1) as i64, k as i64)).collect()
    }

    /// The point reflection `p ↦ (a+1, n) − p`, an involution of `P(a, n)`.
    pub fn s_map(&self) -> AffineUnimodularMap {
        AffineUnimodularMap::new([[-1, 0], [0, -1]], LatticePoint::new(self.a + 1, self.n)).expect("det 1")
    }

    /// Lowest and highest interior point of each column `x = k`, `k = 1..=a`.
    pub fn column_extremes(&self) -> Vec<ColumnExtremes> {
        let (a, n) = (self.a as i128, self.n as i128);
        (1..=a)
            .map(|k| {
                // ⌈(k−1)n/a⌉; (k−1)n is a multiple of a only when k = 1
                let low = if k == 1 { 1 } else { ((k - 1) * n + a - 1) / a };
                let high = if k == a { n - 1 } else { (k * n) / a };
                ColumnExtremes {
                    k: k as i64,
                    low: LatticePoint::new(k as i64, low as i64),
                    high: LatticePoint::new(k as i64, high as i64),
                }
            })
            .collect()
    }
}

/// `L(S_k)` and `H(S_k)`: the extreme interior points of column `x = k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ColumnExtremes {
    pub k: i64,
    pub low: LatticePoint,
    pub high: LatticePoint,
}
