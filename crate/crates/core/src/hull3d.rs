//! Clean parallelepipeds `P(a, b, c)` spanned by `(1,0,0)`, `(0,1,0)` and
//! `(a,b,c)`, and the tetrahedron `T(a, b, c)` on the same three edges.
//!
//! When the tetrahedron is empty, every interior lattice point of the
//! parallelepiped lies on one lattice plane, and the interior hull is a
//! planar `P(x, c)⁽¹⁾` in disguise.

use std::fmt;

use crate::error::{domain, Error, Result};
use crate::lattice::{gcd, LatticePoint};
use crate::parallelogram::CanonicalParallelogram;

/// Largest `c` accepted by the brute-force enumerations.
pub const BRUTE_FORCE_MAX_C: i64 = 500;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point3 {
    pub x: i64,
    pub y: i64,
    pub z: i64,
}

impl Point3 {
    pub const fn new(x: i64, y: i64, z: i64) -> Self {
        Self { x, y, z }
    }

    fn sub(self, o: Self) -> [i128; 3] {
        [(self.x - o.x) as i128, (self.y - o.y) as i128, (self.z - o.z) as i128]
    }
}

impl fmt::Display for Point3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.x, self.y, self.z)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Parallelepiped3 {
    a: i64,
    b: i64,
    c: i64,
}

impl Parallelepiped3 {
    /// Requires `1 ≤ a, b < c` and `gcd(a, c) = gcd(b, c) = 1`.
    pub fn new(a: i64, b: i64, c: i64) -> Result<Self> {
        if !(1 <= a && a < c && 1 <= b && b < c) {
            return Err(domain(format!("need 1 ≤ a, b < c, got ({a}, {b}, {c})")));
        }
        if gcd(a, c) != 1 || gcd(b, c) != 1 {
            return Err(domain(format!("need gcd(a, c) = gcd(b, c) = 1, got ({a}, {b}, {c})")));
        }
        Ok(Self { a, b, c })
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn c(&self) -> i64 {
        self.c
    }

    pub fn volume(&self) -> i64 {
        self.c
    }

    /// `d = (1 − a − b) mod c`, the least non-negative residue.
    pub fn white_d(&self) -> i64 {
        (1 - self.a - self.b).rem_euclid(self.c)
    }

    fn check_budget(&self) -> Result<()> {
        if self.c > BRUTE_FORCE_MAX_C {
            return Err(Error::Budget(format!("c = {} exceeds {BRUTE_FORCE_MAX_C}", self.c)));
        }
        Ok(())
    }

    /// Scaled barycentric coordinates `(c·t1, c·t2, c·t3)` of `p` in the
    /// basis `(1,0,0), (0,1,0), (a,b,c)`.
    fn scaled_coords(&self, p: Point3) -> (i64, i64, i64) {
        (self.c * p.x - self.a * p.z, self.c * p.y - self.b * p.z, p.z)
    }

    /// Integer `x` range (inclusive) with `lo ≤ c·x − k·z ≤ hi`.
    fn axis_range(&self, k: i64, z: i64, lo: i64, hi: i64) -> std::ops::RangeInclusive<i64> {
        let c = self.c;
        let first = (lo + k * z + c - 1).div_euclid(c);
        let last = (hi + k * z).div_euclid(c);
        first..=last
    }
}

/// `a = 1 or b = 1 or (1 − a − b) mod c = 1`.
pub fn white_criterion(p: Parallelepiped3) -> bool {
    p.a == 1 || p.b == 1 || p.white_d() == 1
}

/// Brute force: does `T(a, b, c)` contain a lattice point besides its four
/// vertices? Every layer `z = 0..=c` is scanned over the integer box that
/// can satisfy the scaled inequalities.
pub fn tetra_is_empty(p: Parallelepiped3) -> Result<bool> {
    p.check_budget()?;
    let c = p.c;
    let vertices = [Point3::new(0, 0, 0), Point3::new(1, 0, 0), Point3::new(0, 1, 0), Point3::new(p.a, p.b, c)];
    for z in 0..=c {
        for x in p.axis_range(p.a, z, 0, c) {
            for y in p.axis_range(p.b, z, 0, c) {
                let q = Point3::new(x, y, z);
                let (t1, t2, t3) = p.scaled_coords(q);
                let inside = t1 >= 0 && t2 >= 0 && t3 >= 0 && t1 + t2 + t3 <= c;
                if inside && !vertices.contains(&q) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Lattice points strictly inside `P(a, b, c)`, sorted by `z`.
pub fn interior_points_3d(p: Parallelepiped3) -> Result<Vec<Point3>> {
    p.check_budget()?;
    let c = p.c;
    let mut out = Vec::new();
    for z in 1..c {
        for x in p.axis_range(p.a, z, 1, c - 1) {
            for y in p.axis_range(p.b, z, 1, c - 1) {
                out.push(Point3::new(x, y, z));
            }
        }
    }
    Ok(out)
}

/// True when all points lie on a single plane (exact rank test).
pub fn is_coplanar(points: &[Point3]) -> bool {
    let Some(&origin) = points.first() else { return true };
    let diffs: Vec<[i128; 3]> = points.iter().map(|&q| q.sub(origin)).collect();
    let cross =
        |u: [i128; 3], v: [i128; 3]| [u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]];
    let mut normal = None;
    'outer: for (i, &u) in diffs.iter().enumerate() {
        for &v in &diffs[i + 1..] {
            let nrm = cross(u, v);
            if nrm != [0, 0, 0] {
                normal = Some(nrm);
                break 'outer;
            }
        }
    }
    match normal {
        None => true,
        Some(nrm) => diffs.iter().all(|d| d[0] * nrm[0] + d[1] * nrm[1] + d[2] * nrm[2] == 0),
    }
}

/// An affine map `p ↦ M·p + t` of `Z³` with `det M = ±1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AffineUnimodularMap3 {
    m: [[i64; 3]; 3],
    t: Point3,
}

impl AffineUnimodularMap3 {
    pub fn new(m: [[i64; 3]; 3], t: Point3) -> Result<Self> {
        let det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        if det.abs() != 1 {
            return Err(domain(format!("matrix {m:?} has determinant {det}, not ±1")));
        }
        Ok(Self { m, t })
    }

    pub fn matrix(&self) -> [[i64; 3]; 3] {
        self.m
    }

    pub fn apply(&self, p: Point3) -> Point3 {
        let row = |r: [i64; 3]| r[0] * p.x + r[1] * p.y + r[2] * p.z;
        Point3::new(row(self.m[0]) + self.t.x, row(self.m[1]) + self.t.y, row(self.m[2]) + self.t.z)
    }
}

impl fmt::Display for AffineUnimodularMap3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.m.iter().map(|r| format!("[{},{},{}]", r[0], r[1], r[2])).collect();
        write!(f, "[{}] + {}", rows.join(","), self.t)
    }
}

/// Which disjunct of the emptiness criterion produced the reduction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReductionCase {
    AIsOne,
    BIsOne,
    DIsOne,
}

/// Identification of the interior points of `P(a, b, c)` with those of a
/// planar `P(x, c)`: `map` sends each interior point to `(1, X, Y)` where
/// `(X, Y)` is an interior point of `P(x, c)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarReduction {
    pub x: i64,
    pub c: i64,
    pub case: ReductionCase,
    pub map: AffineUnimodularMap3,
}

impl PlanarReduction {
    pub fn planar(&self) -> CanonicalParallelogram {
        CanonicalParallelogram::new(self.x, self.c).expect("validated on construction")
    }

    /// Image of a 3D interior point in the plane of `P(x, c)`.
    pub fn project(&self, p: Point3) -> LatticePoint {
        let q = self.map.apply(p);
        LatticePoint::new(q.y, q.z)
    }
}

/// Maps `P(a, b, c)` onto `P(1, x, c)` so its interior points land on the
/// plane `X = 1`:
///
/// - `a = 1`: identity, `x = b`;
/// - `b = 1`: swap the first two coordinates, `x = a`;
/// - `(1 − a − b) mod c = 1`: here `a + b = c` and every interior point
///   satisfies `x + y − z = 1`, so the map `(x, y, z) ↦ (x + y − z, y, z)`
///   works with `x = b`.
///
/// The bijection onto the interior points of `P(x, c)` is checked before
/// returning.
pub fn reduce_hull_to_planar(p: Parallelepiped3) -> Result<PlanarReduction> {
    let (case, x, m) = if p.a == 1 {
        (ReductionCase::AIsOne, p.b, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    } else if p.b == 1 {
        (ReductionCase::BIsOne, p.a, [[0, 1, 0], [1, 0, 0], [0, 0, 1]])
    } else if p.white_d() == 1 {
        (ReductionCase::DIsOne, p.b, [[1, 1, -1], [0, 1, 0], [0, 0, 1]])
    } else {
        return Err(domain(format!("T({}, {}, {}) fails the emptiness criterion", p.a, p.b, p.c)));
    };
    let map = AffineUnimodularMap3::new(m, Point3::default())?;
    let reduction = PlanarReduction { x, c: p.c, case, map };

    let planar = CanonicalParallelogram::new(x, p.c)?;
    let mut images = Vec::new();
    for q in interior_points_3d(p)? {
        let r = map.apply(q);
        if r.x != 1 {
            return Err(Error::Consistency(format!("{q} maps to {r}, off the plane X = 1")));
        }
        images.push(LatticePoint::new(r.y, r.z));
    }
    images.sort_unstable();
    let mut expected = planar.interior_points();
    expected.sort_unstable();
    if images != expected {
        return Err(Error::Consistency(format!(
            "interior points of P({}, {}, {}) do not match P({x}, {})",
            p.a, p.b, p.c, p.c
        )));
    }
    Ok(reduction)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hull::hull_from_cf;
    use crate::lattice::convex_hull;

    fn pp(a: i64, b: i64, c: i64) -> Parallelepiped3 {
        Parallelepiped3::new(a, b, c).unwrap()
    }

    #[test]
    fn validation() {
        assert!(Parallelepiped3::new(0, 1, 5).is_err());
        assert!(Parallelepiped3::new(2, 1, 4).is_err());
        assert!(Parallelepiped3::new(5, 1, 5).is_err());
        assert_eq!(pp(3, 2, 7).volume(), 7);
    }

    #[test]
    fn criterion_examples() {
        assert!(white_criterion(pp(1, 2, 5)));
        assert!(!white_criterion(pp(3, 2, 7)));
        assert_eq!(pp(3, 2, 7).white_d(), 3);
        assert!(white_criterion(pp(2, 5, 7)));
    }

    #[test]
    fn emptiness_examples() {
        assert!(tetra_is_empty(pp(1, 2, 5)).unwrap());
        assert!(!tetra_is_empty(pp(3, 2, 7)).unwrap());
        assert!(tetra_is_empty(pp(1, 1, 2)).unwrap());
        assert!(matches!(tetra_is_empty(pp(1, 1, 501)), Err(Error::Budget(_))));
    }

    #[test]
    fn interior_examples() {
        let pts = interior_points_3d(pp(1, 2, 5)).unwrap();
        assert_eq!(pts.len(), 4);
        assert!(pts.iter().all(|q| q.x == 1));
        assert_eq!(interior_points_3d(pp(1, 1, 2)).unwrap(), vec![Point3::new(1, 1, 1)]);
        let pts = interior_points_3d(pp(3, 2, 7)).unwrap();
        assert_eq!(pts.len(), 6);
        assert!(!is_coplanar(&pts));
    }

    #[test]
    fn reduction_examples() {
        let r = reduce_hull_to_planar(pp(1, 2, 5)).unwrap();
        assert_eq!(r.x, 2);
        let images: Vec<_> = interior_points_3d(pp(1, 2, 5)).unwrap().into_iter().map(|q| r.project(q)).collect();
        assert_eq!(convex_hull(&images), hull_from_cf(r.planar()).unwrap().shape);

        let r = reduce_hull_to_planar(pp(2, 1, 5)).unwrap();
        assert_eq!((r.x, r.case), (2, ReductionCase::BIsOne));

        let r = reduce_hull_to_planar(pp(2, 5, 7)).unwrap();
        assert_eq!(r.case, ReductionCase::DIsOne);
        assert_eq!(gcd(r.x, 7), 1);

        assert!(matches!(reduce_hull_to_planar(pp(3, 2, 7)), Err(Error::Domain(_))));
    }

    #[test]
    fn coplanarity_edge_cases() {
        assert!(is_coplanar(&[]));
        assert!(is_coplanar(&[Point3::new(1, 2, 3), Point3::new(2, 4, 6), Point3::new(3, 6, 9)]));
    }
}
