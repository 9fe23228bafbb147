//! Exact 2D lattice primitives.
//!
//! Everything here works on `i64` coordinates with checked arithmetic.
//! Orientation predicates widen to `i128`, which is exact for every point
//! whose coordinates stay below `2^62` in magnitude.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::ser::{Serialize, SerializeTuple, Serializer};

use crate::error::{domain, Error, Result};

/// Largest coordinate magnitude accepted by the parallelogram routines.
pub const MAX_COORD: i64 = 1 << 31;

/// A point of `Z²`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint {
    pub x: i64,
    pub y: i64,
}

impl LatticePoint {
    pub const ORIGIN: LatticePoint = LatticePoint { x: 0, y: 0 };

    pub const fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }

    pub fn checked_add(self, rhs: Self) -> Result<Self> {
        Ok(Self {
            x: self.x.checked_add(rhs.x).ok_or(Error::Overflow("point add"))?,
            y: self.y.checked_add(rhs.y).ok_or(Error::Overflow("point add"))?,
        })
    }

    pub fn checked_sub(self, rhs: Self) -> Result<Self> {
        Ok(Self {
            x: self.x.checked_sub(rhs.x).ok_or(Error::Overflow("point sub"))?,
            y: self.y.checked_sub(rhs.y).ok_or(Error::Overflow("point sub"))?,
        })
    }

    pub fn checked_scale(self, k: i64) -> Result<Self> {
        Ok(Self {
            x: self.x.checked_mul(k).ok_or(Error::Overflow("point scale"))?,
            y: self.y.checked_mul(k).ok_or(Error::Overflow("point scale"))?,
        })
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl From<(i64, i64)> for LatticePoint {
    fn from((x, y): (i64, i64)) -> Self {
        Self { x, y }
    }
}

// The operator impls panic on overflow in every build profile; use the
// `checked_*` methods where inputs are not already bounded.
impl Add for LatticePoint {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.checked_add(rhs).expect("lattice point overflow")
    }
}

impl Sub for LatticePoint {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.checked_sub(rhs).expect("lattice point overflow")
    }
}

impl Neg for LatticePoint {
    type Output = Self;
    fn neg(self) -> Self {
        Self::ORIGIN - self
    }
}

/// Serialized as a two-element array `[x, y]`.
impl Serialize for LatticePoint {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut t = serializer.serialize_tuple(2)?;
        t.serialize_element(&self.x)?;
        t.serialize_element(&self.y)?;
        t.end()
    }
}

/// Extended Euclid: returns `(g, x, y)` with `g = gcd(a, b) > 0` and
/// `a·x + b·y = g`.
pub fn egcd(a: i64, b: i64) -> Result<(i64, i64, i64)> {
    if a == 0 && b == 0 {
        return Err(domain("egcd(0, 0) is undefined"));
    }
    let (mut r0, mut r1) = (a as i128, b as i128);
    let (mut s0, mut s1) = (1i128, 0i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (r0, s0, t0) = (-r0, -s0, -t0);
    }
    let cast = |v: i128| i64::try_from(v).map_err(|_| Error::Overflow("egcd"));
    Ok((cast(r0)?, cast(s0)?, cast(t0)?))
}

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a as i64
}

/// `u.x·v.y − u.y·v.x`.
pub fn det2(u: LatticePoint, v: LatticePoint) -> Result<i64> {
    let l = u.x.checked_mul(v.y).ok_or(Error::Overflow("det2"))?;
    let r = u.y.checked_mul(v.x).ok_or(Error::Overflow("det2"))?;
    l.checked_sub(r).ok_or(Error::Overflow("det2"))
}

/// Twice the signed area of the triangle `o, a, b`, widened to `i128`.
#[inline]
pub fn cross(o: LatticePoint, a: LatticePoint, b: LatticePoint) -> i128 {
    let (ax, ay) = (a.x as i128 - o.x as i128, a.y as i128 - o.y as i128);
    let (bx, by) = (b.x as i128 - o.x as i128, b.y as i128 - o.y as i128);
    ax * by - ay * bx
}

/// Orientation of the turn `a → b → c`: `Greater` for a left turn.
#[inline]
pub fn orient(a: LatticePoint, b: LatticePoint, c: LatticePoint) -> Ordering {
    cross(a, b, c).cmp(&0)
}

/// True when `p` lies on the closed segment `[a, b]`.
pub fn on_segment(a: LatticePoint, b: LatticePoint, p: LatticePoint) -> bool {
    cross(a, b, p) == 0 && p.x >= a.x.min(b.x) && p.x <= a.x.max(b.x) && p.y >= a.y.min(b.y) && p.y <= a.y.max(b.y)
}

/// The affine map `p ↦ M·p + t` with `det M = ±1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AffineUnimodularMap {
    m: [[i64; 2]; 2],
    t: LatticePoint,
}

impl AffineUnimodularMap {
    pub const IDENTITY: AffineUnimodularMap = AffineUnimodularMap { m: [[1, 0], [0, 1]], t: LatticePoint::ORIGIN };

    /// Builds a map from matrix rows and a translation; rejects `det M ≠ ±1`.
    pub fn new(m: [[i64; 2]; 2], t: LatticePoint) -> Result<Self> {
        let det = det2(LatticePoint::new(m[0][0], m[1][0]), LatticePoint::new(m[0][1], m[1][1]))?;
        if det != 1 && det != -1 {
            return Err(domain(format!("matrix {m:?} has determinant {det}, not ±1")));
        }
        Ok(Self { m, t })
    }

    pub fn linear(m: [[i64; 2]; 2]) -> Result<Self> {
        Self::new(m, LatticePoint::ORIGIN)
    }

    pub fn translation(t: LatticePoint) -> Self {
        Self { m: Self::IDENTITY.m, t }
    }

    pub fn matrix(&self) -> [[i64; 2]; 2] {
        self.m
    }

    pub fn translation_part(&self) -> LatticePoint {
        self.t
    }

    pub fn determinant(&self) -> i64 {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]
    }

    fn mul_point(m: &[[i64; 2]; 2], p: LatticePoint) -> Result<LatticePoint> {
        let row = |r: [i64; 2]| -> Result<i64> {
            let a = r[0].checked_mul(p.x).ok_or(Error::Overflow("apply_map"))?;
            let b = r[1].checked_mul(p.y).ok_or(Error::Overflow("apply_map"))?;
            a.checked_add(b).ok_or(Error::Overflow("apply_map"))
        };
        Ok(LatticePoint::new(row(m[0])?, row(m[1])?))
    }

    pub fn apply(&self, p: LatticePoint) -> Result<LatticePoint> {
        Self::mul_point(&self.m, p)?.checked_add(self.t)
    }

    /// `self ∘ inner`: applies `inner` first.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        let mut m = [[0i64; 2]; 2];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                let a = self.m[i][0].checked_mul(inner.m[0][j]);
                let b = self.m[i][1].checked_mul(inner.m[1][j]);
                *cell = a.zip(b).and_then(|(a, b)| a.checked_add(b)).ok_or(Error::Overflow("compose"))?;
            }
        }
        let t = self.apply(inner.t)?;
        Ok(Self { m, t })
    }

    pub fn invert(&self) -> Result<Self> {
        let d = self.determinant();
        let [[a, b], [c, e]] = self.m;
        let inv = [[d * e, -d * b], [-d * c, d * a]];
        let t = -Self::mul_point(&inv, self.t)?;
        Ok(Self { m: inv, t })
    }
}

impl fmt::Display for AffineUnimodularMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [[a, b], [c, d]] = self.m;
        write!(f, "[[{a},{b}],[{c},{d}]] + {}", self.t)
    }
}

/// A simple lattice polygon with counterclockwise vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticePolygon {
    vertices: Vec<LatticePoint>,
}

impl LatticePolygon {
    /// Validates distinctness, non-degeneracy and the absence of collinear
    /// consecutive vertices. Clockwise input is reversed. Simplicity is the
    /// caller's responsibility.
    pub fn new(mut vertices: Vec<LatticePoint>) -> Result<Self> {
        let k = vertices.len();
        if k < 3 {
            return Err(domain(format!("a polygon needs at least 3 vertices, got {k}")));
        }
        let mut sorted = vertices.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(domain("polygon vertices must be pairwise distinct"));
        }
        for i in 0..k {
            if cross(vertices[i], vertices[(i + 1) % k], vertices[(i + 2) % k]) == 0 {
                return Err(domain(format!(
                    "vertices {}, {}, {} are collinear",
                    vertices[i],
                    vertices[(i + 1) % k],
                    vertices[(i + 2) % k]
                )));
            }
        }
        let signed: i128 = (0..k).map(|i| cross(LatticePoint::ORIGIN, vertices[i], vertices[(i + 1) % k])).sum();
        match signed.cmp(&0) {
            Ordering::Greater => {}
            Ordering::Less => vertices.reverse(),
            Ordering::Equal => return Err(domain("polygon has zero signed area")),
        }
        Ok(Self { vertices })
    }

    /// Skips validation; `vertices` must already be a strictly convex
    /// counterclockwise cycle.
    pub(crate) fn from_convex_ccw(vertices: Vec<LatticePoint>) -> Self {
        debug_assert!(vertices.len() >= 3);
        Self { vertices }
    }

    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn edges(&self) -> impl Iterator<Item = (LatticePoint, LatticePoint)> + '_ {
        let k = self.vertices.len();
        (0..k).map(move |i| (self.vertices[i], self.vertices[(i + 1) % k]))
    }

    /// Rotated so the lexicographically smallest vertex comes first.
    pub fn normalized(&self) -> Self {
        let start = (0..self.vertices.len()).min_by_key(|&i| self.vertices[i]).unwrap_or(0);
        let mut vertices = self.vertices.clone();
        vertices.rotate_left(start);
        Self { vertices }
    }

    /// True when every turn is strictly to the left.
    pub fn is_strictly_convex(&self) -> bool {
        let k = self.vertices.len();
        (0..k).all(|i| cross(self.vertices[i], self.vertices[(i + 1) % k], self.vertices[(i + 2) % k]) > 0)
    }

    /// Closed containment for convex polygons.
    pub fn convex_contains(&self, p: LatticePoint) -> bool {
        self.edges().all(|(a, b)| cross(a, b, p) >= 0)
    }
}

/// Convex hull of a finite point set, classified by dimension.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum HullShape {
    Empty,
    Point(LatticePoint),
    /// Endpoints in lexicographic order.
    Segment(LatticePoint, LatticePoint),
    /// Counterclockwise, starting at the lexicographically smallest vertex.
    Polygon(LatticePolygon),
}

impl HullShape {
    pub fn kind_name(&self) -> &'static str {
        match self {
            HullShape::Empty => "empty",
            HullShape::Point(_) => "point",
            HullShape::Segment(..) => "segment",
            HullShape::Polygon(_) => "polygon",
        }
    }

    pub fn vertices(&self) -> Vec<LatticePoint> {
        match self {
            HullShape::Empty => Vec::new(),
            HullShape::Point(p) => vec![*p],
            HullShape::Segment(p, q) => vec![*p, *q],
            HullShape::Polygon(poly) => poly.vertices().to_vec(),
        }
    }

    /// Canonical form: segment endpoints sorted, polygon rotated to its
    /// smallest vertex.
    pub fn normalized(&self) -> Self {
        match self {
            HullShape::Segment(p, q) if q < p => HullShape::Segment(*q, *p),
            HullShape::Polygon(poly) => HullShape::Polygon(poly.normalized()),
            other => other.clone(),
        }
    }

    /// Closed containment test with exact predicates.
    pub fn contains(&self, p: LatticePoint) -> bool {
        match self {
            HullShape::Empty => false,
            HullShape::Point(q) => *q == p,
            HullShape::Segment(a, b) => on_segment(*a, *b, p),
            HullShape::Polygon(poly) => poly.convex_contains(p),
        }
    }
}

/// Andrew's monotone chain. Collinear points are never emitted as vertices.
pub fn convex_hull(points: &[LatticePoint]) -> HullShape {
    let mut pts = points.to_vec();
    pts.sort_unstable();
    pts.dedup();
    convex_hull_sorted(&pts)
}

/// Monotone chain over points already sorted lexicographically and deduplicated.
pub(crate) fn convex_hull_sorted(pts: &[LatticePoint]) -> HullShape {
    match pts.len() {
        0 => return HullShape::Empty,
        1 => return HullShape::Point(pts[0]),
        _ => {}
    }
    let mut hull: Vec<LatticePoint> = Vec::with_capacity(pts.len() + 1);
    for &p in pts {
        while hull.len() >= 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
            hull.pop();
        }
        hull.push(p);
    }
    let lower_len = hull.len() + 1;
    for &p in pts.iter().rev().skip(1) {
        while hull.len() >= lower_len && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
            hull.pop();
        }
        hull.push(p);
    }
    hull.pop();
    if hull.len() < 3 {
        HullShape::Segment(pts[0], pts[pts.len() - 1])
    } else {
        HullShape::Polygon(LatticePolygon::from_convex_ccw(hull))
    }
}

/// Twice the enclosed area (shoelace formula).
pub fn shoelace_area2(poly: &LatticePolygon) -> Result<i64> {
    let twice: i128 = poly.edges().map(|(a, b)| cross(LatticePoint::ORIGIN, a, b)).sum();
    i64::try_from(twice).map_err(|_| Error::Overflow("shoelace_area2"))
}

/// Number of lattice points on the boundary: the sum of edge gcds.
pub fn boundary_lattice_count(poly: &LatticePolygon) -> i64 {
    poly.edges().map(|(a, b)| gcd(b.x - a.x, b.y - a.y)).sum()
}

/// Interior lattice count `I` from Pick's relation `2A = 2I + B − 2`.
pub fn pick_interior_count(poly: &LatticePolygon) -> Result<i64> {
    let area2 = shoelace_area2(poly)?;
    let twice_i = area2 - boundary_lattice_count(poly) + 2;
    if twice_i < 0 || twice_i % 2 != 0 {
        return Err(Error::Consistency(format!(
            "Pick's relation gives 2I = {twice_i}, which is not a non-negative even integer"
        )));
    }
    Ok(twice_i / 2)
}

/// Counts lattice points in the half-open parallelogram `{s·u + t·v : 0 ≤ s, t < 1}`
/// by enumerating its bounding box.
pub fn fundamental_domain_count(u: LatticePoint, v: LatticePoint) -> Result<i64> {
    let d = det2(u, v)? as i128;
    if d == 0 {
        return Err(domain(format!("{u} and {v} are linearly dependent")));
    }
    let corners = [LatticePoint::ORIGIN, u, v, u.checked_add(v)?];
    let (x0, x1) = (corners.iter().map(|p| p.x).min().unwrap(), corners.iter().map(|p| p.x).max().unwrap());
    let (y0, y1) = (corners.iter().map(|p| p.y).min().unwrap(), corners.iter().map(|p| p.y).max().unwrap());
    let sign = d.signum();
    let mut count = 0i64;
    for x in x0..=x1 {
        for y in y0..=y1 {
            let p = LatticePoint::new(x, y);
            // s = det(p, v) / d, t = det(u, p) / d
            let s = sign * cross(LatticePoint::ORIGIN, p, v);
            let t = sign * cross(LatticePoint::ORIGIN, u, p);
            if (0..d.abs()).contains(&s) && (0..d.abs()).contains(&t) {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// Lattice points strictly inside a simple polygon, sorted lexicographically.
///
/// Each horizontal line `y = k` is intersected with the non-horizontal edges
/// using the half-open rule `min(y) ≤ k < max(y)`; crossings are exact
/// rationals and integer `x` strictly between paired crossings are kept,
/// minus any point that lies on a vertex or horizontal edge of that row.
pub fn interior_lattice_points(poly: &LatticePolygon) -> Vec<LatticePoint> {
    let vs = poly.vertices();
    let y_min = vs.iter().map(|p| p.y).min().unwrap();
    let y_max = vs.iter().map(|p| p.y).max().unwrap();
    let mut out = Vec::new();
    // crossing x = num / den with den > 0
    let mut crossings: Vec<(i128, i128)> = Vec::new();
    let mut blocked: Vec<(i64, i64)> = Vec::new();
    for y in (y_min + 1)..y_max {
        crossings.clear();
        blocked.clear();
        for (a, b) in poly.edges() {
            if a.y == b.y {
                if a.y == y {
                    blocked.push((a.x.min(b.x), a.x.max(b.x)));
                }
                continue;
            }
            if a.y == y {
                blocked.push((a.x, a.x));
            }
            let (lo, hi) = if a.y < b.y { (a, b) } else { (b, a) };
            if lo.y <= y && y < hi.y {
                let den = (hi.y - lo.y) as i128;
                let num = lo.x as i128 * den + (y - lo.y) as i128 * (hi.x - lo.x) as i128;
                crossings.push((num, den));
            }
        }
        crossings.sort_unstable_by(|p, q| (p.0 * q.1).cmp(&(q.0 * p.1)));
        for pair in crossings.chunks_exact(2) {
            let (ln, ld) = pair[0];
            let (rn, rd) = pair[1];
            // smallest integer strictly greater than ln/ld, largest strictly less than rn/rd
            let first = ln.div_euclid(ld) + 1;
            let last = -((-rn).div_euclid(rd)) - 1;
            for x in first..=last {
                let x = x as i64;
                if !blocked.iter().any(|&(b0, b1)| b0 <= x && x <= b1) {
                    out.push(LatticePoint::new(x, y));
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// Convex hull of the lattice points strictly inside `poly`.
pub fn interior_hull(poly: &LatticePolygon) -> HullShape {
    convex_hull_sorted(&interior_lattice_points(poly))
}

/// The nested chain `P⁽¹⁾ ⊇ P⁽²⁾ ⊇ …`, stopping at the first level that is
/// not a polygon. An empty level is not included.
pub fn onion_levels(poly: &LatticePolygon) -> Vec<HullShape> {
    let mut levels = Vec::new();
    let mut current = poly.clone();
    loop {
        match interior_hull(&current) {
            HullShape::Empty => break,
            HullShape::Polygon(next) => {
                levels.push(HullShape::Polygon(next.clone()));
                current = next;
            }
            terminal => {
                levels.push(terminal);
                break;
            }
        }
    }
    levels
}
