//! The interior hull of `P(a, n)` built from convergents.
//!
//! With `u_i = v_i + (1, 0)`, `E = E(m)`, `O = O(m)` and `u_m = (a+1, n)`,
//! the boundary of the hull is traced counterclockwise from `u_{-1} = (1,1)`
//! by four paths:
//!
//! ```text
//! path1: u_{-1}, u_1, u_3, …, u_O, u_m − v_E
//! path2: u_m − v_E, u_m − v_{E−2}, …, u_m − v_0, u_m − u_{-1}
//! path3: u_m − u_1, u_m − u_3, …, u_m − u_O, v_E
//! path4: v_E, v_{E−2}, …, v_0, u_{-1}
//! ```
//!
//! Paths 2 and 3 are the images of paths 4 and 1 under the point reflection
//! `p ↦ (a+1, n) − p`. When `q_0 = 1`, `v_0 = u_{-1}` and the repeated
//! vertex is collapsed. From the same data the hull has `2(m+1)` vertices
//! (`2m` when `q_0 = 1`), `2·Σq − 4` boundary lattice points and area
//! `n − Σq`.

use rayon::prelude::*;

use crate::contfrac::{
    cf_expand, convergents, last_even_before, last_odd_before, ContinuedFraction, ConvergentSequence,
};
use crate::error::{Error, Result};
use crate::lattice::{
    boundary_lattice_count, cross, interior_hull, shoelace_area2, HullShape, LatticePoint, LatticePolygon,
};
use crate::parallelogram::CanonicalParallelogram;

/// The four boundary paths and the collapsed vertex cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaPaths {
    pub path1: Vec<LatticePoint>,
    pub path2: Vec<LatticePoint>,
    pub path3: Vec<LatticePoint>,
    pub path4: Vec<LatticePoint>,
    /// Counterclockwise, starting at `(1, 1)`, without repeated points.
    pub cycle: Vec<LatticePoint>,
}

/// Dimension of the interior hull of `P(a, n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HullKind {
    Point,
    Segment,
    Polygon,
}

/// `Point` iff `n = 2`; `Segment` iff `a = 1` or `a = n − 1` (with `n ≥ 3`).
pub fn classify_degenerate(p: CanonicalParallelogram) -> HullKind {
    if p.n() == 2 {
        HullKind::Point
    } else if p.a() == 1 || p.a() == p.n() - 1 {
        HullKind::Segment
    } else {
        HullKind::Polygon
    }
}

pub fn gamma_paths(p: CanonicalParallelogram) -> Result<GammaPaths> {
    let cf = cf_expand(p.n(), p.a())?;
    let seq = convergents(&cf)?;
    gamma_from_convergents(p, &seq)
}

fn gamma_from_convergents(p: CanonicalParallelogram, seq: &ConvergentSequence) -> Result<GammaPaths> {
    if classify_degenerate(p) != HullKind::Polygon {
        return Err(Error::DegenerateHull { a: p.a(), n: p.n() });
    }
    let m = seq.m();
    let (e, o) = (last_even_before(m), last_odd_before(m));
    let um = seq.u(m);
    let odd = || (1..=o).step_by(2);
    let even_down = || (0..=e).rev().step_by(2);

    let mut path1 = vec![seq.u(-1)];
    path1.extend(odd().map(|i| seq.u(i)));
    path1.push(um - seq.v(e));

    let mut path2: Vec<_> = even_down().map(|i| um - seq.v(i)).collect();
    path2.push(um - seq.u(-1));

    let mut path3: Vec<_> = odd().map(|i| um - seq.u(i)).collect();
    path3.push(seq.v(e));

    let mut path4: Vec<_> = even_down().map(|i| seq.v(i)).collect();
    path4.push(seq.u(-1));

    let mut cycle: Vec<LatticePoint> = Vec::with_capacity(path1.len() + path2.len() + path3.len() + path4.len());
    for &q in path1.iter().chain(&path2).chain(&path3).chain(&path4) {
        if cycle.last() != Some(&q) {
            cycle.push(q);
        }
    }
    while cycle.len() > 1 && cycle.first() == cycle.last() {
        cycle.pop();
    }

    let k = cycle.len();
    let convex = k >= 3 && (0..k).all(|i| cross(cycle[i], cycle[(i + 1) % k], cycle[(i + 2) % k]) > 0);
    if !convex {
        return Err(Error::Consistency(format!(
            "vertex cycle for P({}, {}) is not strictly convex: {cycle:?}",
            p.a(),
            p.n()
        )));
    }
    Ok(GammaPaths { path1, path2, path3, path4, cycle })
}

/// `2(m+1)` vertices when `q_0 > 1`, `2m` when `q_0 = 1`.
pub fn vertex_count_formula(cf: &ContinuedFraction) -> i64 {
    let m = cf.m() as i64;
    if cf.quotients()[0] > 1 {
        2 * (m + 1)
    } else {
        2 * m
    }
}

/// `2·Σq − 4` boundary lattice points.
pub fn boundary_count_formula(cf: &ContinuedFraction) -> i64 {
    2 * cf.sum() - 4
}

/// Area `n − Σq` (not doubled).
pub fn area_formula(cf: &ContinuedFraction) -> i64 {
    cf.n() - cf.sum()
}

/// Everything known about `P(a, n)⁽¹⁾` from its continued fraction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HullResult {
    pub a: i64,
    pub n: i64,
    pub cf: ContinuedFraction,
    pub shape: HullShape,
    /// Distinct vertices of `shape`: 1 for a point, 2 for a segment.
    pub vertex_count: i64,
    /// Only defined for two-dimensional hulls.
    pub boundary_count: Option<i64>,
    /// Twice the area; zero for degenerate hulls.
    pub area2: i64,
    pub gamma: Option<GammaPaths>,
}

impl HullResult {
    pub fn kind(&self) -> HullKind {
        match self.shape {
            HullShape::Point(_) => HullKind::Point,
            HullShape::Segment(..) => HullKind::Segment,
            _ => HullKind::Polygon,
        }
    }
}

pub fn hull_from_cf(p: CanonicalParallelogram) -> Result<HullResult> {
    hull_with(p, Formulas::EXACT)
}

/// A deliberate error added to the area formula, used only to exercise the verifier.
#[derive(Clone, Copy, PartialEq, Eq)]
struct Formulas {
    area_offset: i64,
}

impl Formulas {
    const EXACT: Formulas = Formulas { area_offset: 0 };
    const FAULTY: Formulas = Formulas { area_offset: 1 };
}

fn hull_with(p: CanonicalParallelogram, formulas: Formulas) -> Result<HullResult> {
    let cf = cf_expand(p.n(), p.a())?;
    let (shape, vertex_count, boundary_count, gamma) = match classify_degenerate(p) {
        HullKind::Point => (HullShape::Point(LatticePoint::new(1, 1)), 1, None, None),
        HullKind::Segment => {
            let (lo, hi) = if p.a() == 1 {
                (LatticePoint::new(1, 1), LatticePoint::new(1, p.n() - 1))
            } else {
                (LatticePoint::new(1, 1), LatticePoint::new(p.n() - 1, p.n() - 1))
            };
            (HullShape::Segment(lo, hi), vertex_count_formula(&cf), None, None)
        }
        HullKind::Polygon => {
            let seq = convergents(&cf)?;
            let gamma = gamma_from_convergents(p, &seq)?;
            let shape = HullShape::Polygon(LatticePolygon::from_convex_ccw(gamma.cycle.clone()));
            (shape, vertex_count_formula(&cf), Some(boundary_count_formula(&cf)), Some(gamma))
        }
    };
    let area2 = 2 * (area_formula(&cf) + formulas.area_offset);
    if gamma.is_none() && area2 != 0 && formulas == Formulas::EXACT {
        return Err(Error::Consistency(format!("degenerate P({}, {}) has n − Σq = {}", p.a(), p.n(), area2 / 2)));
    }
    Ok(HullResult { a: p.a(), n: p.n(), cf, shape, vertex_count, boundary_count, area2, gamma })
}

/// The interior points closest to the left side `(0,0)–(a,n)` and to the
/// right side `(1,0)–(a+1,n)`.
///
/// For `a = 1` there is a single column and the answer is
/// `((1, n−1), (1, 1))`: the top of the column is nearest the left side.
pub fn closest_to_sides(p: CanonicalParallelogram) -> Result<(LatticePoint, LatticePoint)> {
    if p.n() < 3 {
        return Err(crate::error::domain("closest_to_sides needs n ≥ 3"));
    }
    let cf = cf_expand(p.n(), p.a())?;
    let seq = convergents(&cf)?;
    let m = seq.m();
    if m == 0 {
        return Ok((LatticePoint::new(1, p.n() - 1), LatticePoint::new(1, 1)));
    }
    let (e, o) = (last_even_before(m), last_odd_before(m));
    let um = seq.u(m);
    Ok(if o < e { (seq.v(e), um - seq.v(e)) } else { (um - seq.u(o), seq.u(o)) })
}

/// True when every boundary lattice point of the hull is a vertex.
pub fn is_hull_clean(p: CanonicalParallelogram) -> Result<bool> {
    let result = hull_from_cf(p)?;
    match &result.shape {
        HullShape::Polygon(poly) => Ok(boundary_lattice_count(poly) == poly.len() as i64),
        _ => Err(Error::DegenerateHull { a: p.a(), n: p.n() }),
    }
}

/// One disagreement between the convergent construction and brute force.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub a: i64,
    pub n: i64,
    pub field: &'static str,
    pub expected: String,
    pub actual: String,
}

/// Result of comparing one `P(a, n)` against the oracle. Empty means agreement.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OracleReport {
    pub mismatches: Vec<Mismatch>,
}

impl OracleReport {
    pub fn is_match(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Recomputes the hull by scanline enumeration of the outline's interior
/// points and compares shape, vertex count, boundary count and area.
pub fn verify_against_oracle(p: CanonicalParallelogram) -> OracleReport {
    verify_with(p, Formulas::EXACT)
}

fn verify_with(p: CanonicalParallelogram, formulas: Formulas) -> OracleReport {
    let mut report = OracleReport::default();
    let mut note = |field: &'static str, expected: String, actual: String| {
        report.mismatches.push(Mismatch { a: p.a(), n: p.n(), field, expected, actual });
    };
    let oracle = interior_hull(&p.outline()).normalized();
    let result = match hull_with(p, formulas) {
        Ok(r) => r,
        Err(e) => {
            note("construction", format!("{oracle:?}"), e.to_string());
            return report;
        }
    };
    if oracle != result.shape.normalized() {
        note("shape", format!("{oracle:?}"), format!("{:?}", result.shape));
    }
    let oracle_vertices = oracle.vertices().len() as i64;
    if oracle_vertices != result.vertex_count {
        note("vertex_count", oracle_vertices.to_string(), result.vertex_count.to_string());
    }
    let (oracle_area2, oracle_boundary) = match &oracle {
        HullShape::Polygon(poly) => (shoelace_area2(poly).unwrap_or(-1), Some(boundary_lattice_count(poly))),
        _ => (0, None),
    };
    if oracle_area2 != result.area2 {
        note("area2", oracle_area2.to_string(), result.area2.to_string());
    }
    if oracle_boundary != result.boundary_count {
        note("boundary_count", format!("{oracle_boundary:?}"), format!("{:?}", result.boundary_count));
    }
    report
}

/// Summary of an exhaustive oracle sweep.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifySummary {
    pub max_n: i64,
    pub pairs: u64,
    pub polygons: u64,
    pub mismatches: Vec<Mismatch>,
}

/// Compares every coprime `(a, n)` with `2 ≤ n ≤ max_n` against the oracle,
/// in parallel on the current rayon pool.
pub fn verify_all(max_n: i64) -> VerifySummary {
    verify_all_with(max_n, false)
}

/// As [`verify_all`], optionally with the area formula deliberately off by
/// one so that callers can check that mismatches are reported.
#[doc(hidden)]
pub fn verify_all_with(max_n: i64, inject_fault: bool) -> VerifySummary {
    let formulas = if inject_fault { Formulas::FAULTY } else { Formulas::EXACT };
    let per_n: Vec<(u64, u64, Vec<Mismatch>)> = (2..=max_n.max(1))
        .into_par_iter()
        .map(|n| {
            let (mut pairs, mut polygons, mut bad) = (0u64, 0u64, Vec::new());
            for a in 1..n {
                let Ok(p) = CanonicalParallelogram::new(a, n) else { continue };
                pairs += 1;
                if classify_degenerate(p) == HullKind::Polygon {
                    polygons += 1;
                }
                bad.extend(verify_with(p, formulas).mismatches);
            }
            (pairs, polygons, bad)
        })
        .collect();
    let mut summary = VerifySummary { max_n, ..Default::default() };
    for (pairs, polygons, bad) in per_n {
        summary.pairs += pairs;
        summary.polygons += polygons;
        summary.mismatches.extend(bad);
    }
    summary
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::orient;
    use std::cmp::Ordering;

    fn pt(x: i64, y: i64) -> LatticePoint {
        LatticePoint::new(x, y)
    }

    fn canon(a: i64, n: i64) -> CanonicalParallelogram {
        CanonicalParallelogram::new(a, n).unwrap()
    }

    fn pts(v: &[(i64, i64)]) -> Vec<LatticePoint> {
        v.iter().map(|&p| p.into()).collect()
    }

    #[test]
    fn gamma_examples() {
        let g = gamma_paths(canon(11, 29)).unwrap();
        assert_eq!(
            g.cycle,
            pts(&[(1, 1), (2, 3), (4, 8), (10, 24), (11, 27), (11, 28), (10, 26), (8, 21), (2, 5), (1, 2)])
        );
        assert_eq!(g.path1, pts(&[(1, 1), (2, 3), (4, 8), (10, 24)]));
        assert_eq!(g.path2, pts(&[(10, 24), (11, 27), (11, 28)]));
        assert_eq!(g.path3, pts(&[(10, 26), (8, 21), (2, 5)]));
        assert_eq!(g.path4, pts(&[(2, 5), (1, 2), (1, 1)]));

        assert_eq!(gamma_paths(canon(2, 5)).unwrap().cycle, pts(&[(1, 1), (2, 3), (2, 4), (1, 2)]));
        assert_eq!(gamma_paths(canon(3, 5)).unwrap().cycle, pts(&[(1, 1), (2, 2), (3, 4), (2, 3)]));
        assert_eq!(gamma_paths(canon(1, 5)), Err(Error::DegenerateHull { a: 1, n: 5 }));
    }

    #[test]
    fn degenerate_classification() {
        assert_eq!(classify_degenerate(canon(1, 2)), HullKind::Point);
        assert_eq!(classify_degenerate(canon(1, 7)), HullKind::Segment);
        assert_eq!(classify_degenerate(canon(6, 7)), HullKind::Segment);
        assert_eq!(classify_degenerate(canon(2, 5)), HullKind::Polygon);
    }

    #[test]
    fn hull_result_examples() {
        let r = hull_from_cf(canon(11, 29)).unwrap();
        assert_eq!((r.vertex_count, r.boundary_count, r.area2), (10, Some(12), 42));
        let r = hull_from_cf(canon(2, 5)).unwrap();
        assert_eq!((r.vertex_count, r.boundary_count, r.area2), (4, Some(4), 2));
        let r = hull_from_cf(canon(1, 5)).unwrap();
        assert_eq!(r.shape, HullShape::Segment(pt(1, 1), pt(1, 4)));
        assert_eq!((r.area2, r.boundary_count), (0, None));
        let r = hull_from_cf(canon(1, 2)).unwrap();
        assert_eq!((r.shape, r.vertex_count), (HullShape::Point(pt(1, 1)), 1));
        let r = hull_from_cf(canon(3, 4)).unwrap();
        assert_eq!(r.shape, HullShape::Segment(pt(1, 1), pt(3, 3)));
    }

    #[test]
    fn formula_examples() {
        let f = |n, a| {
            let cf = cf_expand(n, a).unwrap();
            (vertex_count_formula(&cf), boundary_count_formula(&cf), area_formula(&cf))
        };
        assert_eq!(f(29, 11), (10, 12, 21));
        assert_eq!(f(5, 2), (4, 4, 1));
        // 3/2 = [1, 2]: a segment; 2·Σq − 4 = 2 is meaningless here
        assert_eq!(f(3, 2), (2, 2, 0));
    }

    /// Brute-force minimum of `|n·x − a·y|` (left side) and `|n·(x−1) − a·y|`
    /// (right side) over all interior points.
    fn brute_closest(p: CanonicalParallelogram) -> (i128, i128) {
        let (a, n) = (p.a() as i128, p.n() as i128);
        let pts = p.interior_points();
        let left = pts.iter().map(|q| (n * q.x as i128 - a * q.y as i128).abs()).min().unwrap();
        let right = pts.iter().map(|q| (n * (q.x as i128 - 1) - a * q.y as i128).abs()).min().unwrap();
        (left, right)
    }

    #[test]
    fn closest_examples() {
        assert_eq!(closest_to_sides(canon(11, 29)).unwrap(), (pt(8, 21), pt(4, 8)));
        assert_eq!(closest_to_sides(canon(2, 5)).unwrap(), (pt(1, 2), pt(2, 3)));
        assert_eq!(closest_to_sides(canon(1, 3)).unwrap(), (pt(1, 2), pt(1, 1)));
        assert!(closest_to_sides(canon(1, 2)).is_err());
    }

    #[test]
    fn closest_matches_brute_force() {
        for n in 3..=150 {
            for a in 1..n {
                let Ok(p) = CanonicalParallelogram::new(a, n) else { continue };
                let (left, right) = closest_to_sides(p).unwrap();
                let (an, nn) = (a as i128, n as i128);
                let (best_l, best_r) = brute_closest(p);
                assert!(p.strictly_contains(left) && p.strictly_contains(right));
                assert_eq!((nn * left.x as i128 - an * left.y as i128).abs(), best_l, "left side of P({a},{n})");
                assert_eq!(
                    (nn * (right.x as i128 - 1) - an * right.y as i128).abs(),
                    best_r,
                    "right side of P({a},{n})"
                );
            }
        }
    }

    #[test]
    fn hull_cleanliness_examples() {
        assert!(is_hull_clean(canon(13, 21)).unwrap());
        assert!(is_hull_clean(canon(8, 21)).unwrap());
        assert!(!is_hull_clean(canon(11, 29)).unwrap());
        assert!(matches!(is_hull_clean(canon(1, 5)), Err(Error::DegenerateHull { .. })));
    }

    #[test]
    fn oracle_examples() {
        assert!(verify_against_oracle(canon(11, 29)).is_match());
        assert!(verify_against_oracle(canon(1, 2)).is_match());
        assert!(verify_against_oracle(canon(1, 9)).is_match());
        assert!(!verify_with(canon(11, 29), Formulas::FAULTY).is_match());
    }

    #[test]
    fn small_sweep_and_fault_injection() {
        let clean = verify_all(60);
        assert!(clean.mismatches.is_empty(), "{:?}", clean.mismatches.first());
        assert_eq!(clean.pairs, (2..=60).map(crate::stats::euler_phi).sum::<i64>() as u64);
        let faulty = verify_all_with(60, true);
        assert!(!faulty.mismatches.is_empty());
        assert!(faulty.mismatches.iter().all(|m| m.field == "area2"));
    }

    #[test]
    fn cycle_turns_left_everywhere() {
        let g = gamma_paths(canon(21, 55)).unwrap();
        let k = g.cycle.len();
        for i in 0..k {
            assert_eq!(orient(g.cycle[i], g.cycle[(i + 1) % k], g.cycle[(i + 2) % k]), Ordering::Greater);
        }
    }
}
