//! Empty lattice tetrahedra: the criterion against brute force, and the
//! planar identification of the interior points when it holds.

use interior_hull::hull::hull_from_cf;
use interior_hull::hull3d::{
    interior_points_3d, reduce_hull_to_planar, tetra_is_empty, white_criterion, Parallelepiped3,
};
use interior_hull::lattice::convex_hull;
use interior_hull::LatticePoint;

fn main() -> interior_hull::Result<()> {
    let c = 7;
    for a in 1..c {
        for b in 1..c {
            let Ok(p) = Parallelepiped3::new(a, b, c) else { continue };
            let empty = tetra_is_empty(p)?;
            assert_eq!(empty, white_criterion(p));
            if !empty {
                println!("T({a},{b},{c}) contains extra lattice points");
                continue;
            }
            let r = reduce_hull_to_planar(p)?;
            let images: Vec<LatticePoint> = interior_points_3d(p)?.iter().map(|&q| r.project(q)).collect();
            let hull = convex_hull(&images);
            assert_eq!(hull.normalized(), hull_from_cf(r.planar())?.shape.normalized());
            println!("T({a},{b},{c}) empty, interior hull is that of P({},{c}) ({:?})", r.x, r.case);
        }
    }
    Ok(())
}
