//! Iterated interior hulls of P(a, n), and of an arbitrary lattice polygon.

use interior_hull::lattice::{onion_levels, shoelace_area2};
use interior_hull::{CanonicalParallelogram, HullShape, LatticePoint, LatticePolygon};

fn show(levels: &[HullShape]) {
    for (i, level) in levels.iter().enumerate() {
        match level {
            HullShape::Polygon(poly) => {
                println!("  level {}: {} vertices, area2 {}", i + 1, poly.len(), shoelace_area2(poly).unwrap_or(0))
            }
            other => println!("  level {}: {}", i + 1, other.kind_name()),
        }
    }
}

fn main() -> interior_hull::Result<()> {
    let p = CanonicalParallelogram::new(89, 233)?;
    println!("P(89,233):");
    show(&onion_levels(&p.outline()));

    let pts = [(0, 0), (20, 0), (20, 3), (3, 3), (3, 20), (0, 20)];
    let l_shape = LatticePolygon::new(pts.iter().map(|&(x, y)| LatticePoint::new(x, y)).collect())?;
    println!("L-shaped hexagon:");
    show(&onion_levels(&l_shape));
    Ok(())
}
