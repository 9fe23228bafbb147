//! Sends a clean parallelogram to its canonical form with a unimodular map.

use interior_hull::lattice::interior_lattice_points;
use interior_hull::parallelogram::CleanParallelogram;
use interior_hull::{LatticePoint, LatticePolygon};

fn main() -> interior_hull::Result<()> {
    let p = CleanParallelogram::new(LatticePoint::new(5, -4), LatticePoint::new(3, 1), LatticePoint::new(2, 3))?;
    let (canon, map) = p.reduce_to_canonical()?;
    println!("reduces to P({}, {}) via {map}", canon.a(), canon.n());
    println!("equivalence class {:?}, representative {}", canon.equivalence_class(), canon.canonical_representative());

    for v in p.vertices()? {
        println!("  vertex {v} -> {}", map.apply(v)?);
    }
    let outline = LatticePolygon::new(p.vertices()?.to_vec())?;
    for q in interior_lattice_points(&outline) {
        println!("  interior {q} -> {}", map.apply(q)?);
    }

    let back = map.invert()?;
    println!("inverse map {back}");
    for c in canon.column_extremes() {
        println!("column {}: lowest {} highest {}", c.k, c.low, c.high);
    }
    Ok(())
}
