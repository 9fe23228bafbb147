//! Builds the interior hull of P(a, n) from convergents and checks it
//! against brute-force enumeration.
//!
//! cargo run --example hull_from_convergents -- 11 29

use interior_hull::hull::{
    closest_to_sides, gamma_paths, hull_from_cf, is_hull_clean, verify_against_oracle, HullKind,
};
use interior_hull::{CanonicalParallelogram, LatticePoint};

fn path(points: &[LatticePoint]) -> String {
    points.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" -> ")
}

fn main() -> interior_hull::Result<()> {
    let args: Vec<i64> = std::env::args().skip(1).filter_map(|s| s.parse().ok()).collect();
    let (a, n) = match args[..] {
        [a, n, ..] => (a, n),
        _ => (11, 29),
    };
    let p = CanonicalParallelogram::new(a, n)?;
    let result = hull_from_cf(p)?;

    println!("P({a},{n}): quotients {:?}", result.cf.quotients());
    println!("shape: {}", result.shape.kind_name());
    println!("hull: {}", path(&result.shape.vertices()));
    println!("vertices {}, area {}, boundary {:?}", result.vertex_count, result.area2 / 2, result.boundary_count);

    if result.kind() == HullKind::Polygon {
        let g = gamma_paths(p)?;
        println!("path1: {}", path(&g.path1));
        println!("path2: {}", path(&g.path2));
        println!("path3: {}", path(&g.path3));
        println!("path4: {}", path(&g.path4));
        let (left, right) = closest_to_sides(p)?;
        println!("closest to the left side {left}, to the right side {right}");
        println!("every boundary point a vertex: {}", is_hull_clean(p)?);
    }

    let report = verify_against_oracle(p);
    println!("brute force agrees: {}", report.is_match());
    Ok(())
}
