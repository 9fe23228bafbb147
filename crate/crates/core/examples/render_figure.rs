//! Writes the SVG figure and JSON summary of P(a, n).
//!
//! cargo run --example render_figure -- 11 29 figure.svg

use interior_hull::hull::hull_from_cf;
use interior_hull::render::{emit_json, render_svg, RenderSpec};
use interior_hull::CanonicalParallelogram;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let a = args.first().and_then(|s| s.parse().ok()).unwrap_or(11);
    let n = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(29);
    let out = args.get(2).cloned().unwrap_or_else(|| format!("P_{a}_{n}.svg"));

    let p = CanonicalParallelogram::new(a, n)?;
    let mut spec = RenderSpec::new(p);
    spec.scale = 30;
    std::fs::write(&out, render_svg(&spec)?)?;
    println!("wrote {out}");
    println!("{}", emit_json(&hull_from_cf(p)?));
    Ok(())
}
