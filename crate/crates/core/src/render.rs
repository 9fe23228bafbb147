//! Deterministic SVG figures of `P(a, n)` and JSON summaries of hull results.
//!
//! SVG coordinates are integers: lattice point `(x, y)` is drawn at
//! `(scale·(x + margin), scale·(n + margin − y))`, so the y-axis points up
//! and no float formatting reaches the output.

use std::fmt::Write as _;

use serde::Serialize;

use crate::contfrac::{cf_expand, convergents};
use crate::error::Result;
use crate::hull::{hull_from_cf, HullResult};
use crate::lattice::{HullShape, LatticePoint};
use crate::parallelogram::CanonicalParallelogram;

/// What to draw and at which size.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RenderSpec {
    pub parallelogram: CanonicalParallelogram,
    /// Pixels per lattice unit, at least 1.
    pub scale: i64,
    /// Blank border in lattice units.
    pub margin: i64,
    pub outline: bool,
    pub interior_dots: bool,
    pub hull: bool,
    pub convergent_markers: bool,
    pub gamma_markers: bool,
}

impl RenderSpec {
    pub const DEFAULT_SCALE: i64 = 40;
    pub const DEFAULT_MARGIN: i64 = 1;

    /// All layers on, default scale and margin.
    pub fn new(parallelogram: CanonicalParallelogram) -> Self {
        Self {
            parallelogram,
            scale: Self::DEFAULT_SCALE,
            margin: Self::DEFAULT_MARGIN,
            outline: true,
            interior_dots: true,
            hull: true,
            convergent_markers: true,
            gamma_markers: true,
        }
    }
}

struct Canvas {
    scale: i64,
    margin: i64,
    n: i64,
}

impl Canvas {
    fn x(&self, p: LatticePoint) -> i64 {
        self.scale * (p.x + self.margin)
    }

    fn y(&self, p: LatticePoint) -> i64 {
        self.scale * (self.n + self.margin - p.y)
    }

    fn points_attr(&self, pts: &[LatticePoint]) -> String {
        pts.iter().map(|&p| format!("{},{}", self.x(p), self.y(p))).collect::<Vec<_>>().join(" ")
    }
}

/// Renders the figure as an SVG 1.1 document. Layers are emitted in a fixed
/// order: outline, interior points, hull, convergent octagons, Γ squares.
pub fn render_svg(spec: &RenderSpec) -> Result<String> {
    let p = spec.parallelogram;
    let scale = spec.scale.max(1);
    let canvas = Canvas { scale, margin: spec.margin.max(0), n: p.n() };
    let width = scale * (p.a() + 1 + 2 * canvas.margin);
    let height = scale * (p.n() + 2 * canvas.margin);
    let result = hull_from_cf(p)?;
    let dot = (scale / 10).max(1);
    let big_dot = (scale / 5).max(2);
    let marker = (scale * 3 / 8).max(3);

    let mut svg = String::new();
    let w = &mut svg;
    writeln!(w, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        w,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    )
    .unwrap();
    writeln!(w, "<title>P({}, {}) and its interior hull</title>", p.a(), p.n()).unwrap();
    writeln!(w, r#"<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>"#).unwrap();

    if spec.outline {
        writeln!(
            w,
            r#"<polygon id="outline" points="{}" fill="none" stroke="black" stroke-width="{}"/>"#,
            canvas.points_attr(&p.vertices()),
            (scale / 20).max(1)
        )
        .unwrap();
    }

    if spec.interior_dots {
        writeln!(w, r#"<g id="interior" fill="black">"#).unwrap();
        for q in p.interior_points() {
            writeln!(w, r#"<circle cx="{}" cy="{}" r="{dot}"/>"#, canvas.x(q), canvas.y(q)).unwrap();
        }
        writeln!(w, "</g>").unwrap();
    }

    if spec.hull {
        let vertices = result.shape.vertices();
        writeln!(w, r#"<g id="hull" fill="black" stroke="black">"#).unwrap();
        let dash =
            format!(r#"fill="none" stroke-width="{}" stroke-dasharray="{},{}""#, (scale / 20).max(1), dot, 2 * dot);
        match &result.shape {
            HullShape::Polygon(_) => {
                writeln!(w, r#"<polygon points="{}" {dash}/>"#, canvas.points_attr(&vertices)).unwrap();
            }
            HullShape::Segment(..) => {
                writeln!(w, r#"<polyline points="{}" {dash}/>"#, canvas.points_attr(&vertices)).unwrap();
            }
            _ => {}
        }
        for &q in &vertices {
            writeln!(w, r#"<circle cx="{}" cy="{}" r="{big_dot}"/>"#, canvas.x(q), canvas.y(q)).unwrap();
        }
        writeln!(w, "</g>").unwrap();
    }

    if spec.convergent_markers {
        let seq = convergents(&cf_expand(p.n(), p.a())?)?;
        let s = marker * 5 / 12;
        writeln!(w, r#"<g id="convergents" fill="none" stroke="black">"#).unwrap();
        for &q in seq.convergents() {
            let (cx, cy) = (canvas.x(q), canvas.y(q));
            let corners = [
                (s, -marker),
                (marker, -s),
                (marker, s),
                (s, marker),
                (-s, marker),
                (-marker, s),
                (-marker, -s),
                (-s, -marker),
            ];
            let pts: Vec<String> = corners.iter().map(|(dx, dy)| format!("{},{}", cx + dx, cy + dy)).collect();
            writeln!(w, r#"<polygon points="{}"/>"#, pts.join(" ")).unwrap();
        }
        writeln!(w, "</g>").unwrap();
    }

    if spec.gamma_markers {
        if let Some(gamma) = &result.gamma {
            writeln!(w, r#"<g id="gamma" fill="none" stroke="black">"#).unwrap();
            for &q in &gamma.cycle {
                writeln!(
                    w,
                    r#"<rect x="{}" y="{}" width="{}" height="{}"/>"#,
                    canvas.x(q) - marker,
                    canvas.y(q) - marker,
                    2 * marker,
                    2 * marker
                )
                .unwrap();
            }
            writeln!(w, "</g>").unwrap();
        }
    }

    writeln!(w, "</svg>").unwrap();
    Ok(svg)
}

#[derive(Serialize)]
struct GammaJson<'a> {
    path1: &'a [LatticePoint],
    path2: &'a [LatticePoint],
    path3: &'a [LatticePoint],
    path4: &'a [LatticePoint],
}

#[derive(Serialize)]
struct HullJson<'a> {
    a: i64,
    n: i64,
    cf: &'a [i64],
    shape_kind: &'static str,
    vertices: Vec<LatticePoint>,
    vertex_count: i64,
    boundary_count: Option<i64>,
    area2: i64,
    gamma: Option<GammaJson<'a>>,
}

/// Compact JSON with keys in the fixed order
/// `a, n, cf, shape_kind, vertices, vertex_count, boundary_count, area2, gamma`.
pub fn emit_json(result: &HullResult) -> String {
    let doc = HullJson {
        a: result.a,
        n: result.n,
        cf: result.cf.quotients(),
        shape_kind: result.shape.kind_name(),
        vertices: result.shape.vertices(),
        vertex_count: result.vertex_count,
        boundary_count: result.boundary_count,
        area2: result.area2,
        gamma: result.gamma.as_ref().map(|g| GammaJson {
            path1: &g.path1,
            path2: &g.path2,
            path3: &g.path3,
            path4: &g.path4,
        }),
    };
    serde_json::to_string(&doc).expect("plain integers always serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(a: i64, n: i64) -> RenderSpec {
        RenderSpec::new(CanonicalParallelogram::new(a, n).unwrap())
    }

    fn count(hay: &str, needle: &str) -> usize {
        hay.matches(needle).count()
    }

    fn section<'a>(svg: &'a str, id: &str) -> &'a str {
        let start = svg.find(&format!(r#"<g id="{id}""#)).unwrap();
        let end = start + svg[start..].find("</g>").unwrap();
        &svg[start..end]
    }

    #[test]
    fn svg_layer_counts_for_11_29() {
        let svg = render_svg(&spec(11, 29)).unwrap();
        assert_eq!(count(section(&svg, "interior"), "<circle"), 28);
        assert_eq!(count(section(&svg, "hull"), "<circle"), 10);
        assert_eq!(count(section(&svg, "convergents"), "<polygon"), 5);
        assert_eq!(count(section(&svg, "gamma"), "<rect"), 10);
        assert!(svg.contains(r#"<polygon id="outline""#));
        // integer coordinates only; the first two lines carry version numbers
        assert!(svg.lines().skip(2).all(|l| !l.contains('.')));
    }

    #[test]
    fn svg_for_segment_hull() {
        let svg = render_svg(&spec(1, 3)).unwrap();
        assert_eq!(count(section(&svg, "interior"), "<circle"), 2);
        assert!(section(&svg, "hull").contains("<polyline"));
        assert!(!svg.contains(r#"id="gamma""#));
    }

    #[test]
    fn svg_is_deterministic_and_flips_y() {
        let a = render_svg(&spec(11, 29)).unwrap();
        assert_eq!(a, render_svg(&spec(11, 29)).unwrap());
        // (0,0) sits at the bottom-left corner inside the margin
        assert!(a.contains(r#"points="40,1200 80,1200 520,40 480,40""#));
    }

    #[test]
    fn layer_toggles() {
        let mut s = spec(2, 5);
        s.convergent_markers = false;
        s.gamma_markers = false;
        let svg = render_svg(&s).unwrap();
        assert!(!svg.contains("convergents") && !svg.contains(r#"id="gamma""#));
    }

    #[test]
    fn json_examples() {
        let r = hull_from_cf(CanonicalParallelogram::new(2, 5).unwrap()).unwrap();
        assert_eq!(
            emit_json(&r),
            r#"{"a":2,"n":5,"cf":[2,2],"shape_kind":"polygon","vertices":[[1,1],[2,3],[2,4],[1,2]],"vertex_count":4,"boundary_count":4,"area2":2,"gamma":{"path1":[[1,1],[2,3]],"path2":[[2,3],[2,4]],"path3":[[1,2]],"path4":[[1,2],[1,1]]}}"#
        );
        let r = hull_from_cf(CanonicalParallelogram::new(1, 2).unwrap()).unwrap();
        assert_eq!(
            emit_json(&r),
            r#"{"a":1,"n":2,"cf":[2],"shape_kind":"point","vertices":[[1,1]],"vertex_count":1,"boundary_count":null,"area2":0,"gamma":null}"#
        );
    }

    #[test]
    fn json_round_trips() {
        let r = hull_from_cf(CanonicalParallelogram::new(11, 29).unwrap()).unwrap();
        let text = emit_json(&r);
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(serde_json::to_string(&value).unwrap().len(), text.len());
        assert_eq!(value["vertex_count"], 10);
        assert_eq!(value["gamma"]["path2"], serde_json::json!([[10, 24], [11, 27], [11, 28]]));
    }
}
