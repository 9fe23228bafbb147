//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 for usage or domain errors, 2 when `verify`
//! finds a mismatch.

use std::ffi::OsString;
use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::str::FromStr;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use crate::contfrac::{cf_expand, convergents};
use crate::error::Error;
use crate::hull::{hull_from_cf, verify_all_with};
use crate::hull3d::{
    interior_points_3d, is_coplanar, reduce_hull_to_planar, tetra_is_empty, white_criterion, Parallelepiped3,
};
use crate::lattice::{convex_hull, onion_levels, HullShape, LatticePoint};
use crate::parallelogram::{CanonicalParallelogram, CleanParallelogram};
use crate::render::{emit_json, render_svg, RenderSpec};
use crate::stats::write_sweep_csv;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "interior-hull", version, about = "Interior hulls of clean lattice parallelograms")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// A lattice point written as `X,Y`.
#[derive(Clone, Copy, Debug)]
struct PointArg(LatticePoint);

impl FromStr for PointArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (x, y) = s.split_once(',').ok_or_else(|| format!("expected X,Y, got {s:?}"))?;
        let parse = |t: &str| t.trim().parse::<i64>().map_err(|e| format!("{t:?}: {e}"));
        Ok(PointArg(LatticePoint::new(parse(x)?, parse(y)?)))
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Partial quotients and convergents of n/a
    Cf { n: i64, a: i64 },
    /// Interior hull of P(a, n) from its continued fraction
    Hull {
        a: i64,
        n: i64,
        /// Print the result as JSON
        #[arg(long)]
        json: bool,
        /// Write an SVG figure to PATH
        #[arg(long, value_name = "PATH")]
        svg: Option<PathBuf>,
        /// Pixels per lattice unit in the SVG
        #[arg(long, default_value_t = RenderSpec::DEFAULT_SCALE)]
        scale: i64,
    },
    /// Reduce a clean parallelogram to canonical form P(a, n)
    Reduce {
        #[arg(long, allow_hyphen_values = true)]
        u: PointArg,
        #[arg(long, allow_hyphen_values = true)]
        v: PointArg,
        #[arg(long, allow_hyphen_values = true)]
        base: Option<PointArg>,
    },
    /// Unimodular equivalence class of P(a, n)
    Class { a: i64, n: i64 },
    /// Compare the construction with brute force for every n up to MAX_N
    Verify {
        #[arg(long, value_name = "N")]
        max_n: i64,
        /// Worker threads (default: all cores)
        #[arg(long, value_name = "J")]
        jobs: Option<usize>,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Write one CSV row per coprime (a, n) in the range
    Stats {
        #[arg(long)]
        n_min: i64,
        #[arg(long)]
        n_max: i64,
        #[arg(long, value_name = "FILE")]
        out: PathBuf,
    },
    /// Empty tetrahedra and the interior of P(a, b, c)
    Hull3d {
        a: i64,
        b: i64,
        c: i64,
        /// Identify the interior hull with a planar P(x, c)
        #[arg(long)]
        reduce: bool,
    },
    /// Iterated interior hulls of P(a, n)
    Onion { a: i64, n: i64 },
}

enum Failure {
    Usage(String),
    Mismatch,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn points(pts: &[LatticePoint]) -> String {
    pts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" ")
}

fn describe(shape: &HullShape) -> String {
    match shape {
        HullShape::Empty => "empty".to_string(),
        HullShape::Point(p) => format!("point {p}"),
        HullShape::Segment(p, q) => format!("segment {p} {q}"),
        HullShape::Polygon(poly) => format!("polygon with {} vertices: {}", poly.len(), points(poly.vertices())),
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Cf { n, a } => {
            let cf = cf_expand(n, a)?;
            let seq = convergents(&cf)?;
            let q: Vec<String> = cf.quotients().iter().map(|q| q.to_string()).collect();
            writeln!(out, "{n}/{a} = [{}]", q.join(","))?;
            writeln!(out, "convergents: {}", points(seq.convergents()))?;
        }
        Command::Hull { a, n, json, svg, scale } => {
            let p = CanonicalParallelogram::new(a, n)?;
            let result = hull_from_cf(p)?;
            if let Some(path) = svg {
                let spec = RenderSpec { scale: scale.max(1), ..RenderSpec::new(p) };
                fs::write(&path, render_svg(&spec)?)?;
            }
            if json {
                writeln!(out, "{}", emit_json(&result))?;
            } else {
                let q: Vec<String> = result.cf.quotients().iter().map(|q| q.to_string()).collect();
                writeln!(out, "P({a},{n}): cf [{}], sum of quotients {}", q.join(","), result.cf.sum())?;
                writeln!(out, "hull: {}", describe(&result.shape))?;
                match result.boundary_count {
                    Some(b) => writeln!(out, "boundary lattice points: {b}")?,
                    None => writeln!(out, "boundary lattice points: n/a (degenerate)")?,
                }
                writeln!(out, "area2: {}", result.area2)?;
            }
        }
        Command::Reduce { u, v, base } => {
            let base = base.map_or(LatticePoint::ORIGIN, |b| b.0);
            let p = CleanParallelogram::new(base, u.0, v.0)?;
            let (canon, map) = p.reduce_to_canonical()?;
            writeln!(out, "a={} n={}", canon.a(), canon.n())?;
            writeln!(out, "map: {map}")?;
            writeln!(out, "canonical representative: {}", canon.canonical_representative())?;
        }
        Command::Class { a, n } => {
            let p = CanonicalParallelogram::new(a, n)?;
            let class: Vec<String> = p.equivalence_class().iter().map(|c| c.to_string()).collect();
            writeln!(out, "class: {}", class.join(" "))?;
            writeln!(out, "representative: {}", p.canonical_representative())?;
        }
        Command::Verify { max_n, jobs, inject_fault } => {
            if max_n < 2 {
                return Err(Failure::Usage(format!("--max-n must be at least 2, got {max_n}")));
            }
            let mut builder = rayon::ThreadPoolBuilder::new();
            if let Some(j) = jobs {
                builder = builder.num_threads(j.max(1));
            }
            let pool = builder.build().map_err(|e| Failure::Usage(e.to_string()))?;
            let summary = pool.install(|| verify_all_with(max_n, inject_fault));
            writeln!(
                out,
                "checked {} pairs ({} polygons) with 2 <= n <= {max_n}: {} mismatches",
                summary.pairs,
                summary.polygons,
                summary.mismatches.len()
            )?;
            for m in summary.mismatches.iter().take(10) {
                writeln!(out, "  P({},{}) {}: oracle {} vs construction {}", m.a, m.n, m.field, m.expected, m.actual)?;
            }
            if !summary.mismatches.is_empty() {
                return Err(Failure::Mismatch);
            }
        }
        Command::Stats { n_min, n_max, out: path } => {
            let file = fs::File::create(&path)?;
            let mut writer = BufWriter::new(file);
            let rows = write_sweep_csv(n_min, n_max, &mut writer)?;
            writer.flush()?;
            writeln!(out, "wrote {rows} rows to {}", path.display())?;
        }
        Command::Hull3d { a, b, c, reduce } => {
            let p = Parallelepiped3::new(a, b, c)?;
            let interior = interior_points_3d(p)?;
            writeln!(out, "P({a},{b},{c}): d = {}", p.white_d())?;
            writeln!(out, "criterion: {}", white_criterion(p))?;
            writeln!(out, "tetrahedron empty (brute force): {}", tetra_is_empty(p)?)?;
            writeln!(out, "interior points: {}, coplanar: {}", interior.len(), is_coplanar(&interior))?;
            if reduce {
                let r = reduce_hull_to_planar(p)?;
                let images: Vec<LatticePoint> = interior.iter().map(|&q| r.project(q)).collect();
                writeln!(out, "planar: P({},{}) via {:?}", r.x, r.c, r.case)?;
                writeln!(out, "map: {}", r.map)?;
                writeln!(out, "hull: {}", describe(&convex_hull(&images)))?;
            }
        }
        Command::Onion { a, n } => {
            let p = CanonicalParallelogram::new(a, n)?;
            let levels = onion_levels(&p.outline());
            if levels.is_empty() {
                writeln!(out, "no interior lattice points")?;
            }
            for (i, level) in levels.iter().enumerate() {
                writeln!(out, "level {}: {}", i + 1, describe(level))?;
            }
        }
    }
    Ok(())
}

/// Runs the CLI with explicit output streams and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(Failure::Mismatch) => EXIT_MISMATCH,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

/// Entry point for the binary: `args` includes the program name.
pub fn cli_main<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = io::stdout();
    let stderr = io::stderr();
    let code = run(args, &mut stdout.lock(), &mut stderr.lock());
    let _ = io::stdout().flush();
    code
}
