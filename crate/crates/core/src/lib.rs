//! Exact interior hulls of clean lattice parallelograms.
//!
//! A lattice parallelogram is *clean* when its only boundary lattice points
//! are its four vertices. Every clean parallelogram of area `n ≥ 2` is
//! unimodularly equivalent to the canonical
//! `P(a, n) = conv{(0,0), (1,0), (a,n), (a+1,n)}` with `0 < a < n` and
//! `gcd(a, n) = 1`. The convex hull of the lattice points strictly inside
//! `P(a, n)` (its *interior hull*) is read off directly from the convergents
//! of the continued fraction of `n / a`, and its area is
//! `n − (q_0 + … + q_m)`.
//!
//! The crate is organised bottom-up:
//!
//! - [`lattice`]: points, unimodular maps, monotone-chain hulls, Pick's
//!   theorem and a scanline interior-point enumerator used as an oracle.
//! - [`contfrac`]: continued fractions of `n / a`, convergents as lattice
//!   points, and the determinant, distance and turning identities.
//! - [`parallelogram`]: clean parallelograms, reduction to `P(a, n)`,
//!   equivalence classes, interior points and column extremes.
//! - [`hull`]: the convergent-based hull construction, closed-form counts,
//!   and the differential check against the brute-force oracle.
//! - [`hull3d`]: empty lattice tetrahedra and the coplanar interior points of
//!   the associated parallelepipeds.
//! - [`stats`]: averages over residues and CSV sweeps.
//! - [`render`]: deterministic SVG figures and JSON summaries.
//! - [`cli`]: the command-line front end used by the `interior-hull` binary.
//!
//! ```
//! use interior_hull::{hull, parallelogram::CanonicalParallelogram};
//!
//! let p = CanonicalParallelogram::new(11, 29).unwrap();
//! let result = hull::hull_from_cf(p).unwrap();
//! assert_eq!(result.vertex_count, 10);
//! assert_eq!(result.area2, 42);
//! ```

pub mod cli;
pub mod contfrac;
pub mod error;
pub mod hull;
pub mod hull3d;
pub mod lattice;
pub mod parallelogram;
pub mod render;
pub mod stats;

pub use error::{Error, Result};
pub use lattice::{AffineUnimodularMap, HullShape, LatticePoint, LatticePolygon};
pub use parallelogram::CanonicalParallelogram;
