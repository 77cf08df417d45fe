//! Perimeter bounds for simple polygons contained in a plane convex body.
//!
//! For odd `n` the supremal perimeter of a simple `n`-gon inside a convex body
//! `C` equals `max (n-2)·α + β + γ` over triangles inscribed in `C` with sorted
//! side lengths `α ≥ β ≥ γ`; for even `n` it is `n · diam C`. This crate works
//! in both the Euclidean and the hyperbolic plane and provides:
//!
//! - [`metric_plane`]: points, geodesics, projections and predicates for both metrics,
//! - [`convex_body`]: disks and convex polygons,
//! - [`simple_polygon`]: closed polygons, the simplicity predicate and 2-opt repair,
//! - [`triangle_bound`]: the bound itself, behind a registry of named solvers,
//! - [`certificate`]: dominating inscribed triangles for concrete polygons,
//! - [`search_harness`]: random polygons, hill climbing and near-extremal constructions,
//! - [`io`]: the JSON interchange formats.

pub mod certificate;
pub mod convex_body;
pub mod error;
pub mod io;
pub mod metric_plane;
pub mod search_harness;
pub mod simple_polygon;
pub mod tolerance;
pub mod triangle_bound;

pub use convex_body::{ConvexBody, Shape};
pub use error::{Error, Result};
pub use metric_plane::{Metric, Point};
pub use simple_polygon::ClosedPolygon;
