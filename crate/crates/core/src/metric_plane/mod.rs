//! Geometric primitives shared by the Euclidean and the hyperbolic plane.
//!
//! Hyperbolic points live on the hyperboloid internally. Poincaré-disk
//! coordinates are the interchange chart, and Klein coordinates are the
//! "linear chart" in which geodesics are straight chords, so intersection and
//! convexity predicates reuse the planar routines in [`planar`].

mod geodesic;
mod hypercycle;
mod isometry;
pub mod minkowski;
pub mod planar;
mod predicates;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use minkowski::Vec3;
use planar::Vec2;

pub use geodesic::{
    orthogonal_project, ray_segment_intersects, segment_intersection, Geodesic, Ray, RaySense,
    Segment, SegmentIntersection,
};
pub use hypercycle::{hypercycle_distance_monotone_check, hypercycle_orthogonal_through, Hypercycle};
pub use isometry::Isometry;
pub use predicates::{angle_at, bisector_separates, in_convex_hull, Side};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Metric {
    Euclidean,
    Hyperbolic,
}

impl Metric {
    pub fn name(self) -> &'static str {
        match self {
            Metric::Euclidean => "euclidean",
            Metric::Hyperbolic => "hyperbolic",
        }
    }
}

impl std::fmt::Display for Metric {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
enum Repr {
    Plane(Vec2),
    Hyperboloid(Vec3),
}

/// A point of `E²` or `H²`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Point(Repr);

impl Point {
    pub fn euclidean(x: f64, y: f64) -> Self {
        Point(Repr::Plane([x, y]))
    }

    /// Hyperbolic point from Poincaré-disk coordinates (`x² + y² < 1`).
    pub fn poincare(x: f64, y: f64) -> Result<Self> {
        let s = x * x + y * y;
        if !(s < 1.0) {
            return Err(Error::OutsideModel(x, y));
        }
        let k = 2.0 / (1.0 - s);
        Ok(Self::from_spatial(x * k, y * k))
    }

    /// Hyperbolic point from Klein coordinates.
    pub fn klein(x: f64, y: f64) -> Result<Self> {
        let s = x * x + y * y;
        if !(s < 1.0) {
            return Err(Error::OutsideModel(x, y));
        }
        let k = 1.0 / (1.0 - s).sqrt();
        Ok(Self::from_spatial(x * k, y * k))
    }

    /// Hyperbolic point from the spatial part `(x1, x2)` of its hyperboloid coordinates.
    pub fn from_spatial(x1: f64, x2: f64) -> Self {
        Point(Repr::Hyperboloid(minkowski::lift(x1, x2)))
    }

    pub(crate) fn from_hyperboloid(v: Vec3) -> Self {
        Self::from_spatial(v[1], v[2])
    }

    /// Point from interchange-chart coordinates (Cartesian or Poincaré).
    pub fn from_chart(metric: Metric, c: Vec2) -> Result<Self> {
        match metric {
            Metric::Euclidean => Ok(Self::euclidean(c[0], c[1])),
            Metric::Hyperbolic => Self::poincare(c[0], c[1]),
        }
    }

    /// Point from linear-chart coordinates (Cartesian or Klein).
    pub fn from_linear(metric: Metric, c: Vec2) -> Result<Self> {
        match metric {
            Metric::Euclidean => Ok(Self::euclidean(c[0], c[1])),
            Metric::Hyperbolic => Self::klein(c[0], c[1]),
        }
    }

    pub fn origin(metric: Metric) -> Self {
        match metric {
            Metric::Euclidean => Self::euclidean(0.0, 0.0),
            Metric::Hyperbolic => Point(Repr::Hyperboloid([1.0, 0.0, 0.0])),
        }
    }

    pub fn metric(&self) -> Metric {
        match self.0 {
            Repr::Plane(_) => Metric::Euclidean,
            Repr::Hyperboloid(_) => Metric::Hyperbolic,
        }
    }

    /// Interchange-chart coordinates: Cartesian, or Poincaré disk.
    pub fn chart(&self) -> Vec2 {
        match self.0 {
            Repr::Plane(p) => p,
            Repr::Hyperboloid(h) => [h[1] / (1.0 + h[0]), h[2] / (1.0 + h[0])],
        }
    }

    /// Linear-chart coordinates: Cartesian, or Klein disk.
    pub fn linear(&self) -> Vec2 {
        match self.0 {
            Repr::Plane(p) => p,
            Repr::Hyperboloid(h) => [h[1] / h[0], h[2] / h[0]],
        }
    }

    /// Hyperboloid coordinates, `None` for Euclidean points.
    pub fn hyperboloid(&self) -> Option<Vec3> {
        match self.0 {
            Repr::Plane(_) => None,
            Repr::Hyperboloid(h) => Some(h),
        }
    }

    /// Distance to `other` in the shared metric.
    pub fn distance(&self, other: &Point) -> Result<f64> {
        if self.metric() != other.metric() {
            return Err(Error::MetricMismatch);
        }
        Ok(dist(self, other))
    }
}

impl Serialize for Point {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.chart().serialize(s)
    }
}

/// Distance between points of a shared metric.
pub fn distance(p: &Point, q: &Point) -> Result<f64> {
    p.distance(q)
}

/// Unchecked distance; `NaN` on mixed metrics.
#[inline]
pub(crate) fn dist(p: &Point, q: &Point) -> f64 {
    match (p.0, q.0) {
        (Repr::Plane(a), Repr::Plane(b)) => planar::norm(planar::sub(a, b)),
        (Repr::Hyperboloid(a), Repr::Hyperboloid(b)) => minkowski::distance(a, b),
        _ => f64::NAN,
    }
}

pub(crate) fn same_metric(points: &[&Point]) -> Result<Metric> {
    let m = points[0].metric();
    if points.iter().any(|p| p.metric() != m) {
        return Err(Error::MetricMismatch);
    }
    Ok(m)
}

/// Unit tangent vector at a point. Euclidean tangents use the first two slots.
#[derive(Clone, Copy, Debug, PartialEq)]
pub(crate) struct Tangent(pub(crate) Vec3);

/// Unit tangent at `from` pointing along the geodesic toward `to`.
pub(crate) fn unit_tangent(from: &Point, to: &Point) -> Option<Tangent> {
    match (from.0, to.0) {
        (Repr::Plane(a), Repr::Plane(b)) => {
            let d = planar::sub(b, a);
            let n = planar::norm(d);
            (n > 0.0).then(|| Tangent([d[0] / n, d[1] / n, 0.0]))
        }
        (Repr::Hyperboloid(p), Repr::Hyperboloid(q)) => {
            let w = minkowski::add(q, minkowski::scale(p, minkowski::mdot(q, p)));
            minkowski::normalize_spacelike(w).map(Tangent)
        }
        _ => None,
    }
}

/// Point at arc length `s` along the geodesic leaving `origin` with unit tangent `dir`.
pub(crate) fn exp_map(origin: &Point, dir: Tangent, s: f64) -> Point {
    match origin.0 {
        Repr::Plane(a) => Point::euclidean(a[0] + s * dir.0[0], a[1] + s * dir.0[1]),
        Repr::Hyperboloid(p) => Point::from_hyperboloid(minkowski::add(
            minkowski::scale(p, s.cosh()),
            minkowski::scale(dir.0, s.sinh()),
        )),
    }
}

/// Tangent at `at` orthogonal to `dir`, rotated a quarter turn counterclockwise.
pub(crate) fn quarter_turn(at: &Point, dir: Tangent) -> Tangent {
    match at.0 {
        Repr::Plane(_) => Tangent([-dir.0[1], dir.0[0], 0.0]),
        Repr::Hyperboloid(p) => {
            let n = minkowski::lcross(p, dir.0);
            Tangent(minkowski::normalize_spacelike(n).unwrap_or(n))
        }
    }
}

/// Point a fraction `lambda` of the way along the geodesic segment `[u, v]`.
pub(crate) fn geodesic_point(u: &Point, v: &Point, lambda: f64) -> Point {
    match (u.0, v.0) {
        (Repr::Plane(a), Repr::Plane(b)) => {
            let p = planar::lerp(a, b, lambda);
            Point::euclidean(p[0], p[1])
        }
        (Repr::Hyperboloid(a), Repr::Hyperboloid(b)) => {
            let d = minkowski::distance(a, b);
            if d == 0.0 {
                return *u;
            }
            let sd = d.sinh();
            let wa = ((1.0 - lambda) * d).sinh() / sd;
            let wb = (lambda * d).sinh() / sd;
            Point::from_hyperboloid(minkowski::add(
                minkowski::scale(a, wa),
                minkowski::scale(b, wb),
            ))
        }
        _ => *u,
    }
}
