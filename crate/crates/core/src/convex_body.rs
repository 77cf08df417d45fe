//! Plane convex bodies: disks and convex polygons in either metric.
//!
//! Hyperbolic polygons are geodesically convex, with convexity and containment
//! decided in the Klein chart where their edges are straight.

use std::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::metric_plane::minkowski::{self, Mat3};
use crate::metric_plane::planar::{self, Vec2};
use crate::metric_plane::{
    dist, exp_map, geodesic_point, same_metric, Isometry, Metric, Point, Tangent,
};
use crate::tolerance;

#[derive(Clone, Debug)]
pub enum Shape {
    /// Metric ball of intrinsic radius `radius`.
    Disk { center: Point, radius: f64 },
    /// Vertices in strictly convex position, counterclockwise.
    Polygon { vertices: Vec<Point> },
}

#[derive(Clone, Debug)]
pub struct ConvexBody {
    metric: Metric,
    shape: Shape,
    /// Polygon vertices in the linear chart.
    linear: Vec<Vec2>,
    /// Prefix sums of polygon edge lengths, `cumulative[k]` = arc length to vertex `k`.
    cumulative: Vec<f64>,
    /// Hyperbolic disks: the translation taking the origin to the center.
    center_boost: Option<Mat3>,
}

impl ConvexBody {
    pub fn disk(center: Point, radius: f64) -> Result<Self> {
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(Error::InvalidBody(format!("radius must be positive and finite, got {radius}")));
        }
        let center_boost = center.hyperboloid().map(minkowski::boost_to);
        Ok(ConvexBody {
            metric: center.metric(),
            shape: Shape::Disk { center, radius },
            linear: Vec::new(),
            cumulative: Vec::new(),
            center_boost,
        })
    }

    pub fn unit_disk(metric: Metric) -> Self {
        Self::disk(Point::origin(metric), 1.0).expect("unit radius is valid")
    }

    pub fn polygon(vertices: Vec<Point>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::InvalidBody("a convex polygon needs at least 3 vertices".into()));
        }
        let refs: Vec<&Point> = vertices.iter().collect();
        let metric = same_metric(&refs)?;
        let linear: Vec<Vec2> = vertices.iter().map(Point::linear).collect();
        let k = linear.len();
        let mut turning = 0.0;
        for i in 0..k {
            let (a, b, c) = (linear[i], linear[(i + 1) % k], linear[(i + 2) % k]);
            let (u, w) = (planar::sub(b, a), planar::sub(c, b));
            let turn = planar::cross(u, w);
            if turn <= tolerance::PREDICATE {
                return Err(Error::InvalidBody(format!(
                    "vertices are not in strictly convex counterclockwise position at vertex {}",
                    (i + 1) % k
                )));
            }
            turning += turn.atan2(planar::dot(u, w));
        }
        if (turning - TAU).abs() > 1e-6 {
            return Err(Error::InvalidBody("polygon winds more than once".into()));
        }
        let mut cumulative = Vec::with_capacity(k + 1);
        let mut acc = 0.0;
        cumulative.push(0.0);
        for i in 0..k {
            acc += dist(&vertices[i], &vertices[(i + 1) % k]);
            cumulative.push(acc);
        }
        Ok(ConvexBody {
            metric,
            shape: Shape::Polygon { vertices },
            linear,
            cumulative,
            center_boost: None,
        })
    }

    /// The axis-aligned unit square `[0,1]²`.
    pub fn unit_square() -> Self {
        Self::polygon(vec![
            Point::euclidean(0.0, 0.0),
            Point::euclidean(1.0, 0.0),
            Point::euclidean(1.0, 1.0),
            Point::euclidean(0.0, 1.0),
        ])
        .expect("the unit square is convex")
    }

    pub fn metric(&self) -> Metric {
        self.metric
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    /// Closed containment. Points of another metric are never contained.
    pub fn contains(&self, p: &Point) -> bool {
        if p.metric() != self.metric {
            return false;
        }
        match &self.shape {
            Shape::Disk { center, radius } => dist(center, p) <= radius + tolerance::PREDICATE,
            Shape::Polygon { .. } => {
                let x = p.linear();
                let k = self.linear.len();
                (0..k).all(|i| {
                    planar::signed_distance(self.linear[i], self.linear[(i + 1) % k], x) >= -tolerance::PREDICATE
                })
            }
        }
    }

    /// Whether `p` is on `bd C` within the incidence tolerance.
    pub fn is_on_boundary(&self, p: &Point) -> bool {
        if p.metric() != self.metric {
            return false;
        }
        match &self.shape {
            Shape::Disk { center, radius } => (dist(center, p) - radius).abs() <= tolerance::INCIDENCE,
            Shape::Polygon { .. } => {
                let x = p.linear();
                let k = self.linear.len();
                let mut min = f64::INFINITY;
                for i in 0..k {
                    let s = planar::signed_distance(self.linear[i], self.linear[(i + 1) % k], x);
                    if s < -tolerance::INCIDENCE {
                        return false;
                    }
                    min = min.min(s);
                }
                min <= tolerance::INCIDENCE
            }
        }
    }

    /// Boundary parametrization over `t ∈ [0, 1)`, wrapping outside that range.
    ///
    /// Disks use the direction angle `2πt` at the center; polygons use arc
    /// length from vertex 0, counterclockwise.
    pub fn boundary_point(&self, t: f64) -> Point {
        let t = t.rem_euclid(1.0);
        match &self.shape {
            Shape::Disk { center, radius } => {
                let (s, c) = (TAU * t).sin_cos();
                match &self.center_boost {
                    None => {
                        let o = center.chart();
                        Point::euclidean(o[0] + radius * c, o[1] + radius * s)
                    }
                    Some(m) => {
                        let (sh, ch) = (radius.sinh(), radius.cosh());
                        Point::from_hyperboloid(minkowski::mat_vec(m, [ch, sh * c, sh * s]))
                    }
                }
            }
            Shape::Polygon { vertices } => {
                let k = vertices.len();
                let total = self.cumulative[k];
                let s = t * total;
                let i = self.cumulative[1..].partition_point(|&c| c <= s).min(k - 1);
                let len = self.cumulative[i + 1] - self.cumulative[i];
                let frac = if len > 0.0 { (s - self.cumulative[i]) / len } else { 0.0 };
                geodesic_point(&vertices[i], &vertices[(i + 1) % k], frac.clamp(0.0, 1.0))
            }
        }
    }

    /// Parameter of a boundary point; inverse of [`ConvexBody::boundary_point`].
    pub fn boundary_param(&self, p: &Point) -> f64 {
        match &self.shape {
            Shape::Disk { center, .. } => {
                let v = match &self.center_boost {
                    None => planar::sub(p.chart(), center.chart()),
                    Some(m) => {
                        let local = minkowski::mat_vec(&minkowski::lorentz_inverse(m), p.hyperboloid().unwrap_or([1.0, 0.0, 0.0]));
                        [local[1], local[2]]
                    }
                };
                (v[1].atan2(v[0]) / TAU).rem_euclid(1.0)
            }
            Shape::Polygon { vertices } => {
                let x = p.linear();
                let k = vertices.len();
                let nearest = (0..k)
                    .min_by(|&i, &j| {
                        let di = planar::signed_distance(self.linear[i], self.linear[(i + 1) % k], x).abs();
                        let dj = planar::signed_distance(self.linear[j], self.linear[(j + 1) % k], x).abs();
                        di.total_cmp(&dj)
                    })
                    .unwrap_or(0);
                let s = self.cumulative[nearest] + dist(&vertices[nearest], p);
                (s / self.cumulative[k]).rem_euclid(1.0)
            }
        }
    }

    /// Where the ray from `origin` through `anchor` leaves the body.
    pub fn ray_exit(&self, origin: &Point, anchor: &Point) -> Result<Point> {
        same_metric(&[origin, anchor])?;
        if origin.metric() != self.metric {
            return Err(Error::MetricMismatch);
        }
        if !self.contains(origin) {
            return Err(Error::OriginOutsideBody);
        }
        if dist(origin, anchor) <= tolerance::PREDICATE {
            return Err(Error::CoincidentPoints);
        }
        let (o, a) = (origin.linear(), anchor.linear());
        Ok(self.exit_linear(o, planar::sub(a, o)))
    }

    /// Exit point along a tangent direction; `origin` must be contained.
    pub(crate) fn exit_along(&self, origin: &Point, dir: Tangent) -> Point {
        let anchor = exp_map(origin, dir, 0.5);
        let (o, a) = (origin.linear(), anchor.linear());
        self.exit_linear(o, planar::sub(a, o))
    }

    /// Geodesic rays are straight in the linear chart, so the exit parameter
    /// solves a linear (polygon) or quadratic (disk) equation there.
    fn exit_linear(&self, o: Vec2, u: Vec2) -> Point {
        let s = match &self.shape {
            Shape::Polygon { .. } => {
                let k = self.linear.len();
                let mut s = f64::INFINITY;
                for i in 0..k {
                    let (a, b) = (self.linear[i], self.linear[(i + 1) % k]);
                    let r = planar::sub(b, a);
                    let rate = planar::cross(r, u);
                    if rate < 0.0 {
                        s = s.min(planar::cross(r, planar::sub(o, a)) / -rate);
                    }
                }
                s
            }
            Shape::Disk { center, radius } => match center.hyperboloid() {
                None => {
                    let d = planar::sub(o, center.chart());
                    largest_root(-planar::dot(u, u), -2.0 * planar::dot(d, u), radius * radius - planar::dot(d, d))
                }
                Some(c) => {
                    // (c0 − k·c)² ≤ cosh²r (1 − |k|²) with k = o + s·u
                    let ch2 = radius.cosh().powi(2);
                    let cs = [c[1], c[2]];
                    let a0 = c[0] - planar::dot(o, cs);
                    let b0 = planar::dot(u, cs);
                    largest_root(
                        -(ch2 * planar::dot(u, u) + b0 * b0),
                        -2.0 * ch2 * planar::dot(o, u) + 2.0 * a0 * b0,
                        ch2 * (1.0 - planar::dot(o, o)) - a0 * a0,
                    )
                }
            },
        };
        let s = if s.is_finite() { s.max(0.0) } else { 0.0 };
        Point::from_linear(self.metric, planar::add(o, planar::scale(u, s)))
            .unwrap_or_else(|_| Point::from_linear(self.metric, o).expect("origin is a valid chart point"))
    }

    pub fn diameter(&self) -> f64 {
        match &self.shape {
            Shape::Disk { radius, .. } => 2.0 * radius,
            Shape::Polygon { .. } => {
                let (a, b) = self.diameter_pair();
                dist(&a, &b)
            }
        }
    }

    /// A pair of points realizing the diameter; the first pair found on ties.
    pub fn diameter_pair(&self) -> (Point, Point) {
        match &self.shape {
            Shape::Disk { .. } => (self.boundary_point(0.0), self.boundary_point(0.5)),
            Shape::Polygon { vertices } => {
                let mut best = (0, 1, -1.0);
                for i in 0..vertices.len() {
                    for j in i + 1..vertices.len() {
                        let d = dist(&vertices[i], &vertices[j]);
                        if d > best.2 {
                            best = (i, j, d);
                        }
                    }
                }
                (vertices[best.0], vertices[best.1])
            }
        }
    }

    /// Fixed interior reference point: the disk center or the vertex centroid
    /// in the linear chart.
    pub fn interior_point(&self) -> Point {
        match &self.shape {
            Shape::Disk { center, .. } => *center,
            Shape::Polygon { .. } => {
                let k = self.linear.len() as f64;
                let sum = self.linear.iter().fold([0.0, 0.0], |acc, &v| planar::add(acc, v));
                Point::from_linear(self.metric, planar::scale(sum, 1.0 / k)).expect("centroid of a convex chart polygon")
            }
        }
    }

    /// Bounding box of the body in the linear chart.
    pub fn linear_bounds(&self) -> (Vec2, Vec2) {
        let pts: Vec<Vec2> = match &self.shape {
            Shape::Polygon { .. } => self.linear.clone(),
            Shape::Disk { .. } => (0..512).map(|i| self.boundary_point(i as f64 / 512.0).linear()).collect(),
        };
        let mut lo = [f64::INFINITY; 2];
        let mut hi = [f64::NEG_INFINITY; 2];
        for p in &pts {
            for k in 0..2 {
                lo[k] = lo[k].min(p[k]);
                hi[k] = hi[k].max(p[k]);
            }
        }
        if matches!(self.shape, Shape::Disk { .. }) {
            // sampled boundary can undercut the curved extremes slightly
            let pad = 0.01 * (hi[0] - lo[0]).max(hi[1] - lo[1]);
            lo = [lo[0] - pad, lo[1] - pad];
            hi = [hi[0] + pad, hi[1] + pad];
        }
        (lo, hi)
    }

    /// Image of the body under an isometry (or Euclidean similarity).
    pub fn transformed(&self, iso: &Isometry) -> Result<Self> {
        match &self.shape {
            Shape::Disk { center, radius } => Self::disk(iso.apply(center)?, radius * iso.scale_factor()),
            Shape::Polygon { vertices } => {
                Self::polygon(vertices.iter().map(|v| iso.apply(v)).collect::<Result<Vec<_>>>()?)
            }
        }
    }
}

/// Larger root of `a·s² + b·s + c` with `a < 0`, in the cancellation-free form.
fn largest_root(a: f64, b: f64, c: f64) -> f64 {
    let disc = (b * b - 4.0 * a * c).max(0.0).sqrt();
    if b >= 0.0 {
        // roots (−b ∓ disc)/(2a); the larger is (−b − disc)/(2a) since a < 0
        (-b - disc) / (2.0 * a)
    } else {
        2.0 * c / (-b + disc)
    }
}
