use super::minkowski::{self, Vec3};
use super::planar::{self, PlanarIntersection};
use super::{dist, exp_map, quarter_turn, same_metric, unit_tangent, Metric, Point, Repr, Tangent};
use crate::error::{Error, Result};
use crate::tolerance;

/// The line `L(x, y)` through two distinct anchor points.
///
/// Carries an orthonormal frame at the first anchor, which gives Fermi
/// coordinates `(t, s)`: `t` is the signed arc length of the foot point along
/// the line (positive toward the second anchor), `s` the signed distance from
/// the line (positive on the left).
#[derive(Clone, Copy, Debug)]
pub struct Geodesic {
    anchors: [Point; 2],
    tangent: Tangent,
    normal: Tangent,
}

impl Geodesic {
    pub fn new(p: Point, q: Point) -> Result<Self> {
        same_metric(&[&p, &q])?;
        if dist(&p, &q) <= tolerance::PREDICATE {
            return Err(Error::CoincidentPoints);
        }
        let tangent = unit_tangent(&p, &q).ok_or(Error::CoincidentPoints)?;
        let normal = quarter_turn(&p, tangent);
        Ok(Geodesic {
            anchors: [p, q],
            tangent,
            normal,
        })
    }

    /// The hyperbolic line `{x : ⟨x, n⟩ = 0}` for a spacelike normal `n`.
    pub(crate) fn from_normal(n: Vec3) -> Option<Self> {
        let n = minkowski::normalize_spacelike(n)?;
        // foot of the model origin
        let k = 1.0 / (1.0 + n[0] * n[0]).sqrt();
        let o = Point::from_hyperboloid(minkowski::scale(minkowski::add([1.0, 0.0, 0.0], minkowski::scale(n, n[0])), k));
        let h = o.hyperboloid()?;
        let dir = minkowski::normalize_spacelike(minkowski::lcross(n, h))?;
        let far = exp_map(&o, Tangent(dir), 1.0);
        Geodesic::new(o, far).ok()
    }

    pub fn metric(&self) -> Metric {
        self.anchors[0].metric()
    }

    pub fn anchors(&self) -> [Point; 2] {
        self.anchors
    }

    /// Fermi coordinates `(t, s)` of `x` relative to this line.
    pub fn fermi(&self, x: &Point) -> Result<(f64, f64)> {
        if x.metric() != self.metric() {
            return Err(Error::MetricMismatch);
        }
        Ok(self.fermi_unchecked(x))
    }

    pub(crate) fn fermi_unchecked(&self, x: &Point) -> (f64, f64) {
        let (tau, nu) = (self.tangent.0, self.normal.0);
        match (self.anchors[0].0, x.0) {
            (Repr::Plane(o), Repr::Plane(p)) => {
                let d = planar::sub(p, o);
                (d[0] * tau[0] + d[1] * tau[1], d[0] * nu[0] + d[1] * nu[1])
            }
            (Repr::Hyperboloid(_), Repr::Hyperboloid(h)) => {
                let s = minkowski::mdot(h, nu).asinh();
                let t = (minkowski::mdot(h, tau) / s.cosh()).asinh();
                (t, s)
            }
            _ => (f64::NAN, f64::NAN),
        }
    }

    /// Inverse of [`Geodesic::fermi`].
    pub fn point_at(&self, t: f64, s: f64) -> Point {
        let (tau, nu) = (self.tangent.0, self.normal.0);
        match self.anchors[0].0 {
            Repr::Plane(o) => Point::euclidean(
                o[0] + t * tau[0] + s * nu[0],
                o[1] + t * tau[1] + s * nu[1],
            ),
            Repr::Hyperboloid(o) => {
                let along = minkowski::add(minkowski::scale(o, t.cosh()), minkowski::scale(tau, t.sinh()));
                Point::from_hyperboloid(minkowski::add(
                    minkowski::scale(along, s.cosh()),
                    minkowski::scale(nu, s.sinh()),
                ))
            }
        }
    }

    /// Signed distance of `x` from the line, positive on the left.
    pub fn signed_distance(&self, x: &Point) -> Result<f64> {
        Ok(self.fermi(x)?.1)
    }

    pub fn contains(&self, x: &Point) -> Result<bool> {
        Ok(self.signed_distance(x)?.abs() <= tolerance::INCIDENCE)
    }

    /// Unit normal of the plane cutting out this line (hyperbolic only).
    pub(crate) fn normal_vector(&self) -> Vec3 {
        self.normal.0
    }
}

/// Closed segment `[x, y]`.
#[derive(Clone, Copy, Debug)]
pub struct Segment {
    pub a: Point,
    pub b: Point,
}

impl Segment {
    pub fn new(a: Point, b: Point) -> Result<Self> {
        same_metric(&[&a, &b])?;
        Ok(Segment { a, b })
    }

    pub fn metric(&self) -> Metric {
        self.a.metric()
    }

    pub fn length(&self) -> f64 {
        dist(&self.a, &self.b)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RaySense {
    /// From the origin through the anchor.
    Toward,
    /// From the origin, away from the anchor.
    Away,
}

/// Closed ray emanating from `origin`.
#[derive(Clone, Copy, Debug)]
pub struct Ray {
    pub origin: Point,
    pub anchor: Point,
    pub sense: RaySense,
}

impl Ray {
    pub fn toward(origin: Point, anchor: Point) -> Result<Self> {
        Self::new(origin, anchor, RaySense::Toward)
    }

    /// The closed ray in `L(origin, anchor)` starting at `origin` that does not contain `anchor`.
    pub fn away(origin: Point, anchor: Point) -> Result<Self> {
        Self::new(origin, anchor, RaySense::Away)
    }

    fn new(origin: Point, anchor: Point, sense: RaySense) -> Result<Self> {
        same_metric(&[&origin, &anchor])?;
        if dist(&origin, &anchor) <= tolerance::PREDICATE {
            return Err(Error::CoincidentPoints);
        }
        Ok(Ray {
            origin,
            anchor,
            sense,
        })
    }
}

#[derive(Clone, Copy, Debug)]
pub enum SegmentIntersection {
    Disjoint,
    Point(Point),
    Overlap(Segment),
}

impl SegmentIntersection {
    pub fn is_disjoint(&self) -> bool {
        matches!(self, SegmentIntersection::Disjoint)
    }
}

/// Classifies `s1 ∩ s2`. Hyperbolic segments are intersected as Klein chords.
pub fn segment_intersection(s1: &Segment, s2: &Segment) -> Result<SegmentIntersection> {
    let metric = same_metric(&[&s1.a, &s1.b, &s2.a, &s2.b])?;
    if s1.length() <= tolerance::PREDICATE || s2.length() <= tolerance::PREDICATE {
        return Err(Error::DegenerateSegment);
    }
    let hit = planar::segment_intersection(
        s1.a.linear(),
        s1.b.linear(),
        s2.a.linear(),
        s2.b.linear(),
        tolerance::PREDICATE,
    );
    Ok(match hit {
        PlanarIntersection::Disjoint => SegmentIntersection::Disjoint,
        PlanarIntersection::Point(x) => SegmentIntersection::Point(Point::from_linear(metric, x)?),
        PlanarIntersection::Overlap(x, y) => SegmentIntersection::Overlap(Segment {
            a: Point::from_linear(metric, x)?,
            b: Point::from_linear(metric, y)?,
        }),
    })
}

/// Whether the closed ray meets the closed segment.
pub fn ray_segment_intersects(r: &Ray, s: &Segment) -> Result<bool> {
    same_metric(&[&r.origin, &s.a, &s.b])?;
    if s.length() <= tolerance::PREDICATE {
        return Err(Error::DegenerateSegment);
    }
    let o = r.origin.linear();
    let toward = planar::sub(r.anchor.linear(), o);
    let dir = match r.sense {
        RaySense::Toward => toward,
        RaySense::Away => planar::scale(toward, -1.0),
    };
    Ok(planar::ray_meets_segment(
        o,
        dir,
        s.a.linear(),
        s.b.linear(),
        tolerance::PREDICATE,
    ))
}

/// Foot of the perpendicular from `p` to `line`.
pub fn orthogonal_project(p: &Point, line: &Geodesic) -> Result<Point> {
    let (t, _) = line.fermi(p)?;
    Ok(line.point_at(t, 0.0))
}
