use super::minkowski::{self, Mat3};
use super::planar::Vec2;
use super::{dist, same_metric, Metric, Point, Repr};
use crate::error::{Error, Result};
use crate::tolerance;

/// Distance-preserving map of `H²`, or a similarity of `E²`.
///
/// Euclidean maps are `x ↦ scale · R(angle) · x + shift`; only Euclidean maps
/// may scale, since `H²` admits no similarities.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Isometry {
    Similarity { cos: f64, sin: f64, scale: f64, shift: Vec2 },
    Lorentz(Mat3),
}

impl Isometry {
    pub fn identity(metric: Metric) -> Self {
        match metric {
            Metric::Euclidean => Isometry::Similarity {
                cos: 1.0,
                sin: 0.0,
                scale: 1.0,
                shift: [0.0, 0.0],
            },
            Metric::Hyperbolic => Isometry::Lorentz(minkowski::rotation(0.0)),
        }
    }

    /// Rotation about the chart origin by `angle` followed by the translation
    /// carrying the origin to `to`.
    pub fn rigid(angle: f64, to: &Point) -> Self {
        match to.0 {
            Repr::Plane(t) => Isometry::Similarity {
                cos: angle.cos(),
                sin: angle.sin(),
                scale: 1.0,
                shift: t,
            },
            Repr::Hyperboloid(h) => {
                Isometry::Lorentz(minkowski::mat_mul(&minkowski::boost_to(h), &minkowski::rotation(angle)))
            }
        }
    }

    /// Takes `p` to the origin and `q` onto the positive second coordinate
    /// axis. Euclidean maps also scale so that `q` lands on `(0, 1)`.
    pub fn normalizing(p: &Point, q: &Point) -> Result<Self> {
        same_metric(&[p, q])?;
        let len = dist(p, q);
        if len <= tolerance::PREDICATE {
            return Err(Error::CoincidentPoints);
        }
        Ok(match (p.0, q.0) {
            (Repr::Plane(a), Repr::Plane(b)) => {
                let d = [b[0] - a[0], b[1] - a[1]];
                let phi = std::f64::consts::FRAC_PI_2 - d[1].atan2(d[0]);
                let (sin, cos) = phi.sin_cos();
                let scale = 1.0 / len;
                let ra = [cos * a[0] - sin * a[1], sin * a[0] + cos * a[1]];
                Isometry::Similarity {
                    cos,
                    sin,
                    scale,
                    shift: [-scale * ra[0], -scale * ra[1]],
                }
            }
            (Repr::Hyperboloid(a), Repr::Hyperboloid(b)) => {
                let back = minkowski::lorentz_inverse(&minkowski::boost_to(a));
                let qb = minkowski::mat_vec(&back, b);
                let phi = std::f64::consts::FRAC_PI_2 - qb[2].atan2(qb[1]);
                Isometry::Lorentz(minkowski::mat_mul(&minkowski::rotation(phi), &back))
            }
            _ => unreachable!(),
        })
    }

    pub fn metric(&self) -> Metric {
        match self {
            Isometry::Similarity { .. } => Metric::Euclidean,
            Isometry::Lorentz(_) => Metric::Hyperbolic,
        }
    }

    pub fn scale_factor(&self) -> f64 {
        match self {
            Isometry::Similarity { scale, .. } => *scale,
            Isometry::Lorentz(_) => 1.0,
        }
    }

    pub fn apply(&self, p: &Point) -> Result<Point> {
        match (self, p.0) {
            (Isometry::Similarity { cos, sin, scale, shift }, Repr::Plane(x)) => Ok(Point::euclidean(
                scale * (cos * x[0] - sin * x[1]) + shift[0],
                scale * (sin * x[0] + cos * x[1]) + shift[1],
            )),
            (Isometry::Lorentz(m), Repr::Hyperboloid(h)) => Ok(Point::from_hyperboloid(minkowski::mat_vec(m, h))),
            _ => Err(Error::MetricMismatch),
        }
    }

    pub fn inverse(&self) -> Self {
        match *self {
            Isometry::Similarity { cos, sin, scale, shift } => {
                // x = Rᵀ (y − shift) / scale
                let k = 1.0 / scale;
                let rs = [cos * shift[0] + sin * shift[1], -sin * shift[0] + cos * shift[1]];
                Isometry::Similarity {
                    cos,
                    sin: -sin,
                    scale: k,
                    shift: [-k * rs[0], -k * rs[1]],
                }
            }
            Isometry::Lorentz(m) => Isometry::Lorentz(minkowski::lorentz_inverse(&m)),
        }
    }
}
