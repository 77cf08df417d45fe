use super::planar;
use super::{dist, same_metric, Metric, Point};
use crate::error::{Error, Result};
use crate::tolerance;

/// Interior angle at `v` of the triangle `v, p, q`, in `[0, π]`.
pub fn angle_at(v: &Point, p: &Point, q: &Point) -> Result<f64> {
    let metric = same_metric(&[v, p, q])?;
    let (b, c) = (dist(v, p), dist(v, q));
    if b <= tolerance::PREDICATE || c <= tolerance::PREDICATE {
        return Err(Error::CoincidentPoints);
    }
    Ok(match metric {
        Metric::Euclidean => {
            let (u, w) = (planar::sub(p.chart(), v.chart()), planar::sub(q.chart(), v.chart()));
            planar::cross(u, w).abs().atan2(planar::dot(u, w))
        }
        Metric::Hyperbolic => {
            let a = dist(p, q);
            let cos = (b.cosh() * c.cosh() - a.cosh()) / (b.sinh() * c.sinh());
            cos.clamp(-1.0, 1.0).acos()
        }
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    NearerP,
    NearerQ,
    Equidistant,
}

/// Which side of the perpendicular bisector of `[p, q]` the point `x` lies on.
pub fn bisector_separates(x: &Point, p: &Point, q: &Point) -> Result<Side> {
    same_metric(&[x, p, q])?;
    let (dp, dq) = (dist(x, p), dist(x, q));
    Ok(if dp < dq - tolerance::PREDICATE {
        Side::NearerP
    } else if dq < dp - tolerance::PREDICATE {
        Side::NearerQ
    } else {
        Side::Equidistant
    })
}

/// Closed convex hull membership for a handful of generators.
///
/// Decided in the linear chart: by Carathéodory, `x` is in the hull iff it is
/// in the closed (possibly degenerate) triangle of some three generators.
pub fn in_convex_hull(x: &Point, generators: &[Point]) -> Result<bool> {
    if generators.is_empty() {
        return Ok(false);
    }
    let mut all: Vec<&Point> = generators.iter().collect();
    all.push(x);
    same_metric(&all)?;
    let g: Vec<_> = generators.iter().map(Point::linear).collect();
    let xl = x.linear();
    let eps = tolerance::PREDICATE;
    let k = g.len();
    if k == 1 {
        return Ok(planar::norm(planar::sub(xl, g[0])) <= eps);
    }
    for i in 0..k {
        for j in i + 1..k {
            if planar::on_segment(xl, g[i], g[j], eps) {
                return Ok(true);
            }
            for m in j + 1..k {
                if planar::in_triangle(xl, g[i], g[j], g[m], eps) {
                    return Ok(true);
                }
            }
        }
    }
    Ok(false)
}
