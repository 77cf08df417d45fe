use super::{sides_of, InscribedTriangle};
use crate::convex_body::ConvexBody;
use crate::error::{Error, Result};
use crate::metric_plane::minkowski;
use crate::metric_plane::{dist, quarter_turn, unit_tangent, Metric, Point, Tangent};

/// Moves each vertex that is not on `bd C` outward to the boundary without
/// shortening any side.
///
/// The escape direction at `v` makes an angle of at most π/2 with both
/// directions pointing away from the other two vertices, so the distance to
/// each of them is non-decreasing along the ray.
pub fn inscribe_push(body: &ConvexBody, t: [Point; 3]) -> Result<InscribedTriangle> {
    if t.iter().any(|p| p.metric() != body.metric()) {
        return Err(Error::MetricMismatch);
    }
    if t.iter().any(|p| !body.contains(p)) {
        return Err(Error::PointOutsideBody);
    }
    let before = [dist(&t[0], &t[1]), dist(&t[1], &t[2]), dist(&t[0], &t[2])];
    let mut v = t;
    for i in 0..3 {
        if body.is_on_boundary(&v[i]) {
            continue;
        }
        let (u, w) = (v[(i + 1) % 3], v[(i + 2) % 3]);
        let dir = escape_direction(body, &v[i], &u, &w);
        v[i] = body.exit_along(&v[i], dir);
    }
    let after = [dist(&v[0], &v[1]), dist(&v[1], &v[2]), dist(&v[0], &v[2])];
    for k in 0..3 {
        if after[k] < before[k] - 1e-10 {
            return Err(Error::Precondition(format!(
                "pushing shortened a side from {} to {}",
                before[k], after[k]
            )));
        }
    }
    if let Some(k) = v.iter().position(|p| !body.is_on_boundary(p)) {
        return Err(Error::Precondition(format!("pushed vertex {k} did not reach the boundary")));
    }
    let out = InscribedTriangle::unchecked(body, v);
    debug_assert_eq!(out.sides, sides_of(&v));
    Ok(out)
}

fn escape_direction(body: &ConvexBody, v: &Point, u: &Point, w: &Point) -> Tangent {
    let tu = unit_tangent(v, u).filter(|_| dist(v, u) > 0.0);
    let tw = unit_tangent(v, w).filter(|_| dist(v, w) > 0.0);
    let sum = match (tu, tw) {
        (Some(a), Some(b)) => minkowski::add(a.0, b.0),
        (Some(a), None) | (None, Some(a)) => a.0,
        (None, None) => {
            return unit_tangent(v, &body.boundary_point(0.0)).unwrap_or_else(|| {
                unit_tangent(v, &body.boundary_point(0.5)).expect("two distinct boundary points")
            })
        }
    };
    let d = Tangent(minkowski::scale(sum, -1.0));
    match normalized(v.metric(), d) {
        Some(d) => d,
        // v lies between u and w: leave orthogonally to the line through them
        None => quarter_turn(v, tu.or(tw).expect("handled above")),
    }
}

fn normalized(metric: Metric, d: Tangent) -> Option<Tangent> {
    let x = d.0;
    let len = match metric {
        Metric::Euclidean => x[0].hypot(x[1]),
        Metric::Hyperbolic => minkowski::mdot(x, x).max(0.0).sqrt(),
    };
    (len > 1e-12).then(|| Tangent(minkowski::scale(x, 1.0 / len)))
}
