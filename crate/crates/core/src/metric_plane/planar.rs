//! Planar vector helpers and predicates on chart coordinates.
//!
//! Hyperbolic predicates are evaluated on Klein coordinates, where geodesics are
//! straight chords, so everything here is plain Euclidean arithmetic.

pub type Vec2 = [f64; 2];

#[inline]
pub fn sub(a: Vec2, b: Vec2) -> Vec2 {
    [a[0] - b[0], a[1] - b[1]]
}

#[inline]
pub fn add(a: Vec2, b: Vec2) -> Vec2 {
    [a[0] + b[0], a[1] + b[1]]
}

#[inline]
pub fn scale(a: Vec2, k: f64) -> Vec2 {
    [a[0] * k, a[1] * k]
}

#[inline]
pub fn dot(a: Vec2, b: Vec2) -> f64 {
    a[0] * b[0] + a[1] * b[1]
}

#[inline]
pub fn cross(a: Vec2, b: Vec2) -> f64 {
    a[0] * b[1] - a[1] * b[0]
}

#[inline]
pub fn norm(a: Vec2) -> f64 {
    a[0].hypot(a[1])
}

#[inline]
pub fn lerp(a: Vec2, b: Vec2, t: f64) -> Vec2 {
    add(a, scale(sub(b, a), t))
}

/// Signed distance of `x` from the directed line `a → b`, positive on the left.
#[inline]
pub fn signed_distance(a: Vec2, b: Vec2, x: Vec2) -> f64 {
    let r = sub(b, a);
    cross(r, sub(x, a)) / norm(r)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum PlanarIntersection {
    Disjoint,
    Point(Vec2),
    Overlap(Vec2, Vec2),
}

/// Closed segment `[a, b]` against closed segment `[c, d]`.
///
/// `eps` bounds the slack on the segment parameters. Both segments must have
/// nonzero length.
pub fn segment_intersection(a: Vec2, b: Vec2, c: Vec2, d: Vec2, eps: f64) -> PlanarIntersection {
    let r = sub(b, a);
    let s = sub(d, c);
    let (lr, ls) = (norm(r), norm(s));
    let ca = sub(c, a);
    let denom = cross(r, s);
    if denom.abs() <= eps * lr * ls {
        // parallel: only collinear segments can meet
        let off_c = cross(r, ca).abs() / lr;
        let off_d = cross(r, sub(d, a)).abs() / lr;
        let tol = eps * lr.max(1.0);
        if off_c > tol || off_d > tol {
            return PlanarIntersection::Disjoint;
        }
        let rr = dot(r, r);
        let t0 = dot(ca, r) / rr;
        let t1 = dot(sub(d, a), r) / rr;
        let lo = t0.min(t1).max(0.0);
        let hi = t0.max(t1).min(1.0);
        if lo > hi + eps {
            PlanarIntersection::Disjoint
        } else if hi - lo <= eps {
            PlanarIntersection::Point(lerp(a, b, lo.clamp(0.0, 1.0)))
        } else {
            PlanarIntersection::Overlap(lerp(a, b, lo), lerp(a, b, hi))
        }
    } else {
        let t = cross(ca, s) / denom;
        let u = cross(ca, r) / denom;
        if (-eps..=1.0 + eps).contains(&t) && (-eps..=1.0 + eps).contains(&u) {
            PlanarIntersection::Point(lerp(a, b, t.clamp(0.0, 1.0)))
        } else {
            PlanarIntersection::Disjoint
        }
    }
}

/// Whether the closed ray `{o + t·dir : t ≥ 0}` meets the closed segment `[c, d]`.
pub fn ray_meets_segment(o: Vec2, dir: Vec2, c: Vec2, d: Vec2, eps: f64) -> bool {
    let s = sub(d, c);
    let (lr, ls) = (norm(dir), norm(s));
    let co = sub(c, o);
    let denom = cross(dir, s);
    if ls == 0.0 {
        // degenerate segment: point on ray test
        return cross(dir, co).abs() / lr <= eps * lr.max(1.0) && dot(co, dir) >= -eps * lr * lr;
    }
    if denom.abs() <= eps * lr * ls {
        let tol = eps * lr.max(1.0);
        if cross(dir, co).abs() / lr > tol || cross(dir, sub(d, o)).abs() / lr > tol {
            return false;
        }
        let rr = dot(dir, dir);
        let t0 = dot(co, dir) / rr;
        let t1 = dot(sub(d, o), dir) / rr;
        t0.max(t1) >= -eps
    } else {
        let t = cross(co, s) / denom;
        let u = cross(co, dir) / denom;
        t >= -eps && (-eps..=1.0 + eps).contains(&u)
    }
}

/// Whether `x` lies on the closed segment `[a, b]` (which may be a single point).
pub fn on_segment(x: Vec2, a: Vec2, b: Vec2, eps: f64) -> bool {
    let r = sub(b, a);
    let lr = norm(r);
    if lr <= eps {
        return norm(sub(x, a)) <= eps;
    }
    if cross(r, sub(x, a)).abs() / lr > eps * lr.max(1.0) {
        return false;
    }
    let t = dot(sub(x, a), r) / (lr * lr);
    (-eps..=1.0 + eps).contains(&t)
}

/// Closed triangle membership; degenerate triangles fall back to their edges.
pub fn in_triangle(x: Vec2, a: Vec2, b: Vec2, c: Vec2, eps: f64) -> bool {
    let area2 = cross(sub(b, a), sub(c, a));
    let scale = norm(sub(b, a)).max(norm(sub(c, a))).max(norm(sub(c, b)));
    if area2.abs() <= eps * scale.max(1.0) * scale {
        return on_segment(x, a, b, eps) || on_segment(x, b, c, eps) || on_segment(x, a, c, eps);
    }
    let orient = area2.signum();
    [(a, b), (b, c), (c, a)]
        .iter()
        .all(|&(u, v)| orient * signed_distance(u, v, x) >= -eps)
}
