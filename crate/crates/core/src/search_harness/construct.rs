use crate::convex_body::ConvexBody;
use crate::error::{Error, Result};
use crate::metric_plane::planar::{self, Vec2};
use crate::metric_plane::{dist, Point};
use crate::simple_polygon::ClosedPolygon;
use crate::triangle_bound::{compute_bound, SolverSettings};

fn chart_point(body: &ConvexBody, eps: f64, c: Vec2) -> Result<Point> {
    Point::from_linear(body.metric(), c).map_err(|_| Error::Construction {
        eps,
        reason: "offset point left the model".into(),
    })
}

fn checked(body: &ConvexBody, eps: f64, pts: Vec<Point>) -> Result<ClosedPolygon> {
    let p = ClosedPolygon::new(pts)?;
    if let Some(v) = p.simplicity() {
        return Err(Error::Construction { eps, reason: format!("not simple: {v}") });
    }
    if let Some(k) = p.first_outside(body)? {
        return Err(Error::Construction { eps, reason: format!("vertex {k} outside the body") });
    }
    Ok(p)
}

/// Odd `n`: a zigzag that runs `n − 2` times along the longest side of the
/// optimal triangle `(x, y, z)`.
///
/// Vertex cycle `z, x₀, y₀, x₁, y₁, …`; `x_k` and `y_k` sit at chart distance
/// `(k+1)·ε` from `x` and `y` on the segments toward the triangle's chart
/// centroid, so the zigzag rungs are nested and disjoint.
pub fn near_extremal_odd(body: &ConvexBody, n: usize, eps: f64) -> Result<ClosedPolygon> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::InvalidN(n));
    }
    if !(eps > 0.0) {
        return Err(Error::Precondition("eps must be positive".into()));
    }
    let bound = compute_bound(body, n, &SolverSettings::default())?;
    let t = bound.triangle().expect("odd n has a triangle witness");
    let v = *t.vertices();
    if n == 3 {
        return checked(body, eps, v.to_vec());
    }
    // (x, y) is the longest side
    let pairs = [(0, 1, 2), (1, 2, 0), (0, 2, 1)];
    let (ix, iy, iz) = pairs
        .iter()
        .copied()
        .max_by(|a, b| dist(&v[a.0], &v[a.1]).total_cmp(&dist(&v[b.0], &v[b.1])))
        .unwrap();
    let (x, y, z) = (v[ix].linear(), v[iy].linear(), v[iz].linear());
    let g = planar::scale(planar::add(planar::add(x, y), z), 1.0 / 3.0);
    let toward = |from: Vec2, k: usize| -> Vec2 {
        let d = planar::sub(g, from);
        planar::add(from, planar::scale(d, (k + 1) as f64 * eps / planar::norm(d)))
    };
    let m = (n - 1) / 2;
    if (m as f64) * eps >= 0.5 * planar::norm(planar::sub(g, x)).min(planar::norm(planar::sub(g, y))) {
        return Err(Error::Construction { eps, reason: "offsets reach the centroid".into() });
    }
    let mut pts = vec![v[iz]];
    for k in 0..m {
        pts.push(chart_point(body, eps, toward(x, k))?);
        pts.push(chart_point(body, eps, toward(y, k))?);
    }
    checked(body, eps, pts)
}

/// Even `n`: `n/2` vertices near each end of a diameter `(d₁, d₂)`.
///
/// In the chart frame `e` (along `d₁ → d₂`), `f` (left normal): the far
/// vertices form a short column at depth `4ε` from `d₂`, spanning `±ε` across;
/// the near vertices are a sawtooth at depth `2ε` from `d₁`, closed by a
/// vertex at depth `ε`. Tooth heights are scaled by `ε/(4L)` so every tooth
/// stays inside the wedge cut out by the closing edges.
pub fn near_extremal_even(body: &ConvexBody, n: usize, eps: f64) -> Result<ClosedPolygon> {
    if n < 4 || n % 2 == 1 {
        return Err(Error::Precondition(format!("even n ≥ 4 required, got {n}")));
    }
    if !(eps > 0.0) {
        return Err(Error::Precondition("eps must be positive".into()));
    }
    let (d1, d2) = body.diameter_pair();
    let (a, b) = (d1.linear(), d2.linear());
    let len = planar::norm(planar::sub(b, a));
    if 8.0 * eps >= len {
        return Err(Error::Construction { eps, reason: "eps is too large for the diameter".into() });
    }
    let e = planar::scale(planar::sub(b, a), 1.0 / len);
    let f = [-e[1], e[0]];
    let at = |base: Vec2, along: f64, across: f64| planar::add(planar::add(base, planar::scale(e, along)), planar::scale(f, across));
    let m = n / 2;
    let c = |k: usize| 1.0 - 2.0 * k as f64 / (m - 1) as f64;
    let eta = eps / (4.0 * len);
    let mut pts = Vec::with_capacity(n);
    for k in 0..m {
        let near = if k == 0 { at(a, eps, 0.0) } else { at(a, 2.0 * eps, eta * eps * 0.5 * (c(k - 1) + c(k))) };
        pts.push(chart_point(body, eps, near)?);
        pts.push(chart_point(body, eps, at(b, -4.0 * eps, eps * c(k)))?);
    }
    checked(body, eps, pts)
}
