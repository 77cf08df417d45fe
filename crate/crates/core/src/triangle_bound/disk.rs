use std::f64::consts::TAU;

use super::optimize::refine;
use super::{score_sorted, sort_sides, BoundResult, Diagnostics, InscribedTriangle, Witness};
use crate::convex_body::{ConvexBody, Shape};
use crate::error::{Error, Result};
use crate::metric_plane::{Metric, Point};

const GRID: usize = 512;

/// Chord of a disk of radius `r` subtending central angle `theta`.
pub(crate) fn chord(metric: Metric, r: f64, theta: f64) -> f64 {
    let half = (0.5 * theta).sin().abs();
    match metric {
        Metric::Euclidean => 2.0 * r * half,
        // equal to acosh(cosh²r − sinh²r·cos θ), without the cancellation
        Metric::Hyperbolic => 2.0 * (r.sinh() * half).asinh(),
    }
}

/// The bound for a disk of radius `r` centred at the origin, over central
/// angles `θ1 + θ2 + θ3 = 2π`.
pub fn disk_bound_1d(metric: Metric, r: f64, n: usize) -> Result<BoundResult> {
    disk_bound_on(&ConvexBody::disk(Point::origin(metric), r)?, n)
}

pub(crate) fn disk_bound_on(body: &ConvexBody, n: usize) -> Result<BoundResult> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::InvalidN(n));
    }
    let Shape::Disk { radius, .. } = *body.shape() else {
        return Err(Error::Precondition("central-angle reduction needs a disk".into()));
    };
    let metric = body.metric();
    let f = |th: &[f64]| {
        let t3 = TAU - th[0] - th[1];
        if th[0] < 0.0 || th[1] < 0.0 || t3 < 0.0 {
            return f64::NEG_INFINITY;
        }
        score_sorted(n, sort_sides([chord(metric, radius, th[0]), chord(metric, radius, th[1]), chord(metric, radius, t3)]))
    };
    let step = TAU / GRID as f64;
    let mut best = (f64::NEG_INFINITY, [0usize; 2]);
    for i in 0..=GRID {
        for j in 0..=GRID - i {
            let v = f(&[i as f64 * step, j as f64 * step]);
            if v > best.0 {
                best = (v, [i, j]);
            }
        }
    }
    let x0 = best.1.map(|i| i as f64 * step);
    let r = refine(&f, &x0, &[[1.0, 0.0], [0.0, 1.0], [1.0, -1.0]], step, 400);
    let params = [0.0, r.x[0] / TAU, (r.x[0] + r.x[1]) / TAU];
    let triangle = InscribedTriangle::from_params(body, params);
    Ok(BoundResult {
        value: score_sorted(n, triangle.sides),
        n,
        solver: "disk-central-angle".into(),
        witness: Witness::Triangle(triangle),
        diagnostics: Diagnostics {
            grid: GRID,
            candidates: 1,
            refine_rounds: r.rounds,
            param_tolerance: r.last_move / TAU,
            evaluations: (GRID + 1) * (GRID + 2) / 2 + r.evaluations,
        },
    })
}
