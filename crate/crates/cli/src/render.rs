//! Static SVG figures.
//!
//! Chart coordinates go to a 1000×1000 view box with the second axis flipped.
//! Hyperbolic pictures use the Poincaré disk scaled to fill the box, so
//! geodesic edges become circular arcs orthogonal to the model circle.

use std::fmt::Write;

use perimax_core::{ConvexBody, Metric, Point, Shape};

const SIZE: f64 = 1000.0;
const MARGIN: f64 = 50.0;

/// Chart to view-box affine map.
#[derive(Clone, Copy, Debug)]
struct View {
    scale: f64,
    cx: f64,
    cy: f64,
}

impl View {
    fn fit(metric: Metric, points: &[[f64; 2]]) -> Self {
        if metric == Metric::Hyperbolic {
            return View { scale: (SIZE - 2.0 * MARGIN) / 2.0, cx: 0.0, cy: 0.0 };
        }
        let (mut lo, mut hi) = ([f64::INFINITY; 2], [f64::NEG_INFINITY; 2]);
        for p in points {
            for k in 0..2 {
                lo[k] = lo[k].min(p[k]);
                hi[k] = hi[k].max(p[k]);
            }
        }
        let span = (hi[0] - lo[0]).max(hi[1] - lo[1]);
        let scale = if span > 0.0 { (SIZE - 2.0 * MARGIN) / span } else { 1.0 };
        View { scale, cx: 0.5 * (lo[0] + hi[0]), cy: 0.5 * (lo[1] + hi[1]) }
    }

    fn map(&self, p: [f64; 2]) -> [f64; 2] {
        [SIZE / 2.0 + self.scale * (p[0] - self.cx), SIZE / 2.0 - self.scale * (p[1] - self.cy)]
    }
}

/// Three decimals, without a negative zero.
fn num(v: f64) -> String {
    let s = format!("{v:.3}");
    if s == "-0.000" {
        "0.000".into()
    } else {
        s
    }
}

fn xy(p: [f64; 2]) -> String {
    format!("{} {}", num(p[0]), num(p[1]))
}

/// Center and radius of the circle through `p` and `q` orthogonal to the
/// unit circle, or `None` when the geodesic is a diameter.
fn orthogonal_circle(p: [f64; 2], q: [f64; 2]) -> Option<([f64; 2], f64)> {
    // 2 c·p = 1 + |p|², 2 c·q = 1 + |q|²
    let det = p[0] * q[1] - p[1] * q[0];
    if det.abs() <= 1e-12 * p[0].hypot(p[1]) * q[0].hypot(q[1]) {
        return None;
    }
    let rp = 0.5 * (1.0 + p[0] * p[0] + p[1] * p[1]);
    let rq = 0.5 * (1.0 + q[0] * q[0] + q[1] * q[1]);
    let c = [(rp * q[1] - rq * p[1]) / det, (p[0] * rq - q[0] * rp) / det];
    let r = (c[0] * c[0] + c[1] * c[1] - 1.0).max(0.0).sqrt();
    Some((c, r))
}

/// Closed path through `pts` along geodesic edges.
fn closed_path(metric: Metric, view: &View, pts: &[[f64; 2]]) -> String {
    let mut d = format!("M {}", xy(view.map(pts[0])));
    for i in 0..pts.len() {
        let (p, q) = (pts[i], pts[(i + 1) % pts.len()]);
        let to = view.map(q);
        let arc = match metric {
            Metric::Euclidean => None,
            Metric::Hyperbolic => orthogonal_circle(p, q),
        };
        match arc {
            None => write!(d, " L {}", xy(to)).unwrap(),
            Some((c, r)) => {
                // counterclockwise in the chart is clockwise on screen, which is sweep 1
                let cross = (p[0] - c[0]) * (q[1] - c[1]) - (p[1] - c[1]) * (q[0] - c[0]);
                let sweep = u8::from(cross > 0.0);
                let rr = num(r * view.scale);
                write!(d, " A {rr} {rr} 0 0 {sweep} {}", xy(to)).unwrap();
            }
        }
    }
    d.push_str(" Z");
    d
}

/// Euclidean circle as a closed path of two half arcs.
fn circle_path(view: &View, c: [f64; 2], r: f64) -> String {
    let (a, b) = (view.map([c[0] + r, c[1]]), view.map([c[0] - r, c[1]]));
    let rr = num(r * view.scale);
    format!("M {} A {rr} {rr} 0 1 0 {} A {rr} {rr} 0 1 0 {} Z", xy(a), xy(b), xy(a))
}

/// Euclidean circle through three chart points.
fn circumcircle(a: [f64; 2], b: [f64; 2], c: [f64; 2]) -> ([f64; 2], f64) {
    let (bx, by) = (b[0] - a[0], b[1] - a[1]);
    let (cx, cy) = (c[0] - a[0], c[1] - a[1]);
    let d = 2.0 * (bx * cy - by * cx);
    let (b2, c2) = (bx * bx + by * by, cx * cx + cy * cy);
    let ux = (cy * b2 - by * c2) / d;
    let uy = (bx * c2 - cx * b2) / d;
    ([a[0] + ux, a[1] + uy], ux.hypot(uy))
}

fn body_path(body: &ConvexBody, view: &View) -> String {
    match body.shape() {
        Shape::Disk { center, radius } => match body.metric() {
            Metric::Euclidean => circle_path(view, center.chart(), *radius),
            // hyperbolic circles are Euclidean circles in the Poincaré disk
            Metric::Hyperbolic => {
                let [a, b, c] = [0.0, 1.0 / 3.0, 2.0 / 3.0].map(|t| body.boundary_point(t).chart());
                let (m, r) = circumcircle(a, b, c);
                circle_path(view, m, r)
            }
        },
        Shape::Polygon { vertices } => {
            let pts: Vec<[f64; 2]> = vertices.iter().map(Point::chart).collect();
            closed_path(body.metric(), view, &pts)
        }
    }
}

/// The picture as an SVG document. Layers are drawn body, polygon, triangle.
pub fn svg(body: &ConvexBody, polygon: Option<&[Point]>, triangle: Option<&[Point; 3]>) -> String {
    let metric = body.metric();
    let mut extent: Vec<[f64; 2]> = (0..64).map(|i| body.boundary_point(i as f64 / 64.0).chart()).collect();
    extent.extend(polygon.unwrap_or(&[]).iter().map(Point::chart));
    extent.extend(triangle.iter().flat_map(|t| t.iter().map(Point::chart)));
    if let Shape::Disk { center, radius } = body.shape() {
        if metric == Metric::Euclidean {
            let c = center.chart();
            extent.extend([[c[0] - radius, c[1] - radius], [c[0] + radius, c[1] + radius]]);
        }
    }
    let view = View::fit(metric, &extent);

    let mut out = String::new();
    writeln!(out, r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 1000 1000" width="1000" height="1000">"#).unwrap();
    if metric == Metric::Hyperbolic {
        writeln!(
            out,
            r##"<circle class="model" cx="500.000" cy="500.000" r="{}" fill="none" stroke="#bbbbbb" stroke-width="1"/>"##,
            num(view.scale)
        )
        .unwrap();
    }
    writeln!(out, r##"<path class="body" d="{}" fill="none" stroke="#000000" stroke-width="2"/>"##, body_path(body, &view)).unwrap();
    if let Some(p) = polygon {
        let pts: Vec<[f64; 2]> = p.iter().map(Point::chart).collect();
        writeln!(
            out,
            r##"<path class="polygon" d="{}" fill="none" stroke="#1f5fbf" stroke-width="2" stroke-linejoin="round"/>"##,
            closed_path(metric, &view, &pts)
        )
        .unwrap();
    }
    if let Some(t) = triangle {
        let pts: Vec<[f64; 2]> = t.iter().map(Point::chart).collect();
        writeln!(
            out,
            r##"<path class="triangle" d="{}" fill="none" stroke="#c0392b" stroke-width="2" stroke-dasharray="8 6"/>"##,
            closed_path(metric, &view, &pts)
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}
