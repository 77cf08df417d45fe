//! JSON interchange: body and polygon files in, reports out.
//!
//! Output numbers carry 17 significant digits so every `f64` round-trips.

use std::io;

use serde::Deserialize;
use serde_json::ser::Formatter;
use serde_json::{json, Value};

use crate::certificate::sweeps::SweepSummary;
use crate::certificate::TriangleCertificate;
use crate::convex_body::{ConvexBody, Shape};
use crate::error::{Error, Result};
use crate::metric_plane::{Metric, Point};
use crate::search_harness::SearchReport;
use crate::simple_polygon::ClosedPolygon;
use crate::triangle_bound::{BoundResult, Witness};

#[derive(Deserialize)]
struct BodyFile {
    metric: Metric,
    shape: ShapeFile,
}

#[derive(Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
enum ShapeFile {
    Disk { center: [f64; 2], radius: f64 },
    Polygon { vertices: Vec<[f64; 2]> },
}

#[derive(Deserialize)]
struct PolygonFile {
    metric: Metric,
    vertices: Vec<[f64; 2]>,
}

fn points(metric: Metric, raw: &[[f64; 2]]) -> Result<Vec<Point>> {
    raw.iter().map(|&c| Point::from_chart(metric, c)).collect()
}

pub fn parse_body(text: &str) -> Result<ConvexBody> {
    let f: BodyFile = serde_json::from_str(text)?;
    match f.shape {
        ShapeFile::Disk { center, radius } => ConvexBody::disk(Point::from_chart(f.metric, center)?, radius),
        ShapeFile::Polygon { vertices } => ConvexBody::polygon(points(f.metric, &vertices)?),
    }
}

pub fn parse_polygon(text: &str) -> Result<ClosedPolygon> {
    let f: PolygonFile = serde_json::from_str(text)?;
    ClosedPolygon::new(points(f.metric, &f.vertices)?)
}

/// Three points from a polygon file, or from the `triangle` field of a
/// bound or certificate document.
pub fn parse_triangle(text: &str, metric: Metric) -> Result<[Point; 3]> {
    let v: Value = serde_json::from_str(text)?;
    let metric = match v.get("metric") {
        Some(m) => Metric::deserialize(m)?,
        None => metric,
    };
    let raw = v
        .get("triangle")
        .or_else(|| v.get("vertices"))
        .ok_or_else(|| Error::InvalidPolygon("expected a `triangle` or `vertices` field".into()))?;
    let raw: Vec<[f64; 2]> = Vec::deserialize(raw)?;
    let pts = points(metric, &raw)?;
    <[Point; 3]>::try_from(pts).map_err(|p| Error::InvalidPolygon(format!("a triangle needs 3 vertices, got {}", p.len())))
}

pub fn body_value(body: &ConvexBody) -> Value {
    let shape = match body.shape() {
        Shape::Disk { center, radius } => json!({"type": "disk", "center": center, "radius": radius}),
        Shape::Polygon { vertices } => json!({"type": "polygon", "vertices": vertices}),
    };
    json!({"metric": body.metric(), "shape": shape})
}

pub fn polygon_value(p: &ClosedPolygon) -> Value {
    json!({"metric": p.metric(), "vertices": p.vertices()})
}

pub fn bound_value(r: &BoundResult, metric: Metric) -> Value {
    let d = &r.diagnostics;
    let diagnostics = json!({
        "grid": d.grid,
        "candidates": d.candidates,
        "refine_rounds": d.refine_rounds,
        "param_tolerance": d.param_tolerance,
        "evaluations": d.evaluations,
    });
    match &r.witness {
        Witness::Triangle(t) => json!({
            "value": r.value,
            "n": r.n,
            "metric": metric,
            "solver": r.solver,
            "triangle": t.vertices(),
            "params": t.params(),
            "sides": t.sides(),
            "diagnostics": diagnostics,
        }),
        Witness::Diameter(pair) => json!({
            "value": r.value,
            "n": r.n,
            "metric": metric,
            "solver": r.solver,
            "label": "even-n diameter bound",
            "diameter_pair": pair,
            "diameter": r.value / r.n as f64,
            "diagnostics": diagnostics,
        }),
    }
}

pub fn certificate_value(c: &TriangleCertificate, metric: Metric) -> Value {
    let t = &c.trace;
    let labels = ["p", "q", "a", "b", "c"];
    let points: serde_json::Map<String, Value> =
        labels.iter().zip(&t.points).map(|(l, p)| (l.to_string(), json!(p))).collect();
    let candidates: Vec<Value> = t
        .candidates
        .iter()
        .map(|k| json!({"triple": k.triple.map(|l| l.as_str()), "score": k.score, "case": k.case().as_str()}))
        .collect();
    json!({
        "metric": metric,
        "bound": c.bound,
        "perimeter": c.perimeter,
        "slack": c.slack,
        "triangle": c.triangle.vertices(),
        "sides": c.triangle.sides(),
        "trace": {
            "j": t.j,
            "zeta": t.zeta,
            "case": t.case.as_str(),
            "triple": t.triple.map(|l| l.as_str()),
            "longest_edge": t.longest_edge,
            "rho": t.rho,
            "scale": t.scale,
            "flipped": t.flipped,
            "abc_indices": t.abc_indices,
            "raw_score": t.raw_score,
            "points": points,
            "candidates": candidates,
        },
    })
}

pub fn report_value(r: &SearchReport) -> Value {
    json!({
        "body": body_value(&r.body),
        "n": r.n,
        "bound": r.bound,
        "solver": r.solver,
        "trials": r.trials,
        "steps": r.steps,
        "seed": r.seed,
        "best_perimeter": r.best.as_ref().map(|b| b.perimeter),
        "best_restart": r.best.as_ref().map(|b| b.restart),
        "best_polygon": r.best.as_ref().map(|b| polygon_value(&b.polygon)),
        "max_violation": r.max_violation,
        "min_certificate_slack": r.min_certificate_slack,
        "certified": r.certified,
        "perimeters": r.perimeters,
        "passed": true,
    })
}

pub fn sweeps_value(samples: usize, seed: u64, sweeps: &[SweepSummary]) -> Value {
    let checks: Vec<Value> = sweeps
        .iter()
        .map(|s| {
            json!({
                "name": s.name,
                "samples": s.samples,
                "min_margin": s.min_margin,
                "worst": s.worst,
                "failures": s.failures,
                "passed": s.passed(),
            })
        })
        .collect();
    json!({
        "samples": samples,
        "seed": seed,
        "passed": sweeps.iter().all(SweepSummary::passed),
        "checks": checks,
    })
}

/// Compact JSON with floats written as by `%.17g`; non-finite values become `null`.
pub fn to_json_string(v: &Value) -> String {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, Digits17);
    serde::Serialize::serialize(v, &mut ser).expect("serializing a Value to memory cannot fail");
    String::from_utf8(out).expect("JSON output is UTF-8")
}

struct Digits17;

impl Formatter for Digits17 {
    fn write_f64<W: ?Sized + io::Write>(&mut self, w: &mut W, v: f64) -> io::Result<()> {
        w.write_all(format_g17(v).as_bytes())
    }
}

pub fn format_g17(v: f64) -> String {
    if !v.is_finite() {
        return "null".into();
    }
    if v == 0.0 {
        return if v.is_sign_negative() { "-0".into() } else { "0".into() };
    }
    let sci = format!("{v:.16e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..17).contains(&exp) {
        let fixed = format!("{:.*}", (16 - exp) as usize, v);
        trim_zeros(&fixed).to_string()
    } else {
        format!("{}e{}{:02}", trim_zeros(mantissa), if exp < 0 { '-' } else { '+' }, exp.abs())
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}
