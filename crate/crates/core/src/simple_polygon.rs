//! Closed polygons, the closed-edge simplicity predicate and 2-opt repair.

use std::fmt;

use crate::convex_body::ConvexBody;
use crate::error::{Error, Result};
use crate::metric_plane::planar::{self, PlanarIntersection, Vec2};
use crate::metric_plane::{dist, same_metric, Metric, Point};
use crate::tolerance;

#[derive(Clone, Debug, PartialEq)]
pub struct ClosedPolygon {
    metric: Metric,
    vertices: Vec<Point>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    /// Two vertices coincide; edges are the ones leaving each copy.
    RepeatedVertex,
    /// Consecutive edges fold back along a common line.
    AdjacentOverlap,
    /// Non-adjacent edges share a point.
    Crossing,
}

/// First pair of edges (lexicographically) that breaks simplicity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Violation {
    pub first_edge: usize,
    pub second_edge: usize,
    pub kind: ViolationKind,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (i, j) = (self.first_edge, self.second_edge);
        match self.kind {
            ViolationKind::RepeatedVertex => write!(f, "vertices {i} and {j} coincide"),
            ViolationKind::AdjacentOverlap => write!(f, "edges {i} and {j} overlap"),
            ViolationKind::Crossing => write!(f, "edges {i} and {j} intersect"),
        }
    }
}

impl ClosedPolygon {
    pub fn new(vertices: Vec<Point>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::InvalidPolygon(format!("need at least 3 vertices, got {}", vertices.len())));
        }
        let refs: Vec<&Point> = vertices.iter().collect();
        let metric = same_metric(&refs)?;
        Ok(ClosedPolygon { metric, vertices })
    }

    pub fn metric(&self) -> Metric {
        self.metric
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn into_vertices(self) -> Vec<Point> {
        self.vertices
    }

    pub fn edge_length(&self, i: usize) -> f64 {
        let n = self.len();
        dist(&self.vertices[i % n], &self.vertices[(i + 1) % n])
    }

    pub fn perimeter(&self) -> f64 {
        (0..self.len()).map(|i| self.edge_length(i)).sum()
    }

    /// Index of the first longest edge.
    pub fn longest_edge(&self) -> usize {
        let mut best = (0, f64::NEG_INFINITY);
        for i in 0..self.len() {
            let l = self.edge_length(i);
            if l > best.1 {
                best = (i, l);
            }
        }
        best.0
    }

    /// Cyclic relabeling so that vertex `k` comes first.
    pub fn rotated(&self, k: usize) -> Self {
        let mut v = self.vertices.clone();
        v.rotate_left(k % self.len());
        ClosedPolygon { metric: self.metric, vertices: v }
    }

    /// Same polygon traversed the other way round, starting at the same vertex.
    pub fn reversed(&self) -> Self {
        let mut v = self.vertices.clone();
        v[1..].reverse();
        ClosedPolygon { metric: self.metric, vertices: v }
    }

    pub fn simplicity(&self) -> Option<Violation> {
        let n = self.len();
        for i in 0..n {
            for j in i + 1..n {
                if dist(&self.vertices[i], &self.vertices[j]) <= tolerance::PREDICATE {
                    return Some(Violation { first_edge: i, second_edge: j, kind: ViolationKind::RepeatedVertex });
                }
            }
        }
        let lin: Vec<Vec2> = self.vertices.iter().map(Point::linear).collect();
        for i in 0..n {
            for j in i + 1..n {
                if let Some(kind) = edge_pair_violation(&lin, i, j) {
                    return Some(Violation { first_edge: i, second_edge: j, kind });
                }
            }
        }
        None
    }

    pub fn is_simple(&self) -> bool {
        self.simplicity().is_none()
    }

    /// Every vertex lies in `body`; convexity of the body does the rest.
    pub fn contained_in(&self, body: &ConvexBody) -> Result<bool> {
        Ok(self.first_outside(body)?.is_none())
    }

    pub fn first_outside(&self, body: &ConvexBody) -> Result<Option<usize>> {
        if body.metric() != self.metric {
            return Err(Error::MetricMismatch);
        }
        Ok(self.vertices.iter().position(|v| !body.contains(v)))
    }

    /// Removes crossings by 2-opt moves, at most `max_passes` sweeps over all
    /// edge pairs.
    pub fn uncross(&self, max_passes: usize) -> Result<Self> {
        let n = self.len();
        let mut v = self.vertices.clone();
        for _ in 0..max_passes {
            let mut lin: Vec<Vec2> = v.iter().map(Point::linear).collect();
            let mut moved = false;
            for i in 0..n {
                for j in i + 2..n {
                    if i == 0 && j == n - 1 {
                        continue;
                    }
                    if edge_pair_violation(&lin, i, j).is_some() {
                        v[i + 1..=j].reverse();
                        lin[i + 1..=j].reverse();
                        moved = true;
                    }
                }
            }
            let candidate = ClosedPolygon { metric: self.metric, vertices: v.clone() };
            if !moved || candidate.is_simple() {
                if candidate.is_simple() {
                    return Ok(candidate);
                }
                return Err(Error::UncrossExhausted { passes: max_passes, partial: Box::new(candidate) });
            }
        }
        Err(Error::UncrossExhausted {
            passes: max_passes,
            partial: Box::new(ClosedPolygon { metric: self.metric, vertices: v }),
        })
    }
}

/// Simplicity test for edges `i < j` of a closed chain given in the linear chart.
pub(crate) fn edge_pair_violation(lin: &[Vec2], i: usize, j: usize) -> Option<ViolationKind> {
    let n = lin.len();
    let (a, b) = (lin[i], lin[(i + 1) % n]);
    let (c, d) = (lin[j], lin[(j + 1) % n]);
    let adjacent = j == i + 1 || (i == 0 && j == n - 1);
    let hit = planar::segment_intersection(a, b, c, d, tolerance::PREDICATE);
    if adjacent {
        matches!(hit, PlanarIntersection::Overlap(..)).then_some(ViolationKind::AdjacentOverlap)
    } else if matches!(hit, PlanarIntersection::Disjoint) {
        None
    } else {
        Some(ViolationKind::Crossing)
    }
}

/// Whether a chain that was simple stays simple after vertex `k` moved.
/// `pts` and `lin` already hold the moved vertex.
pub(crate) fn still_simple_after_move(pts: &[Point], lin: &[Vec2], k: usize) -> bool {
    let n = pts.len();
    for m in 0..n {
        if m != k && dist(&pts[m], &pts[k]) <= tolerance::PREDICATE {
            return false;
        }
    }
    let touched = [(k + n - 1) % n, k];
    for e in touched {
        for f in 0..n {
            if f == e || (f == touched[0] && e == touched[1]) {
                continue;
            }
            let (i, j) = if e < f { (e, f) } else { (f, e) };
            if edge_pair_violation(lin, i, j).is_some() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    fn poly(xy: &[(f64, f64)]) -> ClosedPolygon {
        ClosedPolygon::new(xy.iter().map(|&(x, y)| Point::euclidean(x, y)).collect()).unwrap()
    }

    fn pentagon() -> ClosedPolygon {
        ClosedPolygon::new(
            (0..5)
                .map(|k| {
                    let t = 2.0 * PI * k as f64 / 5.0;
                    Point::euclidean(t.cos(), t.sin())
                })
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn perimeters() {
        assert_relative_eq!(poly(&[(0., 0.), (1., 0.), (1., 1.), (0., 1.)]).perimeter(), 4.0);
        assert_relative_eq!(poly(&[(0., 0.), (0., 1.), (0., 0.5)]).perimeter(), 2.0);
        assert_relative_eq!(pentagon().perimeter(), 10.0 * (PI / 5.0).sin(), epsilon = 1e-14);
        assert_relative_eq!(pentagon().perimeter(), 5.8778525229247312, epsilon = 1e-14);
    }

    #[test]
    fn simplicity_examples() {
        assert!(poly(&[(0., 0.), (1., 0.), (1., 1.), (0., 1.)]).is_simple());
        let bow = poly(&[(0., 0.), (1., 1.), (1., 0.), (0., 1.)]).simplicity().unwrap();
        assert_eq!((bow.first_edge, bow.second_edge), (0, 2));
        assert_eq!(bow.to_string(), "edges 0 and 2 intersect");
        let rep = poly(&[(0., 0.), (1., 0.), (0., 0.), (0., 1.)]).simplicity().unwrap();
        assert_eq!(rep.kind, ViolationKind::RepeatedVertex);
        assert!(!poly(&[(0., 0.), (0., 1.), (0., 0.5)]).is_simple());
        // vertex touching a non-adjacent edge
        assert!(!poly(&[(0., 0.), (2., 0.), (1., 0.), (1., 1.)]).is_simple());
    }

    #[test]
    fn containment() {
        let d = ConvexBody::unit_disk(Metric::Euclidean);
        assert!(pentagon().contained_in(&d).unwrap());
        assert!(!poly(&[(0., 0.), (1.000001, 0.), (0., 0.5)]).contained_in(&d).unwrap());
        let h = 0.5f64.sqrt();
        assert!(poly(&[(h, h), (-h, h), (-h, -h), (h, -h)]).contained_in(&d).unwrap());
    }

    #[test]
    fn uncross_bowtie() {
        let out = poly(&[(0., 0.), (1., 1.), (1., 0.), (0., 1.)]).uncross(10).unwrap();
        assert_eq!(out, poly(&[(0., 0.), (1., 0.), (1., 1.), (0., 1.)]));
        let sq = poly(&[(0., 0.), (1., 0.), (1., 1.), (0., 1.)]);
        assert_eq!(sq.uncross(10).unwrap(), sq);
    }

    #[test]
    fn incremental_check_matches_full() {
        let mut p = pentagon().into_vertices();
        p[2] = Point::euclidean(1.5, 0.2);
        let lin: Vec<Vec2> = p.iter().map(Point::linear).collect();
        let full = ClosedPolygon::new(p.clone()).unwrap().is_simple();
        assert_eq!(still_simple_after_move(&p, &lin, 2), full);
        assert!(!full);
    }
}
