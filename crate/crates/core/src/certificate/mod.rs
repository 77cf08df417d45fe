//! Dominating inscribed triangles for concrete simple polygons.
//!
//! The polygon is normalized so its longest edge `[p, q]` sits on a fixed
//! axis, the projections `θ_i` of the vertices onto that axis give increments
//! `ζ_i = θ_{i+1} − θ_i`, and an odd-length cyclic sequence always has two
//! consecutive increments of equal sign. The three vertices `a, b, c` around
//! that spot together with `p, q` contain the vertices of a triangle whose
//! score dominates the perimeter; all ten triples are scored and the tightest
//! valid one is kept.

mod inequalities;
pub mod sweeps;

pub use inequalities::{eu_derivative_i, eu_inequality_gap, hy_case1_domination, hy_derivative_i, Case1Outcome};

use std::fmt;

use crate::convex_body::ConvexBody;
use crate::error::{Error, Result};
use crate::metric_plane::{dist, same_metric, Geodesic, Isometry, Metric, Point};
use crate::simple_polygon::ClosedPolygon;
use crate::tolerance;
use crate::triangle_bound::{inscribe_push, score_sorted, sort_sides, InscribedTriangle};

/// Longest-edge normalization of a polygon.
#[derive(Clone, Debug)]
pub struct Normalization {
    /// Index in the input of the first vertex of the longest edge.
    pub longest_edge: usize,
    /// Maps the input to the normalized frame.
    pub isometry: Isometry,
    /// `1/ℓ` in the Euclidean plane, 1 in the hyperbolic plane.
    pub scale: f64,
    /// Length of the longest edge in input units.
    pub rho: f64,
    /// Normalized polygon, relabeled so its edge 0 is the longest edge.
    pub polygon: ClosedPolygon,
}

impl Normalization {
    /// Projections of the normalized vertices onto the line through edge 0.
    pub fn theta(&self) -> Vec<f64> {
        let v = self.polygon.vertices();
        let axis = Geodesic::new(v[0], v[1]).expect("longest edge has positive length");
        v.iter().map(|x| axis.fermi_unchecked(x).0).collect()
    }

    /// Maps a point of the normalized frame back to input coordinates.
    pub fn restore(&self, p: &Point) -> Result<Point> {
        self.isometry.inverse().apply(p)
    }
}

/// Moves the longest edge to `[(0,0), (0,1)]` (Euclidean, after scaling) or
/// to the origin and the positive second axis (hyperbolic).
pub fn normalize(polygon: &ClosedPolygon) -> Result<Normalization> {
    let n = polygon.len();
    if n % 2 == 0 {
        return Err(Error::ParityRequiresOdd(n));
    }
    if let Some(v) = polygon.simplicity() {
        return Err(Error::NotSimple(v));
    }
    let k = polygon.longest_edge();
    let rotated = polygon.rotated(k);
    let v = rotated.vertices();
    let isometry = Isometry::normalizing(&v[0], &v[1])?;
    let mapped = v.iter().map(|x| isometry.apply(x)).collect::<Result<Vec<_>>>()?;
    Ok(Normalization {
        longest_edge: k,
        scale: isometry.scale_factor(),
        rho: dist(&v[0], &v[1]),
        isometry,
        polygon: ClosedPolygon::new(mapped)?,
    })
}

/// Cyclic increments `ζ_i = θ_{i+1} − θ_i`.
pub fn zeta(theta: &[f64]) -> Vec<f64> {
    let n = theta.len();
    (0..n).map(|i| theta[(i + 1) % n] - theta[i]).collect()
}

/// Smallest `j ≥ 1` with `ζ_{j−1}·ζ_j ≥ 0`, indices mod `n`; zero counts as
/// either sign. `None` for strictly alternating sequences, which have even length.
pub fn monotone_index(zeta: &[f64]) -> Option<usize> {
    let n = zeta.len();
    (1..=n).find(|&j| zeta[j - 1] * zeta[j % n] >= 0.0)
}

/// [`monotone_index`] on the increments of `theta`, for odd lengths.
pub fn find_monotone_triple(theta: &[f64]) -> Result<usize> {
    let n = theta.len();
    if n % 2 == 0 || n < 3 {
        return Err(Error::ParityRequiresOdd(n));
    }
    Ok(monotone_index(&zeta(theta)).expect("odd cyclic sequences cannot alternate strictly"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    P,
    Q,
    A,
    B,
    C,
}

impl Label {
    pub const ALL: [Label; 5] = [Label::P, Label::Q, Label::A, Label::B, Label::C];

    pub fn as_str(self) -> &'static str {
        match self {
            Label::P => "p",
            Label::Q => "q",
            Label::A => "a",
            Label::B => "b",
            Label::C => "c",
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Which step of the case analysis a triple belongs to. Informational only.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CaseTag {
    /// `{a, b, c}`, the long-chord case.
    ChordAc,
    /// `{p, b, c}`.
    ApexP,
    /// `{a, b, q}`.
    ApexQ,
    /// `{a, c, q}`.
    BisectorCq,
    /// `{p, b, q}`.
    StripOuterB,
    /// `{p, c, q}`.
    StripInnerC,
    /// `{p, a, q}`.
    MidlineA,
    /// `{p, a, c}`.
    CrucialInequality,
    Unlisted,
}

impl CaseTag {
    pub fn of(triple: [Label; 3]) -> Self {
        use Label::*;
        let mut t = triple;
        t.sort();
        match t {
            [A, B, C] => CaseTag::ChordAc,
            [P, B, C] => CaseTag::ApexP,
            [Q, A, B] => CaseTag::ApexQ,
            [Q, A, C] => CaseTag::BisectorCq,
            [P, Q, B] => CaseTag::StripOuterB,
            [P, Q, C] => CaseTag::StripInnerC,
            [P, Q, A] => CaseTag::MidlineA,
            [P, A, C] => CaseTag::CrucialInequality,
            _ => CaseTag::Unlisted,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            CaseTag::ChordAc => "chord-ac",
            CaseTag::ApexP => "apex-p",
            CaseTag::ApexQ => "apex-q",
            CaseTag::BisectorCq => "bisector-cq",
            CaseTag::StripOuterB => "strip-outer-b",
            CaseTag::StripInnerC => "strip-inner-c",
            CaseTag::MidlineA => "midline-a",
            CaseTag::CrucialInequality => "crucial-inequality",
            CaseTag::Unlisted => "unlisted",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Candidate {
    pub triple: [Label; 3],
    pub points: [Point; 3],
    /// Sorted descending.
    pub sides: [f64; 3],
    pub score: f64,
}

impl Candidate {
    pub fn case(&self) -> CaseTag {
        CaseTag::of(self.triple)
    }
}

/// The ten triples over `{p, q, a, b, c}` with their scores, ascending by
/// score (ties keep label order).
pub fn candidate_triples(points: [Point; 5], n: usize) -> Result<Vec<Candidate>> {
    let refs: Vec<&Point> = points.iter().collect();
    same_metric(&refs)?;
    if n < 3 || n % 2 == 0 {
        return Err(Error::InvalidN(n));
    }
    let mut out = Vec::with_capacity(10);
    for i in 0..5 {
        for j in i + 1..5 {
            for k in j + 1..5 {
                let pts = [points[i], points[j], points[k]];
                let sides = sort_sides([dist(&pts[0], &pts[1]), dist(&pts[1], &pts[2]), dist(&pts[0], &pts[2])]);
                out.push(Candidate {
                    triple: [Label::ALL[i], Label::ALL[j], Label::ALL[k]],
                    points: pts,
                    sides,
                    score: score_sorted(n, sides),
                });
            }
        }
    }
    out.sort_by(|x, y| x.score.total_cmp(&y.score));
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct CertificateTrace {
    pub longest_edge: usize,
    pub scale: f64,
    pub rho: f64,
    pub zeta: Vec<f64>,
    pub j: usize,
    /// Whether `a` and `c` were swapped to make `θ_a ≤ θ_c`.
    pub flipped: bool,
    /// Input indices of `a`, `b`, `c`.
    pub abc_indices: [usize; 3],
    /// `p, q, a, b, c` in input coordinates.
    pub points: [Point; 5],
    pub triple: [Label; 3],
    pub case: CaseTag,
    /// Score of the chosen triple before pushing it to the boundary.
    pub raw_score: f64,
    pub candidates: Vec<Candidate>,
}

#[derive(Clone, Debug)]
pub struct TriangleCertificate {
    pub triangle: InscribedTriangle,
    pub bound: f64,
    pub perimeter: f64,
    pub slack: f64,
    pub trace: CertificateTrace,
}

/// A triangle inscribed in `body` whose score is at least the perimeter of
/// `polygon`.
pub fn certify(polygon: &ClosedPolygon, body: &ConvexBody) -> Result<TriangleCertificate> {
    let n = polygon.len();
    if polygon.metric() != body.metric() {
        return Err(Error::MetricMismatch);
    }
    if let Some(v) = polygon.simplicity() {
        return Err(Error::NotSimple(v));
    }
    if n % 2 == 0 {
        return Err(Error::ParityRequiresOdd(n));
    }
    if let Some(k) = polygon.first_outside(body)? {
        return Err(Error::NotContained(k));
    }
    let perimeter = polygon.perimeter();
    let tol = tolerance::property_slack(perimeter);

    let norm = normalize(polygon)?;
    let theta = norm.theta();
    let zeta = zeta(&theta);
    let j = find_monotone_triple(&theta)?;
    let (mut ia, ib, mut ic) = (j - 1, j % n, (j + 1) % n);
    let flipped = theta[ia] > theta[ic];
    if flipped {
        std::mem::swap(&mut ia, &mut ic);
    }
    let rotated = polygon.rotated(norm.longest_edge);
    let v = rotated.vertices();
    let points = [v[0], v[1], v[ia], v[ib], v[ic]];
    let candidates = candidate_triples(points, n)?;

    let chosen = if dist(&points[2], &points[4]) >= norm.rho {
        candidates.iter().find(|c| c.case() == CaseTag::ChordAc)
    } else {
        tightest_valid(&candidates, perimeter - tol)
    };
    let fail = || Error::CertificateSearchFailed {
        perimeter,
        scores: candidates.iter().map(|c| c.score).collect(),
    };
    let chosen = chosen.filter(|c| c.score >= perimeter - tol).ok_or_else(fail)?;
    let triangle = inscribe_push(body, chosen.points)?;
    let bound = score_sorted(n, triangle.sides());
    if bound < perimeter - tol {
        return Err(fail());
    }
    let k = norm.longest_edge;
    Ok(TriangleCertificate {
        bound,
        perimeter,
        slack: bound - perimeter,
        trace: CertificateTrace {
            longest_edge: k,
            scale: norm.scale,
            rho: norm.rho,
            zeta,
            j,
            flipped,
            abc_indices: [(ia + k) % n, (ib + k) % n, (ic + k) % n],
            points,
            triple: chosen.triple,
            case: chosen.case(),
            raw_score: chosen.score,
            candidates: candidates.clone(),
        },
        triangle,
    })
}

/// Smallest score above `threshold`; near-ties go to the first triple in label order.
fn tightest_valid(candidates: &[Candidate], threshold: f64) -> Option<&Candidate> {
    let min = candidates.iter().filter(|c| c.score >= threshold).map(|c| c.score).reduce(f64::min)?;
    let cut = min + tolerance::PREDICATE * min.abs().max(1.0);
    candidates
        .iter()
        .filter(|c| c.score >= threshold && c.score <= cut)
        .min_by_key(|c| c.triple)
}

pub(crate) fn is_hyperbolic(points: &[&Point]) -> Result<bool> {
    Ok(same_metric(points)? == Metric::Hyperbolic)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monotone_scan_examples() {
        assert_eq!(find_monotone_triple(&[0.0, 1.0, 0.3, 0.6, 0.2]).unwrap(), 4);
        assert_eq!(find_monotone_triple(&[0.0, 1.0, 2.0, 3.0, 4.0]).unwrap(), 1);
        assert!(matches!(find_monotone_triple(&[0.0, 1.0, 0.0, 1.0]), Err(Error::ParityRequiresOdd(4))));
        assert_eq!(monotone_index(&[1.0, -1.0, 1.0, -1.0]), None);
        // a zero at position 2 pairs with either neighbour
        let j = monotone_index(&[1.0, -1.0, 0.0, 1.0, -1.0]).unwrap();
        assert!(j == 2 || j == 3);
    }

    #[test]
    fn case_tags_by_vertex_set() {
        use Label::*;
        assert_eq!(CaseTag::of([C, A, B]), CaseTag::ChordAc);
        assert_eq!(CaseTag::of([P, C, B]), CaseTag::ApexP);
        assert_eq!(CaseTag::of([P, A, B]), CaseTag::Unlisted);
    }
}
