use super::minkowski;
use super::{dist, same_metric, Geodesic, Metric, Point};
use crate::error::{Error, Result};
use crate::tolerance;

/// Curve at constant distance `|offset|` from its reference line.
///
/// The sign of `offset` names the branch (side of the reference line) the
/// hypercycle was constructed on; incidence tests accept either branch, so a
/// zero offset degenerates to the reference line itself.
#[derive(Clone, Copy, Debug)]
pub struct Hypercycle {
    reference: Geodesic,
    offset: f64,
}

impl Hypercycle {
    pub fn new(reference: Geodesic, offset: f64) -> Result<Self> {
        if reference.metric() != Metric::Hyperbolic {
            return Err(Error::MetricMismatch);
        }
        Ok(Hypercycle { reference, offset })
    }

    /// The hypercycle with the given reference line that passes through `c`.
    pub fn through(reference: Geodesic, c: &Point) -> Result<Self> {
        let (_, s) = reference.fermi(c)?;
        Self::new(reference, s)
    }

    pub fn reference_line(&self) -> &Geodesic {
        &self.reference
    }

    pub fn offset(&self) -> f64 {
        self.offset
    }

    /// Point on the signed branch whose foot on the reference line sits at `t`.
    pub fn point_at(&self, t: f64) -> Point {
        self.reference.point_at(t, self.offset)
    }

    /// `| dist(x, reference) − |offset| |`.
    pub fn distance_error(&self, x: &Point) -> Result<f64> {
        let (_, s) = self.reference.fermi(x)?;
        Ok((s.abs() - self.offset.abs()).abs())
    }

    pub fn contains(&self, x: &Point) -> Result<bool> {
        Ok(self.distance_error(x)? <= tolerance::INCIDENCE)
    }
}

/// Hypercycle through `p` and `a` whose reference line is orthogonal to `base`.
///
/// Prefers a single branch containing both points. When the two points cannot
/// share a branch (for example both on `base`), returns the locus whose two
/// branches carry them, with the perpendicular bisector as reference line.
pub fn hypercycle_orthogonal_through(base: &Geodesic, p: &Point, a: &Point) -> Result<Hypercycle> {
    if same_metric(&[&base.anchors()[0], p, a])? != Metric::Hyperbolic {
        return Err(Error::MetricMismatch);
    }
    if dist(p, a) <= tolerance::PREDICATE {
        return Err(Error::CoincidentPoints);
    }
    let nb = base.normal_vector();
    let (ph, ah) = (p.hyperboloid().unwrap(), a.hyperboloid().unwrap());
    let well_spacelike = |v: minkowski::Vec3| {
        let e = minkowski::euclid_norm(v);
        minkowski::mdot(v, v) > tolerance::PREDICATE * e * e
    };
    let same_branch = minkowski::lcross(minkowski::sub(ph, ah), nb);
    let normal = if well_spacelike(same_branch) {
        same_branch
    } else {
        let split = minkowski::lcross(minkowski::add(ph, ah), nb);
        if !well_spacelike(split) {
            return Err(Error::InfeasibleHypercycle);
        }
        split
    };
    let reference = Geodesic::from_normal(normal).ok_or(Error::InfeasibleHypercycle)?;
    Hypercycle::through(reference, p)
}

/// Checks that moving along `h` away from the projection of `x` does not bring
/// the point closer to `x`: if `y2` is at least as far (along `h`) from that
/// projection as `y1`, then `dist(x, y2) ≥ dist(x, y1) − 1e-9`.
pub fn hypercycle_distance_monotone_check(x: &Point, h: &Hypercycle, y1: &Point, y2: &Point) -> Result<bool> {
    same_metric(&[x, y1, y2, &h.reference.anchors()[0]])?;
    let line = &h.reference;
    let (t1, s1) = line.fermi_unchecked(y1);
    let (t2, s2) = line.fermi_unchecked(y2);
    for s in [s1, s2] {
        let err = (s.abs() - h.offset.abs()).abs();
        if err > tolerance::PROPERTY {
            return Err(Error::OffHypercycle(err));
        }
    }
    if h.offset.abs() > tolerance::PROPERTY && s1.signum() != s2.signum() {
        return Err(Error::Precondition("points lie on different branches".into()));
    }
    let (tx, _) = line.fermi_unchecked(x);
    if (t2 - tx).abs() >= (t1 - tx).abs() {
        Ok(dist(x, y2) >= dist(x, y1) - tolerance::PROPERTY)
    } else {
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric_plane::minkowski::mdot;
    use approx::assert_relative_eq;

    fn pc(x: f64, y: f64) -> Point {
        Point::poincare(x, y).unwrap()
    }

    fn real_axis() -> Geodesic {
        Geodesic::new(pc(-0.5, 0.0), pc(0.5, 0.0)).unwrap()
    }

    #[test]
    fn both_points_on_base_use_perpendicular_bisector() {
        let base = real_axis();
        let (p, a) = (pc(-0.2, 0.0), pc(0.6, 0.0));
        let h = hypercycle_orthogonal_through(&base, &p, &a).unwrap();
        assert!(h.contains(&p).unwrap() && h.contains(&a).unwrap());
        let m = crate::metric_plane::geodesic_point(&p, &a, 0.5);
        assert!(h.reference_line().contains(&m).unwrap());
        assert_relative_eq!(h.offset().abs(), dist(&p, &a) / 2.0, epsilon = 1e-10);
    }

    #[test]
    fn zero_offset_on_common_perpendicular() {
        let base = real_axis();
        let perp = Geodesic::new(pc(0.0, 0.0), pc(0.0, 0.5)).unwrap();
        let (p, a) = (perp.point_at(-0.4, 0.0), perp.point_at(0.9, 0.0));
        let h = hypercycle_orthogonal_through(&base, &p, &a).unwrap();
        assert!(h.offset().abs() < 1e-10);
        let n = h.reference_line().normal_vector();
        assert!(mdot(n, base.normal_vector()).abs() < 1e-10);
    }

    #[test]
    fn one_point_variant() {
        let h = Hypercycle::through(real_axis(), &pc(0.1, 0.4)).unwrap();
        assert!(h.contains(&pc(0.1, 0.4)).unwrap());
        assert!(h.offset() > 0.0);
        for t in [-2.0, 0.0, 1.5] {
            assert!(h.contains(&h.point_at(t)).unwrap());
        }
    }

    #[test]
    fn euclidean_reference_rejected() {
        let line = Geodesic::new(Point::euclidean(0., 0.), Point::euclidean(1., 0.)).unwrap();
        assert!(Hypercycle::new(line, 0.5).is_err());
    }

    #[test]
    fn monotone_check_trivial_cases() {
        let h = Hypercycle::through(real_axis(), &pc(0.0, 0.3)).unwrap();
        let x = pc(0.4, -0.2);
        let (tx, _) = h.reference_line().fermi(&x).unwrap();
        let proj = h.point_at(tx);
        let y = h.point_at(tx + 0.7);
        assert!(hypercycle_distance_monotone_check(&x, &h, &proj, &y).unwrap());
        assert!(hypercycle_distance_monotone_check(&x, &h, &y, &y).unwrap());
        let off = pc(0.9, 0.0);
        assert!(matches!(
            hypercycle_distance_monotone_check(&x, &h, &off, &y),
            Err(Error::OffHypercycle(_))
        ));
    }
}
