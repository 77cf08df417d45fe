//! Numeric forms of the inequalities the domination argument relies on.

use crate::error::{Error, Result};
use crate::metric_plane::{dist, in_convex_hull, orthogonal_project, Geodesic, Point};
use crate::tolerance;

fn require(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Precondition(what.into()))
    }
}

/// `RHS − LHS` of
/// `5 + d(a, p_a) + d(p_a, c) ≤ 5·d(p, c) + d(a, p) + d(a, c)`
/// with `p = (0,0)`, `p_a = (0, θ_a)`, `a = (ω_a, θ_a)`, `c = (ω_c, θ_c)`.
pub fn eu_inequality_gap(theta_a: f64, omega_a: f64, theta_c: f64, omega_c: f64) -> Result<f64> {
    require((0.0..=0.5).contains(&theta_a), "0 ≤ θ_a ≤ 1/2")?;
    require(theta_c > 1.0, "θ_c > 1")?;
    require(omega_a >= 0.0, "ω_a ≥ 0")?;
    require(omega_c >= 0.0, "ω_c ≥ 0")?;
    require(omega_c >= omega_a / 2.0, "ω_c ≥ ω_a/2")?;
    let ac = (omega_c - omega_a).hypot(theta_c - theta_a);
    require(ac < 1.0, "dist(a, c) < 1")?;
    let lhs = 5.0 + omega_a + omega_c.hypot(theta_c - theta_a);
    let rhs = 5.0 * omega_c.hypot(theta_c) + omega_a.hypot(theta_a) + ac;
    Ok(rhs - lhs)
}

/// `5ω_c/√(ω_c²+θ_c²) − 2ω_c/√(ω_c²+(θ_c−θ_a)²)`.
pub fn eu_derivative_i(theta_a: f64, theta_c: f64, omega_c: f64) -> Result<f64> {
    require(theta_c > 0.0, "θ_c > 0")?;
    require(theta_a >= 0.0 && theta_a <= theta_c / 2.0, "0 ≤ θ_a ≤ θ_c/2")?;
    require(omega_c >= 0.0, "ω_c ≥ 0")?;
    if omega_c == 0.0 {
        return Ok(0.0);
    }
    Ok(5.0 * omega_c / omega_c.hypot(theta_c) - 2.0 * omega_c / omega_c.hypot(theta_c - theta_a))
}

/// `A·x / √(x²·B − 1)` at `x = cosh θ` with `A = sinh ω`, `B = cosh² ω`,
/// evaluated as `sinh²θ + cosh²θ·sinh²ω` under the root.
fn hy_term(theta: f64, omega: f64) -> f64 {
    let (ch, sh) = (theta.cosh(), theta.sinh());
    let so = omega.sinh();
    let denom = (sh * sh + ch * ch * so * so).sqrt();
    if denom > 0.0 {
        ch * so / denom
    } else {
        0.0
    }
}

/// `5 cosh θ_c sinh ω_c / √(cosh²θ_c cosh²ω_c − 1)
///  − 2 cosh(θ_c−θ_a) sinh ω_c / √(cosh²(θ_c−θ_a) cosh²ω_c − 1)`,
/// with the limit value 0 at `ω_c = 0`.
pub fn hy_derivative_i(theta_a: f64, theta_c: f64, omega_c: f64) -> Result<f64> {
    require(theta_c > 0.0, "θ_c > 0")?;
    require(theta_a >= 0.0 && theta_a <= theta_c / 2.0, "0 ≤ θ_a ≤ θ_c/2")?;
    require(omega_c >= 0.0, "ω_c ≥ 0")?;
    if omega_c == 0.0 {
        return Ok(0.0);
    }
    Ok(5.0 * hy_term(theta_c, omega_c) - 2.0 * hy_term(theta_c - theta_a, omega_c))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Case1Outcome {
    /// `dist(a, b) ≤ dist(p, b)`.
    AviaP,
    /// `dist(b, c) ≤ dist(b, q)`.
    CviaQ,
    Neither,
}

impl Case1Outcome {
    pub fn as_str(self) -> &'static str {
        match self {
            Case1Outcome::AviaP => "a-via-p",
            Case1Outcome::CviaQ => "c-via-q",
            Case1Outcome::Neither => "neither",
        }
    }
}

fn hypothesis(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Hypothesis(what.into()))
    }
}

/// Which of the two short-side dominations holds in a hyperbolic Case-1
/// configuration.
///
/// Hypotheses, in Fermi coordinates `(t, s)` along `L(p, q)` from `p`:
/// `dist(a, c) < dist(p, q)`; `a, b, c` on one closed side of the line;
/// `0 ≤ t_a ≤ t_b ≤ t_c ≤ dist(p, q)`; `b` outside the quadrilateral
/// `p_a, p_c, c, a` spanned by `a, c` and their feet.
pub fn hy_case1_domination(p: &Point, q: &Point, a: &Point, b: &Point, c: &Point) -> Result<Case1Outcome> {
    hypothesis(super::is_hyperbolic(&[p, q, a, b, c])?, "hyperbolic metric")?;
    let rho = dist(p, q);
    hypothesis(dist(a, c) < rho, "dist(a, c) < dist(p, q)")?;
    let line = Geodesic::new(*p, *q)?;
    let [fa, fb, fc] = [a, b, c].map(|x| line.fermi_unchecked(x));
    let eps = tolerance::INCIDENCE;
    let upper = [fa, fb, fc].iter().all(|f| f.1 >= -eps);
    let lower = [fa, fb, fc].iter().all(|f| f.1 <= eps);
    hypothesis(upper || lower, "a, b, c in one closed half-plane of L(p, q)")?;
    hypothesis(fc.0 >= -eps && fc.0 <= rho + eps, "c in the strip S(p, q)")?;
    hypothesis(fa.0 >= -eps && fa.0 <= fb.0 + eps && fb.0 <= fc.0 + eps, "0 ≤ t_a ≤ t_b ≤ t_c")?;
    let pa = orthogonal_project(a, &line)?;
    let pc = orthogonal_project(c, &line)?;
    hypothesis(!in_convex_hull(b, &[pa, pc, *c, *a])?, "b outside conv{p_a, p_c, a, c}")?;
    let slack = tolerance::PREDICATE;
    Ok(if dist(a, b) <= dist(p, b) + slack {
        Case1Outcome::AviaP
    } else if dist(b, c) <= dist(b, q) + slack {
        Case1Outcome::CviaQ
    } else {
        Case1Outcome::Neither
    })
}
