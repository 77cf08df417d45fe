//! Numerical tolerance tiers shared by every module.
//!
//! | Tier | Value | Used for |
//! |------|-------|----------|
//! | predicate | 1e-12 | orientation, intersection parameters, distinctness |
//! | incidence | 1e-10 | "point lies on a line / boundary / hypercycle" |
//! | property | 1e-9 | slack allowed in property checks and certificates |

/// Arithmetic noise floor for geometric predicates.
pub const PREDICATE: f64 = 1e-12;

/// Incidence of a computed point on a curve it was constructed on.
pub const INCIDENCE: f64 = 1e-10;

/// Slack for inequalities checked on computed quantities.
pub const PROPERTY: f64 = 1e-9;

/// `PROPERTY` scaled by `max(1, |magnitude|)`.
#[inline]
pub fn property_slack(magnitude: f64) -> f64 {
    PROPERTY * magnitude.abs().max(1.0)
}
