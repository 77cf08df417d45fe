//! The bound `(n-2)·α + β + γ` maximized over inscribed triangles.

mod disk;
mod inscribe;
mod optimize;
mod solver;

pub use disk::disk_bound_1d;
pub use inscribe::inscribe_push;
pub use optimize::{optimize_bound, DEFAULT_GRID, DEFAULT_REFINE_ITERS};
pub use solver::{compute_bound, BoundSolver, SolverRegistry, SolverSettings};

use crate::convex_body::ConvexBody;
use crate::error::{Error, Result};
use crate::metric_plane::{dist, Point};

/// `(n-2)·α + β + γ` with the sides sorted so that `α ≥ β ≥ γ`.
pub fn triangle_score(n: usize, sides: [f64; 3]) -> Result<f64> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::InvalidN(n));
    }
    Ok(score_sorted(n, sort_sides(sides)))
}

pub(crate) fn score_sorted(n: usize, s: [f64; 3]) -> f64 {
    (n - 2) as f64 * s[0] + s[1] + s[2]
}

pub(crate) fn sort_sides(mut s: [f64; 3]) -> [f64; 3] {
    s.sort_by(|a, b| b.total_cmp(a));
    s
}

/// Sides `[d(a,b), d(b,c), d(a,c)]`, sorted descending.
pub(crate) fn sides_of(p: &[Point; 3]) -> [f64; 3] {
    sort_sides([dist(&p[0], &p[1]), dist(&p[1], &p[2]), dist(&p[0], &p[2])])
}

/// A triangle whose vertices lie on the boundary of a body.
#[derive(Clone, Debug, PartialEq)]
pub struct InscribedTriangle {
    vertices: [Point; 3],
    params: [f64; 3],
    sides: [f64; 3],
}

impl InscribedTriangle {
    /// Checks that every vertex is on `bd C`.
    pub fn new(body: &ConvexBody, vertices: [Point; 3]) -> Result<Self> {
        if let Some(k) = vertices.iter().position(|v| !body.is_on_boundary(v)) {
            return Err(Error::Precondition(format!("triangle vertex {k} is not on the body boundary")));
        }
        Ok(Self::unchecked(body, vertices))
    }

    pub(crate) fn unchecked(body: &ConvexBody, vertices: [Point; 3]) -> Self {
        let params = [
            body.boundary_param(&vertices[0]),
            body.boundary_param(&vertices[1]),
            body.boundary_param(&vertices[2]),
        ];
        InscribedTriangle { sides: sides_of(&vertices), vertices, params }
    }

    pub(crate) fn from_params(body: &ConvexBody, params: [f64; 3]) -> Self {
        let vertices = params.map(|t| body.boundary_point(t));
        InscribedTriangle { sides: sides_of(&vertices), vertices, params: params.map(|t| t.rem_euclid(1.0)) }
    }

    pub fn vertices(&self) -> &[Point; 3] {
        &self.vertices
    }

    /// Boundary parameters of the vertices.
    pub fn params(&self) -> [f64; 3] {
        self.params
    }

    /// `[α, β, γ]`, descending.
    pub fn sides(&self) -> [f64; 3] {
        self.sides
    }

    pub fn score(&self, n: usize) -> Result<f64> {
        triangle_score(n, self.sides)
    }

    pub fn perimeter(&self) -> f64 {
        self.sides.iter().sum()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Witness {
    Triangle(InscribedTriangle),
    /// Even `n`: the bound is `n · diam C`, realized near this pair.
    Diameter([Point; 2]),
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Diagnostics {
    pub grid: usize,
    pub candidates: usize,
    pub refine_rounds: usize,
    pub param_tolerance: f64,
    pub evaluations: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoundResult {
    pub value: f64,
    pub n: usize,
    pub solver: String,
    pub witness: Witness,
    pub diagnostics: Diagnostics,
}

impl BoundResult {
    pub fn triangle(&self) -> Option<&InscribedTriangle> {
        match &self.witness {
            Witness::Triangle(t) => Some(t),
            Witness::Diameter(_) => None,
        }
    }

    /// The value recomputed from the witness.
    pub fn recomputed(&self) -> f64 {
        match &self.witness {
            Witness::Triangle(t) => score_sorted(self.n, t.sides),
            Witness::Diameter([a, b]) => self.n as f64 * dist(a, b),
        }
    }
}
