use super::disk::disk_bound_on;
use super::{optimize_bound, BoundResult, Diagnostics, Witness, DEFAULT_GRID, DEFAULT_REFINE_ITERS};
use crate::convex_body::{ConvexBody, Shape};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SolverSettings {
    /// Grid resolution for grid based solvers; `None` keeps the solver default.
    pub grid: Option<usize>,
    pub refine_iters: usize,
}

impl Default for SolverSettings {
    fn default() -> Self {
        SolverSettings { grid: None, refine_iters: DEFAULT_REFINE_ITERS }
    }
}

/// A way of computing the supremal perimeter bound for a body and `n`.
pub trait BoundSolver: Send + Sync {
    fn name(&self) -> &'static str;
    fn description(&self) -> &'static str;
    fn supports(&self, body: &ConvexBody, n: usize) -> bool;
    fn solve(&self, body: &ConvexBody, n: usize, settings: &SolverSettings) -> Result<BoundResult>;
}

struct GridRefine;

impl BoundSolver for GridRefine {
    fn name(&self) -> &'static str {
        "grid-refine"
    }
    fn description(&self) -> &'static str {
        "boundary-parameter grid with golden-section refinement (any body, odd n)"
    }
    fn supports(&self, _: &ConvexBody, n: usize) -> bool {
        n >= 3 && n % 2 == 1
    }
    fn solve(&self, body: &ConvexBody, n: usize, settings: &SolverSettings) -> Result<BoundResult> {
        optimize_bound(body, n, settings.grid.unwrap_or(DEFAULT_GRID), settings.refine_iters)
    }
}

struct DiskCentralAngle;

impl BoundSolver for DiskCentralAngle {
    fn name(&self) -> &'static str {
        "disk-central-angle"
    }
    fn description(&self) -> &'static str {
        "central-angle reduction for disks (odd n)"
    }
    fn supports(&self, body: &ConvexBody, n: usize) -> bool {
        matches!(body.shape(), Shape::Disk { .. }) && n >= 3 && n % 2 == 1
    }
    fn solve(&self, body: &ConvexBody, n: usize, _: &SolverSettings) -> Result<BoundResult> {
        disk_bound_on(body, n)
    }
}

struct EvenDiameter;

impl BoundSolver for EvenDiameter {
    fn name(&self) -> &'static str {
        "even-diameter"
    }
    fn description(&self) -> &'static str {
        "even-n diameter bound n * diam C"
    }
    fn supports(&self, _: &ConvexBody, n: usize) -> bool {
        n >= 4 && n % 2 == 0
    }
    fn solve(&self, body: &ConvexBody, n: usize, _: &SolverSettings) -> Result<BoundResult> {
        if !self.supports(body, n) {
            return Err(Error::UnsupportedSolver { solver: self.name().into(), n });
        }
        let (a, b) = body.diameter_pair();
        Ok(BoundResult {
            value: n as f64 * body.diameter(),
            n,
            solver: self.name().into(),
            witness: Witness::Diameter([a, b]),
            diagnostics: Diagnostics::default(),
        })
    }
}

pub struct SolverRegistry {
    solvers: Vec<Box<dyn BoundSolver>>,
}

impl Default for SolverRegistry {
    fn default() -> Self {
        Self::with_builtin()
    }
}

impl SolverRegistry {
    pub fn empty() -> Self {
        SolverRegistry { solvers: Vec::new() }
    }

    pub fn with_builtin() -> Self {
        let mut r = Self::empty();
        r.register(Box::new(GridRefine));
        r.register(Box::new(DiskCentralAngle));
        r.register(Box::new(EvenDiameter));
        r
    }

    /// Adds a solver, replacing any existing one with the same name.
    pub fn register(&mut self, solver: Box<dyn BoundSolver>) {
        self.solvers.retain(|s| s.name() != solver.name());
        self.solvers.push(solver);
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.solvers.iter().map(|s| s.name()).collect()
    }

    pub fn get(&self, name: &str) -> Option<&dyn BoundSolver> {
        self.solvers.iter().find(|s| s.name() == name).map(|s| s.as_ref())
    }

    /// Looks a solver up by name; `"auto"` picks the even-n bound, the disk
    /// reduction or the general grid search, in that order.
    pub fn resolve(&self, name: &str, body: &ConvexBody, n: usize) -> Result<&dyn BoundSolver> {
        let solver = if name == "auto" {
            let pick = if n % 2 == 0 {
                "even-diameter"
            } else if matches!(body.shape(), Shape::Disk { .. }) {
                "disk-central-angle"
            } else {
                "grid-refine"
            };
            self.get(pick).or_else(|| self.solvers.iter().find(|s| s.supports(body, n)).map(|s| s.as_ref()))
        } else {
            self.get(name)
        };
        let solver = solver.ok_or_else(|| Error::UnknownSolver {
            name: name.into(),
            available: self.names().join(", "),
        })?;
        if n < 3 {
            return Err(Error::InvalidN(n));
        }
        if !solver.supports(body, n) {
            return Err(Error::UnsupportedSolver { solver: solver.name().into(), n });
        }
        Ok(solver)
    }

    pub fn solve(&self, name: &str, body: &ConvexBody, n: usize, settings: &SolverSettings) -> Result<BoundResult> {
        self.resolve(name, body, n)?.solve(body, n, settings)
    }
}

/// The bound with the automatically chosen builtin solver.
pub fn compute_bound(body: &ConvexBody, n: usize, settings: &SolverSettings) -> Result<BoundResult> {
    SolverRegistry::with_builtin().solve("auto", body, n, settings)
}
