use thiserror::Error;

use crate::simple_polygon::{ClosedPolygon, Violation};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("metric mismatch")]
    MetricMismatch,
    #[error("degenerate segment")]
    DegenerateSegment,
    #[error("coincident points")]
    CoincidentPoints,
    #[error("point ({0}, {1}) is not inside the Poincaré disk")]
    OutsideModel(f64, f64),
    #[error("invalid body: {0}")]
    InvalidBody(String),
    #[error("invalid polygon: {0}")]
    InvalidPolygon(String),
    #[error("origin outside body")]
    OriginOutsideBody,
    #[error("point outside body")]
    PointOutsideBody,
    #[error("infeasible hypercycle")]
    InfeasibleHypercycle,
    #[error("point is off the hypercycle (distance error {0:e})")]
    OffHypercycle(f64),
    #[error("n must be odd and ≥ 3 (got {0})")]
    InvalidN(usize),
    #[error("parity argument requires odd n (got {0})")]
    ParityRequiresOdd(usize),
    #[error("not simple: {0}")]
    NotSimple(Violation),
    #[error("polygon is not contained in the body (vertex {0})")]
    NotContained(usize),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("certificate search failed; candidate scores {scores:?} vs perimeter {perimeter}")]
    CertificateSearchFailed { perimeter: f64, scores: Vec<f64> },
    #[error("uncrossing did not reach a simple polygon within {passes} passes")]
    UncrossExhausted {
        passes: usize,
        partial: Box<ClosedPolygon>,
    },
    #[error("random polygon generation failed after {0} rounds")]
    GenerationFailed(usize),
    #[error("construction failed at eps = {eps}: {reason}; try a smaller eps")]
    Construction { eps: f64, reason: String },
    #[error("counterexample: perimeter {perimeter} exceeds bound {bound}")]
    Counterexample {
        perimeter: f64,
        bound: f64,
        polygon: Box<ClosedPolygon>,
    },
    #[error("unknown solver '{name}' (available: {available})")]
    UnknownSolver { name: String, available: String },
    #[error("solver '{solver}' does not support this body with n = {n}")]
    UnsupportedSolver { solver: String, n: usize },
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}
