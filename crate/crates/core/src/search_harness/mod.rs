//! Random simple polygons, perimeter hill climbing, near-extremal
//! constructions and no-counterexample campaigns.

mod construct;

pub use construct::{near_extremal_even, near_extremal_odd};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::certificate::certify;
use crate::convex_body::ConvexBody;
use crate::error::{Error, Result};
use crate::metric_plane::planar::{self, Vec2};
use crate::metric_plane::{dist, Metric, Point};
use crate::simple_polygon::{still_simple_after_move, ClosedPolygon};
use crate::tolerance;
use crate::triangle_bound::{compute_bound, SolverSettings};

const GENERATION_ROUNDS: usize = 50;
const UNCROSS_PASSES: usize = 1000;
pub const DEFAULT_STEP_SCALE: f64 = 0.25;

/// A simple polygon with `n` vertices sampled uniformly (in the linear chart)
/// from `body`, visited in random order and then uncrossed.
pub fn random_simple_polygon(body: &ConvexBody, n: usize, seed: u64) -> Result<ClosedPolygon> {
    random_simple_polygon_with(body, n, &mut ChaCha8Rng::seed_from_u64(seed))
}

pub fn random_simple_polygon_with(body: &ConvexBody, n: usize, rng: &mut impl Rng) -> Result<ClosedPolygon> {
    if n < 3 {
        return Err(Error::InvalidPolygon(format!("need at least 3 vertices, got {n}")));
    }
    let (lo, hi) = body.linear_bounds();
    for _ in 0..GENERATION_ROUNDS {
        let mut pts = Vec::with_capacity(n);
        while pts.len() < n {
            let c = [rng.gen_range(lo[0]..=hi[0]), rng.gen_range(lo[1]..=hi[1])];
            if let Ok(p) = Point::from_linear(body.metric(), c) {
                if body.contains(&p) {
                    pts.push(p);
                }
            }
        }
        pts.shuffle(rng);
        let Ok(raw) = ClosedPolygon::new(pts) else { continue };
        if let Ok(p) = raw.uncross(UNCROSS_PASSES) {
            if p.contained_in(body)? {
                return Ok(p);
            }
        }
    }
    Err(Error::GenerationFailed(GENERATION_ROUNDS))
}

/// Accept-only-improvement hill climbing on the perimeter.
///
/// Each step displaces one vertex in the linear chart by at most
/// `step_scale`, clamping it to the body boundary along the displacement if it
/// left the body. The scale halves after every `steps / 10` rejections.
pub fn local_search_max_perimeter(
    p0: &ClosedPolygon,
    body: &ConvexBody,
    steps: usize,
    step_scale: f64,
    seed: u64,
) -> Result<ClosedPolygon> {
    local_search_with(p0, body, steps, step_scale, &mut ChaCha8Rng::seed_from_u64(seed))
}

pub fn local_search_with(
    p0: &ClosedPolygon,
    body: &ConvexBody,
    steps: usize,
    step_scale: f64,
    rng: &mut impl Rng,
) -> Result<ClosedPolygon> {
    if let Some(v) = p0.simplicity() {
        return Err(Error::NotSimple(v));
    }
    if let Some(k) = p0.first_outside(body)? {
        return Err(Error::NotContained(k));
    }
    let n = p0.len();
    let mut pts = p0.vertices().to_vec();
    let mut lin: Vec<Vec2> = pts.iter().map(Point::linear).collect();
    let mut edges: Vec<f64> = (0..n).map(|i| p0.edge_length(i)).collect();
    let mut scale = step_scale;
    let halve_every = (steps / 10).max(1);
    let mut rejections = 0usize;
    for _ in 0..steps {
        let k = rng.gen_range(0..n);
        let angle = rng.gen_range(0.0..std::f64::consts::TAU);
        let r = scale * rng.gen::<f64>();
        let delta = [r * angle.cos(), r * angle.sin()];
        let accepted = match propose(body, &pts[k], lin[k], delta) {
            None => false,
            Some(cand) => {
                let (prev, next) = ((k + n - 1) % n, (k + 1) % n);
                let e_in = dist(&pts[prev], &cand);
                let e_out = dist(&cand, &pts[next]);
                if e_in + e_out > edges[prev] + edges[k] {
                    let (old_p, old_l) = (pts[k], lin[k]);
                    pts[k] = cand;
                    lin[k] = cand.linear();
                    if still_simple_after_move(&pts, &lin, k) {
                        edges[prev] = e_in;
                        edges[k] = e_out;
                        true
                    } else {
                        pts[k] = old_p;
                        lin[k] = old_l;
                        false
                    }
                } else {
                    false
                }
            }
        };
        if !accepted {
            rejections += 1;
            if rejections % halve_every == 0 {
                scale *= 0.5;
            }
        }
    }
    ClosedPolygon::new(pts)
}

/// Displaced vertex, clamped to the body along the displacement.
fn propose(body: &ConvexBody, from: &Point, from_lin: Vec2, mut delta: Vec2) -> Option<Point> {
    if planar::norm(delta) == 0.0 {
        return None;
    }
    let metric = body.metric();
    loop {
        let target = planar::add(from_lin, delta);
        match Point::from_linear(metric, target) {
            Ok(p) if body.contains(&p) => return Some(p),
            Ok(p) => {
                let x = body.ray_exit(from, &p).ok()?;
                return (dist(&x, from) > tolerance::PREDICATE).then_some(x);
            }
            // beyond the model boundary: shorten, keeping the direction
            Err(_) => {
                debug_assert_eq!(metric, Metric::Hyperbolic);
                delta = planar::scale(delta, 0.5);
            }
        }
    }
}

/// Outcome of one restart of a campaign.
#[derive(Clone, Debug)]
pub struct RestartOutcome {
    pub restart: usize,
    pub perimeter: f64,
    pub polygon: ClosedPolygon,
    pub certificate_slack: f64,
}

#[derive(Clone, Debug)]
pub struct SearchReport {
    pub body: ConvexBody,
    pub n: usize,
    pub bound: f64,
    pub solver: String,
    pub trials: usize,
    pub steps: usize,
    pub seed: u64,
    /// Best restart, by perimeter, lowest index on ties.
    pub best: Option<RestartOutcome>,
    /// Largest `perimeter − bound` over restarts; never positive in a passing campaign.
    pub max_violation: Option<f64>,
    pub min_certificate_slack: Option<f64>,
    pub certified: usize,
    pub perimeters: Vec<f64>,
}

impl SearchReport {
    pub fn best_perimeter(&self) -> Option<f64> {
        self.best.as_ref().map(|b| b.perimeter)
    }
}

#[derive(Clone, Copy)]
pub struct CampaignOptions<'a> {
    /// Worker threads for restarts; `None` runs serially.
    pub threads: Option<usize>,
    pub step_scale: f64,
    /// Called after each restart with its index and final perimeter.
    pub progress: Option<&'a (dyn Fn(usize, f64) + Sync)>,
}

impl Default for CampaignOptions<'_> {
    fn default() -> Self {
        CampaignOptions { threads: None, step_scale: DEFAULT_STEP_SCALE, progress: None }
    }
}

/// `trials` hill-climbing restarts (seeds `seed + i`) against the bound,
/// certifying every final polygon.
pub fn verify_no_counterexample(body: &ConvexBody, n: usize, trials: usize, steps: usize, seed: u64) -> Result<SearchReport> {
    verify_no_counterexample_with(body, n, trials, steps, seed, &CampaignOptions::default())
}

pub fn verify_no_counterexample_with(
    body: &ConvexBody,
    n: usize,
    trials: usize,
    steps: usize,
    seed: u64,
    opts: &CampaignOptions<'_>,
) -> Result<SearchReport> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::InvalidN(n));
    }
    let bound = compute_bound(body, n, &SolverSettings::default())?;
    let run = |i: usize| -> Result<RestartOutcome> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(i as u64));
        let p0 = random_simple_polygon_with(body, n, &mut rng)?;
        let p = local_search_with(&p0, body, steps, opts.step_scale, &mut rng)?;
        let perimeter = p.perimeter();
        if perimeter > bound.value + tolerance::property_slack(bound.value) {
            return Err(Error::Counterexample { perimeter, bound: bound.value, polygon: Box::new(p) });
        }
        let cert = certify(&p, body)?;
        if let Some(cb) = opts.progress {
            cb(i, perimeter);
        }
        Ok(RestartOutcome { restart: i, perimeter, polygon: p, certificate_slack: cert.slack })
    };
    let outcomes: Vec<Result<RestartOutcome>> = match opts.threads {
        Some(t) if t > 1 => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build()
                .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?;
            pool.install(|| (0..trials).into_par_iter().map(run).collect())
        }
        _ => (0..trials).map(run).collect(),
    };
    let outcomes = outcomes.into_iter().collect::<Result<Vec<_>>>()?;

    let mut best: Option<&RestartOutcome> = None;
    for o in &outcomes {
        if best.is_none_or(|b| o.perimeter > b.perimeter) {
            best = Some(o);
        }
    }
    Ok(SearchReport {
        body: body.clone(),
        n,
        bound: bound.value,
        solver: bound.solver.clone(),
        trials,
        steps,
        seed,
        best: best.cloned(),
        max_violation: outcomes.iter().map(|o| o.perimeter - bound.value).reduce(f64::max),
        min_certificate_slack: outcomes.iter().map(|o| o.certificate_slack).reduce(f64::min),
        certified: outcomes.len(),
        perimeters: outcomes.iter().map(|o| o.perimeter).collect(),
    })
}
