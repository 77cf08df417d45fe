use rayon::prelude::*;

use super::{score_sorted, sort_sides, BoundResult, Diagnostics, InscribedTriangle, Witness};
use crate::convex_body::ConvexBody;
use crate::error::{Error, Result};
use crate::metric_plane::dist;

pub const DEFAULT_GRID: usize = 96;
pub const DEFAULT_REFINE_ITERS: usize = 200;
const CANDIDATES: usize = 8;
const STOP_MOVE: f64 = 1e-10;

/// Grid search over boundary parameter triples followed by derivative-free
/// refinement of the best few cells.
pub fn optimize_bound(body: &ConvexBody, n: usize, grid: usize, refine_iters: usize) -> Result<BoundResult> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::InvalidN(n));
    }
    if grid < 24 {
        return Err(Error::Precondition(format!("grid must be at least 24, got {grid}")));
    }
    let pts: Vec<_> = (0..grid).map(|i| body.boundary_point(i as f64 / grid as f64)).collect();
    let d: Vec<Vec<f64>> = pts.iter().map(|a| pts.iter().map(|b| dist(a, b)).collect()).collect();

    // per-i top lists, merged in index order so the outcome is partition independent
    let per_row: Vec<Vec<(f64, [usize; 3])>> = (0..grid)
        .into_par_iter()
        .map(|i| {
            let mut top = Vec::with_capacity(CANDIDATES + 1);
            for j in i + 1..grid {
                for k in j + 1..grid {
                    let s = score_sorted(n, sort_sides([d[i][j], d[j][k], d[i][k]]));
                    push_top(&mut top, (s, [i, j, k]));
                }
            }
            top
        })
        .collect();
    let mut top = Vec::with_capacity(CANDIDATES + 1);
    for row in per_row {
        for c in row {
            push_top(&mut top, c);
        }
    }

    let h0 = 1.0 / grid as f64;
    let f = |t: &[f64]| score_sorted(n, InscribedTriangle::from_params(body, [t[0], t[1], t[2]]).sides);
    let refined: Vec<Refined> = top
        .par_iter()
        .map(|&(_, idx)| {
            let x0 = idx.map(|i| i as f64 * h0);
            refine(&f, &x0, &DIRECTIONS_3, h0, refine_iters)
        })
        .collect();

    let mut best: Option<(f64, [f64; 3], &Refined)> = None;
    for r in &refined {
        let key = canonical(&r.x);
        let better = match &best {
            None => true,
            Some((v, k, _)) => r.value > *v || (r.value == *v && key < *k),
        };
        if better {
            best = Some((r.value, key, r));
        }
    }
    let (_, params, r) = best.expect("at least one grid candidate");
    let triangle = InscribedTriangle::from_params(body, params);
    let evaluations = grid * (grid - 1) * (grid - 2) / 6 + refined.iter().map(|r| r.evaluations).sum::<usize>();
    Ok(BoundResult {
        value: score_sorted(n, triangle.sides),
        n,
        solver: "grid-refine".into(),
        witness: Witness::Triangle(triangle),
        diagnostics: Diagnostics {
            grid,
            candidates: refined.len(),
            refine_rounds: refined.iter().map(|r| r.rounds).max().unwrap_or(0),
            param_tolerance: r.last_move,
            evaluations,
        },
    })
}

/// Keeps the `CANDIDATES` best entries: higher score first, then smaller indices.
fn push_top(top: &mut Vec<(f64, [usize; 3])>, c: (f64, [usize; 3])) {
    let before = |a: &(f64, [usize; 3]), b: &(f64, [usize; 3])| a.0 > b.0 || (a.0 == b.0 && a.1 < b.1);
    if top.len() == CANDIDATES && !before(&c, top.last().unwrap()) {
        return;
    }
    let pos = top.iter().position(|e| before(&c, e)).unwrap_or(top.len());
    top.insert(pos, c);
    top.truncate(CANDIDATES);
}

/// Sorted parameters in `[0, 1)`, for deterministic tie-breaking.
fn canonical(x: &[f64]) -> [f64; 3] {
    let mut k = [x[0].rem_euclid(1.0), x[1].rem_euclid(1.0), x[2].rem_euclid(1.0)];
    k.sort_by(f64::total_cmp);
    k
}

const DIRECTIONS_3: [[f64; 3]; 7] = [
    [1.0, 0.0, 0.0],
    [0.0, 1.0, 0.0],
    [0.0, 0.0, 1.0],
    [1.0, 1.0, 1.0],
    [1.0, -1.0, 0.0],
    [0.0, 1.0, -1.0],
    [1.0, 0.0, -1.0],
];

pub(super) struct Refined {
    pub x: Vec<f64>,
    pub value: f64,
    pub rounds: usize,
    pub last_move: f64,
    pub evaluations: usize,
}

/// Cyclic line search along fixed directions, each by golden section inside a
/// window of half-width `h` that tracks the size of the last moves.
pub(super) fn refine<F, const D: usize>(f: &F, x0: &[f64], dirs: &[[f64; D]], h0: f64, max_rounds: usize) -> Refined
where
    F: Fn(&[f64]) -> f64,
{
    let mut x = x0.to_vec();
    let mut value = f(&x);
    let mut h = h0;
    let mut evaluations = 1;
    let mut rounds = 0;
    let mut last_move = f64::INFINITY;
    while rounds < max_rounds {
        rounds += 1;
        let mut moved = 0.0f64;
        for dir in dirs {
            let at = |s: f64| -> Vec<f64> { x.iter().zip(dir).map(|(xi, di)| xi + s * di).collect() };
            let (s, v, evals) = golden_max(|s| f(&at(s)), -h, h, 1e-13);
            evaluations += evals;
            if v > value {
                x = at(s);
                value = v;
                moved = moved.max(s.abs());
            }
        }
        last_move = moved;
        if moved < STOP_MOVE {
            break;
        }
        h = (2.0 * moved).clamp(1e-11, 0.25);
    }
    Refined { x, value, rounds, last_move, evaluations }
}

/// Golden-section search for a maximum on `[a, b]`; the endpoints and the
/// midpoint are also considered so kinks at the window edge are not lost.
pub(super) fn golden_max<F: Fn(f64) -> f64>(f: F, mut a: f64, mut b: f64, tol: f64) -> (f64, f64, usize) {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut evals = 0;
    let mut best = (0.0, f(0.0));
    evals += 1;
    let consider = |s: f64, v: f64, best: &mut (f64, f64)| {
        if v > best.1 {
            *best = (s, v);
        }
    };
    let (fa, fb) = (f(a), f(b));
    evals += 2;
    consider(a, fa, &mut best);
    consider(b, fb, &mut best);
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    evals += 2;
    while (b - a).abs() > tol {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
        evals += 1;
        if evals > 200 {
            break;
        }
    }
    consider(c, fc, &mut best);
    consider(d, fd, &mut best);
    (best.0, best.1, evals)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_finds_parabola_peak() {
        let (s, v, _) = golden_max(|x| 1.0 - (x - 0.3).powi(2), -1.0, 1.0, 1e-13);
        assert!((s - 0.3).abs() < 1e-7);
        assert!((v - 1.0).abs() < 1e-14);
    }

    #[test]
    fn top_list_order() {
        let mut top = Vec::new();
        for (s, i) in [(1.0, 5), (3.0, 2), (3.0, 1), (2.0, 0)] {
            push_top(&mut top, (s, [i, 9, 10]));
        }
        assert_eq!(top.iter().map(|e| e.1[0]).collect::<Vec<_>>(), vec![1, 2, 0, 5]);
    }
}
