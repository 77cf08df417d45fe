//! Acceptance suite. Runs every criterion, prints one line each and exits
//! non-zero if any of them fails.

use std::f64::consts::PI;
use std::process::Command;
use std::time::{Duration, Instant};

use perimax_core::certificate::sweeps::run_sweeps;
use perimax_core::certificate::{certify, find_monotone_triple, monotone_index};
use perimax_core::metric_plane::{angle_at, distance};
use perimax_core::search_harness::{
    near_extremal_even, near_extremal_odd, random_simple_polygon, verify_no_counterexample_with, CampaignOptions,
};
use perimax_core::triangle_bound::{compute_bound, disk_bound_1d, SolverSettings};
use perimax_core::{ConvexBody, Error, Metric, Point};

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn bodies() -> [(&'static str, ConvexBody); 3] {
    [
        ("E2 unit disk", ConvexBody::unit_disk(Metric::Euclidean)),
        ("E2 unit square", ConvexBody::unit_square()),
        ("H2 disk r=1", ConvexBody::unit_disk(Metric::Hyperbolic)),
    ]
}

fn bound(body: &ConvexBody, n: usize) -> f64 {
    compute_bound(body, n, &SolverSettings::default()).unwrap().value
}

fn within_time(o: Outcome, spent: Duration, limit: Duration) -> Outcome {
    if spent > limit {
        outcome(false, format!("{}; took {spent:.1?}, limit {limit:?}", o.detail))
    } else {
        o
    }
}

/// Maximizes `f` on `[a, b]` by golden-section search.
fn golden(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> f64 {
    let r = (5f64.sqrt() - 1.0) / 2.0;
    while b - a > 1e-13 {
        let (x, y) = (b - r * (b - a), a + r * (b - a));
        if f(x) < f(y) {
            a = x;
        } else {
            b = y;
        }
    }
    0.5 * (a + b)
}

/// Σ 2 sin(θ_i/2) over central angles, maximized on a 10⁻⁴ grid and then
/// by pattern search on the simplex.
fn central_angle_oracle(weights: [f64; 3]) -> f64 {
    let f = |t1: f64, t2: f64| {
        let t3 = 2.0 * PI - t1 - t2;
        if t1 < 0.0 || t2 < 0.0 || t3 < 0.0 {
            return f64::NEG_INFINITY;
        }
        let mut s = [2.0 * (t1 / 2.0).sin(), 2.0 * (t2 / 2.0).sin(), 2.0 * (t3 / 2.0).sin()];
        s.sort_by(|a, b| b.total_cmp(a));
        weights[0] * s[0] + weights[1] * s[1] + weights[2] * s[2]
    };
    // coarse 10⁻² pass, then a 10⁻⁴ pass around the winner
    let mut best = (0.0, 0.0, f64::NEG_INFINITY);
    let m = (2.0 * PI / 1e-2) as usize;
    for i in 0..=m {
        for j in 0..=m - i {
            let v = f(i as f64 * 1e-2, j as f64 * 1e-2);
            if v > best.2 {
                best = (i as f64 * 1e-2, j as f64 * 1e-2, v);
            }
        }
    }
    let (c1, c2) = (best.0, best.1);
    for i in -100..=100 {
        for j in -100..=100 {
            let (t1, t2) = (c1 + i as f64 * 1e-4, c2 + j as f64 * 1e-4);
            let v = f(t1, t2);
            if v > best.2 {
                best = (t1, t2, v);
            }
        }
    }
    let mut h = 1e-4;
    while h > 1e-12 {
        let mut moved = false;
        for (d1, d2) in [(1.0, 0.0), (-1.0, 0.0), (0.0, 1.0), (0.0, -1.0), (1.0, -1.0), (-1.0, 1.0)] {
            let (t1, t2) = (best.0 + h * d1, best.1 + h * d2);
            let v = f(t1, t2);
            if v > best.2 {
                best = (t1, t2, v);
                moved = true;
            }
        }
        if !moved {
            h /= 2.0;
        }
    }
    best.2
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let value = bound(&ConvexBody::unit_disk(Metric::Euclidean), 3);
    let spent = start.elapsed();
    let oracle = central_angle_oracle([1.0, 1.0, 1.0]);
    let exact = 3.0 * 3f64.sqrt();
    let ok = (value - exact).abs() <= 1e-6 && (oracle - exact).abs() <= 1e-6;
    within_time(
        outcome(ok, format!("bound {value:.10}, grid oracle {oracle:.10}, 3√3 = {exact:.10}")),
        spent,
        Duration::from_secs(1),
    )
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let r = compute_bound(&ConvexBody::unit_disk(Metric::Euclidean), 5, &SolverSettings::default()).unwrap();
    let spent = start.elapsed();
    // θ2 = θ3 = (2π − θ1)/2 leaves a scalar problem
    let g = |t1: f64| 3.0 * 2.0 * (t1 / 2.0).sin() + 2.0 * 2.0 * ((2.0 * PI - t1) / 4.0).sin();
    let t1 = golden(g, 0.0, 2.0 * PI);
    let oracle = g(t1);
    let stationarity = (3.0 * (t1 / 2.0).cos() - ((2.0 * PI - t1) / 4.0).cos()).abs();
    // the same stationarity on the solver's own triangle
    let t = r.triangle().expect("odd n has a triangle witness");
    let [a, _, _] = t.sides();
    let theta1 = 2.0 * (a / 2.0).asin();
    let solver_stationarity = (3.0 * (theta1 / 2.0).cos() - ((2.0 * PI - theta1) / 4.0).cos()).abs();
    let grid = central_angle_oracle([3.0, 1.0, 1.0]);
    let ok = (r.value - oracle).abs() <= 1e-6
        && (grid - oracle).abs() <= 1e-6
        && stationarity <= 1e-6
        && solver_stationarity <= 1e-4;
    within_time(
        outcome(
            ok,
            format!(
                "bound {:.10}, 1D oracle {oracle:.10}, 2D oracle {grid:.10}, stationarity residual {solver_stationarity:.1e}",
                r.value
            ),
        ),
        spent,
        Duration::from_secs(1),
    )
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let threads = std::thread::available_parallelism().map(|t| t.get()).unwrap_or(1);
    let opts = CampaignOptions { threads: Some(threads), ..CampaignOptions::default() };
    let mut failures = Vec::new();
    let mut min_gap = f64::INFINITY;
    for (name, body) in bodies() {
        for n in [5, 7, 9] {
            match verify_no_counterexample_with(&body, n, 32, 100_000, 1000 + n as u64, &opts) {
                Ok(r) => {
                    let best = r.best_perimeter().unwrap();
                    let slack = r.bound - best;
                    min_gap = min_gap.min(slack / r.bound);
                    if best > r.bound * (1.0 + 1e-9) || r.certified != 32 {
                        failures.push(format!("{name} n={n}: best {best} bound {}", r.bound));
                    }
                }
                Err(e) => failures.push(format!("{name} n={n}: {e}")),
            }
        }
    }
    within_time(
        outcome(
            failures.is_empty(),
            if failures.is_empty() {
                format!("9 campaigns × 32 restarts × 10⁵ steps, all certified; smallest relative gap {min_gap:.2e}")
            } else {
                failures.join("; ")
            },
        ),
        start.elapsed(),
        Duration::from_secs(300),
    )
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let mut worst = 0f64;
    let mut failures = Vec::new();
    for (name, body) in bodies() {
        for n in [5, 7] {
            let b = bound(&body, n);
            let gap = |eps: f64| near_extremal_odd(&body, n, eps).map(|p| b - p.perimeter());
            match (gap(1e-4), gap(5e-5)) {
                (Ok(g1), Ok(g2)) => {
                    worst = worst.max(g1);
                    if g1 > 1e-2 || g2 > g1 + 1e-12 {
                        failures.push(format!("{name} n={n}: gap {g1:.3e} at 1e-4, {g2:.3e} at 5e-5"));
                    }
                }
                (Err(e), _) | (_, Err(e)) => failures.push(format!("{name} n={n}: {e}")),
            }
        }
    }
    within_time(
        outcome(
            failures.is_empty(),
            if failures.is_empty() { format!("largest gap at ε = 1e-4 is {worst:.3e}") } else { failures.join("; ") },
        ),
        start.elapsed(),
        Duration::from_secs(10),
    )
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let mut worst = 0f64;
    let mut failures = Vec::new();
    for (name, body) in [
        ("E2 unit disk", ConvexBody::unit_disk(Metric::Euclidean)),
        ("E2 unit square", ConvexBody::unit_square()),
    ] {
        for n in [4, 6] {
            let target = n as f64 * body.diameter();
            match near_extremal_even(&body, n, 1e-4) {
                Ok(p) => {
                    let gap = target - p.perimeter();
                    worst = worst.max(gap);
                    if gap > 1e-2 {
                        failures.push(format!("{name} n={n}: gap {gap:.3e}"));
                    }
                }
                Err(e) => failures.push(format!("{name} n={n}: {e}")),
            }
        }
    }
    within_time(
        outcome(
            failures.is_empty(),
            if failures.is_empty() { format!("largest gap to n·diam is {worst:.3e}") } else { failures.join("; ") },
        ),
        start.elapsed(),
        Duration::from_secs(10),
    )
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let sweeps = run_sweeps(100_000, 1);
    let wanted = ["eu_inequality_gap", "eu_derivative_I", "hy_derivative_I"];
    let mut parts = Vec::new();
    let mut ok = true;
    for name in wanted {
        match sweeps.iter().find(|s| s.name == name) {
            Some(s) => {
                ok &= s.passed() && s.samples == 100_000 && s.min_margin >= 0.0;
                parts.push(format!("{name} min {:.3e} ({} failures)", s.min_margin, s.failures));
            }
            None => {
                ok = false;
                parts.push(format!("{name} missing"));
            }
        }
    }
    ok &= sweeps.iter().all(|s| s.passed());
    within_time(outcome(ok, parts.join(", ")), start.elapsed(), Duration::from_secs(30))
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut min_slack = f64::INFINITY;
    let mut max_excess = f64::NEG_INFINITY;
    for (name, body) in bodies() {
        for n in [5, 7, 9] {
            let b = bound(&body, n);
            for seed in 0..1000 {
                let p = random_simple_polygon(&body, n, seed).unwrap();
                match certify(&p, &body) {
                    Ok(c) => {
                        min_slack = min_slack.min(c.slack);
                        max_excess = max_excess.max(c.bound - b);
                        if c.slack < -1e-9 || c.bound > b + 1e-6 {
                            failures.push(format!("{name} n={n} seed={seed}: slack {} bound {} vs {b}", c.slack, c.bound));
                        }
                    }
                    Err(e) => failures.push(format!("{name} n={n} seed={seed}: {e}")),
                }
            }
        }
    }
    within_time(
        outcome(
            failures.is_empty(),
            if failures.is_empty() {
                format!("9000 certificates, min slack {min_slack:.3e}, max certificate − optimum {max_excess:.3e}")
            } else {
                format!("{} failures, first: {}", failures.len(), failures[0])
            },
        ),
        start.elapsed(),
        Duration::from_secs(120),
    )
}

fn criterion_8() -> Outcome {
    let s = 1e-3;
    let dirs: Vec<[f64; 2]> = (0..12).map(|k| {
        let t = 0.7 + k as f64 * 0.53;
        [t.cos() * (0.2 + 0.06 * k as f64), t.sin() * (0.9 - 0.05 * k as f64)]
    }).collect();
    let mut worst = 0f64;
    // the Poincaré metric is 2|dx| at the origin
    for a in &dirs {
        for b in &dirs {
            if a == b {
                continue;
            }
            let h = distance(&Point::poincare(s * a[0], s * a[1]).unwrap(), &Point::poincare(s * b[0], s * b[1]).unwrap()).unwrap();
            let e = 2.0 * s * (a[0] - b[0]).hypot(a[1] - b[1]);
            worst = worst.max((h - e).abs() / e);
        }
    }
    for w in dirs.windows(3) {
        let hp = |c: [f64; 2]| Point::poincare(s * c[0], s * c[1]).unwrap();
        let ep = |c: [f64; 2]| Point::euclidean(c[0], c[1]);
        let h = angle_at(&hp(w[0]), &hp(w[1]), &hp(w[2])).unwrap();
        let e = angle_at(&ep(w[0]), &ep(w[1]), &ep(w[2])).unwrap();
        worst = worst.max((h - e).abs() / e);
    }
    for n in [3, 5, 7, 9] {
        let h = disk_bound_1d(Metric::Hyperbolic, s, n).unwrap().value / s;
        let e = disk_bound_1d(Metric::Euclidean, 1.0, n).unwrap().value;
        worst = worst.max((h - e).abs() / e);
    }
    outcome(worst <= 1e-4, format!("largest relative error {worst:.2e} over distances, angles and disk bounds at scale 1e-3"))
}

fn criterion_9() -> Outcome {
    let mut cases = 0;
    let mut ok = true;
    for n in [5usize, 7] {
        for mask in 0u32..(1 << n) {
            let sign = |i: usize| if mask >> i & 1 == 1 { 1.0 } else { -1.0 };
            let pos = (0..n).filter(|&i| sign(i) > 0.0).count();
            cases += 1;
            if pos == 0 || pos == n {
                // no closed θ walk has single-signed steps; check the scan itself
                let zeta: Vec<f64> = (0..n).map(sign).collect();
                ok &= monotone_index(&zeta).is_some_and(|j| zeta[j - 1] * zeta[j % n] >= 0.0);
                continue;
            }
            // steps of the given signs that close up
            let step = |i: usize| if sign(i) > 0.0 { 1.0 / pos as f64 } else { -1.0 / (n - pos) as f64 };
            let mut theta = vec![0.0; n];
            for i in 1..n {
                theta[i] = theta[i - 1] + step(i - 1);
            }
            match find_monotone_triple(&theta) {
                Ok(j) => ok &= step(j - 1) * step(j % n) >= 0.0,
                Err(_) => ok = false,
            }
        }
    }
    let alternating = monotone_index(&[1.0, -1.0, 1.0, -1.0]).is_none()
        && matches!(find_monotone_triple(&[0.0, 1.0, 0.0, 1.0]), Err(Error::ParityRequiresOdd(4)));
    outcome(ok && alternating, format!("{cases} sign patterns for n = 5, 7; n = 4 alternating pattern rejected: {alternating}"))
}

fn run_cli(args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_perimax")).args(args).env_remove("PERIMAX_THREADS").output().map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!("{args:?} exited with {}", out.status));
    }
    Ok(out.stdout)
}

fn criterion_10() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let body = dir.path().join("disk.json");
    std::fs::write(&body, r#"{"metric":"euclidean","shape":{"type":"disk","center":[0,0],"radius":1}}"#).unwrap();
    let body = body.to_str().unwrap();
    let search = ["search", "--body", body, "--n", "5", "--trials", "4", "--steps", "10000", "--seed", "7", "--json"];
    let check = ["check-paper", "--samples", "10000", "--seed", "1", "--json"];
    let mut parts = Vec::new();
    let mut ok = true;
    for args in [&search[..], &check[..]] {
        match (run_cli(args), run_cli(args)) {
            (Ok(a), Ok(b)) => {
                let same = a == b && !a.is_empty();
                ok &= same;
                parts.push(format!("{} {} bytes {}", args[0], a.len(), if same { "identical" } else { "DIFFER" }));
            }
            (Err(e), _) | (_, Err(e)) => {
                ok = false;
                parts.push(e);
            }
        }
    }
    outcome(ok, parts.join(", "))
}

type Criterion = fn() -> Outcome;

fn main() {
    let criteria: [(&str, Criterion); 10] = [
        ("disk bound n=3", criterion_1),
        ("disk bound n=5", criterion_2),
        ("no counterexample campaigns", criterion_3),
        ("odd tightness", criterion_4),
        ("even n diameter", criterion_5),
        ("inequality sweeps", criterion_6),
        ("certificate campaign", criterion_7),
        ("metric degeneration", criterion_8),
        ("monotone triple totality", criterion_9),
        ("determinism", criterion_10),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let label = format!("criterion {:>2} {name}", i + 1);
        if !filter.is_empty() && !filter.iter().any(|f| label.contains(f.as_str())) {
            continue;
        }
        let start = Instant::now();
        let o = run();
        if !o.ok {
            failed += 1;
        }
        println!("{} {label}: {} [{:.2?}]", if o.ok { "PASS" } else { "FAIL" }, o.detail, start.elapsed());
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
