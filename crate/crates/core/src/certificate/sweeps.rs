//! Randomized sweeps of the inequalities over their precondition domains.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{eu_derivative_i, eu_inequality_gap, find_monotone_triple, hy_case1_domination, hy_derivative_i, zeta};
use super::Case1Outcome;
use crate::metric_plane::{dist, hypercycle_distance_monotone_check, Geodesic, Hypercycle, Point};

#[derive(Clone, Debug, PartialEq)]
pub struct SweepSummary {
    pub name: &'static str,
    pub samples: usize,
    /// Smallest observed margin; non-negative when the inequality held everywhere.
    pub min_margin: f64,
    /// Arguments at the smallest margin.
    pub worst: Vec<f64>,
    pub failures: usize,
}

impl SweepSummary {
    fn new(name: &'static str) -> Self {
        SweepSummary { name, samples: 0, min_margin: f64::INFINITY, worst: Vec::new(), failures: 0 }
    }

    fn record(&mut self, margin: f64, failed: bool, args: &[f64]) {
        self.samples += 1;
        if failed {
            self.failures += 1;
        }
        if margin < self.min_margin {
            self.min_margin = margin;
            self.worst = args.to_vec();
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

pub fn sweep_eu_gap(samples: usize, rng: &mut impl Rng) -> SweepSummary {
    let mut s = SweepSummary::new("eu_inequality_gap");
    while s.samples < samples {
        let ta: f64 = rng.gen_range(0.0..=0.5);
        let tc = rng.gen_range(1.0..1.5);
        let wa: f64 = rng.gen_range(0.0..2.0);
        let wc: f64 = rng.gen_range(wa / 2.0..wa + 1.0);
        if tc <= 1.0 || (wc - wa).hypot(tc - ta) >= 1.0 {
            continue;
        }
        let g = eu_inequality_gap(ta, wa, tc, wc).expect("sampled inside the domain");
        s.record(g, g < 0.0, &[ta, wa, tc, wc]);
    }
    s
}

fn derivative_args(rng: &mut impl Rng) -> (f64, f64, f64) {
    let tc = 3.0 * (1.0 - rng.gen::<f64>());
    let ta = rng.gen_range(0.0..=tc / 2.0);
    let wc = rng.gen_range(0.0..3.0);
    (ta, tc, wc)
}

pub fn sweep_eu_derivative(samples: usize, rng: &mut impl Rng) -> SweepSummary {
    let mut s = SweepSummary::new("eu_derivative_I");
    for _ in 0..samples {
        let (ta, tc, wc) = derivative_args(rng);
        let v = eu_derivative_i(ta, tc, wc).expect("sampled inside the domain");
        s.record(v, v < 0.0, &[ta, tc, wc]);
    }
    s
}

pub fn sweep_hy_derivative(samples: usize, rng: &mut impl Rng) -> SweepSummary {
    let mut s = SweepSummary::new("hy_derivative_I");
    for _ in 0..samples {
        let (ta, tc, wc) = derivative_args(rng);
        let v = hy_derivative_i(ta, tc, wc).expect("sampled inside the domain");
        s.record(v, v < 0.0, &[ta, tc, wc]);
    }
    s
}

fn random_poincare(rng: &mut impl Rng, max_r: f64) -> Point {
    loop {
        let (x, y) = (rng.gen_range(-max_r..max_r), rng.gen_range(-max_r..max_r));
        if x.hypot(y) < max_r {
            return Point::poincare(x, y).expect("inside the disk");
        }
    }
}

/// Margin is `dist(x, y_far) − dist(x, y_near)`, where `y_far` is the point
/// farther along the hypercycle from the foot of `x`.
pub fn sweep_hypercycle(samples: usize, rng: &mut impl Rng) -> SweepSummary {
    let mut s = SweepSummary::new("hypercycle_monotone");
    while s.samples < samples {
        let (u, v) = (random_poincare(rng, 0.9), random_poincare(rng, 0.9));
        let Ok(line) = Geodesic::new(u, v) else { continue };
        let h = Hypercycle::new(line, rng.gen_range(-1.5..1.5)).expect("hyperbolic line");
        let x = random_poincare(rng, 0.9);
        let (t1, t2) = (rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
        let (y1, y2) = (h.point_at(t1), h.point_at(t2));
        let ok = hypercycle_distance_monotone_check(&x, &h, &y1, &y2).expect("points on the hypercycle");
        let tx = line.fermi_unchecked(&x).0;
        let (near, far) = if (t2 - tx).abs() >= (t1 - tx).abs() { (y1, y2) } else { (y2, y1) };
        let margin = dist(&x, &far) - dist(&x, &near);
        s.record(margin, !ok, &[t1, t2, h.offset(), tx]);
    }
    s
}

/// Random cyclic sequences of odd length `n`, with occasional ties.
pub fn sweep_monotone_triple(n: usize, samples: usize, rng: &mut impl Rng) -> SweepSummary {
    let name = match n {
        5 => "monotone_triple_n5",
        7 => "monotone_triple_n7",
        9 => "monotone_triple_n9",
        _ => "monotone_triple",
    };
    let mut s = SweepSummary::new(name);
    for _ in 0..samples {
        let theta: Vec<f64> = (0..n)
            .map(|_| if rng.gen_bool(0.1) { 0.0 } else { rng.gen_range(-1.0..1.0) })
            .collect();
        match find_monotone_triple(&theta) {
            Ok(j) => {
                let z = zeta(&theta);
                // + 0.0 turns a signed zero into +0
                let m = z[j - 1] * z[j % n] + 0.0;
                s.record(m, m < 0.0, &theta);
            }
            Err(_) => s.record(f64::NEG_INFINITY, true, &theta),
        }
    }
    s
}

/// A random configuration satisfying the Case-1 hypotheses: `p` at the
/// origin, `q` on the positive first axis at distance `rho`, and `a, b, c`
/// above the line with ordered feet.
pub fn sample_case1(rng: &mut impl Rng) -> [Point; 5] {
    loop {
        let rho: f64 = rng.gen_range(0.05..2.5);
        let p = Point::origin(crate::metric_plane::Metric::Hyperbolic);
        let line = Geodesic::new(p, Point::from_spatial(rho.sinh(), 0.0)).expect("distinct points");
        let q = line.point_at(rho, 0.0);
        let mut t = [rng.gen_range(0.0..rho), rng.gen_range(0.0..rho), rng.gen_range(0.0..rho)];
        t.sort_by(f64::total_cmp);
        let s = [rng.gen_range(0.0..rho), rng.gen_range(0.0..1.5 * rho), rng.gen_range(0.0..rho)];
        let [a, b, c] = [0, 1, 2].map(|i| line.point_at(t[i], s[i]));
        if dist(&a, &b) > rho || dist(&b, &c) > rho {
            continue;
        }
        if hy_case1_domination(&p, &q, &a, &b, &c).is_ok() {
            return [p, q, a, b, c];
        }
    }
}

pub fn sweep_case1(samples: usize, rng: &mut impl Rng) -> SweepSummary {
    let mut s = SweepSummary::new("hy_case1_domination");
    for _ in 0..samples {
        let [p, q, a, b, c] = sample_case1(rng);
        let out = hy_case1_domination(&p, &q, &a, &b, &c).expect("hypotheses hold");
        let margin = (dist(&p, &b) - dist(&a, &b)).max(dist(&b, &q) - dist(&b, &c));
        s.record(margin, out == Case1Outcome::Neither, &[]);
    }
    s
}

/// All sweeps with a single seeded generator, in a fixed order.
pub fn run_sweeps(samples: usize, seed: u64) -> Vec<SweepSummary> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = vec![
        sweep_eu_gap(samples, &mut rng),
        sweep_eu_derivative(samples, &mut rng),
        sweep_hy_derivative(samples, &mut rng),
        sweep_hypercycle(samples, &mut rng),
    ];
    for n in [5, 7, 9] {
        out.push(sweep_monotone_triple(n, samples, &mut rng));
    }
    out
}
