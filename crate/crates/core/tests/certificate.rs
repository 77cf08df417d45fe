use std::f64::consts::PI;

use approx::assert_relative_eq;
use perimax_core::certificate::sweeps::{run_sweeps, sample_case1, sweep_case1};
use perimax_core::certificate::{
    candidate_triples, certify, find_monotone_triple, hy_case1_domination, monotone_index, normalize, Case1Outcome,
    CaseTag, Label,
};
use perimax_core::error::Error;
use perimax_core::metric_plane::{distance, Isometry};
use perimax_core::search_harness::random_simple_polygon;
use perimax_core::triangle_bound::{compute_bound, SolverSettings};
use perimax_core::{ClosedPolygon, ConvexBody, Metric, Point};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn regular(k: usize, r: f64) -> ClosedPolygon {
    ClosedPolygon::new(
        (0..k)
            .map(|i| {
                let t = 2.0 * PI * i as f64 / k as f64;
                Point::euclidean(r * t.cos(), r * t.sin())
            })
            .collect(),
    )
    .unwrap()
}

#[test]
fn normalization_examples() {
    let p = ClosedPolygon::new(vec![
        Point::euclidean(0.0, 0.0),
        Point::euclidean(0.0, 1.0),
        Point::euclidean(-0.4, 0.5),
    ])
    .unwrap();
    let norm = normalize(&p).unwrap();
    assert_eq!(norm.longest_edge, 0);
    for (a, b) in p.vertices().iter().zip(norm.polygon.vertices()) {
        assert!(distance(a, b).unwrap() < 1e-15);
    }

    let q = ClosedPolygon::new(vec![
        Point::euclidean(0.3, 0.1),
        Point::euclidean(2.0, 0.4),
        Point::euclidean(1.7, 1.9),
        Point::euclidean(0.5, 1.2),
        Point::euclidean(-0.1, 0.8),
    ])
    .unwrap();
    let norm = normalize(&q).unwrap();
    let np = &norm.polygon;
    let longest = (0..5).map(|i| np.edge_length(i)).fold(0.0, f64::max);
    assert_relative_eq!(longest, 1.0, epsilon = 1e-12);
    let theta = norm.theta();
    assert_eq!(theta[0], 0.0);
    assert_relative_eq!(theta[1], 1.0, epsilon = 1e-12);
    let rotated = q.rotated(norm.longest_edge);
    for (a, b) in rotated.vertices().iter().zip(np.vertices()) {
        assert!(distance(a, &norm.restore(b).unwrap()).unwrap() < 1e-10);
    }
    assert!(matches!(normalize(&regular(4, 1.0)), Err(Error::ParityRequiresOdd(4))));
}

#[test]
fn hyperbolic_normalization_keeps_lengths() {
    let body = ConvexBody::unit_disk(Metric::Hyperbolic);
    let p = random_simple_polygon(&body, 7, 3).unwrap();
    let norm = normalize(&p).unwrap();
    assert_eq!(norm.scale, 1.0);
    assert_relative_eq!(norm.polygon.perimeter(), p.perimeter(), epsilon = 1e-12);
    assert_relative_eq!(norm.theta()[1], norm.rho, epsilon = 1e-12);
}

#[test]
fn monotone_triple_totality() {
    for n in [5usize, 7] {
        for mask in 0..(1u32 << n) {
            let zeta: Vec<f64> = (0..n).map(|i| if mask >> i & 1 == 1 { 1.0 } else { -1.0 }).collect();
            let j = monotone_index(&zeta).expect("odd length has a same-sign pair");
            assert!(zeta[j - 1] * zeta[j % n] >= 0.0);
            // the same signs realised as increments of a closed θ walk are not
            // always possible, but the scan over any sequence is total
        }
    }
    assert_eq!(monotone_index(&[1.0, -1.0, 1.0, -1.0]), None);
    assert!(matches!(find_monotone_triple(&[0.0, 1.0, 0.0, 1.0]), Err(Error::ParityRequiresOdd(4))));
}

#[test]
fn candidate_examples() {
    let o = Point::euclidean(0.0, 0.0);
    let all = candidate_triples([o; 5], 5).unwrap();
    assert_eq!(all.len(), 10);
    assert!(all.iter().all(|c| c.score == 0.0));

    let q = Point::euclidean(0.0, 1.0);
    for n in [3, 5, 7] {
        let c = candidate_triples([o, q, q, q, q], n).unwrap();
        for cand in c.iter().filter(|c| c.triple[0] == Label::P) {
            assert_relative_eq!(cand.score, n as f64 - 1.0, epsilon = 1e-15);
        }
    }

    // regular pentagon labels, recomputed by hand from chord lengths
    let pent = regular(5, 1.0);
    let v = pent.vertices();
    let pts = [v[0], v[1], v[2], v[3], v[4]];
    let short = 2.0 * (PI / 5.0).sin();
    let long = 2.0 * (2.0 * PI / 5.0).sin();
    let c = candidate_triples(pts, 5).unwrap();
    let mut scores: Vec<f64> = c.iter().map(|x| x.score).collect();
    // five triples of three consecutive vertices (long, short, short) and
    // five with two long diagonals (long, long, short)
    let mut expect = vec![3.0 * long + 2.0 * short; 5];
    expect.extend(vec![4.0 * long + short; 5]);
    expect.sort_by(f64::total_cmp);
    scores.sort_by(f64::total_cmp);
    for (s, e) in scores.iter().zip(&expect) {
        assert_relative_eq!(s, e, epsilon = 1e-12);
    }
}

#[test]
fn certify_triangle_is_tight() {
    let d = ConvexBody::unit_disk(Metric::Euclidean);
    let t = ClosedPolygon::new(vec![
        Point::euclidean(0.1, 0.1),
        Point::euclidean(0.6, -0.2),
        Point::euclidean(-0.2, 0.5),
    ])
    .unwrap();
    let c = certify(&t, &d).unwrap();
    assert_relative_eq!(c.trace.raw_score, t.perimeter(), epsilon = 1e-12);
    assert!(c.slack >= 0.0);
}

#[test]
fn certify_regular_pentagon() {
    let d = ConvexBody::unit_disk(Metric::Euclidean);
    let p = regular(5, 1.0);
    assert_relative_eq!(p.perimeter(), 5.8778525229247312, epsilon = 1e-12);
    let c = certify(&p, &d).unwrap();
    // a-c is a diagonal, longer than the edge p-q: three consecutive vertices
    // give 3·(long) + 2·(short) − 10·sin(π/5)
    assert_eq!(c.trace.case, CaseTag::ChordAc);
    assert_relative_eq!(c.slack, 2.1796275840160817, epsilon = 1e-12);
    let opt = compute_bound(&d, 5, &SolverSettings::default()).unwrap();
    assert!(c.bound <= opt.value + 1e-6);
}

#[test]
fn certify_rejects_bad_input() {
    let d = ConvexBody::unit_disk(Metric::Euclidean);
    let bow = ClosedPolygon::new(vec![
        Point::euclidean(0.0, 0.0),
        Point::euclidean(0.5, 0.5),
        Point::euclidean(0.5, 0.0),
        Point::euclidean(0.0, 0.5),
        Point::euclidean(-0.3, 0.2),
    ])
    .unwrap();
    assert!(matches!(certify(&bow, &d), Err(Error::NotSimple(_))));
    assert!(matches!(certify(&regular(4, 0.5), &d), Err(Error::ParityRequiresOdd(4))));
    assert!(matches!(certify(&regular(5, 1.5), &d), Err(Error::NotContained(_))));
}

#[test]
fn certificate_campaign_in_three_bodies() {
    let bodies = [
        ConvexBody::unit_disk(Metric::Euclidean),
        ConvexBody::unit_square(),
        ConvexBody::unit_disk(Metric::Hyperbolic),
    ];
    for body in &bodies {
        for n in [5, 7, 9] {
            let opt = compute_bound(body, n, &SolverSettings::default()).unwrap().value;
            for seed in 0..150 {
                let p = random_simple_polygon(body, n, seed).unwrap();
                let c = certify(&p, body).unwrap();
                assert!(c.slack >= -1e-9 * p.perimeter().max(1.0));
                assert!(c.bound <= opt + 1e-6, "bound {} above optimum {opt}", c.bound);
            }
        }
    }
}

#[test]
fn euclidean_certificate_is_rigid_invariant() {
    let body = ConvexBody::unit_square();
    let iso = Isometry::rigid(0.9, &Point::euclidean(3.0, -2.0));
    let moved_body = body.transformed(&iso).unwrap();
    for seed in 0..40 {
        let p = random_simple_polygon(&body, 7, seed).unwrap();
        let moved = ClosedPolygon::new(p.vertices().iter().map(|v| iso.apply(v).unwrap()).collect()).unwrap();
        let (a, b) = (certify(&p, &body).unwrap(), certify(&moved, &moved_body).unwrap());
        assert_relative_eq!(a.slack, b.slack, epsilon = 1e-9);
        assert_eq!(a.trace.case, b.trace.case);
    }
}

#[test]
fn case1_examples_and_campaign() {
    let h = Metric::Hyperbolic;
    let p = Point::origin(h);
    let q = Point::from_spatial(1.2f64.sinh(), 0.0);
    // symmetric: a, c mirrored across the bisector of [p, q], b on it beyond them
    let line = perimax_core::metric_plane::Geodesic::new(p, q).unwrap();
    let a = line.point_at(0.3, 0.2);
    let c = line.point_at(0.9, 0.2);
    let b = line.point_at(0.6, 0.5);
    assert_eq!(hy_case1_domination(&p, &q, &a, &b, &c).unwrap(), Case1Outcome::AviaP);
    // b = p violates the ordering hypothesis
    assert!(matches!(hy_case1_domination(&p, &q, &a, &p, &c), Err(Error::Hypothesis(_))));
    // the Euclidean plane is rejected
    let e = Point::euclidean(0.0, 0.0);
    assert!(hy_case1_domination(&e, &e, &e, &e, &e).is_err());

    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let s = sweep_case1(10_000, &mut rng);
    assert_eq!(s.failures, 0, "worst margin {}", s.min_margin);
    let [_, _, a, b, c] = sample_case1(&mut rng);
    assert!(distance(&a, &b).unwrap().is_finite() && distance(&b, &c).unwrap().is_finite());
}

#[test]
fn inequality_sweeps_hold() {
    let out = run_sweeps(100_000, 1);
    for s in &out {
        assert!(s.passed(), "{} failed, min margin {}", s.name, s.min_margin);
        assert!(s.min_margin >= 0.0 || s.name == "hypercycle_monotone");
    }
    assert_eq!(out, run_sweeps(100_000, 1));
}

#[test]
fn case_tag_names() {
    assert_eq!(CaseTag::of([Label::P, Label::A, Label::C]).as_str(), "crucial-inequality");
}
