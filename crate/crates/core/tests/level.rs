mod common;

use common::{blaschke_product, gaussian_poly, gaussian_ratfun, gr, rng};
use levelcurves::config::Config;
use levelcurves::expr::parse_ratfun;
use levelcurves::level::{count_bound, level_poly, solve_unimodular_pair, SolutionStatus};
use levelcurves::poly::UniPoly;
use levelcurves::ratfun::RatFun;
use rand::Rng;

fn rf(s: &str) -> RatFun {
    parse_ratfun(s, 'z').unwrap()
}

#[test]
fn level_polynomial_is_sigma_invariant() {
    let mut r = rng(21);
    for _ in 0..30 {
        let p = gaussian_ratfun(&mut r, 3, 3);
        let l = level_poly(&p).poly;
        assert!(l.sigma().is_associate(&l));
        let z = gr(r.gen_range(-4..=4), r.gen_range(-4..=4), 3);
        // L(z, conj z) = |A(z)|^2 - |B(z)|^2 is real
        assert!(l.eval(&z, &z.conj()).is_real());
    }
}

#[test]
fn solving_is_symmetric() {
    let mut r = rng(22);
    let config = Config::default();
    for _ in 0..12 {
        let (d1, d2) = (r.gen_range(1..=2), r.gen_range(1..=2));
        let p1 = RatFun::from_poly(gaussian_poly(&mut r, d1, 3));
        let p2 = RatFun::from_poly(gaussian_poly(&mut r, d2, 3));
        let a = solve_unimodular_pair(&p1, &p2, &config).unwrap();
        let b = solve_unimodular_pair(&p2, &p1, &config).unwrap();
        assert_eq!(a.status, b.status);
        assert_eq!(a.points.len(), b.points.len());
        for p in &a.points {
            assert!(b.points.iter().any(|q| q.z.overlaps(&p.z)));
        }
    }
}

#[test]
fn random_pairs_respect_the_bound() {
    let mut r = rng(23);
    let config = Config::default();
    for _ in 0..40 {
        let p1 = gaussian_ratfun(&mut r, 2, 3);
        let p2 = gaussian_ratfun(&mut r, 2, 3);
        let rep = solve_unimodular_pair(&p1, &p2, &config).unwrap();
        assert!(rep.bound == count_bound(&p1, &p2));
        if rep.status == SolutionStatus::Finite {
            assert!(rep.points.len() <= rep.bound);
            for p in &rep.points {
                for v in &p.values {
                    let m = v.center_f64().norm();
                    assert!((m - 1.0).abs() < 1e-10, "{p1} {p2}: |P| = {m}");
                }
            }
        }
    }
}

/// Sign changes of `|P2|^2 - 1` along the unit circle must each sit near a
/// certified point of the pair `(z, P2)`.
#[test]
fn circle_scan_finds_no_missing_points() {
    let mut r = rng(24);
    let config = Config::default();
    let n = 20_000;
    for _ in 0..15 {
        let d = r.gen_range(1..=3);
        let q = gaussian_poly(&mut r, d, 3);
        let rep = solve_unimodular_pair(&RatFun::identity(), &RatFun::from_poly(q.clone()), &config).unwrap();
        if rep.status == SolutionStatus::Degenerate {
            continue;
        }
        let coeffs: Vec<num_complex::Complex64> = q
            .coeffs()
            .iter()
            .map(|c| {
                let (a, b) = c.to_f64_pair();
                num_complex::Complex64::new(a, b)
            })
            .collect();
        let f = |t: f64| {
            let z = num_complex::Complex64::from_polar(1.0, t);
            coeffs.iter().rev().fold(num_complex::Complex64::new(0.0, 0.0), |acc, c| acc * z + c).norm_sqr() - 1.0
        };
        let step = std::f64::consts::TAU / n as f64;
        let mut prev = f(0.0);
        for k in 1..=n {
            let cur = f(k as f64 * step);
            if prev.signum() != cur.signum() && prev != 0.0 {
                let z = num_complex::Complex64::from_polar(1.0, (k as f64 - 0.5) * step);
                let near = rep.points.iter().any(|p| (p.z.center_f64() - z).norm() < 2.0 * step);
                assert!(near, "missed a crossing of |{q}| = 1 near {z}");
            }
            prev = cur;
        }
    }
}

#[test]
fn compositions_with_a_common_inner_map_are_degenerate() {
    let mut r = rng(25);
    let config = Config::default();
    let inner = [
        rf("(z^2+1)/(z-3)"),
        rf("z^2+z"),
        rf("(2*z-1)/(z+2)"),
    ];
    for w in &inner {
        for _ in 0..2 {
            let q1 = blaschke_product(&mut r, 1);
            let q2 = blaschke_product(&mut r, 1);
            let p1 = q1.compose(w).unwrap();
            let p2 = q2.compose(w).unwrap();
            let rep = solve_unimodular_pair(&p1, &p2, &config).unwrap();
            assert_eq!(rep.status, SolutionStatus::Degenerate, "{p1} {p2}");
            let wit = rep.witness.expect("witness");
            assert!(wit.residual < 1e-10, "{p1} {p2}: {}", wit.residual);
        }
    }
}

#[test]
fn tangent_and_crossing_examples() {
    let config = Config::default();
    let rep = solve_unimodular_pair(&rf("z"), &rf("z+2"), &config).unwrap();
    assert_eq!(rep.status, SolutionStatus::Finite);
    assert_eq!(rep.points.len(), 1);
    assert_eq!(rep.points[0].exact, Some(gr(-1, 0, 1)));
    let rep = solve_unimodular_pair(&rf("z"), &rf("z-1/2"), &config).unwrap();
    assert_eq!(rep.points.len(), 2);
    let rep = solve_unimodular_pair(&rf("z"), &rf("z+3"), &config).unwrap();
    assert!(rep.points.is_empty());
}

#[test]
fn zero_polynomial_levels() {
    let config = Config::default();
    let rep = solve_unimodular_pair(&RatFun::from_poly(UniPoly::zero()), &rf("z"), &config).unwrap();
    assert_eq!(rep.status, SolutionStatus::Finite);
    assert!(rep.points.is_empty());
}
