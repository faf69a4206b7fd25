mod common;

use common::{gaussian_poly, gaussian_ratfun, gr, rng};
use levelcurves::config::Config;
use levelcurves::curve::{
    analyze_unimodular, conj_reality_test, implicitize, left_compose_factor, luroth_generator,
    substitute, CurveError, CurveStatus, PlaneCurve,
};
use levelcurves::expr::{parse_bipoly, parse_ratfun};
use levelcurves::level::{solve_unimodular_pair, SolutionStatus};
use levelcurves::ratfun::RatFun;
use rand::Rng;

#[test]
fn implicit_equation_vanishes_on_the_parametrization() {
    let mut r = rng(31);
    let mut proper = 0;
    for _ in 0..40 {
        let p1 = gaussian_ratfun(&mut r, 2, 3);
        let p2 = gaussian_ratfun(&mut r, 2, 3);
        let imp = implicitize(&p1, &p2).unwrap();
        assert!(substitute(&imp.curve.f, &p1, &p2).is_zero(), "{p1} {p2}");
        assert!(substitute(&imp.raw, &p1, &p2).is_zero());
        if imp.power == 1 {
            proper += 1;
            assert_eq!(imp.curve.f.degree_in(1), Some(p1.degree()));
            assert_eq!(imp.curve.f.degree_in(0), Some(p2.degree()));
        }
    }
    assert!(proper > 30);
}

#[test]
fn improper_parametrization_extracts_the_power() {
    let (p1, p2) = (parse_ratfun("z^2", 'z').unwrap(), parse_ratfun("z^4", 'z').unwrap());
    let imp = implicitize(&p1, &p2).unwrap();
    assert_eq!(imp.power, 2);
    assert!(imp.curve.f.is_associate(&parse_bipoly("y-x^2", ['x', 'y']).unwrap()));
}

#[test]
fn scaled_real_curves_stay_real() {
    let f = parse_bipoly("x^2+y^2-1+x*y/3", ['x', 'y']).unwrap();
    let t = conj_reality_test(&f);
    assert!(t.real);
    assert_eq!(t.ratio, Some(gr(1, 0, 1)));
    let scaled = f.scale(&gr(1, 2, 1));
    let t = conj_reality_test(&scaled);
    assert!(t.real);
    assert!(t.real_form.unwrap().is_associate(&f));
    let g = parse_bipoly("x^2+i*y", ['x', 'y']).unwrap();
    assert!(!conj_reality_test(&g).real);
}

#[test]
fn luroth_generators_round_trip() {
    let mut r = rng(32);
    let inner = [
        parse_ratfun("(z^2+1)/(z-3)", 'z').unwrap(),
        parse_ratfun("z^2+i*z", 'z').unwrap(),
    ];
    for w in &inner {
        for _ in 0..5 {
            // degrees 2 and 3 force Q(i)(Q1, Q2) = Q(i)(z)
            let q1 = RatFun::from_poly(gaussian_poly(&mut r, 2, 3));
            let q2 = RatFun::from_poly(gaussian_poly(&mut r, 3, 3));
            let p1 = q1.compose(w).unwrap();
            let p2 = q2.compose(w).unwrap();
            let g = luroth_generator(&p1, &p2).unwrap();
            assert_eq!(g.degree(), w.degree());
            for p in [&p1, &p2] {
                let q = left_compose_factor(p, &g).unwrap();
                assert_eq!(&q.compose(&g).unwrap(), p);
            }
        }
    }
}

#[test]
fn left_factor_rejects_non_factors() {
    let p = parse_ratfun("z^3+z", 'z').unwrap();
    let w = parse_ratfun("z^2", 'z').unwrap();
    assert!(matches!(left_compose_factor(&p, &w), Err(CurveError::NotAFactor)));
}

/// The verdict on the image curve agrees with the level solver, and every
/// finite solution maps to a unimodular point of the curve.
#[test]
fn curve_analysis_agrees_with_the_solver() {
    let mut r = rng(33);
    let config = Config::default();
    let mut fixed = vec![("z", "z+2"), ("z", "z^5"), ("z", "z^2+z"), ("z^2", "z^3"), ("z", "z-1/2")]
        .into_iter()
        .map(|(a, b)| (parse_ratfun(a, 'z').unwrap(), parse_ratfun(b, 'z').unwrap()))
        .collect::<Vec<_>>();
    for _ in 0..25 {
        let d1 = r.gen_range(1..=2);
        let d2 = r.gen_range(1..=2);
        fixed.push((
            RatFun::from_poly(gaussian_poly(&mut r, d1, 2)),
            RatFun::from_poly(gaussian_poly(&mut r, d2, 2)),
        ));
    }
    let mut compared = 0;
    for (p1, p2) in &fixed {
        let imp = implicitize(p1, p2).unwrap();
        let sol = solve_unimodular_pair(p1, p2, &config).unwrap_or_else(|e| panic!("{p1} {p2}: {e}"));
        let curve = PlaneCurve::new(&imp.curve.f, false);
        let rep = match analyze_unimodular(&curve, &config) {
            Ok(rep) => rep,
            Err(CurveError::SharedComponentUnresolved) => continue,
            Err(e) => panic!("{p1} {p2}: {e}"),
        };
        compared += 1;
        let infinite = rep.status == CurveStatus::InfiniteUnimodular;
        assert_eq!(infinite, sol.status == SolutionStatus::Degenerate, "{p1} {p2}");
        if !infinite {
            for p in &sol.points {
                let (x, y) = (&p.values[0], &p.values[1]);
                let hit = rep.points.iter().any(|u| u.x.overlaps(x) && u.y.overlaps(y));
                assert!(hit, "{p1} {p2}: image of {:?} missing", p.z.center_f64());
            }
        }
    }
    assert!(compared >= 20);
}

#[test]
fn unimodular_examples() {
    let config = Config::default();
    let c = PlaneCurve::new(&parse_bipoly("x*y-1", ['x', 'y']).unwrap(), true);
    let rep = analyze_unimodular(&c, &config).unwrap();
    assert_eq!(rep.status, CurveStatus::InfiniteUnimodular);
    assert!(rep.simple_point.is_some());
    let c = PlaneCurve::new(&parse_bipoly("x-y-2", ['x', 'y']).unwrap(), true);
    let rep = analyze_unimodular(&c, &config).unwrap();
    assert_eq!(rep.status, CurveStatus::FiniteBounded);
    assert_eq!(rep.points.len(), 1);
    assert_eq!(rep.points[0].exact, Some((gr(1, 0, 1), gr(-1, 0, 1))));
}
