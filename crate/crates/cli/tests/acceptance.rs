//! One PASS/FAIL line per acceptance criterion. Exits non-zero if any fails.

mod common;

use std::time::{Duration, Instant};

use common::levelcurves;
use levelcurves::arith::{ComplexBall, GaussianRational};
use levelcurves::circle::{cayley_criterion, is_finite_blaschke, reflection_criterion};
use levelcurves::config::Config;
use levelcurves::curve::{
    analyze_unimodular, cayley_substitute, implicitize, left_compose_factor, luroth_generator,
    substitute, CurveStatus, PlaneCurve,
};
use levelcurves::expr::{parse_bipoly, parse_poly, parse_ratfun};
use levelcurves::level::{count_bound, solve_unimodular_pair, LevelError, SolutionStatus};
use levelcurves::poly::{certified_roots, UniPoly};
use levelcurves::ratfun::RatFun;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

const TANGENT_RADIUS: f64 = 1e-20;
const TANGENT_TIME: Duration = Duration::from_secs(1);
const ARGCD_TIME: Duration = Duration::from_secs(5);
const WITNESS_RESIDUAL: f64 = 1e-10;
const LEVEL_DEVIATION: f64 = 1e-10;
const RANDOM_PAIRS: usize = 200;
const BLASCHKE_SAMPLES: usize = 500;
const PROPER_PAIRS: usize = 100;
const LUROTH_PAIRS: usize = 50;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn rf(s: &str) -> RatFun {
    parse_ratfun(s, 'z').unwrap()
}

fn gr(re: i64, im: i64, den: i64) -> GaussianRational {
    GaussianRational::from_parts(re, im, den)
}

fn gaussian_poly(r: &mut ChaCha8Rng, deg: usize, height: i64) -> UniPoly {
    let mut c: Vec<GaussianRational> = (0..=deg)
        .map(|_| gr(r.gen_range(-height..=height), r.gen_range(-height..=height), 1))
        .collect();
    while c[deg].is_zero() {
        c[deg] = gr(r.gen_range(-height..=height), r.gen_range(-height..=height), 1);
    }
    UniPoly::new(c)
}

fn timed_cli(args: &[&str]) -> (common::Run, Duration) {
    let t = Instant::now();
    let r = levelcurves(args);
    (r, t.elapsed())
}

fn criterion_1() -> Outcome {
    let (r, dt) = timed_cli(&["solve", "z", "z+2", "--json"]);
    ensure(r.code == 0, || format!("exit code {}", r.code))?;
    let v = r.json();
    ensure(v["status"] == "FINITE", || format!("status {}", v["status"]))?;
    ensure(v["bound"] == 4, || format!("bound {}", v["bound"]))?;
    let pts = v["points"].as_array().unwrap();
    ensure(pts.len() == 1, || format!("{} points", pts.len()))?;
    let p = &pts[0];
    let (re, im, rad) = (p["re"].as_f64().unwrap(), p["im"].as_f64().unwrap(), p["radius"].as_f64().unwrap());
    ensure((re + 1.0).hypot(im) <= rad, || format!("ball ({re}, {im}) ± {rad} misses -1"))?;
    ensure(rad < TANGENT_RADIUS, || format!("radius {rad}"))?;
    ensure(dt < TANGENT_TIME, || format!("took {dt:?}"))?;
    Ok(format!("one point at -1, radius {rad:e}, {dt:.2?}"))
}

/// Independent oracle: a common root ζ of z^k - 1 and (z+1)^k - 1 has
/// |ζ| = |ζ + 1| = 1, so ζ = e^{±2πi/3}, and these are simple roots of
/// z^k - 1. Hence gcd_k is z^2+z+1 when it divides both and 1 otherwise.
fn argcd_oracle(k: usize) -> String {
    let c = parse_poly("z^2+z+1", 'z').unwrap();
    let one = UniPoly::one();
    let a = &parse_poly("z", 'z').unwrap().pow(k) - &one;
    let b = &parse_poly("z+1", 'z').unwrap().pow(k) - &one;
    let divides = a.divrem(&c).unwrap().1.is_zero() && b.divrem(&c).unwrap().1.is_zero();
    if divides { "z^2+z+1" } else { "1" }.to_string()
}

fn criterion_2() -> Outcome {
    let (r, dt) = timed_cli(&["argcd", "z", "z+1", "--max-k", "12", "--json"]);
    ensure(r.code == 0, || format!("exit code {}", r.code))?;
    let v = r.json();
    let table = v["table"].as_array().unwrap();
    ensure(table.len() == 12, || format!("{} rows", table.len()))?;
    for row in table {
        let k = row["k"].as_u64().unwrap() as usize;
        let want = argcd_oracle(k);
        ensure(row["gcd"] == want.as_str(), || format!("gcd_{k} = {}, oracle {want}", row["gcd"]))?;
        let expect_cyclotomic = k == 6 || k == 12;
        ensure((want != "1") == expect_cyclotomic, || format!("oracle disagrees at k = {k}"))?;
    }
    ensure(v["stabilized_F"] == "z^2+z+1", || format!("F = {}", v["stabilized_F"]))?;
    ensure(v["stabilized_at"] == 6, || format!("stabilized at {}", v["stabilized_at"]))?;
    ensure(dt < ARGCD_TIME, || format!("took {dt:?}"))?;
    Ok(format!("gcd_6 = gcd_12 = z^2+z+1, others 1, {dt:.2?}"))
}

fn criterion_3() -> Outcome {
    let (r, _) = timed_cli(&["solve", "z^2", "(z^2-1/2)/(1-1/2*z^2)", "--json"]);
    ensure(r.code == 0, || format!("exit code {}", r.code))?;
    let v = r.json();
    ensure(v["status"] == "DEGENERATE", || format!("status {}", v["status"]))?;
    let g = parse_bipoly(v["shared_component"].as_str().unwrap(), ['z', 'w']).unwrap();
    let want = parse_bipoly("z^2*w^2-1", ['z', 'w']).unwrap();
    ensure(g.is_associate(&want), || format!("shared component {g}"))?;
    let res = v["witness"]["residual"].as_f64().unwrap_or(f64::INFINITY);
    ensure(res < WITNESS_RESIDUAL, || format!("residual {res}"))?;
    let w = rf(v["witness"]["w"].as_str().unwrap());
    ensure(w.degree() == 2, || format!("W = {w}"))?;
    Ok(format!("shared component {g}, W = {w}, residual {res:e}"))
}

fn criterion_4() -> Outcome {
    let mut r = ChaCha8Rng::seed_from_u64(2024);
    let config = Config::default();
    let (mut finite, mut points) = (0, 0);
    for n in 0..RANDOM_PAIRS {
        let (d1, d2) = (r.gen_range(1..=3), r.gen_range(1..=3));
        let p1 = RatFun::from_poly(gaussian_poly(&mut r, d1, 3));
        let p2 = RatFun::from_poly(gaussian_poly(&mut r, d2, 3));
        let rep = match solve_unimodular_pair(&p1, &p2, &config) {
            Ok(rep) => rep,
            Err(e @ LevelError::BoundViolation { .. }) => return Err(format!("pair {n} ({p1}, {p2}): {e}")),
            Err(e) => return Err(format!("pair {n} ({p1}, {p2}): {e}")),
        };
        if rep.status != SolutionStatus::Finite {
            continue;
        }
        finite += 1;
        let bound = (p1.degree() + p2.degree()).pow(2);
        ensure(rep.points.len() <= bound, || format!("pair {n}: {} > {bound}", rep.points.len()))?;
        for p in &rep.points {
            points += 1;
            for v in &p.values {
                let dev = (v.abs_upper().to_f64() - 1.0).max(1.0 - v.abs_lower().to_f64());
                ensure(dev < LEVEL_DEVIATION, || format!("pair {n} ({p1}, {p2}): ||P| - 1| = {dev}"))?;
            }
        }
    }
    Ok(format!("{RANDOM_PAIRS} pairs, {finite} finite, {points} points, no bound violations"))
}

fn disc_point(r: &mut ChaCha8Rng) -> GaussianRational {
    loop {
        let d = r.gen_range(2..=9);
        let a = gr(r.gen_range(-d..=d), r.gen_range(-d..=d), d);
        if a.norm() < GaussianRational::one().norm() {
            return a;
        }
    }
}

fn blaschke_product(r: &mut ChaCha8Rng) -> RatFun {
    let zeta = gr(3, 4, 5).pow(r.gen_range(-4..=4)).unwrap();
    let mut acc = RatFun::constant(zeta);
    for _ in 0..r.gen_range(1..=3) {
        let a = disc_point(r);
        let m = r.gen_range(1..=3);
        let num = UniPoly::new(vec![-a.clone(), GaussianRational::one()]);
        let den = UniPoly::new(vec![GaussianRational::one(), -a.conj()]);
        acc = acc.mul(&RatFun::make(num, den).unwrap().pow(m));
    }
    acc
}

fn criterion_5() -> Outcome {
    let mut r = ChaCha8Rng::seed_from_u64(5);
    let mut negatives = 0;
    for n in 0..BLASCHKE_SAMPLES {
        let b = blaschke_product(&mut r);
        ensure(is_finite_blaschke(&b) == Ok(true), || format!("sample {n}: {b} rejected"))?;
        let alg = reflection_criterion(&b);
        ensure(alg && cayley_criterion(&b) != Some(false), || format!("sample {n}: criteria disagree on {b}"))?;
        let eps = gr(r.gen_range(1..=9), r.gen_range(-9..=9), r.gen_range(10..=1000));
        let neg = if r.gen_bool(0.5) {
            b.add(&RatFun::constant(eps))
        } else {
            b.scale(&(GaussianRational::one() + eps))
        };
        let alg = reflection_criterion(&neg);
        if let Some(c) = cayley_criterion(&neg) {
            ensure(alg == c, || format!("perturbed {n}: criteria disagree on {neg}"))?;
        }
        if !alg {
            negatives += 1;
        }
    }
    ensure(negatives == BLASCHKE_SAMPLES, || format!("only {negatives} perturbations left the circle"))?;
    Ok(format!("{BLASCHKE_SAMPLES} products accepted, criteria agree on {} maps", 2 * BLASCHKE_SAMPLES))
}

fn gaussian_ratfun(r: &mut ChaCha8Rng, deg: usize) -> RatFun {
    loop {
        let num = gaussian_poly(r, deg, 3);
        let dd = r.gen_range(0..=deg);
        let den = if r.gen_bool(0.5) { UniPoly::one() } else { gaussian_poly(r, dd, 3) };
        if let Ok(q) = RatFun::make(num, den) {
            if q.degree() == deg {
                return q;
            }
        }
    }
}

fn criterion_6() -> Outcome {
    let mut r = ChaCha8Rng::seed_from_u64(6);
    // coprime degrees make every pair proper
    let degrees = [(1, 2), (2, 1), (2, 3), (3, 2), (1, 3), (3, 1), (1, 1)];
    for n in 0..PROPER_PAIRS {
        let (n1, n2) = degrees[n % degrees.len()];
        let p1 = gaussian_ratfun(&mut r, n1);
        let p2 = gaussian_ratfun(&mut r, n2);
        let imp = implicitize(&p1, &p2).map_err(|e| format!("({p1}, {p2}): {e}"))?;
        let f = &imp.curve.f;
        ensure(imp.power == 1, || format!("({p1}, {p2}): power {}", imp.power))?;
        ensure(f.degree_in(1) == Some(n1) && f.degree_in(0) == Some(n2), || {
            format!("({p1}, {p2}): degrees {:?} {:?}", f.degree_in(0), f.degree_in(1))
        })?;
        ensure(substitute(f, &p1, &p2).is_zero(), || format!("({p1}, {p2}): F(P1, P2) != 0"))?;
    }
    let imp = implicitize(&rf("z^2"), &rf("z^4")).unwrap();
    let square = parse_bipoly("(y-x^2)^2", ['x', 'y']).unwrap();
    let line = parse_bipoly("y-x^2", ['x', 'y']).unwrap();
    ensure(imp.raw.is_associate(&square), || format!("raw resultant {}", imp.raw))?;
    ensure(imp.power == 2 && imp.curve.f.is_associate(&line), || format!("extracted {} ^ {}", imp.curve.f, imp.power))?;
    Ok(format!("{PROPER_PAIRS} proper pairs obey the degree law; (z^2, z^4) gives (y-x^2)^2"))
}

fn criterion_7() -> Outcome {
    let config = Config::default();
    let xy = |s: &str| parse_bipoly(s, ['x', 'y']).unwrap();
    let c = cayley_substitute(&xy("x*y-1"));
    ensure(c.is_associate(&xy("x*y+1")), || format!("cayley_substitute(xy-1) = {c}"))?;
    let rep = analyze_unimodular(&PlaneCurve::new(&xy("x*y-1"), true), &config).map_err(|e| e.to_string())?;
    ensure(rep.status == CurveStatus::InfiniteUnimodular, || format!("xy-1: {:?}", rep.status))?;
    ensure(rep.simple_point.is_some(), || "xy-1: no simple point".into())?;
    let rep = analyze_unimodular(&PlaneCurve::new(&xy("x-y-2"), true), &config).map_err(|e| e.to_string())?;
    ensure(rep.status == CurveStatus::FiniteBounded, || format!("x-y-2: {:?}", rep.status))?;
    let want = Some((gr(1, 0, 1), gr(-1, 0, 1)));
    ensure(rep.points.len() == 1 && rep.points[0].exact == want, || format!("x-y-2: {} points", rep.points.len()))?;
    Ok("xy-1 -> xy+1, infinite with a simple point; x-y-2 -> {(1, -1)}".into())
}

fn round_trips(p: &RatFun, w: &RatFun) -> Result<(), String> {
    let q = left_compose_factor(p, w).map_err(|e| format!("{p} over {w}: {e}"))?;
    let back = q.compose(w).map_err(|e| e.to_string())?;
    ensure(&back == p, || format!("{q} o {w} = {back} != {p}"))
}

fn criterion_8() -> Outcome {
    let (a, b) = (rf("z^2+1"), rf("z^4"));
    let w = luroth_generator(&a, &b).map_err(|e| e.to_string())?;
    ensure(w.degree() == 2, || format!("W = {w}"))?;
    round_trips(&a, &w)?;
    round_trips(&b, &w)?;
    let mut r = ChaCha8Rng::seed_from_u64(8);
    for n in 0..LUROTH_PAIRS {
        let inner = gaussian_ratfun(&mut r, 2);
        // degrees 2 and 3 force Q(i)(Q1, Q2) = Q(i)(z)
        let q1 = gaussian_ratfun(&mut r, 2);
        let q2 = RatFun::from_poly(gaussian_poly(&mut r, 3, 3));
        let (p1, p2) = (q1.compose(&inner).unwrap(), q2.compose(&inner).unwrap());
        let g = luroth_generator(&p1, &p2).map_err(|e| format!("pair {n}: {e}"))?;
        ensure(g.degree() == inner.degree(), || format!("pair {n}: deg {} vs {}", g.degree(), inner.degree()))?;
        round_trips(&p1, &g)?;
        round_trips(&p2, &g)?;
    }
    Ok(format!("(z^2+1, z^4) -> W = {w}; {LUROTH_PAIRS} composite pairs recovered"))
}

fn criterion_9() -> Outcome {
    let (r, _) = timed_cli(&["argcd", "z", "z+1", "--json"]);
    ensure(r.code == 0, || format!("argcd exit code {}", r.code))?;
    let f = parse_poly(r.json()["stabilized_F"].as_str().unwrap(), 'z').unwrap();
    let (s, _) = timed_cli(&["solve", "z", "z+1", "--json"]);
    ensure(s.code == 0, || format!("solve exit code {}", s.code))?;
    let balls: Vec<(f64, f64, f64)> = s.json()["points"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p: &Value| (p["re"].as_f64().unwrap(), p["im"].as_f64().unwrap(), p["radius"].as_f64().unwrap()))
        .collect();
    let roots = certified_roots(&f, 256).map_err(|e| e.to_string())?;
    for root in &roots {
        let c = root.center();
        let inside = balls.iter().any(|&(re, im, rad)| (c.re - re).hypot(c.im - im) + root.radius() <= rad);
        ensure(inside, || format!("root {c} of F outside every solution ball"))?;
    }
    // the JSON balls include binary64 rounding, so check the library balls too
    let rep = solve_unimodular_pair(&rf("z"), &rf("z+1"), &Config::default()).map_err(|e| e.to_string())?;
    let fine = certified_roots(&f, 1024).map_err(|e| e.to_string())?;
    for root in &fine {
        let hit = rep.points.iter().any(|p| p.z.contains(&root.location) || contains_exact(&p.z, root));
        ensure(hit, || format!("root {} not inside a certified ball", root.center()))?;
    }
    Ok(format!("{} roots of F inside {} solution balls", roots.len(), balls.len()))
}

fn contains_exact(ball: &ComplexBall, root: &levelcurves::poly::RootBall) -> bool {
    root.exact.as_ref().is_some_and(|e| ball.contains_gaussian(e))
}

fn criterion_10() -> Outcome {
    let (a, _) = timed_cli(&["solve", "z", "z^5", "--json"]);
    let (b, _) = timed_cli(&["solve", "z", "z^5+z", "--json"]);
    ensure(a.code == 0 && b.code == 0, || format!("exit codes {} {}", a.code, b.code))?;
    let (sa, sb) = (a.json()["status"].clone(), b.json()["status"].clone());
    ensure(sa == "DEGENERATE", || format!("(z, z^5): {sa}"))?;
    ensure(sb == "FINITE", || format!("(z, z^5+z): {sb}"))?;
    let n = b.json()["points"].as_array().unwrap().len();
    ensure(n <= count_bound(&rf("z"), &rf("z^5+z")), || format!("{n} points"))?;
    Ok(format!("(z, z^5) DEGENERATE, (z, z^5+z) FINITE with {n} points"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("tangent circles", criterion_1),
        ("gcd stabilization for (z, z+1)", criterion_2),
        ("degenerate dichotomy", criterion_3),
        ("count bound on random pairs", criterion_4),
        ("Blaschke cross-validation", criterion_5),
        ("implicitization degree law", criterion_6),
        ("Cayley substitution and unimodular analysis", criterion_7),
        ("Luroth decomposition", criterion_8),
        ("stabilized roots are solutions", criterion_9),
        ("z^5 versus z^5+z", criterion_10),
    ];
    let mut failed = 0;
    for (n, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let result = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let dt = t.elapsed();
        match result {
            Ok(detail) => println!("PASS criterion {:>2} ({name}): {detail} [{dt:.2?}]", n + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {:>2} ({name}): {why} [{dt:.2?}]", n + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
