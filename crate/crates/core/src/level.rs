//! The common unit-level set `|P1(z)| = |P2(z)| = 1`.
//!
//! For `P = A / B` the level polynomial `L(z, w) = A(z) conj(A)(w) -
//! B(z) conj(B)(w)` satisfies `L(z, conj z) = |A(z)|^2 - |B(z)|^2`, so the
//! solutions are the points `(z, conj z)` on both curves `L1 = 0` and
//! `L2 = 0`. Both curves are invariant under `σ(z, w) = (conj w, conj z)`.
//!
//! A common factor `G` of `L1` and `L2` whose anti-diagonal trace carries a
//! certified simple point makes the solution set infinite. Otherwise the
//! candidates are the roots of `R = Res_w(L1 / G, L2 / G)`. A root `z0` is a
//! solution exactly when the shared root `w0` over `z0` equals `conj z0`;
//! when `w0` is unique it is a rational function `φ(z0)`, and since `σ`
//! permutes the roots of `R`, `conj φ(D)` lying in an isolating disk around
//! the root's ball `D` proves `z0` is a solution.

use std::fmt;

use num_complex::Complex64;
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::arith::{ComplexBall, Dyadic, GaussianRational};
use crate::circle::reflection_criterion;
use crate::config::{Config, ConfigError};
use crate::curve::{left_compose_factor, luroth_generator};
use crate::poly::roots::{fixed_by_involution, isolation_radius};
use crate::poly::{certified_roots_with_cap, BiPoly, FiberMap, PolyError, RootBall, UniPoly};
use crate::ratfun::RatFun;
use crate::trace::{simple_real_points, RealPoint, TraceSearch};

const ZW: [char; 2] = ['z', 'w'];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LevelError {
    #[error("both inputs are constant")]
    ConstantInput,
    #[error("found {found} points, above the bound {bound}")]
    BoundViolation { found: usize, bound: usize },
    #[error("certification failed at the precision cap of {0} bits")]
    CertificationFailed(u32),
    #[error("internal disagreement: {0}")]
    InternalDisagreement(String),
    #[error("no degeneracy witness: {0}")]
    WitnessFitFailed(String),
    #[error(transparent)]
    Config(#[from] ConfigError),
}

fn lift(e: PolyError) -> LevelError {
    match e {
        PolyError::CertificationFailed(p) => LevelError::CertificationFailed(p),
        e => LevelError::InternalDisagreement(e.to_string()),
    }
}

/// `L(z, w) = A(z) conj(A)(w) - B(z) conj(B)(w)` for `P = A / B`.
#[derive(Clone, Debug, PartialEq)]
pub struct LevelPoly {
    pub poly: BiPoly,
    pub source: RatFun,
}

pub fn level_poly(p: &RatFun) -> LevelPoly {
    let part = |u: &UniPoly| &BiPoly::from_uni(ZW, 0, u) * &BiPoly::from_uni(ZW, 1, &u.conj());
    LevelPoly {
        poly: &part(p.num()) - &part(p.den()),
        source: p.clone(),
    }
}

/// `(deg P1 + deg P2)^2`, an upper bound on the number of isolated solutions.
pub fn count_bound(p1: &RatFun, p2: &RatFun) -> usize {
    let s = p1.degree() + p2.degree();
    s * s
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolutionStatus {
    Finite,
    Degenerate,
}

impl fmt::Display for SolutionStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SolutionStatus::Finite => "FINITE",
            SolutionStatus::Degenerate => "DEGENERATE",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CertificationMethod {
    /// The point is a Gaussian rational checked by exact arithmetic.
    Exact,
    /// The unique shared root over the ball is its conjugate.
    Fiber,
    /// A Krawczyk test proves a unique common zero in a box invariant under
    /// `σ`, which is therefore of the form `(z, conj z)`.
    Krawczyk,
}

/// A solution enclosed in a ball containing exactly one solution.
#[derive(Clone, Debug)]
pub struct CertifiedPoint {
    pub z: ComplexBall,
    pub exact: Option<GaussianRational>,
    /// Enclosures of `P1(z)` and `P2(z)` over the ball.
    pub values: [ComplexBall; 2],
    /// Enclosures of `L1(z, conj z)` and `L2(z, conj z)` over the ball.
    pub residuals: [ComplexBall; 2],
    /// Upper bounds on `||P_i(z)| - 1|` over the ball.
    pub deviations: [f64; 2],
    /// The ball provably contains exactly one solution.
    pub certified: bool,
    pub method: CertificationMethod,
}

/// Evidence for an infinite solution set: `P_i = Q_i ∘ W` with `Q_i ∘ M`
/// circle-preserving up to `residual` on sample points of the circle.
#[derive(Clone, Debug)]
pub struct DegeneracyWitness {
    pub w: RatFun,
    pub q1: RatFun,
    pub q2: RatFun,
    /// Möbius map sending the unit circle onto the circle or line containing
    /// `W` of the shared trace.
    pub mobius: RatFun,
    pub residual: f64,
}

#[derive(Clone, Debug)]
pub struct SolutionReport {
    pub status: SolutionStatus,
    pub points: Vec<CertifiedPoint>,
    pub bound: usize,
    /// Common factor of the level polynomials with infinite trace.
    pub shared_component: Option<BiPoly>,
    /// Certified simple points `x + iy` of the shared trace.
    pub trace_points: Vec<RealPoint>,
    pub witness: Option<DegeneracyWitness>,
    pub witness_error: Option<String>,
    /// Working precision at which the points were certified.
    pub precision_bits: u32,
}

impl SolutionReport {
    fn new(status: SolutionStatus, bound: usize, prec: u32) -> Self {
        Self {
            status,
            points: Vec::new(),
            bound,
            shared_component: None,
            trace_points: Vec::new(),
            witness: None,
            witness_error: None,
            precision_bits: prec,
        }
    }
}

/// Real curve whose real points are the anti-diagonal points of `g`.
fn anti_diagonal_curve(g: &BiPoly) -> BiPoly {
    let (gr, gi) = g.squarefree_part().realify();
    match (gr.is_zero(), gi.is_zero()) {
        (false, true) => gr,
        (true, false) => gi,
        (false, false) => gr.gcd(&gi).unwrap(),
        (true, true) => BiPoly::constant(['x', 'y'], GaussianRational::one()),
    }
}

/// Solves `|P1(z)| = |P2(z)| = 1`.
pub fn solve_unimodular_pair(
    p1: &RatFun,
    p2: &RatFun,
    config: &Config,
) -> Result<SolutionReport, LevelError> {
    config.validate()?;
    let prec = config.precision_bits;
    let bound = count_bound(p1, p2);
    match (p1.constant_value(), p2.constant_value()) {
        (Some(_), Some(_)) => return Err(LevelError::ConstantInput),
        (Some(c), None) | (None, Some(c)) => {
            if !c.is_unimodular() {
                return Ok(SolutionReport::new(SolutionStatus::Finite, bound, prec));
            }
            let other = if p1.is_constant() { p2 } else { p1 };
            let mut r = SolutionReport::new(SolutionStatus::Degenerate, bound, prec);
            r.shared_component = Some(level_poly(other).poly.normalized());
            let q_const = RatFun::constant(c);
            let (q1, q2) = if p1.is_constant() {
                (q_const, RatFun::identity())
            } else {
                (RatFun::identity(), q_const)
            };
            r.witness = Some(witness_with(other.clone(), q1, q2, RatFun::identity()));
            return Ok(r);
        }
        _ => {}
    }
    let l1 = level_poly(p1).poly;
    let l2 = level_poly(p2).poly;
    let g = l1.gcd(&l2).map_err(lift)?;
    let (mut r1, mut r2) = (l1.clone(), l2.clone());
    if !g.is_constant() {
        let h = anti_diagonal_curve(&g);
        let budget = TraceSearch {
            grid: config.grid_resolution,
            refine_bits: prec,
            want: 5,
        };
        let pts = simple_real_points(&h, &budget);
        if !pts.is_empty() {
            let mut r = SolutionReport::new(SolutionStatus::Degenerate, bound, prec);
            r.shared_component = Some(g.clone());
            let trace: Vec<GaussianRational> = pts.iter().map(RealPoint::to_gaussian).collect();
            match explain_degenerate(p1, p2, &trace, config) {
                Ok(w) => r.witness = Some(w),
                Err(e) => r.witness_error = Some(e.to_string()),
            }
            r.trace_points = pts;
            return Ok(r);
        }
        r1 = l1.div_exact(&g).expect("gcd divides");
        r2 = l2.div_exact(&g).expect("gcd divides");
    }
    let (points, used) = finite_points(p1, p2, (&l1, &l2), (&r1, &r2), config)?;
    if points.len() > bound {
        return Err(LevelError::BoundViolation {
            found: points.len(),
            bound,
        });
    }
    let mut r = SolutionReport::new(SolutionStatus::Finite, bound, used);
    r.points = points;
    Ok(r)
}

enum Verdict {
    Solution(CertificationMethod),
    NotSolution,
    Undecided,
}

fn finite_points(
    p1: &RatFun,
    p2: &RatFun,
    full: (&BiPoly, &BiPoly),
    reduced: (&BiPoly, &BiPoly),
    config: &Config,
) -> Result<(Vec<CertifiedPoint>, u32), LevelError> {
    let (l1, l2) = full;
    let (r1, r2) = reduced;
    let mut prec = config.precision_bits;
    if r1.degree_in(1) == Some(0) || r2.degree_in(1) == Some(0) {
        return Ok((Vec::new(), prec));
    }
    let res = r1.resultant(r2, 1).map_err(lift)?;
    if res.is_zero() {
        return Err(LevelError::InternalDisagreement(
            "resultant of coprime level polynomials vanished".into(),
        ));
    }
    if res.is_constant() {
        return Ok((Vec::new(), prec));
    }
    let fiber = FiberMap::new(r1, r2);
    loop {
        let roots = certified_roots_with_cap(&res, prec, config.max_precision_bits).map_err(lift)?;
        let mut out = Vec::new();
        let mut undecided = false;
        for (j, root) in roots.iter().enumerate() {
            let verdict = match &root.exact {
                Some(q) => {
                    let qc = q.conj();
                    if l1.eval(q, &qc).is_zero() && l2.eval(q, &qc).is_zero() {
                        Verdict::Solution(CertificationMethod::Exact)
                    } else {
                        Verdict::NotSolution
                    }
                }
                None => {
                    let d = &root.location;
                    let dc = d.conj();
                    if !l1.eval_ball(d, &dc).contains_zero() || !l2.eval_ball(d, &dc).contains_zero() {
                        Verdict::NotSolution
                    } else {
                        let by_fiber = fiber
                            .as_ref()
                            .and_then(|f| f.eval_ball(d))
                            .and_then(|w| fixed_by_involution(&roots, j, &w.conj()));
                        match by_fiber {
                            Some(true) => Verdict::Solution(CertificationMethod::Fiber),
                            Some(false) => Verdict::NotSolution,
                            None if krawczyk_on_diagonal((r1, r2), &roots, j) => {
                                Verdict::Solution(CertificationMethod::Krawczyk)
                            }
                            None => Verdict::Undecided,
                        }
                    }
                }
            };
            match verdict {
                Verdict::Solution(method) => {
                    out.push(certified_point((p1, p2), (l1, l2), root, method, prec)?)
                }
                Verdict::NotSolution => {}
                Verdict::Undecided => {
                    undecided = true;
                    break;
                }
            }
        }
        if !undecided {
            return Ok((out, prec));
        }
        prec *= 2;
        if prec > config.max_precision_bits {
            return Err(LevelError::CertificationFailed(config.max_precision_bits));
        }
    }
}

/// Krawczyk test for `(r1, r2)` on `D x conj D`, with `D` a disk around
/// `roots[j]` that isolates it among the roots of the resultant.
///
/// The box is `σ`-invariant, so a unique common zero in it is `σ`-fixed.
fn krawczyk_on_diagonal((r1, r2): (&BiPoly, &BiPoly), roots: &[RootBall], j: usize) -> bool {
    if !roots.iter().all(|b| b.certified) {
        return false;
    }
    let own = &roots[j].location;
    let prec = own.precision();
    let small = own.radius().mul(&Dyadic::from_i64(4)).add(&Dyadic::pow2(-(prec as i64) / 2));
    let radii = match isolation_radius(roots, j) {
        Some(iso) if small < iso => vec![small, iso],
        Some(iso) => vec![iso],
        None => vec![small, Dyadic::pow2(-4)],
    };
    radii.iter().any(|rho| krawczyk_box((r1, r2), own, rho))
}

fn krawczyk_box((r1, r2): (&BiPoly, &BiPoly), own: &ComplexBall, rho: &Dyadic) -> bool {
    let prec = own.precision();
    let cz = own.mid();
    let cw = cz.conj();
    let dz = ComplexBall::new(cz.re().clone(), cz.im().clone(), rho.clone(), prec);
    let dw = dz.conj();
    let grads: Vec<[BiPoly; 2]> = [r1, r2]
        .iter()
        .map(|r| [r.derivative(0), r.derivative(1)])
        .collect();
    let jc: Vec<Complex64> = grads
        .iter()
        .flat_map(|g| g.iter().map(|d| d.eval_ball(&cz, &cw).center_f64()).collect::<Vec<_>>())
        .collect();
    let det = jc[0] * jc[3] - jc[1] * jc[2];
    if !(det.norm() > 0.0) || !det.is_finite() {
        return false;
    }
    let inv = [jc[3] / det, -jc[1] / det, -jc[2] / det, jc[0] / det];
    let y: Vec<ComplexBall> = inv.iter().map(|v| ComplexBall::from_f64(v.re, v.im, prec)).collect();
    let f = [r1.eval_ball(&cz, &cw), r2.eval_ball(&cz, &cw)];
    let jb: Vec<ComplexBall> = grads
        .iter()
        .flat_map(|g| g.iter().map(|d| d.eval_ball(&dz, &dw)).collect::<Vec<_>>())
        .collect();
    let delta = ComplexBall::new(Dyadic::zero(), Dyadic::zero(), rho.clone(), prec);
    let one = ComplexBall::one(prec);
    // M = I - Y J(B)
    let m = |a: usize, b: usize| {
        let yj = y[2 * a].mul(&jb[b]).add(&y[2 * a + 1].mul(&jb[2 + b]));
        if a == b {
            one.sub(&yj)
        } else {
            yj.neg()
        }
    };
    let inner = rho.mul(&Dyadic::from_i64(1023)).mul_pow2(-10);
    [(0, &cz, &dz), (1, &cw, &dw)].iter().all(|&(a, c, d)| {
        let step = y[2 * a].mul(&f[0]).add(&y[2 * a + 1].mul(&f[1]));
        let k = c.sub(&step).add(&m(a, 0).mul(&delta)).add(&m(a, 1).mul(&delta));
        ComplexBall::new(d.re().clone(), d.im().clone(), inner.clone(), prec).contains(&k)
    })
}

fn deviation_from_one(v: &ComplexBall) -> f64 {
    let hi = v.abs_upper().to_f64() - 1.0;
    let lo = 1.0 - v.abs_lower().to_f64();
    hi.max(lo).max(0.0)
}

fn certified_point(
    (p1, p2): (&RatFun, &RatFun),
    (l1, l2): (&BiPoly, &BiPoly),
    root: &crate::poly::RootBall,
    method: CertificationMethod,
    prec: u32,
) -> Result<CertifiedPoint, LevelError> {
    let z = match &root.exact {
        Some(q) => ComplexBall::from_gaussian(q, prec),
        None => root.location.clone(),
    };
    let mut values = Vec::with_capacity(2);
    for p in [p1, p2] {
        let v = match &root.exact {
            Some(q) => ComplexBall::from_gaussian(&p.eval(q).ok_or_else(pole)?, prec),
            None => p.eval_ball(&z).map_err(|_| pole())?,
        };
        let one = Dyadic::one();
        if v.abs_lower() > one || v.abs_upper() < one {
            return Err(LevelError::InternalDisagreement(format!(
                "certified point {:?} is off the level set of {p}",
                z.center_f64()
            )));
        }
        values.push(v);
    }
    let zc = z.conj();
    Ok(CertifiedPoint {
        deviations: [deviation_from_one(&values[0]), deviation_from_one(&values[1])],
        residuals: [l1.eval_ball(&z, &zc), l2.eval_ball(&z, &zc)],
        values: [values[0].clone(), values[1].clone()],
        exact: root.exact.clone(),
        z,
        certified: true,
        method,
    })
}

fn pole() -> LevelError {
    LevelError::InternalDisagreement("certified point is a pole".into())
}

/// Rational points of the unit circle used to measure witness residuals.
pub fn circle_samples16() -> Vec<GaussianRational> {
    let mut v = vec![
        GaussianRational::one(),
        GaussianRational::i(),
        -GaussianRational::one(),
        -GaussianRational::i(),
    ];
    for (a, b, c) in [(3, 4, 5), (4, 3, 5), (5, 12, 13)] {
        for (sa, sb) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
            v.push(GaussianRational::from_parts(sa * a, sb * b, c));
        }
    }
    v
}

/// Largest `||Q(u)| - 1|` over the sample points, infinite at a pole.
fn circle_residual(q: &RatFun) -> f64 {
    circle_samples16()
        .iter()
        .map(|u| match q.eval(u) {
            Some(v) => (v.norm().to_f64().unwrap_or(f64::INFINITY).sqrt() - 1.0).abs(),
            None => f64::INFINITY,
        })
        .fold(0.0, f64::max)
}

fn witness_with(w: RatFun, q1: RatFun, q2: RatFun, mobius: RatFun) -> DegeneracyWitness {
    let residual = [&q1, &q2]
        .iter()
        .map(|q| q.compose(&mobius).map(|c| circle_residual(&c)).unwrap_or(f64::INFINITY))
        .fold(0.0, f64::max);
    DegeneracyWitness {
        w,
        q1,
        q2,
        mobius,
        residual,
    }
}

/// The Möbius map sending `1, i, -1` to `a, b, c`.
pub fn mobius_through(
    a: &GaussianRational,
    b: &GaussianRational,
    c: &GaussianRational,
) -> Option<RatFun> {
    if a == b || b == c || a == c {
        return None;
    }
    let i = GaussianRational::i();
    let one = GaussianRational::one();
    // rows [[p, q], [r, s]] act as z -> (p z + q) / (r z + s)
    let f = [
        [b - c, -(a * &(b - c))],
        [b - a, -(c * &(b - a))],
    ];
    let g = [
        [&i + &one, -(&i + &one)],
        [&i - &one, &i - &one],
    ];
    let adj = [[f[1][1].clone(), -f[0][1].clone()], [-f[1][0].clone(), f[0][0].clone()]];
    let m = |r: usize, k: usize| &(&adj[r][0] * &g[0][k]) + &(&adj[r][1] * &g[1][k]);
    let det = &(&m(0, 0) * &m(1, 1)) - &(&m(0, 1) * &m(1, 0));
    if det.is_zero() {
        return None;
    }
    RatFun::make(
        UniPoly::new(vec![m(0, 1), m(0, 0)]),
        UniPoly::new(vec![m(1, 1), m(1, 0)]),
    )
    .ok()
}

/// Witness for a degenerate pair from points `s_k` of the shared trace:
/// `W` generates `Q(i)(P1, P2)`, `P_i = Q_i ∘ W`, and `M` maps the unit
/// circle onto the circle through `W(s_k)`.
pub fn explain_degenerate(
    p1: &RatFun,
    p2: &RatFun,
    trace: &[GaussianRational],
    config: &Config,
) -> Result<DegeneracyWitness, LevelError> {
    let fit = |e: crate::curve::CurveError| LevelError::WitnessFitFailed(e.to_string());
    let w = luroth_generator(p1, p2).map_err(fit)?;
    let q1 = left_compose_factor(p1, &w).map_err(fit)?;
    let q2 = left_compose_factor(p2, &w).map_err(fit)?;
    if reflection_criterion(&q1) && reflection_criterion(&q2) {
        return Ok(witness_with(w, q1, q2, RatFun::identity()));
    }
    let images: Vec<GaussianRational> = trace.iter().filter_map(|s| w.eval(s)).collect();
    let mut best: Option<DegeneracyWitness> = None;
    let n = images.len();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let Some(m) = mobius_through(&images[a], &images[b], &images[c]) else {
                    continue;
                };
                let cand = witness_with(w.clone(), q1.clone(), q2.clone(), m);
                if best.as_ref().map_or(true, |x| cand.residual < x.residual) {
                    best = Some(cand);
                }
            }
        }
    }
    match best {
        Some(b) if b.residual <= config.tolerance => Ok(b),
        Some(b) => Err(LevelError::WitnessFitFailed(format!(
            "best residual {:e} exceeds tolerance {:e}",
            b.residual, config.tolerance
        ))),
        None => Err(LevelError::WitnessFitFailed(
            "fewer than three distinct trace images".into(),
        )),
    }
}
