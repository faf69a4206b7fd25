//! Plane curves parametrized by pairs of rational functions: implicitization,
//! Cayley substitutions, unimodular points and Lüroth decomposition.

use num_rational::BigRational;
use thiserror::Error;

use crate::arith::{ComplexBall, GaussianRational};
use crate::config::Config;
use crate::poly::roots::fixed_by_involution;
use crate::poly::{
    certified_roots_with_cap, sylvester_resultant, BiPoly, FiberMap, PolyError, RootBall, UniPoly,
};
use crate::ratfun::RatFun;
use crate::trace::{simple_real_points, RealPoint, TraceSearch};

const XY: [char; 2] = ['x', 'y'];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error("both parametrizing functions are constant; the image is a point")]
    ImagePoint,
    #[error("both inputs are constant")]
    BothConstant,
    #[error("the function does not factor through the given inner function")]
    NotAFactor,
    #[error("the curve shares a component with its reflection but no real point was certified")]
    SharedComponentUnresolved,
    #[error("certification failed at the precision cap of {0} bits")]
    CertificationFailed(u32),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

fn lift(e: PolyError) -> CurveError {
    match e {
        PolyError::CertificationFailed(p) => CurveError::CertificationFailed(p),
        e => CurveError::Poly(e),
    }
}

/// A plane curve `f(x, y) = 0` with the content of `f` removed.
#[derive(Clone, Debug, PartialEq)]
pub struct PlaneCurve {
    pub f: BiPoly,
    pub degree: usize,
    /// Set when `f` is known to be irreducible, as for implicitized curves.
    pub assumed_irreducible: bool,
}

impl PlaneCurve {
    pub fn new(f: &BiPoly, assumed_irreducible: bool) -> Self {
        let f = f.renamed(XY).normalized();
        Self {
            degree: f.total_degree().unwrap_or(0),
            f,
            assumed_irreducible,
        }
    }
}

/// Result of [`implicitize`].
#[derive(Clone, Debug)]
pub struct Implicitization {
    /// The reduced implicit equation.
    pub curve: PlaneCurve,
    /// `Res_t(A1(t) - x B1(t), A2(t) - y B2(t))` before power extraction.
    pub raw: BiPoly,
    /// Exponent `m` with `raw = c * f^m`.
    pub power: usize,
}

fn interpolate(xs: &[GaussianRational], ys: &[GaussianRational]) -> UniPoly {
    let n = xs.len();
    let mut dd = ys.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = &dd[i] - &dd[i - 1];
            let den = &xs[i] - &xs[i - level];
            dd[i] = num.checked_div(&den).expect("distinct nodes");
        }
    }
    let mut acc = UniPoly::constant(dd[n - 1].clone());
    for i in (0..n - 1).rev() {
        let shift = UniPoly::new(vec![-xs[i].clone(), GaussianRational::one()]);
        acc = &(&acc * &shift) + &UniPoly::constant(dd[i].clone());
    }
    acc
}

fn padded(p: &UniPoly, len: usize) -> Vec<GaussianRational> {
    (0..len).map(|k| p.coeff(k)).collect()
}

/// Implicit equation `F(x, y)` of the curve `z -> (P1(z), P2(z))`, with
/// `deg_y F <= deg P1` and `deg_x F <= deg P2`.
pub fn implicitize(p1: &RatFun, p2: &RatFun) -> Result<Implicitization, CurveError> {
    let line = |c: GaussianRational, idx: usize| {
        let f = &BiPoly::var(XY, idx) - &BiPoly::constant(XY, c);
        Implicitization {
            curve: PlaneCurve::new(&f, true),
            raw: f,
            power: 1,
        }
    };
    match (p1.constant_value(), p2.constant_value()) {
        (Some(_), Some(_)) => return Err(CurveError::ImagePoint),
        (Some(c), None) => return Ok(line(c, 0)),
        (None, Some(c)) => return Ok(line(c, 1)),
        _ => {}
    }
    let (n1, n2) = (p1.degree(), p2.degree());
    let a1 = padded(p1.num(), n1 + 1);
    let b1 = padded(p1.den(), n1 + 1);
    let a2 = padded(p2.num(), n2 + 1);
    let b2 = padded(p2.den(), n2 + 1);
    let q: Vec<UniPoly> = a2
        .iter()
        .zip(&b2)
        .map(|(a, b)| UniPoly::new(vec![a.clone(), -b.clone()]))
        .collect();
    let xs: Vec<GaussianRational> = (0..=n2 as i64).map(GaussianRational::from_integer).collect();
    let slices: Vec<UniPoly> = xs
        .iter()
        .map(|x| {
            let p: Vec<UniPoly> = a1
                .iter()
                .zip(&b1)
                .map(|(a, b)| UniPoly::constant(a - &(x * b)))
                .collect();
            sylvester_resultant(&p, &q)
        })
        .collect();
    let rows: Vec<UniPoly> = (0..=n1)
        .map(|j| {
            let ys: Vec<GaussianRational> = slices.iter().map(|s| s.coeff(j)).collect();
            interpolate(&xs, &ys)
        })
        .collect();
    let raw = BiPoly::from_coeffs_in(XY, 1, &rows);
    let f = raw.squarefree_part();
    let power = raw.total_degree().unwrap_or(0) / f.total_degree().unwrap_or(1).max(1);
    Ok(Implicitization {
        curve: PlaneCurve::new(&f, true),
        raw,
        power,
    })
}

/// `F(P1(z), P2(z))` as a rational function.
pub fn substitute(f: &BiPoly, p1: &RatFun, p2: &RatFun) -> RatFun {
    let mut acc = RatFun::zero();
    for (a, b, c) in f.terms() {
        acc = acc.add(&p1.pow(a).mul(&p2.pow(b)).scale(&c));
    }
    acc
}

/// Outcome of [`conj_reality_test`].
#[derive(Clone, Debug, PartialEq)]
pub struct RealityTest {
    /// Whether some non-zero multiple of the polynomial has real coefficients.
    pub real: bool,
    /// The unimodular ratio `c` with `conj(F) = c F`.
    pub ratio: Option<GaussianRational>,
    /// A unimodular `λ` in Q(i) with `λ F` real, when one exists.
    pub lambda: Option<GaussianRational>,
    /// A real associate of `F`.
    pub real_form: Option<BiPoly>,
}

/// Whether `F` is a constant multiple of a real polynomial.
pub fn conj_reality_test(f: &BiPoly) -> RealityTest {
    let terms = f.terms();
    let none = RealityTest {
        real: false,
        ratio: None,
        lambda: None,
        real_form: None,
    };
    let Some((_, _, lead)) = terms.first() else {
        return RealityTest {
            real: true,
            ratio: Some(GaussianRational::one()),
            lambda: Some(GaussianRational::one()),
            real_form: Some(f.clone()),
        };
    };
    let c = lead.conj().checked_div(lead).unwrap();
    if terms.iter().any(|(_, _, g)| g.conj() != &c * g) {
        return none;
    }
    let lambda = c.sqrt();
    RealityTest {
        real: true,
        real_form: Some(f.scale(&lead.inv().unwrap())),
        ratio: Some(c),
        lambda,
    }
}

fn substitute_mobius(g: &BiPoly, num: &UniPoly, den: &UniPoly) -> BiPoly {
    let vars = g.vars();
    let dx = g.degree_in(0).unwrap_or(0);
    let dy = g.degree_in(1).unwrap_or(0);
    let factors = |d: usize| -> Vec<UniPoly> {
        (0..=d).map(|a| &num.pow(a) * &den.pow(d - a)).collect()
    };
    let fx = factors(dx);
    let fy = factors(dy);
    let mut acc = BiPoly::zero(vars);
    for (a, b, c) in g.terms() {
        let t = &BiPoly::from_uni(vars, 0, &fx[a]) * &BiPoly::from_uni(vars, 1, &fy[b]);
        acc = &acc + &t.scale(&c);
    }
    acc
}

/// `G(T(x), T(y))` cleared of denominators, `T(z) = i (1 + z) / (1 - z)`.
pub fn cayley_substitute(g: &BiPoly) -> BiPoly {
    let i = GaussianRational::i();
    let num = UniPoly::new(vec![i.clone(), i]);
    let den = UniPoly::from_i64(&[1, -1]);
    substitute_mobius(g, &num, &den)
}

/// `G(S(x), S(y))` cleared of denominators, `S(x) = (x - i) / (x + i)`; real
/// points of the result correspond to unimodular points of `G`.
pub fn inverse_cayley_substitute(g: &BiPoly) -> BiPoly {
    let i = GaussianRational::i();
    let num = UniPoly::new(vec![-i.clone(), GaussianRational::one()]);
    let den = UniPoly::new(vec![i, GaussianRational::one()]);
    substitute_mobius(g, &num, &den)
}

/// Upper bound on the singular points of an irreducible curve of degree `d`.
pub fn max_singular_points(d: usize) -> usize {
    if d < 3 {
        0
    } else {
        (d - 1) * (d - 2) / 2
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CurveStatus {
    InfiniteUnimodular,
    FiniteBounded,
}

/// A point of the curve with `|x| = |y| = 1`.
#[derive(Clone, Debug)]
pub struct UnimodularPoint {
    pub x: ComplexBall,
    pub y: ComplexBall,
    pub exact: Option<(GaussianRational, GaussianRational)>,
    /// The real point of the inverse Cayley image it comes from.
    pub real_preimage: Option<(BigRational, BigRational)>,
}

/// Result of [`analyze_unimodular`].
#[derive(Clone, Debug)]
pub struct CurveReport {
    pub status: CurveStatus,
    pub cayley_image: BiPoly,
    pub inverse_cayley_image: BiPoly,
    pub reality: RealityTest,
    /// A certified simple point when the unimodular trace is infinite.
    pub simple_point: Option<UnimodularPoint>,
    /// All unimodular points when the trace is finite.
    pub points: Vec<UnimodularPoint>,
    /// `d^2` for a curve of degree `d`.
    pub bound: usize,
    pub max_singular_points: usize,
}

fn one_ball(prec: u32) -> ComplexBall {
    ComplexBall::one(prec)
}

fn exact_point(x: &GaussianRational, y: &GaussianRational, prec: u32) -> UnimodularPoint {
    UnimodularPoint {
        x: ComplexBall::from_gaussian(x, prec),
        y: ComplexBall::from_gaussian(y, prec),
        exact: Some((x.clone(), y.clone())),
        real_preimage: None,
    }
}

fn from_real_point(p: &RealPoint, prec: u32) -> Option<UnimodularPoint> {
    let i = ComplexBall::from_gaussian(&GaussianRational::i(), prec);
    let map = |c: &BigRational, r: &BigRational| -> Option<ComplexBall> {
        let (rd, err) = crate::arith::Dyadic::from_rational(r, 64);
        let b = ComplexBall::from_gaussian(&GaussianRational::from_real(c.clone()), prec)
            .inflate(&rd.add(&err).mag_up());
        b.sub(&i).div(&b.add(&i)).ok()
    };
    Some(UnimodularPoint {
        x: map(&p.x, &p.x_radius)?,
        y: map(&p.y, &p.y_radius)?,
        exact: None,
        real_preimage: Some((p.x.clone(), p.y.clone())),
    })
}

/// `x^dx y^dy conj(F)(1/x, 1/y)`.
pub fn reflect_curve(f: &BiPoly) -> BiPoly {
    let dx = f.degree_in(0).unwrap_or(0);
    let dy = f.degree_in(1).unwrap_or(0);
    let terms: Vec<_> = f
        .terms()
        .into_iter()
        .map(|(a, b, c)| (dx - a, dy - b, c.conj()))
        .collect();
    BiPoly::from_terms(f.vars(), &terms)
}

/// Unimodular points of `C: F(x, y) = 0`, or a certified simple one when
/// there are infinitely many.
///
/// Unimodular points correspond to real points of the inverse Cayley image
/// `F(S(x), S(y))`, `S(x) = (x - i)/(x + i)`. If that image is a multiple of
/// a real polynomial with a certified simple real point the trace is
/// infinite. Otherwise `F` and its reflection `F*` are coprime and the
/// unimodular points are among their finitely many common zeros.
pub fn analyze_unimodular(curve: &PlaneCurve, config: &Config) -> Result<CurveReport, CurveError> {
    let f = &curve.f;
    let prec = config.precision_bits;
    let d = f.total_degree().unwrap_or(0);
    let hat = inverse_cayley_substitute(f);
    let reality = conj_reality_test(&hat);
    let mut report = CurveReport {
        status: CurveStatus::FiniteBounded,
        cayley_image: cayley_substitute(f),
        inverse_cayley_image: hat,
        reality,
        simple_point: None,
        points: Vec::new(),
        bound: d * d,
        max_singular_points: max_singular_points(d),
    };
    if f.is_constant() {
        return Ok(report);
    }
    let dx = f.degree_in(0).unwrap_or(0);
    let dy = f.degree_in(1).unwrap_or(0);
    if dx == 0 || dy == 0 {
        let (idx, u) = if dy == 0 {
            (0, f.coeffs_in(1)[0].clone())
        } else {
            (1, f.coeffs_in(0)[0].clone())
        };
        if let Some(b) = unimodular_roots(&u, config)?.into_iter().next() {
            let (x, y) = if idx == 0 { (b.0, one_ball(prec)) } else { (one_ball(prec), b.0) };
            let exact = b.1.map(|q| {
                if idx == 0 {
                    (q, GaussianRational::one())
                } else {
                    (GaussianRational::one(), q)
                }
            });
            report.status = CurveStatus::InfiniteUnimodular;
            report.simple_point = Some(UnimodularPoint {
                x,
                y,
                exact,
                real_preimage: None,
            });
        }
        return Ok(report);
    }
    if let Some(h) = report.reality.real_form.as_ref().filter(|_| report.reality.real) {
        let budget = TraceSearch {
            grid: config.grid_resolution,
            refine_bits: prec,
            want: 1,
        };
        if let Some(p) = simple_real_points(h, &budget).first() {
            report.status = CurveStatus::InfiniteUnimodular;
            report.simple_point = from_real_point(p, prec);
            return Ok(report);
        }
    }
    let fstar = reflect_curve(f);
    if !f.gcd(&fstar).map_err(lift)?.is_constant() {
        return Err(CurveError::SharedComponentUnresolved);
    }
    report.points = reflection_fixed_points(f, &fstar, config)?;
    Ok(report)
}

fn reflected(b: &ComplexBall) -> Option<ComplexBall> {
    b.conj().inv().ok()
}

fn on_circle(roots: &[RootBall], j: usize) -> Option<bool> {
    match &roots[j].exact {
        Some(q) => Some(q.is_unimodular()),
        None => fixed_by_involution(roots, j, &reflected(&roots[j].location)?),
    }
}

/// Unimodular roots of a univariate polynomial as balls with their exact
/// values when rational.
fn unimodular_roots(
    u: &UniPoly,
    config: &Config,
) -> Result<Vec<(ComplexBall, Option<GaussianRational>)>, CurveError> {
    let d = u.deg0();
    let ustar = UniPoly::new((0..=d).map(|k| u.coeff(d - k).conj()).collect());
    let g = u.gcd(&ustar).map_err(lift)?;
    if g.is_constant() {
        return Ok(Vec::new());
    }
    let mut prec = config.precision_bits;
    loop {
        let roots = certified_roots_with_cap(&g, prec, config.max_precision_bits).map_err(lift)?;
        let mut out = Vec::new();
        let mut undecided = false;
        for j in 0..roots.len() {
            match on_circle(&roots, j) {
                Some(true) => out.push((roots[j].location.clone(), roots[j].exact.clone())),
                Some(false) => {}
                None => undecided = true,
            }
        }
        if !undecided {
            return Ok(out);
        }
        prec *= 2;
        if prec > config.max_precision_bits {
            return Err(CurveError::CertificationFailed(config.max_precision_bits));
        }
    }
}

/// Common zeros of `F` and `F*` with both coordinates unimodular, assuming
/// the two are coprime.
fn reflection_fixed_points(
    f: &BiPoly,
    fstar: &BiPoly,
    config: &Config,
) -> Result<Vec<UnimodularPoint>, CurveError> {
    let r = if fstar.degree_in(1) == Some(0) {
        fstar.coeffs_in(1)[0].clone()
    } else {
        f.resultant(fstar, 1).map_err(lift)?
    };
    if r.is_zero() {
        return Err(CurveError::SharedComponentUnresolved);
    }
    if r.is_constant() {
        return Ok(Vec::new());
    }
    let fiber = FiberMap::new(f, fstar);
    let mut prec = config.precision_bits;
    loop {
        let roots = certified_roots_with_cap(&r, prec, config.max_precision_bits).map_err(lift)?;
        let mut out = Vec::new();
        let mut undecided = false;
        for j in 0..roots.len() {
            match on_circle(&roots, j) {
                Some(false) => continue,
                None => {
                    undecided = true;
                    break;
                }
                Some(true) => {}
            }
            if let Some(x) = &roots[j].exact {
                let g = f.eval_var(0, x).gcd(&fstar.eval_var(0, x)).map_err(lift)?;
                if g.is_constant() {
                    continue;
                }
                for (yb, yq) in unimodular_roots(&g, config)? {
                    out.push(match yq {
                        Some(y) => exact_point(x, &y, prec),
                        None => UnimodularPoint {
                            x: ComplexBall::from_gaussian(x, prec),
                            y: yb,
                            exact: None,
                            real_preimage: None,
                        },
                    });
                }
                continue;
            }
            let x = &roots[j].location;
            match fiber.as_ref().and_then(|m| m.eval_ball(x)) {
                Some(y) if !y.contains_zero() => out.push(UnimodularPoint {
                    x: x.clone(),
                    y,
                    exact: None,
                    real_preimage: None,
                }),
                _ => {
                    undecided = true;
                    break;
                }
            }
        }
        if !undecided {
            return Ok(out);
        }
        prec *= 2;
        if prec > config.max_precision_bits {
            return Err(CurveError::CertificationFailed(config.max_precision_bits));
        }
    }
}

/// `A(y) B(x) - A(x) B(y)` for `P = A / B`.
fn separated(p: &RatFun) -> BiPoly {
    let a = |idx| BiPoly::from_uni(XY, idx, p.num());
    let b = |idx| BiPoly::from_uni(XY, idx, p.den());
    &(&a(1) * &b(0)) - &(&a(0) * &b(1))
}

/// A generator `W` of the field `Q(i)(P1, P2)`, so that both inputs are
/// rational functions of `W`.
///
/// The gcd of `A_k(y) B_k(x) - A_k(x) B_k(y)` over `k`, made monic in `y`,
/// has its coefficients in `Q(i)(P1, P2)`, and any non-constant one
/// generates that field. The result is scaled to a monic numerator.
pub fn luroth_generator(p1: &RatFun, p2: &RatFun) -> Result<RatFun, CurveError> {
    match (p1.is_constant(), p2.is_constant()) {
        (true, true) => return Err(CurveError::BothConstant),
        (true, false) => return Ok(p2.clone()),
        (false, true) => return Ok(p1.clone()),
        _ => {}
    }
    let h = separated(p1).gcd(&separated(p2)).map_err(lift)?;
    let rows = h.coeffs_in(1);
    let top = rows.last().expect("non-zero gcd").clone();
    for row in &rows[..rows.len() - 1] {
        let w = RatFun::make(row.clone(), top.clone()).expect("non-zero leading row");
        if !w.is_constant() {
            let lead = w.num().leading_coeff().inv().expect("non-zero numerator");
            return Ok(w.scale(&lead));
        }
    }
    Ok(p1.clone())
}

fn nullspace(mut m: Vec<Vec<GaussianRational>>, ncols: usize) -> Vec<Vec<GaussianRational>> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].inv().unwrap();
        for c in 0..ncols {
            m[row][c] = &m[row][c] * &inv;
        }
        for r in 0..m.len() {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in 0..ncols {
                    let t = &f * &m[row][c];
                    m[r][c] = &m[r][c] - &t;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    (0..ncols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![GaussianRational::zero(); ncols];
            v[free] = GaussianRational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[r][free].clone();
            }
            v
        })
        .collect()
}

/// The rational function `Q` with `Q(W) = P`.
pub fn left_compose_factor(p: &RatFun, w: &RatFun) -> Result<RatFun, CurveError> {
    let (n, m) = (p.degree(), w.degree());
    if m == 0 || n % m != 0 {
        return Err(CurveError::NotAFactor);
    }
    let k = n / m;
    let basis: Vec<UniPoly> = (0..=k).map(|i| &w.num().pow(i) * &w.den().pow(k - i)).collect();
    let cols: Vec<UniPoly> = basis
        .iter()
        .map(|t| t * p.den())
        .chain(basis.iter().map(|t| -&(t * p.num())))
        .collect();
    let nrows = cols.iter().map(|c| c.deg0() + 1).max().unwrap_or(1);
    let mat: Vec<Vec<GaussianRational>> = (0..nrows)
        .map(|r| cols.iter().map(|c| c.coeff(r)).collect())
        .collect();
    for v in nullspace(mat, 2 * (k + 1)) {
        let c = UniPoly::new(v[..=k].to_vec());
        let d = UniPoly::new(v[k + 1..].to_vec());
        if d.is_zero() {
            continue;
        }
        let Ok(q) = RatFun::make(c, d) else { continue };
        if q.compose(w).as_ref() == Ok(p) {
            return Ok(q);
        }
    }
    Err(CurveError::NotAFactor)
}
