//! Certified isolation of the complex roots of a univariate polynomial.
//!
//! Each square-free factor is solved by Aberth–Ehrlich iteration, first in
//! double precision and then at the working precision. Rational roots are
//! recognized exactly and deflated. The remaining approximations are
//! certified with Weierstrass (Gerschgorin-type) inclusion disks: with
//! `W_j = f(z_j) / prod_{k != j} (z_j - z_k)` for monic `f` of degree `n`,
//! every root lies in the union of the disks `D(z_j, n |W_j|)` and a disk
//! disjoint from all others contains exactly one root.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::uni::UniPoly;
use super::PolyError;
use crate::arith::{ComplexBall, Dyadic, GaussianRational};

/// Highest working precision tried before giving up.
pub const DEFAULT_PRECISION_CAP: u32 = 4096;

const GUARD_BITS: u32 = 16;

/// A disk known to contain roots of a polynomial.
#[derive(Clone, Debug)]
pub struct RootBall {
    pub location: ComplexBall,
    /// Multiplicity of the root inside the disk.
    pub multiplicity: usize,
    /// Whether the disk provably contains exactly one distinct root.
    pub certified: bool,
    /// The root itself when it is a Gaussian rational.
    pub exact: Option<GaussianRational>,
}

impl RootBall {
    pub fn center(&self) -> Complex64 {
        self.location.center_f64()
    }

    pub fn radius(&self) -> f64 {
        self.location.radius_f64()
    }
}

/// Certified roots with the default precision cap.
pub fn certified_roots(p: &UniPoly, precision_bits: u32) -> Result<Vec<RootBall>, PolyError> {
    certified_roots_with_cap(p, precision_bits, DEFAULT_PRECISION_CAP)
}

/// Isolates all roots of `p`, doubling the working precision from
/// `precision_bits` until certification succeeds or `cap` is exceeded.
///
/// Balls are sorted by center real part, then imaginary part, then radius.
pub fn certified_roots_with_cap(
    p: &UniPoly,
    precision_bits: u32,
    cap: u32,
) -> Result<Vec<RootBall>, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let mut solvers: Vec<FactorSolver> = p
        .squarefree_decomposition()?
        .into_iter()
        .map(|(f, m)| FactorSolver::new(f, m))
        .collect();
    let mut prec = precision_bits.clamp(16, cap.max(16));
    loop {
        let mut balls = Vec::new();
        let mut ok = true;
        for s in solvers.iter_mut() {
            match s.certify(prec) {
                Some(b) => balls.extend(b),
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if ok && pairwise_disjoint(&balls) {
            balls.sort_by(compare_balls);
            return Ok(balls);
        }
        if prec >= cap {
            return Err(PolyError::CertificationFailed(cap));
        }
        prec = (prec * 2).min(cap);
    }
}

pub(crate) fn compare_balls(a: &RootBall, b: &RootBall) -> Ordering {
    let (x, y) = (&a.location, &b.location);
    x.re()
        .cmp(y.re())
        .then_with(|| x.im().cmp(y.im()))
        .then_with(|| x.radius().cmp(y.radius()))
}

fn pairwise_disjoint(balls: &[RootBall]) -> bool {
    balls.iter().enumerate().all(|(i, a)| {
        balls[i + 1..]
            .iter()
            .all(|b| !a.location.overlaps(&b.location))
    })
}

/// Solver state for one monic square-free factor.
struct FactorSolver {
    multiplicity: usize,
    exact_roots: Vec<GaussianRational>,
    /// The factor with the exact roots divided out.
    rest: UniPoly,
    approx: Vec<ComplexBall>,
    snapped: bool,
}

impl FactorSolver {
    fn new(f: UniPoly, multiplicity: usize) -> Self {
        let mut exact_roots = Vec::new();
        let mut rest = f;
        if rest.degree() == Some(1) {
            exact_roots.push(-rest.coeff(0));
            rest = UniPoly::one();
        }
        Self {
            multiplicity,
            exact_roots,
            rest,
            approx: Vec::new(),
            snapped: false,
        }
    }

    fn certify(&mut self, prec: u32) -> Option<Vec<RootBall>> {
        if self.rest.deg0() > 0 {
            self.refine(prec);
            if !self.snapped {
                self.snap(prec);
                self.snapped = true;
            }
        }
        let mut out: Vec<RootBall> = self
            .exact_roots
            .iter()
            .map(|q| RootBall {
                location: ComplexBall::from_gaussian(q, prec),
                multiplicity: self.multiplicity,
                certified: true,
                exact: Some(q.clone()),
            })
            .collect();
        if self.rest.deg0() > 0 {
            let disks = weierstrass_disks(&self.rest, &self.approx, prec)?;
            out.extend(disks.into_iter().map(|d| RootBall {
                location: d,
                multiplicity: self.multiplicity,
                certified: true,
                exact: None,
            }));
        }
        Some(out)
    }

    fn refine(&mut self, prec: u32) {
        if self.approx.is_empty() {
            let start = aberth_f64(&self.rest);
            self.approx = start
                .iter()
                .map(|z| ComplexBall::from_f64(z.re, z.im, prec + GUARD_BITS))
                .collect();
        }
        self.approx = aberth_ball(&self.rest, &self.approx, prec + GUARD_BITS);
    }

    /// Recognizes Gaussian-rational roots among the approximations and
    /// deflates them exactly.
    fn snap(&mut self, prec: u32) {
        let eps = BigRational::new(BigInt::one(), BigInt::one() << (prec / 2).max(8));
        let mut keep = Vec::new();
        for z in std::mem::take(&mut self.approx) {
            let re = simplest_between(&(z.re().to_rational() - &eps), &(z.re().to_rational() + &eps));
            let im = simplest_between(&(z.im().to_rational() - &eps), &(z.im().to_rational() + &eps));
            let q = GaussianRational::new(re, im);
            if self.rest.deg0() > 0 && self.rest.eval(&q).is_zero() {
                let lin = UniPoly::new(vec![-q.clone(), GaussianRational::one()]);
                self.rest = self.rest.div_exact(&lin).unwrap();
                self.exact_roots.push(q);
            } else {
                keep.push(z);
            }
        }
        self.approx = keep;
    }
}

/// Simplest rational (smallest denominator) in the closed interval `[lo, hi]`.
pub(crate) fn simplest_between(lo: &BigRational, hi: &BigRational) -> BigRational {
    if lo > hi {
        return simplest_between(hi, lo);
    }
    if !lo.is_positive() && !hi.is_negative() {
        return BigRational::zero();
    }
    if hi.is_negative() {
        return -simplest_between(&-hi, &-lo);
    }
    let fl = lo.floor();
    if &fl == lo {
        return fl;
    }
    if fl.clone() + BigRational::one() <= *hi {
        return fl + BigRational::one();
    }
    // lo and hi share the integer part; recurse on reciprocals of fractional parts
    let inner = simplest_between(&(hi - &fl).recip(), &(lo - &fl).recip());
    fl + inner.recip()
}

fn to_c64(c: &GaussianRational) -> Complex64 {
    let (re, im) = c.to_f64_pair();
    Complex64::new(re, im)
}

fn aberth_f64(f: &UniPoly) -> Vec<Complex64> {
    let n = f.deg0();
    let cs: Vec<Complex64> = f.coeffs().iter().map(to_c64).collect();
    let eval = |z: Complex64| {
        let mut p = Complex64::new(0.0, 0.0);
        let mut dp = Complex64::new(0.0, 0.0);
        for c in cs.iter().rev() {
            dp = dp * z + p;
            p = p * z + c;
        }
        (p, dp)
    };
    let radius = f.cauchy_bound().min(1e6) * 0.5;
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let theta = std::f64::consts::TAU * k as f64 / n as f64 + 0.4;
            Complex64::from_polar(radius * (1.0 + 0.01 * k as f64), theta)
        })
        .collect();
    for _ in 0..500 {
        let mut max_step: f64 = 0.0;
        for j in 0..n {
            let (p, dp) = eval(z[j]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let s: Complex64 = (0..n)
                .filter(|&k| k != j)
                .map(|k| (z[j] - z[k]).inv())
                .sum();
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            if w.is_finite() {
                z[j] -= w;
                max_step = max_step.max(w.norm() / z[j].norm().max(1.0));
            }
        }
        if max_step < 1e-15 {
            break;
        }
    }
    z
}

/// Aberth–Ehrlich iteration on ball midpoints at `prec` bits.
fn aberth_ball(f: &UniPoly, start: &[ComplexBall], prec: u32) -> Vec<ComplexBall> {
    let n = start.len();
    let df = f.derivative();
    let mut z: Vec<ComplexBall> = start.iter().map(|b| b.with_precision(prec).mid()).collect();
    let tiny = Dyadic::pow2(-(prec as i64));
    let one = ComplexBall::one(prec);
    for _ in 0..(prec as usize / 4 + 40) {
        let mut max_step = Dyadic::zero();
        for j in 0..n {
            let p = f.eval_ball(&z[j]).mid();
            if p.center_abs_upper().is_zero() {
                continue;
            }
            let Ok(ratio) = p.div(&df.eval_ball(&z[j]).mid()) else {
                continue;
            };
            let mut s = ComplexBall::zero(prec);
            for k in (0..n).filter(|&k| k != j) {
                if let Ok(inv) = z[j].sub(&z[k]).mid().inv() {
                    s = s.add(&inv.mid());
                }
            }
            let Ok(w) = ratio.mid().div(&one.sub(&ratio.mul(&s)).mid()) else {
                continue;
            };
            let w = w.mid();
            z[j] = z[j].sub(&w).mid();
            let scale = z[j].center_abs_upper().max(Dyadic::one());
            let step = w.center_abs_upper();
            let (rel, _) = step.div(&scale, 32);
            max_step = max_step.max(rel);
        }
        if max_step <= tiny {
            break;
        }
    }
    z
}

/// Inclusion disks for the roots of monic square-free `f` around the
/// approximations `z`; `None` unless they are pairwise disjoint.
fn weierstrass_disks(f: &UniPoly, z: &[ComplexBall], prec: u32) -> Option<Vec<ComplexBall>> {
    let n = z.len();
    debug_assert_eq!(n, f.deg0());
    let lc = f.leading_coeff();
    let fm = f.scale(&lc.inv().ok()?);
    let nd = Dyadic::from_i64(n as i64);
    let mut disks = Vec::with_capacity(n);
    for j in 0..n {
        let c = z[j].with_precision(prec + GUARD_BITS).mid();
        let num = fm.eval_ball(&c);
        let mut den = ComplexBall::one(prec + GUARD_BITS);
        for (k, zk) in z.iter().enumerate() {
            if k != j {
                den = den.mul(&c.sub(zk));
            }
        }
        let w = num.div(&den).ok()?;
        let r = w.abs_upper().mul(&nd).mag_up();
        disks.push(ComplexBall::new(c.re().clone(), c.im().clone(), r, prec + GUARD_BITS));
    }
    let disjoint = (0..n).all(|i| (i + 1..n).all(|k| !disks[i].overlaps(&disks[k])));
    disjoint.then_some(disks)
}

/// Largest radius around `balls[j]`'s center that stays clear of all other
/// balls; the resulting disk still isolates the same roots.
pub(crate) fn isolation_radius(balls: &[RootBall], j: usize) -> Option<Dyadic> {
    let cj = &balls[j].location;
    let mut best: Option<Dyadic> = None;
    for (k, b) in balls.iter().enumerate() {
        if k == j {
            continue;
        }
        let dx = cj.re().sub(b.location.re());
        let dy = cj.im().sub(b.location.im());
        let dist = dx.mul(&dx).add(&dy.mul(&dy)).mag_down().sqrt_floor(62).mag_down();
        let gap = dist.sub(b.location.radius());
        let gap = if gap.is_negative() { Dyadic::zero() } else { gap.mag_down() };
        best = Some(match best {
            None => gap,
            Some(g) => g.min(gap),
        });
    }
    best.map(|g| {
        // shrink slightly to stay strictly inside the gap
        let (h, _) = g.mul(&Dyadic::from_i64(15)).div(&Dyadic::from_i64(16), 62);
        h.max(cj.radius().clone())
    })
}

/// Decides whether an involution of the root set fixes the root isolated by
/// `balls[j]`, given an enclosure `image` of the image of that root.
///
/// `Some(true)` when `image` lies in a disk around `balls[j]` that meets no
/// other ball, `Some(false)` when it misses `balls[j]`, `None` otherwise.
pub(crate) fn fixed_by_involution(balls: &[RootBall], j: usize, image: &ComplexBall) -> Option<bool> {
    if !balls.iter().all(|b| b.certified) {
        return None;
    }
    let own = &balls[j].location;
    if !image.overlaps(own) {
        return Some(false);
    }
    match isolation_radius(balls, j) {
        None => Some(true),
        Some(r) => {
            let iso = ComplexBall::new(own.re().clone(), own.im().clone(), r, own.precision());
            iso.contains(image).then_some(true)
        }
    }
}
