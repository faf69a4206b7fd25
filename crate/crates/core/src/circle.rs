//! Maps of the unit circle: circle preservation, finite Blaschke products
//! and the splitting of a circle-preserving map into a quotient of two
//! finite Blaschke products.

use thiserror::Error;

use crate::arith::{ComplexBall, Dyadic, GaussianRational};
use crate::poly::{certified_roots_with_cap, PolyError, RootBall, UniPoly, DEFAULT_PRECISION_CAP};
use crate::ratfun::{cayley_conjugate, RatFun};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CircleError {
    #[error("circle-preservation criteria disagree for {0}")]
    InternalDisagreement(String),
    #[error("map does not preserve the unit circle")]
    NotCirclePreserving,
    #[error("could not separate a zero from the unit circle at the precision cap of {0} bits")]
    CertificationFailed(u32),
}

impl From<PolyError> for CircleError {
    fn from(e: PolyError) -> Self {
        match e {
            PolyError::CertificationFailed(cap) => CircleError::CertificationFailed(cap),
            other => CircleError::InternalDisagreement(other.to_string()),
        }
    }
}

/// `Q * Q^* == 1` where `Q^*(z) = conj(Q)(1/z)`, tested as the polynomial
/// identity `A * rev(conj A) == B * rev(conj B)`.
pub fn reflection_criterion(q: &RatFun) -> bool {
    if let Some(c) = q.constant_value() {
        return c.is_unimodular();
    }
    let d = q.degree();
    let lhs = q.num() * &q.num().conj().reversed(d);
    let rhs = q.den() * &q.den().conj().reversed(d);
    lhs == rhs
}

/// Whether the Cayley conjugate `T ∘ Q ∘ T^-1` has real coefficients.
/// `None` for the constant 1, whose conjugate is the point at infinity.
pub fn cayley_criterion(q: &RatFun) -> Option<bool> {
    cayley_conjugate(q).ok().map(|r| r.is_real())
}

/// Exact test that `|Q| = 1` on the unit circle, cross-checked against the
/// Cayley-reality criterion.
pub fn is_circle_preserving(q: &RatFun) -> Result<bool, CircleError> {
    let algebraic = reflection_criterion(q);
    match cayley_criterion(q) {
        Some(c) if c != algebraic => Err(CircleError::InternalDisagreement(q.to_string())),
        _ => Ok(algebraic),
    }
}

/// `z^n * conj(p)(1/z)` for `n = deg p`.
fn reciprocal(p: &UniPoly) -> UniPoly {
    p.conj().reversed(p.deg0())
}

/// Number of roots strictly inside the unit disc by the Schur–Cohn
/// recursion, or `None` when a step is singular (`|a_n| = |a_0|`), which
/// includes every polynomial with a root on the circle.
pub fn schur_cohn_inside(p: &UniPoly) -> Option<usize> {
    let n = p.degree()?;
    if n == 0 {
        return Some(0);
    }
    let an = p.leading_coeff();
    let a0 = p.coeff(0);
    let (nn, n0) = (an.norm(), a0.norm());
    if nn == n0 {
        return None;
    }
    let t = &p.scale(&an.conj()) - &reciprocal(p).scale(&a0);
    let q = UniPoly::new(t.coeffs()[1..].to_vec());
    let inner = schur_cohn_inside(&q)?;
    if nn > n0 {
        Some(inner + 1)
    } else {
        Some(n - 1 - inner)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Side {
    Inside,
    Outside,
    On,
    Unknown,
}

/// Where a certified root ball sits relative to the unit circle.
fn disc_side(b: &RootBall) -> Side {
    if let Some(q) = &b.exact {
        let n = q.norm();
        let one = num_rational::BigRational::from_integer(1.into());
        return match n.cmp(&one) {
            std::cmp::Ordering::Less => Side::Inside,
            std::cmp::Ordering::Equal => Side::On,
            std::cmp::Ordering::Greater => Side::Outside,
        };
    }
    let one = Dyadic::one();
    if b.location.abs_upper() < one {
        Side::Inside
    } else if b.location.abs_lower() > one {
        Side::Outside
    } else {
        Side::Unknown
    }
}

/// Certified root balls of `p` paired with whether they lie strictly inside
/// the unit circle. `Ok(None)` if a root is exactly on the circle; an
/// error if some ball still meets the circle at `cap` bits.
fn roots_by_side(
    p: &UniPoly,
    precision_bits: u32,
    cap: u32,
) -> Result<Option<Vec<(RootBall, bool)>>, CircleError> {
    if p.is_constant() {
        return Ok(Some(Vec::new()));
    }
    let mut prec = precision_bits.clamp(16, cap);
    loop {
        let roots = certified_roots_with_cap(p, prec, cap)?;
        let sides: Vec<Side> = roots.iter().map(disc_side).collect();
        if sides.contains(&Side::On) {
            return Ok(None);
        }
        if !sides.contains(&Side::Unknown) {
            return Ok(Some(
                roots
                    .into_iter()
                    .zip(sides)
                    .map(|(b, s)| (b, s == Side::Inside))
                    .collect(),
            ));
        }
        if prec >= cap {
            return Err(CircleError::CertificationFailed(cap));
        }
        prec = (prec * 2).min(cap);
    }
}

/// Highest precision spent on deciding whether a root sits on the circle.
const SIDE_PRECISION_CAP: u32 = 1024;

/// Roots strictly inside the disc counted with multiplicity: Schur–Cohn,
/// with certified roots when the recursion is singular. `None` if some root
/// lies on the circle.
pub fn count_inside_disc(p: &UniPoly) -> Result<Option<usize>, CircleError> {
    if let Some(k) = schur_cohn_inside(p) {
        return Ok(Some(k));
    }
    match roots_by_side(p, 128, SIDE_PRECISION_CAP) {
        Ok(Some(roots)) => Ok(Some(
            roots
                .iter()
                .filter(|(_, inside)| *inside)
                .map(|(b, _)| b.multiplicity)
                .sum(),
        )),
        Ok(None) | Err(CircleError::CertificationFailed(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Finite Blaschke product test: circle-preserving, no zero at infinity and
/// every zero strictly inside the unit disc. A constant counts as the empty
/// product exactly when it is unimodular.
pub fn is_finite_blaschke(q: &RatFun) -> Result<bool, CircleError> {
    if !is_circle_preserving(q)? {
        return Ok(false);
    }
    if q.is_constant() {
        return Ok(true);
    }
    let a = q.num();
    if a.deg0() != q.degree() {
        return Ok(false);
    }
    Ok(count_inside_disc(a)? == Some(a.deg0()))
}

#[derive(Debug, Clone)]
pub struct BlaschkeFactor {
    pub zero: ComplexBall,
    /// The zero itself when it is a Gaussian rational.
    pub exact_zero: Option<GaussianRational>,
    pub multiplicity: usize,
    /// `true` for factors of the numerator product `B1`, `false` for `B2`.
    pub inside: bool,
}

/// `Q = ζ * B1 / B2` with `B1`, `B2` finite Blaschke products.
#[derive(Debug, Clone)]
pub struct BlaschkeForm {
    pub unimodular_constant: ComplexBall,
    pub factors: Vec<BlaschkeFactor>,
}

/// Deterministic sample points on the unit circle: `±1, ±i, (±3±4i)/5`.
pub fn circle_samples8() -> Vec<GaussianRational> {
    let mut v: Vec<GaussianRational> = [(1, 0, 1), (-1, 0, 1), (0, 1, 1), (0, -1, 1)]
        .iter()
        .map(|&(a, b, d)| GaussianRational::from_parts(a, b, d))
        .collect();
    for (a, b) in [(3, 4), (-3, 4), (3, -4), (-3, -4)] {
        v.push(GaussianRational::from_parts(a, b, 5));
    }
    v
}

impl BlaschkeForm {
    /// Ball enclosure of `ζ * B1(z) / B2(z)`.
    pub fn eval_ball(&self, z: &ComplexBall) -> Option<ComplexBall> {
        let prec = z.precision();
        let one = ComplexBall::one(prec);
        let mut acc = self.unimodular_constant.clone();
        for f in &self.factors {
            let a = &f.zero;
            let t = z.sub(a).div(&one.sub(&a.conj().mul(z))).ok()?;
            let t = t.pow(f.multiplicity as u32);
            acc = if f.inside { acc.mul(&t) } else { acc.div(&t).ok()? };
        }
        Some(acc)
    }
}

/// Splits a circle-preserving map into `ζ * B1 / B2`: zeros of the
/// numerator inside the disc give the factors of `B1`, zeros of the
/// denominator inside the disc give those of `B2`.
pub fn blaschke_quotient_split(
    q: &RatFun,
    precision_bits: u32,
) -> Result<BlaschkeForm, CircleError> {
    if !is_circle_preserving(q)? {
        return Err(CircleError::NotCirclePreserving);
    }
    let prec = precision_bits.max(32);
    let mut factors = Vec::new();
    for (p, inside) in [(q.num(), true), (q.den(), false)] {
        let roots = roots_by_side(p, prec, DEFAULT_PRECISION_CAP)?
            .ok_or(CircleError::NotCirclePreserving)?;
        for (b, in_disc) in roots {
            if in_disc {
                factors.push(BlaschkeFactor {
                    zero: b.location,
                    exact_zero: b.exact,
                    multiplicity: b.multiplicity,
                    inside,
                });
            }
        }
    }
    let mut form = BlaschkeForm {
        unimodular_constant: ComplexBall::one(prec),
        factors,
    };
    let samples = circle_samples8();
    let s = ComplexBall::from_gaussian(&samples[0], prec);
    let raw = form
        .eval_ball(&s)
        .ok_or(CircleError::CertificationFailed(prec))?;
    let qs = q
        .eval_ball(&s)
        .map_err(|_| CircleError::CertificationFailed(prec))?;
    form.unimodular_constant = qs
        .div(&raw)
        .map_err(|_| CircleError::CertificationFailed(prec))?;
    for g in &samples {
        let z = ComplexBall::from_gaussian(g, prec);
        let exact = q.eval(g).ok_or(CircleError::NotCirclePreserving)?;
        let enclosure = form
            .eval_ball(&z)
            .ok_or(CircleError::CertificationFailed(prec))?;
        if !enclosure.contains_gaussian(&exact) {
            return Err(CircleError::InternalDisagreement(format!(
                "Blaschke reconstruction of {q} misses the value at {g}"
            )));
        }
    }
    Ok(form)
}
