use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::domain::{self, Domain};
use super::PolyError;
use crate::arith::{ComplexBall, GaussInt, GaussianRational};

/// Dense univariate polynomial over Q(i), lowest degree first.
///
/// The zero polynomial has no coefficients and degree `None`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<GaussianRational>,
}

impl UniPoly {
    pub fn new(coeffs: Vec<GaussianRational>) -> Self {
        Self {
            coeffs: domain::trim(coeffs),
        }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| c.into()).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(GaussianRational::one())
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::new(vec![c])
    }

    /// `c * z^k`.
    pub fn monomial(c: GaussianRational, k: usize) -> Self {
        let mut v = vec![GaussianRational::zero(); k];
        v.push(c);
        Self::new(v)
    }

    /// The polynomial `z`.
    pub fn z() -> Self {
        Self::monomial(GaussianRational::one(), 1)
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<GaussianRational> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> GaussianRational {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with zero mapped to 0.
    pub fn deg0(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading_coeff(&self) -> GaussianRational {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Monic associate; zero stays zero.
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.leading_coeff().inv().unwrap();
        self.scale(&inv)
    }

    pub fn conj(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.conj()).collect())
    }

    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_real())
    }

    /// `z^d * p(1/z)` for `d >= deg p`.
    pub fn reversed(&self, d: usize) -> Self {
        let mut v = vec![GaussianRational::zero(); d + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            v[d - k] = c.clone();
        }
        Self::new(v)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * &GaussianRational::from_integer(k as i64))
                .collect(),
        )
    }

    pub fn eval(&self, z: &GaussianRational) -> GaussianRational {
        self.coeffs
            .iter()
            .rev()
            .fold(GaussianRational::zero(), |acc, c| &(&acc * z) + c)
    }

    pub fn eval_ball(&self, z: &ComplexBall) -> ComplexBall {
        let prec = z.precision();
        self.coeffs
            .iter()
            .rev()
            .fold(ComplexBall::zero(prec), |acc, c| {
                acc.mul(z).add(&ComplexBall::from_gaussian(c, prec))
            })
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one();
        let mut sq = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        acc
    }

    /// `self(q(z))`.
    pub fn compose(&self, q: &UniPoly) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * q) + &Self::constant(c.clone()))
    }

    pub fn divrem(&self, d: &UniPoly) -> Result<(UniPoly, UniPoly), PolyError> {
        let dd = d.degree().ok_or(PolyError::DivisionByZero)?;
        let mut r = self.coeffs.clone();
        let Some(dr) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if dr < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let inv = d.leading_coeff().inv().unwrap();
        let mut q = vec![GaussianRational::zero(); dr - dd + 1];
        for k in (dd..=dr).rev() {
            if r[k].is_zero() {
                continue;
            }
            let t = &r[k] * &inv;
            for (j, dj) in d.coeffs.iter().enumerate() {
                r[k - dd + j] = &r[k - dd + j] - &(&t * dj);
            }
            q[k - dd] = t;
        }
        r.truncate(dd);
        Ok((Self::new(q), Self::new(r)))
    }

    /// Quotient when `d` divides `self`.
    pub fn div_exact(&self, d: &UniPoly) -> Option<UniPoly> {
        let (q, r) = self.divrem(d).ok()?;
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, other: &UniPoly) -> bool {
        other.divrem(self).map(|(_, r)| r.is_zero()).unwrap_or(false)
    }

    /// Scalar multiple with Gaussian-integer coefficients whose content is a unit.
    pub fn to_primitive_integral(&self) -> Vec<GaussInt> {
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| num_integer::lcm(acc, c.denom_lcm()));
        let ints: Vec<GaussInt> = self
            .coeffs
            .iter()
            .map(|c| {
                let s = c.scale(&BigRational::from_integer(lcm.clone()));
                GaussInt::new(s.re().to_integer(), s.im().to_integer())
            })
            .collect();
        primitive_part_int(ints)
    }

    fn from_integral(v: &[GaussInt]) -> Self {
        Self::new(v.iter().map(|g| g.to_gaussian()).collect())
    }

    /// Exact monic gcd via the subresultant remainder sequence over Z[i].
    pub fn gcd(&self, other: &UniPoly) -> Result<UniPoly, PolyError> {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => return Err(PolyError::BothZero),
            (true, false) => return Ok(other.monic()),
            (false, true) => return Ok(self.monic()),
            _ => {}
        }
        if self.is_constant() || other.is_constant() {
            return Ok(Self::one());
        }
        let a = self.to_primitive_integral();
        let b = other.to_primitive_integral();
        let last = domain::subresultant_last(&a, &b);
        let g = primitive_part_int(last);
        Ok(Self::from_integral(&g).monic())
    }

    /// Yun's square-free decomposition: pairs `(factor, multiplicity)` with
    /// monic, pairwise coprime, square-free factors, in increasing multiplicity.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(UniPoly, usize)>, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let mut out = Vec::new();
        if self.is_constant() {
            return Ok(out);
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = f.gcd(&df)?;
        let mut b = f.div_exact(&a0).unwrap();
        let mut c = df.div_exact(&a0).unwrap();
        let mut d = &c - &b.derivative();
        let mut mult = 1;
        loop {
            let a = b.gcd(&d)?;
            if !a.is_constant() {
                out.push((a.clone(), mult));
            }
            b = b.div_exact(&a).unwrap();
            if b.is_constant() {
                break;
            }
            c = d.div_exact(&a).unwrap();
            d = &c - &b.derivative();
            mult += 1;
        }
        Ok(out)
    }

    /// Monic square-free part `p / gcd(p, p')`.
    pub fn squarefree_part(&self) -> UniPoly {
        if self.is_constant() {
            return Self::one();
        }
        let g = self.gcd(&self.derivative()).unwrap();
        self.div_exact(&g).unwrap().monic()
    }

    /// Cauchy bound: every root has modulus below `1 + max |a_k / a_n|`.
    pub fn cauchy_bound(&self) -> f64 {
        let n = self.deg0();
        let (lr, li) = self.leading_coeff().to_f64_pair();
        let lc = lr.hypot(li);
        let m = self.coeffs[..n]
            .iter()
            .map(|c| {
                let (r, i) = c.to_f64_pair();
                r.hypot(i) / lc
            })
            .fold(0.0, f64::max);
        1.0 + m
    }

    pub fn display_in(&self, var: char) -> PolyDisplay<'_> {
        PolyDisplay {
            terms: self
                .coeffs
                .iter()
                .enumerate()
                .rev()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (c, vec![(var, k)]))
                .collect(),
        }
    }
}

fn primitive_part_int(v: Vec<GaussInt>) -> Vec<GaussInt> {
    let v = domain::trim(v);
    let mut content: Option<GaussInt> = None;
    for c in v.iter().filter(|c| !Domain::is_zero(*c)) {
        content = Some(match content {
            None => c.clone().normalize_unit(),
            Some(g) => g.gcd(c),
        });
    }
    match content {
        None => v,
        Some(g) => v.iter().map(|c| c.exact_div(&g)).collect(),
    }
}

/// Shared pretty-printer for polynomial terms; output reparses exactly.
pub struct PolyDisplay<'a> {
    pub(crate) terms: Vec<(&'a GaussianRational, Vec<(char, usize)>)>,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (c, vars)) in self.terms.iter().enumerate() {
            let mono: Vec<String> = vars
                .iter()
                .filter(|(_, e)| *e > 0)
                .map(|(v, e)| {
                    if *e == 1 {
                        v.to_string()
                    } else {
                        format!("{v}^{e}")
                    }
                })
                .collect();
            let mono = mono.join("*");
            // sign handling for real or purely imaginary coefficients
            let negative = (c.is_real() && c.re() < &BigRational::zero())
                || (c.re().is_zero() && c.im() < &BigRational::zero());
            let mag = if negative { -(*c).clone() } else { (*c).clone() };
            if idx == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if negative { "-" } else { "+" })?;
            }
            let mixed = !mag.re().is_zero() && !mag.im().is_zero();
            let coef_text = if mixed {
                format!("({mag})")
            } else {
                mag.to_string()
            };
            match (mono.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{coef_text}")?,
                (false, true) => write!(f, "{mono}")?,
                (false, false) => write!(f, "{coef_text}*{mono}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_in('z'))
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, o: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        UniPoly::new((0..n).map(|k| &self.coeff(k) + &o.coeff(k)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, o: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        UniPoly::new((0..n).map(|k| &self.coeff(k) - &o.coeff(k)).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, o: &UniPoly) -> UniPoly {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero();
        }
        let mut v = vec![GaussianRational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] = &v[i + j] + &(a * b);
            }
        }
        UniPoly::new(v)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for UniPoly {
            type Output = UniPoly;
            fn $m(self, o: UniPoly) -> UniPoly { <&UniPoly as $tr>::$m(&self, &o) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Domain for UniPoly {
    fn zero() -> Self {
        UniPoly::zero()
    }
    fn one() -> Self {
        UniPoly::one()
    }
    fn is_zero(&self) -> bool {
        UniPoly::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, o: &Self) -> Self {
        self.div_exact(o).expect("inexact polynomial division")
    }
}
