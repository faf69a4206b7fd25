//! Rational functions over Q(i) in canonical form, composition and the
//! Cayley-transform conjugation between the unit circle and the real line.

use std::fmt;

use thiserror::Error;

use crate::arith::{ComplexBall, GaussianRational};
use crate::poly::UniPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RatFunError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("denominator enclosure contains zero")]
    PoleInBall,
    #[error("composition lands on a pole of the outer function")]
    PoleAtConstant,
}

/// Reduced quotient `num / den` with monic denominator; zero is `0 / 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: UniPoly,
    den: UniPoly,
}

impl RatFun {
    /// Reduces and normalizes `num / den`.
    pub fn make(num: UniPoly, den: UniPoly) -> Result<Self, RatFunError> {
        if den.is_zero() {
            return Err(RatFunError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den).expect("denominator is non-zero");
        let num = num.div_exact(&g).unwrap();
        let den = den.div_exact(&g).unwrap();
        let inv = den.leading_coeff().inv().unwrap();
        Ok(Self {
            num: num.scale(&inv),
            den: den.scale(&inv),
        })
    }

    pub fn from_poly(p: UniPoly) -> Self {
        Self {
            num: p,
            den: UniPoly::one(),
        }
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::from_poly(UniPoly::constant(c))
    }

    pub fn zero() -> Self {
        Self::from_poly(UniPoly::zero())
    }

    pub fn one() -> Self {
        Self::constant(GaussianRational::one())
    }

    /// The identity function `z`.
    pub fn identity() -> Self {
        Self::from_poly(UniPoly::z())
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    /// `max(deg num, deg den)`; 0 for constants.
    pub fn degree(&self) -> usize {
        self.num.deg0().max(self.den.deg0())
    }

    pub fn is_constant(&self) -> bool {
        self.degree() == 0
    }

    pub fn constant_value(&self) -> Option<GaussianRational> {
        self.is_constant().then(|| self.num.coeff(0))
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Exact value, `None` at a pole.
    pub fn eval(&self, z: &GaussianRational) -> Option<GaussianRational> {
        self.num.eval(z).checked_div(&self.den.eval(z)).ok()
    }

    pub fn eval_ball(&self, z: &ComplexBall) -> Result<ComplexBall, RatFunError> {
        let d = self.den.eval_ball(z);
        if d.contains_zero() {
            return Err(RatFunError::PoleInBall);
        }
        self.num
            .eval_ball(z)
            .div(&d)
            .map_err(|_| RatFunError::PoleInBall)
    }

    /// Homogeneous substitution `sum a_k C^k D^(d-k)` of `C/D` into `p`,
    /// cleared by `D^d`.
    fn homogenize(p: &UniPoly, c: &UniPoly, d: &UniPoly, deg: usize) -> UniPoly {
        let mut cp = vec![UniPoly::one()];
        let mut dp = vec![UniPoly::one()];
        for k in 0..deg {
            cp.push(&cp[k] * c);
            dp.push(&dp[k] * d);
        }
        p.coeffs()
            .iter()
            .enumerate()
            .fold(UniPoly::zero(), |acc, (k, a)| {
                &acc + &(&cp[k] * &dp[deg - k]).scale(a)
            })
    }

    /// `self ∘ q`.
    pub fn compose(&self, q: &RatFun) -> Result<RatFun, RatFunError> {
        let d = self.degree();
        let num = Self::homogenize(&self.num, &q.num, &q.den, d);
        let den = Self::homogenize(&self.den, &q.num, &q.den, d);
        if den.is_zero() {
            return Err(RatFunError::PoleAtConstant);
        }
        Self::make(num, den)
    }

    pub fn add(&self, o: &RatFun) -> RatFun {
        Self::make(
            &(&self.num * &o.den) + &(&o.num * &self.den),
            &self.den * &o.den,
        )
        .unwrap()
    }

    pub fn sub(&self, o: &RatFun) -> RatFun {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> RatFun {
        Self {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, o: &RatFun) -> RatFun {
        Self::make(&self.num * &o.num, &self.den * &o.den).unwrap()
    }

    pub fn div(&self, o: &RatFun) -> Result<RatFun, RatFunError> {
        Self::make(&self.num * &o.den, &self.den * &o.num)
    }

    pub fn inv(&self) -> Result<RatFun, RatFunError> {
        Self::make(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: usize) -> RatFun {
        Self {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> RatFun {
        Self::make(self.num.scale(c), self.den.clone()).unwrap()
    }

    /// Coefficient-wise conjugate.
    pub fn conj(&self) -> RatFun {
        Self {
            num: self.num.conj(),
            den: self.den.conj(),
        }
    }

    /// `conj(Q)(1/z)`, cleared by `z^deg`: the reflection of `Q` across the
    /// unit circle.
    pub fn reflect(&self) -> RatFun {
        let d = self.degree();
        Self::make(self.num.conj().reversed(d), self.den.conj().reversed(d))
            .expect("reversal keeps the denominator non-zero")
    }

    /// Whether every coefficient of the canonical form is real.
    pub fn is_real(&self) -> bool {
        self.num.is_real() && self.den.is_real()
    }

    pub fn display_in(&self, var: char) -> String {
        if self.den.is_one_poly() {
            self.num.display_in(var).to_string()
        } else {
            format!("({})/({})", self.num.display_in(var), self.den.display_in(var))
        }
    }
}

impl UniPoly {
    fn is_one_poly(&self) -> bool {
        self.degree() == Some(0) && self.coeff(0).is_one()
    }
}

/// The Cayley transform `T(z) = i(1+z)/(1-z)`, unit circle to real line.
pub fn cayley() -> RatFun {
    let i = GaussianRational::i();
    RatFun::make(
        UniPoly::new(vec![i.clone(), i]),
        UniPoly::from_i64(&[1, -1]),
    )
    .unwrap()
}

/// The inverse transform `T^-1(x) = (x-i)/(x+i)`.
pub fn inverse_cayley() -> RatFun {
    let i = GaussianRational::i();
    RatFun::make(
        UniPoly::new(vec![-i.clone(), 1.into()]),
        UniPoly::new(vec![i, 1.into()]),
    )
    .unwrap()
}

/// `T ∘ Q ∘ T^-1`. The only failure is `Q ≡ 1`, whose conjugate is the
/// constant at infinity.
pub fn cayley_conjugate(q: &RatFun) -> Result<RatFun, RatFunError> {
    cayley().compose(&q.compose(&inverse_cayley())?)
}

/// `T^-1 ∘ R ∘ T`; fails only for `R ≡ -i`.
pub fn inverse_cayley_conjugate(r: &RatFun) -> Result<RatFun, RatFunError> {
    inverse_cayley().compose(&r.compose(&cayley())?)
}

pub fn rf_make(num: UniPoly, den: UniPoly) -> Result<RatFun, RatFunError> {
    RatFun::make(num, den)
}

pub fn rf_degree(p: &RatFun) -> usize {
    p.degree()
}

pub fn rf_compose(p: &RatFun, q: &RatFun) -> Result<RatFun, RatFunError> {
    p.compose(q)
}

pub fn rf_is_real_up_to_reduction(r: &RatFun) -> bool {
    r.is_real()
}

pub fn rf_eval_ball(p: &RatFun, z: &ComplexBall) -> Result<ComplexBall, RatFunError> {
    p.eval_ball(z)
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_in('z'))
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFun({self})")
    }
}
