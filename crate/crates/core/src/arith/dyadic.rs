//! Binary floating values `mantissa * 2^exponent` with exact ring operations
//! and explicitly bounded rounding.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Significant bits kept for radii and magnitude bounds.
pub(crate) const MAG_BITS: u64 = 62;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Dyadic {
    mant: BigInt,
    exp: i64,
}

impl Dyadic {
    pub fn new(mant: BigInt, exp: i64) -> Self {
        let mut d = Self { mant, exp };
        d.canonicalize();
        d
    }

    fn canonicalize(&mut self) {
        match self.mant.trailing_zeros() {
            None => self.exp = 0,
            Some(0) => {}
            Some(tz) => {
                self.mant >>= tz;
                self.exp += tz as i64;
            }
        }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_i64(1)
    }

    pub fn from_i64(v: i64) -> Self {
        Self::new(BigInt::from(v), 0)
    }

    /// `2^e`.
    pub fn pow2(e: i64) -> Self {
        Self {
            mant: BigInt::one(),
            exp: e,
        }
    }

    /// Exact conversion of a finite `f64`.
    pub fn from_f64(v: f64) -> Self {
        assert!(v.is_finite(), "non-finite value");
        if v == 0.0 {
            return Self::zero();
        }
        let bits = v.to_bits();
        let sign = if bits >> 63 == 0 { 1i64 } else { -1 };
        let exp_bits = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (m, e) = if exp_bits == 0 {
            (frac, -1074)
        } else {
            (frac | (1u64 << 52), exp_bits - 1075)
        };
        Self::new(BigInt::from(m) * sign, e)
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mant
    }

    pub fn exponent(&self) -> i64 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    pub fn signum(&self) -> i32 {
        match self.mant.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    /// Bit length of the mantissa.
    pub fn bits(&self) -> u64 {
        self.mant.bits()
    }

    /// Exponent of the most significant bit (`floor(log2 |x|)`), `None` for zero.
    pub fn magnitude_exp(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.exp + self.bits() as i64 - 1)
    }

    pub fn neg(&self) -> Self {
        Self {
            mant: -&self.mant,
            exp: self.exp,
        }
    }

    pub fn abs(&self) -> Self {
        Self {
            mant: self.mant.abs(),
            exp: self.exp,
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let e = self.exp.min(o.exp);
        let a = &self.mant << (self.exp - e) as u64;
        let b = &o.mant << (o.exp - e) as u64;
        Self::new(a + b, e)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(&self.mant * &o.mant, self.exp + o.exp)
    }

    pub fn mul_pow2(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self {
            mant: self.mant.clone(),
            exp: self.exp + k,
        }
    }

    /// Round to `prec` significant bits. Returns the rounded value and an
    /// upper bound on the absolute rounding error.
    pub fn round(&self, prec: u32) -> (Self, Self) {
        let bits = self.bits();
        if bits <= prec as u64 {
            return (self.clone(), Self::zero());
        }
        let shift = bits - prec as u64;
        let m = &self.mant >> shift;
        let r = Self::new(m, self.exp + shift as i64);
        let err = Self::pow2(self.exp + shift as i64);
        (r, err)
    }

    /// Upward rounding of `|self|` to `MAG_BITS` bits.
    pub fn mag_up(&self) -> Self {
        let a = self.mant.abs();
        let bits = a.bits();
        if bits <= MAG_BITS {
            return Self::new(a, self.exp);
        }
        let shift = bits - MAG_BITS;
        Self::new((a >> shift) + 1u32, self.exp + shift as i64)
    }

    /// Downward rounding of `|self|` to `MAG_BITS` bits.
    pub fn mag_down(&self) -> Self {
        let a = self.mant.abs();
        let bits = a.bits();
        if bits <= MAG_BITS {
            return Self::new(a, self.exp);
        }
        let shift = bits - MAG_BITS;
        Self::new(a >> shift, self.exp + shift as i64)
    }

    /// Quotient to at least `prec` significant bits with an error bound.
    pub fn div(&self, o: &Self, prec: u32) -> (Self, Self) {
        assert!(!o.is_zero(), "dyadic division by zero");
        if self.is_zero() {
            return (Self::zero(), Self::zero());
        }
        let k = (prec as i64 + o.bits() as i64 - self.bits() as i64 + 2).max(0);
        let num = &self.mant << k as u64;
        let q = &num / &o.mant;
        let r = &num % &o.mant;
        let exp = self.exp - k - o.exp;
        let err = if r.is_zero() {
            Self::zero()
        } else {
            Self::pow2(exp)
        };
        (Self::new(q, exp), err)
    }

    /// `floor(sqrt(self))` to about `prec` bits; `self` must be non-negative.
    pub fn sqrt_floor(&self, prec: u32) -> Self {
        let (s, exp, _) = self.sqrt_parts(prec);
        Self::new(s, exp)
    }

    /// An upper bound for `sqrt(self)`.
    pub fn sqrt_ceil(&self, prec: u32) -> Self {
        let (s, exp, exact) = self.sqrt_parts(prec);
        if exact {
            Self::new(s, exp)
        } else {
            Self::new(s + 1u32, exp)
        }
    }

    fn sqrt_parts(&self, prec: u32) -> (BigInt, i64, bool) {
        assert!(!self.is_negative(), "sqrt of negative dyadic");
        if self.is_zero() {
            return (BigInt::zero(), 0, true);
        }
        let mut t = (2 * prec as i64 - self.bits() as i64).max(0);
        if (self.exp - t).rem_euclid(2) != 0 {
            t += 1;
        }
        let m = &self.mant << t as u64;
        let s = m.sqrt();
        let exact = &s * &s == m;
        (s, (self.exp - t) / 2, exact)
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let bits = self.bits();
        let (m, e) = if bits > 60 {
            let shift = bits - 60;
            ((&self.mant >> shift).to_f64().unwrap(), self.exp + shift as i64)
        } else {
            (self.mant.to_f64().unwrap(), self.exp)
        };
        if e > 2000 {
            return m.signum() * f64::INFINITY;
        }
        if e < -2200 {
            return 0.0;
        }
        // split to avoid intermediate overflow of powi
        let half = (e / 2) as i32;
        m * 2f64.powi(half) * 2f64.powi(e as i32 - half)
    }

    pub fn to_rational(&self) -> BigRational {
        if self.exp >= 0 {
            BigRational::from_integer(&self.mant << self.exp as u64)
        } else {
            BigRational::new(self.mant.clone(), BigInt::one() << (-self.exp) as u64)
        }
    }

    /// Approximation of a rational to `prec` bits with an error bound.
    pub fn from_rational(q: &BigRational, prec: u32) -> (Self, Self) {
        let n = Self::new(q.numer().clone(), 0);
        let d = Self::new(q.denom().clone(), 0);
        if d.mant.is_one() {
            return (n.mul_pow2(-d.exp), Self::zero());
        }
        n.div(&d, prec)
    }
}

impl Ord for Dyadic {
    fn cmp(&self, o: &Self) -> Ordering {
        let d = self.sub(o);
        d.mant.sign().cmp(&Sign::NoSign)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:e}", self.to_f64())
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_f64())
    }
}
