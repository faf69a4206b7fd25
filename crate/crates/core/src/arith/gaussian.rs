//! Exact arithmetic in the Gaussian rationals Q(i) and the Gaussian integers Z[i].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ArithError;

/// An exact element `re + im*i` of Q(i).
///
/// Both components are kept reduced by `BigRational`, so structural equality
/// coincides with field equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    re: BigRational,
    im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn from_real(re: BigRational) -> Self {
        Self {
            re,
            im: BigRational::zero(),
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_real(BigRational::from_integer(n.into()))
    }

    /// `num/den` as a real Gaussian rational. Panics if `den == 0`.
    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_real(BigRational::new(num.into(), den.into()))
    }

    /// `(re_num + im_num*i) / den`.
    pub fn from_parts(re_num: i64, im_num: i64, den: i64) -> Self {
        Self::new(
            BigRational::new(re_num.into(), den.into()),
            BigRational::new(im_num.into(), den.into()),
        )
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn i() -> Self {
        Self::new(BigRational::zero(), BigRational::one())
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -&self.im)
    }

    /// `a * conj(a) = re^2 + im^2`.
    pub fn norm(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_unimodular(&self) -> bool {
        self.norm().is_one()
    }

    pub fn inv(&self) -> Result<Self, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        let n = self.norm();
        Ok(Self::new(&self.re / &n, -&self.im / &n))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ArithError> {
        Ok(self * &rhs.inv()?)
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Self::new(&self.re * r, &self.im * r)
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, e: i64) -> Result<Self, ArithError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Least common multiple of the denominators of both components.
    pub fn denom_lcm(&self) -> BigInt {
        self.re.denom().lcm(self.im.denom())
    }

    /// A square root in Q(i), if one exists.
    pub fn sqrt(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        // (a+bi)^2 = p+qi with |a+bi|^2 = sqrt(p^2+q^2)
        let modulus = rational_sqrt(&self.norm())?;
        let two = BigRational::from_integer(2.into());
        let a = rational_sqrt(&((&modulus + &self.re) / &two))?;
        let b_abs = rational_sqrt(&((&modulus - &self.re) / &two))?;
        let b = if a.is_zero() {
            b_abs
        } else if self.im.is_negative() {
            -b_abs
        } else {
            b_abs
        };
        let root = Self::new(a, b);
        (&root * &root == *self).then_some(root)
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (rational_to_f64(&self.re), rational_to_f64(&self.im))
    }
}

/// Exact square root of a non-negative rational when it is a perfect square.
pub fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    (&n * &n == *q.numer() && &d * &d == *q.denom()).then(|| BigRational::new(n, d))
}

pub(crate) fn rational_to_f64(q: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    match q.to_f64() {
        Some(v) if v.is_finite() => v,
        _ => {
            // very large numerator/denominator: scale through bit lengths
            let nb = q.numer().bits() as i64;
            let db = q.denom().bits() as i64;
            let shift = nb - db;
            let scaled = if shift > 0 {
                BigRational::new(q.numer().clone(), q.denom() << (shift as usize))
            } else {
                BigRational::new(q.numer() << ((-shift) as usize), q.denom().clone())
            };
            scaled.to_f64().unwrap_or(0.0) * 2f64.powi(shift.clamp(-2000, 2000) as i32)
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl<'a> $tr<&'a GaussianRational> for &'a GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: &'a GaussianRational) -> GaussianRational {
                let f: fn(&GaussianRational, &GaussianRational) -> GaussianRational = $body;
                f(self, rhs)
            }
        }
        impl $tr<GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: &'a GaussianRational) -> GaussianRational {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| GaussianRational::new(
    &a.re + &b.re,
    &a.im + &b.im
));
forward_binop!(Sub, sub, |a, b| GaussianRational::new(
    &a.re - &b.re,
    &a.im - &b.im
));
forward_binop!(Mul, mul, |a, b| {
    if a.im.is_zero() && b.im.is_zero() {
        return GaussianRational::from_real(&a.re * &b.re);
    }
    GaussianRational::new(
        &a.re * &b.re - &a.im * &b.im,
        &a.re * &b.im + &a.im * &b.re,
    )
});

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> Self {
        GaussianRational::new(-self.re, -self.im)
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-&self.re, -&self.im)
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl From<BigRational> for GaussianRational {
    fn from(r: BigRational) -> Self {
        Self::from_real(r)
    }
}

fn fmt_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for GaussianRational {
    /// Prints `a/b+c/d*i` with zero parts omitted, e.g. `3/5+4/5*i`, `-2`, `i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let im_text = |im: &BigRational| -> String {
            let mag = im.abs();
            if mag.is_one() {
                "i".to_string()
            } else {
                format!("{}*i", fmt_rational(&mag))
            }
        };
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", fmt_rational(&self.re)),
            (true, false) => {
                let sign = if self.im.is_negative() { "-" } else { "" };
                write!(f, "{sign}{}", im_text(&self.im))
            }
            (false, false) => {
                let sign = if self.im.is_negative() { "-" } else { "+" };
                write!(f, "{}{sign}{}", fmt_rational(&self.re), im_text(&self.im))
            }
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GR({self})")
    }
}

impl FromStr for GaussianRational {
    type Err = crate::expr::ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        crate::expr::parse_constant(s)
    }
}

/// Gaussian integer, used for fraction-free polynomial remainder sequences.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct GaussInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussInt {
    pub fn new(re: BigInt, im: BigInt) -> Self {
        Self { re, im }
    }

    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -&self.im)
    }

    /// Nearest-integer quotient; the remainder has strictly smaller norm.
    fn round_div(&self, b: &Self) -> Self {
        let n = b.norm();
        let num = self.mul_ref(&b.conj());
        let round = |x: &BigInt| -> BigInt {
            // floor((2x + n) / 2n)
            let two_n: BigInt = &n * 2;
            let t: BigInt = x * 2 + &n;
            t.div_floor(&two_n)
        };
        Self::new(round(&num.re), round(&num.im))
    }

    fn mul_ref(&self, b: &Self) -> Self {
        Self::new(
            &self.re * &b.re - &self.im * &b.im,
            &self.re * &b.im + &self.im * &b.re,
        )
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero_int() {
            let q = a.round_div(&b);
            let r = a.sub_ref(&q.mul_ref(&b));
            a = b;
            b = r;
        }
        a.normalize_unit()
    }

    fn sub_ref(&self, b: &Self) -> Self {
        Self::new(&self.re - &b.re, &self.im - &b.im)
    }

    fn is_zero_int(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// Multiply by a unit so that re > 0 and im >= 0.
    pub fn normalize_unit(self) -> Self {
        let mut g = self;
        for _ in 0..4 {
            if g.re.is_positive() && !g.im.is_negative() {
                return g;
            }
            g = Self::new(-g.im.clone(), g.re.clone());
        }
        g
    }

    pub fn to_gaussian(&self) -> GaussianRational {
        GaussianRational::new(
            BigRational::from_integer(self.re.clone()),
            BigRational::from_integer(self.im.clone()),
        )
    }
}

impl crate::poly::Domain for GaussInt {
    fn zero() -> Self {
        Self::default()
    }
    fn one() -> Self {
        Self::new(BigInt::one(), BigInt::zero())
    }
    fn is_zero(&self) -> bool {
        self.is_zero_int()
    }
    fn add(&self, o: &Self) -> Self {
        Self::new(&self.re + &o.re, &self.im + &o.im)
    }
    fn sub(&self, o: &Self) -> Self {
        self.sub_ref(o)
    }
    fn mul(&self, o: &Self) -> Self {
        self.mul_ref(o)
    }
    fn neg(&self) -> Self {
        Self::new(-&self.re, -&self.im)
    }
    fn exact_div(&self, o: &Self) -> Self {
        let n = o.norm();
        let num = self.mul_ref(&o.conj());
        debug_assert!((&num.re % &n).is_zero() && (&num.im % &n).is_zero());
        Self::new(&num.re / &n, &num.im / &n)
    }
}

impl crate::poly::Domain for GaussianRational {
    fn zero() -> Self {
        GaussianRational::zero()
    }
    fn one() -> Self {
        GaussianRational::one()
    }
    fn is_zero(&self) -> bool {
        GaussianRational::is_zero(self)
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
        self.checked_div(o).expect("exact division by zero")
    }
}
