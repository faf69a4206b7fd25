//! Midpoint-radius complex balls over [`Dyadic`] centers.
//!
//! Every operation rounds the center to the ball's working precision and
//! folds the rounding error into the radius, so a ball always encloses the
//! exact result of the same operation applied to any points of its inputs.

use std::fmt;

use num_complex::Complex64;

use super::dyadic::{Dyadic, MAG_BITS};
use super::gaussian::GaussianRational;
use super::ArithError;

#[derive(Clone, PartialEq, Eq)]
pub struct ComplexBall {
    re: Dyadic,
    im: Dyadic,
    rad: Dyadic,
    prec: u32,
}

impl ComplexBall {
    /// A ball with exact center and the given radius, rounded upward.
    pub fn new(re: Dyadic, im: Dyadic, rad: Dyadic, prec: u32) -> Self {
        let (re, e1) = re.round(prec);
        let (im, e2) = im.round(prec);
        Self {
            re,
            im,
            rad: rad.add(&e1).add(&e2).mag_up(),
            prec,
        }
    }

    pub fn exact(re: Dyadic, im: Dyadic, prec: u32) -> Self {
        Self::new(re, im, Dyadic::zero(), prec)
    }

    pub fn zero(prec: u32) -> Self {
        Self::exact(Dyadic::zero(), Dyadic::zero(), prec)
    }

    pub fn one(prec: u32) -> Self {
        Self::exact(Dyadic::one(), Dyadic::zero(), prec)
    }

    pub fn from_f64(re: f64, im: f64, prec: u32) -> Self {
        Self::exact(Dyadic::from_f64(re), Dyadic::from_f64(im), prec)
    }

    /// Enclosure of an exact Gaussian rational at `prec` bits.
    pub fn from_gaussian(a: &GaussianRational, prec: u32) -> Self {
        assert!(prec >= 2, "precision must be at least 2 bits");
        let (re, e1) = Dyadic::from_rational(a.re(), prec);
        let (im, e2) = Dyadic::from_rational(a.im(), prec);
        Self::new(re, im, e1.add(&e2), prec)
    }

    pub fn re(&self) -> &Dyadic {
        &self.re
    }

    pub fn im(&self) -> &Dyadic {
        &self.im
    }

    pub fn radius(&self) -> &Dyadic {
        &self.rad
    }

    pub fn precision(&self) -> u32 {
        self.prec
    }

    pub fn with_precision(&self, prec: u32) -> Self {
        Self::new(self.re.clone(), self.im.clone(), self.rad.clone(), prec)
    }

    pub fn is_exact(&self) -> bool {
        self.rad.is_zero()
    }

    /// Same center, radius zero.
    pub fn mid(&self) -> Self {
        Self {
            re: self.re.clone(),
            im: self.im.clone(),
            rad: Dyadic::zero(),
            prec: self.prec,
        }
    }

    pub fn inflate(&self, extra: &Dyadic) -> Self {
        Self {
            re: self.re.clone(),
            im: self.im.clone(),
            rad: self.rad.add(&extra.abs()).mag_up(),
            prec: self.prec,
        }
    }

    pub fn center_f64(&self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    pub fn radius_f64(&self) -> f64 {
        self.rad.to_f64()
    }

    /// The center as an exact Gaussian rational.
    pub fn center_gaussian(&self) -> GaussianRational {
        GaussianRational::new(self.re.to_rational(), self.im.to_rational())
    }

    fn center_norm_sq(&self) -> Dyadic {
        self.re.mul(&self.re).add(&self.im.mul(&self.im))
    }

    /// Upper bound on `|center|`.
    pub fn center_abs_upper(&self) -> Dyadic {
        self.center_norm_sq().mag_up().sqrt_ceil(MAG_BITS as u32).mag_up()
    }

    /// Lower bound on `|center|`.
    pub fn center_abs_lower(&self) -> Dyadic {
        self.center_norm_sq().mag_down().sqrt_floor(MAG_BITS as u32).mag_down()
    }

    /// Upper bound on `|z|` over the ball.
    pub fn abs_upper(&self) -> Dyadic {
        self.center_abs_upper().add(&self.rad).mag_up()
    }

    /// Lower bound on `|z|` over the ball (zero if the ball meets the origin).
    pub fn abs_lower(&self) -> Dyadic {
        let l = self.center_abs_lower().sub(&self.rad);
        if l.is_negative() {
            Dyadic::zero()
        } else {
            l.mag_down()
        }
    }

    pub fn contains_zero(&self) -> bool {
        self.center_norm_sq() <= self.rad.mul(&self.rad)
    }

    /// Whether the exact point lies in the ball.
    pub fn contains_point(&self, re: &Dyadic, im: &Dyadic) -> bool {
        let dx = self.re.sub(re);
        let dy = self.im.sub(im);
        dx.mul(&dx).add(&dy.mul(&dy)) <= self.rad.mul(&self.rad)
    }

    pub fn contains_gaussian(&self, a: &GaussianRational) -> bool {
        let dx = self.re.to_rational() - a.re();
        let dy = self.im.to_rational() - a.im();
        let r = self.rad.to_rational();
        &dx * &dx + &dy * &dy <= &r * &r
    }

    fn center_dist_sq(&self, o: &Self) -> Dyadic {
        let dx = self.re.sub(&o.re);
        let dy = self.im.sub(&o.im);
        dx.mul(&dx).add(&dy.mul(&dy))
    }

    pub fn overlaps(&self, o: &Self) -> bool {
        let r = self.rad.add(&o.rad);
        self.center_dist_sq(o) <= r.mul(&r)
    }

    /// Whether `o` is entirely inside `self`.
    pub fn contains(&self, o: &Self) -> bool {
        let slack = self.rad.sub(&o.rad);
        !slack.is_negative() && self.center_dist_sq(o) <= slack.mul(&slack)
    }

    pub fn neg(&self) -> Self {
        Self {
            re: self.re.neg(),
            im: self.im.neg(),
            rad: self.rad.clone(),
            prec: self.prec,
        }
    }

    pub fn conj(&self) -> Self {
        Self {
            re: self.re.clone(),
            im: self.im.neg(),
            rad: self.rad.clone(),
            prec: self.prec,
        }
    }

    fn joint_prec(&self, o: &Self) -> u32 {
        self.prec.max(o.prec)
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(
            self.re.add(&o.re),
            self.im.add(&o.im),
            self.rad.add(&o.rad),
            self.joint_prec(o),
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let re = self.re.mul(&o.re).sub(&self.im.mul(&o.im));
        let im = self.re.mul(&o.im).add(&self.im.mul(&o.re));
        let mut rad = Dyadic::zero();
        if !o.rad.is_zero() {
            rad = rad.add(&self.center_abs_upper().mul(&o.rad));
        }
        if !self.rad.is_zero() {
            rad = rad.add(&o.center_abs_upper().mul(&self.rad));
            rad = rad.add(&self.rad.mul(&o.rad));
        }
        Self::new(re, im, rad.mag_up(), self.joint_prec(o))
    }

    pub fn square(&self) -> Self {
        self.mul(self)
    }

    pub fn mul_dyadic(&self, d: &Dyadic) -> Self {
        Self::new(
            self.re.mul(d),
            self.im.mul(d),
            self.rad.mul(&d.abs()),
            self.prec,
        )
    }

    pub fn inv(&self) -> Result<Self, ArithError> {
        let lower = self.center_abs_lower();
        if lower <= self.rad {
            return Err(ArithError::DivisionByZero);
        }
        let prec = self.prec;
        let n2 = self.center_norm_sq();
        let (re, e1) = self.re.div(&n2, prec + 4);
        let (im, e2) = self.im.neg().div(&n2, prec + 4);
        // |1/z - 1/c| <= r / (|c| (|c| - r))
        let mut rad = e1.add(&e2);
        if !self.rad.is_zero() {
            let gap = lower.sub(&self.rad).mag_down();
            let denom = lower.mul(&gap).mag_down();
            let (q, qe) = self.rad.div(&denom, MAG_BITS as u32);
            rad = rad.add(&q.add(&qe));
        }
        Ok(Self::new(re, im, rad.mag_up(), prec))
    }

    pub fn div(&self, o: &Self) -> Result<Self, ArithError> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.prec);
        let mut sq = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.square();
            }
        }
        acc
    }

    /// Ball containing `|z|^2` for all `z` in the ball, as a real ball.
    pub fn norm_sq(&self) -> Self {
        self.mul(&self.conj())
    }
}

impl fmt::Debug for ComplexBall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{:e} {:+e}i +/- {:e}]",
            self.re.to_f64(),
            self.im.to_f64(),
            self.rad.to_f64()
        )
    }
}
