#![allow(dead_code)]

use levelcurves::arith::GaussianRational;
use levelcurves::poly::UniPoly;
use levelcurves::ratfun::RatFun;
use proptest::prelude::*;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn gr(re: i64, im: i64, den: i64) -> GaussianRational {
    GaussianRational::from_parts(re, im, den)
}

pub fn gaussian_int<R: Rng>(r: &mut R, height: i64) -> GaussianRational {
    gr(r.gen_range(-height..=height), r.gen_range(-height..=height), 1)
}

/// Polynomial of exact degree `deg` with Gaussian-integer coefficients.
pub fn gaussian_poly<R: Rng>(r: &mut R, deg: usize, height: i64) -> UniPoly {
    let mut c: Vec<GaussianRational> = (0..=deg).map(|_| gaussian_int(r, height)).collect();
    while c[deg].is_zero() {
        c[deg] = gaussian_int(r, height);
    }
    UniPoly::new(c)
}

/// Non-constant rational function with numerator and denominator degrees
/// at most `deg`.
pub fn gaussian_ratfun<R: Rng>(r: &mut R, deg: usize, height: i64) -> RatFun {
    loop {
        let (dn, dd) = (r.gen_range(0..=deg), r.gen_range(0..=deg));
        let num = gaussian_poly(r, dn, height);
        let den = if r.gen_bool(0.5) {
            UniPoly::one()
        } else {
            gaussian_poly(r, dd, height)
        };
        if let Ok(q) = RatFun::make(num, den) {
            if !q.is_constant() {
                return q;
            }
        }
    }
}

/// Gaussian rational strictly inside the unit disc.
pub fn disc_point<R: Rng>(r: &mut R) -> GaussianRational {
    loop {
        let d = r.gen_range(2..=9);
        let a = gr(r.gen_range(-d..=d), r.gen_range(-d..=d), d);
        if a.norm() < GaussianRational::one().norm() {
            return a;
        }
    }
}

/// `ζ^e` with `ζ = (3 + 4i) / 5`.
pub fn zeta_power(e: i64) -> GaussianRational {
    gr(3, 4, 5).pow(e).unwrap()
}

/// `(z - a) / (1 - conj(a) z)`.
pub fn blaschke_factor(a: &GaussianRational) -> RatFun {
    let num = UniPoly::new(vec![-a.clone(), GaussianRational::one()]);
    let den = UniPoly::new(vec![GaussianRational::one(), -a.conj()]);
    RatFun::make(num, den).unwrap()
}

/// `ζ^e * prod (z - a_i)/(1 - conj(a_i) z)^{m_i}` with at most `factors`
/// distinct zeros.
pub fn blaschke_product<R: Rng>(r: &mut R, factors: usize) -> RatFun {
    let mut acc = RatFun::constant(zeta_power(r.gen_range(-3..=3)));
    for _ in 0..r.gen_range(1..=factors) {
        let m = r.gen_range(1..=3);
        let f = blaschke_factor(&disc_point(r)).pow(m);
        acc = acc.mul(&f);
    }
    acc
}

pub fn arb_gaussian() -> impl Strategy<Value = GaussianRational> {
    (-40i64..=40, -40i64..=40, 1i64..=12).prop_map(|(a, b, d)| gr(a, b, d))
}

pub fn arb_poly(max_deg: usize) -> impl Strategy<Value = UniPoly> {
    prop::collection::vec((-6i64..=6, -6i64..=6), 1..=max_deg + 1)
        .prop_map(|c| UniPoly::new(c.into_iter().map(|(a, b)| gr(a, b, 1)).collect()))
}

pub fn arb_nonzero_poly(max_deg: usize) -> impl Strategy<Value = UniPoly> {
    arb_poly(max_deg).prop_filter("non-zero", |p| !p.is_zero())
}

pub fn arb_ratfun(max_deg: usize) -> impl Strategy<Value = RatFun> {
    (arb_nonzero_poly(max_deg), arb_nonzero_poly(max_deg))
        .prop_filter_map("reduces", |(a, b)| RatFun::make(a, b).ok())
}
