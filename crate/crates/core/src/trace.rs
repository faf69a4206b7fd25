//! Search for certified simple real points on a real plane curve `h(x, y) = 0`.
//!
//! Horizontal and vertical lines through a deterministic grid are scanned for
//! exact sign changes of `h`; each change is bisected with exact rational
//! arithmetic and then certified on a small box `[xa, xb] x [y - d, y + d]`:
//! `h` has constant opposite signs on the two vertical edges and `dh/dx` has
//! no zero on the box. Every horizontal line through the box then meets the
//! curve exactly once, transversally, so the real trace is a smooth arc there
//! and in particular infinite.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::arith::{ComplexBall, Dyadic, GaussianRational};
use crate::poly::roots::simplest_between;
use crate::poly::{BiPoly, UniPoly};

/// A certified simple point of a real curve.
#[derive(Clone, Debug, PartialEq)]
pub struct RealPoint {
    pub x: BigRational,
    pub y: BigRational,
    /// Half-widths of the certified box around `(x, y)`.
    pub x_radius: BigRational,
    pub y_radius: BigRational,
}

impl RealPoint {
    pub fn to_gaussian(&self) -> GaussianRational {
        GaussianRational::new(self.x.clone(), self.y.clone())
    }

    pub fn to_f64(&self) -> (f64, f64) {
        self.to_gaussian().to_f64_pair()
    }

    fn swapped(self) -> Self {
        Self {
            x: self.y,
            y: self.x,
            x_radius: self.y_radius,
            y_radius: self.x_radius,
        }
    }
}

/// Budget of the grid search.
#[derive(Clone, Copy, Debug)]
pub struct TraceSearch {
    /// Lines per direction.
    pub grid: usize,
    /// Bits of accuracy of the returned coordinates.
    pub refine_bits: u32,
    /// Stop after this many points.
    pub want: usize,
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn real(q: &BigRational) -> GaussianRational {
    GaussianRational::from_real(q.clone())
}

fn sign_at(p: &UniPoly, x: &BigRational) -> i32 {
    let v = p.eval(&real(x));
    let r = v.re();
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

fn pow2(e: i64) -> BigRational {
    if e >= 0 {
        BigRational::from_integer(BigInt::one() << e as usize)
    } else {
        BigRational::new(BigInt::one(), BigInt::one() << (-e) as usize)
    }
}

fn ball(c: &BigRational, r: &BigRational, prec: u32) -> ComplexBall {
    let (rd, err) = Dyadic::from_rational(r, 64);
    ComplexBall::from_gaussian(&real(c), prec).inflate(&rd.add(&err).mag_up())
}

/// Half-width of a square centered at the origin containing the interesting
/// part of the real curve.
fn search_radius(h: &BiPoly) -> BigRational {
    let zero = GaussianRational::zero();
    let mut b: f64 = 1.0;
    for idx in 0..2 {
        let line = h.eval_var(idx, &zero);
        if !line.is_constant() {
            b = b.max(line.cauchy_bound());
        }
    }
    let b = b.min(1e6).ceil() as i64 + 1;
    BigRational::from_integer(BigInt::from(b.max(2)))
}

/// Up to `budget.want` certified simple real points of the real curve `h`.
pub fn simple_real_points(h: &BiPoly, budget: &TraceSearch) -> Vec<RealPoint> {
    let mut out = Vec::new();
    if h.is_constant() || budget.want == 0 {
        return out;
    }
    let r = search_radius(h);
    scan(h, &r, budget, &mut out, false);
    if out.len() < budget.want {
        scan(&h.swapped(), &r, budget, &mut out, true);
    }
    out
}

fn scan(h: &BiPoly, radius: &BigRational, budget: &TraceSearch, out: &mut Vec<RealPoint>, swap: bool) {
    let hx = h.derivative(0);
    let n = budget.grid as i64;
    let step = radius * rat(2, n);
    let offset = rat(37, 101);
    for j in 0..n {
        let y = -radius + &step * (BigRational::from_integer(j.into()) + &offset);
        let line = h.eval_var(1, &real(&y));
        if line.is_constant() {
            continue;
        }
        let nodes: Vec<(BigRational, i32)> = (0..=n)
            .map(|k| -radius + &step * BigRational::from_integer(k.into()))
            .map(|x| {
                let s = sign_at(&line, &x);
                (x, s)
            })
            .filter(|(_, s)| *s != 0)
            .collect();
        for w in nodes.windows(2) {
            if w[0].1 * w[1].1 >= 0 {
                continue;
            }
            let root = bisect(&line, &w[0].0, &w[1].0, w[0].1, budget.refine_bits);
            if let Some(p) = certify(h, &hx, &line, &root, &y, budget.refine_bits) {
                out.push(if swap { p.swapped() } else { p });
                if out.len() >= budget.want {
                    return;
                }
            }
        }
    }
}

fn bisect(line: &UniPoly, lo: &BigRational, hi: &BigRational, s_lo: i32, bits: u32) -> BigRational {
    let (mut lo, mut hi) = (lo.clone(), hi.clone());
    let eps = pow2(-(bits as i64) - 8);
    let half = rat(1, 2);
    while &hi - &lo > eps {
        let mid = (&lo + &hi) * &half;
        match sign_at(line, &mid) {
            0 => return mid,
            s if s == s_lo => lo = mid,
            _ => hi = mid,
        }
    }
    let q = simplest_between(&lo, &hi);
    if sign_at(line, &q) == 0 {
        return q;
    }
    (lo + hi) * half
}

fn certify(
    h: &BiPoly,
    hx: &BiPoly,
    line: &UniPoly,
    x: &BigRational,
    y: &BigRational,
    bits: u32,
) -> Option<RealPoint> {
    let prec = bits + 64;
    for e in [10i64, 20, 30] {
        let s = pow2(-e);
        let d = pow2(-e - 10);
        let xa = x - &s;
        let xb = x + &s;
        let sa = sign_at(line, &xa);
        let sb = sign_at(line, &xb);
        if sa * sb >= 0 {
            continue;
        }
        let yb = ball(y, &d, prec);
        let ea = h.eval_ball(&ComplexBall::from_gaussian(&real(&xa), prec), &yb);
        let eb = h.eval_ball(&ComplexBall::from_gaussian(&real(&xb), prec), &yb);
        let slope = hx.eval_ball(&ball(x, &s, prec), &yb);
        if !ea.contains_zero() && !eb.contains_zero() && !slope.contains_zero() {
            return Some(RealPoint {
                x: x.clone(),
                y: y.clone(),
                x_radius: s,
                y_radius: d,
            });
        }
    }
    None
}

/// `|h(x, y)|` at the center of the point.
pub fn residual(h: &BiPoly, p: &RealPoint) -> f64 {
    let v = h.eval(&real(&p.x), &real(&p.y));
    let (re, im) = v.to_f64_pair();
    re.hypot(im)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_bipoly;

    fn budget(want: usize) -> TraceSearch {
        TraceSearch {
            grid: 16,
            refine_bits: 64,
            want,
        }
    }

    #[test]
    fn unit_circle_has_simple_points() {
        let h = parse_bipoly("x^2+y^2-1", ['x', 'y']).unwrap();
        let pts = simple_real_points(&h, &budget(3));
        assert_eq!(pts.len(), 3);
        for p in &pts {
            let (x, y) = p.to_f64();
            assert!((x * x + y * y - 1.0).abs() < 1e-15);
            assert!(residual(&h, p) < 1e-15);
        }
    }

    #[test]
    fn empty_real_trace() {
        let h = parse_bipoly("x^2+y^2+1", ['x', 'y']).unwrap();
        assert!(simple_real_points(&h, &budget(1)).is_empty());
    }

    #[test]
    fn isolated_real_point_is_not_reported() {
        let h = parse_bipoly("x^2+y^2", ['x', 'y']).unwrap();
        assert!(simple_real_points(&h, &budget(1)).is_empty());
    }

    #[test]
    fn vertical_line() {
        let h = parse_bipoly("x-1/3", ['x', 'y']).unwrap();
        let pts = simple_real_points(&h, &budget(1));
        assert_eq!(pts.len(), 1);
        assert_eq!(pts[0].x, rat(1, 3));
    }

    #[test]
    fn horizontal_line_found_by_vertical_scan() {
        let h = parse_bipoly("y-1/3", ['x', 'y']).unwrap();
        let pts = simple_real_points(&h, &budget(1));
        assert_eq!(pts.len(), 1);
        assert_eq!(pts[0].y, rat(1, 3));
    }
}
