//! The common root of two bivariate polynomials over a point of the first
//! variable, as a rational function of that point.
//!
//! Over a point `a` where both leading coefficients in the second variable
//! are non-zero and the resultant vanishes, the two specializations share a
//! root. If the first subresultant `S_1 = s_1 v + s_0` has `s_1(a) != 0`
//! the shared root is unique and equals `-s_0(a) / s_1(a)`. When one of the
//! polynomials is linear in the second variable it is used directly.

use super::bi::BiPoly;
use super::domain::subresultant_coeffs;
use super::uni::UniPoly;
use crate::arith::ComplexBall;

#[derive(Clone, Debug)]
pub struct FiberMap {
    num: UniPoly,
    den: UniPoly,
    leads: Vec<UniPoly>,
}

impl FiberMap {
    /// `None` when either polynomial is constant in the second variable.
    pub fn new(p: &BiPoly, q: &BiPoly) -> Option<Self> {
        let pc = p.coeffs_in(1);
        let qc = q.coeffs_in(1);
        if pc.len() < 2 || qc.len() < 2 {
            return None;
        }
        for c in [&pc, &qc] {
            if c.len() == 2 {
                return Some(Self {
                    num: -&c[0],
                    den: c[1].clone(),
                    leads: vec![c[1].clone()],
                });
            }
        }
        let s = subresultant_coeffs(&pc, &qc, 1);
        Some(Self {
            num: -&s[0],
            den: s[1].clone(),
            leads: vec![pc.last().unwrap().clone(), qc.last().unwrap().clone()],
        })
    }

    /// Enclosure of the unique shared root over every point of `a` that is a
    /// root of the resultant, or `None` if uniqueness cannot be certified on
    /// the ball.
    pub fn eval_ball(&self, a: &ComplexBall) -> Option<ComplexBall> {
        if self.leads.iter().any(|l| l.eval_ball(a).contains_zero()) {
            return None;
        }
        let d = self.den.eval_ball(a);
        if d.contains_zero() {
            return None;
        }
        self.num.eval_ball(a).div(&d).ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::GaussianRational;
    use crate::expr::parse_bipoly;

    #[test]
    fn linear_fiber() {
        let p = parse_bipoly("z*w-1", ['z', 'w']).unwrap();
        let q = parse_bipoly("w^3+z", ['z', 'w']).unwrap();
        let f = FiberMap::new(&p, &q).unwrap();
        let a = ComplexBall::from_gaussian(&GaussianRational::from_integer(2), 64);
        let w = f.eval_ball(&a).unwrap();
        assert!(w.contains_gaussian(&GaussianRational::from_ratio(1, 2)));
    }

    #[test]
    fn subresultant_fiber() {
        // over z = 1 the shared root in w is 2: w^2 - 3w + 2 and w^2 - w - 2
        let p = parse_bipoly("w^2-3*z*w+2*z", ['z', 'w']).unwrap();
        let q = parse_bipoly("w^2-w-2*z^2", ['z', 'w']).unwrap();
        let f = FiberMap::new(&p, &q).unwrap();
        let a = ComplexBall::from_gaussian(&GaussianRational::one(), 64);
        let w = f.eval_ball(&a).unwrap();
        assert!(w.contains_gaussian(&GaussianRational::from_integer(2)));
        assert!(w.radius_f64() < 1e-15);
    }
}
