use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::domain;
use super::uni::{PolyDisplay, UniPoly};
use super::PolyError;
use crate::arith::{ComplexBall, GaussianRational};

/// Dense bivariate polynomial over Q(i) in two named variables `v0`, `v1`.
///
/// Stored as a polynomial in `v1` whose coefficients are polynomials in `v0`:
/// `rows[j]` is the coefficient of `v1^j`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BiPoly {
    vars: [char; 2],
    rows: Vec<UniPoly>,
}

impl BiPoly {
    pub fn new(vars: [char; 2], rows: Vec<UniPoly>) -> Self {
        assert_ne!(vars[0], vars[1], "variables must be distinct");
        Self {
            vars,
            rows: domain::trim(rows),
        }
    }

    pub fn zero(vars: [char; 2]) -> Self {
        Self::new(vars, Vec::new())
    }

    pub fn constant(vars: [char; 2], c: GaussianRational) -> Self {
        Self::new(vars, vec![UniPoly::constant(c)])
    }

    /// The polynomial consisting of the single variable `vars[idx]`.
    pub fn var(vars: [char; 2], idx: usize) -> Self {
        Self::from_terms(vars, &[(usize::from(idx == 0), usize::from(idx == 1), 1.into())])
    }

    /// Sum of `c * v0^a * v1^b` over the given `(a, b, c)`.
    pub fn from_terms(vars: [char; 2], terms: &[(usize, usize, GaussianRational)]) -> Self {
        let mut grid: Vec<Vec<GaussianRational>> = Vec::new();
        for (a, b, c) in terms {
            if grid.len() <= *b {
                grid.resize(b + 1, Vec::new());
            }
            let row = &mut grid[*b];
            if row.len() <= *a {
                row.resize(a + 1, GaussianRational::zero());
            }
            row[*a] = &row[*a] + c;
        }
        Self::new(vars, grid.into_iter().map(UniPoly::new).collect())
    }

    /// Embeds a univariate polynomial as a polynomial in `vars[idx]`.
    pub fn from_uni(vars: [char; 2], idx: usize, p: &UniPoly) -> Self {
        if idx == 0 {
            Self::new(vars, vec![p.clone()])
        } else {
            Self::new(
                vars,
                p.coeffs().iter().map(|c| UniPoly::constant(c.clone())).collect(),
            )
        }
    }

    /// Builds from coefficients of powers of `vars[idx]`, each a polynomial
    /// in the other variable.
    pub fn from_coeffs_in(vars: [char; 2], idx: usize, coeffs: &[UniPoly]) -> Self {
        if idx == 1 {
            return Self::new(vars, coeffs.to_vec());
        }
        let mut terms = Vec::new();
        for (a, p) in coeffs.iter().enumerate() {
            for (b, c) in p.coeffs().iter().enumerate() {
                terms.push((a, b, c.clone()));
            }
        }
        Self::from_terms(vars, &terms)
    }

    /// Coefficients of powers of `vars[idx]`, as polynomials in the other variable.
    pub fn coeffs_in(&self, idx: usize) -> Vec<UniPoly> {
        if idx == 1 {
            return self.rows.clone();
        }
        let n = self.degree_in(0).map_or(0, |d| d + 1);
        (0..n)
            .map(|a| UniPoly::new(self.rows.iter().map(|r| r.coeff(a)).collect()))
            .collect()
    }

    pub fn vars(&self) -> [char; 2] {
        self.vars
    }

    pub fn var_index(&self, v: char) -> Option<usize> {
        self.vars.iter().position(|&c| c == v)
    }

    /// Same coefficients, new variable names.
    pub fn renamed(&self, vars: [char; 2]) -> Self {
        Self::new(vars, self.rows.clone())
    }

    pub fn coeff(&self, a: usize, b: usize) -> GaussianRational {
        self.rows.get(b).map(|r| r.coeff(a)).unwrap_or_default()
    }

    /// Non-zero terms `(a, b, c)` of `c * v0^a * v1^b`.
    pub fn terms(&self) -> Vec<(usize, usize, GaussianRational)> {
        let mut out = Vec::new();
        for (b, r) in self.rows.iter().enumerate() {
            for (a, c) in r.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    out.push((a, b, c.clone()));
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.rows.len() <= 1 && self.rows.first().map_or(true, |r| r.is_constant())
    }

    pub fn degree_in(&self, idx: usize) -> Option<usize> {
        if self.is_zero() {
            return None;
        }
        if idx == 1 {
            return Some(self.rows.len() - 1);
        }
        self.rows.iter().filter_map(|r| r.degree()).max()
    }

    pub fn total_degree(&self) -> Option<usize> {
        self.terms().iter().map(|(a, b, _)| a + b).max()
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        Self::new(self.vars, self.rows.iter().map(|r| r.scale(c)).collect())
    }

    pub fn mul_uni(&self, idx: usize, p: &UniPoly) -> Self {
        self * &Self::from_uni(self.vars, idx, p)
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::constant(self.vars, GaussianRational::one());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn conj(&self) -> Self {
        Self::new(self.vars, self.rows.iter().map(|r| r.conj()).collect())
    }

    /// Exchanges the exponents of the two variables, keeping the names.
    pub fn swapped(&self) -> Self {
        Self::new(self.vars, self.coeffs_in(0))
    }

    /// The swap-conjugate involution: conjugate coefficients and exchange variables.
    pub fn sigma(&self) -> Self {
        self.swapped().conj()
    }

    pub fn derivative(&self, idx: usize) -> Self {
        if idx == 0 {
            Self::new(self.vars, self.rows.iter().map(|r| r.derivative()).collect())
        } else {
            Self::new(
                self.vars,
                self.rows
                    .iter()
                    .enumerate()
                    .skip(1)
                    .map(|(j, r)| r.scale(&GaussianRational::from_integer(j as i64)))
                    .collect(),
            )
        }
    }

    /// Substitutes `vars[idx] = value`, leaving a polynomial in the other variable.
    pub fn eval_var(&self, idx: usize, value: &GaussianRational) -> UniPoly {
        let other = 1 - idx;
        let cs = self.coeffs_in(other);
        UniPoly::new(cs.iter().map(|p| p.eval(value)).collect())
    }

    pub fn eval(&self, a: &GaussianRational, b: &GaussianRational) -> GaussianRational {
        self.eval_var(0, a).eval(b)
    }

    pub fn eval_ball(&self, a: &ComplexBall, b: &ComplexBall) -> ComplexBall {
        let prec = a.precision().max(b.precision());
        self.rows
            .iter()
            .rev()
            .fold(ComplexBall::zero(prec), |acc, r| acc.mul(b).add(&r.eval_ball(a)))
    }

    /// Substitutes univariate polynomials for both variables.
    pub fn compose_uni(&self, p0: &UniPoly, p1: &UniPoly) -> UniPoly {
        self.rows
            .iter()
            .rev()
            .fold(UniPoly::zero(), |acc, r| &(&acc * p1) + &r.compose(p0))
    }

    /// Exact quotient when `d` divides `self`.
    pub fn div_exact(&self, d: &BiPoly) -> Option<BiPoly> {
        let dd = d.degree_in(1)?;
        let lc = d.rows[dd].clone();
        let mut r = self.rows.clone();
        let Some(dr) = self.degree_in(1) else {
            return Some(Self::zero(self.vars));
        };
        if dr < dd {
            return None;
        }
        let mut q = vec![UniPoly::zero(); dr - dd + 1];
        for k in (dd..=dr).rev() {
            if r[k].is_zero() {
                continue;
            }
            let t = r[k].div_exact(&lc)?;
            for (j, dj) in d.rows.iter().enumerate() {
                r[k - dd + j] = &r[k - dd + j] - &(&t * dj);
            }
            q[k - dd] = t;
        }
        r.iter()
            .all(|p| p.is_zero())
            .then(|| Self::new(self.vars, q))
    }

    pub fn divides(&self, other: &BiPoly) -> bool {
        other.div_exact(self).is_some()
    }

    /// Content as a polynomial in `v0` (monic) and the primitive part.
    pub fn content_primitive(&self) -> (UniPoly, BiPoly) {
        let mut c = UniPoly::zero();
        for r in &self.rows {
            c = if c.is_zero() {
                r.monic()
            } else {
                c.gcd(r).unwrap()
            };
            if c.is_constant() && !c.is_zero() {
                break;
            }
        }
        if c.is_zero() {
            return (UniPoly::one(), self.clone());
        }
        let rows = self.rows.iter().map(|r| r.div_exact(&c).unwrap()).collect();
        (c, Self::new(self.vars, rows))
    }

    /// Lexicographically leading coefficient: highest power of `v0`, then of `v1`.
    pub fn leading_coeff(&self) -> GaussianRational {
        self.terms()
            .into_iter()
            .max_by_key(|(a, b, _)| (*a, *b))
            .map(|t| t.2)
            .unwrap_or_default()
    }

    /// Associate with lexicographically leading coefficient 1.
    pub fn normalized(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.leading_coeff().inv().unwrap())
    }

    /// Whether `self` and `other` differ by a non-zero constant factor.
    pub fn is_associate(&self, other: &BiPoly) -> bool {
        self.normalized().rows == other.normalized().rows
    }

    pub fn gcd(&self, other: &BiPoly) -> Result<BiPoly, PolyError> {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => return Err(PolyError::BothZero),
            (true, false) => return Ok(other.normalized()),
            (false, true) => return Ok(self.normalized()),
            _ => {}
        }
        let (cp, pp) = self.content_primitive();
        let (cq, qq) = other.content_primitive();
        let c = cp.gcd(&cq)?;
        let g = if pp.degree_in(1) == Some(0) || qq.degree_in(1) == Some(0) {
            Self::constant(self.vars, GaussianRational::one())
        } else {
            let last = domain::subresultant_last(&pp.rows, &qq.rows);
            Self::new(self.vars, last).content_primitive().1
        };
        Ok(g.mul_uni(0, &c).normalized())
    }

    /// Square-free part `p / gcd(p, p_v0, p_v1)`.
    pub fn squarefree_part(&self) -> BiPoly {
        if self.is_constant() {
            return self.clone();
        }
        let mut g = self.gcd(&self.derivative(0)).unwrap();
        g = g.gcd(&self.derivative(1)).unwrap();
        self.div_exact(&g).unwrap().normalized()
    }

    /// Resultant eliminating `vars[idx]`: the Sylvester determinant, `self`
    /// rows first, as a polynomial in the other variable.
    pub fn resultant(&self, other: &BiPoly, idx: usize) -> Result<UniPoly, PolyError> {
        let p = self.coeffs_in(idx);
        let q = other.coeffs_in(idx);
        if p.len() < 2 || q.len() < 2 {
            return Err(PolyError::DegreeZero);
        }
        Ok(domain::sylvester_resultant(&p, &q))
    }

    /// `G(x+iy, x-iy)` split into real and imaginary coefficient parts, both
    /// real polynomials in `(x, y)`.
    pub fn realify(&self) -> (BiPoly, BiPoly) {
        let xy = ['x', 'y'];
        let i = GaussianRational::i();
        let plus = BiPoly::from_terms(xy, &[(1, 0, 1.into()), (0, 1, i.clone())]);
        let minus = BiPoly::from_terms(xy, &[(1, 0, 1.into()), (0, 1, -i)]);
        let da = self.degree_in(0).unwrap_or(0);
        let db = self.degree_in(1).unwrap_or(0);
        let powers = |base: &BiPoly, n: usize| {
            let mut v = vec![BiPoly::constant(xy, 1.into())];
            for k in 0..n {
                v.push(&v[k] * base);
            }
            v
        };
        let pp = powers(&plus, da);
        let pm = powers(&minus, db);
        let mut acc = BiPoly::zero(xy);
        for (a, b, c) in self.terms() {
            acc = &acc + &(&pp[a] * &pm[b]).scale(&c);
        }
        let part = |f: fn(&GaussianRational) -> GaussianRational| {
            BiPoly::from_terms(
                xy,
                &acc.terms()
                    .into_iter()
                    .map(|(a, b, c)| (a, b, f(&c)))
                    .collect::<Vec<_>>(),
            )
        };
        (
            part(|c| GaussianRational::from_real(c.re().clone())),
            part(|c| GaussianRational::from_real(c.im().clone())),
        )
    }

    pub fn is_real(&self) -> bool {
        self.rows.iter().all(|r| r.is_real())
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut keyed: Vec<(usize, usize, &GaussianRational)> = Vec::new();
        for (b, r) in self.rows.iter().enumerate() {
            for (a, c) in r.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    keyed.push((a, b, c));
                }
            }
        }
        keyed.sort_by(|x, y| (y.0 + y.1, y.0).cmp(&(x.0 + x.1, x.0)));
        let d = PolyDisplay {
            terms: keyed
                .into_iter()
                .map(|(a, b, c)| (c, vec![(self.vars[0], a), (self.vars[1], b)]))
                .collect(),
        };
        write!(f, "{d}")
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}

fn check_vars(a: &BiPoly, b: &BiPoly) {
    assert_eq!(a.vars, b.vars, "bivariate polynomials over different variables");
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, o: &BiPoly) -> BiPoly {
        check_vars(self, o);
        let n = self.rows.len().max(o.rows.len());
        let z = UniPoly::zero();
        BiPoly::new(
            self.vars,
            (0..n)
                .map(|j| self.rows.get(j).unwrap_or(&z) + o.rows.get(j).unwrap_or(&z))
                .collect(),
        )
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, o: &BiPoly) -> BiPoly {
        self + &(-o)
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly::new(self.vars, self.rows.iter().map(|r| -r).collect())
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, o: &BiPoly) -> BiPoly {
        check_vars(self, o);
        if self.is_zero() || o.is_zero() {
            return BiPoly::zero(self.vars);
        }
        let mut rows = vec![UniPoly::zero(); self.rows.len() + o.rows.len() - 1];
        for (i, a) in self.rows.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.rows.iter().enumerate() {
                rows[i + j] = &rows[i + j] + &(a * b);
            }
        }
        BiPoly::new(self.vars, rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(s: &str) -> BiPoly {
        crate::expr::parse_bipoly(s, ['z', 'w']).unwrap()
    }

    fn u(s: &str) -> UniPoly {
        crate::expr::parse_poly(s, 'z').unwrap()
    }

    #[test]
    fn resultant_examples() {
        assert_eq!(b("z*w-1").resultant(&b("z-w"), 1).unwrap(), u("z^2-1"));
        assert_eq!(b("w-z").resultant(&b("w-z"), 1).unwrap(), UniPoly::zero());
        assert_eq!(b("w^2-z").resultant(&b("w"), 1).unwrap(), u("-z"));
        assert_eq!(
            b("z^2+1").resultant(&b("w"), 1),
            Err(PolyError::DegreeZero)
        );
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(b("z*w-1").gcd(&b("z^2*w^2-1")).unwrap(), b("z*w-1"));
        assert_eq!(b("z+w").gcd(&b("z-w")).unwrap(), b("1"));
        assert_eq!(
            b("z^2*w^2-1").gcd(&b("3/4*z^2*w^2-3/4")).unwrap(),
            b("z^2*w^2-1")
        );
        assert_eq!(
            BiPoly::zero(['z', 'w']).gcd(&BiPoly::zero(['z', 'w'])),
            Err(PolyError::BothZero)
        );
    }

    #[test]
    fn gcd_with_content_in_first_variable() {
        let g = b("(z+1)*(z*w-i)");
        let p = &g * &b("w+z^2");
        let q = &g * &b("(z-3)*w+2");
        assert!(p.gcd(&q).unwrap().is_associate(&g));
    }

    #[test]
    fn conj_and_sigma() {
        let p = crate::expr::parse_bipoly("(2+i)*x*y", ['x', 'y']).unwrap();
        assert_eq!(
            p.conj(),
            crate::expr::parse_bipoly("(2-i)*x*y", ['x', 'y']).unwrap()
        );
        let l = b("(z+2)*(w+2)-1");
        assert_eq!(l.sigma(), l);
        assert_eq!(b("i*z*w^2").sigma(), b("-i*z^2*w"));
    }

    #[test]
    fn realify_circle() {
        let (re, im) = b("z*w-1").realify();
        let xy = ['x', 'y'];
        assert_eq!(re, crate::expr::parse_bipoly("x^2+y^2-1", xy).unwrap());
        assert!(im.is_zero());
    }

    #[test]
    fn display_reparses() {
        for s in ["z^2*w^2-1", "z*w+(1/2-i)*z-3*w+7", "-w^3+i*z"] {
            let p = b(s);
            assert_eq!(p.to_string(), s);
        }
    }

    #[test]
    fn exact_division() {
        let p = b("z^2*w^2-1");
        assert_eq!(p.div_exact(&b("z*w-1")).unwrap(), b("z*w+1"));
        assert!(p.div_exact(&b("z+w")).is_none());
    }
}
