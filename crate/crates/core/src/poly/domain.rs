//! Fraction-free algorithms over an integral domain: pseudo-remainders,
//! subresultant remainder sequences and Bareiss determinants.
//!
//! Dense polynomials are plain coefficient slices, lowest degree first, with
//! no trailing zeros unless stated otherwise.

use std::fmt::Debug;

/// Commutative integral domain with exact division.
///
/// `exact_div` is only called when the quotient is known to exist.
pub trait Domain: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn exact_div(&self, o: &Self) -> Self;

    fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

pub(crate) fn trim<D: Domain>(mut v: Vec<D>) -> Vec<D> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn degree<D: Domain>(p: &[D]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

fn scale<D: Domain>(p: &[D], c: &D) -> Vec<D> {
    p.iter().map(|x| x.mul(c)).collect()
}

/// `lc(b)^(deg a - deg b + 1) * a mod b`.
pub fn pseudo_remainder<D: Domain>(a: &[D], b: &[D]) -> Vec<D> {
    let db = degree(b).expect("pseudo-remainder by zero");
    let mut r = trim(a.to_vec());
    let Some(da) = degree(&r) else {
        return r;
    };
    if da < db {
        return r;
    }
    let lb = &b[db];
    let mut steps = da - db + 1;
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let lr = r[dr].clone();
        let shift = dr - db;
        let mut next = scale(&r, lb);
        for (k, bk) in b.iter().enumerate().take(db + 1) {
            next[k + shift] = next[k + shift].sub(&lr.mul(bk));
        }
        r = trim(next);
        steps -= 1;
    }
    if steps > 0 {
        let f = lb.pow(steps);
        r = scale(&r, &f);
    }
    r
}

/// Last non-zero element of the subresultant remainder sequence of `a` and
/// `b`; over a GCD domain its primitive part is the primitive gcd.
pub fn subresultant_last<D: Domain>(a: &[D], b: &[D]) -> Vec<D> {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    if degree(&a) < degree(&b) {
        std::mem::swap(&mut a, &mut b);
    }
    if degree(&b).is_none() {
        return a;
    }
    let mut g = D::one();
    let mut h = D::one();
    loop {
        let delta = degree(&a).unwrap() - degree(&b).unwrap();
        let r = pseudo_remainder(&a, &b);
        match degree(&r) {
            None => return b,
            Some(0) => return r,
            Some(_) => {}
        }
        let divisor = g.mul(&h.pow(delta));
        a = b;
        b = r.iter().map(|c| c.exact_div(&divisor)).collect();
        g = a[degree(&a).unwrap()].clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            d => g.pow(d).exact_div(&h.pow(d - 1)),
        };
    }
}

/// Fraction-free Gaussian elimination (Bareiss) with row pivoting.
pub fn bareiss_det<D: Domain>(mut m: Vec<Vec<D>>) -> D {
    let n = m.len();
    if n == 0 {
        return D::one();
    }
    let mut negate = false;
    let mut prev = D::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return D::zero();
            };
            m.swap(k, p);
            negate = !negate;
        }
        if k + 1 == n {
            break;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = v.exact_div(&prev);
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        d.neg()
    } else {
        d
    }
}

/// Rows of `p` shifted `rows` times, over `width` columns ordered from the
/// highest power down. `p` has formal degree `p.len() - 1`.
fn shifted_rows<D: Domain>(p: &[D], rows: usize, width: usize) -> Vec<Vec<D>> {
    let m = p.len() - 1;
    (0..rows)
        .map(|i| {
            let mut row = vec![D::zero(); width];
            for (k, c) in p.iter().rev().enumerate() {
                if i + k < width {
                    row[i + k] = c.clone();
                }
            }
            debug_assert!(i + m < width);
            row
        })
        .collect()
}

/// Sylvester matrix of `p` (formal degree `m`) and `q` (formal degree `n`),
/// `p` rows first.
pub fn sylvester_matrix<D: Domain>(p: &[D], q: &[D]) -> Vec<Vec<D>> {
    let (m, n) = (p.len() - 1, q.len() - 1);
    let mut rows = shifted_rows(p, n, m + n);
    rows.extend(shifted_rows(q, m, m + n));
    rows
}

/// Resultant as the Sylvester determinant with formal degrees taken from the
/// slice lengths.
pub fn sylvester_resultant<D: Domain>(p: &[D], q: &[D]) -> D {
    bareiss_det(sylvester_matrix(p, q))
}

/// Coefficients `(s_0, .., s_j)` of the `j`-th subresultant of `p` and `q`
/// (formal degrees from the slice lengths), computed from determinants of
/// the reduced Sylvester matrix. Requires `j < min(deg p, deg q)`.
pub fn subresultant_coeffs<D: Domain>(p: &[D], q: &[D], j: usize) -> Vec<D> {
    let (m, n) = (p.len() - 1, q.len() - 1);
    assert!(j < m.min(n), "subresultant index out of range");
    let width = m + n - j;
    let mut rows = shifted_rows(p, n - j, width);
    rows.extend(shifted_rows(q, m - j, width));
    let lead_cols = m + n - 2 * j - 1;
    (0..=j)
        .map(|i| {
            let col = width - 1 - i;
            let mat = rows
                .iter()
                .map(|r| {
                    let mut sel: Vec<D> = r[..lead_cols].to_vec();
                    sel.push(r[col].clone());
                    sel
                })
                .collect();
            bareiss_det(mat)
        })
        .collect()
}
