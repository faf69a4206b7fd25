//! Common roots of `P1^k - 1` and `P2^k - 1`: gcd tables over `k`, their
//! stabilized square-free lcm, and multiplicative independence.

use std::collections::BTreeMap;

use num_integer::Integer;
use thiserror::Error;

use crate::arith::{ComplexBall, Dyadic, GaussianRational};
use crate::config::Config;
use crate::level::{solve_unimodular_pair, LevelError, SolutionStatus};
use crate::poly::{certified_roots_with_cap, PolyError, UniPoly};
use crate::ratfun::RatFun;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArError {
    #[error("inputs must be non-constant polynomials")]
    ConstantInput,
    #[error("inputs must be non-zero")]
    ZeroInput,
    #[error("inputs are multiplicatively dependent: P1^{m1} P2^{m2} = 1")]
    DependentInputs { m1: i64, m2: i64 },
    #[error("the running lcm still changed at the horizon k = {0}")]
    HorizonTooSmall(usize),
    #[error(transparent)]
    Level(#[from] LevelError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Monic `gcd(P1^k - 1, P2^k - 1)`.
pub fn gcd_power_shift(p1: &UniPoly, p2: &UniPoly, k: usize) -> Result<UniPoly, ArError> {
    if p1.is_constant() || p2.is_constant() || k == 0 {
        return Err(ArError::ConstantInput);
    }
    let one = UniPoly::one();
    let a = &p1.pow(k) - &one;
    let b = &p2.pow(k) - &one;
    Ok(a.gcd(&b)?)
}

#[derive(Clone, Debug, PartialEq)]
pub struct ArReport {
    /// `(k, gcd_k)` for `k = 1..=K`.
    pub table: Vec<(usize, UniPoly)>,
    /// Square-free lcm of all `gcd_k`.
    pub stabilized_f: UniPoly,
    /// Last `k` at which the running lcm grew, `0` if it never did.
    pub stabilized_at: Option<usize>,
    /// Whether every root of `stabilized_f` is a certified solution of
    /// `|P1| = |P2| = 1`.
    pub consistency: bool,
}

fn lcm_squarefree(acc: &UniPoly, g: &UniPoly) -> Result<UniPoly, PolyError> {
    let g = g.squarefree_part();
    let common = acc.gcd(&g)?;
    Ok((acc * &g.div_exact(&common).expect("gcd divides")).monic())
}

/// gcd table for `k = 1..=K` and its stabilized square-free lcm.
pub fn ar_accumulate(
    p1: &UniPoly,
    p2: &UniPoly,
    horizon: usize,
    config: &Config,
) -> Result<ArReport, ArError> {
    if p1.is_constant() || p2.is_constant() || horizon == 0 {
        return Err(ArError::ConstantInput);
    }
    if let DependenceCertificate::Dependent { m1, m2 } = mult_independence(p1, p2)? {
        return Err(ArError::DependentInputs { m1, m2 });
    }
    let mut table = Vec::with_capacity(horizon);
    let mut acc = UniPoly::one();
    let mut last_change = 0;
    for k in 1..=horizon {
        let g = gcd_power_shift(p1, p2, k)?;
        let next = lcm_squarefree(&acc, &g)?;
        if next != acc {
            last_change = k;
            acc = next;
        }
        table.push((k, g));
    }
    if last_change == horizon {
        return Err(ArError::HorizonTooSmall(horizon));
    }
    let consistency = roots_are_solutions(p1, p2, &acc, config)?;
    Ok(ArReport {
        table,
        stabilized_f: acc,
        stabilized_at: Some(last_change),
        consistency,
    })
}

/// Each root ball of `f` meets exactly one solution ball of the level
/// solver, or, for a degenerate pair, lies where `|P1| = |P2| = 1` is
/// possible.
fn roots_are_solutions(
    p1: &UniPoly,
    p2: &UniPoly,
    f: &UniPoly,
    config: &Config,
) -> Result<bool, ArError> {
    if f.is_constant() {
        return Ok(true);
    }
    let (r1, r2) = (RatFun::from_poly(p1.clone()), RatFun::from_poly(p2.clone()));
    let report = solve_unimodular_pair(&r1, &r2, config)?;
    let roots = certified_roots_with_cap(f, report.precision_bits, config.max_precision_bits)?;
    let one = Dyadic::one();
    let unimodular = |b: &ComplexBall| b.abs_lower() <= one && b.abs_upper() >= one;
    Ok(roots.iter().all(|r| match report.status {
        SolutionStatus::Finite => {
            report
                .points
                .iter()
                .filter(|p| p.z.overlaps(&r.location))
                .count()
                == 1
        }
        SolutionStatus::Degenerate => {
            unimodular(&p1.eval_ball(&r.location)) && unimodular(&p2.eval_ball(&r.location))
        }
    }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DependenceCertificate {
    Independent,
    /// `P1^m1 * P2^m2 = 1` exactly, with `(m1, m2)` primitive for the lattice
    /// of relations and `m1 > 0`, or `m1 = 0 < m2`.
    Dependent { m1: i64, m2: i64 },
    /// Both inputs are constants with no relation of exponent at most 64.
    Inconclusive,
}

/// Pairwise coprime monic polynomials whose products give every input up to
/// a constant.
pub fn coprime_basis(inputs: &[UniPoly]) -> Result<Vec<UniPoly>, PolyError> {
    let mut basis: Vec<UniPoly> = inputs
        .iter()
        .filter(|p| !p.is_constant())
        .map(UniPoly::monic)
        .collect();
    'split: loop {
        for i in 0..basis.len() {
            for j in i + 1..basis.len() {
                let g = basis[i].gcd(&basis[j])?;
                if g.is_constant() {
                    continue;
                }
                let a = basis[i].div_exact(&g).unwrap();
                let b = basis[j].div_exact(&g).unwrap();
                basis.remove(j);
                basis.remove(i);
                basis.extend([g, a, b].into_iter().filter(|p| !p.is_constant()));
                continue 'split;
            }
        }
        break;
    }
    basis.sort_by_key(|p| p.deg0());
    Ok(basis)
}

/// Exponents of `p` over a coprime basis and the remaining constant.
pub fn basis_exponents(p: &UniPoly, basis: &[UniPoly]) -> (Vec<i64>, GaussianRational) {
    let mut rest = p.clone();
    let exps = basis
        .iter()
        .map(|b| {
            let mut e = 0;
            while let Some(q) = rest.div_exact(b) {
                rest = q;
                e += 1;
            }
            e
        })
        .collect();
    (exps, rest.leading_coeff())
}

/// Smallest `t > 0` with `u^t = 1`, if `u` is a root of unity.
fn root_of_unity_order(u: &GaussianRational) -> Option<i64> {
    (1..=4).find(|&t| u.pow(t).map_or(false, |v| v.is_one()))
}

fn normalize_sign(m1: i64, m2: i64) -> (i64, i64) {
    if m1 < 0 || (m1 == 0 && m2 < 0) {
        (-m1, -m2)
    } else {
        (m1, m2)
    }
}

/// Decides whether `P1^m1 P2^m2 = 1` for some `(m1, m2) != (0, 0)`.
pub fn mult_independence(p1: &UniPoly, p2: &UniPoly) -> Result<DependenceCertificate, ArError> {
    if p1.is_zero() || p2.is_zero() {
        return Err(ArError::ZeroInput);
    }
    let basis = coprime_basis(&[p1.clone(), p2.clone()])?;
    let (e1, c1) = basis_exponents(p1, &basis);
    let (e2, c2) = basis_exponents(p2, &basis);
    let zero1 = e1.iter().all(|&e| e == 0);
    let zero2 = e2.iter().all(|&e| e == 0);
    let direction = match (zero1, zero2) {
        (true, true) => return Ok(constant_relation(&c1, &c2)),
        (true, false) => (1, 0),
        (false, true) => (0, 1),
        (false, false) => {
            let k1 = e1.iter().copied().find(|&e| e != 0).unwrap();
            let idx = e1.iter().position(|&e| e != 0).unwrap();
            let k2 = e2[idx];
            // proportional exponent vectors e2 = (k2 / k1) e1
            if e1.iter().zip(&e2).any(|(&a, &b)| a * k2 != b * k1) {
                return Ok(DependenceCertificate::Independent);
            }
            let g = k1.gcd(&k2);
            (k2 / g, -k1 / g)
        }
    };
    let u = c1.pow(direction.0).unwrap().checked_div(&c2.pow(-direction.1).unwrap()).unwrap();
    Ok(match root_of_unity_order(&u) {
        Some(t) => {
            let (m1, m2) = normalize_sign(t * direction.0, t * direction.1);
            DependenceCertificate::Dependent { m1, m2 }
        }
        None => DependenceCertificate::Independent,
    })
}

fn constant_relation(c1: &GaussianRational, c2: &GaussianRational) -> DependenceCertificate {
    for bound in 1..=64i64 {
        for m1 in -bound..=bound {
            for m2 in -bound..=bound {
                if m1.abs().max(m2.abs()) != bound {
                    continue;
                }
                let (m1, m2) = normalize_sign(m1, m2);
                let (Ok(a), Ok(b)) = (c1.pow(m1), c2.pow(m2)) else {
                    continue;
                };
                if (&a * &b).is_one() {
                    return DependenceCertificate::Dependent { m1, m2 };
                }
            }
        }
    }
    DependenceCertificate::Inconclusive
}

/// Total degree of the square-free factors at each multiplicity.
pub fn multiplicity_profile(p: &UniPoly) -> Result<BTreeMap<usize, usize>, PolyError> {
    let mut out = BTreeMap::new();
    for (f, m) in p.squarefree_decomposition()? {
        *out.entry(m).or_insert(0) += f.deg0();
    }
    Ok(out)
}
