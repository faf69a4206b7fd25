//! Exact dense polynomials over Q(i) in one and two variables, gcds,
//! resultants, square-free structure and certified root isolation.

mod bi;
mod domain;
mod fiber;
pub(crate) mod roots;
mod uni;

pub use bi::BiPoly;
pub use domain::{
    bareiss_det, pseudo_remainder, subresultant_coeffs, subresultant_last, sylvester_matrix,
    sylvester_resultant, Domain,
};
pub use roots::{certified_roots, certified_roots_with_cap, RootBall, DEFAULT_PRECISION_CAP};
pub use fiber::FiberMap;
pub use uni::{PolyDisplay, UniPoly};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("polynomial has degree zero in the eliminated variable")]
    DegreeZero,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial division by zero")]
    DivisionByZero,
    #[error("root certification failed at the precision cap of {0} bits")]
    CertificationFailed(u32),
}

/// Coefficient-wise complex conjugation.
pub trait Conjugate {
    fn conj_poly(&self) -> Self;
}

impl Conjugate for UniPoly {
    fn conj_poly(&self) -> Self {
        self.conj()
    }
}

impl Conjugate for BiPoly {
    fn conj_poly(&self) -> Self {
        self.conj()
    }
}

pub fn conj_poly<P: Conjugate>(p: &P) -> P {
    p.conj_poly()
}

pub fn uni_gcd(p: &UniPoly, q: &UniPoly) -> Result<UniPoly, PolyError> {
    p.gcd(q)
}

pub fn squarefree_decomposition(p: &UniPoly) -> Result<Vec<(UniPoly, usize)>, PolyError> {
    p.squarefree_decomposition()
}

pub fn compose_uni(p: &UniPoly, q: &UniPoly) -> UniPoly {
    p.compose(q)
}

pub fn bi_gcd(p: &BiPoly, q: &BiPoly) -> Result<BiPoly, PolyError> {
    p.gcd(q)
}

/// Resultant eliminating the variable named `eliminate`.
pub fn bi_resultant(p: &BiPoly, q: &BiPoly, eliminate: char) -> Result<UniPoly, PolyError> {
    let idx = p
        .var_index(eliminate)
        .unwrap_or_else(|| panic!("variable {eliminate} not present"));
    p.resultant(q, idx)
}
