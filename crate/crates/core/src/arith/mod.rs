//! Exact Gaussian-rational arithmetic and arbitrary-precision complex balls.

mod ball;
mod dyadic;
mod gaussian;

pub use ball::ComplexBall;
pub use dyadic::Dyadic;
pub use gaussian::{rational_sqrt, GaussInt, GaussianRational};
pub use num_rational::BigRational;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
}

/// Binary operations of [`gr_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GrOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn gr_arith(
    a: &GaussianRational,
    b: &GaussianRational,
    op: GrOp,
) -> Result<GaussianRational, ArithError> {
    match op {
        GrOp::Add => Ok(a + b),
        GrOp::Sub => Ok(a - b),
        GrOp::Mul => Ok(a * b),
        GrOp::Div => a.checked_div(b),
    }
}

pub fn gr_conj(a: &GaussianRational) -> GaussianRational {
    a.conj()
}

pub fn gr_norm(a: &GaussianRational) -> BigRational {
    a.norm()
}

pub fn to_ball(a: &GaussianRational, precision_bits: u32) -> ComplexBall {
    ComplexBall::from_gaussian(a, precision_bits)
}
