//! Exact and certified computation of the common unit-level set
//! `|P1(z)| = |P2(z)| = 1` of two rational functions over the Gaussian
//! rationals, together with the supporting algebra: circle-preserving maps,
//! plane-curve implicitization, Lüroth decomposition and gcd tables of
//! shifted powers.

pub mod arith;
pub mod arlab;
pub mod circle;
pub mod config;
pub mod curve;
pub mod expr;
pub mod level;
pub mod poly;
pub mod ratfun;
pub mod trace;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/arithmetic.md")]
    mod arithmetic {}
    #[doc = include_str!("../../../book/src/polynomials.md")]
    mod polynomials {}
    #[doc = include_str!("../../../book/src/circle.md")]
    mod circle {}
    #[doc = include_str!("../../../book/src/solving.md")]
    mod solving {}
    #[doc = include_str!("../../../book/src/degenerate.md")]
    mod degenerate {}
    #[doc = include_str!("../../../book/src/curves.md")]
    mod curves {}
    #[doc = include_str!("../../../book/src/argcd.md")]
    mod argcd {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
