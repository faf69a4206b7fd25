mod common;

use common::arb_gaussian;
use levelcurves::arith::{gr_arith, to_ball, GaussianRational, GrOp};
use proptest::prelude::*;

proptest! {
    #[test]
    fn field_axioms(a in arb_gaussian(), b in arb_gaussian(), c in arb_gaussian()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, GaussianRational::zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn division_inverts_multiplication(a in arb_gaussian(), b in arb_gaussian()) {
        if b.is_zero() {
            prop_assert!(gr_arith(&a, &b, GrOp::Div).is_err());
        } else {
            let q = gr_arith(&a, &b, GrOp::Div).unwrap();
            prop_assert_eq!(&q * &b, a);
        }
    }

    #[test]
    fn norm_is_multiplicative(a in arb_gaussian(), b in arb_gaussian()) {
        prop_assert_eq!((&a * &b).norm(), a.norm() * b.norm());
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!((&a * &a.conj()).re().clone(), a.norm());
    }

    #[test]
    fn balls_contain_their_value(a in arb_gaussian(), b in arb_gaussian(), prec in 24u32..200) {
        let x = to_ball(&a, prec);
        let y = to_ball(&b, prec);
        prop_assert!(x.contains_gaussian(&a));
        prop_assert!(x.mul(&y).contains_gaussian(&(&a * &b)));
        prop_assert!(x.add(&y).contains_gaussian(&(&a + &b)));
        if !b.is_zero() {
            prop_assert!(x.div(&y).unwrap().contains_gaussian(&a.checked_div(&b).unwrap()));
        }
        let finer = to_ball(&a, prec + 64);
        prop_assert!(finer.radius_f64() <= x.radius_f64());
    }
}

#[test]
fn gaussian_units() {
    let i = GaussianRational::i();
    assert_eq!(i.pow(4).unwrap(), GaussianRational::one());
    assert!(GaussianRational::from_parts(3, 4, 5).is_unimodular());
    assert!(GaussianRational::zero().pow(-1).is_err());
}
