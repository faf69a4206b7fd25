mod common;

use common::{arb_gaussian, arb_nonzero_poly, arb_poly, gr};
use levelcurves::arith::ComplexBall;
use levelcurves::poly::{certified_roots, BiPoly, UniPoly};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn gcd_divides_both(p in arb_nonzero_poly(4), q in arb_nonzero_poly(4), r in arb_nonzero_poly(2)) {
        let a = &p * &r;
        let b = &q * &r;
        let g = a.gcd(&b).unwrap();
        prop_assert!(g.divides(&a));
        prop_assert!(g.divides(&b));
        prop_assert!(r.monic().divides(&g) || r.is_constant());
    }

    #[test]
    fn gcd_ignores_scaling(p in arb_nonzero_poly(4), q in arb_nonzero_poly(4), c in arb_gaussian()) {
        prop_assume!(!c.is_zero());
        prop_assert_eq!(p.gcd(&q).unwrap(), p.scale(&c).gcd(&q).unwrap());
    }

    #[test]
    fn resultant_specializes(
        rows_p in prop::collection::vec(arb_poly(2), 1..4),
        rows_q in prop::collection::vec(arb_poly(2), 1..4),
        x in -3i64..=3,
    ) {
        let p = BiPoly::new(['x', 'y'], rows_p);
        let q = BiPoly::new(['x', 'y'], rows_q);
        let (dp, dq) = (p.degree_in(1), q.degree_in(1));
        prop_assume!(matches!(dp, Some(d) if d > 0) && matches!(dq, Some(d) if d > 0));
        let r = p.resultant(&q, 1).unwrap();
        let a = gr(x, 0, 1);
        let ps = p.eval_var(0, &a);
        let qs = q.eval_var(0, &a);
        prop_assume!(ps.degree() == dp && qs.degree() == dq);
        let direct = levelcurves::poly::sylvester_resultant(ps.coeffs(), qs.coeffs());
        prop_assert_eq!(r.eval(&a), direct);
    }

    #[test]
    fn conjugation_is_an_involution(p in arb_poly(5), q in arb_poly(5)) {
        prop_assert_eq!(p.conj().conj(), p.clone());
        prop_assert_eq!((&p * &q).conj(), &p.conj() * &q.conj());
    }

    #[test]
    fn roots_enclose_the_polynomial(p in arb_nonzero_poly(5)) {
        prop_assume!(!p.is_constant());
        let roots = certified_roots(&p, 64).unwrap();
        let total: usize = roots.iter().map(|r| r.multiplicity).sum();
        prop_assert_eq!(total, p.deg0());
        for r in &roots {
            prop_assert!(r.certified);
            prop_assert!(p.eval_ball(&r.location).contains_zero());
        }
        // p(z) = lc * prod (z - r_j)^{m_j} at a test point
        let z = ComplexBall::from_gaussian(&gr(7, 3, 5), 128);
        let mut prod = ComplexBall::from_gaussian(&p.leading_coeff(), 128);
        for r in &roots {
            prod = prod.mul(&z.sub(&r.location).pow(r.multiplicity as u32));
        }
        prop_assert!(prod.contains_gaussian(&p.eval(&gr(7, 3, 5))));
    }

    #[test]
    fn squarefree_decomposition_multiplies_back(a in arb_nonzero_poly(2), b in arb_nonzero_poly(2)) {
        let p = &a.pow(2) * &b;
        prop_assume!(!p.is_constant());
        let parts = p.squarefree_decomposition().unwrap();
        let mut prod = UniPoly::one();
        for (f, m) in &parts {
            prod = &prod * &f.pow(*m);
        }
        prop_assert_eq!(prod.monic(), p.monic());
    }
}

#[test]
fn bivariate_gcd_finds_common_factor() {
    let f = levelcurves::expr::parse_bipoly("(x*y-1)*(x+y)", ['x', 'y']).unwrap();
    let g = levelcurves::expr::parse_bipoly("(x*y-1)*(x-2*y+1)", ['x', 'y']).unwrap();
    let h = levelcurves::expr::parse_bipoly("x*y-1", ['x', 'y']).unwrap();
    assert!(f.gcd(&g).unwrap().is_associate(&h));
}
