use proptest::prelude::*;

use so41_core::clifford::{cl_multiply, k_action_c};
use so41_core::scalar::q;
use so41_core::sym_ext::{ad_action_se, se_multiply};
use so41_core::tensor::TensorAlgebra;
use so41_core::uea::{ad_action_u, u_multiply};
use so41_core::{
    BasisIndex, CElement, CliffordMonomial, Convention, ExtMonomial, LieElement, PForm, PbwMonomial, SEElement,
    SMonomial, UCElement, UElement,
};

fn pbw() -> impl Strategy<Value = PbwMonomial> {
    prop::collection::vec(0usize..10, 0..=3).prop_map(|gens| {
        gens.into_iter()
            .fold(PbwMonomial::one(), |m, i| m.with_added(BasisIndex::from_index(i), 1))
    })
}

fn u_element() -> impl Strategy<Value = UElement> {
    prop::collection::vec((pbw(), -3i64..=3), 1..=3).prop_map(|terms| {
        terms
            .into_iter()
            .fold(UElement::zero(), |acc, (m, c)| &acc + &UElement::term(m, q(c)))
    })
}

fn c_element() -> impl Strategy<Value = CElement> {
    prop::collection::vec((0u8..16, -3i64..=3), 1..=3).prop_map(|terms| {
        terms
            .into_iter()
            .fold(CElement::zero(), |acc, (m, c)| &acc + &CElement::term(CliffordMonomial(m), q(c)))
    })
}

fn se_element() -> impl Strategy<Value = SEElement> {
    prop::collection::vec((prop::collection::vec(0usize..10, 0..=3), 0u8..16, -3i64..=3), 1..=3).prop_map(|terms| {
        terms.into_iter().fold(SEElement::zero(), |acc, (gens, e, c)| {
            let s = gens
                .into_iter()
                .fold(SMonomial::one(), |m, i| m.with_added(BasisIndex::from_index(i), 1));
            &acc + &SEElement::term((s, ExtMonomial(e)), q(c))
        })
    })
}

fn k_generator() -> impl Strategy<Value = LieElement> {
    (0usize..6).prop_map(|i| LieElement::basis(BasisIndex::K[i]))
}

fn convention() -> impl Strategy<Value = Convention> {
    prop_oneof![
        Just(Convention::literal(1)),
        Just(Convention::literal(-1)),
        Just(Convention::dual_normalized(1)),
        Just(Convention::dual_normalized(-1)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn uea_product_is_associative(x in u_element(), y in u_element(), z in u_element()) {
        prop_assert_eq!(u_multiply(&u_multiply(&x, &y), &z), u_multiply(&x, &u_multiply(&y, &z)));
    }

    #[test]
    fn ad_on_u_is_a_derivation(z in k_generator(), x in u_element(), y in u_element()) {
        let lhs = ad_action_u(&z, &u_multiply(&x, &y));
        let rhs = &u_multiply(&ad_action_u(&z, &x), &y) + &u_multiply(&x, &ad_action_u(&z, &y));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn pbw_degree_is_additive_on_leading_terms(x in u_element(), y in u_element()) {
        let p = u_multiply(&x, &y);
        if let (Some(a), Some(b), Some(d)) = (x.degree(), y.degree(), p.degree()) {
            prop_assert_eq!(d, a + b);
        }
    }

    #[test]
    fn clifford_action_is_a_derivation(conv in convention(), z in k_generator(), x in c_element(), y in c_element()) {
        let form = PForm::new(conv);
        let lhs = k_action_c(&form, &z, &cl_multiply(&form, &x, &y)).unwrap();
        let rhs = &cl_multiply(&form, &k_action_c(&form, &z, &x).unwrap(), &y)
            + &cl_multiply(&form, &x, &k_action_c(&form, &z, &y).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn clifford_squares_are_scalars(conv in convention(), a in -3i64..=3, b in -3i64..=3, c in -3i64..=3, d in -3i64..=3) {
        let form = PForm::new(conv);
        let mut v = CElement::zero();
        for (coef, gen) in [(a, BasisIndex::E3), (b, BasisIndex::E4), (c, BasisIndex::F3), (d, BasisIndex::F4)] {
            v = &v + &CElement::generator(gen).unwrap().scale(&q(coef));
        }
        let sq = cl_multiply(&form, &v, &v);
        prop_assert!(sq.iter().all(|(m, _)| m.degree() == 0));
    }

    #[test]
    fn se_action_is_a_derivation(z in k_generator(), x in se_element(), y in se_element()) {
        let lhs = ad_action_se(&z, &se_multiply(&x, &y)).unwrap();
        let rhs = &se_multiply(&ad_action_se(&z, &x).unwrap(), &y) + &se_multiply(&x, &ad_action_se(&z, &y).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn rho_is_equivariant(conv in convention(), z in k_generator(), x in se_element()) {
        let alg = TensorAlgebra::new(conv);
        let lhs = alg.rho(&ad_action_se(&z, &x).unwrap());
        let rhs = alg.ad(&z, &alg.rho(&x)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn uc_product_is_associative(conv in convention(), a in u_element(), b in c_element(), c in u_element(), d in c_element()) {
        let alg = TensorAlgebra::new(conv);
        let x = UCElement::tensor(&a, &b);
        let y = UCElement::tensor(&c, &d);
        let z = alg.dirac();
        prop_assert_eq!(alg.multiply(&alg.multiply(&x, &y), &z), alg.multiply(&x, &alg.multiply(&y, &z)));
    }
}
