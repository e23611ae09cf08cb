use proptest::prelude::*;

use so41_cli::element_file::{Element, ElementFile};
use so41_cli::{parse, Evaluator, Sort, Value};
use so41_core::scalar::qf;
use so41_core::{CliffordMonomial, Convention, ExtMonomial, PbwMonomial, SEElement, SMonomial, UCElement};

fn exponents() -> impl Strategy<Value = [u8; 10]> {
    prop::array::uniform10(prop_oneof![4 => Just(0u8), 2 => Just(1u8), 1 => Just(2u8), 1 => Just(3u8)])
}

fn coeff() -> impl Strategy<Value = so41_core::Q> {
    (-20i64..=20, 1i64..=6).prop_filter("nonzero", |(n, _)| *n != 0).prop_map(|(n, d)| qf(n, d))
}

fn uc() -> impl Strategy<Value = UCElement> {
    prop::collection::vec((exponents(), 0u8..16, coeff()), 0..6).prop_map(|terms| {
        terms.into_iter().fold(UCElement::zero(), |acc, (e, m, c)| {
            &acc + &UCElement::term((PbwMonomial(e), CliffordMonomial(m)), c)
        })
    })
}

fn se() -> impl Strategy<Value = SEElement> {
    prop::collection::vec((exponents(), 0u8..16, coeff()), 0..6).prop_map(|terms| {
        terms.into_iter().fold(SEElement::zero(), |acc, (e, m, c)| {
            &acc + &SEElement::term((SMonomial(e), ExtMonomial(m)), c)
        })
    })
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
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn uc_text_parses_back(x in uc(), conv in convention()) {
        let text = x.to_string();
        let v = Evaluator::new(conv).eval(&parse(&text).unwrap(), Sort::UC).unwrap();
        prop_assert_eq!(v.to_string(), text);
        prop_assert_eq!(v, Value::UC(x));
    }

    #[test]
    fn se_text_parses_back(x in se()) {
        let text = x.to_string();
        let v = Evaluator::new(Convention::default()).eval(&parse(&text).unwrap(), Sort::SE).unwrap();
        prop_assert_eq!(v.to_string(), text);
        prop_assert_eq!(v, Value::SE(x));
    }

    #[test]
    fn element_files_round_trip(x in uc(), y in se(), conv in convention(), pick in any::<bool>()) {
        let f = ElementFile {
            convention: conv,
            element: if pick { Element::UC(x) } else { Element::SE(y) },
        };
        let text = f.serialize();
        let back = ElementFile::parse(&text).unwrap();
        prop_assert_eq!(back.serialize(), text);
        prop_assert_eq!(back, f);
    }
}
