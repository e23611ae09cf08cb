//! Values taken from the source tables and values frozen from independent
//! computations (matrix brackets, convolution counts, kernel ranks).

use so41_core::invariants::{invariant_dimension, predicted_dimension, Method};
use so41_core::scalar::{q, qf};
use so41_core::sym_ext::build_st_catalog;
use so41_core::tensor::{
    build_catalog, generator_theorem_check, verify_relations, DkReading, Reproduction, TensorAlgebra,
};
use so41_core::BasisIndex::{self, *};
use so41_core::{Convention, LieElement, StructureConstants};

fn lie(terms: &[(BasisIndex, i64)]) -> LieElement {
    let mut x = LieElement::zero();
    for (b, c) in terms {
        x.add_term(*b, q(*c));
    }
    x
}

#[test]
fn printed_table_entries() {
    let sc = StructureConstants::global();
    let cases: &[(BasisIndex, BasisIndex, &[(BasisIndex, i64)])] = &[
        (H1, E1, &[(E1, 1)]),
        (H2, E2, &[(E2, -1)]),
        (E1, F1, &[(H1, 1), (H2, 1)]),
        (E2, F2, &[(H1, 1), (H2, -1)]),
        (E1, F3, &[(E4, -1)]),
        (F1, E3, &[(F4, 1)]),
        (E3, E4, &[(E1, 2)]),
        (E3, F3, &[(H1, 2)]),
        (E4, F3, &[(F2, 2)]),
        (F3, F4, &[(F1, -2)]),
        (E1, E2, &[]),
    ];
    for (x, y, expected) in cases {
        assert_eq!(sc.bracket_basis(*x, *y), &lie(expected), "[{x},{y}]");
        assert_eq!(sc.bracket_basis(*y, *x), &lie(expected).scale(&q(-1)), "[{y},{x}]");
    }
}

#[test]
fn matrix_oracle_reproduces_table() {
    let from_matrices = so41_core::matrix_oracle::extract_structure_constants().unwrap();
    assert_eq!(&from_matrices, StructureConstants::global());
}

#[test]
fn trace_form_gram_on_p() {
    let g = so41_core::matrix_oracle::p_gram();
    assert_eq!(g[0][2], q(4));
    assert_eq!(g[1][3], q(4));
    assert_eq!(g[0][0], q(0));
    assert_eq!(g[0][1], q(0));
}

#[test]
fn invariant_counts_in_low_degree() {
    // Degree 0 and 1 counts appear in the source table; the rest come from the convolution.
    assert_eq!(predicted_dimension(0), 1);
    assert_eq!(predicted_dimension(1), 0);
    assert_eq!(predicted_dimension(3), 4);
    assert_eq!(predicted_dimension(5), 16);
    for n in 0..=5 {
        let r = invariant_dimension(n, Method::Exact, false).unwrap();
        assert_eq!(r.invariant_dim as u64, predicted_dimension(n));
    }
}

#[test]
fn weight_zero_dimensions_are_frozen() {
    let dims: Vec<usize> = (0..=5)
        .map(|n| invariant_dimension(n, Method::Exact, false).unwrap().weight_zero_dim)
        .collect();
    // Counted independently by enumerating monomials and their weights.
    assert_eq!(dims, vec![1, 2, 13, 40, 118, 292]);
}

#[test]
fn catalog_degrees() {
    let st = build_st_catalog().unwrap();
    assert_eq!(st.a1.grade(), Some(2));
    assert_eq!(st.c.grade(), Some(4));
    let degs: Vec<usize> = st.t.iter().map(|(_, x)| x.grade().unwrap()).collect();
    assert_eq!(degs, vec![0, 2, 3, 3, 3, 3, 4, 4, 4, 5, 5, 5, 5, 6, 6, 6]);
}

#[test]
fn dk_reading_is_the_corrected_one_under_every_convention() {
    for conv in [
        Convention::literal(1),
        Convention::literal(-1),
        Convention::dual_normalized(1),
        Convention::dual_normalized(-1),
    ] {
        let alg = TensorAlgebra::new(conv);
        assert!(!alg.is_invariant(&alg.k_dirac(DkReading::AsPrinted).unwrap()));
        assert!(alg.is_invariant(&alg.k_dirac(DkReading::Corrected).unwrap()));
    }
}

#[test]
fn residual_counts_are_frozen() {
    let expected: &[(Convention, [usize; 8])] = &[
        (Convention::literal(1), [8, 10, 10, 8, 16, 16, 44, 30]),
        (Convention::literal(-1), [8, 10, 10, 8, 16, 16, 44, 30]),
        (Convention::dual_normalized(1), [8, 8, 6, 8, 16, 16, 44, 30]),
        (Convention::dual_normalized(-1), [0, 0, 0, 0, 0, 0, 16, 8]),
    ];
    for (conv, counts) in expected {
        let alg = TensorAlgebra::new(conv.clone());
        let cat = build_catalog(&alg).unwrap();
        let got: Vec<usize> = verify_relations(&alg, &cat).iter().map(|r| r.residual.len()).collect();
        assert_eq!(&got, counts, "{}", conv.label());
    }
}

#[test]
fn corrections_for_h_and_c_are_frozen() {
    let alg = TensorAlgebra::new(Convention::dual_normalized(-1));
    let cat = build_catalog(&alg).unwrap();
    let report = generator_theorem_check(&alg, &cat);
    let get = |n: &str| &report.entries.iter().find(|(m, _)| *m == n).unwrap().1;
    match get("h") {
        Reproduction::Corrected(c) => {
            assert_eq!(c, &vec![("D", qf(9, 16)), ("f", qf(-9, 16)), ("g", qf(9, 16))])
        }
        other => panic!("{other:?}"),
    }
    match get("c") {
        Reproduction::Corrected(c) => assert_eq!(c, &vec![("a1", q(1)), ("a2", q(1)), ("b", qf(-3, 2))]),
        other => panic!("{other:?}"),
    }
}

#[test]
fn first_relation_rearranged() {
    // D² + 2ρ(b) − 2D_k = 0 under the working convention.
    let alg = TensorAlgebra::new(Convention::dual_normalized(-1));
    let cat = build_catalog(&alg).unwrap();
    let lhs = &(&alg.multiply(&cat.d, &cat.d) + &cat.rho_b.scale(&q(2))) - &cat.d_k.scale(&q(2));
    assert!(lhs.is_zero());
}
