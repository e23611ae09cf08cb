use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use so41_bench::reversed_word;
use so41_core::invariants::{invariant_dimension, Method};
use so41_core::scalar::q;
use so41_core::sym_ext::build_st_catalog;
use so41_core::tensor::{build_catalog_from, verify_relations, TensorAlgebra};
use so41_core::{BasisIndex, CElement, CliffordMonomial, Convention, PForm, UElement};

fn straighten(c: &mut Criterion) {
    for k in [1u8, 2] {
        let word = reversed_word(k);
        c.bench_function(&format!("pbw reversed word k={k}"), |b| {
            b.iter(|| word.iter().fold(UElement::one(), |acc, g| acc.mul(black_box(g))))
        });
    }
}

fn clifford(c: &mut Criterion) {
    let form = PForm::new(Convention::dual_normalized(-1));
    let all: Vec<CElement> = CliffordMonomial::all()
        .map(|m| CElement::term(m, q(1)))
        .collect();
    c.bench_function("clifford all 256 monomial products", |b| {
        b.iter(|| {
            for x in &all {
                for y in &all {
                    black_box(x.mul(&form, y));
                }
            }
        })
    });
    let gens: Vec<CElement> = BasisIndex::P.iter().filter_map(|&g| CElement::generator(g)).collect();
    c.bench_function("clifford product of p generators", |b| {
        b.iter(|| gens.iter().fold(CElement::one(), |acc, g| acc.mul(&form, black_box(g))))
    });
}

fn relations(c: &mut Criterion) {
    let alg = TensorAlgebra::new(Convention::dual_normalized(-1));
    let st = build_st_catalog().unwrap();
    let cat = build_catalog_from(&alg, &st).unwrap();
    let mut g = c.benchmark_group("relations");
    g.sample_size(10);
    g.bench_function("build catalog", |b| b.iter(|| build_catalog_from(&alg, &st).unwrap()));
    g.bench_function("verify eight relations", |b| b.iter(|| verify_relations(&alg, &cat)));
    g.finish();
}

fn invariants(c: &mut Criterion) {
    let mut g = c.benchmark_group("invariants");
    g.sample_size(10);
    for n in [3usize, 4] {
        g.bench_function(format!("exact dimension n={n}"), |b| {
            b.iter(|| invariant_dimension(n, Method::Exact, false).unwrap())
        });
    }
    g.bench_function("multi-prime dimension n=4", |b| {
        b.iter(|| invariant_dimension(4, Method::ModP { seed: 7 }, false).unwrap())
    });
    g.finish();
}

criterion_group!(benches, straighten, clifford, relations, invariants);
criterion_main!(benches);
