//! Dimensions of `(S(g) ⊗ Λ(p))^K` degree by degree, the predicted counts,
//! and linear independence of the `S · T` products.
//!
//! `H1` and `H2` act diagonally on the monomial basis, so an invariant lies in
//! the weight-zero subspace. The common kernel of the six operators is then
//! the kernel of `E1, E2, F1, F2` restricted to that subspace.

use std::collections::{BTreeMap, HashMap};

use num_integer::binomial;

use crate::basis::BasisIndex::{self, *};
use crate::clifford::ExtMonomial;
use crate::error::{Error, Result};
use crate::lie::LieElement;
use crate::linalg::{kernel_dimension, random_primes, Echelon, RankMethod, SparseMatrixQ};
use crate::scalar::{q, Q};
use crate::sym_ext::{ad_action_se, build_st_catalog, s_monomials, SEElement, SEKey, STCatalog};

/// Highest degree computed without an explicit override.
pub const DEGREE_LIMIT: usize = 7;

/// Graded pieces larger than this switch to modular rank under [`Method::Auto`].
pub const MODP_THRESHOLD: usize = 20_000;

/// Number of primes used for modular rank.
pub const PRIME_COUNT: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Auto,
    Exact,
    ModP { seed: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MethodUsed {
    ExactQ,
    MultiPrime,
}

impl std::fmt::Display for MethodUsed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            MethodUsed::ExactQ => "exact-Q",
            MethodUsed::MultiPrime => "multi-prime",
        })
    }
}

/// Harmonic-invariant count `t(d)`.
pub fn harmonic_count(d: usize) -> u64 {
    match d {
        0 => 1,
        1 => 0,
        2 => 1,
        _ => 4,
    }
}

/// `h(n) = Σ_m C(m+2, 2) · t(n − 2m)`.
pub fn predicted_dimension(n: usize) -> u64 {
    (0..=n / 2)
        .map(|m| binomial(m as u64 + 2, 2) * harmonic_count(n - 2 * m))
        .sum()
}

/// `dim S^a(g) · dim Λ^b(p)` summed over `a + b = n`.
pub fn piece_dimension(n: usize) -> usize {
    (0..=n.min(4))
        .map(|j| binomial(n - j + 9, 9) as usize * binomial(4usize, j))
        .sum()
}

/// Weight-zero monomials of the degree-`n` piece, in a frozen order
/// (exterior degree, then monomial order on each factor).
pub fn weight_zero_basis(n: usize) -> Vec<SEKey> {
    let mut out = Vec::new();
    for j in 0..=n.min(4) {
        let exts: Vec<ExtMonomial> = ExtMonomial::all().filter(|m| m.degree() == j).collect();
        for s in s_monomials(&BasisIndex::ALL, n - j) {
            let (a, b) = s.weight();
            for e in &exts {
                let (c, d) = e.weight();
                if a + c == 0 && b + d == 0 {
                    out.push((s, *e));
                }
            }
        }
    }
    out
}

/// Matrices of `ad(E1), ad(E2), ad(F1), ad(F2)` on the weight-zero basis.
pub fn raising_lowering_operators(basis: &[SEKey]) -> Result<Vec<SparseMatrixQ>> {
    [E1, E2, F1, F2]
        .iter()
        .map(|&z| {
            let zl = LieElement::basis(z);
            let mut rows: HashMap<SEKey, usize> = HashMap::new();
            let mut columns = Vec::with_capacity(basis.len());
            for key in basis {
                let image = ad_action_se(&zl, &SEElement::term(*key, q(1)))?;
                let col: Vec<(usize, Q)> = image
                    .iter()
                    .map(|(k, c)| {
                        let n = rows.len();
                        (*rows.entry(*k).or_insert(n), c.clone())
                    })
                    .collect();
                columns.push(col);
            }
            Ok(SparseMatrixQ::from_columns(rows.len(), &columns))
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeReport {
    pub degree: usize,
    pub piece_dim: usize,
    pub weight_zero_dim: usize,
    pub invariant_dim: usize,
    pub predicted_dim: u64,
    pub method: MethodUsed,
    pub mod_p_ranks: Vec<usize>,
}

impl DegreeReport {
    pub fn pass(&self) -> bool {
        self.invariant_dim as u64 == self.predicted_dim
    }
}

fn resolve(method: Method, piece_dim: usize) -> RankMethod {
    match method {
        Method::Exact => RankMethod::Exact,
        Method::ModP { seed } => RankMethod::ModP(random_primes(PRIME_COUNT, seed)),
        Method::Auto if piece_dim > MODP_THRESHOLD => RankMethod::ModP(random_primes(PRIME_COUNT, 0)),
        Method::Auto => RankMethod::Exact,
    }
}

fn guard(n: usize, allow_large: bool) -> Result<()> {
    if n > DEGREE_LIMIT && !allow_large {
        return Err(Error::DegreeGuard {
            degree: n,
            limit: DEGREE_LIMIT,
        });
    }
    Ok(())
}

/// `dim (S(g) ⊗ Λ(p))^K` in degree `n` with the prediction alongside.
pub fn invariant_dimension(n: usize, method: Method, allow_large: bool) -> Result<DegreeReport> {
    guard(n, allow_large)?;
    let piece_dim = piece_dimension(n);
    let basis = weight_zero_basis(n);
    let ops = raising_lowering_operators(&basis)?;
    let k = kernel_dimension(&ops, &resolve(method, piece_dim));
    Ok(DegreeReport {
        degree: n,
        piece_dim,
        weight_zero_dim: basis.len(),
        invariant_dim: k.dim,
        predicted_dim: predicted_dimension(n),
        method: if k.exact {
            MethodUsed::ExactQ
        } else {
            MethodUsed::MultiPrime
        },
        mod_p_ranks: k.mod_p_ranks,
    })
}

/// An exact basis of the degree-`n` invariants, each vector certified by
/// applying all six `k` generators.
pub fn invariant_basis(n: usize, allow_large: bool) -> Result<Vec<SEElement>> {
    guard(n, allow_large)?;
    let basis = weight_zero_basis(n);
    let ops = raising_lowering_operators(&basis)?;
    let kernel = SparseMatrixQ::vstack(&ops).kernel_basis();
    let mut out = Vec::with_capacity(kernel.len());
    for v in kernel {
        let x: SEElement = SEElement::from_combination(
            basis
                .iter()
                .zip(v)
                .filter(|(_, c)| !num_traits::Zero::is_zero(c))
                .map(|(k, c)| (*k, c))
                .collect(),
        );
        for z in BasisIndex::K {
            let r = ad_action_se(&LieElement::basis(z), &x)?;
            if !r.is_zero() {
                return Err(Error::Invariance {
                    element: format!("kernel vector in degree {n}"),
                    generator: z,
                    terms: r.len(),
                });
            }
        }
        out.push(x);
    }
    Ok(out)
}

/// The four groupings used to split the independence argument, by `T` names.
/// `i` is handled on its own.
pub const INDEPENDENCE_GROUPS: [(&str, &[&str]); 5] = [
    ("a", &["1"]),
    ("b", &["D", "f", "g", "h"]),
    ("c", &["d", "Df", "e", "Dg", "Dh", "fg"]),
    ("d", &["j", "Dd", "De", "dg"]),
    ("i", &["i"]),
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankCount {
    pub label: String,
    pub count: usize,
    pub rank: usize,
    pub predicted: Option<u64>,
}

impl RankCount {
    pub fn pass(&self) -> bool {
        self.rank == self.count && self.predicted.is_none_or(|p| p == self.count as u64)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependenceReport {
    pub degree_cap: usize,
    pub groups: Vec<RankCount>,
    pub per_degree: Vec<RankCount>,
}

impl IndependenceReport {
    pub fn pass(&self) -> bool {
        self.groups.iter().chain(&self.per_degree).all(RankCount::pass)
    }
}

fn rank_of_keys<'a>(elements: impl IntoIterator<Item = &'a SEElement>) -> (usize, usize) {
    let mut index: BTreeMap<SEKey, usize> = BTreeMap::new();
    let mut ech = Echelon::default();
    let mut count = 0;
    for x in elements {
        count += 1;
        let mut row: Vec<(usize, Q)> = x
            .iter()
            .map(|(k, c)| {
                let n = index.len();
                (*index.entry(*k).or_insert(n), c.clone())
            })
            .collect();
        row.sort_by_key(|e| e.0);
        ech.insert(row);
    }
    (count, ech.rank())
}

/// Rank of all `S · T` products up to `degree_cap`, per degree and per group.
pub fn independence_check(degree_cap: usize) -> Result<IndependenceReport> {
    independence_check_with(&build_st_catalog()?, degree_cap)
}

pub fn independence_check_with(cat: &STCatalog, degree_cap: usize) -> Result<IndependenceReport> {
    guard(degree_cap, false)?;
    let by_degree: Vec<Vec<(String, SEElement)>> =
        (0..=degree_cap).map(|n| crate::sym_ext::st_products(cat, n)).collect();
    let per_degree = by_degree
        .iter()
        .enumerate()
        .map(|(n, items)| {
            let (count, rank) = rank_of_keys(items.iter().map(|(_, x)| x));
            RankCount {
                label: format!("degree {n}"),
                count,
                rank,
                predicted: Some(predicted_dimension(n)),
            }
        })
        .collect();
    let groups = INDEPENDENCE_GROUPS
        .iter()
        .map(|(label, names)| {
            let members = by_degree.iter().flatten().filter(|(l, _)| {
                l.rsplit_once("· ").is_some_and(|(_, t)| names.contains(&t))
            });
            let (count, rank) = rank_of_keys(members.map(|(_, x)| x));
            RankCount {
                label: format!("group {label}"),
                count,
                rank,
                predicted: None,
            }
        })
        .collect();
    Ok(IndependenceReport {
        degree_cap,
        groups,
        per_degree,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn predicted_values() {
        let h: Vec<u64> = (0..8).map(predicted_dimension).collect();
        assert_eq!(h, vec![1, 0, 4, 4, 13, 16, 32, 40]);
    }

    #[test]
    fn piece_dimensions() {
        assert_eq!(piece_dimension(0), 1);
        assert_eq!(piece_dimension(1), 14);
        assert_eq!(piece_dimension(6), 18_238);
        assert_eq!(piece_dimension(7), 46_552);
    }

    #[test]
    fn low_degrees_exact() {
        for n in 0..=3 {
            let r = invariant_dimension(n, Method::Exact, false).unwrap();
            assert!(r.pass(), "{r:?}");
            assert_eq!(r.method, MethodUsed::ExactQ);
        }
    }

    #[test]
    fn modular_matches_exact() {
        let a = invariant_dimension(4, Method::Exact, false).unwrap();
        let b = invariant_dimension(4, Method::ModP { seed: 7 }, false).unwrap();
        assert_eq!(a.invariant_dim, b.invariant_dim);
        assert_eq!(b.method, MethodUsed::MultiPrime);
        assert_eq!(b.mod_p_ranks.len(), PRIME_COUNT);
    }

    #[test]
    fn guard_rejects_large_degree() {
        assert!(matches!(
            invariant_dimension(8, Method::Auto, false),
            Err(Error::DegreeGuard { degree: 8, limit: 7 })
        ));
    }

    #[test]
    fn kernel_vectors_are_certified() {
        let basis = invariant_basis(2, false).unwrap();
        assert_eq!(basis.len(), 4);
        let cat = build_st_catalog().unwrap();
        let mut all = basis.clone();
        all.extend([cat.a1.clone(), cat.a2.clone(), cat.b.clone(), cat.t_element("D").unwrap().clone()]);
        assert_eq!(crate::sym_ext::rank_of(&all), 4);
    }

    #[test]
    fn independence_up_to_four() {
        let r = independence_check(4).unwrap();
        assert!(r.pass(), "{r:?}");
        let counts: Vec<usize> = r.per_degree.iter().map(|c| c.count).collect();
        assert_eq!(counts, vec![1, 0, 4, 4, 13]);
    }
}
