//! Exact sparse linear algebra over `Q`, and rank modulo word-size primes.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::scalar::Q;

/// Row-major sparse matrix; each row is sorted by column with no stored zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrixQ {
    rows: Vec<Vec<(usize, Q)>>,
    cols: usize,
}

impl SparseMatrixQ {
    pub fn new(cols: usize) -> Self {
        Self { rows: Vec::new(), cols }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows: vec![Vec::new(); rows],
            cols,
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn rows(&self) -> &[Vec<(usize, Q)>] {
        &self.rows
    }

    /// Appends a row given as unsorted `(column, value)` pairs; duplicates add up.
    pub fn push_row(&mut self, entries: impl IntoIterator<Item = (usize, Q)>) {
        let mut map: std::collections::BTreeMap<usize, Q> = Default::default();
        for (c, v) in entries {
            assert!(c < self.cols, "column {c} out of range {}", self.cols);
            *map.entry(c).or_insert_with(Q::zero) += v;
        }
        self.rows.push(map.into_iter().filter(|(_, v)| !v.is_zero()).collect());
    }

    /// Builds a matrix from column vectors: column `j` holds `columns[j]`.
    pub fn from_columns(nrows: usize, columns: &[Vec<(usize, Q)>]) -> Self {
        let mut rows: Vec<Vec<(usize, Q)>> = vec![Vec::new(); nrows];
        for (j, col) in columns.iter().enumerate() {
            for (i, v) in col {
                if !v.is_zero() {
                    rows[*i].push((j, v.clone()));
                }
            }
        }
        for r in rows.iter_mut() {
            r.sort_by_key(|(c, _)| *c);
        }
        Self {
            rows,
            cols: columns.len(),
        }
    }

    pub fn vstack(mats: &[SparseMatrixQ]) -> Self {
        let cols = mats.first().map_or(0, |m| m.cols);
        assert!(mats.iter().all(|m| m.cols == cols), "column counts differ");
        Self {
            rows: mats.iter().flat_map(|m| m.rows.iter().cloned()).collect(),
            cols,
        }
    }

    pub fn apply(&self, v: &[Q]) -> Vec<Q> {
        self.rows
            .iter()
            .map(|r| r.iter().fold(Q::zero(), |acc, (c, x)| acc + x * &v[*c]))
            .collect()
    }

    pub fn rank_exact(&self) -> usize {
        let mut ech = Echelon::default();
        for r in &self.rows {
            ech.insert(r.clone());
        }
        ech.rank()
    }

    /// Rank over `GF(p)`; `None` if some denominator vanishes mod `p`.
    pub fn rank_mod_p(&self, p: u64) -> Option<usize> {
        let mut rows = Vec::with_capacity(self.rows.len());
        for r in &self.rows {
            let mut out = Vec::with_capacity(r.len());
            for (c, v) in r {
                let x = reduce_mod(v, p)?;
                if x != 0 {
                    out.push((*c, x));
                }
            }
            rows.push(out);
        }
        Some(rank_mod_p_rows(rows, p))
    }

    /// Basis of the right kernel, as dense vectors.
    pub fn kernel_basis(&self) -> Vec<Vec<Q>> {
        let mut ech = Echelon::default();
        for r in &self.rows {
            ech.insert(r.clone());
        }
        let rref = ech.reduced();
        let pivot_cols: HashMap<usize, usize> =
            rref.iter().enumerate().map(|(i, r)| (r[0].0, i)).collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_cols.contains_key(&free) {
                continue;
            }
            let mut v = vec![Q::zero(); self.cols];
            v[free] = Q::one();
            for r in &rref {
                if let Some((_, x)) = r.iter().find(|(c, _)| *c == free) {
                    v[r[0].0] = -x;
                }
            }
            basis.push(v);
        }
        basis
    }
}

/// Incremental row echelon form over `Q` keyed by leading column.
#[derive(Default, Clone, Debug)]
pub struct Echelon {
    pivots: HashMap<usize, Vec<(usize, Q)>>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `row` by the existing pivots; returns `true` if it was independent.
    pub fn insert(&mut self, mut row: Vec<(usize, Q)>) -> bool {
        loop {
            let Some(&(lead, ref x)) = row.first() else {
                return false;
            };
            match self.pivots.get(&lead) {
                Some(p) => {
                    let f = x.clone();
                    row = axpy(&row, p, &f);
                }
                None => {
                    let inv = Q::one() / x;
                    for e in row.iter_mut() {
                        e.1 = &e.1 * &inv;
                    }
                    self.pivots.insert(lead, row);
                    return true;
                }
            }
        }
    }

    /// Fully reduced rows, sorted by leading column.
    pub fn reduced(&self) -> Vec<Vec<(usize, Q)>> {
        let mut leads: Vec<usize> = self.pivots.keys().copied().collect();
        leads.sort_unstable();
        let mut done: HashMap<usize, Vec<(usize, Q)>> = HashMap::new();
        for &lead in leads.iter().rev() {
            let mut row = self.pivots[&lead].clone();
            let mut i = 1;
            while i < row.len() {
                let (c, x) = row[i].clone();
                if let Some(p) = done.get(&c) {
                    row = axpy(&row, p, &x);
                    // the entry at position i was cancelled; recheck same index
                } else {
                    i += 1;
                }
            }
            done.insert(lead, row);
        }
        leads.iter().map(|l| done.remove(l).unwrap()).collect()
    }
}

/// `row − f · pivot`, merging sorted sparse rows.
fn axpy(row: &[(usize, Q)], pivot: &[(usize, Q)], f: &Q) -> Vec<(usize, Q)> {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let ci = row.get(i).map_or(usize::MAX, |e| e.0);
        let cj = pivot.get(j).map_or(usize::MAX, |e| e.0);
        if ci < cj {
            out.push(row[i].clone());
            i += 1;
        } else if cj < ci {
            out.push((cj, -(f * &pivot[j].1)));
            j += 1;
        } else {
            let v = &row[i].1 - f * &pivot[j].1;
            if !v.is_zero() {
                out.push((ci, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn reduce_mod(v: &Q, p: u64) -> Option<u64> {
    let pb = BigInt::from(p);
    let n = v.numer().mod_floor(&pb).to_u64()?;
    let d = v.denom().mod_floor(&pb).to_u64()?;
    if d == 0 {
        return None;
    }
    Some(mul_mod(n, inv_mod(d, p), p))
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn rank_mod_p_rows(rows: Vec<Vec<(usize, u64)>>, p: u64) -> usize {
    let mut pivots: HashMap<usize, Vec<(usize, u64)>> = HashMap::new();
    for mut row in rows {
        loop {
            let Some(&(lead, x)) = row.first() else { break };
            match pivots.get(&lead) {
                Some(piv) => {
                    let f = p - x; // row += (−x) · pivot, pivot has leading 1
                    let mut out = Vec::with_capacity(row.len() + piv.len());
                    let (mut i, mut j) = (0, 0);
                    while i < row.len() || j < piv.len() {
                        let ci = row.get(i).map_or(usize::MAX, |e| e.0);
                        let cj = piv.get(j).map_or(usize::MAX, |e| e.0);
                        if ci < cj {
                            out.push(row[i]);
                            i += 1;
                        } else if cj < ci {
                            out.push((cj, mul_mod(f, piv[j].1, p)));
                            j += 1;
                        } else {
                            let v = (row[i].1 + mul_mod(f, piv[j].1, p)) % p;
                            if v != 0 {
                                out.push((ci, v));
                            }
                            i += 1;
                            j += 1;
                        }
                    }
                    row = out;
                }
                None => {
                    let inv = inv_mod(x, p);
                    for e in row.iter_mut() {
                        e.1 = mul_mod(e.1, inv, p);
                    }
                    pivots.insert(lead, row);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// Deterministic Miller–Rabin for 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for sp in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(sp) {
            return n == sp;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'outer: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// `count` distinct primes in `[2^30, 2^31)` drawn from a seeded generator.
pub fn random_primes(count: usize, seed: u64) -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<u64> = Vec::new();
    while out.len() < count {
        let c = rng.gen_range((1u64 << 30)..(1u64 << 31)) | 1;
        if is_prime(c) && !out.contains(&c) {
            out.push(c);
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RankMethod {
    Exact,
    /// Rank modulo each prime; all must agree.
    ModP(Vec<u64>),
}

/// Rank under `method`; disagreement between primes is an error.
pub fn rank_with(m: &SparseMatrixQ, method: &RankMethod) -> Result<usize> {
    match method {
        RankMethod::Exact => Ok(m.rank_exact()),
        RankMethod::ModP(primes) => {
            let ranks: Vec<Option<usize>> = primes.par_iter().map(|&p| m.rank_mod_p(p)).collect();
            let ranks: Vec<usize> = ranks.into_iter().flatten().collect();
            if ranks.is_empty() || ranks.iter().any(|&r| r != ranks[0]) {
                return Err(Error::PrimeDisagreement(ranks));
            }
            Ok(ranks[0])
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelDimension {
    pub dim: usize,
    /// `true` when the dimension came from exact arithmetic (requested, or
    /// as a fallback after the primes disagreed).
    pub exact: bool,
    pub mod_p_ranks: Vec<usize>,
}

/// Dimension of the common kernel `∩ ker(op)`.
pub fn kernel_dimension(ops: &[SparseMatrixQ], method: &RankMethod) -> KernelDimension {
    let cols = ops.first().map_or(0, |m| m.cols());
    let stacked = SparseMatrixQ::vstack(ops);
    match rank_with(&stacked, method) {
        Ok(r) => KernelDimension {
            dim: cols - r,
            exact: matches!(method, RankMethod::Exact),
            mod_p_ranks: match method {
                RankMethod::Exact => vec![],
                RankMethod::ModP(ps) => vec![r; ps.len()],
            },
        },
        Err(Error::PrimeDisagreement(ranks)) => KernelDimension {
            dim: cols - stacked.rank_exact(),
            exact: true,
            mod_p_ranks: ranks,
        },
        Err(e) => unreachable!("{e}"),
    }
}

/// Solves `a · x = b` over `Q`. Free variables are set to zero; `None` if inconsistent.
pub fn solve_dense(a: &[Vec<Q>], b: &[Q]) -> Option<Vec<Q>> {
    let n = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<Q>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..m.len()).find(|&k| !m[k][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = Q::one() / &m[r][c];
        for e in m[r].iter_mut() {
            *e = &*e * &inv;
        }
        for k in 0..m.len() {
            if k != r && !m[k][c].is_zero() {
                let f = m[k][c].clone();
                for cc in 0..=n {
                    let d = &f * &m[r][cc];
                    m[k][cc] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if m[r..].iter().any(|row| !row[n].is_zero()) {
        return None;
    }
    let mut x = vec![Q::zero(); n];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = m[i][n].clone();
    }
    Some(x)
}

/// `true` if `v` has only integer entries bounded by `bound` in absolute value.
pub fn small_integers(v: &[Q], bound: i64) -> bool {
    v.iter().all(|x| x.is_integer() && x.numer().abs() <= BigInt::from(bound))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, qf};
    use proptest::prelude::*;

    fn dense(rows: &[&[i64]]) -> SparseMatrixQ {
        let mut m = SparseMatrixQ::new(rows[0].len());
        for r in rows {
            m.push_row(r.iter().enumerate().map(|(c, &v)| (c, q(v))));
        }
        m
    }

    /// Plain dense elimination, independent of the sparse echelon code.
    fn dense_rank(rows: &[Vec<i64>]) -> usize {
        let mut m: Vec<Vec<Q>> = rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
        let ncols = m.first().map_or(0, Vec::len);
        let mut rank = 0;
        for c in 0..ncols {
            if let Some(p) = (rank..m.len()).find(|&k| !m[k][c].is_zero()) {
                m.swap(rank, p);
                for k in rank + 1..m.len() {
                    let f = &m[k][c] / &m[rank][c];
                    for cc in 0..ncols {
                        let d = &f * &m[rank][cc];
                        m[k][cc] -= d;
                    }
                }
                rank += 1;
            }
        }
        rank
    }

    #[test]
    fn zero_operators_have_full_kernel() {
        let ops = vec![SparseMatrixQ::zeros(3, 5); 6];
        let k = kernel_dimension(&ops, &RankMethod::Exact);
        assert_eq!(k.dim, 5);
    }

    #[test]
    fn ranks_and_kernel() {
        let m = dense(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(m.rank_exact(), 2);
        assert_eq!(m.rank_mod_p(1_000_000_007), Some(2));
        let ker = m.kernel_basis();
        assert_eq!(ker.len(), 1);
        assert!(m.apply(&ker[0]).iter().all(Q::is_zero));
    }

    #[test]
    fn small_prime_can_drop_rank() {
        let m = dense(&[&[1, 1], &[1, 4]]);
        assert_eq!(m.rank_exact(), 2);
        assert_eq!(m.rank_mod_p(3), Some(1));
        let res = rank_with(&m, &RankMethod::ModP(vec![3, 5, 7]));
        assert!(matches!(res, Err(Error::PrimeDisagreement(_))));
        let k = kernel_dimension(&[m], &RankMethod::ModP(vec![3, 5, 7]));
        assert_eq!(k.dim, 0);
        assert!(k.exact);
    }

    #[test]
    fn rational_entries_mod_p() {
        let mut m = SparseMatrixQ::new(2);
        m.push_row([(0, qf(1, 2)), (1, q(1))]);
        m.push_row([(0, q(1)), (1, q(2))]);
        assert_eq!(m.rank_mod_p(7), Some(1));
        assert_eq!(m.rank_mod_p(2), None);
    }

    #[test]
    fn solve() {
        let a = vec![vec![q(1), q(1)], vec![q(1), q(-1)]];
        assert_eq!(solve_dense(&a, &[q(3), q(1)]), Some(vec![q(2), q(1)]));
        let sing = vec![vec![q(1), q(1)], vec![q(2), q(2)]];
        assert_eq!(solve_dense(&sing, &[q(1), q(3)]), None);
    }

    #[test]
    fn primes() {
        assert!(is_prime(1_000_000_007));
        assert!(!is_prime(1_000_000_007 * 3));
        let ps = random_primes(3, 7);
        assert_eq!(ps.len(), 3);
        assert!(ps.iter().all(|&p| is_prime(p) && p >= 1 << 30));
        assert_eq!(ps, random_primes(3, 7));
    }

    proptest! {
        #[test]
        fn sparse_rank_matches_dense_oracle(rows in prop::collection::vec(prop::collection::vec(-3i64..4, 5), 1..7)) {
            let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
            let m = dense(&refs);
            let r = dense_rank(&rows);
            prop_assert_eq!(m.rank_exact(), r);
            prop_assert_eq!(m.rank_mod_p(1_000_000_007), Some(r));
            let ker = m.kernel_basis();
            prop_assert_eq!(ker.len(), 5 - r);
            for v in &ker {
                prop_assert!(m.apply(v).iter().all(Q::is_zero));
            }
        }
    }
}
