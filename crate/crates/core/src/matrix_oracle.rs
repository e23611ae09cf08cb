//! Ground truth: the basis realised as 5×5 matrices over the Gaussian
//! rationals, inside `so(4,1) = { x | xᵀ = -γxγ, tr x = 0 }` complexified.
//!
//! Nothing downstream multiplies matrices on the hot path; the oracle exists to
//! certify the literal structure constants in [`crate::lie`] and the trace form
//! on `p` used by the Clifford algebra.

use std::collections::BTreeMap;

use num_traits::One;

use crate::basis::BasisIndex;
use crate::error::{Error, Result};
use crate::lie::{LieElement, StructureConstants};
use crate::scalar::{q, qf, GaussRational, Q};

pub const N: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix5 {
    pub entries: [[GaussRational; N]; N],
}

impl Matrix5 {
    pub fn zero() -> Self {
        Self {
            entries: Default::default(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(GaussRational::is_zero)
    }

    /// `γ = diag(1, 1, 1, 1, -1)`
    pub fn gamma() -> Self {
        let mut m = Self::zero();
        for i in 0..N {
            m.entries[i][i] = GaussRational::real(if i == 4 { q(-1) } else { q(1) });
        }
        m
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zero();
        for i in 0..N {
            for j in 0..N {
                m.entries[i][j] = self.entries[j][i].clone();
            }
        }
        m
    }

    pub fn trace(&self) -> GaussRational {
        let mut t = GaussRational::default();
        for i in 0..N {
            t = &t + &self.entries[i][i];
        }
        t
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut m = Self::zero();
        for i in 0..N {
            for j in 0..N {
                let mut acc = GaussRational::default();
                for k in 0..N {
                    if self.entries[i][k].is_zero() || o.entries[k][j].is_zero() {
                        continue;
                    }
                    acc = &acc + &(&self.entries[i][k] * &o.entries[k][j]);
                }
                m.entries[i][j] = acc;
            }
        }
        m
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut m = self.clone();
        for i in 0..N {
            for j in 0..N {
                m.entries[i][j] = &self.entries[i][j] + &o.entries[i][j];
            }
        }
        m
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut m = self.clone();
        for i in 0..N {
            for j in 0..N {
                m.entries[i][j] = &self.entries[i][j] - &o.entries[i][j];
            }
        }
        m
    }

    pub fn scale(&self, c: &GaussRational) -> Self {
        let mut m = self.clone();
        for row in m.entries.iter_mut() {
            for e in row.iter_mut() {
                *e = &*e * c;
            }
        }
        m
    }

    /// `xᵀ = -γxγ` and `tr x = 0`.
    pub fn in_so41(&self) -> bool {
        let g = Self::gamma();
        let rhs = g.mul(self).mul(&g).scale(&GaussRational::real(q(-1)));
        self.transpose() == rhs && self.trace().is_zero()
    }
}

/// Builds `scale · Σ (re + i·im) e_{row,col}` with 1-based indices as printed.
fn literal(scale: Q, entries: &[(usize, usize, i64, i64)]) -> Matrix5 {
    let mut m = Matrix5::zero();
    for &(r, c, re, im) in entries {
        m.entries[r - 1][c - 1] = GaussRational::new(&scale * q(re), &scale * q(im));
    }
    m
}

pub fn build_basis_matrices() -> BTreeMap<BasisIndex, Matrix5> {
    use BasisIndex::*;
    let one = Q::one();
    let half = qf(1, 2);
    let mhalf = qf(-1, 2);
    let mut m = BTreeMap::new();
    m.insert(H1, literal(one.clone(), &[(1, 2, 0, 1), (2, 1, 0, -1)]));
    m.insert(H2, literal(one.clone(), &[(3, 4, 0, 1), (4, 3, 0, -1)]));
    m.insert(
        E1,
        literal(
            half.clone(),
            &[
                (1, 3, 1, 0),
                (2, 4, -1, 0),
                (2, 3, 0, -1),
                (1, 4, 0, -1),
                (3, 1, -1, 0),
                (4, 2, 1, 0),
                (3, 2, 0, 1),
                (4, 1, 0, 1),
            ],
        ),
    );
    m.insert(
        E2,
        literal(
            half,
            &[
                (1, 3, 1, 0),
                (2, 4, 1, 0),
                (2, 3, 0, -1),
                (1, 4, 0, 1),
                (3, 1, -1, 0),
                (4, 2, -1, 0),
                (3, 2, 0, 1),
                (4, 1, 0, -1),
            ],
        ),
    );
    m.insert(
        F1,
        literal(
            mhalf.clone(),
            &[
                (1, 3, 1, 0),
                (2, 4, -1, 0),
                (2, 3, 0, 1),
                (1, 4, 0, 1),
                (3, 1, -1, 0),
                (4, 2, 1, 0),
                (3, 2, 0, -1),
                (4, 1, 0, -1),
            ],
        ),
    );
    m.insert(
        F2,
        literal(
            mhalf,
            &[
                (1, 3, 1, 0),
                (2, 4, 1, 0),
                (2, 3, 0, 1),
                (1, 4, 0, -1),
                (3, 1, -1, 0),
                (4, 2, -1, 0),
                (3, 2, 0, -1),
                (4, 1, 0, 1),
            ],
        ),
    );
    m.insert(
        E3,
        literal(one.clone(), &[(1, 5, 1, 0), (2, 5, 0, -1), (5, 1, 1, 0), (5, 2, 0, -1)]),
    );
    m.insert(
        E4,
        literal(one.clone(), &[(3, 5, 1, 0), (4, 5, 0, -1), (5, 3, 1, 0), (5, 4, 0, -1)]),
    );
    m.insert(
        F3,
        literal(one.clone(), &[(1, 5, 1, 0), (2, 5, 0, 1), (5, 1, 1, 0), (5, 2, 0, 1)]),
    );
    m.insert(
        F4,
        literal(one, &[(3, 5, 1, 0), (4, 5, 0, 1), (5, 3, 1, 0), (5, 4, 0, 1)]),
    );
    m
}

pub fn matrix_bracket(a: &Matrix5, b: &Matrix5) -> Matrix5 {
    a.mul(b).sub(&b.mul(a))
}

/// `B(x, y) = tr(xy)`
pub fn trace_form(x: &Matrix5, y: &Matrix5) -> GaussRational {
    x.mul(y).trace()
}

/// Coordinates of `target` in the span of the basis matrices, or `None` if
/// it lies outside the span.
pub fn expand_in_basis(
    basis: &BTreeMap<BasisIndex, Matrix5>,
    target: &Matrix5,
) -> Option<BTreeMap<BasisIndex, GaussRational>> {
    // Augmented system: 25 equations, 10 unknowns.
    let cols: Vec<BasisIndex> = basis.keys().copied().collect();
    let n = cols.len();
    let mut rows: Vec<Vec<GaussRational>> = Vec::with_capacity(N * N);
    for i in 0..N {
        for j in 0..N {
            let mut row: Vec<GaussRational> =
                cols.iter().map(|b| basis[b].entries[i][j].clone()).collect();
            row.push(target.entries[i][j].clone());
            rows.push(row);
        }
    }
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..rows.len()).find(|&k| !rows[k][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = GaussRational::real(Q::one()).div(&rows[r][c]).expect("nonzero pivot");
        for e in rows[r].iter_mut() {
            *e = &*e * &inv;
        }
        for k in 0..rows.len() {
            if k != r && !rows[k][c].is_zero() {
                let f = rows[k][c].clone();
                for cc in 0..=n {
                    let d = &f * &rows[r][cc];
                    rows[k][cc] = &rows[k][cc] - &d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if rows[r..].iter().any(|row| !row[n].is_zero()) {
        return None;
    }
    let mut out = BTreeMap::new();
    for (i, &c) in pivots.iter().enumerate() {
        if !rows[i][n].is_zero() {
            out.insert(cols[c], rows[i][n].clone());
        }
    }
    Some(out)
}

pub fn extract_structure_constants() -> Result<StructureConstants> {
    let basis = build_basis_matrices();
    StructureConstants::try_from_fn(|x, y| {
        let br = matrix_bracket(&basis[&x], &basis[&y]);
        let coords = expand_in_basis(&basis, &br).ok_or(Error::Span(x, y))?;
        let mut el = LieElement::zero();
        for (b, c) in coords {
            if !c.is_real() {
                return Err(Error::NonReal(x, y));
            }
            el.add_term(b, c.re);
        }
        Ok(el)
    })
}

/// Gram matrix of the trace form on `(E3, E4, F3, F4)`.
pub fn p_gram() -> [[Q; 4]; 4] {
    let basis = build_basis_matrices();
    let mut g: [[Q; 4]; 4] = Default::default();
    for (i, a) in BasisIndex::P.iter().enumerate() {
        for (j, b) in BasisIndex::P.iter().enumerate() {
            let v = trace_form(&basis[a], &basis[b]);
            assert!(v.is_real(), "trace form on p must be real");
            g[i][j] = v.re;
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use BasisIndex::*;

    fn mats() -> BTreeMap<BasisIndex, Matrix5> {
        build_basis_matrices()
    }

    #[test]
    fn h1_literal() {
        let m = mats();
        let h1 = &m[&H1];
        assert_eq!(h1.entries[0][1], GaussRational::i());
        assert_eq!(h1.entries[1][0], GaussRational::new(q(0), q(-1)));
        let nonzero = h1.entries.iter().flatten().filter(|e| !e.is_zero()).count();
        assert_eq!(nonzero, 2);
    }

    #[test]
    fn e3_literal() {
        let e3 = &mats()[&E3];
        assert_eq!(e3.entries[0][4], GaussRational::real(q(1)));
        assert_eq!(e3.entries[1][4], GaussRational::new(q(0), q(-1)));
        assert_eq!(e3.entries[4][0], GaussRational::real(q(1)));
        assert_eq!(e3.entries[4][1], GaussRational::new(q(0), q(-1)));
    }

    #[test]
    fn all_basis_matrices_in_so41() {
        for (b, m) in mats() {
            assert!(m.in_so41(), "{b} violates membership");
        }
    }

    #[test]
    fn bracket_examples() {
        let m = mats();
        assert!(matrix_bracket(&m[&H1], &m[&H1]).is_zero());
        assert_eq!(matrix_bracket(&m[&H1], &m[&E1]), m[&E1]);
        let two_h1 = m[&H1].scale(&GaussRational::real(q(2)));
        assert_eq!(matrix_bracket(&m[&E3], &m[&F3]), two_h1);
    }

    #[test]
    fn trace_form_values() {
        let m = mats();
        assert!(trace_form(&m[&E3], &m[&E3]).is_zero());
        assert_eq!(trace_form(&m[&E3], &m[&F3]), GaussRational::real(q(4)));
        assert!(trace_form(&m[&E3], &m[&E4]).is_zero());
    }

    #[test]
    fn p_gram_symmetric_rational_invertible() {
        let g = p_gram();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(g[i][j], g[j][i]);
            }
        }
        // Only the (E3,F3) and (E4,F4) pairings survive, so det = 4^4.
        let expected: [[i64; 4]; 4] = [[0, 0, 4, 0], [0, 0, 0, 4], [4, 0, 0, 0], [0, 4, 0, 0]];
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(g[i][j], q(expected[i][j]));
            }
        }
    }

    #[test]
    fn extracted_examples() {
        let sc = extract_structure_constants().unwrap();
        assert_eq!(sc.get(H1, E3), LieElement::basis(E3));
        let h1_plus_h2 = &LieElement::basis(H1) + &LieElement::basis(H2);
        assert_eq!(sc.get(E1, F1), h1_plus_h2);
        assert_eq!(sc.get(F3, F4), LieElement::basis(F1).scale(&q(-2)));
    }

    #[test]
    fn outside_span_is_detected() {
        let m = mats();
        let mut id = Matrix5::zero();
        id.entries[0][0] = GaussRational::real(q(1));
        assert!(expand_in_basis(&m, &id).is_none());
        let zero_coords = expand_in_basis(&m, &Matrix5::zero()).unwrap();
        assert!(zero_coords.is_empty());
    }
}
