//! `g = so(5, C)` through its structure constants, and the Cartan split
//! `g = k1 ⊕ k2 ⊕ p`.

use std::fmt;
use std::sync::OnceLock;

use num_traits::Zero;

use crate::basis::BasisIndex::{self, *};
use crate::combination::{linear_newtype, Combination};
use crate::error::Result;
use crate::scalar::{fmt_q, q, Q};

/// Sparse rational combination of basis vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LieElement(Combination<BasisIndex>);

linear_newtype!(LieElement, BasisIndex);

impl LieElement {
    pub fn basis(b: BasisIndex) -> Self {
        Self::term(b, q(1))
    }

    pub fn add_term(&mut self, b: BasisIndex, c: Q) {
        self.0.add_term(b, c);
    }

    /// `H1 + H2`
    pub fn h_plus() -> Self {
        &Self::basis(H1) + &Self::basis(H2)
    }

    /// `H1 - H2`
    pub fn h_minus() -> Self {
        &Self::basis(H1) - &Self::basis(H2)
    }

    pub fn in_k(&self) -> bool {
        self.iter().all(|(b, _)| b.is_k())
    }

    pub fn in_p(&self) -> bool {
        self.iter().all(|(b, _)| b.is_p())
    }
}

impl fmt::Display for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (b, c)) in self.iter().enumerate() {
            let neg = c < &Q::zero();
            let a = if neg { -c } else { c.clone() };
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            write!(f, "{} * {}", fmt_q(&a), b)?;
        }
        Ok(())
    }
}

/// `[x, y]` for every ordered pair of basis vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstants {
    table: Vec<LieElement>,
}

impl StructureConstants {
    pub fn try_from_fn(
        mut f: impl FnMut(BasisIndex, BasisIndex) -> Result<LieElement>,
    ) -> Result<Self> {
        let mut table = Vec::with_capacity(100);
        for x in BasisIndex::ALL {
            for y in BasisIndex::ALL {
                table.push(f(x, y)?);
            }
        }
        Ok(Self { table })
    }

    pub fn get(&self, x: BasisIndex, y: BasisIndex) -> LieElement {
        self.table[x.index() * 10 + y.index()].clone()
    }

    pub fn get_ref(&self, x: BasisIndex, y: BasisIndex) -> &LieElement {
        &self.table[x.index() * 10 + y.index()]
    }

    /// The commutator table of the basis, entered literally (upper triangle,
    /// completed by antisymmetry).
    pub fn literal() -> Self {
        let upper: &[(BasisIndex, BasisIndex, &[(i64, BasisIndex)])] = &[
            (H1, E1, &[(1, E1)]),
            (H1, E2, &[(1, E2)]),
            (H1, F1, &[(-1, F1)]),
            (H1, F2, &[(-1, F2)]),
            (H1, E3, &[(1, E3)]),
            (H1, F3, &[(-1, F3)]),
            (H2, E1, &[(1, E1)]),
            (H2, E2, &[(-1, E2)]),
            (H2, F1, &[(-1, F1)]),
            (H2, F2, &[(1, F2)]),
            (H2, E4, &[(1, E4)]),
            (H2, F4, &[(-1, F4)]),
            (E1, F1, &[(1, H1), (1, H2)]),
            (E1, F3, &[(-1, E4)]),
            (E1, F4, &[(1, E3)]),
            (E2, F2, &[(1, H1), (-1, H2)]),
            (E2, E4, &[(1, E3)]),
            (E2, F3, &[(-1, F4)]),
            (F1, E3, &[(1, F4)]),
            (F1, E4, &[(-1, F3)]),
            (F2, E3, &[(1, E4)]),
            (F2, F4, &[(-1, F3)]),
            (E3, E4, &[(2, E1)]),
            (E3, F3, &[(2, H1)]),
            (E3, F4, &[(2, E2)]),
            (E4, F3, &[(2, F2)]),
            (E4, F4, &[(2, H2)]),
            (F3, F4, &[(-2, F1)]),
        ];
        let mut table = vec![LieElement::zero(); 100];
        for &(x, y, entries) in upper {
            let mut el = LieElement::zero();
            for &(c, b) in entries {
                el.add_term(b, q(c));
            }
            table[y.index() * 10 + x.index()] = -&el;
            table[x.index() * 10 + y.index()] = el;
        }
        Self { table }
    }

    /// Shared instance of [`StructureConstants::literal`].
    pub fn global() -> &'static StructureConstants {
        static SC: OnceLock<StructureConstants> = OnceLock::new();
        SC.get_or_init(Self::literal)
    }

    pub fn bracket(&self, x: &LieElement, y: &LieElement) -> LieElement {
        let mut out = Combination::zero();
        for (a, ca) in x.iter() {
            for (b, cb) in y.iter() {
                out.add_scaled(self.get_ref(*a, *b).combination(), &(ca * cb));
            }
        }
        LieElement(out)
    }

    pub fn bracket_basis(&self, x: BasisIndex, y: BasisIndex) -> &LieElement {
        self.get_ref(x, y)
    }

    /// Residual `[x,[y,z]] + [y,[z,x]] + [z,[x,y]]`.
    pub fn jacobi_residual(&self, x: BasisIndex, y: BasisIndex, z: BasisIndex) -> LieElement {
        let (lx, ly, lz) = (LieElement::basis(x), LieElement::basis(y), LieElement::basis(z));
        let a = self.bracket(&lx, &self.bracket(&ly, &lz));
        let b = self.bracket(&ly, &self.bracket(&lz, &lx));
        let c = self.bracket(&lz, &self.bracket(&lx, &ly));
        &(&a + &b) + &c
    }

    /// All basis triples `x < y < z` whose Jacobi residual is nonzero.
    pub fn jacobi_check(&self) -> Vec<(BasisIndex, BasisIndex, BasisIndex, LieElement)> {
        let mut bad = Vec::new();
        for (i, &x) in BasisIndex::ALL.iter().enumerate() {
            for (j, &y) in BasisIndex::ALL.iter().enumerate().skip(i + 1) {
                for &z in BasisIndex::ALL.iter().skip(j + 1) {
                    let r = self.jacobi_residual(x, y, z);
                    if !r.is_zero() {
                        bad.push((x, y, z, r));
                    }
                }
            }
        }
        bad
    }

    pub fn antisymmetry_violations(&self) -> Vec<(BasisIndex, BasisIndex)> {
        let mut bad = Vec::new();
        for x in BasisIndex::ALL {
            for y in BasisIndex::ALL {
                if self.get_ref(x, y) != &-self.get_ref(y, x) {
                    bad.push((x, y));
                }
            }
        }
        bad
    }

    /// Checks `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h` for one of the two
    /// `sl(2)` factors of `k`. Returns the failed relations by name.
    pub fn sl2_isomorphism_check(&self, which: KFactor) -> Vec<&'static str> {
        let [h, e, f] = which.triple();
        let mut bad = Vec::new();
        if self.bracket(&h, &e) != e.scale(&q(2)) {
            bad.push("[h,e]=2e");
        }
        if self.bracket(&h, &f) != f.scale(&q(-2)) {
            bad.push("[h,f]=-2f");
        }
        if self.bracket(&e, &f) != h {
            bad.push("[e,f]=h");
        }
        bad
    }
}

/// The two mutually commuting `sl(2)` factors of `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KFactor {
    K1,
    K2,
}

impl KFactor {
    /// Standard `(h, e, f)` triple.
    pub fn triple(self) -> [LieElement; 3] {
        match self {
            KFactor::K1 => [LieElement::h_plus(), LieElement::basis(E1), LieElement::basis(F1)],
            KFactor::K2 => [LieElement::h_minus(), LieElement::basis(E2), LieElement::basis(F2)],
        }
    }
}

/// Bases of `k1`, `k2` and `p`.
#[derive(Clone, Debug)]
pub struct CartanSplit {
    pub k1_basis: [LieElement; 3],
    pub k2_basis: [LieElement; 3],
    pub p_basis: [LieElement; 4],
}

impl Default for CartanSplit {
    fn default() -> Self {
        Self {
            k1_basis: KFactor::K1.triple(),
            k2_basis: KFactor::K2.triple(),
            p_basis: BasisIndex::P.map(LieElement::basis),
        }
    }
}

impl CartanSplit {
    /// Checks `[k,k] ⊆ k`, `[k,p] ⊆ p`, `[p,p] ⊆ k` and `[k1,k2] = 0`;
    /// returns a description of each failure.
    pub fn closure_violations(&self, sc: &StructureConstants) -> Vec<String> {
        let k: Vec<&LieElement> = self.k1_basis.iter().chain(self.k2_basis.iter()).collect();
        let mut bad = Vec::new();
        for a in &k {
            for b in &k {
                if !sc.bracket(a, b).in_k() {
                    bad.push(format!("[k,k] ⊄ k at ({a}, {b})"));
                }
            }
            for v in &self.p_basis {
                if !sc.bracket(a, v).in_p() {
                    bad.push(format!("[k,p] ⊄ p at ({a}, {v})"));
                }
            }
        }
        for v in &self.p_basis {
            for w in &self.p_basis {
                if !sc.bracket(v, w).in_k() {
                    bad.push(format!("[p,p] ⊄ k at ({v}, {w})"));
                }
            }
        }
        for a in &self.k1_basis {
            for b in &self.k2_basis {
                if !sc.bracket(a, b).is_zero() {
                    bad.push(format!("[k1,k2] ≠ 0 at ({a}, {b})"));
                }
            }
        }
        bad
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sc() -> &'static StructureConstants {
        StructureConstants::global()
    }

    #[test]
    fn bracket_examples() {
        let b = |x, y| sc().bracket(&LieElement::basis(x), &LieElement::basis(y));
        assert!(b(H1, H2).is_zero());
        assert_eq!(b(E2, F2), LieElement::h_minus());
        assert_eq!(b(H1, E3), LieElement::basis(E3));
        assert_eq!(b(F3, F4), LieElement::basis(F1).scale(&q(-2)));
        let x = &LieElement::basis(E3).scale(&q(3)) - &LieElement::h_plus();
        assert!(sc().bracket(&x, &x).is_zero());
    }

    #[test]
    fn antisymmetric_and_jacobi() {
        assert!(sc().antisymmetry_violations().is_empty());
        assert!(sc().jacobi_residual(H1, E1, F1).is_zero());
        assert!(sc().jacobi_residual(E3, E4, F3).is_zero());
        assert!(sc().jacobi_check().is_empty());
    }

    #[test]
    fn jacobi_detects_a_corrupted_table() {
        let mut bad = StructureConstants::literal();
        let i = E3.index() * 10 + F3.index();
        bad.table[i] = LieElement::basis(H1).scale(&q(3));
        assert!(!bad.jacobi_check().is_empty());
    }

    #[test]
    fn sl2_factors() {
        assert!(sc().sl2_isomorphism_check(KFactor::K1).is_empty());
        assert!(sc().sl2_isomorphism_check(KFactor::K2).is_empty());
        let [h, e, _] = KFactor::K1.triple();
        assert_eq!(sc().bracket(&h, &e), LieElement::basis(E1).scale(&q(2)));
        assert!(sc().bracket(&LieElement::basis(E1), &LieElement::basis(E2)).is_zero());
    }

    #[test]
    fn cartan_closure() {
        assert!(CartanSplit::default().closure_violations(sc()).is_empty());
    }

    #[test]
    fn display() {
        assert_eq!(LieElement::h_minus().to_string(), "1 * H1 - 1 * H2");
        assert_eq!(LieElement::zero().to_string(), "0");
    }
}
