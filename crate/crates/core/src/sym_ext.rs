//! `S(g) ⊗ Λ(p)` with the adjoint action of `k`, the `k`-module structure of
//! its pieces, and the invariant elements used to build a basis of the
//! invariants.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;


use crate::basis::BasisIndex::{self, *};
use crate::clifford::{k_action_ext, wedge_monomials, ExtElement, ExtMonomial};
use crate::combination::{format_terms, linear_newtype, Combination};
use crate::error::{Error, Result};
use crate::lie::LieElement;
use crate::linalg::{Echelon, SparseMatrixQ};
use crate::scalar::{q, Q};
use crate::uea::{ad_action_s, SElement, SMonomial};

pub type SEKey = (SMonomial, ExtMonomial);

/// Element of `S(g) ⊗ Λ(p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SEElement(Combination<SEKey>);

linear_newtype!(SEElement, SEKey);

impl SEElement {
    pub fn one() -> Self {
        Self::scalar(q(1))
    }

    pub fn scalar(c: Q) -> Self {
        Self::term((SMonomial::one(), ExtMonomial::one()), c)
    }

    /// `b ⊗ 1`
    pub fn s(b: BasisIndex) -> Self {
        Self::term((SMonomial::generator(b), ExtMonomial::one()), q(1))
    }

    /// `1 ⊗ b` for `b ∈ p`.
    pub fn w(b: BasisIndex) -> Self {
        let m = ExtMonomial::generator(b).unwrap_or_else(|| panic!("{b} is not in p"));
        Self::term((SMonomial::one(), m), q(1))
    }

    pub fn from_s(x: &SElement) -> Self {
        Self(x.iter().map(|(m, c)| ((*m, ExtMonomial::one()), c.clone())).collect())
    }

    pub fn from_ext(x: &ExtElement) -> Self {
        Self(x.iter().map(|(m, c)| ((SMonomial::one(), *m), c.clone())).collect())
    }

    pub fn tensor(s: &SElement, e: &ExtElement) -> Self {
        let mut acc = Combination::zero();
        for (a, ca) in s.iter() {
            for (b, cb) in e.iter() {
                acc.add_term((*a, *b), ca * cb);
            }
        }
        Self(acc)
    }

    /// Total degree of each term (S-degree plus exterior degree); `None` if
    /// zero or not homogeneous.
    pub fn grade(&self) -> Option<usize> {
        let mut it = self.iter().map(|((s, e), _)| s.degree() + e.degree());
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn max_grade(&self) -> Option<usize> {
        self.iter().map(|((s, e), _)| s.degree() + e.degree()).max()
    }

    pub fn homogeneous_part(&self, d: usize) -> Self {
        Self(self.0.filter(|(s, e)| s.degree() + e.degree() == d))
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| se_multiply(&acc, self))
    }

    /// The S-factor when every term has trivial exterior part.
    pub fn as_s(&self) -> Option<SElement> {
        self.iter()
            .all(|((_, e), _)| e.degree() == 0)
            .then(|| SElement::from_combination(self.0.map_linear(|(s, _)| Combination::term(*s, q(1)))))
    }

    /// The exterior factor when every term has trivial S part.
    pub fn as_ext(&self) -> Option<ExtElement> {
        self.iter()
            .all(|((s, _), _)| s.is_one())
            .then(|| ExtElement::from_combination(self.0.map_linear(|(_, e)| Combination::term(*e, q(1)))))
    }
}

impl Mul for &SEElement {
    type Output = SEElement;
    fn mul(self, rhs: &SEElement) -> SEElement {
        se_multiply(self, rhs)
    }
}

impl Mul for SEElement {
    type Output = SEElement;
    fn mul(self, rhs: SEElement) -> SEElement {
        se_multiply(&self, &rhs)
    }
}

impl Mul<SEElement> for i64 {
    type Output = SEElement;
    fn mul(self, rhs: SEElement) -> SEElement {
        rhs.scale(&q(self))
    }
}

pub fn se_key_text(key: &SEKey) -> String {
    let (s, e) = key;
    match (s.is_one(), e.degree() == 0) {
        (true, true) => String::new(),
        (false, true) => format!("({}) ot (1)", s.text()),
        (true, false) => format!("(1) ot ({})", e.text()),
        (false, false) => format!("({}) ot ({})", s.text(), e.text()),
    }
}

impl fmt::Display for SEElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_terms(self.iter().map(|(k, c)| (c, se_key_text(k)))))
    }
}

/// Product with commuting S-factors and wedge on the exterior factors.
pub fn se_multiply(x: &SEElement, y: &SEElement) -> SEElement {
    let mut acc = Combination::zero();
    for ((sa, ea), ca) in x.iter() {
        for ((sb, eb), cb) in y.iter() {
            if let Some((e, sign)) = wedge_monomials(*ea, *eb) {
                acc.add_term((sa.mul(sb), e), ca * cb * q(sign));
            }
        }
    }
    SEElement(acc)
}

/// Derivation action of `z ∈ k` on both factors.
pub fn ad_action_se(z: &LieElement, x: &SEElement) -> Result<SEElement> {
    if !z.in_k() {
        return Err(Error::Domain(format!("{z}")));
    }
    let mut acc = Combination::zero();
    for ((s, e), c) in x.iter() {
        let ds = ad_action_s(z, &SElement::term(*s, q(1)));
        for (sm, sc) in ds.iter() {
            acc.add_term((*sm, *e), sc * c);
        }
        let de = k_action_ext(z, &ExtElement::term(*e, q(1)))?;
        for (em, ec) in de.iter() {
            acc.add_term((*s, *em), ec * c);
        }
    }
    Ok(SEElement(acc))
}

/// `true` iff every `k` basis generator annihilates `x`.
pub fn is_invariant_se(x: &SEElement) -> bool {
    BasisIndex::K
        .iter()
        .all(|&z| ad_action_se(&LieElement::basis(z), x).map(|r| r.is_zero()).unwrap_or(false))
}

/// Highest weight `(a, b)` for `(H1, H2)`; `V(a,b) ≅ V_{a+b} ⊠ V_{a−b}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct KModuleLabel {
    pub a: i32,
    pub b: i32,
}

impl KModuleLabel {
    pub fn new(a: i32, b: i32) -> Self {
        Self { a, b }
    }

    pub fn is_genuine(&self) -> bool {
        self.a >= self.b.abs()
    }

    /// `(a+b+1)(a−b+1)`
    pub fn dim(&self) -> usize {
        ((self.a + self.b + 1) * (self.a - self.b + 1)) as usize
    }
}

impl fmt::Display for KModuleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "V({},{})", self.a, self.b)
    }
}

fn key_weight(k: &SEKey) -> (i32, i32) {
    let (a, b) = k.0.weight();
    let (c, d) = k.1.weight();
    (a + c, b + d)
}

/// Indexes the keys appearing in a family of elements.
#[derive(Default)]
struct KeyIndex {
    ids: BTreeMap<SEKey, usize>,
}

impl KeyIndex {
    fn row(&mut self, x: &SEElement) -> Vec<(usize, Q)> {
        let mut row: Vec<(usize, Q)> = x
            .iter()
            .map(|(k, c)| {
                let n = self.ids.len();
                (*self.ids.entry(*k).or_insert(n), c.clone())
            })
            .collect();
        row.sort_by_key(|e| e.0);
        row
    }
}

/// Rank of a family of elements.
pub fn rank_of(elements: &[SEElement]) -> usize {
    let mut idx = KeyIndex::default();
    let mut ech = Echelon::default();
    for e in elements {
        ech.insert(idx.row(e));
    }
    ech.rank()
}

/// Decomposes the span of `space` (which must be `k`-stable) into irreducibles.
///
/// Weight spaces are the projections onto monomials of each weight; the
/// multiplicity of `V(a,b)` is the number of independent vectors of weight
/// `(a,b)` killed by both `E1` and `E2`.
pub fn decompose_k_module(space: &[SEElement]) -> Result<Vec<KModuleLabel>> {
    let dim = rank_of(space);
    for z in BasisIndex::K {
        let images: Result<Vec<SEElement>> =
            space.iter().map(|x| ad_action_se(&LieElement::basis(z), x)).collect();
        let mut all = space.to_vec();
        all.extend(images?);
        if rank_of(&all) != dim {
            return Err(Error::NotStable(z));
        }
    }
    // weight → independent vectors of that weight
    let mut by_weight: BTreeMap<(i32, i32), Vec<SEElement>> = BTreeMap::new();
    for x in space {
        let mut parts: BTreeMap<(i32, i32), Combination<SEKey>> = BTreeMap::new();
        for (k, c) in x.iter() {
            parts.entry(key_weight(k)).or_default().add_term(*k, c.clone());
        }
        for (wt, part) in parts {
            let v = by_weight.entry(wt).or_default();
            let cand = SEElement(part);
            let mut trial = v.clone();
            trial.push(cand.clone());
            if rank_of(&trial) > v.len() {
                v.push(cand);
            }
        }
    }
    let mut labels = Vec::new();
    for (&(a, b), vecs) in &by_weight {
        // kernel of v ↦ (E1 v, E2 v) on this weight space
        let mut idx = KeyIndex::default();
        let mut columns = Vec::new();
        for v in vecs {
            let e1 = ad_action_se(&LieElement::basis(E1), v)?;
            let e2 = ad_action_se(&LieElement::basis(E2), v)?;
            let mut col = idx.row(&e1);
            // tag E2 images so they cannot collide with E1 images
            let shift = 1 << 40;
            col.extend(idx.row(&e2).into_iter().map(|(i, c)| (i + shift, c)));
            columns.push(col);
        }
        let mut ids: BTreeMap<usize, usize> = BTreeMap::new();
        for col in &columns {
            for (i, _) in col {
                let n = ids.len();
                ids.entry(*i).or_insert(n);
            }
        }
        let columns: Vec<Vec<(usize, Q)>> = columns
            .into_iter()
            .map(|c| c.into_iter().map(|(i, x)| (ids[&i], x)).collect())
            .collect();
        let m = SparseMatrixQ::from_columns(ids.len(), &columns);
        let highest = vecs.len() - m.rank_exact();
        for _ in 0..highest {
            labels.push(KModuleLabel::new(a, b));
        }
    }
    labels.sort();
    Ok(labels)
}

/// All commuting monomials of degree `n` in the given generators.
pub fn s_monomials(gens: &[BasisIndex], n: usize) -> Vec<SMonomial> {
    fn rec(gens: &[BasisIndex], n: usize, cur: SMonomial, out: &mut Vec<SMonomial>) {
        if n == 0 {
            out.push(cur);
            return;
        }
        let Some((&g, rest)) = gens.split_first() else {
            return;
        };
        for k in (0..=n).rev() {
            rec(rest, n - k, cur.with_added(g, k as i32), out);
        }
    }
    let mut out = Vec::new();
    rec(gens, n, SMonomial::one(), &mut out);
    out.sort();
    out
}

/// Monomial basis of `S^n(p)` inside `S(g) ⊗ Λ(p)`.
pub fn s_p_basis(n: usize) -> Vec<SEElement> {
    s_monomials(&BasisIndex::P, n)
        .into_iter()
        .map(|m| SEElement::term((m, ExtMonomial::one()), q(1)))
        .collect()
}

/// Monomial basis of `Λ^j(p)`.
pub fn ext_basis(j: usize) -> Vec<SEElement> {
    ExtMonomial::all()
        .filter(|m| m.degree() == j)
        .map(|m| SEElement::term((SMonomial::one(), m), q(1)))
        .collect()
}

/// The `k`-submodule generated by `seed`.
pub fn generated_submodule(seed: &SEElement) -> Result<Vec<SEElement>> {
    let mut basis = vec![seed.clone()];
    let mut frontier = vec![seed.clone()];
    while let Some(v) = frontier.pop() {
        for z in BasisIndex::K {
            let img = ad_action_se(&LieElement::basis(z), &v)?;
            if img.is_zero() {
                continue;
            }
            let mut trial = basis.clone();
            trial.push(img.clone());
            if rank_of(&trial) > basis.len() {
                basis.push(img.clone());
                frontier.push(img);
            }
        }
    }
    Ok(basis)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HarmonicReport {
    pub n: usize,
    pub dim_sn: usize,
    pub dim_harmonic: usize,
    pub dim_b_times_lower: usize,
    /// rank of the union of both summands
    pub dim_sum: usize,
    pub harmonic_labels: Vec<KModuleLabel>,
}

impl HarmonicReport {
    pub fn pass(&self) -> bool {
        self.dim_harmonic == (self.n + 1) * (self.n + 1)
            && self.dim_sum == self.dim_sn
            && self.dim_harmonic + self.dim_b_times_lower == self.dim_sn
            && self.harmonic_labels == vec![KModuleLabel::new(self.n as i32, 0)]
    }
}

/// `S^n(p) = V(n,0) ⊕ b·S^{n−2}(p)`, with `V(n,0)` generated by `E3^n`.
pub fn harmonic_decomposition_check(n: usize) -> Result<HarmonicReport> {
    let sn = s_p_basis(n);
    let seed = SEElement::s(E3).pow(n as u32);
    let harmonic = generated_submodule(&seed)?;
    let b = b_element();
    let lower: Vec<SEElement> = if n >= 2 {
        s_p_basis(n - 2).iter().map(|x| se_multiply(&b, x)).collect()
    } else {
        Vec::new()
    };
    let mut union = harmonic.clone();
    union.extend(lower.iter().cloned());
    Ok(HarmonicReport {
        n,
        dim_sn: rank_of(&sn),
        dim_harmonic: rank_of(&harmonic),
        dim_b_times_lower: rank_of(&lower),
        dim_sum: rank_of(&union),
        harmonic_labels: decompose_k_module(&harmonic)?,
    })
}

fn s(b: BasisIndex) -> SEElement {
    SEElement::s(b)
}

fn w(b: BasisIndex) -> SEElement {
    SEElement::w(b)
}

fn hp() -> SEElement {
    &s(H1) + &s(H2)
}

fn hm() -> SEElement {
    &s(H1) - &s(H2)
}

/// `b = E3F3 + E4F4`
pub fn b_element() -> SEElement {
    &(&s(E3) * &s(F3)) + &(&s(E4) * &s(F4))
}

/// The invariants of `S(g) ⊗ Λ(p)` from which the `S·T` basis is formed.
#[derive(Clone, Debug)]
pub struct STCatalog {
    pub a1: SEElement,
    pub a2: SEElement,
    pub b: SEElement,
    pub c: SEElement,
    /// `T`, in the order `1, D, d, e, f, g, h, i, j, Dd, De, Df, Dg, fg, Dh, dg`.
    pub t: Vec<(&'static str, SEElement)>,
}

impl STCatalog {
    pub const T_NAMES: [&'static str; 16] = [
        "1", "D", "d", "e", "f", "g", "h", "i", "j", "Dd", "De", "Df", "Dg", "fg", "Dh", "dg",
    ];

    pub fn t_element(&self, name: &str) -> Option<&SEElement> {
        self.t.iter().find(|(n, _)| *n == name).map(|(_, x)| x)
    }

    /// Every named element with its name: `a1, a2, b, c` then `T`.
    pub fn named(&self) -> Vec<(&'static str, &SEElement)> {
        let mut v = vec![("a1", &self.a1), ("a2", &self.a2), ("b", &self.b), ("c", &self.c)];
        v.extend(self.t.iter().map(|(n, x)| (*n, x)));
        v
    }

    /// The named element `name` among `a1, a2, b, c, D, d, …, j`.
    pub fn get(&self, name: &str) -> Option<&SEElement> {
        self.named().into_iter().find(|(n, _)| *n == name).map(|(_, x)| x)
    }
}

/// Builds the catalog from the defining formulas and checks invariance.
pub fn build_st_catalog() -> Result<STCatalog> {
    let a1 = &hp().pow(2) + &(4 * (&s(E1) * &s(F1)));
    let a2 = &hm().pow(2) + &(4 * (&s(E2) * &s(F2)));
    let b = b_element();
    let c = {
        let quartic = &(&(&(&s(E1) * &s(E2)) * &s(F3).pow(2)) - &(&(&s(E1) * &s(F2)) * &s(F4).pow(2)))
            + &(&(&(&s(F1) * &s(F2)) * &s(E3).pow(2)) - &(&(&s(F1) * &s(E2)) * &s(E4).pow(2)));
        let mid1 = &hm() * &(&(&(&s(E1) * &s(F3)) * &s(F4)) + &(&(&s(F1) * &s(E3)) * &s(E4)));
        let mid2 = &hp() * &(&(&(&s(F2) * &s(E3)) * &s(F4)) + &(&(&s(E2) * &s(F3)) * &s(E4)));
        let last = &(&hm() * &hp()) * &(&(&s(E3) * &s(F3)) - &(&s(E4) * &s(F4)));
        &(&(&(2 * quartic) - &(2 * mid1)) - &(2 * mid2)) - &last
    };
    let dirac = &(&(&s(E3) * &w(F3)) + &(&s(E4) * &w(F4))) + &(&(&s(F3) * &w(E3)) + &(&s(F4) * &w(E4)));
    let d = &(&(2 * (&s(E1) * &(&w(F3) * &w(F4))))
        - &(&hp() * &(&(&w(E3) * &w(F3)) + &(&w(E4) * &w(F4)))))
        - &(2 * (&s(F1) * &(&w(E3) * &w(E4))));
    let e = &(&(2 * (&s(E2) * &(&w(E4) * &w(F3))))
        + &(&hm() * &(&(&w(E3) * &w(F3)) - &(&w(E4) * &w(F4)))))
        + &(2 * (&s(F2) * &(&w(E3) * &w(F4))));
    let f = {
        let t1 = 2 * (&(&(&s(E1) * &s(F3)) * &w(F4)) - &(&(&s(E1) * &s(F4)) * &w(F3)));
        let inner = &(&(&(&s(E3) * &w(F3)) + &(&s(E4) * &w(F4))) - &(&s(F3) * &w(E3))) - &(&s(F4) * &w(E4));
        let t2 = &hp() * &inner;
        let t3 = 2 * (&(&(&s(F1) * &s(E3)) * &w(E4)) - &(&(&s(F1) * &s(E4)) * &w(E3)));
        &(&t1 - &t2) - &t3
    };
    let g = {
        let t1 = -2 * (&(&(&s(E2) * &s(F3)) * &w(E4)) - &(&(&s(E2) * &s(E4)) * &w(F3)));
        let inner = &(&(&(&s(E3) * &w(F3)) - &(&s(E4) * &w(F4))) - &(&s(F3) * &w(E3))) + &(&s(F4) * &w(E4));
        let t2 = &hm() * &inner;
        let t3 = 2 * (&(&(&s(F2) * &s(E3)) * &w(F4)) - &(&(&s(F2) * &s(F4)) * &w(E3)));
        &(&t1 + &t2) + &t3
    };
    let h = {
        let t1 = 2 * (&(&(&(&(&s(E1) * &s(E2)) * &s(F3)) * &w(F3)) - &(&(&(&s(E1) * &s(F2)) * &s(F4)) * &w(F4)))
            + &(&(&(&(&s(F1) * &s(F2)) * &s(E3)) * &w(E3)) - &(&(&(&s(F1) * &s(E2)) * &s(E4)) * &w(E4))));
        let t2 = &hm()
            * &(&(&(&(&s(E1) * &s(F3)) * &w(F4)) + &(&(&s(E1) * &s(F4)) * &w(F3)))
                + &(&(&(&s(F1) * &s(E3)) * &w(E4)) + &(&(&s(F1) * &s(E4)) * &w(E3))));
        let t3 = &hp()
            * &(&(&(&(&s(F2) * &s(E3)) * &w(F4)) + &(&(&s(F2) * &s(F4)) * &w(E3)))
                + &(&(&(&s(E2) * &s(F3)) * &w(E4)) + &(&(&s(E2) * &s(E4)) * &w(F3))));
        let t4 = (&(&hm() * &hp())
            * &(&(&(&(&s(E3) * &w(F3)) + &(&s(F3) * &w(E3))) - &(&s(E4) * &w(F4))) - &(&s(F4) * &w(E4))))
            .scale(&crate::scalar::qf(1, 2));
        &(&(&t1 - &t2) - &t3) - &t4
    };
    let i = &(&(&w(E3) * &w(E4)) * &w(F3)) * &w(F4);
    let j = &(&(&(&s(E3) * &(&(&w(E4) * &w(F3)) * &w(F4))) - &(&s(E4) * &(&(&w(E3) * &w(F3)) * &w(F4))))
        + &(&s(F3) * &(&(&w(E3) * &w(E4)) * &w(F4))))
        - &(&s(F4) * &(&(&w(E3) * &w(E4)) * &w(F3)));
    let t = vec![
        ("1", SEElement::one()),
        ("D", dirac.clone()),
        ("d", d.clone()),
        ("e", e.clone()),
        ("f", f.clone()),
        ("g", g.clone()),
        ("h", h.clone()),
        ("i", i),
        ("j", j),
        ("Dd", &dirac * &d),
        ("De", &dirac * &e),
        ("Df", &dirac * &f),
        ("Dg", &dirac * &g),
        ("fg", &f * &g),
        ("Dh", &dirac * &h),
        ("dg", &d * &g),
    ];
    let cat = STCatalog { a1, a2, b, c, t };
    for (name, x) in cat.named() {
        for z in BasisIndex::K {
            let r = ad_action_se(&LieElement::basis(z), x)?;
            if !r.is_zero() {
                return Err(Error::Invariance {
                    element: name.to_string(),
                    generator: z,
                    terms: r.len(),
                });
            }
        }
    }
    Ok(cat)
}

/// Every element of `{a1, a2, b, c}`-monomials times `T` of total degree `n`,
/// labelled by its exponents and `T` member.
pub fn st_products(cat: &STCatalog, n: usize) -> Vec<(String, SEElement)> {
    let mut out = Vec::new();
    for (tname, t) in &cat.t {
        let Some(dt) = t.grade() else { continue };
        if dt > n {
            continue;
        }
        let rest = n - dt;
        if !rest.is_multiple_of(2) {
            continue;
        }
        for n4 in 0..=rest / 4 {
            let r = (rest - 4 * n4) / 2;
            for n1 in 0..=r {
                for n2 in 0..=r - n1 {
                    let n3 = r - n1 - n2;
                    let coeff = &(&(&cat.a1.pow(n1 as u32) * &cat.a2.pow(n2 as u32)) * &cat.b.pow(n3 as u32))
                        * &cat.c.pow(n4 as u32);
                    let label = format!("a1^{n1} a2^{n2} b^{n3} c^{n4} · {tname}");
                    out.push((label, &coeff * t));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exterior_square_vanishes() {
        let x = &w(E3) * &w(E4);
        let y = &w(E3) * &w(F3);
        assert!(se_multiply(&x, &y).is_zero());
    }

    #[test]
    fn b_squared_is_commutative_square() {
        let b = b_element();
        let e3f3 = &s(E3) * &s(F3);
        let e4f4 = &s(E4) * &s(F4);
        let expected = &(&(&e3f3 * &e3f3) + &(2 * (&e3f3 * &e4f4))) + &(&e4f4 * &e4f4);
        assert_eq!(&b * &b, expected);
    }

    #[test]
    fn graded_commutativity() {
        let x = &s(H1) * &w(E3);
        let y = &(&s(F1) * &w(F3)) * &w(F4);
        let z = &s(E2) * &w(E4);
        assert_eq!(&x * &z, -(&z * &x));
        assert_eq!(&x * &y, &y * &x);
    }

    #[test]
    fn ad_examples() {
        let cat = build_st_catalog().unwrap();
        assert!(ad_action_se(&LieElement::basis(E1), &cat.a1).unwrap().is_zero());
        for z in BasisIndex::K {
            assert!(ad_action_se(&LieElement::basis(z), &cat.b).unwrap().is_zero());
        }
        assert_eq!(ad_action_se(&LieElement::basis(H1), &s(E3)).unwrap(), s(E3));
        assert!(ad_action_se(&LieElement::basis(E3), &s(E3)).is_err());
    }

    #[test]
    fn lambda_decomposition() {
        assert_eq!(decompose_k_module(&ext_basis(0)).unwrap(), vec![KModuleLabel::new(0, 0)]);
        assert_eq!(decompose_k_module(&ext_basis(1)).unwrap(), vec![KModuleLabel::new(1, 0)]);
        assert_eq!(
            decompose_k_module(&ext_basis(2)).unwrap(),
            vec![KModuleLabel::new(1, -1), KModuleLabel::new(1, 1)]
        );
        assert_eq!(decompose_k_module(&ext_basis(3)).unwrap(), vec![KModuleLabel::new(1, 0)]);
        assert_eq!(decompose_k_module(&ext_basis(4)).unwrap(), vec![KModuleLabel::new(0, 0)]);
        assert_eq!(decompose_k_module(&s_p_basis(1)).unwrap(), vec![KModuleLabel::new(1, 0)]);
    }

    #[test]
    fn listed_lambda2_submodules() {
        let v11 = vec![&w(E3) * &w(E4), &(&w(E3) * &w(F3)) + &(&w(E4) * &w(F4)), &w(F3) * &w(F4)];
        assert_eq!(decompose_k_module(&v11).unwrap(), vec![KModuleLabel::new(1, 1)]);
        let v1m1 = vec![&w(E3) * &w(F4), &(&w(E3) * &w(F3)) - &(&w(E4) * &w(F4)), &w(E4) * &w(F3)];
        assert_eq!(decompose_k_module(&v1m1).unwrap(), vec![KModuleLabel::new(1, -1)]);
    }

    #[test]
    fn unstable_space_is_rejected() {
        assert!(matches!(decompose_k_module(&[w(E3)]), Err(Error::NotStable(_))));
    }

    #[test]
    fn harmonic_examples() {
        let r0 = harmonic_decomposition_check(0).unwrap();
        assert!(r0.pass());
        let r2 = harmonic_decomposition_check(2).unwrap();
        assert_eq!((r2.dim_sn, r2.dim_harmonic, r2.dim_b_times_lower), (10, 9, 1));
        assert!(r2.pass());
        let r3 = harmonic_decomposition_check(3).unwrap();
        assert_eq!((r3.dim_sn, r3.dim_harmonic, r3.dim_b_times_lower), (20, 16, 4));
        assert!(r3.pass());
    }

    #[test]
    fn catalog_degrees() {
        let cat = build_st_catalog().unwrap();
        let degrees: Vec<usize> = cat.t.iter().map(|(_, x)| x.grade().unwrap()).collect();
        assert_eq!(degrees, vec![0, 2, 3, 3, 3, 3, 4, 4, 4, 5, 5, 5, 5, 6, 6, 6]);
        assert_eq!(cat.c.grade(), Some(4));
        let d = cat.t_element("d").unwrap();
        assert_eq!(d.coeff(&(SMonomial::generator(E1), ExtMonomial(0b1100))), q(2));
        assert_eq!(d.len(), 6);
    }
}
