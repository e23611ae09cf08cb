//! The Clifford algebra `C(p)` of the four-dimensional `p`, the exterior
//! algebra `Λ(p)`, the Chevalley map between them, and the map `α : k → C(p)`.
//!
//! Monomials are bit masks over `(E3, E4, F3, F4)`; bit `i` is `P[i]`. A mask
//! denotes the ordered product of its generators.

use std::fmt;

use num_traits::{One, Zero};

use crate::basis::BasisIndex;
use crate::combination::{format_terms, linear_newtype, Combination};
use crate::error::{Error, Result};
use crate::lie::{LieElement, StructureConstants};
use crate::linalg::solve_dense;
use crate::matrix_oracle;
use crate::scalar::{q, Q};

macro_rules! mask_monomial {
    ($name:ident, $sep:expr) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
        pub struct $name(pub u8);

        impl $name {
            pub fn one() -> Self {
                Self(0)
            }

            pub fn generator(b: BasisIndex) -> Option<Self> {
                b.p_slot().map(|s| Self(1 << s))
            }

            pub fn top() -> Self {
                Self(0b1111)
            }

            pub fn degree(&self) -> usize {
                self.0.count_ones() as usize
            }

            pub fn slots(&self) -> Vec<usize> {
                (0..4).filter(|i| self.0 & (1 << i) != 0).collect()
            }

            pub fn generators(&self) -> Vec<BasisIndex> {
                self.slots().into_iter().map(BasisIndex::from_p_slot).collect()
            }

            pub fn weight(&self) -> (i32, i32) {
                self.generators().iter().fold((0, 0), |w, b| {
                    let (a, c) = b.weight();
                    (w.0 + a, w.1 + c)
                })
            }

            pub fn all() -> impl Iterator<Item = Self> {
                (0u8..16).map(Self)
            }

            /// `E3 * F3` style text; empty for the identity.
            pub fn text(&self) -> String {
                self.generators()
                    .iter()
                    .map(|b| b.name())
                    .collect::<Vec<_>>()
                    .join($sep)
            }

            /// Four-character bit string in `E3 E4 F3 F4` order.
            pub fn bits(&self) -> String {
                (0..4)
                    .map(|i| if self.0 & (1 << i) != 0 { '1' } else { '0' })
                    .collect()
            }

            pub fn from_bits(s: &str) -> Option<Self> {
                if s.len() != 4 {
                    return None;
                }
                let mut m = 0u8;
                for (i, ch) in s.chars().enumerate() {
                    match ch {
                        '1' => m |= 1 << i,
                        '0' => {}
                        _ => return None,
                    }
                }
                Some(Self(m))
            }
        }

        impl Ord for $name {
            fn cmp(&self, other: &Self) -> std::cmp::Ordering {
                // graded, then the same lexicographic rule as PBW monomials
                let key = |m: &Self| {
                    let mut e = [0u8; 4];
                    for (i, x) in e.iter_mut().enumerate() {
                        *x = (m.0 >> i) & 1;
                    }
                    e
                };
                self.degree()
                    .cmp(&other.degree())
                    .then_with(|| key(other).cmp(&key(self)))
            }
        }

        impl PartialOrd for $name {
            fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
                Some(self.cmp(other))
            }
        }
    };
}

mask_monomial!(CliffordMonomial, " * ");
mask_monomial!(ExtMonomial, " ^ ");

/// Sign convention and scale of the form defining the Clifford relation
/// `vw + wv = 2·sign·scale·B(v, w)`, where `B` is the trace form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Convention {
    pub sign: i8,
    pub scale: Q,
}

impl Default for Convention {
    fn default() -> Self {
        Self::literal(1)
    }
}

impl Convention {
    /// Trace form as is, with the given sign.
    pub fn literal(sign: i8) -> Self {
        assert!(sign == 1 || sign == -1, "sign must be ±1");
        Self { sign, scale: q(1) }
    }

    pub fn new(sign: i8, scale: Q) -> Self {
        assert!(sign == 1 || sign == -1, "sign must be ±1");
        assert!(!scale.is_zero(), "scale must be nonzero");
        Self { sign, scale }
    }

    /// Trace form rescaled so that `B(E3, F3) = 1`, making the printed Dirac
    /// element the dual-basis sum.
    pub fn dual_normalized(sign: i8) -> Self {
        Self::new(sign, crate::scalar::qf(1, 4))
    }

    pub fn label(&self) -> String {
        let s = if self.sign > 0 { "+1" } else { "-1" };
        if self.scale.is_one() {
            s.to_string()
        } else {
            format!("{s} scale={}", crate::scalar::fmt_q(&self.scale))
        }
    }
}

/// Bilinear form on `p` with precomputed Clifford multiplication table.
#[derive(Clone, Debug)]
pub struct PForm {
    /// Trace-form Gram matrix on `(E3, E4, F3, F4)`.
    pub gram: [[Q; 4]; 4],
    pub convention: Convention,
    /// `vw + wv = 2·sym[v][w]`
    sym: [[Q; 4]; 4],
    table: Vec<Combination<CliffordMonomial>>,
}

impl PForm {
    pub fn new(convention: Convention) -> Self {
        Self::with_gram(matrix_oracle::p_gram(), convention)
    }

    pub fn with_gram(gram: [[Q; 4]; 4], convention: Convention) -> Self {
        let factor = q(convention.sign as i64) * &convention.scale;
        let sym = gram.clone().map(|row| row.map(|x| x * &factor));
        let mut form = Self {
            gram,
            convention,
            sym,
            table: Vec::new(),
        };
        let mut table = Vec::with_capacity(256);
        for a in CliffordMonomial::all() {
            for b in CliffordMonomial::all() {
                let mut acc = Combination::term(a, q(1));
                for s in b.slots() {
                    acc = form.times_slot(&acc, s);
                }
                table.push(acc);
            }
        }
        form.table = table;
        form
    }

    pub fn sign(&self) -> i8 {
        self.convention.sign
    }

    /// `½(vw + wv)` for basis vectors of `p`.
    pub fn symmetric_part(&self, v: usize, w: usize) -> &Q {
        &self.sym[v][w]
    }

    fn mono_times_slot(&self, m: CliffordMonomial, v: usize) -> Combination<CliffordMonomial> {
        let Some(&last) = m.slots().last() else {
            return Combination::term(CliffordMonomial(1 << v), q(1));
        };
        let m0 = CliffordMonomial(m.0 & !(1 << last));
        if v > last {
            Combination::term(CliffordMonomial(m.0 | (1 << v)), q(1))
        } else if v == last {
            Combination::term(m0, self.sym[v][v].clone())
        } else {
            // m0 · last · v = −(m0 · v) · last + 2⟨last, v⟩ m0
            let head = self.mono_times_slot(m0, v);
            let mut acc = self.times_slot(&head, last).scale(&q(-1));
            acc.add_term(m0, q(2) * &self.sym[last][v]);
            acc
        }
    }

    fn times_slot(
        &self,
        x: &Combination<CliffordMonomial>,
        v: usize,
    ) -> Combination<CliffordMonomial> {
        let mut acc = Combination::zero();
        for (m, c) in x.iter() {
            acc.add_scaled(&self.mono_times_slot(*m, v), c);
        }
        acc
    }

    pub fn monomial_product(
        &self,
        a: CliffordMonomial,
        b: CliffordMonomial,
    ) -> &Combination<CliffordMonomial> {
        &self.table[(a.0 as usize) * 16 + b.0 as usize]
    }
}

/// Element of `C(p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CElement(Combination<CliffordMonomial>);

linear_newtype!(CElement, CliffordMonomial);

/// Element of `Λ(p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExtElement(Combination<ExtMonomial>);

linear_newtype!(ExtElement, ExtMonomial);

impl CElement {
    pub fn one() -> Self {
        Self::scalar(q(1))
    }

    pub fn scalar(c: Q) -> Self {
        Self::term(CliffordMonomial::one(), c)
    }

    /// Degree-one element for a `p` generator.
    pub fn generator(b: BasisIndex) -> Option<Self> {
        CliffordMonomial::generator(b).map(|m| Self::term(m, q(1)))
    }

    /// Embeds an element of `p`.
    pub fn from_p(v: &LieElement) -> Result<Self> {
        let mut acc = Combination::zero();
        for (b, c) in v.iter() {
            let m = CliffordMonomial::generator(*b)
                .ok_or_else(|| Error::Domain(format!("{b} is not in p")))?;
            acc.add_term(m, c.clone());
        }
        Ok(Self(acc))
    }

    pub fn degree(&self) -> Option<usize> {
        self.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn mul(&self, form: &PForm, rhs: &CElement) -> CElement {
        cl_multiply(form, self, rhs)
    }

    /// Component of exact degree `d`, read in `Λ(p)`.
    pub fn symbol(&self, d: usize) -> ExtElement {
        ExtElement(
            self.iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (ExtMonomial(m.0), c.clone()))
                .collect(),
        )
    }
}

impl fmt::Display for CElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_terms(self.iter().map(|(m, c)| (c, m.text()))))
    }
}

impl ExtElement {
    pub fn one() -> Self {
        Self::term(ExtMonomial::one(), q(1))
    }

    pub fn generator(b: BasisIndex) -> Option<Self> {
        ExtMonomial::generator(b).map(|m| Self::term(m, q(1)))
    }

    pub fn from_p(v: &LieElement) -> Result<Self> {
        let mut acc = Combination::zero();
        for (b, c) in v.iter() {
            let m = ExtMonomial::generator(*b)
                .ok_or_else(|| Error::Domain(format!("{b} is not in p")))?;
            acc.add_term(m, c.clone());
        }
        Ok(Self(acc))
    }

    pub fn degree(&self) -> Option<usize> {
        self.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn wedge(&self, rhs: &ExtElement) -> ExtElement {
        let mut acc = Combination::zero();
        for (a, ca) in self.iter() {
            for (b, cb) in rhs.iter() {
                if let Some((m, s)) = wedge_monomials(*a, *b) {
                    acc.add_term(m, ca * cb * q(s));
                }
            }
        }
        ExtElement(acc)
    }
}

impl fmt::Display for ExtElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_terms(self.iter().map(|(m, c)| (c, m.text()))))
    }
}

/// `a ∧ b = sign · (a ∪ b)`, or `None` when they share a factor.
pub fn wedge_monomials(a: ExtMonomial, b: ExtMonomial) -> Option<(ExtMonomial, i64)> {
    if a.0 & b.0 != 0 {
        return None;
    }
    let mut inversions = 0;
    for i in a.slots() {
        for j in b.slots() {
            if i > j {
                inversions += 1;
            }
        }
    }
    Some((ExtMonomial(a.0 | b.0), if inversions % 2 == 0 { 1 } else { -1 }))
}

pub fn cl_multiply(form: &PForm, x: &CElement, y: &CElement) -> CElement {
    let mut acc = Combination::zero();
    for (a, ca) in x.iter() {
        for (b, cb) in y.iter() {
            acc.add_scaled(form.monomial_product(*a, *b), &(ca * cb));
        }
    }
    CElement(acc)
}

fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<(Vec<usize>, i64)>) {
        if prefix.len() == used.len() {
            let mut inv = 0;
            for i in 0..prefix.len() {
                for j in i + 1..prefix.len() {
                    if prefix[i] > prefix[j] {
                        inv += 1;
                    }
                }
            }
            out.push((prefix.clone(), if inv % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Chevalley map on one monomial: the signed average of all orderings.
pub fn chevalley_monomial(form: &PForm, m: ExtMonomial) -> CElement {
    let slots = m.slots();
    let perms = permutations(slots.len());
    let n = perms.len();
    let mut acc = CElement::zero();
    for (perm, sign) in perms {
        let mut word = CElement::one();
        for &i in &perm {
            let g = CElement::term(CliffordMonomial(1 << slots[i]), q(1));
            word = cl_multiply(form, &word, &g);
        }
        acc += &word.scale(&q(sign));
    }
    acc.scale(&(Q::one() / q(n as i64)))
}

/// The Chevalley map `τ : Λ(p) → C(p)`.
pub fn chevalley(form: &PForm, x: &ExtElement) -> CElement {
    let mut acc = CElement::zero();
    for (m, c) in x.iter() {
        acc += &chevalley_monomial(form, *m).scale(c);
    }
    acc
}

fn require_k(z: &LieElement) -> Result<()> {
    if z.in_k() {
        Ok(())
    } else {
        Err(Error::Domain(format!("{z}")))
    }
}

/// `[z, v]` for a `p` generator, as a vector of coefficients over `p` slots.
fn bracket_on_slot(z: &LieElement, slot: usize) -> LieElement {
    StructureConstants::global().bracket(z, &LieElement::basis(BasisIndex::from_p_slot(slot)))
}

/// The derivation of `C(p)` extending `ad(z)` on `p`.
pub fn k_action_c(form: &PForm, z: &LieElement, x: &CElement) -> Result<CElement> {
    require_k(z)?;
    let mut acc = CElement::zero();
    for (m, c) in x.iter() {
        let slots = m.slots();
        for i in 0..slots.len() {
            let mut word = CElement::one();
            for (j, &s) in slots.iter().enumerate() {
                let factor = if i == j {
                    CElement::from_p(&bracket_on_slot(z, s))?
                } else {
                    CElement::term(CliffordMonomial(1 << s), q(1))
                };
                word = cl_multiply(form, &word, &factor);
            }
            acc += &word.scale(c);
        }
    }
    Ok(acc)
}

/// The derivation of `Λ(p)` extending `ad(z)` on `p`.
pub fn k_action_ext(z: &LieElement, x: &ExtElement) -> Result<ExtElement> {
    require_k(z)?;
    let mut acc = ExtElement::zero();
    for (m, c) in x.iter() {
        let slots = m.slots();
        for i in 0..slots.len() {
            let mut word = ExtElement::one();
            for (j, &s) in slots.iter().enumerate() {
                let factor = if i == j {
                    ExtElement::from_p(&bracket_on_slot(z, s))?
                } else {
                    ExtElement::term(ExtMonomial(1 << s), q(1))
                };
                word = word.wedge(&factor);
            }
            acc += &word.scale(c);
        }
    }
    Ok(acc)
}

/// `α(z)`: the purely quadratic element with `[α(z), v] = [z, v]` for all `v ∈ p`.
pub fn alpha(form: &PForm, z: &LieElement) -> Result<CElement> {
    require_k(z)?;
    // Unknowns range over the Chevalley image of Λ²p, which fixes the scalar part.
    let unknowns: Vec<CElement> = ExtMonomial::all()
        .filter(|m| m.degree() == 2)
        .map(|m| chevalley_monomial(form, m))
        .collect();
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for v in 0..4 {
        let vm = CElement::term(CliffordMonomial(1 << v), q(1));
        let target = CElement::from_p(&bracket_on_slot(z, v))?;
        let comms: Vec<CElement> = unknowns
            .iter()
            .map(|me| &cl_multiply(form, me, &vm) - &cl_multiply(form, &vm, me))
            .collect();
        for key in CliffordMonomial::all() {
            rows.push(comms.iter().map(|c| c.coeff(&key)).collect::<Vec<Q>>());
            rhs.push(target.coeff(&key));
        }
    }
    let sol = solve_dense(&rows, &rhs).ok_or_else(|| Error::Solve(format!("alpha({z})")))?;
    let mut acc = CElement::zero();
    for (u, c) in unknowns.iter().zip(sol) {
        acc += &u.scale(&c);
    }
    Ok(acc)
}
