//! The enveloping algebra `U(g)` in PBW normal form, the symmetric algebra
//! `S(g)`, and the symmetrisation map between them.
//!
//! Straightening rewrites an out-of-order adjacent pair `g_j g_i` (`i < j`) as
//! `g_i g_j + [g_j, g_i]`. Products of a monomial by a generator and of two
//! monomials are memoised per thread.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::rc::Rc;

use num_bigint::BigInt;
use num_traits::One;

use crate::basis::BasisIndex;
use crate::combination::{format_terms, linear_newtype, Combination};
use crate::lie::{LieElement, StructureConstants};
use crate::scalar::{q, Q};

/// Exponent vector over the ordered basis. Ordered graded first, then
/// lexicographically with `H1 > H2 > … > F4` inside a degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct PbwMonomial(pub [u8; 10]);

/// Same shape as [`PbwMonomial`], read as a commuting monomial in `S(g)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct SMonomial(pub [u8; 10]);

macro_rules! exponent_monomial {
    ($name:ident) => {
        impl $name {
            pub fn one() -> Self {
                Self([0; 10])
            }

            pub fn generator(b: BasisIndex) -> Self {
                let mut e = [0; 10];
                e[b.index()] = 1;
                Self(e)
            }

            pub fn exponents(&self) -> &[u8; 10] {
                &self.0
            }

            pub fn exponent(&self, b: BasisIndex) -> u8 {
                self.0[b.index()]
            }

            pub fn degree(&self) -> usize {
                self.0.iter().map(|&e| e as usize).sum()
            }

            pub fn is_one(&self) -> bool {
                self.0 == [0; 10]
            }

            pub fn pow(&self, k: u8) -> Self {
                Self(self.0.map(|e| e * k))
            }

            /// Largest generator present.
            pub fn last(&self) -> Option<BasisIndex> {
                (0..10).rev().find(|&i| self.0[i] > 0).map(BasisIndex::from_index)
            }

            /// Generators in nondecreasing order, with repetition.
            pub fn word(&self) -> Vec<BasisIndex> {
                let mut w = Vec::with_capacity(self.degree());
                for b in BasisIndex::ALL {
                    for _ in 0..self.0[b.index()] {
                        w.push(b);
                    }
                }
                w
            }

            pub fn with_added(&self, b: BasisIndex, k: i32) -> Self {
                let mut e = self.0;
                e[b.index()] = (e[b.index()] as i32 + k) as u8;
                Self(e)
            }

            /// Sum of generator weights under `(ad H1, ad H2)`.
            pub fn weight(&self) -> (i32, i32) {
                let mut w = (0, 0);
                for b in BasisIndex::ALL {
                    let (a, c) = b.weight();
                    let e = self.0[b.index()] as i32;
                    w.0 += a * e;
                    w.1 += c * e;
                }
                w
            }

            /// `H1^2 * E1` style text; empty for the identity.
            pub fn text(&self) -> String {
                let mut parts = Vec::new();
                for b in BasisIndex::ALL {
                    match self.0[b.index()] {
                        0 => {}
                        1 => parts.push(b.name().to_string()),
                        e => parts.push(format!("{}^{}", b.name(), e)),
                    }
                }
                parts.join(" * ")
            }
        }

        impl Ord for $name {
            fn cmp(&self, other: &Self) -> Ordering {
                self.degree()
                    .cmp(&other.degree())
                    .then_with(|| other.0.cmp(&self.0))
            }
        }

        impl PartialOrd for $name {
            fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
                Some(self.cmp(other))
            }
        }
    };
}

exponent_monomial!(PbwMonomial);
exponent_monomial!(SMonomial);

impl SMonomial {
    pub fn mul(&self, o: &Self) -> Self {
        let mut e = self.0;
        for i in 0..10 {
            e[i] += o.0[i];
        }
        Self(e)
    }

    /// Number of distinct words on this multiset: `n! / Π e_i!`.
    pub fn distinct_orderings(&self) -> BigInt {
        let mut r = factorial(self.degree());
        for &e in &self.0 {
            r /= factorial(e as usize);
        }
        r
    }
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |a, k| a * BigInt::from(k))
}

/// Element of `U(g)` in PBW normal form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UElement(Combination<PbwMonomial>);

linear_newtype!(UElement, PbwMonomial);

/// Element of `S(g)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SElement(Combination<SMonomial>);

linear_newtype!(SElement, SMonomial);

type Shared = Rc<Combination<PbwMonomial>>;

thread_local! {
    static GEN_CACHE: RefCell<HashMap<(PbwMonomial, BasisIndex), Shared>> = RefCell::new(HashMap::new());
    static MONO_CACHE: RefCell<HashMap<(PbwMonomial, PbwMonomial), Shared>> = RefCell::new(HashMap::new());
    static SIGMA_CACHE: RefCell<HashMap<SMonomial, Shared>> = RefCell::new(HashMap::new());
}

/// `m · x` in normal form.
fn mono_times_gen(m: &PbwMonomial, x: BasisIndex) -> Shared {
    if let Some(hit) = GEN_CACHE.with(|c| c.borrow().get(&(*m, x)).cloned()) {
        return hit;
    }
    let out = match m.last() {
        Some(last) if x < last => {
            // m = m0 · last, and last · x = x · last + [last, x]
            let m0 = m.with_added(last, -1);
            let head = mono_times_gen(&m0, x);
            let mut acc = Combination::zero();
            for (mono, c) in head.iter() {
                acc.add_scaled(&mono_times_gen(mono, last), c);
            }
            let br = StructureConstants::global().bracket_basis(last, x);
            for (b, c) in br.iter() {
                acc.add_scaled(&mono_times_gen(&m0, *b), c);
            }
            acc
        }
        _ => Combination::term(m.with_added(x, 1), q(1)),
    };
    let out = Rc::new(out);
    GEN_CACHE.with(|c| c.borrow_mut().insert((*m, x), out.clone()));
    out
}

fn elem_times_gen(x: &Combination<PbwMonomial>, g: BasisIndex) -> Combination<PbwMonomial> {
    let mut acc = Combination::zero();
    for (mono, c) in x.iter() {
        acc.add_scaled(&mono_times_gen(mono, g), c);
    }
    acc
}

fn mono_times_mono(a: &PbwMonomial, b: &PbwMonomial) -> Shared {
    if b.is_one() {
        return Rc::new(Combination::term(*a, q(1)));
    }
    if let Some(hit) = MONO_CACHE.with(|c| c.borrow().get(&(*a, *b)).cloned()) {
        return hit;
    }
    let mut acc = Combination::term(*a, q(1));
    for g in b.word() {
        acc = elem_times_gen(&acc, g);
    }
    let out = Rc::new(acc);
    MONO_CACHE.with(|c| c.borrow_mut().insert((*a, *b), out.clone()));
    out
}

/// Shared handle to the memoised product of two PBW monomials.
pub(crate) fn pbw_product_shared(a: &PbwMonomial, b: &PbwMonomial) -> Rc<Combination<PbwMonomial>> {
    mono_times_mono(a, b)
}

/// Product of two PBW monomials.
pub fn pbw_product(a: &PbwMonomial, b: &PbwMonomial) -> Combination<PbwMonomial> {
    (*mono_times_mono(a, b)).clone()
}

impl UElement {
    pub fn one() -> Self {
        Self::scalar(q(1))
    }

    pub fn scalar(c: Q) -> Self {
        Self::term(PbwMonomial::one(), c)
    }

    pub fn generator(b: BasisIndex) -> Self {
        Self::term(PbwMonomial::generator(b), q(1))
    }

    pub fn from_lie(z: &LieElement) -> Self {
        Self(z.combination().map_linear(|b| Combination::term(PbwMonomial::generator(*b), q(1))))
    }

    /// Filtration degree; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn mul(&self, rhs: &UElement) -> UElement {
        u_multiply(self, rhs)
    }

    pub fn pow(&self, k: u32) -> UElement {
        let mut out = UElement::one();
        for _ in 0..k {
            out = u_multiply(&out, self);
        }
        out
    }

    /// Component of exact filtration degree `d`, read in `S(g)`.
    pub fn symbol(&self, d: usize) -> SElement {
        SElement(
            self.iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (SMonomial(m.0), c.clone()))
                .collect(),
        )
    }

    /// Leading symbol in `gr U(g) = S(g)`.
    pub fn leading_symbol(&self) -> SElement {
        match self.degree() {
            Some(d) => self.symbol(d),
            None => SElement::zero(),
        }
    }
}

impl fmt::Display for UElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_terms(self.iter().map(|(m, c)| (c, m.text()))))
    }
}

impl SElement {
    pub fn one() -> Self {
        Self::term(SMonomial::one(), q(1))
    }

    pub fn generator(b: BasisIndex) -> Self {
        Self::term(SMonomial::generator(b), q(1))
    }

    pub fn from_lie(z: &LieElement) -> Self {
        Self(z.combination().map_linear(|b| Combination::term(SMonomial::generator(*b), q(1))))
    }

    pub fn degree(&self) -> Option<usize> {
        self.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn mul(&self, rhs: &SElement) -> SElement {
        let mut acc = Combination::zero();
        for (a, ca) in self.iter() {
            for (b, cb) in rhs.iter() {
                acc.add_term(a.mul(b), ca * cb);
            }
        }
        SElement(acc)
    }

    pub fn pow(&self, k: u32) -> SElement {
        (0..k).fold(SElement::one(), |acc, _| acc.mul(self))
    }

    /// Reads each commuting monomial as the ordered PBW monomial with the same
    /// exponents. Not an algebra map; used to compare leading symbols.
    pub fn as_ordered_u(&self) -> UElement {
        UElement(self.iter().map(|(m, c)| (PbwMonomial(m.0), c.clone())).collect())
    }
}

impl fmt::Display for SElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_terms(self.iter().map(|(m, c)| (c, m.text()))))
    }
}

/// Associative product in PBW normal form.
pub fn u_multiply(x: &UElement, y: &UElement) -> UElement {
    let mut acc = Combination::zero();
    for (a, ca) in x.iter() {
        for (b, cb) in y.iter() {
            acc.add_scaled(&mono_times_mono(a, b), &(ca * cb));
        }
    }
    UElement(acc)
}

/// `σ` on one commuting monomial: the average over its distinct orderings.
pub fn symmetrize_monomial(m: &SMonomial) -> UElement {
    if let Some(hit) = SIGMA_CACHE.with(|c| c.borrow().get(m).cloned()) {
        return UElement((*hit).clone());
    }
    // Depth-first over distinct words; prefixes share their products.
    fn walk(remaining: &mut [u8; 10], prefix: &Combination<PbwMonomial>, acc: &mut Combination<PbwMonomial>) {
        if remaining.iter().all(|&e| e == 0) {
            *acc += prefix;
            return;
        }
        for i in 0..10 {
            if remaining[i] == 0 {
                continue;
            }
            remaining[i] -= 1;
            let next = elem_times_gen(prefix, BasisIndex::from_index(i));
            walk(remaining, &next, acc);
            remaining[i] += 1;
        }
    }
    let mut acc = Combination::zero();
    let mut rem = m.0;
    walk(&mut rem, &Combination::term(PbwMonomial::one(), q(1)), &mut acc);
    let count = Q::from_integer(m.distinct_orderings());
    let out = acc.scale(&(Q::one() / count));
    SIGMA_CACHE.with(|c| c.borrow_mut().insert(*m, Rc::new(out.clone())));
    UElement(out)
}

/// The symmetrisation map `σ : S(g) → U(g)`.
pub fn symmetrize(x: &SElement) -> UElement {
    let mut acc = Combination::zero();
    for (m, c) in x.iter() {
        acc.add_scaled(symmetrize_monomial(m).combination(), c);
    }
    UElement(acc)
}

/// `ad(z)(x) = zx − xz`.
pub fn ad_action_u(z: &LieElement, x: &UElement) -> UElement {
    let zu = UElement::from_lie(z);
    &u_multiply(&zu, x) - &u_multiply(x, &zu)
}

/// Derivation extension of `ad(z)` to `S(g)`.
pub fn ad_action_s(z: &LieElement, x: &SElement) -> SElement {
    let sc = StructureConstants::global();
    let mut acc = Combination::zero();
    for (m, c) in x.iter() {
        for b in BasisIndex::ALL {
            let e = m.exponent(b);
            if e == 0 {
                continue;
            }
            let rest = m.with_added(b, -1);
            let br = sc.bracket(z, &LieElement::basis(b));
            for (t, ct) in br.iter() {
                acc.add_term(rest.with_added(*t, 1), c * ct * q(e as i64));
            }
        }
    }
    SElement(acc)
}
