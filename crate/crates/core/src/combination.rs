//! Sparse rational linear combinations over an ordered key set.

use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num_traits::Zero;

use crate::scalar::Q;

/// Finite formal sum `Σ c_k · k`. Zero coefficients are never stored, so
/// structural equality is algebraic equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Combination<K: Ord> {
    terms: BTreeMap<K, Q>,
}

impl<K: Ord> Default for Combination<K> {
    fn default() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> Combination<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(key: K, coeff: Q) -> Self {
        let mut c = Self::zero();
        c.add_term(key, coeff);
        c
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &K) -> Q {
        self.terms.get(key).cloned().unwrap_or_else(Q::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Q)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, key: K, coeff: Q) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(c) => {
                *c += coeff;
                if c.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, coeff);
            }
        }
    }

    /// `self += factor * other`
    pub fn add_scaled(&mut self, other: &Self, factor: &Q) {
        if factor.is_zero() {
            return;
        }
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c * factor);
        }
    }

    pub fn scale(&self, factor: &Q) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), c * factor))
                .collect(),
        }
    }

    /// Applies a linear map given on keys.
    pub fn map_linear<L: Ord + Clone>(&self, mut f: impl FnMut(&K) -> Combination<L>) -> Combination<L> {
        let mut out = Combination::zero();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k), c);
        }
        out
    }

    /// Keeps the terms whose key satisfies `pred`.
    pub fn filter(&self, mut pred: impl FnMut(&K) -> bool) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| pred(k))
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn into_terms(self) -> BTreeMap<K, Q> {
        self.terms
    }
}

impl<K: Ord + Clone> FromIterator<(K, Q)> for Combination<K> {
    fn from_iter<I: IntoIterator<Item = (K, Q)>>(iter: I) -> Self {
        let mut c = Self::zero();
        for (k, q) in iter {
            c.add_term(k, q);
        }
        c
    }
}

impl<K: Ord + Clone> AddAssign<&Combination<K>> for Combination<K> {
    fn add_assign(&mut self, rhs: &Combination<K>) {
        for (k, c) in &rhs.terms {
            self.add_term(k.clone(), c.clone());
        }
    }
}

impl<K: Ord + Clone> SubAssign<&Combination<K>> for Combination<K> {
    fn sub_assign(&mut self, rhs: &Combination<K>) {
        for (k, c) in &rhs.terms {
            self.add_term(k.clone(), -c);
        }
    }
}

impl<K: Ord + Clone> Add for &Combination<K> {
    type Output = Combination<K>;
    fn add(self, rhs: Self) -> Combination<K> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<K: Ord + Clone> Sub for &Combination<K> {
    type Output = Combination<K>;
    fn sub(self, rhs: Self) -> Combination<K> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<K: Ord + Clone> Neg for &Combination<K> {
    type Output = Combination<K>;
    fn neg(self) -> Combination<K> {
        Combination {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        }
    }
}

/// Newtype wrappers around [`Combination`] share the same linear-space surface.
macro_rules! linear_newtype {
    ($name:ident, $key:ty) => {
        impl $name {
            pub fn zero() -> Self {
                Self($crate::combination::Combination::zero())
            }

            pub fn from_combination(c: $crate::combination::Combination<$key>) -> Self {
                Self(c)
            }

            pub fn term(key: $key, coeff: $crate::scalar::Q) -> Self {
                Self($crate::combination::Combination::term(key, coeff))
            }

            pub fn is_zero(&self) -> bool {
                self.0.is_zero()
            }

            pub fn len(&self) -> usize {
                self.0.len()
            }

            pub fn is_empty(&self) -> bool {
                self.0.is_empty()
            }

            pub fn coeff(&self, key: &$key) -> $crate::scalar::Q {
                self.0.coeff(key)
            }

            pub fn iter(&self) -> impl Iterator<Item = (&$key, &$crate::scalar::Q)> {
                self.0.iter()
            }

            pub fn scale(&self, factor: &$crate::scalar::Q) -> Self {
                Self(self.0.scale(factor))
            }

            pub fn combination(&self) -> &$crate::combination::Combination<$key> {
                &self.0
            }
        }

        impl Default for $name {
            fn default() -> Self {
                Self::zero()
            }
        }

        impl std::ops::Add for &$name {
            type Output = $name;
            fn add(self, rhs: Self) -> $name {
                $name(&self.0 + &rhs.0)
            }
        }

        impl std::ops::Sub for &$name {
            type Output = $name;
            fn sub(self, rhs: Self) -> $name {
                $name(&self.0 - &rhs.0)
            }
        }

        impl std::ops::Neg for &$name {
            type Output = $name;
            fn neg(self) -> $name {
                $name(-&self.0)
            }
        }

        impl std::ops::Add for $name {
            type Output = $name;
            fn add(self, rhs: Self) -> $name {
                &self + &rhs
            }
        }

        impl std::ops::Sub for $name {
            type Output = $name;
            fn sub(self, rhs: Self) -> $name {
                &self - &rhs
            }
        }

        impl std::ops::Neg for $name {
            type Output = $name;
            fn neg(self) -> $name {
                -&self
            }
        }

        impl std::ops::AddAssign<&$name> for $name {
            fn add_assign(&mut self, rhs: &$name) {
                self.0 += &rhs.0;
            }
        }

        impl std::ops::SubAssign<&$name> for $name {
            fn sub_assign(&mut self, rhs: &$name) {
                self.0 -= &rhs.0;
            }
        }
    };
}

pub(crate) use linear_newtype;

/// Joins `(coefficient, monomial text)` pairs into `c * m + c * m - ...`.
/// An empty monomial text denotes the identity and prints the bare coefficient.
pub fn format_terms<'a>(terms: impl Iterator<Item = (&'a Q, String)>) -> String {
    use num_traits::Signed;
    let mut out = String::new();
    for (i, (c, mono)) in terms.enumerate() {
        let neg = c.is_negative();
        let a = c.abs();
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&crate::scalar::fmt_q(&a));
        if !mono.is_empty() {
            out.push_str(" * ");
            out.push_str(&mono);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    #[test]
    fn zero_terms_are_dropped() {
        let mut c = Combination::term(1u8, q(2));
        c.add_term(1, q(-2));
        assert!(c.is_zero());
        c.add_term(3, q(0));
        assert!(c.is_empty());
    }

    #[test]
    fn arithmetic() {
        let a: Combination<u8> = [(1, q(1)), (2, q(3))].into_iter().collect();
        let b: Combination<u8> = [(2, q(3)), (4, q(-1))].into_iter().collect();
        let d = &a - &b;
        assert_eq!(d.len(), 2);
        assert_eq!(d.coeff(&4), q(1));
        assert_eq!(&(&d + &b), &a);
        assert_eq!((-&a).coeff(&1), q(-1));
        assert!(a.scale(&q(0)).is_zero());
    }
}
