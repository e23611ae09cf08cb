//! The ten basis vectors of `g = so(5, C)` in their fixed global order.
//!
//! The order `H1 < H2 < E1 < E2 < F1 < F2 < E3 < E4 < F3 < F4` defines the PBW
//! normal form and every serialized layout, so it must never change.

use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasisIndex {
    H1,
    H2,
    E1,
    E2,
    F1,
    F2,
    E3,
    E4,
    F3,
    F4,
}

use BasisIndex::*;

impl BasisIndex {
    pub const ALL: [BasisIndex; 10] = [H1, H2, E1, E2, F1, F2, E3, E4, F3, F4];
    /// Basis of `k`.
    pub const K: [BasisIndex; 6] = [H1, H2, E1, E2, F1, F2];
    /// Basis of `p`, in Clifford mask order.
    pub const P: [BasisIndex; 4] = [E3, E4, F3, F4];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> BasisIndex {
        Self::ALL[i]
    }

    pub fn name(self) -> &'static str {
        match self {
            H1 => "H1",
            H2 => "H2",
            E1 => "E1",
            E2 => "E2",
            F1 => "F1",
            F2 => "F2",
            E3 => "E3",
            E4 => "E4",
            F3 => "F3",
            F4 => "F4",
        }
    }

    pub fn is_k(self) -> bool {
        self.index() < 6
    }

    pub fn is_p(self) -> bool {
        !self.is_k()
    }

    /// Position inside the `p` basis (the bit used by Clifford and exterior masks).
    pub fn p_slot(self) -> Option<usize> {
        self.is_p().then(|| self.index() - 6)
    }

    pub fn from_p_slot(slot: usize) -> BasisIndex {
        Self::P[slot]
    }

    /// Eigenvalues of `ad H1` and `ad H2`.
    pub fn weight(self) -> (i32, i32) {
        match self {
            H1 | H2 => (0, 0),
            E1 => (1, 1),
            E2 => (1, -1),
            F1 => (-1, -1),
            F2 => (-1, 1),
            E3 => (1, 0),
            E4 => (0, 1),
            F3 => (-1, 0),
            F4 => (0, -1),
        }
    }
}

impl fmt::Display for BasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BasisIndex {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .iter()
            .copied()
            .find(|b| b.name() == s)
            .ok_or_else(|| format!("unknown generator `{s}`"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_and_slots() {
        for (i, b) in BasisIndex::ALL.iter().enumerate() {
            assert_eq!(b.index(), i);
            assert_eq!(BasisIndex::from_index(i), *b);
            assert_eq!(b.name().parse::<BasisIndex>().unwrap(), *b);
        }
        assert!(H1 < F4);
        assert_eq!(E3.p_slot(), Some(0));
        assert_eq!(F4.p_slot(), Some(3));
        assert_eq!(E1.p_slot(), None);
        assert!("X9".parse::<BasisIndex>().is_err());
    }
}
