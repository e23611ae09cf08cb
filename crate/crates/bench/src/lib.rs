//! Fixtures shared by the criterion benches.

use so41_core::basis::BasisIndex;
use so41_core::scalar::q;
use so41_core::uea::{PbwMonomial, UElement};

/// `Π g^k` over the generators in reverse order, the worst case for straightening.
pub fn reversed_word(exponent: u8) -> Vec<UElement> {
    BasisIndex::ALL
        .iter()
        .rev()
        .map(|&b| UElement::term(PbwMonomial::generator(b).pow(exponent), q(1)))
        .collect()
}
