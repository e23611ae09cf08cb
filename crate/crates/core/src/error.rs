use thiserror::Error;

use crate::basis::BasisIndex;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("bracket [{0}, {1}] leaves the span of the basis")]
    Span(BasisIndex, BasisIndex),
    #[error("structure constant of [{0}, {1}] is not real")]
    NonReal(BasisIndex, BasisIndex),
    #[error("element has a component outside k: {0}")]
    Domain(String),
    #[error("linear system is inconsistent: {0}")]
    Solve(String),
    #[error("{element} is not K-invariant: ad({generator}) leaves {terms} term(s)")]
    Invariance {
        element: String,
        generator: BasisIndex,
        terms: usize,
    },
    #[error("subspace is not k-stable under ad({0})")]
    NotStable(BasisIndex),
    #[error("ranks disagree across primes: {0:?}")]
    PrimeDisagreement(Vec<usize>),
    #[error("degree {degree} exceeds the guard {limit}; pass an override to force it")]
    DegreeGuard { degree: usize, limit: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
