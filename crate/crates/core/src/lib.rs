//! Exact symbolic engine for the enveloping algebra of `so(5, C)` tensored with
//! the Clifford algebra of `p`, specialised to the Cartan decomposition of
//! `so(4,1)` with `K = SO(4)`.
//!
//! Every computation is carried out over the rationals (Gaussian rationals in
//! the matrix oracle). Nothing in this crate uses floating point.

pub mod basis;
pub mod clifford;
pub mod combination;
pub mod error;
pub mod invariants;
pub mod lie;
pub mod linalg;
pub mod matrix_oracle;
pub mod scalar;
pub mod sym_ext;
pub mod tensor;
pub mod uea;
pub mod verify;

pub use basis::BasisIndex;
pub use clifford::{CElement, CliffordMonomial, Convention, ExtElement, ExtMonomial, PForm};
pub use combination::Combination;
pub use error::{Error, Result};
pub use lie::{LieElement, StructureConstants};
pub use scalar::{GaussRational, Q};
pub use sym_ext::{SEElement, STCatalog};
pub use tensor::{NamedElementCatalog, UCElement};
pub use uea::{PbwMonomial, SElement, SMonomial, UElement};
