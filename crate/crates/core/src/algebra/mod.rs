//! Structure-constant algebras: Lie algebras and their enveloping algebras,
//! the Malcev group law, finite-dimensional associative algebras with a
//! nilpotent ideal, and triangular matrix blocks.

mod assoc;
mod lie;
mod malcev;
mod pbw;
mod triangular;

use thiserror::Error;

pub use assoc::AssocAlgebra;
pub use lie::{structure, validate_lie, LieAlgebra, LieReport};
pub use malcev::MalcevGroup;
pub use pbw::{Enveloping, Mono};
pub use triangular::{Triangular, TriangularSpec};


#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("Jacobi identity fails on basis triple ({i}, {j}, {k})")]
    Jacobi { i: usize, j: usize, k: usize },
    #[error("associativity fails on basis triple ({0}, {1}, {2})")]
    Associativity(usize, usize, usize),
    #[error("invalid structure: {0}")]
    Invalid(String),
    #[error("element is not in the nilpotent ideal: {0}")]
    Domain(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}
