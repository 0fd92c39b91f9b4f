//! Negative cyclic lifts of bar complexes, the Chevalley–Eilenberg side,
//! and the two relative Chern characters of triangular blocks.

mod blocks;
mod ce;
mod comparison;
mod kappa;
mod lift;
mod upsilon;


use thiserror::Error;

use crate::exactlin::LinError;

pub use blocks::ChernBlock;
pub use ce::{permutations, Ce, UWedge, Wedge};
pub use comparison::Comparison;
pub use kappa::{Convention, Kappa};
pub use lift::{tau, tau_vec, CLift};
pub use upsilon::Upsilon;

#[derive(Debug, Error)]
pub enum ChernError {
    /// A construction that should always succeed did not.
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Linear(#[from] LinError),
}
