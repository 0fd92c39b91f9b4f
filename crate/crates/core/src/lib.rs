//! Exact computer algebra for cyclic bar complexes of cocommutative Hopf
//! algebras, negative cyclic lifts, and the comparison of relative Chern
//! characters for nilpotent ideals.

pub mod algebra;
pub mod chern;
pub mod complexes;
pub mod exactlin;
pub mod hopf;
pub mod io;
pub mod tensor;
pub mod verify;
