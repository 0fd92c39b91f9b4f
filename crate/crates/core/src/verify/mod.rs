//! Verification engine: check reports, chain-map checks, the
//! chain-homotopy solver, and identity suites.

mod ce_suites;
mod chain;
mod chern_suites;
mod context;
mod cyclic;
mod homology;
mod instance;
mod report;
mod suites;

pub use chain::{
    check_chain_map, check_chain_map_with, find_homotopy, reverify, verify_certificate, ChainComplex, ChainHomotopy, ChainMap, EqKey, HomKey,
    HomotopyResult, NoHomotopy,
};

pub use chern_suites::compare_chern;
pub use cyclic::check_cyclic_module;
pub use homology::{check_axioms, homology_report, HomologyKind};
pub use instance::{Caps, Instance, SuiteError};
pub use report::{
    scalar_sparse, sparse, sparse_with, CertificateWitness, Check, CheckBuilder, HomotopyWitness, Outcome, Sparse,
    VerificationReport, Witness,
};
pub use suites::{applicable, canonical_label, run_all, run_suite, SUITES};

#[cfg(test)]
mod tests;
