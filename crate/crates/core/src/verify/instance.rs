use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{AlgebraError, AssocAlgebra, LieAlgebra, Triangular, TriangularSpec};
use crate::chern::ChernError;
use crate::exactlin::LinError;
use crate::hopf::HopfError;

/// Degree window `D`, column cap `P` and truncation `N` (weight pieces
/// `< N` are kept).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    pub degree: usize,
    pub columns: usize,
    pub truncation: u32,
}

impl Caps {
    pub fn new(degree: usize, columns: usize, truncation: u32) -> Self {
        Self { degree, columns, truncation }
    }
}

/// The inputs a suite can draw on: a nilpotent Lie algebra, a finite
/// dimensional algebra with an ideal, and a triangular block.
#[derive(Clone, Debug, Default)]
pub struct Instance {
    pub name: String,
    pub lie: Option<Arc<LieAlgebra>>,
    pub algebra: Option<Arc<AssocAlgebra>>,
    pub triangular: Option<TriangularSpec>,
}

#[derive(Debug, Error)]
pub enum SuiteError {
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("suite {suite} needs a {section} section in the input")]
    MissingSection { suite: String, section: &'static str },
    #[error("configuration error: {0}")]
    Config(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Chern(#[from] ChernError),
    #[error(transparent)]
    Linear(#[from] LinError),
}

impl Instance {
    pub fn named(name: impl Into<String>) -> Self {
        Self { name: name.into(), ..Self::default() }
    }

    pub fn with_lie(mut self, lie: LieAlgebra) -> Self {
        self.lie = Some(Arc::new(lie));
        self
    }

    pub fn with_algebra(mut self, a: AssocAlgebra) -> Self {
        self.algebra = Some(Arc::new(a));
        self
    }

    pub fn with_triangular(mut self, spec: TriangularSpec) -> Self {
        self.triangular = Some(spec);
        self
    }

    pub fn heisenberg() -> Self {
        Self::named("heisenberg").with_lie(LieAlgebra::heisenberg())
    }

    pub fn abelian(n: usize) -> Self {
        Self::named(format!("abelian-{n}")).with_lie(LieAlgebra::abelian(n))
    }

    pub fn dual_numbers() -> Self {
        Self::named("dual-numbers").with_algebra(AssocAlgebra::dual_numbers())
    }

    /// A triangular block over the dual numbers; `sigma` uses 0-based pairs.
    pub fn dual_block(n: usize, sigma: Vec<(usize, usize)>) -> Self {
        let spec = TriangularSpec { n, sigma, base: AssocAlgebra::dual_numbers() };
        Self::named(format!("dual-block-{n}")).with_algebra(AssocAlgebra::dual_numbers()).with_triangular(spec)
    }

    pub fn lie_or(&self, suite: &str) -> Result<&Arc<LieAlgebra>, SuiteError> {
        self.lie.as_ref().ok_or_else(|| SuiteError::MissingSection { suite: suite.into(), section: "lie_algebra" })
    }

    pub fn triangular_or(&self, suite: &str) -> Result<&TriangularSpec, SuiteError> {
        self.triangular
            .as_ref()
            .ok_or_else(|| SuiteError::MissingSection { suite: suite.into(), section: "triangular" })
    }

    /// Nilpotency class plus one of the Lie algebra, else of the block,
    /// else the nilpotency index of the ideal.
    pub fn default_truncation(&self) -> Result<u32, SuiteError> {
        if let Some(lie) = &self.lie {
            return Ok(lie.nilpotency_class().map_or(2, |c| c as u32 + 1));
        }
        if let Some(spec) = &self.triangular {
            let t = Triangular::build(spec.clone())?;
            return Ok(t.lie().nilpotency_class().map_or(2, |c| c as u32 + 1));
        }
        if let Some(a) = &self.algebra {
            return Ok(a.nilpotency_index().map_or(2, |i| i as u32));
        }
        Ok(2)
    }
}
