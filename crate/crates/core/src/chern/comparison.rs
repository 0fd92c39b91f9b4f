use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::algebra::Mono;
use crate::complexes::{Bar, CyclicModule};
use crate::exactlin::{FreeModule, LinMap, Solution, Solver, Vector};
use crate::hopf::{Algebra, EnvelopingHopf};
use crate::tensor::Word;

use super::ce::{Ce, UWedge, Wedge};
use super::ChernError;

/// A `U g`-linear comparison map `F : E(U g)_norm → U g ⊗ ∧g` over the
/// identity of `k`, built degreewise: `F(1 ⊗ w)` is the preimage under `d'`
/// of `F(∂'(1 ⊗ w))` picked by an exact solver on the weight piece, and
/// `F(a ⊗ w) = a F(1 ⊗ w)`. Its reduction `sw = (ε ⊗ 1) F` compares the
/// bar complex with `(∧g, d)`. Needs a graded Lie algebra so that weight
/// pieces are finite.
pub struct Comparison {
    ce: Arc<Ce>,
    bar: Arc<Bar<EnvelopingHopf>>,
    memo: Mutex<HashMap<Word<Mono>, Vector<UWedge>>>,
    solvers: Mutex<HashMap<(usize, u32), Arc<Solver<UWedge, UWedge>>>>,
}

impl Comparison {
    pub fn new(ce: Arc<Ce>, bar: Arc<Bar<EnvelopingHopf>>) -> Result<Self, ChernError> {
        if !ce.lie().is_graded() && ce.lie().nilpotency_class().is_none() {
            return Err(ChernError::Unsupported("comparison map needs a nilpotent or graded Lie algebra".into()));
        }
        Ok(Self { ce, bar, memo: Mutex::new(HashMap::new()), solvers: Mutex::new(HashMap::new()) })
    }

    pub fn ce(&self) -> &Arc<Ce> {
        &self.ce
    }

    fn solver(&self, n: usize, weight: u32) -> Result<Arc<Solver<UWedge, UWedge>>, ChernError> {
        if let Some(s) = self.solvers.lock().unwrap().get(&(n, weight)) {
            return Ok(s.clone());
        }
        let dom = FreeModule::new(self.ce.resolution_basis(n, weight))?;
        let cod = FreeModule::new(self.ce.resolution_basis(n - 1, weight))?;
        let map = LinMap::from_fn(dom, cod, |x| self.ce.d_res(x))?;
        let s = Arc::new(Solver::new(map));
        self.solvers.lock().unwrap().insert((n, weight), s.clone());
        Ok(s)
    }

    /// `F(1 ⊗ h_1 ⊗ … ⊗ h_n)`.
    pub fn on_generator(&self, tail: &Word<Mono>) -> Result<Vector<UWedge>, ChernError> {
        if let Some(v) = self.memo.lock().unwrap().get(tail) {
            return Ok(v.clone());
        }
        let h = self.bar.hopf();
        let out = if tail.is_empty() {
            Vector::basis(UWedge { u: h.enveloping().one(), w: Wedge(Vec::new()) })
        } else {
            let e = self.bar.e();
            let g = self.bar.contraction(tail);
            let target = self.apply(&e.normalize(&e.boundary(&g)))?;
            let weight = tail.0.iter().map(|b| h.weight(b)).sum();
            match self.solver(tail.len(), weight)?.solve(&target)? {
                Solution::Solved(x) => x,
                Solution::Inconsistent { .. } => {
                    return Err(ChernError::Invariant(format!(
                        "no preimage under d' for F(∂'[1|{}]); the resolution is not exact here",
                        tail.0.iter().map(|b| h.render_basis(b)).collect::<Vec<_>>().join("|")
                    )))
                }
            }
        };
        self.memo.lock().unwrap().insert(tail.clone(), out.clone());
        Ok(out)
    }

    /// `F` on `E(U g)_norm`; degenerate words map to zero.
    pub fn apply(&self, v: &Vector<Word<Mono>>) -> Result<Vector<UWedge>, ChernError> {
        let e = self.bar.e();
        let mut out = Vector::zero();
        for (w, c) in &e.normalize(v) {
            let f = self.on_generator(&Word(w.0[1..].to_vec()))?;
            out.axpy(c, &self.ce.act(&w.0[0], &f));
        }
        Ok(out)
    }

    /// `sw = (ε ⊗ 1) F (1 ⊗ -) : B(U g)_norm → ∧g`.
    pub fn sw(&self, v: &Vector<Word<Mono>>) -> Result<Vector<Wedge>, ChernError> {
        let lifted = v.map_keys(|w| self.bar.lift(w));
        Ok(self.ce.augment(&self.apply(&lifted)?))
    }
}
