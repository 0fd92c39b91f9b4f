use std::sync::Arc;

use crate::complexes::{sweedler, Bar, Canonical, CyclicModule, HnKey};
use crate::exactlin::Vector;
use crate::hopf::Hopf;
use crate::tensor::{tensor, Word};

use super::upsilon::Upsilon;

/// `τ(h_1 ⊗ … ⊗ h_n) = S(h_1^{(0)} ⋯ h_n^{(0)}) ⊗ h_1^{(1)} ⊗ … ⊗ h_n^{(1)}`,
/// `τ_0 = η`: the cyclic map `B(H) → C(H)`.
pub fn tau<H: Hopf + ?Sized>(h: &H, w: &Word<H::B>) -> Vector<Word<H::B>> {
    let mut out = Vector::zero();
    for (combo, c) in sweedler(h, &w.0, &vec![2; w.len()]) {
        let firsts: Vec<H::B> = combo.iter().map(|l| l[0].clone()).collect();
        let mut factors = vec![h.antipode(&h.mul_word(&firsts))];
        factors.extend(combo.iter().map(|l| Vector::basis(l[1].clone())));
        out.axpy(&c, &tensor(&factors));
    }
    out
}

pub fn tau_vec<H: Hopf + ?Sized>(h: &H, v: &Vector<Word<H::B>>) -> Vector<Word<H::B>> {
    v.map_linear(|w| tau(h, w))
}

/// `c = τ ∘ Υ : B(H) → HN(H)`, with `τ` applied in every column.
pub struct CLift<H: Hopf> {
    upsilon: Upsilon<H>,
    canonical: Canonical<H>,
}

impl<H: Hopf + 'static> CLift<H> {
    pub fn new(bar: Arc<Bar<H>>, normalized: bool, columns: usize) -> Self {
        let canonical = Canonical::new(bar.hopf().clone());
        Self { upsilon: Upsilon::new(bar, normalized, columns), canonical }
    }

    pub fn upsilon(&self) -> &Upsilon<H> {
        &self.upsilon
    }

    pub fn canonical(&self) -> &Canonical<H> {
        &self.canonical
    }

    pub fn normalized(&self) -> bool {
        self.upsilon.normalized()
    }

    /// `τ` into `C(H)`, normalized when the lift is.
    pub fn tau(&self, v: &Vector<Word<H::B>>) -> Vector<Word<H::B>> {
        let out = tau_vec(&**self.canonical.algebra(), v);
        if self.normalized() {
            self.canonical.normalize(&out)
        } else {
            out
        }
    }

    pub fn apply(&self, v: &Vector<Word<H::B>>) -> Vector<HnKey<Word<H::B>>> {
        let mut out = Vector::zero();
        for i in 0..=self.upsilon.columns() {
            let col = self.tau(&self.upsilon.b_level(i, v));
            out += &col.map_keys(|w| HnKey { col: i, elem: w.clone() });
        }
        out
    }
}
