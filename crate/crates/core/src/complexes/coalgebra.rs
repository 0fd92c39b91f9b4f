use std::sync::Arc;

use crate::exactlin::{sign, Vector};
use crate::hopf::Hopf;
use crate::tensor::{tensor, Word};

use super::bar::sweedler;
use super::CyclicModule;

/// `R(C)` for the coalgebra underlying a cocommutative Hopf algebra:
/// `R_n = C^{⊗ n+1}`, faces apply `ε`, degeneracies split a factor, and
/// `λ(c_0 ⊗ … ⊗ c_n) = (-1)^n c_n ⊗ c_0 ⊗ … ⊗ c_{n-1}`.
pub struct RModule<H: Hopf> {
    h: Arc<H>,
}

impl<H: Hopf> RModule<H> {
    pub fn new(h: Arc<H>) -> Self {
        Self { h }
    }
}

impl<H: Hopf> CyclicModule for RModule<H> {
    type K = Word<H::B>;

    fn degree(&self, x: &Word<H::B>) -> usize {
        x.len() - 1
    }

    fn face(&self, i: usize, x: &Word<H::B>) -> Vector<Word<H::B>> {
        let c = self.h.counit_basis(&x.0[i]);
        let mut w = x.0.clone();
        w.remove(i);
        Vector::term(Word(w), c)
    }

    fn degeneracy(&self, j: usize, x: &Word<H::B>) -> Vector<Word<H::B>> {
        let mut out = Vector::zero();
        for (pair, c) in &self.h.comul_basis(&x.0[j]) {
            let mut w = x.0[..j].to_vec();
            w.extend(pair.0.iter().cloned());
            w.extend(x.0[j + 1..].iter().cloned());
            out.add_term(Word(w), c.clone());
        }
        out
    }

    fn cyclic(&self, x: &Word<H::B>) -> Vector<Word<H::B>> {
        let n = x.len() - 1;
        let mut w = x.0.clone();
        w.rotate_right(1);
        Vector::term(Word(w), sign(n))
    }

    /// `R(C)` has no basis in which normalization is a projection; nothing
    /// is reported degenerate.
    fn is_degenerate(&self, _x: &Word<H::B>) -> bool {
        false
    }

    fn render(&self, x: &Word<H::B>) -> String {
        self.h.render_word(x)
    }
}

/// `α(h_0 ⊗ … ⊗ h_n)_p = h_0^{(p)} h_1^{(p-1)} ⋯ h_{p-1}^{(1)} h_p^{(0)}`, with
/// `h_i` split into `n - i + 1` legs.
pub fn alpha<H: Hopf + ?Sized>(h: &H, w: &Word<H::B>) -> Vector<Word<H::B>> {
    let n = w.len() - 1;
    let legs: Vec<usize> = (0..=n).map(|i| n - i + 1).collect();
    let mut out = Vector::zero();
    for (combo, c) in sweedler(h, &w.0, &legs) {
        let factors: Vec<Vector<H::B>> = (0..=n)
            .map(|p| {
                let letters: Vec<H::B> = (0..=p).map(|i| combo[i][p - i].clone()).collect();
                h.mul_word(&letters)
            })
            .collect();
        out.axpy(&c, &tensor(&factors));
    }
    out
}

/// `β(h_0 ⊗ … ⊗ h_n) = h_0^{(0)} ⊗ (S h_0^{(1)}) h_1^{(0)} ⊗ … ⊗ (S h_{n-1}^{(1)}) h_n`.
pub fn beta<H: Hopf + ?Sized>(h: &H, w: &Word<H::B>) -> Vector<Word<H::B>> {
    let n = w.len() - 1;
    let legs: Vec<usize> = (0..=n).map(|i| if i < n { 2 } else { 1 }).collect();
    let mut out = Vector::zero();
    for (combo, c) in sweedler(h, &w.0, &legs) {
        let mut factors = vec![Vector::basis(combo[0][0].clone())];
        for p in 1..=n {
            let s = h.antipode_basis(&combo[p - 1][1]);
            factors.push(h.mul(&s, &Vector::basis(combo[p][0].clone())));
        }
        out.axpy(&c, &tensor(&factors));
    }
    out
}
