//! Simplicial, cyclic and mixed complexes: the bar resolution `E(H)` and bar
//! complex `B(H)` of a cocommutative Hopf algebra with their cyclic
//! structure, the cyclic module `R(C)` of a coalgebra with the maps `α, β`,
//! the canonical cyclic module `C(A)`, normalization, and the truncated
//! negative cyclic complex.

mod bar;
mod canonical;
mod coalgebra;
mod enumerate;
mod hn;

use crate::exactlin::{sign, Key, Vector};

pub use bar::{Bar, BView, EView};
pub(crate) use bar::sweedler;
pub use canonical::{connes_quotient_rep, Canonical};
pub use coalgebra::{alpha, beta, RModule};
pub use enumerate::{bar_words, canonical_words, compositions_of, words_of_weight};
pub use hn::{HnKey, HnSlice, Mixed, MixedComplex};

/// A cyclic module given by evaluators on basis elements. Degrees are read
/// off the basis elements themselves.
pub trait CyclicModule {
    type K: Key;

    fn degree(&self, x: &Self::K) -> usize;
    fn face(&self, i: usize, x: &Self::K) -> Vector<Self::K>;
    fn degeneracy(&self, j: usize, x: &Self::K) -> Vector<Self::K>;
    fn cyclic(&self, x: &Self::K) -> Vector<Self::K>;

    /// Whether `x` spans part of the degenerate subspace, in the basis
    /// decomposition where normalization is a projection.
    fn is_degenerate(&self, x: &Self::K) -> bool;

    fn render(&self, x: &Self::K) -> String {
        x.to_string()
    }

    /// Connes' operator on the normalized complex, when a closed formula is
    /// available.
    fn connes_normalized(&self, _x: &Self::K) -> Option<Vector<Self::K>> {
        None
    }

    fn normalize(&self, v: &Vector<Self::K>) -> Vector<Self::K> {
        v.filtered(|x| !self.is_degenerate(x))
    }

    /// `b = Σ (-1)^i d_i`.
    fn boundary(&self, x: &Self::K) -> Vector<Self::K> {
        let n = self.degree(x);
        let mut out = Vector::zero();
        if n == 0 {
            return out;
        }
        for i in 0..=n {
            out.axpy(&sign(i), &self.face(i, x));
        }
        out
    }

    fn cyclic_vec(&self, v: &Vector<Self::K>) -> Vector<Self::K> {
        v.map_linear(|x| self.cyclic(x))
    }

    /// `N = Σ_{i=0}^n t^i`.
    fn norm(&self, x: &Self::K) -> Vector<Self::K> {
        let n = self.degree(x);
        let mut power = Vector::basis(x.clone());
        let mut out = power.clone();
        for _ in 0..n {
            power = self.cyclic_vec(&power);
            out += &power;
        }
        out
    }

    /// The extra degeneracy `(-1)^{n+1} t s_n`.
    fn extra_degeneracy(&self, x: &Self::K) -> Vector<Self::K> {
        let n = self.degree(x);
        let sn = self.degeneracy(n, x);
        self.cyclic_vec(&sn).scaled(&sign(n + 1))
    }

    /// Connes' operator `(1 - t) s N` on the unnormalized complex, with `s`
    /// the extra degeneracy.
    fn connes(&self, x: &Self::K) -> Vector<Self::K> {
        let sn = self.norm(x).map_linear(|y| self.extra_degeneracy(y));
        &sn - &self.cyclic_vec(&sn)
    }

    /// `B'' = -t s'' N` with `s'' = (-1)^n s_n`.
    fn connes_double_prime(&self, x: &Self::K) -> Vector<Self::K> {
        let n = self.degree(x);
        let s = self.norm(x).map_linear(|y| self.degeneracy(n, y)).scaled(&sign(n));
        -&self.cyclic_vec(&s)
    }
}

#[cfg(test)]
mod tests;
