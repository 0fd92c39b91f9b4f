use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_traits::One;

use crate::exactlin::{sign, Vector, Q};
use crate::hopf::Hopf;
use crate::tensor::{tensor, Word};

use super::CyclicModule;

/// For each choice of terms in `Δ^{(legs[i])}(factors[i])`, the legs of every
/// factor together with the product of the coefficients.
pub(crate) fn sweedler<H: Hopf + ?Sized>(h: &H, factors: &[H::B], legs: &[usize]) -> Vec<(Vec<Vec<H::B>>, Q)> {
    let mut acc: Vec<(Vec<Vec<H::B>>, Q)> = vec![(Vec::with_capacity(factors.len()), Q::one())];
    for (b, &k) in factors.iter().zip(legs) {
        let d = h.delta_n(b, k);
        let mut next = Vec::with_capacity(acc.len() * d.len());
        for (prefix, c) in &acc {
            for (w, c2) in &d {
                let mut p = prefix.clone();
                p.push(w.0.clone());
                next.push((p, c * c2));
            }
        }
        acc = next;
    }
    acc
}

/// The bar resolution `E(H)` and bar complex `B(H) = k ⊗_H E(H)` of a
/// cocommutative Hopf algebra, with the cyclic operator transported from
/// `R(H)`. Words `[h_0|…|h_n]` of `E_n` and `[h_1|…|h_n]` of `B_n`.
pub struct Bar<H: Hopf> {
    h: Arc<H>,
    unit: H::B,
    t_cache: Mutex<HashMap<Word<H::B>, Vector<Word<H::B>>>>,
    b_cache: Mutex<HashMap<Word<H::B>, Vector<Word<H::B>>>>,
}

impl<H: Hopf> Bar<H> {
    pub fn new(h: Arc<H>) -> Self {
        let unit = h.unit_basis().expect("bar constructions need the unit as a basis element");
        Self { h, unit, t_cache: Mutex::new(HashMap::new()), b_cache: Mutex::new(HashMap::new()) }
    }

    pub fn hopf(&self) -> &Arc<H> {
        &self.h
    }

    pub fn unit(&self) -> &H::B {
        &self.unit
    }

    pub fn e(&self) -> EView<'_, H> {
        EView(self)
    }

    pub fn b(&self) -> BView<'_, H> {
        BView(self)
    }

    /// `μ_i`: multiply factors `i, i+1`, or apply `ε` to the last one.
    pub fn e_face(&self, i: usize, w: &Word<H::B>) -> Vector<Word<H::B>> {
        let n = w.len() - 1;
        assert!(i <= n && n >= 1, "face μ_{i} on degree {n}");
        if i == n {
            let c = self.h.counit_basis(&w.0[n]);
            return Vector::term(Word(w.0[..n].to_vec()), c);
        }
        let prod = self.h.mul_basis(&w.0[i], &w.0[i + 1]);
        let mut out = Vector::zero();
        for (p, c) in &prod {
            let mut v = w.0[..i].to_vec();
            v.push(p.clone());
            v.extend(w.0[i + 2..].iter().cloned());
            out.add_term(Word(v), c.clone());
        }
        out
    }

    /// `s_j`: insert `1` after position `j`.
    pub fn e_degeneracy(&self, j: usize, w: &Word<H::B>) -> Vector<Word<H::B>> {
        let mut v = w.0.clone();
        v.insert(j + 1, self.unit.clone());
        Vector::basis(Word(v))
    }

    /// The contraction `s(x) = 1 ⊗ x`, satisfying `1 - ηε = ∂'s + s∂'`.
    pub fn contraction(&self, w: &Word<H::B>) -> Word<H::B> {
        let mut v = Vec::with_capacity(w.len() + 1);
        v.push(self.unit.clone());
        v.extend(w.0.iter().cloned());
        Word(v)
    }

    /// `t(h_0 ⊗ … ⊗ h_n) = (-1)^n h_0 h_1^{(0)} ⋯ h_n^{(0)} ⊗ S(h_1^{(1)} ⋯ h_n^{(1)}) ⊗ h_1^{(2)} ⊗ … ⊗ h_{n-1}^{(2)}`.
    pub fn e_cyclic(&self, w: &Word<H::B>) -> Vector<Word<H::B>> {
        let n = w.len() - 1;
        if n == 0 {
            return Vector::basis(w.clone());
        }
        if let Some(v) = self.t_cache.lock().unwrap().get(w) {
            return v.clone();
        }
        let legs: Vec<usize> = (1..=n).map(|i| if i < n { 3 } else { 2 }).collect();
        let mut out = Vector::zero();
        for (combo, c) in sweedler(&*self.h, &w.0[1..], &legs) {
            let mut first = vec![w.0[0].clone()];
            first.extend(combo.iter().map(|l| l[0].clone()));
            let second: Vec<H::B> = combo.iter().map(|l| l[1].clone()).collect();
            let mut factors = vec![self.h.mul_word(&first), self.h.antipode(&self.h.mul_word(&second))];
            factors.extend(combo[..n - 1].iter().map(|l| Vector::basis(l[2].clone())));
            out.axpy(&c, &tensor(&factors));
        }
        let out = out.scaled(&sign(n));
        self.t_cache.lock().unwrap().insert(w.clone(), out.clone());
        out
    }

    /// The sign-free closed form of `s' = (-1)^{n+1} t s_n`.
    pub fn e_extra_explicit(&self, w: &Word<H::B>) -> Vector<Word<H::B>> {
        self.explicit_term(w, 0)
    }

    /// The `i`-th summand of the closed formula for `B'`, without its sign:
    /// `h_0 h_1^{(0)} ⋯ h_{n-i}^{(0)} ⊗ h_{n-i+1}^{(0)} ⊗ … ⊗ h_n^{(0)} ⊗ S(h_1^{(1)} ⋯ h_n^{(1)}) ⊗ h_1^{(2)} ⊗ … ⊗ h_{n-i}^{(2)}`.
    fn explicit_term(&self, w: &Word<H::B>, i: usize) -> Vector<Word<H::B>> {
        let n = w.len() - 1;
        let split = n - i;
        let legs: Vec<usize> = (1..=n).map(|k| if k <= split { 3 } else { 2 }).collect();
        let mut out = Vector::zero();
        for (combo, c) in sweedler(&*self.h, &w.0[1..], &legs) {
            let mut first = vec![w.0[0].clone()];
            first.extend(combo[..split].iter().map(|l| l[0].clone()));
            let mut factors = vec![self.h.mul_word(&first)];
            factors.extend(combo[split..].iter().map(|l| Vector::basis(l[0].clone())));
            let middle: Vec<H::B> = combo.iter().map(|l| l[1].clone()).collect();
            factors.push(self.h.antipode(&self.h.mul_word(&middle)));
            factors.extend(combo[..split].iter().map(|l| Vector::basis(l[2].clone())));
            out.axpy(&c, &tensor(&factors));
        }
        out
    }

    /// The closed formula for `B'` on `E(H)_norm` (before normalizing):
    /// `Σ_i (-1)^{ni}` times the summands of [`Bar::explicit_term`].
    pub fn e_connes_explicit(&self, w: &Word<H::B>) -> Vector<Word<H::B>> {
        if let Some(v) = self.b_cache.lock().unwrap().get(w) {
            return v.clone();
        }
        let n = w.len() - 1;
        let mut out = Vector::zero();
        for i in 0..=n {
            out.axpy(&sign(n * i), &self.explicit_term(w, i));
        }
        self.b_cache.lock().unwrap().insert(w.clone(), out.clone());
        out
    }

    /// `h_0 ⊗ u ↦ ε(h_0) u`: the quotient `E(H) → k ⊗_H E(H)`.
    pub fn to_b(&self, v: &Vector<Word<H::B>>) -> Vector<Word<H::B>> {
        let mut out = Vector::zero();
        for (w, c) in v {
            let e = self.h.counit_basis(&w.0[0]);
            out.add_term(Word(w.0[1..].to_vec()), c * e);
        }
        out
    }

    /// `[h_1|…|h_n] ↦ [1|h_1|…|h_n]`.
    pub fn lift(&self, w: &Word<H::B>) -> Word<H::B> {
        self.contraction(w)
    }

    /// Left multiplication on the first factor: the `H`-module structure.
    pub fn act(&self, a: &H::B, v: &Vector<Word<H::B>>) -> Vector<Word<H::B>> {
        let mut out = Vector::zero();
        for (w, c) in v {
            for (p, c2) in &self.h.mul_basis(a, &w.0[0]) {
                let mut u = w.0.clone();
                u[0] = p.clone();
                out.add_term(Word(u), c * c2);
            }
        }
        out
    }

    pub fn is_unit(&self, b: &H::B) -> bool {
        b == &self.unit
    }
}

/// `E(H)` as a cyclic module.
pub struct EView<'a, H: Hopf>(pub &'a Bar<H>);

/// `B(H)` as a cyclic module.
pub struct BView<'a, H: Hopf>(pub &'a Bar<H>);

impl<H: Hopf> CyclicModule for EView<'_, H> {
    type K = Word<H::B>;

    fn degree(&self, x: &Word<H::B>) -> usize {
        x.len() - 1
    }

    fn face(&self, i: usize, x: &Word<H::B>) -> Vector<Word<H::B>> {
        self.0.e_face(i, x)
    }

    fn degeneracy(&self, j: usize, x: &Word<H::B>) -> Vector<Word<H::B>> {
        self.0.e_degeneracy(j, x)
    }

    fn cyclic(&self, x: &Word<H::B>) -> Vector<Word<H::B>> {
        self.0.e_cyclic(x)
    }

    fn is_degenerate(&self, x: &Word<H::B>) -> bool {
        x.0[1..].iter().any(|b| self.0.is_unit(b))
    }

    fn render(&self, x: &Word<H::B>) -> String {
        self.0.h.render_word(x)
    }

    fn connes_normalized(&self, x: &Word<H::B>) -> Option<Vector<Word<H::B>>> {
        Some(self.normalize(&self.0.e_connes_explicit(x)))
    }
}

impl<H: Hopf> CyclicModule for BView<'_, H> {
    type K = Word<H::B>;

    fn degree(&self, x: &Word<H::B>) -> usize {
        x.len()
    }

    fn face(&self, i: usize, x: &Word<H::B>) -> Vector<Word<H::B>> {
        self.0.to_b(&self.0.e_face(i, &self.0.lift(x)))
    }

    fn degeneracy(&self, j: usize, x: &Word<H::B>) -> Vector<Word<H::B>> {
        self.0.to_b(&self.0.e_degeneracy(j, &self.0.lift(x)))
    }

    fn cyclic(&self, x: &Word<H::B>) -> Vector<Word<H::B>> {
        self.0.to_b(&self.0.e_cyclic(&self.0.lift(x)))
    }

    fn is_degenerate(&self, x: &Word<H::B>) -> bool {
        x.0.iter().any(|b| self.0.is_unit(b))
    }

    fn render(&self, x: &Word<H::B>) -> String {
        self.0.h.render_word(x)
    }

    fn connes_normalized(&self, x: &Word<H::B>) -> Option<Vector<Word<H::B>>> {
        Some(self.normalize(&self.0.to_b(&self.0.e_connes_explicit(&self.0.lift(x)))))
    }
}
