use std::sync::Arc;

use crate::exactlin::{sign, Key, Vector};
use crate::hopf::Algebra;
use crate::tensor::{tensor, Word};

use super::CyclicModule;

/// The canonical cyclic module `C(A)`: `C_n = A^{⊗ n+1}`, Hochschild faces,
/// degeneracies inserting `1`, and `t(a_0 ⊗ … ⊗ a_n) = (-1)^n a_n ⊗ a_0 ⊗ … ⊗ a_{n-1}`.
pub struct Canonical<A: Algebra> {
    a: Arc<A>,
    unit: Option<A::B>,
}

impl<A: Algebra> Canonical<A> {
    pub fn new(a: Arc<A>) -> Self {
        let unit = a.unit_basis();
        Self { a, unit }
    }

    pub fn algebra(&self) -> &Arc<A> {
        &self.a
    }

    /// Whether normalization is available, i.e. the unit is a basis element.
    pub fn has_unit_basis(&self) -> bool {
        self.unit.is_some()
    }

    /// Basis of the relative slice `C(A, I) = ker(C(A) → C(A/I))` among
    /// `words`, for an ideal spanned by the basis elements flagged by
    /// `in_ideal`: the words with at least one factor in `I`.
    pub fn relative_words<F: Fn(&A::B) -> bool>(&self, words: &[Word<A::B>], in_ideal: F) -> Vec<Word<A::B>> {
        words.iter().filter(|w| w.0.iter().any(&in_ideal)).cloned().collect()
    }
}

impl<A: Algebra> CyclicModule for Canonical<A> {
    type K = Word<A::B>;

    fn degree(&self, x: &Word<A::B>) -> usize {
        x.len() - 1
    }

    fn face(&self, i: usize, x: &Word<A::B>) -> Vector<Word<A::B>> {
        let n = x.len() - 1;
        assert!(i <= n && n >= 1, "face d_{i} on degree {n}");
        let (prod, rest): (Vector<A::B>, Vec<A::B>) = if i < n {
            let mut rest = x.0.clone();
            let b = rest.remove(i + 1);
            (self.a.mul_basis(&x.0[i], &b), rest)
        } else {
            (self.a.mul_basis(&x.0[n], &x.0[0]), x.0[..n].to_vec())
        };
        let pos = if i < n { i } else { 0 };
        let mut out = Vector::zero();
        for (p, c) in &prod {
            let mut w = rest.clone();
            w[pos] = p.clone();
            out.add_term(Word(w), c.clone());
        }
        out
    }

    fn degeneracy(&self, j: usize, x: &Word<A::B>) -> Vector<Word<A::B>> {
        let mut factors: Vec<Vector<A::B>> = x.0.iter().map(|b| Vector::basis(b.clone())).collect();
        factors.insert(j + 1, self.a.one());
        tensor(&factors)
    }

    fn cyclic(&self, x: &Word<A::B>) -> Vector<Word<A::B>> {
        let n = x.len() - 1;
        let mut w = x.0.clone();
        w.rotate_right(1);
        Vector::term(Word(w), sign(n))
    }

    fn is_degenerate(&self, x: &Word<A::B>) -> bool {
        match &self.unit {
            Some(u) => x.0[1..].contains(u),
            None => false,
        }
    }

    fn render(&self, x: &Word<A::B>) -> String {
        self.a.render_word(x)
    }

    /// `B(a_0 ⊗ … ⊗ a_n) = Σ_i (-1)^{ni} 1 ⊗ a_i ⊗ … ⊗ a_n ⊗ a_0 ⊗ … ⊗ a_{i-1}`.
    fn connes_normalized(&self, x: &Word<A::B>) -> Option<Vector<Word<A::B>>> {
        let u = self.unit.as_ref()?;
        let n = x.len() - 1;
        let mut out = Vector::zero();
        for i in 0..=n {
            let mut w = vec![u.clone()];
            w.extend(x.0[i..].iter().cloned());
            w.extend(x.0[..i].iter().cloned());
            out.add_term(Word(w), sign(n * i));
        }
        Some(self.normalize(&out))
    }
}

/// Canonical representative of a class in `C^λ_n = C_n / (1 - t)`: each
/// word is replaced by the least of its rotations, with the sign picked up
/// from `t`, or by zero when its orbit forces the class to vanish.
pub fn connes_quotient_rep<B: Key>(v: &Vector<Word<B>>) -> Vector<Word<B>> {
    let mut out = Vector::zero();
    for (w, c) in v {
        if let Some((rep, s)) = rotation_rep(w) {
            out.add_term(rep, c * s);
        }
    }
    out
}

fn rotation_rep<B: Key>(w: &Word<B>) -> Option<(Word<B>, crate::exactlin::Q)> {
    let n = w.len() - 1;
    let rotations: Vec<Vec<B>> = (0..=n)
        .map(|k| {
            let mut r = w.0.clone();
            r.rotate_right(k);
            r
        })
        .collect();
    // a stabilizing rotation that acts by -1 kills the class
    if (1..=n).any(|k| rotations[k] == w.0 && (n * k) % 2 == 1) {
        return None;
    }
    let k = (0..=n).min_by(|&a, &b| rotations[a].cmp(&rotations[b])).expect("nonempty orbit");
    // class(w) = (-1)^{nk} class(rot^k w)
    Some((Word(rotations[k].clone()), sign(n * k)))
}
