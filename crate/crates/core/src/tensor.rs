//! Tensor words: the basis of `H^{⊗n}` built from a basis of `H`.

use std::fmt;

use num_traits::One;

use crate::exactlin::{Vector, Q};

/// `b_0 ⊗ b_1 ⊗ … ⊗ b_{n-1}`, rendered as `[b0|b1|…]`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Word<B>(pub Vec<B>);

impl<B> Word<B> {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl<B: fmt::Display> fmt::Display for Word<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, b) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, "]")
    }
}

pub fn word<B: Clone>(parts: &[B]) -> Word<B> {
    Word(parts.to_vec())
}

/// `v_0 ⊗ v_1 ⊗ …`, expanded into words.
pub fn tensor<B: Ord + Clone>(factors: &[Vector<B>]) -> Vector<Word<B>> {
    let mut acc: Vec<(Vec<B>, Q)> = vec![(Vec::new(), Q::one())];
    for f in factors {
        let mut next = Vec::with_capacity(acc.len() * f.len());
        for (w, c) in &acc {
            for (b, cb) in f {
                let mut w2 = w.clone();
                w2.push(b.clone());
                next.push((w2, c * cb));
            }
        }
        acc = next;
    }
    acc.into_iter().map(|(w, c)| (Word(w), c)).collect()
}

/// Concatenation `u ⊗ v` of two tensors.
pub fn concat<B: Ord + Clone>(u: &Vector<Word<B>>, v: &Vector<Word<B>>) -> Vector<Word<B>> {
    let mut out = Vector::zero();
    for (a, ca) in u {
        for (b, cb) in v {
            let mut w = a.0.clone();
            w.extend(b.0.iter().cloned());
            out.add_term(Word(w), ca * cb);
        }
    }
    out
}

/// Applies `f` to every letter of a word and expands.
pub fn map_letters<B: Ord + Clone, C: Ord + Clone, F: FnMut(&B) -> Vector<C>>(w: &Word<B>, mut f: F) -> Vector<Word<C>> {
    let factors: Vec<Vector<C>> = w.0.iter().map(&mut f).collect();
    tensor(&factors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::q;

    #[test]
    fn tensor_expands() {
        let a = Vector::from_terms([("x", q(1)), ("y", q(2))]);
        let b = Vector::basis("z");
        let t = tensor(&[a, b]);
        assert_eq!(t.get(&word(&["y", "z"])), q(2));
        assert_eq!(t.len(), 2);
        assert_eq!(word(&["x", "y"]).to_string(), "[x|y]");
    }
}
