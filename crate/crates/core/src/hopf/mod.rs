//! Cocommutative Hopf algebras given by evaluators on basis elements:
//! truncated enveloping algebras, group algebras of Malcev groups and of
//! finite groups, iterated coproducts under a precision contract, and an
//! axiom checker.

mod axioms;
mod embed;
mod enveloping;
mod group;

use std::hash::Hash;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactlin::{Key, Vector, Q};
use crate::tensor::Word;

pub use axioms::check_hopf_axioms;
pub use embed::GroupEmbedding;
pub use enveloping::EnvelopingHopf;
pub use group::{FiniteGroup, Group, GroupAlgebra, MalcevElt, MalcevLaw};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HopfError {
    #[error("precision error: {factors} factors valid mod F_{out} need input mod F_{required}, got F_{given}")]
    Precision { factors: usize, out: u32, required: u32, given: u32 },
    #[error("invalid structure: {0}")]
    Invalid(String),
}

/// A unital associative algebra with a distinguished basis.
pub trait Algebra: Send + Sync {
    type B: Key + Hash + Send + Sync;

    fn one(&self) -> Vector<Self::B>;

    /// The unit, when it is itself a basis element.
    fn unit_basis(&self) -> Option<Self::B>;

    fn mul_basis(&self, a: &Self::B, b: &Self::B) -> Vector<Self::B>;

    fn render_basis(&self, b: &Self::B) -> String {
        b.to_string()
    }

    /// Filtration weight of a basis element; products and coproducts never
    /// lower the total weight.
    fn weight(&self, _b: &Self::B) -> u32 {
        0
    }

    fn mul(&self, u: &Vector<Self::B>, v: &Vector<Self::B>) -> Vector<Self::B> {
        let mut out = Vector::zero();
        for (a, ca) in u {
            for (b, cb) in v {
                out.axpy(&(ca * cb), &self.mul_basis(a, b));
            }
        }
        out
    }

    /// The ordered product of the letters of a word; the unit for the empty
    /// word.
    fn mul_word(&self, w: &[Self::B]) -> Vector<Self::B> {
        let mut acc = self.one();
        for b in w {
            let mut next = Vector::zero();
            for (a, c) in &acc {
                next.axpy(c, &self.mul_basis(a, b));
            }
            acc = next;
        }
        acc
    }

    fn render(&self, v: &Vector<Self::B>) -> String {
        render_with(v, |b| self.render_basis(b))
    }

    fn render_word(&self, w: &Word<Self::B>) -> String {
        let parts: Vec<String> = w.0.iter().map(|b| self.render_basis(b)).collect();
        format!("[{}]", parts.join("|"))
    }

    fn render_words(&self, v: &Vector<Word<Self::B>>) -> String {
        render_with(v, |w| self.render_word(w))
    }
}

pub trait Augmented: Algebra {
    fn counit_basis(&self, b: &Self::B) -> Q;

    fn counit(&self, v: &Vector<Self::B>) -> Q {
        v.iter().fold(Q::zero(), |acc, (b, c)| acc + c * self.counit_basis(b))
    }

    /// Whether `b` spans the complement `k·1` of the augmentation ideal in
    /// the basis decomposition used for normalization.
    fn is_unit_basis(&self, b: &Self::B) -> bool {
        self.unit_basis().as_ref() == Some(b)
    }
}

pub trait Hopf: Augmented {
    /// `Δ(b) = b^{(0)} ⊗ b^{(1)}` as words of length two.
    fn comul_basis(&self, b: &Self::B) -> Vector<Word<Self::B>>;

    fn antipode_basis(&self, b: &Self::B) -> Vector<Self::B>;

    /// The `n`-fold coproduct `b ↦ b^{(0)} ⊗ … ⊗ b^{(n-1)}`, for `n ≥ 1`.
    fn delta_n(&self, b: &Self::B, n: usize) -> Vector<Word<Self::B>> {
        iterate_comul(self, b, n)
    }

    fn antipode(&self, v: &Vector<Self::B>) -> Vector<Self::B> {
        v.map_linear(|b| self.antipode_basis(b))
    }

    fn comul(&self, v: &Vector<Self::B>) -> Vector<Word<Self::B>> {
        v.map_linear(|b| self.comul_basis(b))
    }
}

/// `Δ^{(n)}` by splitting the last factor repeatedly.
pub fn iterate_comul<H: Hopf + ?Sized>(h: &H, b: &H::B, n: usize) -> Vector<Word<H::B>> {
    assert!(n >= 1, "iterated coproduct needs at least one factor");
    let mut acc = Vector::basis(Word(vec![b.clone()]));
    for _ in 1..n {
        let mut next = Vector::zero();
        for (w, c) in &acc {
            let (last, init) = w.0.split_last().expect("nonempty word");
            for (pair, c2) in &h.comul_basis(last) {
                let mut w2 = init.to_vec();
                w2.extend(pair.0.iter().cloned());
                next.add_term(Word(w2), c * c2);
            }
        }
        acc = next;
    }
    acc
}

/// The iterated coproduct of `h` into `n` factors, each valid modulo `F_M`,
/// given that `h` is known modulo `F_{input}`. Requires `input ≥ n·M`.
pub fn delta_iter<H: Hopf + ?Sized>(
    hopf: &H,
    h: &Vector<H::B>,
    n: usize,
    out: u32,
    input: u32,
) -> Result<Vector<Word<H::B>>, HopfError> {
    let required = n as u32 * out;
    if input < required {
        return Err(HopfError::Precision { factors: n, out, required, given: input });
    }
    let mut acc = Vector::zero();
    for (b, c) in h {
        if hopf.weight(b) >= input {
            continue;
        }
        for (w, c2) in &hopf.delta_n(b, n) {
            if w.0.iter().all(|f| hopf.weight(f) < out) {
                acc.add_term(w.clone(), c * c2);
            }
        }
    }
    Ok(acc)
}

/// Whether `Δb = b ⊗ b`.
pub fn is_grouplike<H: Hopf + ?Sized>(h: &H, b: &H::B) -> bool {
    h.comul_basis(b) == Vector::basis(Word(vec![b.clone(), b.clone()]))
}

/// Whether `Δv = v ⊗ 1 + 1 ⊗ v`.
pub fn is_primitive<H: Hopf + ?Sized>(h: &H, v: &Vector<H::B>) -> bool {
    let one = h.one();
    let expected = &crate::tensor::tensor(&[v.clone(), one.clone()]) + &crate::tensor::tensor(&[one, v.clone()]);
    h.comul(v) == expected
}

pub(crate) fn render_with<K: Ord + Clone, F: Fn(&K) -> String>(v: &Vector<K>, f: F) -> String {
    if v.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (k, c)) in v.iter().enumerate() {
        let neg = c < &Q::zero();
        let mag = if neg { -c.clone() } else { c.clone() };
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if !mag.is_one() {
            out.push_str(&crate::exactlin::format_q(&mag));
            out.push('*');
        }
        out.push_str(&f(k));
    }
    out
}

impl Algebra for crate::algebra::AssocAlgebra {
    type B = usize;

    fn one(&self) -> Vector<usize> {
        self.unit().clone()
    }

    fn unit_basis(&self) -> Option<usize> {
        self.unit_index()
    }

    fn mul_basis(&self, a: &usize, b: &usize) -> Vector<usize> {
        crate::algebra::AssocAlgebra::mul_basis(self, *a, *b).clone()
    }

    fn render_basis(&self, b: &usize) -> String {
        self.names()[*b].clone()
    }

    fn weight(&self, b: &usize) -> u32 {
        self.degree(*b).unwrap_or(0)
    }
}
