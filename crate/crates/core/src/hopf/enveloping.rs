use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_traits::One;

use crate::algebra::{Enveloping, LieAlgebra, Mono};
use crate::exactlin::{factorial, Vector, Q};
use crate::tensor::Word;

use super::{Algebra, Augmented, Hopf};

/// `U g` in the PBW basis as a Hopf algebra. Elements of `g` are primitive;
/// the filtration weight of a monomial is the sum of its letter weights.
pub struct EnvelopingHopf {
    env: Arc<Enveloping>,
    deltas: Mutex<HashMap<(Mono, usize), Vector<Word<Mono>>>>,
    antipodes: Mutex<HashMap<Mono, Vector<Mono>>>,
}

impl std::fmt::Debug for EnvelopingHopf {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("EnvelopingHopf").field("dim", &self.env.dim()).finish()
    }
}

impl EnvelopingHopf {
    pub fn new(lie: LieAlgebra) -> Self {
        Self::from_enveloping(Arc::new(Enveloping::new(lie)))
    }

    pub fn from_enveloping(env: Arc<Enveloping>) -> Self {
        Self { env, deltas: Mutex::new(HashMap::new()), antipodes: Mutex::new(HashMap::new()) }
    }

    pub fn enveloping(&self) -> &Arc<Enveloping> {
        &self.env
    }

    pub fn lie(&self) -> &LieAlgebra {
        self.env.lie()
    }

    pub fn letter(&self, i: usize) -> Mono {
        self.env.letter(i)
    }

    /// Basis of `U g / F_n`: monomials of weight `< n`.
    pub fn basis_below(&self, n: u32) -> Vec<Mono> {
        self.env.basis_below(n)
    }

    pub fn monomials_of_weight(&self, w: u32) -> Vec<Mono> {
        self.env.monomials_of_weight(w)
    }
}

impl Algebra for EnvelopingHopf {
    type B = Mono;

    fn one(&self) -> Vector<Mono> {
        Vector::basis(self.env.one())
    }

    fn unit_basis(&self) -> Option<Mono> {
        Some(self.env.one())
    }

    fn mul_basis(&self, a: &Mono, b: &Mono) -> Vector<Mono> {
        self.env.mul_mono(a, b)
    }

    fn render_basis(&self, b: &Mono) -> String {
        self.env.render(b)
    }

    fn weight(&self, b: &Mono) -> u32 {
        self.env.weight(b)
    }
}

impl Augmented for EnvelopingHopf {
    fn counit_basis(&self, b: &Mono) -> Q {
        self.env.counit_mono(b)
    }
}

impl Hopf for EnvelopingHopf {
    fn comul_basis(&self, b: &Mono) -> Vector<Word<Mono>> {
        self.delta_n(b, 2)
    }

    fn antipode_basis(&self, b: &Mono) -> Vector<Mono> {
        if let Some(v) = self.antipodes.lock().unwrap().get(b) {
            return v.clone();
        }
        let v = self.env.antipode_mono(b);
        self.antipodes.lock().unwrap().insert(b.clone(), v.clone());
        v
    }

    /// `Δ^{(n)}(x^e) = Σ Π_i multinomial(e_i; a_{1i}, …, a_{ni}) x^{a_1} ⊗ … ⊗ x^{a_n}`
    /// over all splittings `e = a_1 + … + a_n`.
    fn delta_n(&self, b: &Mono, n: usize) -> Vector<Word<Mono>> {
        assert!(n >= 1, "iterated coproduct needs at least one factor");
        let key = (b.clone(), n);
        if let Some(v) = self.deltas.lock().unwrap().get(&key) {
            return v.clone();
        }
        let dim = b.0.len();
        let mut acc: Vec<(Vec<Vec<u32>>, Q)> = vec![(vec![Vec::with_capacity(dim); n], Q::one())];
        for &e in &b.0 {
            let mut next = Vec::new();
            for parts in compositions(e, n) {
                let mut coeff = Q::from_integer(factorial(e as u64));
                for &p in &parts {
                    coeff /= Q::from_integer(factorial(p as u64));
                }
                for (factors, c) in &acc {
                    let mut f2 = factors.clone();
                    for (slot, &p) in f2.iter_mut().zip(&parts) {
                        slot.push(p);
                    }
                    next.push((f2, c * &coeff));
                }
            }
            acc = next;
        }
        let v: Vector<Word<Mono>> =
            acc.into_iter().map(|(factors, c)| (Word(factors.into_iter().map(Mono).collect()), c)).collect();
        self.deltas.lock().unwrap().insert(key, v.clone());
        v
    }
}

/// Ordered ways of writing `e` as a sum of `n` nonnegative parts.
fn compositions(e: u32, n: usize) -> Vec<Vec<u32>> {
    if n == 1 {
        return vec![vec![e]];
    }
    let mut out = Vec::new();
    for first in 0..=e {
        for mut rest in compositions(e - first, n - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::q;
    use crate::hopf::{delta_iter, is_primitive, iterate_comul, HopfError};
    use crate::tensor::word;

    fn mono(e: &[u32]) -> Mono {
        Mono(e.to_vec())
    }

    #[test]
    fn primitive_and_square() {
        let u = EnvelopingHopf::new(LieAlgebra::abelian(1));
        let x = mono(&[1]);
        let one = mono(&[0]);
        assert!(is_primitive(&u, &Vector::basis(x.clone())));
        let d = u.comul_basis(&mono(&[2]));
        let expected = Vector::from_terms([
            (word(&[mono(&[2]), one.clone()]), q(1)),
            (word(&[x.clone(), x.clone()]), q(2)),
            (word(&[one, mono(&[2])]), q(1)),
        ]);
        assert_eq!(d, expected);
    }

    #[test]
    fn heisenberg_antipode() {
        let u = EnvelopingHopf::new(LieAlgebra::heisenberg());
        let xy = mono(&[1, 1, 0]);
        // S(xy) = yx = xy - z
        let expected = Vector::from_terms([(xy.clone(), q(1)), (mono(&[0, 0, 1]), q(-1))]);
        assert_eq!(u.antipode_basis(&xy), expected);
        assert_eq!(u.antipode(&u.antipode_basis(&xy)), Vector::basis(xy));
    }

    #[test]
    fn multinomial_matches_iteration() {
        let u = EnvelopingHopf::new(LieAlgebra::heisenberg());
        for m in u.basis_below(5) {
            for n in 1..=4 {
                assert_eq!(u.delta_n(&m, n), iterate_comul(&u, &m, n), "{m} n={n}");
            }
        }
    }

    #[test]
    fn abelian_product_of_primitives() {
        let u = EnvelopingHopf::new(LieAlgebra::abelian(2));
        let one = mono(&[0, 0]);
        let (x, y, xy) = (mono(&[1, 0]), mono(&[0, 1]), mono(&[1, 1]));
        let expected = Vector::from_terms([
            (word(&[xy.clone(), one.clone()]), q(1)),
            (word(&[x.clone(), y.clone()]), q(1)),
            (word(&[y, x]), q(1)),
            (word(&[one, xy.clone()]), q(1)),
        ]);
        assert_eq!(delta_iter(&u, &Vector::basis(xy), 2, 3, 6).unwrap(), expected);
    }

    #[test]
    fn precision_budget() {
        let u = EnvelopingHopf::new(LieAlgebra::heisenberg());
        let h = Vector::basis(mono(&[1, 1, 1]));
        let err = delta_iter(&u, &h, 3, 2, 5).unwrap_err();
        assert_eq!(err, HopfError::Precision { factors: 3, out: 2, required: 6, given: 5 });
        let low = delta_iter(&u, &h, 3, 2, 6).unwrap();
        let high = delta_iter(&u, &h, 3, 3, 9).unwrap();
        let truncated = high.filtered(|w| w.0.iter().all(|f| u.weight(f) < 2));
        assert_eq!(low, truncated);
    }
}
