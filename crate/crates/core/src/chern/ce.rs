use std::fmt;
use std::sync::Arc;

use num_traits::One;

use crate::algebra::{LieAlgebra, Mono};
use crate::complexes::{compositions_of, HnKey};
use crate::exactlin::{sign, Vector, Q};
use crate::hopf::{Algebra, EnvelopingHopf};
use crate::tensor::Word;

/// `x_{i_1} ∧ … ∧ x_{i_n}` with strictly increasing basis indices.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Wedge(pub Vec<usize>);

impl Wedge {
    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// Sorts `letters`, returning the sign of the sorting permutation, or
    /// `None` when a letter repeats.
    pub fn sorted(mut letters: Vec<usize>) -> Option<(Wedge, Q)> {
        let mut inversions = 0;
        for i in 0..letters.len() {
            for j in i + 1..letters.len() {
                match letters[i].cmp(&letters[j]) {
                    std::cmp::Ordering::Equal => return None,
                    std::cmp::Ordering::Greater => inversions += 1,
                    std::cmp::Ordering::Less => {}
                }
            }
        }
        letters.sort_unstable();
        Some((Wedge(letters), sign(inversions)))
    }
}

impl fmt::Display for Wedge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(|i| format!("x{}", i + 1)).collect();
        write!(f, "{}", parts.join("∧"))
    }
}

/// `u ⊗ x_{i_1} ∧ … ∧ x_{i_n}` in `U g ⊗ ∧g`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct UWedge {
    pub u: Mono,
    pub w: Wedge,
}

impl fmt::Display for UWedge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}⊗{}", self.u, self.w)
    }
}

/// Every permutation of `0..n` with its sign.
pub fn permutations(n: usize) -> Vec<(Vec<usize>, Q)> {
    if n == 0 {
        return vec![(Vec::new(), Q::one())];
    }
    let mut out = Vec::new();
    for (p, s) in permutations(n - 1) {
        // insert n-1 at position k: it passes over the n-1-k entries after it
        for k in 0..n {
            let mut q = p.clone();
            q.insert(k, n - 1);
            out.push((q, &s * sign(n - 1 - k)));
        }
    }
    out
}

/// The Chevalley–Eilenberg complex `(∧g, d)`, its resolution
/// `(U g ⊗ ∧g, d')`, and the maps comparing them with the bar constructions
/// of `U g`: antisymmetrization `e`, `1 ⊗ e`, the lift `θ` of the
/// Loday–Quillen map, and `ψ`.
pub struct Ce {
    u: Arc<EnvelopingHopf>,
}

impl Ce {
    pub fn new(u: Arc<EnvelopingHopf>) -> Self {
        Self { u }
    }

    pub fn enveloping(&self) -> &Arc<EnvelopingHopf> {
        &self.u
    }

    pub fn lie(&self) -> &LieAlgebra {
        self.u.lie()
    }

    pub fn weight(&self, w: &Wedge) -> u32 {
        w.0.iter().map(|&i| self.lie().weight(i)).sum()
    }

    pub fn render(&self, w: &Wedge) -> String {
        if w.0.is_empty() {
            return "1".into();
        }
        let names = self.lie().names();
        w.0.iter().map(|&i| names[i].clone()).collect::<Vec<_>>().join("∧")
    }

    pub fn render_vec(&self, v: &Vector<Wedge>) -> String {
        crate::hopf::render_with(v, |w| self.render(w))
    }

    /// Basis of `∧^n g` in the given weight.
    pub fn wedges(&self, n: usize, weight: u32) -> Vec<Wedge> {
        fn rec(start: usize, left: usize, weight: u32, lie: &LieAlgebra, cur: &mut Vec<usize>, out: &mut Vec<Wedge>) {
            if left == 0 {
                if weight == 0 {
                    out.push(Wedge(cur.clone()));
                }
                return;
            }
            for i in start..lie.dim() {
                let w = lie.weight(i);
                if w <= weight {
                    cur.push(i);
                    rec(i + 1, left - 1, weight - w, lie, cur, out);
                    cur.pop();
                }
            }
        }
        let mut out = Vec::new();
        rec(0, n, weight, self.lie(), &mut Vec::new(), &mut out);
        out.sort();
        out
    }

    /// Basis of `(U g ⊗ ∧^n g)` in the given weight.
    pub fn resolution_basis(&self, n: usize, weight: u32) -> Vec<UWedge> {
        let mut out = Vec::new();
        for split in compositions_of(weight, &[0, 0]) {
            for w in self.wedges(n, split[1]) {
                for u in self.u.monomials_of_weight(split[0]) {
                    out.push(UWedge { u, w: w.clone() });
                }
            }
        }
        out.sort();
        out
    }

    /// `Σ_{a<b} (-1)^{a+b} [x_a, x_b] ∧ x_1 ∧ … x̂_a … x̂_b … ∧ x_n`, positions
    /// counted from 1.
    fn bracket_terms(&self, w: &Wedge) -> Vector<Wedge> {
        let x = &w.0;
        let mut out = Vector::zero();
        for a in 0..x.len() {
            for b in a + 1..x.len() {
                let rest: Vec<usize> = x.iter().enumerate().filter(|&(k, _)| k != a && k != b).map(|(_, &v)| v).collect();
                for (k, c) in self.lie().bracket_basis(x[a], x[b]) {
                    let mut letters = vec![*k];
                    letters.extend(rest.iter().copied());
                    if let Some((sorted, s)) = Wedge::sorted(letters) {
                        out.add_term(sorted, c * s * sign(a + b));
                    }
                }
            }
        }
        out
    }

    /// The differential of `∧g`.
    pub fn d(&self, w: &Wedge) -> Vector<Wedge> {
        self.bracket_terms(w)
    }

    pub fn d_vec(&self, v: &Vector<Wedge>) -> Vector<Wedge> {
        v.map_linear(|w| self.d(w))
    }

    /// `d'(u ⊗ x_1 ∧ … ∧ x_n) = Σ_i (-1)^{i+1} u x_i ⊗ … x̂_i … + u ⊗ d(x_1 ∧ … ∧ x_n)`.
    pub fn d_res(&self, x: &UWedge) -> Vector<UWedge> {
        let dim = self.lie().dim();
        let mut out = Vector::zero();
        for (i, &l) in x.w.0.iter().enumerate() {
            let mut rest = x.w.0.clone();
            rest.remove(i);
            for (m, c) in &self.u.mul_basis(&x.u, &Mono::letter(dim, l)) {
                out.add_term(UWedge { u: m.clone(), w: Wedge(rest.clone()) }, c * sign(i));
            }
        }
        for (w, c) in &self.bracket_terms(&x.w) {
            out.add_term(UWedge { u: x.u.clone(), w: w.clone() }, c.clone());
        }
        out
    }

    pub fn d_res_vec(&self, v: &Vector<UWedge>) -> Vector<UWedge> {
        v.map_linear(|x| self.d_res(x))
    }

    /// Left multiplication on the `U g` factor.
    pub fn act(&self, a: &Mono, v: &Vector<UWedge>) -> Vector<UWedge> {
        let mut out = Vector::zero();
        for (x, c) in v {
            for (m, c2) in &self.u.mul_basis(a, &x.u) {
                out.add_term(UWedge { u: m.clone(), w: x.w.clone() }, c * c2);
            }
        }
        out
    }

    /// `ε ⊗ 1 : U g ⊗ ∧g → ∧g`.
    pub fn augment(&self, v: &Vector<UWedge>) -> Vector<Wedge> {
        v.iter().filter(|(x, _)| x.u.is_one()).map(|(x, c)| (x.w.clone(), c.clone())).collect()
    }

    fn antisymmetrize(&self, letters: &[usize]) -> Vector<Vec<Mono>> {
        let dim = self.lie().dim();
        permutations(letters.len())
            .into_iter()
            .map(|(p, s)| (p.iter().map(|&k| Mono::letter(dim, letters[k])).collect(), s))
            .collect()
    }

    /// `e(x_1 ∧ … ∧ x_n) = Σ_σ sg(σ) x_{σ(1)} ⊗ … ⊗ x_{σ(n)}` in `B_n(U g)`.
    pub fn e(&self, w: &Wedge) -> Vector<Word<Mono>> {
        self.antisymmetrize(&w.0).map_keys(|v| Word(v.clone()))
    }

    pub fn e_vec(&self, v: &Vector<Wedge>) -> Vector<Word<Mono>> {
        v.map_linear(|w| self.e(w))
    }

    /// `(1 ⊗ e)(u ⊗ x) = u ⊗ e(x)` in `E_n(U g)`.
    pub fn one_e(&self, x: &UWedge) -> Vector<Word<Mono>> {
        self.antisymmetrize(&x.w.0).map_keys(|v| {
            let mut letters = vec![x.u.clone()];
            letters.extend(v.iter().cloned());
            Word(letters)
        })
    }

    /// `θ(x_0 ∧ … ∧ x_n) = x_0 ⊗ e(x_1 ∧ … ∧ x_n)`, a representative in
    /// `C_n(U g)` of its class in `C^λ_n`; zero on `∧^0`.
    pub fn theta(&self, w: &Wedge) -> Vector<Word<Mono>> {
        let Some((&x0, rest)) = w.0.split_first() else {
            return Vector::zero();
        };
        let head = Mono::letter(self.lie().dim(), x0);
        self.antisymmetrize(rest).map_keys(|v| {
            let mut letters = vec![head.clone()];
            letters.extend(v.iter().cloned());
            Word(letters)
        })
    }

    pub fn theta_vec(&self, v: &Vector<Wedge>) -> Vector<Word<Mono>> {
        v.map_linear(|w| self.theta(w))
    }

    /// `ψ(x) = (e(x), 0, 0, …)`, the mixed-complex map `∧g → HN(M(U g))`.
    pub fn psi(&self, v: &Vector<Wedge>) -> Vector<HnKey<Word<Mono>>> {
        self.e_vec(v).map_keys(|w| HnKey { col: 0, elem: w.clone() })
    }
}
