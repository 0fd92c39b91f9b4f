use std::sync::Arc;

use crate::algebra::{Enveloping, Mono};
use num_traits::One;

use crate::exactlin::{Vector, Q};
use crate::tensor::Word;

use super::MalcevElt;

/// The algebra map `k[G] → U g / F_N`, `exp ξ ↦ Σ_{k} ξ^k / k!`, which
/// identifies `k[G] / I_G^N` with `U g / F_N` for `G = exp g`.
#[derive(Clone, Debug)]
pub struct GroupEmbedding {
    env: Arc<Enveloping>,
    level: u32,
}

impl GroupEmbedding {
    pub fn new(env: Arc<Enveloping>, level: u32) -> Self {
        Self { env, level }
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn element(&self, g: &MalcevElt) -> Vector<Mono> {
        self.env.exp(&g.log(), self.level)
    }

    pub fn apply(&self, v: &Vector<MalcevElt>) -> Vector<Mono> {
        v.map_linear(|g| self.element(g))
    }

    /// Factorwise image of a tensor word, truncated to total weight `< N`.
    pub fn word(&self, w: &Word<MalcevElt>) -> Vector<Word<Mono>> {
        // prune partial words by weight as they grow
        let mut acc: Vec<(Vec<Mono>, u32, Q)> = vec![(Vec::new(), 0, Q::one())];
        for g in &w.0 {
            let f = self.element(g);
            let mut next = Vec::new();
            for (prefix, wt, c) in &acc {
                for (m, cm) in &f {
                    let wt = wt + self.env.weight(m);
                    if wt < self.level {
                        let mut p = prefix.clone();
                        p.push(m.clone());
                        next.push((p, wt, c * cm));
                    }
                }
            }
            acc = next;
        }
        acc.into_iter().map(|(p, _, c)| (Word(p), c)).collect()
    }

    pub fn words(&self, v: &Vector<Word<MalcevElt>>) -> Vector<Word<Mono>> {
        v.map_linear(|w| self.word(w))
    }

    pub fn truncate(&self, v: &Vector<Word<Mono>>) -> Vector<Word<Mono>> {
        v.filtered(|w| w.0.iter().map(|m| self.env.weight(m)).sum::<u32>() < self.level)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{LieAlgebra, MalcevGroup};
    use crate::hopf::{Algebra, EnvelopingHopf, Group, GroupAlgebra, Hopf};
    use crate::tensor::word;

    #[test]
    fn embedding_respects_structure() {
        let grp = MalcevGroup::from_lie(LieAlgebra::heisenberg()).unwrap();
        let env = grp.enveloping().clone();
        let u = EnvelopingHopf::from_enveloping(env.clone());
        let kg = GroupAlgebra::malcev(grp);
        let n = 4;
        let phi = GroupEmbedding::new(env.clone(), n);
        let gens = [Vector::basis(0), Vector::basis(1), Vector::basis(2), Vector::from_terms([(0, crate::exactlin::q(2)), (2, crate::exactlin::q(-1))])];
        let elts: Vec<MalcevElt> = gens.iter().map(|v| kg.exp(v)).collect();
        for a in &elts {
            let pa = phi.element(a);
            let lhs = phi.apply(&kg.antipode_basis(a));
            assert_eq!(lhs, env.truncate(&u.antipode(&pa), n));
            let dl = phi.words(&kg.comul_basis(a));
            assert_eq!(dl, phi.truncate(&u.comul(&pa)));
            for b in &elts {
                let lhs = phi.apply(&kg.mul_basis(a, b));
                let rhs = env.pbw_product(&pa, &phi.element(b), n);
                assert_eq!(lhs, rhs, "{a} * {b}");
            }
        }
        let e = kg.group().identity();
        assert_eq!(phi.word(&word(&[e.clone(), e])), Vector::basis(word(&[env.one(), env.one()])));
    }
}
