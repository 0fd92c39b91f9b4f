use std::sync::Arc;

use crate::algebra::{AssocAlgebra, Enveloping, Mono, Triangular};
use crate::complexes::{bar_words, canonical_words, Bar, Canonical, CyclicModule, HnKey, HnSlice, Mixed};
use crate::exactlin::Vector;
use crate::hopf::EnvelopingHopf;
use crate::tensor::{tensor, Word};

use super::ce::{Ce, Wedge};
use super::comparison::Comparison;
use super::lift::CLift;
use super::ChernError;

/// The two relative Chern characters of a triangular block `T ⊂ M_n(A)`:
/// `ch^- = tr ∘ j ∘ c` and `ch_rht = B ∘ ρ ∘ sw`, both from the normalized
/// bar complex of `U t` into the negative cyclic complex of `(A, I)`.
pub struct ChernBlock {
    t: Arc<Triangular>,
    base: Arc<AssocAlgebra>,
    u: Arc<EnvelopingHopf>,
    c: CLift<EnvelopingHopf>,
    ce: Arc<Ce>,
    sw: Comparison,
    target: Arc<Canonical<AssocAlgebra>>,
    columns: usize,
}

impl ChernBlock {
    pub fn new(t: Triangular, columns: usize) -> Result<Self, ChernError> {
        if !t.lie().is_graded() {
            return Err(ChernError::Unsupported("block comparison needs a graded base algebra".into()));
        }
        let base = Arc::new(t.spec().base.clone());
        let unit = base
            .unit_index()
            .ok_or_else(|| ChernError::Unsupported("unit of the base algebra is not a basis element".into()))?;
        for a in 0..base.dim() {
            match base.degree(a) {
                Some(0) if a == unit => {}
                Some(d) if d > 0 && a != unit => {}
                _ => {
                    return Err(ChernError::Unsupported(format!(
                        "basis element {} needs positive degree",
                        base.names()[a]
                    )))
                }
            }
        }
        let u = Arc::new(EnvelopingHopf::from_enveloping(Arc::new(Enveloping::shared(t.lie().clone()))));
        let bar = Arc::new(Bar::new(u.clone()));
        let ce = Arc::new(Ce::new(u.clone()));
        let sw = Comparison::new(ce.clone(), bar.clone())?;
        let c = CLift::new(bar, true, columns);
        let target = Arc::new(Canonical::new(base.clone()));
        Ok(Self { t: Arc::new(t), base, u, c, ce, sw, target, columns })
    }

    pub fn triangular(&self) -> &Triangular {
        &self.t
    }

    pub fn base(&self) -> &AssocAlgebra {
        &self.base
    }

    pub fn enveloping(&self) -> &Arc<EnvelopingHopf> {
        &self.u
    }

    pub fn ce(&self) -> &Arc<Ce> {
        &self.ce
    }

    pub fn comparison(&self) -> &Comparison {
        &self.sw
    }

    pub fn columns(&self) -> usize {
        self.columns
    }

    /// Weight of `U t` per unit of `A`-degree.
    pub fn alpha(&self) -> u32 {
        self.t.degree_scale()
    }

    pub fn target(&self) -> &Canonical<AssocAlgebra> {
        &self.target
    }

    fn mixed(&self) -> Mixed<'_, Canonical<AssocAlgebra>> {
        Mixed::new(&self.target, true)
    }

    /// `j : U t → M_n(A)` on a PBW monomial.
    pub fn j_mono(&self, m: &Mono) -> Vector<usize> {
        let amb = self.t.ambient();
        m.letters().iter().fold(amb.unit().clone(), |acc, &l| amb.mul(&acc, self.t.matrix(l)))
    }

    pub fn j_word(&self, w: &Word<Mono>) -> Vector<Word<usize>> {
        tensor(&w.0.iter().map(|m| self.j_mono(m)).collect::<Vec<_>>())
    }

    /// The generalized trace `C(M_n(A)) → C(A)` on a word of matrix units:
    /// `E_{i_0 j_0} a_0 ⊗ … ⊗ E_{i_k j_k} a_k ↦ a_0 ⊗ … ⊗ a_k` when
    /// `j_0 = i_1, …, j_k = i_0`, and zero otherwise.
    pub fn trace(&self, w: &Word<usize>) -> Option<Word<usize>> {
        let (n, da) = (self.t.spec().n, self.base.dim());
        let parts: Vec<(usize, usize, usize)> = w.0.iter().map(|&k| ((k / da) / n, (k / da) % n, k % da)).collect();
        let chained = (0..parts.len()).all(|p| parts[p].1 == parts[(p + 1) % parts.len()].0);
        chained.then(|| Word(parts.iter().map(|x| x.2).collect()))
    }

    /// `tr ∘ j : C(U t) → C(A)`.
    pub fn tr_j(&self, v: &Vector<Word<Mono>>) -> Vector<Word<usize>> {
        let mut out = Vector::zero();
        for (w, c) in v {
            for (m, c2) in &self.j_word(w) {
                if let Some(a) = self.trace(m) {
                    out.add_term(a, c * c2);
                }
            }
        }
        self.target.normalize(&out)
    }

    /// `ch^-(x) = tr j c(x)`, columnwise.
    pub fn ch_minus(&self, v: &Vector<Word<Mono>>) -> Vector<HnKey<Word<usize>>> {
        let mut out = Vector::zero();
        for (k, c) in &self.c.apply(v) {
            for (a, c2) in &self.tr_j(&Vector::basis(k.elem.clone())) {
                out.add_term(HnKey { col: k.col, elem: a.clone() }, c * c2);
            }
        }
        out
    }

    /// `ρ = tr j θ : ∧t → C^λ(A)`, a representative in `C(A)`.
    pub fn rho(&self, v: &Vector<Wedge>) -> Vector<Word<usize>> {
        self.tr_j(&self.ce.theta_vec(v))
    }

    /// `ch_rht(x) = (B ρ sw(x), 0, …)`.
    pub fn ch_rht(&self, v: &Vector<Word<Mono>>) -> Result<Vector<HnKey<Word<usize>>>, ChernError> {
        let r = self.rho(&self.sw.sw(v)?);
        let m = self.mixed();
        Ok(HnSlice::<Mixed<'_, Canonical<AssocAlgebra>>>::place(0, &crate::complexes::MixedComplex::big_b_vec(&m, &r)))
    }

    /// Basis of `B_n(U t)_norm` in the given weight.
    pub fn source_basis(&self, n: usize, weight: u32) -> Vec<Word<Mono>> {
        bar_words(n, weight, true, |w| self.u.monomials_of_weight(w))
    }

    /// Normalized words of `C_k(A)` of `A`-degree `deg` with a factor in `I`.
    pub fn target_words(&self, k: usize, deg: u32) -> Vec<Word<usize>> {
        let by_degree = |d: u32| (0..self.base.dim()).filter(|&a| self.base.degree(a) == Some(d)).collect::<Vec<_>>();
        let words = canonical_words(k, deg, true, by_degree);
        self.target.relative_words(&words, |&a| self.base.in_ideal(&Vector::basis(a)))
    }

    /// Basis of the relative `HN(A, I)_norm` in total degree `n`, columns
    /// `0..=columns`, in `A`-degree `deg`.
    pub fn target_basis(&self, n: i64, deg: u32) -> Vec<HnKey<Word<usize>>> {
        let m = self.mixed();
        HnSlice::new(&m, self.columns).basis(n, |k| self.target_words(k, deg))
    }

    /// The total differential of the truncated target.
    pub fn target_d(&self, k: &HnKey<Word<usize>>) -> Vector<HnKey<Word<usize>>> {
        let m = self.mixed();
        HnSlice::new(&m, self.columns).d(k)
    }
}
