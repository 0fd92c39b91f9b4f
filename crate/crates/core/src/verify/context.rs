//! Truncated bases and shared constructions for the suites.

use std::sync::Arc;

use crate::algebra::{Enveloping, LieAlgebra, MalcevGroup, Mono};
use crate::chern::{Ce, UWedge, Wedge};
use crate::complexes::{bar_words, canonical_words, Bar, HnKey};
use crate::exactlin::{Key, Vector};
use crate::hopf::{Algebra, EnvelopingHopf, Group, GroupAlgebra, GroupEmbedding, MalcevElt, MalcevLaw};
use crate::tensor::Word;

use super::{Caps, ChainComplex, ChainHomotopy, ChainMap, CheckBuilder, HomotopyResult, SuiteError, VerificationReport};
use super::{check_chain_map_with, find_homotopy, reverify, verify_certificate};

/// `U g` truncated to weights `< N`, with its bar constructions and the
/// Chevalley–Eilenberg side.
pub(crate) struct LieCtx {
    pub u: Arc<EnvelopingHopf>,
    pub bar: Arc<Bar<EnvelopingHopf>>,
    pub ce: Arc<Ce>,
    pub caps: Caps,
}

impl LieCtx {
    pub fn new(lie: &Arc<LieAlgebra>, caps: &Caps) -> Result<Self, SuiteError> {
        if !lie.is_graded() {
            return Err(SuiteError::Config(
                "truncation needs a graded nilpotent Lie algebra (weights homogeneous for the bracket)".into(),
            ));
        }
        let u = Arc::new(EnvelopingHopf::from_enveloping(Arc::new(Enveloping::shared(lie.clone()))));
        let bar = Arc::new(Bar::new(u.clone()));
        let ce = Arc::new(Ce::new(u.clone()));
        Ok(Self { u, bar, ce, caps: *caps })
    }

    pub fn weights(&self) -> std::ops::Range<u32> {
        0..self.caps.truncation
    }

    pub fn e_words_of(&self, n: usize, w: u32, normalized: bool) -> Vec<Word<Mono>> {
        canonical_words(n, w, normalized, |k| self.u.monomials_of_weight(k))
    }

    pub fn b_words_of(&self, n: usize, w: u32, normalized: bool) -> Vec<Word<Mono>> {
        bar_words(n, w, normalized, |k| self.u.monomials_of_weight(k))
    }

    /// Words of `E_n` (or `C_n`, `R_n`) of weight `< N`.
    pub fn e_words(&self, n: usize, normalized: bool) -> Vec<Word<Mono>> {
        self.weights().flat_map(|w| self.e_words_of(n, w, normalized)).collect()
    }

    pub fn b_words(&self, n: usize, normalized: bool) -> Vec<Word<Mono>> {
        self.weights().flat_map(|w| self.b_words_of(n, w, normalized)).collect()
    }

    pub fn wedges(&self, n: usize) -> Vec<Wedge> {
        self.weights().flat_map(|w| self.ce.wedges(n, w)).collect()
    }

    /// Wedges of every weight; `∧g` is finite so no truncation is needed.
    pub fn all_wedges(&self, n: usize) -> Vec<Wedge> {
        let top: u32 = (0..self.u.lie().dim()).map(|i| self.u.lie().weight(i)).sum();
        (0..=top).flat_map(|w| self.ce.wedges(n, w)).collect()
    }

    pub fn weight_of(&self, w: &Word<Mono>) -> u32 {
        w.0.iter().map(|m| self.u.enveloping().weight(m)).sum()
    }

    pub fn letters(&self) -> Vec<Mono> {
        (0..self.u.lie().dim()).map(|i| self.u.letter(i)).collect()
    }

    pub fn rw(&self) -> impl Fn(&Word<Mono>) -> String + '_ {
        |w| self.u.render_word(w)
    }

    pub fn rh(&self) -> impl Fn(&HnKey<Word<Mono>>) -> String + '_ {
        |k| format!("u^{}{}", k.col, self.u.render_word(&k.elem))
    }

    pub fn rwedge(&self) -> impl Fn(&Wedge) -> String + '_ {
        |w| self.ce.render(w)
    }

    pub fn ruwedge(&self) -> impl Fn(&UWedge) -> String + '_ {
        |x| format!("{}⊗{}", self.u.render_basis(&x.u), self.ce.render(&x.w))
    }

    /// `(∧g, d)` in one weight, degrees `0..=top`.
    pub fn ce_piece(&self, w: u32, top: usize) -> Result<ChainComplex<Wedge>, SuiteError> {
        Ok(ChainComplex::new((0..=top).map(|n| self.ce.wedges(n, w)).collect(), |x| self.ce.d(x))?)
    }

    /// `(U g ⊗ ∧g, d')` in one weight.
    pub fn resolution_piece(&self, w: u32, top: usize) -> Result<ChainComplex<UWedge>, SuiteError> {
        Ok(ChainComplex::new((0..=top).map(|n| self.ce.resolution_basis(n, w)).collect(), |x| self.ce.d_res(x))?)
    }
}

/// `Q[exp g]` with a few symbolic sample elements: the identity and the
/// exponentials of the first basis elements.
pub(crate) struct GroupCtx {
    pub g: Arc<GroupAlgebra<MalcevLaw>>,
    pub bar: Arc<Bar<GroupAlgebra<MalcevLaw>>>,
    pub samples: Vec<MalcevElt>,
    pub embedding: GroupEmbedding,
}

impl GroupCtx {
    pub fn new(lie: &Arc<LieAlgebra>, caps: &Caps) -> Result<Self, SuiteError> {
        let grp = MalcevGroup::new(Arc::new(Enveloping::shared(lie.clone())))?;
        let embedding = GroupEmbedding::new(grp.enveloping().clone(), caps.truncation);
        let g = Arc::new(GroupAlgebra::malcev(grp));
        let dim = lie.dim();
        let mut samples = vec![g.group().identity()];
        samples.extend((0..dim.min(2)).map(|i| g.exp(&Vector::basis(i))));
        if dim == 1 {
            samples.push(g.exp(&Vector::term(0, crate::exactlin::q(2))));
        }
        let bar = Arc::new(Bar::new(g.clone()));
        Ok(Self { g, bar, samples, embedding })
    }

    pub fn words(&self, len: usize) -> Vec<Word<MalcevElt>> {
        let mut out: Vec<Vec<MalcevElt>> = vec![Vec::new()];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|w| self.samples.iter().map(move |s| [w.clone(), vec![s.clone()]].concat()))
                .collect();
        }
        out.into_iter().map(Word).collect()
    }

    /// Sample words without the identity, i.e. nondegenerate in `B_norm`.
    pub fn proper_words(&self, len: usize) -> Vec<Word<MalcevElt>> {
        let one = self.g.group().identity();
        self.words(len).into_iter().filter(|w| !w.0.contains(&one)).collect()
    }

    pub fn rw(&self) -> impl Fn(&Word<MalcevElt>) -> String + '_ {
        |w| self.g.render_word(w)
    }
}

pub(crate) fn place<K: Key>(col: usize, v: &Vector<K>) -> Vector<HnKey<K>> {
    v.map_keys(|x| HnKey { col, elem: x.clone() })
}

pub(crate) fn caps_into(rep: &mut VerificationReport, caps: &Caps) {
    rep.cap("degree window D", caps.degree);
    rep.cap("column cap P", caps.columns);
    rep.cap("truncation N", caps.truncation);
}

/// Checks `f`, `g` are chain maps on a piece and solves for a homotopy,
/// recording the outcome in `chain`, `homotopy` and the report.
#[allow(clippy::too_many_arguments)]
pub(crate) fn piece_homotopy<K1: Key, K2: Key>(
    rep: &mut VerificationReport,
    piece: &str,
    window: usize,
    src: &ChainComplex<K1>,
    tgt: &ChainComplex<K2>,
    f: &ChainMap<K1, K2>,
    g: &ChainMap<K1, K2>,
    chain: &mut CheckBuilder,
    homotopy: &mut CheckBuilder,
    rs: impl Fn(&K1) -> String,
    rt: impl Fn(&K2) -> String,
) -> Result<Option<ChainHomotopy<K1, K2>>, SuiteError> {
    chain.absorb(&check_chain_map_with(piece, src, tgt, f, window, false, &rs, &rt));
    chain.absorb(&check_chain_map_with(piece, src, tgt, g, window, false, &rs, &rt));
    match find_homotopy(src, tgt, f, g, window)? {
        HomotopyResult::Found(h) => {
            let ok = reverify(src, tgt, f, g, &h);
            homotopy.record(piece, ok, Default::default(), Default::default());
            if !h.is_zero() {
                rep.homotopies.push(h.witness(&format!("{} {piece}", rep.suite), &rs, &rt, ok));
            }
            Ok(Some(h))
        }
        HomotopyResult::None(cert) => {
            let ok = verify_certificate(src, tgt, f, g, &cert);
            let mut w = cert.witness(&format!("{} {piece}", rep.suite));
            if !ok {
                w.name.push_str(" (certificate did not verify)");
            }
            homotopy.record(
                format!("{piece}: no homotopy on window {window}"),
                false,
                w.functional.clone(),
                [("pairing".to_string(), w.pairing.clone())].into(),
            );
            rep.certificates.push(w);
            Ok(None)
        }
    }
}
