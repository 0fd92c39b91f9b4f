//! Block-level Chern character suites.

use std::sync::Arc;

use crate::algebra::{Mono, Triangular, TriangularSpec};
use crate::chern::{tau, ChernBlock, Wedge};
use crate::complexes::{Bar, CyclicModule, HnKey};
use crate::exactlin::Vector;
use crate::hopf::Algebra;
use crate::tensor::Word;

use super::context::{caps_into, piece_homotopy};
use super::{Caps, ChainComplex, ChainMap, CheckBuilder, Instance, SuiteError, VerificationReport};

fn block(spec: &TriangularSpec, caps: &Caps) -> Result<ChernBlock, SuiteError> {
    let t = Triangular::build(spec.clone())?;
    Ok(ChernBlock::new(t, caps.columns)?)
}

fn source_piece(b: &ChernBlock, w: u32, top: usize) -> Result<ChainComplex<Word<Mono>>, SuiteError> {
    let bar = Bar::new(b.enveloping().clone());
    let bv = bar.b();
    // the relative complex has nothing in degree 0
    let bases = (0..=top).map(|n| if n == 0 { Vec::new() } else { b.source_basis(n, w) }).collect();
    Ok(ChainComplex::new(bases, |x| bv.normalize(&bv.boundary(x)))?)
}

fn target_piece(b: &ChernBlock, deg: Option<u32>, top: usize) -> Result<ChainComplex<HnKey<Word<usize>>>, SuiteError> {
    let bases = (0..=top).map(|n| deg.map_or_else(Vec::new, |d| b.target_basis(n as i64, d))).collect();
    Ok(ChainComplex::new(bases, |k| b.target_d(k))?)
}

struct Renderers<'a>(&'a ChernBlock);

impl Renderers<'_> {
    fn source(&self, w: &Word<Mono>) -> String {
        self.0.enveloping().render_word(w)
    }

    fn target(&self, k: &HnKey<Word<usize>>) -> String {
        format!("u^{}{}", k.col, self.0.base().render_word(&k.elem))
    }

    fn word(&self, w: &Word<usize>) -> String {
        self.0.base().render_word(w)
    }
}

fn block_report(name: &str, spec: &TriangularSpec, caps: &Caps) -> VerificationReport {
    let mut rep = VerificationReport::new(name);
    caps_into(&mut rep, caps);
    let sigma: Vec<String> = spec.sigma.iter().map(|(i, j)| format!("{}<{}", i + 1, j + 1)).collect();
    rep.cap("block", format!("n={} σ={{{}}}", spec.n, sigma.join(",")));
    rep
}

/// The A-degree of a weight piece, when it lands anywhere.
fn target_degree(b: &ChernBlock, w: u32) -> Option<u32> {
    (w % b.alpha() == 0).then(|| w / b.alpha())
}

pub(crate) fn lem_jc_ch(inst: &Instance, caps: &Caps) -> Result<VerificationReport, SuiteError> {
    let spec = inst.triangular_or("lem:jc-ch")?;
    let b = block(spec, caps)?;
    let mut rep = block_report("lem:jc-ch", spec, caps);
    let r = Renderers(&b);
    let rs = |w: &Word<Mono>| r.source(w);
    let rt = |k: &HnKey<Word<usize>>| r.target(k);
    let u = b.enveloping().clone();
    let d = caps.degree;

    let mut chain_minus = CheckBuilder::new("ch⁻ = tr∘j∘c is a chain map");
    let mut chain_rht = CheckBuilder::new("ch_rht = tr∘Bρ∘sw is a chain map");
    let mut proj = CheckBuilder::new("π ch⁻ = tr∘j∘τ");
    let mut relative = CheckBuilder::new("both characters land in the relative complex");
    for w in 1..caps.truncation {
        let deg = target_degree(&b, w);
        let src = source_piece(&b, w, d)?;
        let tgt = target_piece(&b, deg, d + 1)?;
        for n in 1..=d {
            for x in src.module(n).basis() {
                let v = Vector::basis(x.clone());
                let lo = b.ch_minus(&v);
                let hi = b.ch_rht(&v)?;
                let inside = |k: &HnKey<Word<usize>>| tgt.module(n).contains(k);
                relative.record(
                    r.source(x),
                    lo.keys().all(inside) && hi.keys().all(inside),
                    super::sparse_with(&lo, &rt),
                    super::sparse_with(&hi, &rt),
                );
                let col0 = lo.filtered(|k| k.col == 0).map_keys(|k| k.elem.clone());
                let tj = b.tr_j(&tau(&*u, x));
                proj.eq_with(r.source(x), &col0, &tj, |w| r.word(w));
            }
        }
        if relative.failed() {
            continue;
        }
        let f = ChainMap::new(&src, &tgt, d, |x| b.ch_minus(&Vector::basis(x.clone())))?;
        let g = ChainMap::try_new::<SuiteError>(&src, &tgt, d, |x| Ok(b.ch_rht(&Vector::basis(x.clone()))?))?;
        chain_minus.absorb(&super::check_chain_map_with(&format!("weight {w}"), &src, &tgt, &f, d, false, rs, rt));
        chain_rht.absorb(&super::check_chain_map_with(&format!("weight {w}"), &src, &tgt, &g, d, false, rs, rt));
    }

    // ρ on ∧¹ is the trace of the matrix entry
    let mut rho = CheckBuilder::new("ρ(x) = tr j(x) on ∧¹");
    let lie = b.triangular().lie().clone();
    for i in 0..lie.dim() {
        let x = Vector::basis(Wedge(vec![i]));
        let direct = b.tr_j(&Vector::basis(Word(vec![u.letter(i)])));
        rho.eq_with(b.ce().render(&Wedge(vec![i])), &b.rho(&x), &direct, |w| r.word(w));
    }
    for c in [chain_minus, chain_rht, proj, relative, rho] {
        rep.push(c.finish());
    }
    Ok(rep)
}

/// Per-weight search for a homotopy `ch⁻ ≃ ch_rht` on the window `D`.
pub fn compare_chern(spec: &TriangularSpec, caps: &Caps) -> Result<VerificationReport, SuiteError> {
    let b = Arc::new(block(spec, caps)?);
    let mut rep = block_report("chern-compare", spec, caps);
    rep.cap("degree scale", b.alpha());
    let r = Renderers(&b);
    let rs = |w: &Word<Mono>| r.source(w);
    let rt = |k: &HnKey<Word<usize>>| r.target(k);
    let d = caps.degree;
    let mut chain = CheckBuilder::new("ch⁻ and ch_rht are chain maps");
    let mut homotopy = CheckBuilder::new("ch⁻ ≃ ch_rht");
    let mut dims = Vec::new();
    for w in 1..caps.truncation {
        let deg = target_degree(&b, w);
        let src = source_piece(&b, w, d)?;
        let tgt = target_piece(&b, deg, d + 1)?;
        dims.push(format!("w{w}: {:?} → {:?}", src.dims(), tgt.dims()));
        let f = ChainMap::new(&src, &tgt, d, |x| b.ch_minus(&Vector::basis(x.clone())))?;
        let g = ChainMap::try_new::<SuiteError>(&src, &tgt, d, |x| Ok(b.ch_rht(&Vector::basis(x.clone()))?))?;
        piece_homotopy(&mut rep, &format!("weight {w}"), d, &src, &tgt, &f, &g, &mut chain, &mut homotopy, &rs, &rt)?;
    }
    rep.push(chain.finish());
    rep.push(homotopy.finish());
    rep.table("piece dimensions (source → target)", dims);
    rep.note("sw is a comparison map built by the contraction recursion; any choice is homotopic");
    rep.note("a missing homotopy only rules out homotopies supported in the window");
    Ok(rep)
}
