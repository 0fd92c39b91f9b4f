//! Suites on the Chevalley–Eilenberg side and the group comparison.

use crate::algebra::Mono;
use crate::chern::{tau, CLift, Comparison, Upsilon};
use crate::complexes::{Canonical, CyclicModule, HnKey, HnSlice, Mixed, MixedComplex, connes_quotient_rep};
use crate::exactlin::{Key, Vector};
use crate::tensor::Word;

use super::context::{caps_into, piece_homotopy, place, GroupCtx, LieCtx};
use super::{Caps, ChainComplex, ChainMap, CheckBuilder, Instance, SuiteError, VerificationReport};

fn report(name: &str, caps: &Caps) -> VerificationReport {
    let mut rep = VerificationReport::new(name);
    caps_into(&mut rep, caps);
    rep
}

fn ctx(inst: &Instance, caps: &Caps, suite: &str) -> Result<LieCtx, SuiteError> {
    LieCtx::new(inst.lie_or(suite)?, caps)
}

/// `HN` of a normalized mixed complex in one weight, total degrees `0..=top`.
pub(crate) fn hn_piece<M: CyclicModule>(
    m: &M,
    columns: usize,
    top: usize,
    basis: impl Fn(usize) -> Vec<M::K>,
) -> Result<ChainComplex<HnKey<M::K>>, SuiteError> {
    let mixed = Mixed::new(m, true);
    let hn = HnSlice::new(&mixed, columns);
    let bases = (0..=top).map(|n| hn.basis(n as i64, &basis)).collect();
    Ok(ChainComplex::new(bases, |k| hn.d(k))?)
}

/// `B_norm` of `U g` in one weight.
fn bar_piece(l: &LieCtx, w: u32, top: usize) -> Result<ChainComplex<Word<Mono>>, SuiteError> {
    let b = l.bar.b();
    let bases = (0..=top).map(|n| l.b_words_of(n, w, true)).collect();
    Ok(ChainComplex::new(bases, |x| b.normalize(&b.boundary(x)))?)
}

pub(crate) fn map_psi(inst: &Instance, caps: &Caps) -> Result<VerificationReport, SuiteError> {
    let l = ctx(inst, caps, "map:psi")?;
    let mut rep = report("map:psi", caps);
    let (e, b) = (l.bar.e(), l.bar.b());
    let mb = Mixed::new(&b, true);
    let me = Mixed::new(&e, true);
    let hb = HnSlice::new(&mb, caps.columns);
    let (rw, rh, rx, ru) = (l.rw(), l.rh(), l.rwedge(), l.ruwedge());
    let mut ed = CheckBuilder::new("ed = ∂e on ∧g → B_norm");
    let mut one_e = CheckBuilder::new("(1⊗e)d' = ∂'(1⊗e) on U⊗∧g → E_norm");
    let mut normal = CheckBuilder::new("e lands in the normalized complex");
    let mut prim = CheckBuilder::new("B'(1⊗e) = 0");
    let mut psi = CheckBuilder::new("ψ is a chain map ∧g → HN(B)_norm");
    for n in 0..=caps.degree {
        for x in l.all_wedges(n) {
            let ex = l.ce.e(&x);
            normal.eq_with(rx(&x), &b.normalize(&ex), &ex, &rw);
            if n >= 1 {
                let lhs = b.normalize(&ex.map_linear(|y| b.boundary(y)));
                ed.eq_with(rx(&x), &lhs, &l.ce.e_vec(&l.ce.d(&x)), &rw);
            }
            let dpsi = hb.d_vec(&l.ce.psi(&Vector::basis(x.clone())));
            psi.eq_with(rx(&x), &dpsi, &l.ce.psi(&l.ce.d(&x)), &rh);
        }
        for w in l.weights() {
            for x in l.ce.resolution_basis(n, w) {
                let v = l.ce.one_e(&x);
                let lhs = e.normalize(&v.map_linear(|y| e.boundary(y)));
                one_e.eq_with(ru(&x), &lhs, &l.ce.d_res(&x).map_linear(|y| l.ce.one_e(y)), &rw);
                prim.eq_with(ru(&x), &me.big_b_vec(&v), &Vector::zero(), &rw);
            }
        }
    }
    for c in [ed, one_e, normal, prim, psi] {
        rep.push(c.finish());
    }
    rep.note("∧g is not truncated: e, θ and ψ are exact on every weight");
    Ok(rep)
}

pub(crate) fn theta_lemma(inst: &Instance, caps: &Caps) -> Result<VerificationReport, SuiteError> {
    let l = ctx(inst, caps, "theta-lemma")?;
    let mut rep = report("theta-lemma", caps);
    let can = Canonical::new(l.u.clone());
    let mc = Mixed::new(&can, true);
    let hc = HnSlice::new(&mc, caps.columns);
    let (rw, rh, rx) = (l.rw(), l.rh(), l.rwedge());
    let mut anti = CheckBuilder::new("bθ = -θd modulo (1 - t)");
    let mut bt = CheckBuilder::new("Bθ is a chain map ∧⁺g[-1] → HN(C)_norm");
    for n in 1..=caps.degree + 1 {
        for x in l.all_wedges(n) {
            let t = l.ce.theta(&x);
            let dx = l.ce.d(&x);
            let lhs = connes_quotient_rep(&t.map_linear(|y| can.boundary(y)));
            let rhs = connes_quotient_rep(&-&l.ce.theta_vec(&dx));
            anti.eq_with(rx(&x), &lhs, &rhs, &rw);
            let lift = place(0, &mc.big_b_vec(&t));
            let back = place(0, &mc.big_b_vec(&l.ce.theta_vec(&dx)));
            bt.eq_with(rx(&x), &hc.d_vec(&lift), &back, &rh);
        }
    }
    rep.push(anti.finish());
    rep.push(bt.finish());
    Ok(rep)
}

pub(crate) fn theta_is_c(inst: &Instance, caps: &Caps) -> Result<VerificationReport, SuiteError> {
    let l = ctx(inst, caps, "thm:theta=c")?;
    let mut rep = report("thm:theta=c", caps);
    let lift = CLift::new(l.bar.clone(), true, 0);
    let can = Canonical::new(l.u.clone());
    let mc = Mixed::new(&can, true);
    let (rh, rx) = (l.rh(), l.rwedge());
    let mut pos = CheckBuilder::new("τψ = Bθ on ∧⁺g");
    let mut zero = CheckBuilder::expected_failure("τψ = Bθ on ∧⁰g");
    for n in 0..=caps.degree {
        for x in l.all_wedges(n) {
            let lhs = place(0, &lift.tau(&l.ce.e(&x)));
            let rhs = place(0, &mc.big_b_vec(&l.ce.theta(&x)));
            if n == 0 {
                zero.eq_with(rx(&x), &lhs, &rhs, &rh);
            } else {
                pos.eq_with(rx(&x), &lhs, &rhs, &rh);
            }
        }
    }
    rep.push(pos.finish());
    rep.push(zero.finish());
    Ok(rep)
}

pub(crate) fn ce_is_tau_psi(inst: &Instance, caps: &Caps) -> Result<VerificationReport, SuiteError> {
    let l = ctx(inst, caps, "lem:ce=taupsi")?;
    let mut rep = report("lem:ce=taupsi", caps);
    let d = caps.degree;
    let c = CLift::new(l.bar.clone(), true, caps.columns);
    let can = Canonical::new(l.u.clone());
    let e = l.bar.e();
    let up = Upsilon::new(l.bar.clone(), true, caps.columns);
    let (rx, ru, rh) = (l.rwedge(), l.ruwedge(), l.rh());

    let mut chain = CheckBuilder::new("c∘e and τψ are chain maps");
    let mut homotopy = CheckBuilder::new("c∘e ≃ τψ on ∧g");
    let mut chain_e = CheckBuilder::new("Υ'(1⊗e) and ψ' are chain maps");
    let mut homotopy_e = CheckBuilder::new("Υ'(1⊗e) ≃ ψ' on U⊗∧g");
    for w in l.weights() {
        let piece = format!("weight {w}");
        let src = l.ce_piece(w, d)?;
        let tgt = hn_piece(&can, caps.columns, d + 1, |k| l.e_words_of(k, w, true))?;
        let f = ChainMap::new(&src, &tgt, d, |x| c.apply(&l.ce.e(x)))?;
        let g = ChainMap::new(&src, &tgt, d, |x| place(0, &c.tau(&l.ce.e(x))))?;
        piece_homotopy(&mut rep, &piece, d, &src, &tgt, &f, &g, &mut chain, &mut homotopy, &rx, &rh)?;

        let src = l.resolution_piece(w, d)?;
        let tgt = hn_piece(&e, caps.columns, d + 1, |k| l.e_words_of(k, w, true))?;
        let f = ChainMap::new(&src, &tgt, d, |x| up.e_lift(&l.ce.one_e(x)))?;
        let g = ChainMap::new(&src, &tgt, d, |x| place(0, &l.ce.one_e(x)))?;
        let piece = format!("U⊗∧ weight {w}");
        piece_homotopy(&mut rep, &piece, d, &src, &tgt, &f, &g, &mut chain_e, &mut homotopy_e, &ru, &rh)?;
    }
    for cb in [chain, homotopy, chain_e, homotopy_e] {
        rep.push(cb.finish());
    }
    rep.note("homotopies on U⊗∧g are solved k-linearly on each weight piece");
    Ok(rep)
}

fn embed_hn<K: Key>(v: &Vector<HnKey<Word<K>>>, f: impl Fn(&Word<K>) -> Vector<Word<Mono>>) -> Vector<HnKey<Word<Mono>>> {
    v.map_linear(|k| place(k.col, &f(&k.elem)))
}

pub(crate) fn prop_nil1(inst: &Instance, caps: &Caps) -> Result<VerificationReport, SuiteError> {
    let lie = inst.lie_or("prop:nil1")?;
    let l = LieCtx::new(lie, caps)?;
    let g = GroupCtx::new(lie, caps)?;
    let mut rep = report("prop:nil1", caps);
    let gw = super::suites::group_window(caps);
    rep.cap("group sample window", gw);
    let phi = |w: &Word<_>| g.embedding.word(w);
    let trunc = |v: &Vector<Word<Mono>>| g.embedding.truncate(v);
    let trunc_hn = |v: &Vector<HnKey<Word<Mono>>>| v.filtered(|k| l.weight_of(&k.elem) < caps.truncation);
    let (rg, rw, rh) = (g.rw(), l.rw(), l.rh());

    // φ preserves degenerate words, so it passes to normalized complexes
    let (eu, bu) = (l.bar.e(), l.bar.b());
    let can_u = Canonical::new(l.u.clone());
    let phi_e = |w: &Word<_>| eu.normalize(&g.embedding.word(w));
    let phi_b = |w: &Word<_>| bu.normalize(&g.embedding.word(w));
    let phi_c = |w: &Word<_>| can_u.normalize(&g.embedding.word(w));
    let up_g = Upsilon::new(g.bar.clone(), true, caps.columns);
    let up_u = Upsilon::new(l.bar.clone(), true, caps.columns);
    let c_g = CLift::new(g.bar.clone(), true, caps.columns);
    let c_u = CLift::new(l.bar.clone(), true, caps.columns);
    let mut tau_sq = CheckBuilder::new("φτ = τφ on sample words");
    let mut up_sq = CheckBuilder::new("φΥ = Υφ on sample words");
    let mut c_sq = CheckBuilder::new("φc = cφ on sample words");
    for n in 0..=gw {
        for w in g.words(n) {
            let vw = Vector::basis(w.clone());
            let lhs = trunc(&tau(&*g.g, &w).map_linear(phi));
            let rhs = trunc(&phi(&w).map_linear(|x| tau(&*l.u, x)));
            tau_sq.eq_with(rg(&w), &lhs, &rhs, &rw);
            let lhs = trunc_hn(&embed_hn(&c_g.apply(&vw), phi_c));
            let rhs = trunc_hn(&c_u.apply(&phi_b(&w)));
            c_sq.eq_with(rg(&w), &lhs, &rhs, &rh);
        }
        for w in g.words(n + 1) {
            let vw = Vector::basis(w.clone());
            let lhs = trunc_hn(&embed_hn(&up_g.e_lift(&vw), phi_e));
            let rhs = trunc_hn(&up_u.e_lift(&phi_e(&w)));
            up_sq.eq_with(rg(&w), &lhs, &rhs, &rh);
        }
    }
    for cb in [tau_sq, up_sq, c_sq] {
        rep.push(cb.finish());
    }

    // c ≃ c∘e∘sw on B(U)_norm
    let d = caps.degree;
    let cmp = Comparison::new(l.ce.clone(), l.bar.clone())?;
    let c = CLift::new(l.bar.clone(), true, caps.columns);
    let can = Canonical::new(l.u.clone());
    let mut chain = CheckBuilder::new("c and c∘e∘sw are chain maps on B_norm");
    let mut homotopy = CheckBuilder::new("c ≃ c∘e∘sw on B_norm");
    for w in l.weights() {
        let src = bar_piece(&l, w, d)?;
        let tgt = hn_piece(&can, caps.columns, d + 1, |k| l.e_words_of(k, w, true))?;
        let f = ChainMap::new(&src, &tgt, d, |x| c.apply(&Vector::basis(x.clone())))?;
        let h = ChainMap::try_new::<SuiteError>(&src, &tgt, d, |x| {
            Ok(c.apply(&l.ce.e_vec(&cmp.sw(&Vector::basis(x.clone()))?)))
        })?;
        piece_homotopy(&mut rep, &format!("weight {w}"), d, &src, &tgt, &f, &h, &mut chain, &mut homotopy, &rw, &rh)?;
    }
    rep.push(chain.finish());
    rep.push(homotopy.finish());
    rep.note("sw is a comparison map built by the contraction recursion; any choice is homotopic");
    rep.note("group elements are exact symbolic exponentials; φ expands them in U g / F_N");
    Ok(rep)
}

pub(crate) fn lem_nil2(inst: &Instance, caps: &Caps) -> Result<VerificationReport, SuiteError> {
    let l = ctx(inst, caps, "lem:nil2")?;
    let mut rep = report("lem:nil2", caps);
    let d = caps.degree;
    let cmp = Comparison::new(l.ce.clone(), l.bar.clone())?;
    let (rw, rx) = (l.rw(), l.rwedge());
    let mut inverse = CheckBuilder::new("sw∘e = 1 on ∧g");
    for n in 0..=d {
        for x in l.wedges(n) {
            inverse.eq_with(rx(&x), &cmp.sw(&l.ce.e(&x))?, &Vector::basis(x.clone()), &rx);
        }
    }
    rep.push(inverse.finish());

    let mut sw_chain = CheckBuilder::new("sw is a chain map B_norm → ∧g");
    let mut chain = CheckBuilder::new("e∘sw and 1 are chain maps on B_norm");
    let mut homotopy = CheckBuilder::new("e∘sw ≃ 1 on B_norm");
    for w in l.weights() {
        let src = bar_piece(&l, w, d)?;
        let ce = l.ce_piece(w, d)?;
        let sw = ChainMap::try_new::<SuiteError>(&src, &ce, d, |x| Ok(cmp.sw(&Vector::basis(x.clone()))?))?;
        sw_chain.absorb(&super::check_chain_map_with(&format!("weight {w}"), &src, &ce, &sw, d, false, &rw, &rx));
        let tgt = bar_piece(&l, w, d + 1)?;
        let f = ChainMap::try_new::<SuiteError>(&src, &tgt, d, |x| Ok(l.ce.e_vec(&cmp.sw(&Vector::basis(x.clone()))?)))?;
        let id = ChainMap::new(&src, &tgt, d, |x| Vector::basis(x.clone()))?;
        piece_homotopy(&mut rep, &format!("weight {w}"), d, &src, &tgt, &f, &id, &mut chain, &mut homotopy, &rw, &rw)?;
    }
    rep.push(sw_chain.finish());
    rep.push(chain.finish());
    rep.push(homotopy.finish());
    rep.note("sw is a comparison map built by the contraction recursion; any choice is homotopic");
    Ok(rep)
}
