//! One suite per statement, keyed by label.

use std::sync::Arc;

use crate::chern::{tau, CLift, Upsilon};
use crate::complexes::{alpha, beta, Bar, Canonical, CyclicModule, HnKey, HnSlice, Mixed, RModule};
use crate::exactlin::{factorial, format_q, rank, sign, FreeModule, LinMap, Vector};
use crate::hopf::Hopf;
use crate::tensor::Word;

use super::context::{caps_into, place, GroupCtx, LieCtx};
use super::{Caps, CheckBuilder, Instance, SuiteError, VerificationReport};

/// Suite labels in report order.
pub const SUITES: [&str; 17] = [
    "lem:ab",
    "map:t",
    "rem:B'=B''",
    "map:B'",
    "B'(prim)",
    "lem:Upsilon",
    "ex:Upsilon(1)",
    "map:tau",
    "lem:taux",
    "thm:gwlift",
    "map:psi",
    "theta-lemma",
    "thm:theta=c",
    "lem:ce=taupsi",
    "prop:nil1",
    "lem:nil2",
    "lem:jc-ch",
];

/// Accepts `′`, `″` and `θ` spellings of the labels.
pub fn canonical_label(label: &str) -> String {
    label.replace('″', "''").replace('′', "'").replace('θ', "theta")
}

/// Whether the suite can run on the instance.
pub fn applicable(label: &str, inst: &Instance) -> bool {
    match label {
        "lem:jc-ch" => inst.triangular.is_some(),
        _ => inst.lie.is_some(),
    }
}

pub fn run_suite(label: &str, inst: &Instance, caps: &Caps) -> Result<VerificationReport, SuiteError> {
    let label = canonical_label(label);
    let mut rep = match label.as_str() {
        "lem:ab" => lem_ab(inst, caps)?,
        "map:t" => map_t(inst, caps)?,
        "rem:B'=B''" => connes_forms(inst, caps)?,
        "map:B'" => map_connes(inst, caps)?,
        "B'(prim)" => connes_on_primitives(inst, caps)?,
        "lem:Upsilon" => lem_upsilon(inst, caps)?,
        "ex:Upsilon(1)" => upsilon_constants(inst, caps)?,
        "map:tau" => map_tau(inst, caps)?,
        "lem:taux" => lem_taux(inst, caps)?,
        "thm:gwlift" => gwlift(inst, caps)?,
        "map:psi" => super::ce_suites::map_psi(inst, caps)?,
        "theta-lemma" => super::ce_suites::theta_lemma(inst, caps)?,
        "thm:theta=c" => super::ce_suites::theta_is_c(inst, caps)?,
        "lem:ce=taupsi" => super::ce_suites::ce_is_tau_psi(inst, caps)?,
        "prop:nil1" => super::ce_suites::prop_nil1(inst, caps)?,
        "lem:nil2" => super::ce_suites::lem_nil2(inst, caps)?,
        "lem:jc-ch" => super::chern_suites::lem_jc_ch(inst, caps)?,
        _ => return Err(SuiteError::UnknownSuite(label)),
    };
    rep.suite = label;
    rep.cap("instance", &inst.name);
    Ok(rep)
}

/// Every applicable suite, in the fixed order of [`SUITES`].
pub fn run_all(inst: &Instance, caps: &Caps) -> Result<Vec<VerificationReport>, SuiteError> {
    SUITES.iter().filter(|l| applicable(l, inst)).map(|l| run_suite(l, inst, caps)).collect()
}

fn lie_ctx(inst: &Instance, caps: &Caps, suite: &str) -> Result<LieCtx, SuiteError> {
    LieCtx::new(inst.lie_or(suite)?, caps)
}

fn new_report(name: &str, caps: &Caps) -> VerificationReport {
    let mut rep = VerificationReport::new(name);
    caps_into(&mut rep, caps);
    rep
}

/// Sample words get a smaller window: lifts of products of three or more
/// exponentials take minutes.
pub(crate) fn group_window(caps: &Caps) -> usize {
    caps.degree.min(2)
}

fn ab_checks<H: Hopf + 'static>(
    rep: &mut VerificationReport,
    tag: &str,
    h: &Arc<H>,
    bar: &Bar<H>,
    top: usize,
    words: impl Fn(usize) -> Vec<Word<H::B>>,
) {
    let r = RModule::new(h.clone());
    let e = bar.e();
    let rw = |w: &Word<H::B>| h.render_word(w);
    let mut ba = CheckBuilder::new(format!("{tag}: βα = 1 on E"));
    let mut ab = CheckBuilder::new(format!("{tag}: αβ = 1 on R"));
    let mut faces = CheckBuilder::new(format!("{tag}: α d_i = d_i α"));
    let mut degs = CheckBuilder::new(format!("{tag}: α s_j = s_j α"));
    let mut cyc = CheckBuilder::new(format!("{tag}: α t = λ α"));
    for n in 0..=top {
        for w in words(n) {
            let vw = Vector::basis(w.clone());
            let a = alpha(&**h, &w);
            ba.eq_with(rw(&w), &a.map_linear(|x| beta(&**h, x)), &vw, rw);
            ab.eq_with(rw(&w), &beta(&**h, &w).map_linear(|x| alpha(&**h, x)), &vw, rw);
            if n >= 1 {
                for i in 0..=n {
                    let lhs = e.face(i, &w).map_linear(|x| alpha(&**h, x));
                    let rhs = a.map_linear(|x| r.face(i, x));
                    faces.eq_with(format!("{} (i={i})", rw(&w)), &lhs, &rhs, rw);
                }
            }
            for j in 0..=n {
                let lhs = e.degeneracy(j, &w).map_linear(|x| alpha(&**h, x));
                let rhs = a.map_linear(|x| r.degeneracy(j, x));
                degs.eq_with(format!("{} (j={j})", rw(&w)), &lhs, &rhs, rw);
            }
            let lhs = e.cyclic(&w).map_linear(|x| alpha(&**h, x));
            cyc.eq_with(rw(&w), &lhs, &r.cyclic_vec(&a), rw);
        }
    }
    for c in [ba, ab, faces, degs, cyc] {
        rep.push(c.finish());
    }
}

fn lem_ab(inst: &Instance, caps: &Caps) -> Result<VerificationReport, SuiteError> {
    let l = lie_ctx(inst, caps, "lem:ab")?;
    let g = GroupCtx::new(inst.lie_or("lem:ab")?, caps)?;
    let mut rep = new_report("lem:ab", caps);
    ab_checks(&mut rep, "U/F_N", &l.u, &l.bar, caps.degree, |n| l.e_words(n, false));
    ab_checks(&mut rep, "Q[exp g] samples", &g.g, &g.bar, caps.degree, |n| g.words(n + 1));
    rep.note("group elements are exact symbolic exponentials; sample words range over products of the sample set");
    Ok(rep)
}

fn t_checks<H: Hopf + 'static>(
    rep: &mut VerificationReport,
    tag: &str,
    h: &Arc<H>,
    bar: &Bar<H>,
    top: usize,
    words: impl Fn(usize) -> Vec<Word<H::B>>,
    actors: &[H::B],
) {
    let r = RModule::new(h.clone());
    let (e, b) = (bar.e(), bar.b());
    let rw = |w: &Word<H::B>| h.render_word(w);
    let mut transport = CheckBuilder::new(format!("{tag}: t = βλα on E"));
    let mut order = CheckBuilder::new(format!("{tag}: t^(n+1) = 1 on E"));
    let mut linear = CheckBuilder::new(format!("{tag}: t is H-linear on E"));
    let mut order_b = CheckBuilder::new(format!("{tag}: t^(n+1) = 1 on B"));
    let mut induced = CheckBuilder::new(format!("{tag}: t on B is induced from E"));
    for n in 0..=top {
        for w in words(n) {
            let vw = Vector::basis(w.clone());
            let t = e.cyclic(&w);
            let via = r.cyclic_vec(&alpha(&**h, &w)).map_linear(|x| beta(&**h, x));
            transport.eq_with(rw(&w), &t, &via, rw);
            let mut p = vw.clone();
            for _ in 0..=n {
                p = e.cyclic_vec(&p);
            }
            order.eq_with(rw(&w), &p, &vw, rw);
            for a in actors {
                let lhs = e.cyclic_vec(&bar.act(a, &vw));
                linear.eq_with(format!("{} · {}", h.render_basis(a), rw(&w)), &lhs, &bar.act(a, &t), rw);
            }
            if n >= 1 {
                let tail = Word(w.0[1..].to_vec());
                let vt = Vector::basis(tail.clone());
                let mut p = vt.clone();
                for _ in 0..=n {
                    p = b.cyclic_vec(&p);
                }
                order_b.eq_with(rw(&tail), &p, &vt, rw);
                let lhs = b.cyclic(&tail);
                let rhs = bar.to_b(&e.cyclic(&bar.lift(&tail)));
                induced.eq_with(rw(&tail), &lhs, &rhs, rw);
            }
        }
    }
    for c in [transport, order, linear, order_b, induced] {
        rep.push(c.finish());
    }
}

fn map_t(inst: &Instance, caps: &Caps) -> Result<VerificationReport, SuiteError> {
    let l = lie_ctx(inst, caps, "map:t")?;
    let g = GroupCtx::new(inst.lie_or("map:t")?, caps)?;
    let mut rep = new_report("map:t", caps);
    t_checks(&mut rep, "U/F_N", &l.u, &l.bar, caps.degree, |n| l.e_words(n, false), &l.letters());
    t_checks(&mut rep, "Q[exp g] samples", &g.g, &g.bar, caps.degree, |n| g.words(n + 1), &g.samples);
    Ok(rep)
}

fn connes_form_checks<H: Hopf + 'static>(
    rep: &mut VerificationReport,
    tag: &str,
    h: &Arc<H>,
    bar: &Bar<H>,
    top: usize,
    words: impl Fn(usize) -> Vec<Word<H::B>>,
) {
    let e = bar.e();
    let rw = |w: &Word<H::B>| h.render_word(w);
    let mut double = CheckBuilder::new(format!("{tag}: B' = B''"));
    let mut explicit = CheckBuilder::new(format!("{tag}: B' = closed formula"));
    for n in 0..=top {
        for w in words(n) {
            if e.is_degenerate(&w) {
                continue;
            }
            let defining = e.normalize(&e.connes(&w));
            double.eq_with(rw(&w), &defining, &e.normalize(&e.connes_double_prime(&w)), rw);
            explicit.eq_with(rw(&w), &defining, &e.normalize(&bar.e_connes_explicit(&w)), rw);
        }
    }
    rep.push(double.finish());
    rep.push(explicit.finish());
}

fn connes_forms(inst: &Instance, caps: &Caps) -> Result<VerificationReport, SuiteError> {
    let l = lie_ctx(inst, caps, "rem:B'=B''")?;
    let g = GroupCtx::new(inst.lie_or("rem:B'=B''")?, caps)?;
    let mut rep = new_report("rem:B'=B''", caps);
    connes_form_checks(&mut rep, "U/F_N", &l.u, &l.bar, caps.degree, |n| l.e_words(n, true));
    connes_form_checks(&mut rep, "Q[exp g] samples", &g.g, &g.bar, caps.degree, |n| g.words(n + 1));
    Ok(rep)
}

fn connes_map_checks<H: Hopf + 'static>(
    rep: &mut VerificationReport,
    tag: &str,
    h: &Arc<H>,
    bar: &Bar<H>,
    top: usize,
    words: impl Fn(usize) -> Vec<Word<H::B>>,
    actors: &[H::B],
) {
    let e = bar.e();
    let m = Mixed::new(&e, true);
    let rw = |w: &Word<H::B>| h.render_word(w);
    let mut square = CheckBuilder::new(format!("{tag}: B'B' = 0"));
    let mut anti = CheckBuilder::new(format!("{tag}: ∂'B' + B'∂' = 0"));
    let mut linear = CheckBuilder::new(format!("{tag}: B' is H-linear"));
    for n in 0..=top {
        for w in words(n) {
            if e.is_degenerate(&w) {
                continue;
            }
            use crate::complexes::MixedComplex;
            let bw = m.big_b(&w);
            square.eq_with(rw(&w), &m.big_b_vec(&bw), &Vector::zero(), rw);
            let sum = &m.b_vec(&bw) + &m.big_b_vec(&m.b(&w));
            anti.eq_with(rw(&w), &sum, &Vector::zero(), rw);
            for a in actors {
                let lhs = m.big_b_vec(&bar.act(a, &Vector::basis(w.clone())));
                linear.eq_with(format!("{} · {}", h.render_basis(a), rw(&w)), &lhs, &bar.act(a, &bw), rw);
            }
        }
    }
    for c in [square, anti, linear] {
        rep.push(c.finish());
    }
}

fn map_connes(inst: &Instance, caps: &Caps) -> Result<VerificationReport, SuiteError> {
    let l = lie_ctx(inst, caps, "map:B'")?;
    let g = GroupCtx::new(inst.lie_or("map:B'")?, caps)?;
    let mut rep = new_report("map:B'", caps);
    connes_map_checks(&mut rep, "U/F_N", &l.u, &l.bar, caps.degree, |n| l.e_words(n, true), &l.letters());
    connes_map_checks(&mut rep, "Q[exp g] samples", &g.g, &g.bar, caps.degree, |n| g.words(n + 1), &g.samples);
    Ok(rep)
}

fn connes_on_primitives(inst: &Instance, caps: &Caps) -> Result<VerificationReport, SuiteError> {
    let l = lie_ctx(inst, caps, "B'(prim)")?;
    let mut rep = new_report("B'(prim)", caps);
    let e = l.bar.e();
    let rw = l.rw();
    let letters = l.letters();
    let mut cb = CheckBuilder::new("B'(h ⊗ x_1 ⊗ … ⊗ x_n) = 0 for primitive x_i");
    for n in 1..=caps.degree {
        let mut tails: Vec<Vec<crate::algebra::Mono>> = vec![Vec::new()];
        for _ in 0..n {
            tails = tails.into_iter().flat_map(|t| letters.iter().map(move |x| [t.clone(), vec![x.clone()]].concat())).collect();
        }
        for w0 in l.weights() {
            for head in l.u.monomials_of_weight(w0) {
                for tail in &tails {
                    let weight: u32 = w0 + tail.iter().map(|m| l.u.enveloping().weight(m)).sum::<u32>();
                    if weight >= caps.truncation {
                        continue;
                    }
                    let w = Word([vec![head.clone()], tail.clone()].concat());
                    let v = e.connes_normalized(&w).expect("closed formula on E(H)");
                    cb.eq_with(rw(&w), &v, &Vector::zero(), &rw);
                }
            }
        }
    }
    rep.push(cb.finish());
    Ok(rep)
}

fn constants_check<H: Hopf + 'static>(rep: &mut VerificationReport, tag: &str, bar: Arc<Bar<H>>, columns: usize) {
    let up = Upsilon::new(bar.clone(), false, columns);
    let unit = bar.unit().clone();
    let one = Vector::basis(Word(vec![unit.clone()]));
    let h = bar.hopf().clone();
    let rw = |w: &Word<H::B>| h.render_word(w);
    let mut cb = CheckBuilder::new(format!("{tag}: Υ'^n(1) = (-1)^n (2n)!/n! 1^(2n+1)"));
    let mut row = Vec::new();
    for n in 0..=columns {
        let got = up.level(n, &one);
        let c = sign(n) * factorial(2 * n as u64) / factorial(n as u64);
        let key = Word(vec![unit.clone(); 2 * n + 1]);
        row.push(format_q(&got.get(&key)));
        cb.eq_with(format!("n = {n}"), &got, &Vector::term(key, c), rw);
    }
    rep.push(cb.finish());
    rep.table(&format!("{tag}: constants"), row);
}

fn upsilon_constants(inst: &Instance, caps: &Caps) -> Result<VerificationReport, SuiteError> {
    let mut rep = new_report("ex:Upsilon(1)", caps);
    if let Some(lie) = &inst.lie {
        let l = LieCtx::new(lie, caps)?;
        constants_check(&mut rep, "U/F_N", l.bar.clone(), caps.columns);
        let g = GroupCtx::new(lie, caps)?;
        constants_check(&mut rep, "Q[exp g]", g.bar.clone(), caps.columns);
    } else {
        let c4 = Arc::new(crate::hopf::GroupAlgebra::new(crate::hopf::FiniteGroup::cyclic(4)));
        constants_check(&mut rep, "Q[C_4]", Arc::new(Bar::new(c4)), caps.columns);
    }
    Ok(rep)
}

/// Checks for the lifts `Υ'` on `E_norm` and `Υ` on `B_norm`.
fn upsilon_checks<H: Hopf + 'static>(
    rep: &mut VerificationReport,
    tag: &str,
    bar: &Arc<Bar<H>>,
    top: usize,
    columns: usize,
    e_words: impl Fn(usize) -> Vec<Word<H::B>>,
    actors: &[H::B],
) {
    let h = bar.hopf().clone();
    let rw = |w: &Word<H::B>| h.render_word(w);
    let rh = |k: &HnKey<Word<H::B>>| format!("u^{}{}", k.col, h.render_word(&k.elem));
    let up = Upsilon::new(bar.clone(), true, columns);
    let up_more = Upsilon::new(bar.clone(), true, columns + 1);
    let e = bar.e();
    let me = Mixed::new(&e, true);
    let hn = HnSlice::new(&me, columns);
    let mut chain = CheckBuilder::new(format!("{tag}: dΥ' = Υ'∂' on E_norm, columns ≤ P"));
    let mut proj = CheckBuilder::new(format!("{tag}: π'Υ' = 1"));
    let mut linear = CheckBuilder::new(format!("{tag}: Υ' is H-linear"));
    let mut stable = CheckBuilder::new(format!("{tag}: columns ≤ P unchanged at P+1"));
    for n in 0..=top {
        for w in e_words(n) {
            if e.is_degenerate(&w) {
                continue;
            }
            let vw = Vector::basis(w.clone());
            let lifted = up.e_lift(&vw);
            let db = e.normalize(&e.boundary(&w));
            chain.eq_with(rw(&w), &hn.d_vec(&lifted), &up.e_lift(&db), rh);
            proj.eq_with(rw(&w), &hn.pi(&lifted), &vw, rw);
            let more = up_more.e_lift(&vw).filtered(|k| k.col <= columns);
            stable.eq_with(rw(&w), &more, &lifted, rh);
            for a in actors {
                let lhs = up.e_lift(&bar.act(a, &vw));
                let rhs = lifted.iter().fold(Vector::zero(), |mut acc, (k, c)| {
                    acc.axpy(c, &place(k.col, &bar.act(a, &Vector::basis(k.elem.clone()))));
                    acc
                });
                linear.eq_with(format!("{} · {}", h.render_basis(a), rw(&w)), &lhs, &rhs, rh);
            }
        }
    }
    let b = bar.b();
    let mb = Mixed::new(&b, true);
    let hb = HnSlice::new(&mb, columns);
    let mut chain_b = CheckBuilder::new(format!("{tag}: dΥ = Υb on B_norm, columns ≤ P"));
    let mut proj_b = CheckBuilder::new(format!("{tag}: πΥ = 1"));
    for n in 0..=top {
        for w in e_words(n) {
            if e.is_degenerate(&w) || !bar.is_unit(&w.0[0]) {
                continue;
            }
            let tail = Word(w.0[1..].to_vec());
            let vt = Vector::basis(tail.clone());
            let lifted = up.b_lift(&vt);
            let db = b.normalize(&b.boundary(&tail));
            chain_b.eq_with(rw(&tail), &hb.d_vec(&lifted), &up.b_lift(&db), rh);
            proj_b.eq_with(rw(&tail), &hb.pi(&lifted), &vt, rw);
        }
    }
    for c in [chain, proj, linear, stable, chain_b, proj_b] {
        rep.push(c.finish());
    }
}

fn lem_upsilon(inst: &Instance, caps: &Caps) -> Result<VerificationReport, SuiteError> {
    let l = lie_ctx(inst, caps, "lem:Upsilon")?;
    let g = GroupCtx::new(inst.lie_or("lem:Upsilon")?, caps)?;
    let mut rep = new_report("lem:Upsilon", caps);
    upsilon_checks(&mut rep, "U/F_N", &l.bar, caps.degree, caps.columns, |n| l.e_words(n, true), &l.letters());
    let gw = group_window(caps);
    upsilon_checks(&mut rep, "Q[exp g] samples", &g.bar, gw, caps.columns, |n| g.words(n + 1), &g.samples[1..]);
    rep.cap("group sample window", gw);
    Ok(rep)
}

fn tau_checks<H: Hopf + 'static>(
    rep: &mut VerificationReport,
    tag: &str,
    bar: &Bar<H>,
    top: usize,
    b_words: impl Fn(usize) -> Vec<Word<H::B>>,
) {
    let h = bar.hopf().clone();
    let c = Canonical::new(h.clone());
    let b = bar.b();
    let rw = |w: &Word<H::B>| h.render_word(w);
    let tv = |v: &Vector<Word<H::B>>| v.map_linear(|w| tau(&*h, w));
    let mut faces = CheckBuilder::new(format!("{tag}: τ d_i = d_i τ"));
    let mut degs = CheckBuilder::new(format!("{tag}: τ s_j = s_j τ"));
    let mut cyc = CheckBuilder::new(format!("{tag}: τ t = t τ"));
    for n in 0..=top {
        for w in b_words(n) {
            let t = tau(&*h, &w);
            if n >= 1 {
                for i in 0..=n {
                    let lhs = tv(&b.face(i, &w));
                    let rhs = t.map_linear(|x| c.face(i, x));
                    faces.eq_with(format!("{} (i={i})", rw(&w)), &lhs, &rhs, rw);
                }
            }
            for j in 0..=n {
                let lhs = tv(&b.degeneracy(j, &w));
                let rhs = t.map_linear(|x| c.degeneracy(j, x));
                degs.eq_with(format!("{} (j={j})", rw(&w)), &lhs, &rhs, rw);
            }
            cyc.eq_with(rw(&w), &tv(&b.cyclic(&w)), &c.cyclic_vec(&t), rw);
        }
    }
    for cb in [faces, degs, cyc] {
        rep.push(cb.finish());
    }
}

fn map_tau(inst: &Instance, caps: &Caps) -> Result<VerificationReport, SuiteError> {
    let l = lie_ctx(inst, caps, "map:tau")?;
    let g = GroupCtx::new(inst.lie_or("map:tau")?, caps)?;
    let mut rep = new_report("map:tau", caps);
    tau_checks(&mut rep, "U/F_N", &l.bar, caps.degree, |n| l.b_words(n, false));
    tau_checks(&mut rep, "Q[exp g] samples", &g.bar, caps.degree, |n| g.words(n));

    // injectivity on the normalized weight pieces
    let lift = CLift::new(l.bar.clone(), true, 0);
    let mut inj = CheckBuilder::new("U/F_N: τ is injective on B_norm pieces");
    let mut row = Vec::new();
    for n in 0..=caps.degree {
        let (mut r_total, mut d_total) = (0, 0);
        for w in l.weights() {
            let dom = l.b_words_of(n, w, true);
            if dom.is_empty() {
                continue;
            }
            let cod = l.e_words_of(n, w, true);
            let map = LinMap::from_fn(FreeModule::new(dom.clone())?, FreeModule::new(cod)?, |x| {
                lift.tau(&Vector::basis(x.clone()))
            })?;
            let r = rank(&map);
            inj.record(
                format!("degree {n}, weight {w}"),
                r == dom.len(),
                [("rank".to_string(), r.to_string())].into(),
                [("dim".to_string(), dom.len().to_string())].into(),
            );
            r_total += r;
            d_total += dom.len();
        }
        row.push(format!("{r_total}/{d_total}"));
    }
    rep.push(inj.finish());
    rep.table("rank/dim of τ by degree", row);
    Ok(rep)
}

fn lem_taux(inst: &Instance, caps: &Caps) -> Result<VerificationReport, SuiteError> {
    let l = lie_ctx(inst, caps, "lem:taux")?;
    let mut rep = new_report("lem:taux", caps);
    let lift = CLift::new(l.bar.clone(), true, 0);
    let one = l.u.enveloping().one();
    let letters = l.letters();
    let rw = l.rw();
    let mut cb = CheckBuilder::new("τ(x_1 ⊗ … ⊗ x_n) = 1 ⊗ x_1 ⊗ … ⊗ x_n for primitive x_i");
    let mut tails: Vec<Vec<crate::algebra::Mono>> = vec![Vec::new()];
    for n in 0..=caps.degree {
        for t in &tails {
            let weight: u32 = t.iter().map(|m| l.u.enveloping().weight(m)).sum();
            if weight >= caps.truncation {
                continue;
            }
            let w = Word(t.clone());
            let expected = Vector::basis(Word([vec![one.clone()], t.clone()].concat()));
            cb.eq_with(rw(&w), &lift.tau(&Vector::basis(w.clone())), &expected, &rw);
        }
        if n < caps.degree {
            tails = tails.into_iter().flat_map(|t| letters.iter().map(move |x| [t.clone(), vec![x.clone()]].concat())).collect();
        }
    }
    rep.push(cb.finish());
    Ok(rep)
}

fn gwlift_checks<H: Hopf + 'static>(
    rep: &mut VerificationReport,
    tag: &str,
    bar: &Arc<Bar<H>>,
    top: usize,
    columns: usize,
    b_words: impl Fn(usize) -> Vec<Word<H::B>>,
) {
    let h = bar.hopf().clone();
    let rw = |w: &Word<H::B>| h.render_word(w);
    let rh = |k: &HnKey<Word<H::B>>| format!("u^{}{}", k.col, h.render_word(&k.elem));
    let c = CLift::new(bar.clone(), true, columns);
    let c_more = CLift::new(bar.clone(), true, columns + 1);
    let can = c.canonical();
    let mc = Mixed::new(can, true);
    let hn = HnSlice::new(&mc, columns);
    let b = bar.b();
    let mut chain = CheckBuilder::new(format!("{tag}: dc = cb into HN(C)_norm, columns ≤ P"));
    let mut proj = CheckBuilder::new(format!("{tag}: πc = τ"));
    let mut stable = CheckBuilder::new(format!("{tag}: columns ≤ P unchanged at P+1"));
    let mut unit = CheckBuilder::new(format!("{tag}: c(1) = 1"));
    let one_word = Word(vec![bar.unit().clone()]);
    unit.eq_with("1", &c.apply(&Vector::basis(Word(Vec::new()))), &place(0, &Vector::basis(one_word)), rh);
    for n in 0..=top {
        for w in b_words(n) {
            if b.is_degenerate(&w) {
                continue;
            }
            let vw = Vector::basis(w.clone());
            let cw = c.apply(&vw);
            let db = b.normalize(&b.boundary(&w));
            chain.eq_with(rw(&w), &hn.d_vec(&cw), &c.apply(&db), rh);
            proj.eq_with(rw(&w), &hn.pi(&cw), &c.tau(&vw), rw);
            let more = c_more.apply(&vw).filtered(|k| k.col <= columns);
            stable.eq_with(rw(&w), &more, &cw, rh);
        }
    }
    for cb in [chain, proj, stable, unit] {
        rep.push(cb.finish());
    }
}

fn gwlift(inst: &Instance, caps: &Caps) -> Result<VerificationReport, SuiteError> {
    let l = lie_ctx(inst, caps, "thm:gwlift")?;
    let g = GroupCtx::new(inst.lie_or("thm:gwlift")?, caps)?;
    let mut rep = new_report("thm:gwlift", caps);
    gwlift_checks(&mut rep, "U/F_N", &l.bar, caps.degree, caps.columns, |n| l.b_words(n, true));
    let gw = group_window(caps);
    gwlift_checks(&mut rep, "Q[exp g] samples", &g.bar, gw, caps.columns, |n| g.proper_words(n));
    rep.cap("group sample window", gw);
    Ok(rep)
}

