use std::sync::Arc;

use super::*;
use crate::algebra::{AssocAlgebra, LieAlgebra, MalcevGroup, Mono};
use crate::exactlin::{q, Vector};
use crate::hopf::{Algebra, EnvelopingHopf, FiniteGroup, GroupAlgebra, GroupEmbedding, Hopf, MalcevLaw};
use crate::tensor::{word, Word};

fn heis() -> Arc<EnvelopingHopf> {
    Arc::new(EnvelopingHopf::new(LieAlgebra::heisenberg()))
}

fn c4() -> Arc<GroupAlgebra<FiniteGroup>> {
    Arc::new(GroupAlgebra::new(FiniteGroup::cyclic(4)))
}

fn e_words(h: &EnvelopingHopf, n: usize, max_weight: u32, normalized: bool) -> Vec<Word<Mono>> {
    (0..=max_weight).flat_map(|w| canonical_words(n, w, normalized, |k| h.monomials_of_weight(k))).collect()
}

fn all_group_words(order: usize, len: usize) -> Vec<Word<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out.into_iter().flat_map(|w: Vec<usize>| (0..order).map(move |g| [w.clone(), vec![g]].concat())).collect();
    }
    out.into_iter().map(Word).collect()
}

#[test]
fn last_face_applies_counit() {
    let bar = Bar::new(c4());
    assert_eq!(bar.e_face(1, &word(&[1, 2])), Vector::basis(word(&[1])));
    let h = heis();
    let bar = Bar::new(h.clone());
    let x = h.letter(0);
    assert!(bar.e_face(1, &Word(vec![h.letter(1), x])).is_zero());
}

#[test]
fn bar_differential_squares_to_zero() {
    let h = heis();
    let bar = Bar::new(h.clone());
    let e = bar.e();
    for n in 1..=3 {
        for w in e_words(&h, n, 3, false) {
            assert!(e.boundary(&w).map_linear(|y| e.boundary(y)).is_zero(), "{w}");
        }
    }
    let bar = Bar::new(c4());
    let e = bar.e();
    for w in all_group_words(4, 4) {
        assert!(e.boundary(&w).map_linear(|y| e.boundary(y)).is_zero());
    }
}

#[test]
fn contraction_is_a_homotopy() {
    let bar = Bar::new(c4());
    let e = bar.e();
    // x = g - 1 in degree 0: ∂'s x = x - ηε(x) = x
    let x = &Vector::basis(word(&[1])) - &Vector::basis(word(&[0]));
    let sx = x.map_keys(|w| bar.contraction(w));
    assert_eq!(sx.map_linear(|w| e.boundary(w)), x);

    let h = heis();
    let bar = Bar::new(h.clone());
    let e = bar.e();
    for n in 1..=2 {
        for w in e_words(&h, n, 3, false) {
            let lhs = &e.boundary(&bar.contraction(&w)) + &e.boundary(&w).map_keys(|y| bar.contraction(y));
            assert_eq!(lhs, Vector::basis(w));
        }
    }
}

#[test]
fn r_module_examples() {
    let c = c4();
    let r = RModule::new(c.clone());
    let w = word(&[1, 3]);
    let l2 = r.cyclic_vec(&r.cyclic(&w));
    assert_eq!(l2, Vector::basis(w));
    assert_eq!(r.degeneracy(0, &word(&[2])), Vector::basis(word(&[2, 2])));
    // Karoubi's values on (g0, g1): faces drop a factor, degeneracies repeat one
    assert_eq!(r.face(0, &word(&[1, 2])), Vector::basis(word(&[2])));
    assert_eq!(r.face(1, &word(&[1, 2])), Vector::basis(word(&[1])));
    assert_eq!(r.degeneracy(1, &word(&[1, 2])), Vector::basis(word(&[1, 2, 2])));

    let h = heis();
    let r = RModule::new(h.clone());
    for n in 0..=3 {
        for w in e_words(&h, n, 2, false) {
            let mut v = Vector::basis(w.clone());
            for _ in 0..=n {
                v = r.cyclic_vec(&v);
            }
            assert_eq!(v, Vector::basis(w));
        }
    }
}

#[test]
fn alpha_beta_examples() {
    let c = c4();
    assert_eq!(alpha(&*c, &word(&[1, 2])), Vector::basis(word(&[1, 3])));
    assert_eq!(beta(&*c, &word(&[1, 2])), Vector::basis(word(&[1, 1])));

    let h = heis();
    let x = h.letter(0);
    let one = Mono::one(3);
    let w = Word(vec![x, one]);
    assert_eq!(beta(&*h, &w).map_linear(|u| alpha(&*h, u)), Vector::basis(w));
    for n in 0..=3 {
        for w in e_words(&h, n, 3, false) {
            let v = Vector::basis(w.clone());
            assert_eq!(v.map_linear(|u| alpha(&*h, u)).map_linear(|u| beta(&*h, u)), v, "{w}");
            assert_eq!(v.map_linear(|u| beta(&*h, u)).map_linear(|u| alpha(&*h, u)), v, "{w}");
        }
    }
}

#[test]
fn cyclic_operator_on_grouplikes() {
    let bar = Bar::new(c4());
    // t(g0⊗g1) = -g0g1 ⊗ g1^{-1}
    assert_eq!(bar.e_cyclic(&word(&[1, 1])), Vector::term(word(&[2, 3]), q(-1)));
    // t(g0⊗g1⊗g2) = g0g1g2 ⊗ (g1g2)^{-1} ⊗ g1
    assert_eq!(bar.e_cyclic(&word(&[1, 2, 3])), Vector::basis(word(&[2, 3, 2])));
    assert_eq!(bar.e_cyclic(&word(&[3])), Vector::basis(word(&[3])));
}

fn check_t_against_transport<H: Hopf>(h: &Arc<H>, words: &[Word<H::B>]) {
    let bar = Bar::new(h.clone());
    let r = RModule::new(h.clone());
    for w in words {
        let n = w.len() - 1;
        let t = bar.e_cyclic(w);
        let transported = alpha(&**h, w).map_linear(|u| r.cyclic(u)).map_linear(|u| beta(&**h, u));
        assert_eq!(t, transported, "{w}");
        let mut v = Vector::basis(w.clone());
        for _ in 0..=n {
            v = bar.e().cyclic_vec(&v);
        }
        assert_eq!(v, Vector::basis(w.clone()), "t^(n+1) on {w}");
    }
}

#[test]
fn cyclic_operator_is_transported() {
    let h = heis();
    let words: Vec<_> = (0..=3).flat_map(|n| e_words(&h, n, 3, false)).collect();
    check_t_against_transport(&h, &words);
    let c = c4();
    let words: Vec<_> = (1..=4).flat_map(|len| all_group_words(4, len)).filter(|w| w.0[0] < 2).collect();
    check_t_against_transport(&c, &words);
}

#[test]
fn connes_forms_agree_on_normalized_words() {
    let h = heis();
    let bar = Bar::new(h.clone());
    let e = bar.e();
    for n in 0..=3 {
        for w in e_words(&h, n, 3, true) {
            let defining = e.normalize(&e.connes(&w));
            let double = e.normalize(&e.connes_double_prime(&w));
            let explicit = e.connes_normalized(&w).unwrap();
            assert_eq!(defining, explicit, "{w}");
            assert_eq!(double, explicit, "{w}");
        }
    }
    let c = c4();
    let bar = Bar::new(c.clone());
    let e = bar.e();
    for w in (1..=3).flat_map(|len| all_group_words(4, len)) {
        if e.is_degenerate(&w) {
            continue;
        }
        let explicit = e.connes_normalized(&w).unwrap();
        assert_eq!(e.normalize(&e.connes(&w)), explicit, "{w}");
        assert_eq!(e.normalize(&e.connes_double_prime(&w)), explicit, "{w}");
    }
}

#[test]
fn connes_examples() {
    let c = c4();
    let bar = Bar::new(c.clone());
    let e = bar.e();
    // B'(g0⊗g1) = g0g1⊗g1^{-1}⊗g1 - g0⊗g1⊗g1^{-1}
    let expected = &Vector::basis(word(&[3, 3, 1])) - &Vector::basis(word(&[2, 1, 3]));
    assert_eq!(e.connes_normalized(&word(&[2, 1])).unwrap(), expected);
    assert_eq!(e.normalize(&e.connes(&word(&[2, 1]))), expected);
    // s'(h0) = h0⊗1, so B' vanishes in normalized degree 0
    assert_eq!(e.extra_degeneracy(&word(&[2])), Vector::basis(word(&[2, 0])));
    assert!(e.connes_normalized(&word(&[2])).unwrap().is_zero());
    // g0⊗1 is degenerate
    assert!(e.normalize(&Vector::basis(word(&[2, 0]))).is_zero());

    let h = heis();
    let bar = Bar::new(h.clone());
    let e = bar.e();
    let prims: Vec<Mono> = (0..3).map(|i| h.letter(i)).collect();
    for n in 1..=3 {
        for head in h.basis_below(3) {
            let mut tails: Vec<Vec<Mono>> = vec![vec![]];
            for _ in 0..n {
                tails = tails.into_iter().flat_map(|t| prims.iter().map(move |p| [t.clone(), vec![p.clone()]].concat())).collect();
            }
            for tail in tails {
                let w = Word([vec![head.clone()], tail].concat());
                assert!(e.connes_normalized(&w).unwrap().is_zero(), "{w}");
            }
        }
    }
}

#[test]
fn canonical_examples() {
    let h = heis();
    let c = Canonical::new(h.clone());
    let (x, y, z) = (h.letter(0), h.letter(1), h.letter(2));
    assert_eq!(c.boundary(&Word(vec![x.clone(), y.clone()])), Vector::basis(Word(vec![z])));
    let xy = connes_quotient_rep(&Vector::basis(Word(vec![x.clone(), y.clone()])));
    let yx = connes_quotient_rep(&Vector::term(Word(vec![y.clone(), x.clone()]), q(-1)));
    assert_eq!(xy, yx);
    assert!(connes_quotient_rep(&Vector::basis(Word(vec![x.clone(), x]))).is_zero());

    let a = Arc::new(AssocAlgebra::dual_numbers());
    let c = Canonical::new(a);
    let words = [word(&[0]), word(&[1])];
    assert_eq!(c.relative_words(&words, |&b| b == 1), vec![word(&[1])]);
}

#[test]
fn normalized_counts() {
    let h = Arc::new(EnvelopingHopf::new(LieAlgebra::abelian(1)));
    let monos = |w: u32| h.monomials_of_weight(w);
    // B_2 of the algebra U/I^2: reduced factors of weight 1 only
    let b2: usize = (0..=4).map(|t| bar_words(2, t, true, |w| if w < 2 { monos(w) } else { vec![] }).len()).sum();
    assert_eq!(b2, 1);
    // E_1(U)/F_2
    let e1: Vec<_> = (0..2).flat_map(|t| canonical_words(1, t, false, monos)).collect();
    let rendered: Vec<String> = e1.iter().map(|w| h.render_word(w)).collect();
    assert_eq!(rendered.len(), 3);
    for r in ["[1|1]", "[1|x1]", "[x1|1]"] {
        assert!(rendered.iter().any(|s| s == r), "{r} missing from {rendered:?}");
    }
}

#[test]
fn filtration_is_respected_by_t() {
    let lie = LieAlgebra::heisenberg();
    let group = MalcevGroup::from_lie(lie).unwrap();
    let env = group.enveloping().clone();
    let g = Arc::new(GroupAlgebra::new(MalcevLaw::new(group)));
    let bar = Bar::new(g.clone());
    let emb = GroupEmbedding::new(env, 2);
    let a = g.group().exp(&Vector::basis(0));
    let b = g.group().exp(&Vector::basis(1));
    let e = g.group().exp(&Vector::zero());
    // (a - 1) ⊗ (b - 1) lies in F_2, and so does its image under t
    let v = crate::tensor::tensor(&[
        &Vector::basis(a.clone()) - &Vector::basis(e.clone()),
        &Vector::basis(b.clone()) - &Vector::basis(e.clone()),
    ]);
    assert!(emb.words(&v).is_zero());
    let tv = v.map_linear(|w| bar.e_cyclic(w));
    assert!(!tv.is_zero());
    assert!(emb.words(&tv).is_zero());
    // truncating at 3 then 2 agrees with truncating at 2
    let w = Word(vec![a, b]);
    let emb3 = GroupEmbedding::new(g.group().group().enveloping().clone(), 3);
    assert_eq!(emb.truncate(&emb3.word(&w)), emb.word(&w));
}

#[test]
fn mixed_and_negative_cyclic_axioms() {
    let lie = LieAlgebra::heisenberg();
    let g = Arc::new(GroupAlgebra::malcev(MalcevGroup::from_lie(lie).unwrap()));
    let bar = Bar::new(g.clone());
    let bv = bar.b();
    let m = Mixed::new(&bv, true);
    let gens: Vec<_> = [vec![(0, 1)], vec![(1, 1)], vec![(0, 1), (2, 1)]]
        .iter()
        .map(|t| g.group().exp(&t.iter().map(|&(i, c)| (i, q(c))).collect()))
        .collect();
    let mut samples = vec![Word(vec![])];
    for a in &gens {
        samples.push(Word(vec![a.clone()]));
        for b in &gens {
            samples.push(Word(vec![a.clone(), b.clone()]));
        }
    }
    for w in &samples {
        let bb = m.b_vec(&m.b(w));
        let big = m.big_b_vec(&m.big_b(w));
        let anti = &m.b_vec(&m.big_b(w)) + &m.big_b_vec(&m.b(w));
        assert!(bb.is_zero() && big.is_zero() && anti.is_zero(), "{w}");
    }
    let hn = HnSlice::new(&m, 2);
    for w in &samples {
        let k = HnKey { col: 0, elem: w.clone() };
        let dd = hn.d_vec(&hn.d(&k));
        assert!(dd.iter().all(|(k, _)| k.col >= hn.p), "{w}");
        assert_eq!(hn.pi(&hn.d(&k)), m.b(w));
    }
    let x = Vector::basis(samples[1].clone());
    let lifted = hn.b_lift(&x);
    assert!(lifted.keys().all(|k| k.col == 0));
    assert_eq!(HnSlice::<Mixed<'_, BView<'_, GroupAlgebra<MalcevLaw>>>>::column(&lifted, 0), m.big_b_vec(&x));
    assert_eq!(hn.pi(&HnSlice::<Mixed<'_, BView<'_, GroupAlgebra<MalcevLaw>>>>::place(0, &x)), x);
}
