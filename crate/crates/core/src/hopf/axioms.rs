use num_traits::One;

use crate::exactlin::{Vector, Q};
use crate::tensor::{tensor, Word};
use crate::verify::{scalar_sparse, sparse_with, CheckBuilder, VerificationReport};

use super::Hopf;

fn apply_factor<H: Hopf + ?Sized>(
    v: &Vector<Word<H::B>>,
    pos: usize,
    f: impl Fn(&H::B) -> Vector<Word<H::B>>,
) -> Vector<Word<H::B>> {
    let mut out = Vector::zero();
    for (w, c) in v {
        for (mid, c2) in &f(&w.0[pos]) {
            let mut w2 = w.0[..pos].to_vec();
            w2.extend(mid.0.iter().cloned());
            w2.extend(w.0[pos + 1..].iter().cloned());
            out.add_term(Word(w2), c * c2);
        }
    }
    out
}

fn unwrap_single<B: Ord + Clone>(v: &Vector<Word<B>>) -> Vector<B> {
    v.iter().map(|(w, c)| (w.0[0].clone(), c.clone())).collect()
}

fn scalar_term<B: Ord + Clone>(c: Q) -> Vector<Word<B>> {
    Vector::term(Word(Vec::new()), c)
}

/// Exact verification of the Hopf axioms on the given basis elements:
/// associativity and unit, coassociativity and counit, the antipode identity
/// on both sides, cocommutativity, `S² = 1`, and multiplicativity of `Δ`
/// and `ε`.
pub fn check_hopf_axioms<H: Hopf + ?Sized>(h: &H, name: &str, basis: &[H::B]) -> VerificationReport {
    let mut report = VerificationReport::new(format!("hopf-axioms {name}"));
    report.cap("basis", basis.len());
    let r = |b: &H::B| h.render_basis(b);
    let rw = |w: &Word<H::B>| h.render_word(w);
    let one = h.one();

    let mut assoc = CheckBuilder::new("associativity");
    let mut unit = CheckBuilder::new("unit");
    for a in basis {
        let va = Vector::basis(a.clone());
        unit.eq(r(a), &h.mul(&one, &va), &va);
        unit.eq(r(a), &h.mul(&va, &one), &va);
        for b in basis {
            let ab = h.mul_basis(a, b);
            for c in basis {
                let lhs = h.mul(&ab, &Vector::basis(c.clone()));
                let rhs = h.mul(&va, &h.mul_basis(b, c));
                assoc.record(format!("({}, {}, {})", r(a), r(b), r(c)), lhs == rhs, sparse_with(&lhs, r), sparse_with(&rhs, r));
            }
        }
    }
    report.push(assoc.finish());
    report.push(unit.finish());

    let mut coassoc = CheckBuilder::new("coassociativity");
    let mut counit = CheckBuilder::new("counit");
    let mut antipode = CheckBuilder::new("antipode");
    let mut cocomm = CheckBuilder::new("cocommutativity");
    let mut involutive = CheckBuilder::new("S^2 = 1");
    let mut unit_counit = CheckBuilder::new("counit of unit");
    let e1 = h.counit(&one);
    unit_counit.record("1", e1.is_one(), scalar_sparse(&e1), scalar_sparse(&Q::one()));
    for a in basis {
        let d = h.comul_basis(a);
        let left = apply_factor::<H>(&d, 0, |b| h.comul_basis(b));
        let right = apply_factor::<H>(&d, 1, |b| h.comul_basis(b));
        coassoc.record(r(a), left == right, sparse_with(&left, rw), sparse_with(&right, rw));

        let va = Vector::basis(a.clone());
        let drop_left = unwrap_single(&apply_factor::<H>(&d, 0, |b| scalar_term(h.counit_basis(b))));
        let drop_right = unwrap_single(&apply_factor::<H>(&d, 1, |b| scalar_term(h.counit_basis(b))));
        counit.record(r(a), drop_left == va, sparse_with(&drop_left, r), sparse_with(&va, r));
        counit.record(r(a), drop_right == va, sparse_with(&drop_right, r), sparse_with(&va, r));

        let unit_eps = h.one().scaled(&h.counit_basis(a));
        let mut s_left = Vector::zero();
        let mut s_right = Vector::zero();
        for (w, c) in &d {
            let (x, y) = (&w.0[0], &w.0[1]);
            s_left.axpy(c, &h.mul(&h.antipode_basis(x), &Vector::basis(y.clone())));
            s_right.axpy(c, &h.mul(&Vector::basis(x.clone()), &h.antipode_basis(y)));
        }
        antipode.record(r(a), s_left == unit_eps, sparse_with(&s_left, r), sparse_with(&unit_eps, r));
        antipode.record(r(a), s_right == unit_eps, sparse_with(&s_right, r), sparse_with(&unit_eps, r));

        let swapped = d.map_keys(|w| Word(vec![w.0[1].clone(), w.0[0].clone()]));
        cocomm.record(r(a), swapped == d, sparse_with(&swapped, rw), sparse_with(&d, rw));

        let ss = h.antipode(&h.antipode_basis(a));
        involutive.record(r(a), ss == va, sparse_with(&ss, r), sparse_with(&va, r));
    }
    for c in [coassoc, counit, antipode, cocomm, involutive, unit_counit] {
        report.push(c.finish());
    }

    let mut mult = CheckBuilder::new("comultiplication is multiplicative");
    let mut eps_mult = CheckBuilder::new("counit is multiplicative");
    for a in basis {
        for b in basis {
            let ab = h.mul_basis(a, b);
            let lhs = h.comul(&ab);
            let (da, db) = (h.comul_basis(a), h.comul_basis(b));
            let mut rhs = Vector::zero();
            for (u, cu) in &da {
                for (v, cv) in &db {
                    let left = h.mul_basis(&u.0[0], &v.0[0]);
                    let right = h.mul_basis(&u.0[1], &v.0[1]);
                    rhs.axpy(&(cu * cv), &tensor(&[left, right]));
                }
            }
            let at = format!("({}, {})", r(a), r(b));
            mult.record(&at, lhs == rhs, sparse_with(&lhs, rw), sparse_with(&rhs, rw));
            let (e_ab, e_a_e_b) = (h.counit(&ab), h.counit_basis(a) * h.counit_basis(b));
            eps_mult.record(&at, e_ab == e_a_e_b, scalar_sparse(&e_ab), scalar_sparse(&e_a_e_b));
        }
    }
    report.push(mult.finish());
    report.push(eps_mult.finish());
    report
}
