use std::sync::Arc;

use super::*;
use crate::algebra::LieAlgebra;
use crate::chern::{Ce, Wedge};
use crate::complexes::{Bar, CyclicModule};
use crate::exactlin::{q, Vector};
use crate::hopf::{Algebra, EnvelopingHopf};

fn s(x: &str) -> String {
    x.to_string()
}

/// `ℚ` in the given degrees, identity differentials between neighbours.
fn line(degrees: usize) -> ChainComplex<String> {
    let bases = (0..degrees).map(|n| vec![format!("q{n}")]).collect();
    ChainComplex::new(bases, |x| {
        let n: usize = x[1..].parse().unwrap();
        if n == 1 { Vector::basis(s("q0")) } else { Vector::zero() }
    })
    .unwrap()
}

#[test]
fn equal_maps_need_no_homotopy() {
    let c = line(3);
    let f = ChainMap::new(&c, &c, 1, |x| Vector::basis(x.clone())).unwrap();
    match find_homotopy(&c, &c, &f, &f, 1).unwrap() {
        HomotopyResult::Found(h) => assert!(h.is_zero()),
        HomotopyResult::None(_) => panic!("f = f"),
    }
}

#[test]
fn identity_on_a_cone_is_null() {
    // the cone of id: ℚ → ℚ, padded so the solver sees degree 2
    let c = line(3);
    let id = ChainMap::new(&c, &c, 1, |x| if x == "q2" { Vector::zero() } else { Vector::basis(x.clone()) }).unwrap();
    let zero = ChainMap::new(&c, &c, 1, |_| Vector::zero()).unwrap();
    match find_homotopy(&c, &c, &id, &zero, 0).unwrap() {
        HomotopyResult::Found(h) => {
            assert!(reverify(&c, &c, &id, &zero, &h));
            let w = h.witness("cone", |x: &String| x.clone(), |x: &String| x.clone(), true);
            assert_eq!(w.values.len(), 1);
            assert_eq!(w.values.values().next().unwrap().get("q1").map(String::as_str), Some("1"));
        }
        HomotopyResult::None(_) => panic!("the cone is contractible"),
    }
}

#[test]
fn homology_obstructs_a_homotopy() {
    let c = ChainComplex::new(vec![vec![s("q")], vec![]], |_| Vector::zero()).unwrap();
    let id = ChainMap::new(&c, &c, 0, |x| Vector::basis(x.clone())).unwrap();
    let zero = ChainMap::new(&c, &c, 0, |_| Vector::zero()).unwrap();
    match find_homotopy(&c, &c, &id, &zero, 0).unwrap() {
        HomotopyResult::Found(_) => panic!("ℚ has homology"),
        HomotopyResult::None(cert) => {
            assert!(verify_certificate(&c, &c, &id, &zero, &cert));
            assert_eq!(cert.functional.len(), 1);
            assert_ne!(cert.pairing, q(0));
        }
    }
}

#[test]
fn short_slices_are_rejected() {
    let c = line(2);
    let f = ChainMap::new(&c, &c, 1, |x| Vector::basis(x.clone())).unwrap();
    assert!(find_homotopy(&c, &c, &f, &f, 1).is_err());
}

fn heis_e(flip: bool) -> Check {
    let h = Arc::new(EnvelopingHopf::new(LieAlgebra::heisenberg()));
    let ce = Ce::new(h.clone());
    let bar = Bar::new(h.clone());
    let b = bar.b();
    let src = ChainComplex::new((0..=3).map(|n| (0..=4).flat_map(|w| ce.wedges(n, w)).collect()).collect(), |x| ce.d(x))
        .unwrap();
    let words = |n| (0..=4).flat_map(|w| crate::complexes::bar_words(n, w, true, |k| h.monomials_of_weight(k))).collect();
    let tgt = ChainComplex::new((0..=3).map(words).collect(), |x| b.normalize(&b.boundary(x))).unwrap();
    let f = ChainMap::new(&src, &tgt, 3, |x: &Wedge| {
        let v = ce.e(x);
        if flip && x.0 == [0, 1] { -&v } else { v }
    })
    .unwrap();
    check_chain_map_with("e", &src, &tgt, &f, 3, false, |x| ce.render(x), |w| h.render_word(w))
}

#[test]
fn e_is_checked_as_a_chain_map() {
    assert!(heis_e(false).ok());
    let bad = heis_e(true);
    assert!(!bad.ok());
    assert_eq!(bad.witness().unwrap().element, "x∧y");
}

#[test]
fn lie_homology_dimensions() {
    let caps = Caps::new(3, 2, 3);
    let rep = homology_report(HomologyKind::Lie, &Instance::heisenberg(), &caps).unwrap();
    assert_eq!(rep.tables["dim H_n(g)"], ["1", "2", "2", "1"]);
    let rep = homology_report(HomologyKind::Lie, &Instance::abelian(2), &Caps::new(3, 2, 2)).unwrap();
    assert_eq!(rep.tables["dim H_n(g)"], ["1", "2", "1"]);
}

#[test]
fn hochschild_of_dual_numbers() {
    let rep = homology_report(HomologyKind::Hochschild, &Instance::dual_numbers(), &Caps::new(2, 1, 2)).unwrap();
    assert_eq!(rep.tables["dim HH_n(A)"][0], "2");
}

#[test]
fn theta_c_flags_degree_zero() {
    let rep = run_suite("thm:θ=c", &Instance::heisenberg(), &Caps::new(4, 1, 3)).unwrap();
    assert_eq!(rep.suite, "thm:theta=c");
    assert!(rep.ok(), "{rep}");
    let zero = rep.checks.iter().find(|c| c.name.contains("∧⁰")).unwrap();
    assert_eq!(zero.verdict(), "expected-fail");
}

#[test]
fn upsilon_constants_table() {
    let rep = run_suite("ex:Upsilon(1)", &Instance::heisenberg(), &Caps::new(1, 3, 3)).unwrap();
    assert!(rep.ok());
    assert_eq!(rep.tables["U/F_N: constants"], ["1", "-2", "12", "-120"]);
}

#[test]
fn unknown_suites_and_missing_sections() {
    let caps = Caps::new(1, 1, 2);
    assert!(matches!(run_suite("lem:nope", &Instance::heisenberg(), &caps), Err(SuiteError::UnknownSuite(_))));
    assert!(matches!(
        run_suite("lem:jc-ch", &Instance::heisenberg(), &caps),
        Err(SuiteError::MissingSection { section: "triangular", .. })
    ));
    assert_eq!(canonical_label("rem:B′=B″"), "rem:B'=B''");
}

#[test]
fn chern_blocks_agree_up_to_homotopy() {
    let inst = Instance::dual_block(1, vec![]);
    let rep = compare_chern(inst.triangular.as_ref().unwrap(), &Caps::new(2, 2, 4)).unwrap();
    assert!(rep.ok(), "{rep}");
    assert!(rep.homotopies.iter().all(|h| h.reverified));
}
