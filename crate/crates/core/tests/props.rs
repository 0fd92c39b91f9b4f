use std::sync::Arc;

use chern_core::algebra::{AssocAlgebra, LieAlgebra, MalcevGroup};
use chern_core::chern::{tau_vec, Ce, Comparison, Wedge};
use chern_core::complexes::{Bar, Canonical, CyclicModule};
use chern_core::exactlin::{format_q, parse_q, qr, Vector, Q};
use chern_core::hopf::{EnvelopingHopf, FiniteGroup, Group, GroupAlgebra, MalcevLaw};
use chern_core::tensor::Word;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Q> {
    (-30i64..30, 1i64..12).prop_map(|(n, d)| qr(n, d))
}

fn words(letters: usize, len: std::ops::Range<usize>) -> impl Strategy<Value = Vector<Word<usize>>> {
    prop::collection::vec((prop::collection::vec(0..letters, len), rational()), 1..5)
        .prop_map(|ts| ts.into_iter().map(|(w, c)| (Word(w), c)).collect())
}

fn wedge_vec(dim: usize) -> impl Strategy<Value = Vector<Wedge>> {
    prop::collection::vec((prop::collection::btree_set(0..dim, 0..=dim), rational()), 1..4)
        .prop_map(|ts| ts.into_iter().map(|(s, c)| (Wedge(s.into_iter().collect()), c)).collect())
}

fn heis() -> Arc<EnvelopingHopf> {
    Arc::new(EnvelopingHopf::new(LieAlgebra::heisenberg()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rationals_round_trip(x in rational()) {
        prop_assert_eq!(parse_q(&format_q(&x)).unwrap(), x);
    }

    #[test]
    fn hochschild_boundary_squares_to_zero(v in words(2, 1..6)) {
        let c = Canonical::new(Arc::new(AssocAlgebra::dual_numbers()));
        let b = |v: &Vector<Word<usize>>| v.map_linear(|x| c.boundary(x));
        prop_assert!(b(&b(&v)).is_zero());
    }

    #[test]
    fn cyclic_operator_has_order_n_plus_one(w in prop::collection::vec(0usize..2, 1..6)) {
        let c = Canonical::new(Arc::new(AssocAlgebra::dual_numbers()));
        let mut v = Vector::basis(Word(w.clone()));
        for _ in 0..w.len() {
            v = c.cyclic_vec(&v);
        }
        prop_assert_eq!(v, Vector::basis(Word(w)));
    }

    #[test]
    fn connes_squares_to_zero_normalized(v in words(4, 1..4)) {
        let c = Canonical::new(Arc::new(GroupAlgebra::new(FiniteGroup::cyclic(4))));
        let bb = |v: &Vector<Word<usize>>| c.normalize(&v.map_linear(|x| c.connes(x)));
        prop_assert!(bb(&bb(&c.normalize(&v))).is_zero());
    }

    #[test]
    fn tau_commutes_with_the_cyclic_operators(v in words(4, 0..4)) {
        let g = Arc::new(GroupAlgebra::new(FiniteGroup::cyclic(4)));
        let bar = Bar::new(g.clone());
        let c = Canonical::new(g.clone());
        let lhs = tau_vec(&*g, &bar.b().cyclic_vec(&v));
        let rhs = c.cyclic_vec(&tau_vec(&*g, &v));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn chevalley_eilenberg_squares_to_zero(v in wedge_vec(3)) {
        let ce = Ce::new(heis());
        prop_assert!(ce.d_vec(&ce.d_vec(&v)).is_zero());
    }

    #[test]
    fn comparison_is_left_inverse_to_antisymmetrization(v in wedge_vec(3)) {
        let h = heis();
        let ce = Arc::new(Ce::new(h.clone()));
        let cmp = Comparison::new(ce.clone(), Arc::new(Bar::new(h))).unwrap();
        prop_assert_eq!(cmp.sw(&ce.e_vec(&v)).unwrap(), v);
    }

    #[test]
    fn malcev_product_is_associative(a in prop::collection::vec(rational(), 3), b in prop::collection::vec(rational(), 3), c in prop::collection::vec(rational(), 3)) {
        let law = MalcevLaw::new(MalcevGroup::from_lie(LieAlgebra::heisenberg()).unwrap());
        let e = |v: &[Q]| law.exp(&v.iter().cloned().enumerate().collect());
        let (a, b, c) = (e(&a), e(&b), e(&c));
        prop_assert_eq!(law.mul(&law.mul(&a, &b), &c), law.mul(&a, &law.mul(&b, &c)));
        prop_assert!(law.mul(&a, &law.inverse(&a)).is_identity());
    }
}
