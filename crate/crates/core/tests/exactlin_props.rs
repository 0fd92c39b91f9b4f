use chern_core::exactlin::{
    q, qr, rank_kernel_image, solve_linear, FreeModule, LinMap, Solution, Vector, Q,
};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Q> {
    (-20i64..20, 1i64..9).prop_map(|(n, d)| qr(n, d))
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<Q>>> {
    // sparse-ish entries so that rank deficiency actually happens
    let entry = prop_oneof![3 => Just(q(0)), 2 => rational()];
    prop::collection::vec(prop::collection::vec(entry, rows), cols)
}

fn linmap(cols: &[Vec<Q>], rows: usize) -> LinMap<usize, usize> {
    let dom = FreeModule::new((0..cols.len()).collect()).unwrap();
    let cod = FreeModule::new((0..rows).collect()).unwrap();
    let columns = cols
        .iter()
        .map(|c| Vector::from_terms(c.iter().cloned().enumerate()))
        .collect();
    LinMap::new(dom, cod, columns).unwrap()
}

proptest! {
    #[test]
    fn rank_nullity(cols in matrix(4, 5)) {
        let m = linmap(&cols, 4);
        let r = rank_kernel_image(&m);
        prop_assert_eq!(r.rank + r.kernel_basis.len(), 5);
        for k in &r.kernel_basis {
            prop_assert!(m.apply(k).unwrap().is_zero());
        }
    }

    #[test]
    fn solve_or_certify(cols in matrix(4, 3), b in prop::collection::vec(rational(), 4)) {
        let m = linmap(&cols, 4);
        let target = Vector::from_terms(b.into_iter().enumerate());
        match solve_linear(&m, &target).unwrap() {
            Solution::Solved(x) => prop_assert_eq!(m.apply(&x).unwrap(), target),
            Solution::Inconsistent { certificate } => {
                for c in m.columns() {
                    prop_assert_eq!(certificate.dot(c), q(0));
                }
                prop_assert!(certificate.dot(&target) != q(0));
            }
        }
    }

    #[test]
    fn addition_is_associative(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
    }
}
