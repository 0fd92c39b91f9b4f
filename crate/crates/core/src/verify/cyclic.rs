use crate::complexes::{CyclicModule, Mixed, MixedComplex};
use crate::exactlin::{sign, Vector};

use super::{CheckBuilder, VerificationReport};

fn lin<M: CyclicModule>(v: &Vector<M::K>, f: impl Fn(&M::K) -> Vector<M::K>) -> Vector<M::K> {
    v.map_linear(f)
}

/// Exhaustive check of the simplicial and cyclic identities, with signed
/// `t`, on the given bases of degrees `0..=top`:
///
/// `d_i d_j = d_{j-1} d_i` (`i < j`), `s_i s_j = s_{j+1} s_i` (`i ≤ j`),
/// the mixed face/degeneracy relations, `d_i t = -t d_{i-1}`,
/// `d_0 t = (-1)^n d_n`, `s_i t = -t s_{i-1}`, `s_0 t = (-1)^n t^2 s_n` and
/// `t^{n+1} = 1`; then `b^2 = 0`, `B^2 = 0` and `bB + Bb = 0`, unnormalized
/// and normalized.
pub fn check_cyclic_module<M: CyclicModule>(
    m: &M,
    name: &str,
    top: usize,
    basis: impl Fn(usize) -> Vec<M::K>,
) -> VerificationReport {
    let mut report = VerificationReport::new(name);
    report.cap("degree", top);
    let mut dd = CheckBuilder::new("d_i d_j = d_{j-1} d_i");
    let mut ss = CheckBuilder::new("s_i s_j = s_{j+1} s_i");
    let mut ds = CheckBuilder::new("face/degeneracy relations");
    let mut dt = CheckBuilder::new("d_i t = -t d_{i-1}, d_0 t = (-1)^n d_n");
    let mut st = CheckBuilder::new("s_i t = -t s_{i-1}, s_0 t = (-1)^n t^2 s_n");
    let mut tn = CheckBuilder::new("t^{n+1} = 1");
    let mut bb = CheckBuilder::new("b^2 = 0");
    let mut big_bb = CheckBuilder::new("B^2 = 0");
    let mut mixed = CheckBuilder::new("bB + Bb = 0");
    let mut nbb = CheckBuilder::new("normalized b^2 = 0");
    let mut nbig = CheckBuilder::new("normalized B^2 = 0");
    let mut nmixed = CheckBuilder::new("normalized bB + Bb = 0");
    let r = |x: &M::K| m.render(x);
    let unnorm = Mixed::new(m, false);
    let norm = Mixed::new(m, true);
    let mut count = 0;
    for n in 0..=top {
        for x in basis(n) {
            count += 1;
            let vx = Vector::basis(x.clone());
            let at = r(&x);
            let t = |v: &Vector<M::K>| m.cyclic_vec(v);
            let tx = m.cyclic(&x);
            if n >= 2 {
                for j in 0..=n {
                    let dj = m.face(j, &x);
                    for i in 0..j {
                        let lhs = lin::<M>(&dj, |y| m.face(i, y));
                        let rhs = lin::<M>(&m.face(i, &x), |y| m.face(j - 1, y));
                        dd.eq_with(format!("{at} (i={i}, j={j})"), &lhs, &rhs, r);
                    }
                }
            }
            for j in 0..=n {
                let sj = m.degeneracy(j, &x);
                for i in 0..=j {
                    let lhs = lin::<M>(&sj, |y| m.degeneracy(i, y));
                    let rhs = lin::<M>(&m.degeneracy(i, &x), |y| m.degeneracy(j + 1, y));
                    ss.eq_with(format!("{at} (i={i}, j={j})"), &lhs, &rhs, r);
                }
                for i in 0..=n + 1 {
                    let lhs = lin::<M>(&sj, |y| m.face(i, y));
                    let rhs = if i < j {
                        lin::<M>(&m.face(i, &x), |y| m.degeneracy(j - 1, y))
                    } else if i == j || i == j + 1 {
                        vx.clone()
                    } else {
                        lin::<M>(&m.face(i - 1, &x), |y| m.degeneracy(j, y))
                    };
                    ds.eq_with(format!("{at} (d_{i} s_{j})"), &lhs, &rhs, r);
                }
            }
            if n >= 1 {
                for i in 1..=n {
                    let lhs = lin::<M>(&tx, |y| m.face(i, y));
                    let rhs = -&t(&m.face(i - 1, &x));
                    dt.eq_with(format!("{at} (i={i})"), &lhs, &rhs, r);
                }
                let lhs = lin::<M>(&tx, |y| m.face(0, y));
                let rhs = m.face(n, &x).scaled(&sign(n));
                dt.eq_with(format!("{at} (i=0)"), &lhs, &rhs, r);
            }
            for i in 1..=n {
                let lhs = lin::<M>(&tx, |y| m.degeneracy(i, y));
                let rhs = -&t(&m.degeneracy(i - 1, &x));
                st.eq_with(format!("{at} (i={i})"), &lhs, &rhs, r);
            }
            let lhs = lin::<M>(&tx, |y| m.degeneracy(0, y));
            let rhs = t(&t(&m.degeneracy(n, &x))).scaled(&sign(n));
            st.eq_with(format!("{at} (i=0)"), &lhs, &rhs, r);
            let mut p = vx.clone();
            for _ in 0..=n {
                p = t(&p);
            }
            tn.eq_with(&at, &p, &vx, r);

            for (mc, sq, bsq, anti) in [(&unnorm, &mut bb, &mut big_bb, &mut mixed), (&norm, &mut nbb, &mut nbig, &mut nmixed)] {
                if mc.normalized && m.is_degenerate(&x) {
                    continue;
                }
                let b = mc.b(&x);
                let big = mc.big_b(&x);
                sq.eq_with(&at, &mc.b_vec(&b), &Vector::zero(), r);
                bsq.eq_with(&at, &mc.big_b_vec(&big), &Vector::zero(), r);
                let sum = &mc.b_vec(&big) + &mc.big_b_vec(&b);
                anti.eq_with(&at, &sum, &Vector::zero(), r);
            }
        }
    }
    report.cap("basis elements", count);
    for c in [dd, ss, ds, dt, st, tn, bb, big_bb, mixed, nbb, nbig, nmixed] {
        report.push(c.finish());
    }
    report
}
