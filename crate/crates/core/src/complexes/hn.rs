use std::fmt;

use crate::exactlin::{Key, Vector};

use super::CyclicModule;

/// A mixed complex `(M, b, B)`: `b` lowers degree by one, `B` raises it.
pub trait MixedComplex {
    type K: Key;

    fn degree(&self, x: &Self::K) -> usize;
    fn b(&self, x: &Self::K) -> Vector<Self::K>;
    fn big_b(&self, x: &Self::K) -> Vector<Self::K>;

    fn render(&self, x: &Self::K) -> String {
        x.to_string()
    }

    fn b_vec(&self, v: &Vector<Self::K>) -> Vector<Self::K> {
        v.map_linear(|x| self.b(x))
    }

    fn big_b_vec(&self, v: &Vector<Self::K>) -> Vector<Self::K> {
        v.map_linear(|x| self.big_b(x))
    }
}

/// The mixed complex of a cyclic module, normalized or not. On the
/// unnormalized complex `B = (1 - t) s N`; on the normalized one the closed
/// formula is used when the module has one.
pub struct Mixed<'a, M: CyclicModule> {
    pub m: &'a M,
    pub normalized: bool,
}

impl<'a, M: CyclicModule> Mixed<'a, M> {
    pub fn new(m: &'a M, normalized: bool) -> Self {
        Self { m, normalized }
    }
}

impl<M: CyclicModule> MixedComplex for Mixed<'_, M> {
    type K = M::K;

    fn degree(&self, x: &M::K) -> usize {
        self.m.degree(x)
    }

    fn b(&self, x: &M::K) -> Vector<M::K> {
        let v = self.m.boundary(x);
        if self.normalized {
            self.m.normalize(&v)
        } else {
            v
        }
    }

    fn big_b(&self, x: &M::K) -> Vector<M::K> {
        if !self.normalized {
            return self.m.connes(x);
        }
        match self.m.connes_normalized(x) {
            Some(v) => v,
            None => self.m.normalize(&self.m.connes(x)),
        }
    }

    fn render(&self, x: &M::K) -> String {
        self.m.render(x)
    }
}

/// A basis element `x` placed in column `col` of the negative cyclic
/// complex. In total degree `n`, column `i` holds `M_{n+2i}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct HnKey<K> {
    pub col: usize,
    pub elem: K,
}

impl<K: fmt::Display> fmt::Display for HnKey<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "u^{}{}", self.col, self.elem)
    }
}

/// The negative cyclic complex truncated to columns `0..=p`. The columns
/// beyond `p` form a subcomplex, so the truncation is a quotient complex.
/// A degree `n` element `(m_0, …, m_p)` has differential
/// `(b m_0, b m_1 + B m_0, …, b m_p + B m_{p-1})`.
pub struct HnSlice<'a, M: MixedComplex> {
    pub m: &'a M,
    pub p: usize,
}

impl<'a, M: MixedComplex> HnSlice<'a, M> {
    pub fn new(m: &'a M, p: usize) -> Self {
        Self { m, p }
    }

    /// Total degree of a column element.
    pub fn degree(&self, k: &HnKey<M::K>) -> i64 {
        self.m.degree(&k.elem) as i64 - 2 * k.col as i64
    }

    pub fn place(col: usize, v: &Vector<M::K>) -> Vector<HnKey<M::K>> {
        v.map_keys(|x| HnKey { col, elem: x.clone() })
    }

    pub fn column(v: &Vector<HnKey<M::K>>, col: usize) -> Vector<M::K> {
        v.iter().filter(|(k, _)| k.col == col).map(|(k, c)| (k.elem.clone(), c.clone())).collect()
    }

    pub fn d(&self, k: &HnKey<M::K>) -> Vector<HnKey<M::K>> {
        let mut out = Self::place(k.col, &self.m.b(&k.elem));
        if k.col < self.p {
            out += &Self::place(k.col + 1, &self.m.big_b(&k.elem));
        }
        out
    }

    pub fn d_vec(&self, v: &Vector<HnKey<M::K>>) -> Vector<HnKey<M::K>> {
        v.map_linear(|k| self.d(k))
    }

    /// The projection `π` onto column 0, the Hochschild complex.
    pub fn pi(&self, v: &Vector<HnKey<M::K>>) -> Vector<M::K> {
        Self::column(v, 0)
    }

    /// `x ↦ (B x, 0, …)`: a cycle of degree `n + 1` for any Hochschild cycle
    /// `x` of degree `n` that is also annihilated by `B` after `b`.
    pub fn b_lift(&self, v: &Vector<M::K>) -> Vector<HnKey<M::K>> {
        Self::place(0, &self.m.big_b_vec(v))
    }

    /// Basis of total degree `n`, given the basis of each `M_k`.
    pub fn basis<F: FnMut(usize) -> Vec<M::K>>(&self, n: i64, mut module_basis: F) -> Vec<HnKey<M::K>> {
        let mut out = Vec::new();
        for col in 0..=self.p {
            let k = n + 2 * col as i64;
            if k < 0 {
                continue;
            }
            out.extend(module_basis(k as usize).into_iter().map(|elem| HnKey { col, elem }));
        }
        out
    }
}
