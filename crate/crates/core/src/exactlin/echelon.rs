//! Index-based sparse elimination. Pivots are chosen as the first nonzero
//! row of each reduced column, so witnesses are reproducible.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::scalar::Q;

pub(crate) type SparseCol = BTreeMap<usize, Q>;

fn axpy(dst: &mut SparseCol, c: &Q, src: &SparseCol) {
    for (k, v) in src {
        let e = dst.entry(*k).or_insert_with(Q::zero);
        *e += c * v;
        if e.is_zero() {
            dst.remove(k);
        }
    }
}

struct Pivot {
    col: SparseCol,
    combo: SparseCol,
}

/// Column echelon form of a matrix given by its columns, tracking for every
/// pivot the combination of original columns that produced it.
pub(crate) struct ColumnEchelon {
    pivots: BTreeMap<usize, Pivot>,
    pub(crate) pivot_columns: Vec<usize>,
    pub(crate) kernel: Vec<SparseCol>,
}

impl ColumnEchelon {
    pub(crate) fn new() -> Self {
        Self { pivots: BTreeMap::new(), pivot_columns: Vec::new(), kernel: Vec::new() }
    }

    pub(crate) fn build<'a, I: IntoIterator<Item = &'a SparseCol>>(cols: I) -> Self {
        let mut e = Self::new();
        for (j, c) in cols.into_iter().enumerate() {
            e.push(j, c.clone());
        }
        e
    }

    pub(crate) fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `v` against the pivots. Returns the residual and the
    /// combination `x` of original columns with `v = residual + A x`.
    pub(crate) fn reduce(&self, mut v: SparseCol) -> (SparseCol, SparseCol) {
        let mut x = SparseCol::new();
        let mut cursor = 0usize;
        loop {
            let next = v
                .range(cursor..)
                .find(|(r, _)| self.pivots.contains_key(r))
                .map(|(r, c)| (*r, c.clone()));
            let Some((r, c)) = next else { break };
            let p = &self.pivots[&r];
            axpy(&mut v, &-c.clone(), &p.col);
            axpy(&mut x, &c, &p.combo);
            cursor = r + 1;
        }
        (v, x)
    }

    /// Adds original column number `j`.
    pub(crate) fn push(&mut self, j: usize, v: SparseCol) {
        let (res, x) = self.reduce(v);
        let mut combo = SparseCol::new();
        combo.insert(j, Q::one());
        axpy(&mut combo, &-Q::one(), &x);
        match res.iter().next().map(|(r, c)| (*r, c.clone())) {
            None => self.kernel.push(combo),
            Some((r, lead)) => {
                let inv = Q::one() / lead;
                let col = res.into_iter().map(|(k, c)| (k, c * &inv)).collect();
                let combo = combo.into_iter().map(|(k, c)| (k, c * &inv)).collect();
                self.pivots.insert(r, Pivot { col, combo });
                self.pivot_columns.push(j);
            }
        }
    }

    /// Solves `A x = v` if possible.
    pub(crate) fn solve(&self, v: SparseCol) -> Option<SparseCol> {
        let (res, x) = self.reduce(v);
        if res.is_empty() {
            Some(x)
        } else {
            None
        }
    }
}

/// Finds `y` with `y^T A = 0` and `y . b != 0`, or `None` when `b` lies in
/// the column span of `A`. `A` has `nrows` rows and is given by columns.
pub(crate) fn left_certificate(cols: &[SparseCol], nrows: usize, b: &SparseCol) -> Option<SparseCol> {
    let mut rows: Vec<SparseCol> = vec![SparseCol::new(); nrows];
    for (j, c) in cols.iter().enumerate() {
        for (i, v) in c {
            rows[*i].insert(j, v.clone());
        }
    }
    let mut ech = ColumnEchelon::new();
    for (i, r) in rows.into_iter().enumerate() {
        ech.push(i, r);
        if let Some(y) = ech.kernel.pop() {
            let dot: Q = y.iter().filter_map(|(k, c)| b.get(k).map(|bk| c * bk)).sum();
            if !dot.is_zero() {
                return Some(y);
            }
        }
    }
    None
}
