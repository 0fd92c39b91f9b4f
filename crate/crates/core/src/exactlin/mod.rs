//! Exact linear algebra over the rationals: free modules with named bases,
//! sparse linear maps, rank/kernel/image, linear solving with
//! inconsistency certificates, and homology dimensions.

mod echelon;
mod scalar;
mod vector;

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

pub use scalar::{binomial, factorial, format_q, one, parse_q, q, qr, sign, zero, Q};
pub use vector::{Key, Vector};

pub(crate) use echelon::{ColumnEchelon, SparseCol};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinError {
    #[error("shape error: {0}")]
    Shape(String),
    #[error("not a complex: d_out(d_in({witness})) = {value} is nonzero")]
    NotAComplex { witness: String, value: String },
    #[error("cannot parse rational {0:?}")]
    Parse(String),
}

/// A free module with an ordered basis of pairwise distinct identifiers.
#[derive(Clone, PartialEq, Eq)]
pub struct FreeModule<K: Key> {
    basis: Vec<K>,
    index: BTreeMap<K, usize>,
}

impl<K: Key> FreeModule<K> {
    pub fn new(basis: Vec<K>) -> Result<Self, LinError> {
        let mut index = BTreeMap::new();
        for (i, k) in basis.iter().enumerate() {
            if index.insert(k.clone(), i).is_some() {
                return Err(LinError::Shape(format!("duplicate basis element {k}")));
            }
        }
        Ok(Self { basis, index })
    }

    /// Sorted, deduplicated basis.
    pub fn from_keys<I: IntoIterator<Item = K>>(keys: I) -> Self {
        let set: std::collections::BTreeSet<K> = keys.into_iter().collect();
        Self::new(set.into_iter().collect()).expect("deduplicated")
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[K] {
        &self.basis
    }

    pub fn index_of(&self, k: &K) -> Option<usize> {
        self.index.get(k).copied()
    }

    pub fn contains(&self, k: &K) -> bool {
        self.index.contains_key(k)
    }

    pub fn basis_vector(&self, i: usize) -> Vector<K> {
        Vector::basis(self.basis[i].clone())
    }

    pub(crate) fn to_sparse(&self, v: &Vector<K>) -> Result<SparseCol, LinError> {
        v.iter()
            .map(|(k, c)| {
                self.index_of(k)
                    .map(|i| (i, c.clone()))
                    .ok_or_else(|| LinError::Shape(format!("{k} is not a basis element")))
            })
            .collect()
    }

    pub(crate) fn from_sparse(&self, v: &SparseCol) -> Vector<K> {
        Vector::from_terms(v.iter().map(|(i, c)| (self.basis[*i].clone(), c.clone())))
    }
}

impl<K: Key> fmt::Debug for FreeModule<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreeModule(dim {})", self.dim())
    }
}

/// A linear map between free modules, stored column by column.
#[derive(Clone)]
pub struct LinMap<K1: Key, K2: Key> {
    domain: FreeModule<K1>,
    codomain: FreeModule<K2>,
    columns: Vec<Vector<K2>>,
    sparse: Vec<SparseCol>,
}

impl<K1: Key, K2: Key> LinMap<K1, K2> {
    pub fn new(
        domain: FreeModule<K1>,
        codomain: FreeModule<K2>,
        columns: Vec<Vector<K2>>,
    ) -> Result<Self, LinError> {
        if columns.len() != domain.dim() {
            return Err(LinError::Shape(format!(
                "{} columns for a domain of dimension {}",
                columns.len(),
                domain.dim()
            )));
        }
        let sparse = columns.iter().map(|c| codomain.to_sparse(c)).collect::<Result<_, _>>()?;
        Ok(Self { domain, codomain, columns, sparse })
    }

    /// Builds the map from its values on the domain basis.
    pub fn from_fn<F: FnMut(&K1) -> Vector<K2>>(
        domain: FreeModule<K1>,
        codomain: FreeModule<K2>,
        mut f: F,
    ) -> Result<Self, LinError> {
        let columns = domain.basis().iter().map(&mut f).collect();
        Self::new(domain, codomain, columns)
    }

    pub fn zero(domain: FreeModule<K1>, codomain: FreeModule<K2>) -> Self {
        let columns = vec![Vector::zero(); domain.dim()];
        Self::new(domain, codomain, columns).expect("zero map is well formed")
    }

    pub fn domain(&self) -> &FreeModule<K1> {
        &self.domain
    }

    pub fn codomain(&self) -> &FreeModule<K2> {
        &self.codomain
    }

    pub fn column(&self, i: usize) -> &Vector<K2> {
        &self.columns[i]
    }

    pub fn columns(&self) -> &[Vector<K2>] {
        &self.columns
    }

    pub fn apply(&self, v: &Vector<K1>) -> Result<Vector<K2>, LinError> {
        let mut out = Vector::zero();
        for (k, c) in v {
            let i = self
                .domain
                .index_of(k)
                .ok_or_else(|| LinError::Shape(format!("{k} is not in the domain")))?;
            out.axpy(c, &self.columns[i]);
        }
        Ok(out)
    }

    /// `other ∘ self`.
    pub fn then<K3: Key>(&self, other: &LinMap<K2, K3>) -> Result<LinMap<K1, K3>, LinError> {
        if self.codomain != other.domain {
            return Err(LinError::Shape("composition of mismatched maps".into()));
        }
        let cols = self.columns.iter().map(|c| other.apply(c)).collect::<Result<_, _>>()?;
        LinMap::new(self.domain.clone(), other.codomain.clone(), cols)
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(|c| c.is_zero())
    }

    pub(crate) fn echelon(&self) -> ColumnEchelon {
        ColumnEchelon::build(self.sparse.iter())
    }
}

impl<K1: Key, K2: Key> fmt::Debug for LinMap<K1, K2> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinMap({} -> {})", self.domain.dim(), self.codomain.dim())
    }
}

#[derive(Debug, Clone)]
pub struct RankKernelImage<K1: Key, K2: Key> {
    pub rank: usize,
    pub kernel_basis: Vec<Vector<K1>>,
    pub image_basis: Vec<Vector<K2>>,
}

pub fn rank_kernel_image<K1: Key, K2: Key>(m: &LinMap<K1, K2>) -> RankKernelImage<K1, K2> {
    let ech = m.echelon();
    RankKernelImage {
        rank: ech.rank(),
        kernel_basis: ech.kernel.iter().map(|k| m.domain.from_sparse(k)).collect(),
        image_basis: ech.pivot_columns.iter().map(|&j| m.columns[j].clone()).collect(),
    }
}

pub fn rank<K1: Key, K2: Key>(m: &LinMap<K1, K2>) -> usize {
    m.echelon().rank()
}

/// Outcome of [`solve_linear`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solution<K1: Key, K2: Key> {
    Solved(Vector<K1>),
    /// A functional `y` on the codomain with `y ∘ m = 0` and `y(target) != 0`.
    Inconsistent { certificate: Vector<K2> },
}

impl<K1: Key, K2: Key> Solution<K1, K2> {
    pub fn solved(self) -> Option<Vector<K1>> {
        match self {
            Solution::Solved(x) => Some(x),
            Solution::Inconsistent { .. } => None,
        }
    }
}

pub fn solve_linear<K1: Key, K2: Key>(
    m: &LinMap<K1, K2>,
    target: &Vector<K2>,
) -> Result<Solution<K1, K2>, LinError> {
    let b = m.codomain.to_sparse(target)?;
    let ech = m.echelon();
    Ok(solve_with(m, &ech, b))
}

pub(crate) fn solve_with<K1: Key, K2: Key>(
    m: &LinMap<K1, K2>,
    ech: &ColumnEchelon,
    b: SparseCol,
) -> Solution<K1, K2> {
    match ech.solve(b.clone()) {
        Some(x) => Solution::Solved(m.domain.from_sparse(&x)),
        None => {
            let y = echelon::left_certificate(&m.sparse, m.codomain.dim(), &b)
                .expect("an unsolvable system has a left certificate");
            Solution::Inconsistent { certificate: m.codomain.from_sparse(&y) }
        }
    }
}

/// A factored linear map that can be solved against many right-hand sides.
pub struct Solver<K1: Key, K2: Key> {
    map: LinMap<K1, K2>,
    ech: ColumnEchelon,
}

impl<K1: Key, K2: Key> Solver<K1, K2> {
    pub fn new(map: LinMap<K1, K2>) -> Self {
        let ech = map.echelon();
        Self { map, ech }
    }

    pub fn map(&self) -> &LinMap<K1, K2> {
        &self.map
    }

    pub fn solve(&self, target: &Vector<K2>) -> Result<Solution<K1, K2>, LinError> {
        let b = self.map.codomain.to_sparse(target)?;
        Ok(solve_with(&self.map, &self.ech, b))
    }
}

/// `dim ker(d_out) - rank(d_in)`, after checking `d_out ∘ d_in = 0` exactly.
pub fn homology_dims<K0: Key, K1: Key, K2: Key>(
    d_in: &LinMap<K0, K1>,
    d_out: &LinMap<K1, K2>,
) -> Result<usize, LinError> {
    if d_in.codomain != d_out.domain {
        return Err(LinError::Shape("d_in and d_out do not compose".into()));
    }
    for (i, col) in d_in.columns.iter().enumerate() {
        let v = d_out.apply(col)?;
        if !v.is_zero() {
            return Err(LinError::NotAComplex {
                witness: d_in.domain.basis[i].to_string(),
                value: v.to_string(),
            });
        }
    }
    let kernel = d_out.domain.dim() - rank(d_out);
    Ok(kernel - rank(d_in))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn module(names: &[&str]) -> FreeModule<String> {
        FreeModule::new(names.iter().map(|s| s.to_string()).collect()).unwrap()
    }

    fn v(terms: &[(&str, i64)]) -> Vector<String> {
        Vector::from_terms(terms.iter().map(|(k, c)| (k.to_string(), q(*c))))
    }

    fn identity3() -> LinMap<String, String> {
        let m = module(&["a", "b", "c"]);
        LinMap::from_fn(m.clone(), m, |k| Vector::basis(k.clone())).unwrap()
    }

    /// Heisenberg CE differential on ∧²: x∧y ↦ −z, others ↦ 0.
    fn heisenberg_d2() -> LinMap<String, String> {
        LinMap::new(
            module(&["x^y", "x^z", "y^z"]),
            module(&["x", "y", "z"]),
            vec![v(&[("z", -1)]), v(&[]), v(&[])],
        )
        .unwrap()
    }

    #[test]
    fn identity_rank() {
        let r = rank_kernel_image(&identity3());
        assert_eq!(r.rank, 3);
        assert!(r.kernel_basis.is_empty());
        assert_eq!(r.image_basis.len(), 3);
    }

    #[test]
    fn heisenberg_d2_rank() {
        let m = heisenberg_d2();
        let r = rank_kernel_image(&m);
        assert_eq!(r.rank, 1);
        assert_eq!(r.kernel_basis.len(), 2);
        for k in &r.kernel_basis {
            assert!(m.apply(k).unwrap().is_zero());
        }
    }

    #[test]
    fn zero_map_rank() {
        let m = module(&["a", "b"]);
        let r = rank_kernel_image(&LinMap::zero(m.clone(), m));
        assert_eq!((r.rank, r.kernel_basis.len()), (0, 2));
    }

    #[test]
    fn shape_errors() {
        let bad = LinMap::new(module(&["a"]), module(&["b"]), vec![v(&[("c", 1)])]);
        assert!(matches!(bad, Err(LinError::Shape(_))));
        let bad = LinMap::new(module(&["a", "b"]), module(&["b"]), vec![v(&[])]);
        assert!(matches!(bad, Err(LinError::Shape(_))));
    }

    #[test]
    fn solve_examples() {
        let id = identity3();
        assert_eq!(
            solve_linear(&id, &v(&[("a", 1)])).unwrap(),
            Solution::Solved(v(&[("a", 1)]))
        );
        let m = module(&["e1"]);
        let zero = LinMap::zero(m.clone(), m.clone());
        assert_eq!(
            solve_linear(&zero, &v(&[("e1", 1)])).unwrap(),
            Solution::Inconsistent { certificate: v(&[("e1", 1)]) }
        );
        let two = LinMap::new(m.clone(), m, vec![v(&[("e1", 2)])]).unwrap();
        let x = solve_linear(&two, &v(&[("e1", 3)])).unwrap().solved().unwrap();
        assert_eq!(x.get(&"e1".to_string()), qr(3, 2));
    }

    #[test]
    fn homology_examples() {
        let m = module(&["a", "b", "c"]);
        let z = LinMap::zero(m.clone(), m.clone());
        assert_eq!(homology_dims(&z, &z).unwrap(), 3);

        let d1 = LinMap::zero(module(&["x", "y", "z"]), module(&["1"]));
        assert_eq!(homology_dims(&heisenberg_d2(), &d1).unwrap(), 2);

        let one = module(&["e"]);
        let id = LinMap::from_fn(one.clone(), one, |k| Vector::basis(k.clone())).unwrap();
        assert!(matches!(homology_dims(&id, &id), Err(LinError::NotAComplex { .. })));
    }
}
