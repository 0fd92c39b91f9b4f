use std::sync::Arc;

use num_traits::One;

use crate::exactlin::Vector;

use super::lie::{coordinates, span};
use super::{AlgebraError, AssocAlgebra, LieAlgebra};

/// `n`, a strict partial order `sigma` on `{0, …, n-1}` given by pairs
/// `(i, j)` meaning `i < j`, and the base algebra with its ideal.
#[derive(Clone, Debug)]
pub struct TriangularSpec {
    pub n: usize,
    pub sigma: Vec<(usize, usize)>,
    pub base: AssocAlgebra,
}

/// The block `{a ∈ M_n(A) : a_ij ∈ I unless i <_σ j}` together with its
/// Lie algebra.
///
/// Basis elements are `E_ij ⊗ v` where `v` runs over the basis of `A` when
/// `i <_σ j` and over the basis of `I` otherwise. When `A` is graded the Lie
/// algebra carries the weight `α·deg v + φ(j) - φ(i)`, with `φ` the height in
/// the order and `α` one more than the spread of `φ`, and the multidegree
/// `(deg v, e_j - e_i)`.
#[derive(Clone, Debug)]
pub struct Triangular {
    spec: TriangularSpec,
    ambient: AssocAlgebra,
    names: Vec<String>,
    embedding: Vec<Vector<usize>>,
    table: Vec<Vec<Vector<usize>>>,
    index: usize,
    lie: Arc<LieAlgebra>,
}

impl TriangularSpec {
    pub fn less(&self, i: usize, j: usize) -> bool {
        self.sigma.contains(&(i, j))
    }

    pub fn validate(&self) -> Result<(), AlgebraError> {
        for &(i, j) in &self.sigma {
            if i >= self.n || j >= self.n {
                return Err(AlgebraError::Invalid(format!("order pair ({i}, {j}) out of range")));
            }
            if i == j {
                return Err(AlgebraError::Invalid(format!("order is not irreflexive at {i}")));
            }
        }
        for &(i, j) in &self.sigma {
            for &(j2, l) in &self.sigma {
                if j == j2 && !self.less(i, l) {
                    return Err(AlgebraError::Invalid(format!("order is not transitive: {i}<{j}<{l}")));
                }
            }
        }
        Ok(())
    }

    /// Length of the longest chain ending at `i`.
    fn height(&self, i: usize) -> i64 {
        self.sigma.iter().filter(|&&(_, j)| j == i).map(|&(k, _)| self.height(k) + 1).max().unwrap_or(0)
    }
}

impl Triangular {
    pub fn build(spec: TriangularSpec) -> Result<Self, AlgebraError> {
        spec.validate()?;
        let base = &spec.base;
        if base.nilpotency_index().is_none() {
            return Err(AlgebraError::Unsupported("ideal is not nilpotent".into()));
        }
        let n = spec.n;
        let da = base.dim();
        let ambient = matrix_algebra(base, n)?;
        let at = |i: usize, j: usize, a: usize| (i * n + j) * da + a;

        let mut names = Vec::new();
        let mut embedding = Vec::new();
        let mut degrees = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if spec.less(i, j) {
                    for a in 0..da {
                        names.push(ambient.names()[at(i, j, a)].clone());
                        embedding.push(Vector::basis(at(i, j, a)));
                        degrees.push(base.degree(a).map(|d| (d, i, j)));
                    }
                } else {
                    for (k, v) in base.ideal_basis().iter().enumerate() {
                        let single = v.len() == 1 && v.leading().is_some_and(|(_, c)| c.is_one());
                        names.push(if single {
                            ambient.names()[at(i, j, *v.leading().unwrap().0)].clone()
                        } else {
                            format!("I{k}E{}{}", i + 1, j + 1)
                        });
                        embedding.push(v.map_keys(|&a| at(i, j, a)));
                        let deg = homogeneous_degree(base, v);
                        degrees.push(deg.map(|d| (d, i, j)));
                    }
                }
            }
        }

        let dim = embedding.len();
        let mut table = vec![vec![Vector::zero(); dim]; dim];
        for a in 0..dim {
            for b in 0..dim {
                let prod = ambient.mul(&embedding[a], &embedding[b]);
                table[a][b] = coordinates(&embedding, &prod, ambient.dim())
                    .map(|c| c.into_iter().enumerate().collect())
                    .ok_or_else(|| AlgebraError::Invalid("block is not closed under multiplication".into()))?;
            }
        }
        let index = block_index(&table, dim)
            .ok_or_else(|| AlgebraError::Invalid("block is not nilpotent".into()))?;
        let bound = n * base.nilpotency_index().unwrap();
        debug_assert!(index <= bound, "nilpotency index {index} exceeds the sanity bound {bound}");

        let mut brackets = Vec::new();
        for a in 0..dim {
            for b in a + 1..dim {
                let br = &table[a][b] - &table[b][a];
                if !br.is_zero() {
                    brackets.push((a, b, br));
                }
            }
        }
        let lie = if degrees.iter().all(Option::is_some) && dim > 0 {
            let heights: Vec<i64> = (0..n).map(|i| spec.height(i)).collect();
            let spread = heights.iter().max().unwrap() - heights.iter().min().unwrap();
            let alpha = spread + 1;
            let mut weights = Vec::new();
            let mut multi = Vec::new();
            for (d, i, j) in degrees.iter().map(|x| x.unwrap()) {
                let w = alpha * d as i64 + heights[j] - heights[i];
                if w < 1 {
                    return Err(AlgebraError::Invalid(
                        "ideal basis needs positive degree for a graded block".into(),
                    ));
                }
                weights.push(w as u32);
                let mut md = vec![d as i64];
                md.extend((0..n).map(|k| (k == j) as i64 - (k == i) as i64));
                multi.push(md);
            }
            LieAlgebra::new_graded(names.clone(), brackets, weights, multi)?
        } else {
            LieAlgebra::new(names.clone(), brackets)?
        };
        Ok(Self { spec, ambient, names, embedding, table, index, lie: Arc::new(lie) })
    }

    pub fn spec(&self) -> &TriangularSpec {
        &self.spec
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// `M_n(A)` with the ideal `M_n(I)`.
    pub fn ambient(&self) -> &AssocAlgebra {
        &self.ambient
    }

    /// The matrix of a basis element of the block.
    pub fn matrix(&self, k: usize) -> &Vector<usize> {
        &self.embedding[k]
    }

    pub fn to_matrix(&self, v: &Vector<usize>) -> Vector<usize> {
        v.map_linear(|&k| self.embedding[k].clone())
    }

    pub fn mul(&self, u: &Vector<usize>, v: &Vector<usize>) -> Vector<usize> {
        let mut out = Vector::zero();
        for (a, ca) in u {
            for (b, cb) in v {
                out.axpy(&(ca * cb), &self.table[*a][*b]);
            }
        }
        out
    }

    /// Smallest `m` with `T^m = 0`.
    pub fn nilpotency_index(&self) -> usize {
        self.index
    }

    pub fn lie(&self) -> &Arc<LieAlgebra> {
        &self.lie
    }

    /// `α`: the weight of `E_ij ⊗ v` is `α·deg v + φ(j) - φ(i)`.
    pub fn degree_scale(&self) -> u32 {
        let heights: Vec<i64> = (0..self.spec.n).map(|i| self.spec.height(i)).collect();
        let spread = heights.iter().max().unwrap_or(&0) - heights.iter().min().unwrap_or(&0);
        (spread + 1) as u32
    }

    /// `exp(ξ) = 1 + ξ + ξ²/2 + …` as a matrix in `1 + T`.
    pub fn group_element(&self, xi: &Vector<usize>) -> Vector<usize> {
        self.ambient
            .exp_series(&self.to_matrix(xi), self.index)
            .expect("block elements are nilpotent")
    }
}

fn homogeneous_degree(base: &AssocAlgebra, v: &Vector<usize>) -> Option<u32> {
    let mut degs = v.keys().map(|&a| base.degree(a));
    let first = degs.next()??;
    degs.all(|d| d == Some(first)).then_some(first)
}

fn block_index(table: &[Vec<Vector<usize>>], dim: usize) -> Option<usize> {
    let gens: Vec<Vector<usize>> = (0..dim).map(Vector::basis).collect();
    let mul = |u: &Vector<usize>, v: &Vector<usize>| {
        let mut out = Vector::zero();
        for (a, ca) in u {
            for (b, cb) in v {
                out.axpy(&(ca * cb), &table[*a][*b]);
            }
        }
        out
    };
    let mut power = span(&gens, dim);
    let mut m = 1;
    while !power.is_empty() {
        let prods: Vec<_> = power.iter().flat_map(|p| gens.iter().map(|g| mul(p, g)).collect::<Vec<_>>()).collect();
        let next = span(&prods, dim);
        if next.len() == power.len() {
            return None;
        }
        power = next;
        m += 1;
    }
    Some(m)
}

/// `M_n(A)` on the basis `E_ij ⊗ a`, indexed `(i·n + j)·dim A + a`, with the
/// ideal `M_n(I)`.
fn matrix_algebra(base: &AssocAlgebra, n: usize) -> Result<AssocAlgebra, AlgebraError> {
    let da = base.dim();
    let at = |i: usize, j: usize, a: usize| (i * n + j) * da + a;
    let mut names = Vec::with_capacity(n * n * da);
    for i in 0..n {
        for j in 0..n {
            for a in 0..da {
                let e = format!("E{}{}", i + 1, j + 1);
                let an = &base.names()[a];
                names.push(if Some(a) == base.unit_index() { e } else { format!("{an}{e}") });
            }
        }
    }
    let dim = n * n * da;
    let mut table = vec![vec![Vector::zero(); dim]; dim];
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                for a in 0..da {
                    for b in 0..da {
                        table[at(i, j, a)][at(j, l, b)] = base.mul_basis(a, b).map_keys(|&c| at(i, l, c));
                    }
                }
            }
        }
    }
    let unit: Vector<usize> = (0..n).flat_map(|i| base.unit().map_keys(|&a| at(i, i, a)).into_terms()).collect();
    let ideal = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .flat_map(|(i, j)| base.ideal_basis().iter().map(move |v| v.map_keys(|&a| at(i, j, a))))
        .collect();
    let m = AssocAlgebra::new(names, unit, table, ideal)?;
    match base.degrees() {
        Some(d) => m.with_degrees((0..dim).map(|k| d[k % da]).collect()),
        None => Ok(m),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(n: usize, sigma: &[(usize, usize)], base: AssocAlgebra) -> TriangularSpec {
        TriangularSpec { n, sigma: sigma.to_vec(), base }
    }

    #[test]
    fn strict_upper_triangular() {
        let t = Triangular::build(spec(2, &[(0, 1)], AssocAlgebra::rationals())).unwrap();
        assert_eq!(t.dim(), 1);
        assert_eq!(t.names(), &["E12".to_string()]);
        assert_eq!(t.nilpotency_index(), 2);
    }

    #[test]
    fn one_by_one_block_is_the_ideal() {
        let t = Triangular::build(spec(1, &[], AssocAlgebra::dual_numbers())).unwrap();
        assert_eq!(t.dim(), 1);
        assert_eq!(t.nilpotency_index(), 2);
    }

    #[test]
    fn empty_order_gives_matrices_over_ideal() {
        let t = Triangular::build(spec(2, &[], AssocAlgebra::dual_numbers())).unwrap();
        assert_eq!(t.dim(), 4);
        assert_eq!(t.nilpotency_index(), 2);
    }

    #[test]
    fn two_by_two_block_weights() {
        let t = Triangular::build(spec(2, &[(0, 1)], AssocAlgebra::dual_numbers())).unwrap();
        assert_eq!(t.dim(), 5);
        assert_eq!(t.nilpotency_index(), 4);
        let lie = t.lie();
        assert!(lie.is_graded());
        let w: Vec<(String, u32)> = t.names().iter().cloned().zip(lie.weights().iter().copied()).collect();
        assert!(w.contains(&("E12".into(), 1)));
        assert!(w.contains(&("epsE21".into(), 1)));
        assert!(w.contains(&("epsE11".into(), 2)));
        assert!(w.contains(&("epsE12".into(), 3)));
        assert_eq!(lie.nilpotency_class(), Some(3));
    }

    #[test]
    fn bad_orders_rejected() {
        assert!(Triangular::build(spec(2, &[(0, 0)], AssocAlgebra::rationals())).is_err());
        assert!(Triangular::build(spec(3, &[(0, 1), (1, 2)], AssocAlgebra::rationals())).is_err());
    }
}
