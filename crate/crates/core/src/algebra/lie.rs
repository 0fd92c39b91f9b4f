use crate::exactlin::{q, rank_kernel_image, solve_linear, FreeModule, LinMap, Solution, Vector, Q};

use super::AlgebraError;

/// A finite-dimensional Lie algebra over ℚ given by structure constants on
/// an ordered basis `x_0 < x_1 < …`.
///
/// Every basis element carries a positive filtration weight. When the
/// bracket is homogeneous for these weights the algebra is *graded*, and may
/// additionally carry a multidegree in ℤ^r refining the weight.
#[derive(Clone, Debug)]
pub struct LieAlgebra {
    names: Vec<String>,
    table: Vec<Vec<Vector<usize>>>,
    weights: Vec<u32>,
    multidegrees: Vec<Vec<i64>>,
    graded: bool,
    class: Option<usize>,
}

impl LieAlgebra {
    /// Brackets are given for `i < j` only; missing pairs bracket to zero.
    /// Weights come from the lower central series; the basis must be
    /// adapted to it when the algebra is nilpotent.
    pub fn new(names: Vec<String>, brackets: Vec<(usize, usize, Vector<usize>)>) -> Result<Self, AlgebraError> {
        let mut lie = Self::unweighted(names, brackets)?;
        if lie.class.is_some() {
            let lcs = lie.lower_central_series();
            lie.weights = lie.adapted_weights(&lcs)?;
        }
        lie.graded = lie.class.is_some() && lie.bracket_is_homogeneous(&lie.weights);
        if lie.graded {
            lie.multidegrees = lie.weights.iter().map(|&w| vec![w as i64]).collect();
        }
        Ok(lie)
    }

    /// Like [`LieAlgebra::new`], but with an explicit grading instead of
    /// weights read off the lower central series.
    pub fn new_graded(
        names: Vec<String>,
        brackets: Vec<(usize, usize, Vector<usize>)>,
        weights: Vec<u32>,
        multidegrees: Vec<Vec<i64>>,
    ) -> Result<Self, AlgebraError> {
        Self::unweighted(names, brackets)?.with_grading(weights, multidegrees)
    }

    fn unweighted(names: Vec<String>, brackets: Vec<(usize, usize, Vector<usize>)>) -> Result<Self, AlgebraError> {
        let dim = names.len();
        let mut table = vec![vec![Vector::zero(); dim]; dim];
        for (i, j, v) in brackets {
            if i >= j || j >= dim || v.keys().any(|&k| k >= dim) {
                return Err(AlgebraError::Invalid(format!("bracket entry ({i},{j}) out of range or not i<j")));
            }
            table[j][i] = -&v;
            table[i][j] = v;
        }
        let mut lie = Self {
            names,
            table,
            weights: vec![1; dim],
            multidegrees: vec![Vec::new(); dim],
            graded: false,
            class: None,
        };
        lie.check_jacobi()?;
        let lcs = lie.lower_central_series();
        lie.class = lcs.last().filter(|s| s.is_empty()).map(|_| lcs.len() - 1);
        Ok(lie)
    }

    /// Replaces the filtration by an explicit grading: `weights[i] ≥ 1` and
    /// a multidegree per basis element. The bracket must be homogeneous for
    /// both.
    pub fn with_grading(mut self, weights: Vec<u32>, multidegrees: Vec<Vec<i64>>) -> Result<Self, AlgebraError> {
        let dim = self.dim();
        if weights.len() != dim || multidegrees.len() != dim || weights.contains(&0) {
            return Err(AlgebraError::Invalid("grading must give a positive weight to every basis element".into()));
        }
        if !self.bracket_is_homogeneous(&weights) {
            return Err(AlgebraError::Invalid("bracket is not homogeneous for the given weights".into()));
        }
        for i in 0..dim {
            for j in 0..dim {
                for k in self.table[i][j].keys() {
                    let sum: Vec<i64> =
                        multidegrees[i].iter().zip(&multidegrees[j]).map(|(a, b)| a + b).collect();
                    if multidegrees[*k] != sum {
                        return Err(AlgebraError::Invalid(format!(
                            "bracket [{}, {}] is not homogeneous for the multidegree",
                            self.names[i], self.names[j]
                        )));
                    }
                }
            }
        }
        self.weights = weights;
        self.multidegrees = multidegrees;
        self.graded = true;
        Ok(self)
    }

    pub fn abelian(dim: usize) -> Self {
        let names = (0..dim).map(|i| format!("x{}", i + 1)).collect();
        Self::new(names, Vec::new()).expect("abelian Lie algebra")
    }

    /// `[x, y] = z`.
    pub fn heisenberg() -> Self {
        let names = vec!["x".into(), "y".into(), "z".into()];
        Self::new(names, vec![(0, 1, Vector::basis(2))]).expect("Heisenberg algebra")
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn weight(&self, i: usize) -> u32 {
        self.weights[i]
    }

    pub fn max_weight(&self) -> u32 {
        self.weights.iter().copied().max().unwrap_or(0)
    }

    pub fn multidegree(&self, i: usize) -> &[i64] {
        &self.multidegrees[i]
    }

    pub fn is_graded(&self) -> bool {
        self.graded
    }

    /// Length of the lower central series, `None` when not nilpotent.
    pub fn nilpotency_class(&self) -> Option<usize> {
        self.class
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &Vector<usize> {
        &self.table[i][j]
    }

    pub fn bracket(&self, a: &Vector<usize>, b: &Vector<usize>) -> Vector<usize> {
        let mut out = Vector::zero();
        for (i, ci) in a {
            for (j, cj) in b {
                out.axpy(&(ci * cj), &self.table[*i][*j]);
            }
        }
        out
    }

    fn check_jacobi(&self) -> Result<(), AlgebraError> {
        let d = self.dim();
        for i in 0..d {
            for j in i + 1..d {
                for k in j + 1..d {
                    let (x, y, z) = (Vector::basis(i), Vector::basis(j), Vector::basis(k));
                    let mut s = self.bracket(&x, &self.bracket(&y, &z));
                    s += &self.bracket(&y, &self.bracket(&z, &x));
                    s += &self.bracket(&z, &self.bracket(&x, &y));
                    if !s.is_zero() {
                        return Err(AlgebraError::Jacobi { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    /// `g = g^1 ⊇ g^2 ⊇ …`, each term given by a basis, until it stabilizes.
    pub fn lower_central_series(&self) -> Vec<Vec<Vector<usize>>> {
        let all: Vec<Vector<usize>> = (0..self.dim()).map(Vector::basis).collect();
        let mut series = vec![span(&all, self.dim())];
        loop {
            let last = series.last().unwrap();
            let mut gens = Vec::new();
            for x in &all {
                for y in last {
                    gens.push(self.bracket(x, y));
                }
            }
            let next = span(&gens, self.dim());
            if next.len() == last.len() {
                break;
            }
            let done = next.is_empty();
            series.push(next);
            if done {
                break;
            }
        }
        series
    }

    fn adapted_weights(&self, lcs: &[Vec<Vector<usize>>]) -> Result<Vec<u32>, AlgebraError> {
        let mut weights = vec![1u32; self.dim()];
        for (k, term) in lcs.iter().enumerate().skip(1) {
            for (i, w) in weights.iter_mut().enumerate() {
                if in_span(term, &Vector::basis(i), self.dim()) {
                    *w = k as u32 + 1;
                }
            }
        }
        for (k, term) in lcs.iter().enumerate() {
            let count = weights.iter().filter(|&&w| w as usize > k).count();
            if count != term.len() {
                return Err(AlgebraError::Invalid(
                    "basis is not adapted to the lower central series; supply a grading".into(),
                ));
            }
        }
        Ok(weights)
    }

    fn bracket_is_homogeneous(&self, weights: &[u32]) -> bool {
        let d = self.dim();
        (0..d).all(|i| (0..d).all(|j| self.table[i][j].keys().all(|&k| weights[k] == weights[i] + weights[j])))
    }

    pub fn render(&self, v: &Vector<usize>) -> String {
        v.map_keys(|&i| self.names[i].clone()).to_string()
    }
}

/// An independent basis of the span of `vecs` inside ℚ^dim.
pub(crate) fn span(vecs: &[Vector<usize>], dim: usize) -> Vec<Vector<usize>> {
    if vecs.is_empty() {
        return Vec::new();
    }
    let dom = FreeModule::new((0..vecs.len()).collect()).unwrap();
    let cod = FreeModule::new((0..dim).collect()).unwrap();
    let m = LinMap::new(dom, cod, vecs.to_vec()).expect("vectors live in ℚ^dim");
    rank_kernel_image(&m).image_basis
}

pub(crate) fn in_span(basis: &[Vector<usize>], v: &Vector<usize>, dim: usize) -> bool {
    if v.is_zero() {
        return true;
    }
    coordinates(basis, v, dim).is_some()
}

/// Coordinates of `v` in an independent family, when `v` is in its span.
pub(crate) fn coordinates(basis: &[Vector<usize>], v: &Vector<usize>, dim: usize) -> Option<Vec<Q>> {
    if basis.is_empty() {
        return if v.is_zero() { Some(Vec::new()) } else { None };
    }
    let dom = FreeModule::new((0..basis.len()).collect()).unwrap();
    let cod = FreeModule::new((0..dim).collect()).unwrap();
    let m = LinMap::new(dom, cod, basis.to_vec()).ok()?;
    match solve_linear(&m, v).ok()? {
        Solution::Solved(x) => Some((0..basis.len()).map(|i| x.get(&i)).collect()),
        Solution::Inconsistent { .. } => None,
    }
}

/// Summary of [`validate_lie`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieReport {
    pub dim: usize,
    pub nilpotency_class: Option<usize>,
}

/// Jacobi is checked on every basis triple at construction; this reports
/// the lower-central-series class.
pub fn validate_lie(lie: &LieAlgebra) -> LieReport {
    LieReport { dim: lie.dim(), nilpotency_class: lie.nilpotency_class() }
}

/// Coefficient helper used by the structure-constant constructors.
pub fn structure(terms: &[(usize, i64)]) -> Vector<usize> {
    Vector::from_terms(terms.iter().map(|&(k, c)| (k, q(c))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sl2() -> Result<LieAlgebra, AlgebraError> {
        // e, f, h with [e,f]=h, [h,e]=2e, [h,f]=-2f
        LieAlgebra::new(
            vec!["e".into(), "f".into(), "h".into()],
            vec![(0, 1, structure(&[(2, 1)])), (0, 2, structure(&[(0, -2)])), (1, 2, structure(&[(1, 2)]))],
        )
    }

    #[test]
    fn classes() {
        assert_eq!(validate_lie(&LieAlgebra::abelian(2)).nilpotency_class, Some(1));
        let h = LieAlgebra::heisenberg();
        assert_eq!(validate_lie(&h).nilpotency_class, Some(2));
        assert_eq!(h.weights(), &[1, 1, 2]);
        assert!(h.is_graded());
        let s = sl2().unwrap();
        assert_eq!(validate_lie(&s).nilpotency_class, None);
    }

    #[test]
    fn jacobi_violation_is_reported() {
        // [x,y]=x, [y,z]=y, [x,z]=z fails Jacobi
        let bad = LieAlgebra::new(
            vec!["x".into(), "y".into(), "z".into()],
            vec![(0, 1, structure(&[(0, 1)])), (1, 2, structure(&[(1, 1)])), (0, 2, structure(&[(2, 1)]))],
        );
        assert!(matches!(bad, Err(AlgebraError::Jacobi { i: 0, j: 1, k: 2 })));
    }

    #[test]
    fn unadapted_basis_is_rejected() {
        // Heisenberg in the basis x, y, w = x+z
        let bad = LieAlgebra::new(
            vec!["x".into(), "y".into(), "w".into()],
            vec![(0, 1, structure(&[(2, 1), (0, -1)])), (1, 2, structure(&[(0, 1), (2, -1)]))],
        );
        assert!(bad.is_err());
    }
}
