use num_traits::One;

use crate::exactlin::{q, Vector, Q};

use super::lie::{in_span, span};
use super::AlgebraError;

/// A finite-dimensional unital associative algebra over ℚ with a chosen
/// two-sided ideal, given by structure constants on an ordered basis.
#[derive(Clone, Debug)]
pub struct AssocAlgebra {
    names: Vec<String>,
    unit: Vector<usize>,
    table: Vec<Vec<Vector<usize>>>,
    ideal: Vec<Vector<usize>>,
    index: Option<usize>,
    degrees: Option<Vec<u32>>,
}

impl AssocAlgebra {
    /// `table[a][b]` is the product of basis elements `a` and `b`.
    pub fn new(
        names: Vec<String>,
        unit: Vector<usize>,
        table: Vec<Vec<Vector<usize>>>,
        ideal: Vec<Vector<usize>>,
    ) -> Result<Self, AlgebraError> {
        let d = names.len();
        if table.len() != d || table.iter().any(|row| row.len() != d) {
            return Err(AlgebraError::Invalid(format!("multiplication table must be {d}×{d}")));
        }
        let in_range = |v: &Vector<usize>| v.keys().all(|&k| k < d);
        if !in_range(&unit) || table.iter().flatten().any(|v| !in_range(v)) || ideal.iter().any(|v| !in_range(v)) {
            return Err(AlgebraError::Invalid("basis index out of range".into()));
        }
        let mut alg = Self { names, unit, table, ideal: Vec::new(), index: None, degrees: None };
        for a in 0..d {
            for b in 0..d {
                for c in 0..d {
                    let ab_c = alg.mul(&alg.table[a][b], &Vector::basis(c));
                    let a_bc = alg.mul(&Vector::basis(a), &alg.table[b][c]);
                    if ab_c != a_bc {
                        return Err(AlgebraError::Associativity(a, b, c));
                    }
                }
            }
            let e = Vector::basis(a);
            if alg.mul(&alg.unit, &e) != e || alg.mul(&e, &alg.unit) != e {
                return Err(AlgebraError::Invalid(format!("unit law fails on {}", alg.names[a])));
            }
        }
        let ideal = span(&ideal, d);
        for v in &ideal {
            for a in 0..d {
                let e = Vector::basis(a);
                if !in_span(&ideal, &alg.mul(&e, v), d) || !in_span(&ideal, &alg.mul(v, &e), d) {
                    return Err(AlgebraError::Invalid("ideal basis does not span a two-sided ideal".into()));
                }
            }
        }
        alg.ideal = ideal;
        alg.index = alg.nilpotency_index_of(&alg.ideal.clone());
        Ok(alg)
    }

    /// Attaches a grading by nonnegative degrees on the basis; the product
    /// must be homogeneous.
    pub fn with_degrees(mut self, degrees: Vec<u32>) -> Result<Self, AlgebraError> {
        let d = self.dim();
        if degrees.len() != d {
            return Err(AlgebraError::Invalid("one degree per basis element".into()));
        }
        for a in 0..d {
            for b in 0..d {
                if self.table[a][b].keys().any(|&c| degrees[c] != degrees[a] + degrees[b]) {
                    return Err(AlgebraError::Invalid(format!(
                        "product {}·{} is not homogeneous",
                        self.names[a], self.names[b]
                    )));
                }
            }
        }
        self.degrees = Some(degrees);
        Ok(self)
    }

    /// `ℚ[ε]/ε²` with ideal `(ε)` and `deg ε = 1`.
    pub fn dual_numbers() -> Self {
        let e = |i| Vector::basis(i);
        let table = vec![vec![e(0), e(1)], vec![e(1), Vector::zero()]];
        Self::new(vec!["1".into(), "eps".into()], e(0), table, vec![e(1)])
            .and_then(|a| a.with_degrees(vec![0, 1]))
            .expect("dual numbers")
    }

    /// `ℚ` with the zero ideal.
    pub fn rationals() -> Self {
        Self::new(vec!["1".into()], Vector::basis(0), vec![vec![Vector::basis(0)]], Vec::new())
            .and_then(|a| a.with_degrees(vec![0]))
            .expect("rationals")
    }

    /// Upper triangular `n×n` matrices with the ideal of strictly upper
    /// triangular ones. Basis `e_ij`, `i ≤ j`, graded by `j - i`.
    pub fn upper_triangular(n: usize) -> Self {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
        let idx = |i: usize, j: usize| pairs.iter().position(|&p| p == (i, j)).unwrap();
        let names = pairs.iter().map(|(i, j)| format!("e{}{}", i + 1, j + 1)).collect();
        let d = pairs.len();
        let mut table = vec![vec![Vector::zero(); d]; d];
        for (a, &(i, j)) in pairs.iter().enumerate() {
            for (b, &(j2, l)) in pairs.iter().enumerate() {
                if j == j2 {
                    table[a][b] = Vector::basis(idx(i, l));
                }
            }
        }
        let unit = (0..n).map(|i| (idx(i, i), Q::one())).collect();
        let ideal = pairs.iter().filter(|(i, j)| i < j).map(|&(i, j)| Vector::basis(idx(i, j))).collect();
        let degrees = pairs.iter().map(|(i, j)| (j - i) as u32).collect();
        Self::new(names, unit, table, ideal)
            .and_then(|a| a.with_degrees(degrees))
            .expect("upper triangular matrices")
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn unit(&self) -> &Vector<usize> {
        &self.unit
    }

    /// The basis index of the unit, when the unit is a basis element.
    pub fn unit_index(&self) -> Option<usize> {
        match self.unit.leading() {
            Some((k, c)) if self.unit.len() == 1 && c.is_one() => Some(*k),
            _ => None,
        }
    }

    pub fn ideal_basis(&self) -> &[Vector<usize>] {
        &self.ideal
    }

    pub fn degrees(&self) -> Option<&[u32]> {
        self.degrees.as_deref()
    }

    pub fn degree(&self, a: usize) -> Option<u32> {
        self.degrees.as_ref().map(|d| d[a])
    }

    /// Smallest `m` with `I^m = 0`, or `None` when `I` is not nilpotent.
    pub fn nilpotency_index(&self) -> Option<usize> {
        self.index
    }

    pub fn mul_basis(&self, a: usize, b: usize) -> &Vector<usize> {
        &self.table[a][b]
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

    pub fn in_ideal(&self, v: &Vector<usize>) -> bool {
        in_span(&self.ideal, v, self.dim())
    }

    pub(crate) fn nilpotency_index_of(&self, gens: &[Vector<usize>]) -> Option<usize> {
        let d = self.dim();
        let mut power = span(gens, d);
        let mut m = 1;
        while !power.is_empty() {
            let prods: Vec<_> = power.iter().flat_map(|p| gens.iter().map(move |g| (p, g))).map(|(p, g)| self.mul(p, g)).collect();
            let next = span(&prods, d);
            if next.len() == power.len() {
                return None;
            }
            power = next;
            m += 1;
        }
        Some(m)
    }

    fn index_or_err(&self) -> Result<usize, AlgebraError> {
        self.index.ok_or_else(|| AlgebraError::Unsupported("ideal is not nilpotent".into()))
    }

    /// `exp(a) = Σ_{k<m} a^k/k!` for `a` in the ideal.
    pub fn exp(&self, a: &Vector<usize>) -> Result<Vector<usize>, AlgebraError> {
        let m = self.index_or_err()?;
        if !self.in_ideal(a) {
            return Err(AlgebraError::Domain(a.to_string()));
        }
        let mut out = self.unit.clone();
        let mut power = self.unit.clone();
        for k in 1..m {
            power = self.mul(&power, a).scaled(&(Q::one() / q(k as i64)));
            out += &power;
        }
        Ok(out)
    }

    /// `Σ_{k<m} a^k/k!`, for any `a` with `a^m = 0`.
    pub fn exp_series(&self, a: &Vector<usize>, m: usize) -> Result<Vector<usize>, AlgebraError> {
        let mut out = self.unit.clone();
        let mut power = self.unit.clone();
        for k in 1..=m {
            power = self.mul(&power, a).scaled(&(Q::one() / q(k as i64)));
            if k == m {
                break;
            }
            out += &power;
        }
        if !power.is_zero() {
            return Err(AlgebraError::Domain(format!("{} is not nilpotent of index {m}", self.render(a))));
        }
        Ok(out)
    }

    /// `log(u) = Σ_{k<m} (-1)^{k+1} (u-1)^k / k` for `u ∈ 1 + I`.
    pub fn log(&self, u: &Vector<usize>) -> Result<Vector<usize>, AlgebraError> {
        let m = self.index_or_err()?;
        let x = u - &self.unit;
        if !self.in_ideal(&x) {
            return Err(AlgebraError::Domain(u.to_string()));
        }
        let mut out = Vector::zero();
        let mut power = self.unit.clone();
        for k in 1..m {
            power = self.mul(&power, &x);
            let c = if k % 2 == 1 { Q::one() } else { -Q::one() } / q(k as i64);
            out.axpy(&c, &power);
        }
        Ok(out)
    }

    pub fn render(&self, v: &Vector<usize>) -> String {
        v.map_keys(|&i| super::pbw::Rendered(self.names[i].clone())).to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::qr;

    #[test]
    fn dual_numbers_exp_log() {
        let a = AssocAlgebra::dual_numbers();
        assert_eq!(a.nilpotency_index(), Some(2));
        let eps = Vector::basis(1);
        let e = a.exp(&eps).unwrap();
        assert_eq!(e, Vector::from_terms([(0, q(1)), (1, q(1))]));
        assert_eq!(a.log(&e).unwrap(), eps);
        assert!(a.exp(&Vector::basis(0)).is_err());
    }

    #[test]
    fn triangular_exp() {
        let t3 = AssocAlgebra::upper_triangular(3);
        assert_eq!(t3.nilpotency_index(), Some(3));
        // basis order e11, e12, e13, e22, e23, e33
        let a = Vector::from_terms([(1, q(1)), (4, q(1))]);
        let mut expected = t3.unit().clone();
        expected.add_term(1, q(1));
        expected.add_term(4, q(1));
        expected.add_term(2, qr(1, 2));
        assert_eq!(t3.exp(&a).unwrap(), expected);
        assert_eq!(t3.log(&expected).unwrap(), a);
        let t2 = AssocAlgebra::upper_triangular(2);
        let mut e12 = t2.unit().clone();
        e12.add_term(1, q(1));
        assert_eq!(t2.exp(&Vector::basis(1)).unwrap(), e12);
    }

    #[test]
    fn non_associative_rejected() {
        // basis {1, a} with a·a = 1 + a is associative; break it with a·1 = 0
        let e = |i| Vector::basis(i);
        let table = vec![vec![e(0), e(1)], vec![Vector::zero(), e(0)]];
        assert!(AssocAlgebra::new(vec!["1".into(), "a".into()], e(0), table, vec![]).is_err());
    }
}
