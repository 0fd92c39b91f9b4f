use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use num_traits::{One, Zero};

use crate::exactlin::{q, Vector, Q};

use super::{AlgebraError, LieAlgebra};

/// A PBW monomial `x_0^{e_0} x_1^{e_1} …` in the ordered Lie basis.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Mono(pub Vec<u32>);

impl Mono {
    pub fn one(dim: usize) -> Self {
        Mono(vec![0; dim])
    }

    pub fn letter(dim: usize, i: usize) -> Self {
        let mut e = vec![0; dim];
        e[i] = 1;
        Mono(e)
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// The letters in nondecreasing order, with repetition.
    pub fn letters(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (i, &e) in self.0.iter().enumerate() {
            out.extend(std::iter::repeat(i).take(e as usize));
        }
        out
    }

    fn last_letter(&self) -> Option<usize> {
        self.0.iter().rposition(|&e| e > 0)
    }
}

/// Letter names used when rendering monomials; set per algebra, defaulting to
/// `x1, x2, …` when absent.
pub(crate) fn render_mono(m: &Mono, names: &[String]) -> String {
    if m.is_one() {
        return "1".into();
    }
    let mut parts = Vec::new();
    for (i, &e) in m.0.iter().enumerate() {
        let name = names.get(i).cloned().unwrap_or_else(|| format!("x{}", i + 1));
        match e {
            0 => {}
            1 => parts.push(name),
            _ => parts.push(format!("{name}^{e}")),
        }
    }
    parts.join("*")
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render_mono(self, &[]))
    }
}

/// The enveloping algebra `U g` in the PBW basis, with memoized
/// straightening.
pub struct Enveloping {
    lie: Arc<LieAlgebra>,
    memo: Mutex<HashMap<(Mono, usize), Vector<Mono>>>,
}

impl fmt::Debug for Enveloping {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Enveloping").field("dim", &self.lie.dim()).finish()
    }
}

impl Enveloping {
    pub fn new(lie: LieAlgebra) -> Self {
        Self::shared(Arc::new(lie))
    }

    pub fn shared(lie: Arc<LieAlgebra>) -> Self {
        Self { lie, memo: Mutex::new(HashMap::new()) }
    }

    pub fn lie(&self) -> &LieAlgebra {
        &self.lie
    }

    pub fn lie_arc(&self) -> Arc<LieAlgebra> {
        self.lie.clone()
    }

    pub fn dim(&self) -> usize {
        self.lie.dim()
    }

    pub fn one(&self) -> Mono {
        Mono::one(self.dim())
    }

    pub fn letter(&self, i: usize) -> Mono {
        Mono::letter(self.dim(), i)
    }

    /// Filtration weight: the sum of the weights of the letters.
    pub fn weight(&self, m: &Mono) -> u32 {
        m.0.iter().zip(self.lie.weights()).map(|(e, w)| e * w).sum()
    }

    pub fn render(&self, m: &Mono) -> String {
        render_mono(m, self.lie.names())
    }

    pub fn render_vec(&self, v: &Vector<Mono>) -> String {
        v.map_keys(|m| Rendered(self.render(m))).to_string()
    }

    /// Embeds a Lie algebra element as a combination of degree-one monomials.
    pub fn from_lie(&self, v: &Vector<usize>) -> Vector<Mono> {
        v.map_keys(|&i| self.letter(i))
    }

    /// The degree-one part, read back as a Lie algebra element.
    pub fn primitive_part(&self, u: &Vector<Mono>) -> Vector<usize> {
        u.iter()
            .filter(|(m, _)| m.degree() == 1)
            .map(|(m, c)| (m.last_letter().unwrap(), c.clone()))
            .collect()
    }

    /// `m · x_j`, rewriting `x_k x_j → x_j x_k + [x_k, x_j]` for `k > j`.
    fn mul_letter(&self, m: &Mono, j: usize) -> Vector<Mono> {
        let key = (m.clone(), j);
        if let Some(v) = self.memo.lock().unwrap().get(&key) {
            return v.clone();
        }
        let out = match m.last_letter() {
            Some(k) if k > j => {
                let mut rest = m.clone();
                rest.0[k] -= 1;
                let mut out = Vector::zero();
                for (t, c) in &self.mul_letter(&rest, j) {
                    out.axpy(c, &self.mul_letter(t, k));
                }
                for (l, c) in self.lie.bracket_basis(k, j) {
                    for (t, c2) in &self.mul_letter(&rest, *l) {
                        out.add_term(t.clone(), c * c2);
                    }
                }
                out
            }
            _ => {
                let mut next = m.clone();
                next.0[j] += 1;
                Vector::basis(next)
            }
        };
        self.memo.lock().unwrap().insert(key, out.clone());
        out
    }

    pub fn mul_mono(&self, a: &Mono, b: &Mono) -> Vector<Mono> {
        let mut acc = Vector::basis(a.clone());
        for j in b.letters() {
            let mut next = Vector::zero();
            for (t, c) in &acc {
                next.axpy(c, &self.mul_letter(t, j));
            }
            acc = next;
        }
        acc
    }

    pub fn mul(&self, u: &Vector<Mono>, v: &Vector<Mono>) -> Vector<Mono> {
        let mut out = Vector::zero();
        for (a, ca) in u {
            for (b, cb) in v {
                out.axpy(&(ca * cb), &self.mul_mono(a, b));
            }
        }
        out
    }

    /// Drops monomials of weight `≥ n`: the quotient by the `n`-th
    /// filtration step.
    pub fn truncate(&self, u: &Vector<Mono>, n: u32) -> Vector<Mono> {
        u.filtered(|m| self.weight(m) < n)
    }

    /// Product in `U g / F_n`.
    pub fn pbw_product(&self, u: &Vector<Mono>, v: &Vector<Mono>, n: u32) -> Vector<Mono> {
        let u = self.truncate(u, n);
        let v = self.truncate(v, n);
        self.truncate(&self.mul(&u, &v), n)
    }

    /// `exp(ξ)` in `U g / F_n` for `ξ ∈ g`.
    pub fn exp(&self, xi: &Vector<usize>, n: u32) -> Vector<Mono> {
        let x = self.truncate(&self.from_lie(xi), n);
        let mut out = Vector::basis(self.one());
        let mut power = Vector::basis(self.one());
        for k in 1..n {
            power = self.pbw_product(&power, &x, n).scaled(&(Q::one() / q(k as i64)));
            if power.is_zero() {
                break;
            }
            out += &power;
        }
        out
    }

    /// `log(u)` in `U g / F_n` for `u` with augmentation 1.
    pub fn log(&self, u: &Vector<Mono>, n: u32) -> Result<Vector<Mono>, AlgebraError> {
        let one = self.one();
        if u.get(&one) != Q::one() {
            return Err(AlgebraError::Domain(format!("log needs augmentation 1, got {}", self.render_vec(u))));
        }
        let mut x = self.truncate(u, n);
        x.add_term(one, -Q::one());
        let mut out = Vector::zero();
        let mut power = Vector::basis(self.one());
        for k in 1..n {
            power = self.pbw_product(&power, &x, n);
            if power.is_zero() {
                break;
            }
            let sign = if k % 2 == 1 { Q::one() } else { -Q::one() };
            out.axpy(&(sign / q(k as i64)), &power);
        }
        Ok(out)
    }

    /// Coproduct on PBW monomials:
    /// `Δ(x^e) = Σ_{a ≤ e} Π binom(e_i, a_i) x^a ⊗ x^{e-a}`.
    pub fn comul_mono(&self, m: &Mono) -> Vec<(Mono, Mono, Q)> {
        let mut out = vec![(Vec::new(), Vec::new(), Q::one())];
        for &e in &m.0 {
            let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
            for (l, r, c) in &out {
                for a in 0..=e {
                    let mut l2: Vec<u32> = l.clone();
                    let mut r2: Vec<u32> = r.clone();
                    l2.push(a);
                    r2.push(e - a);
                    let b = Q::from_integer(crate::exactlin::binomial(e as u64, a as u64));
                    next.push((l2, r2, c * b));
                }
            }
            out = next;
        }
        out.into_iter().map(|(l, r, c)| (Mono(l), Mono(r), c)).collect()
    }

    /// `S(x_{i_1} … x_{i_k}) = (-1)^k x_{i_k} … x_{i_1}`.
    pub fn antipode_mono(&self, m: &Mono) -> Vector<Mono> {
        let letters = m.letters();
        let mut acc = Vector::basis(self.one());
        for &j in letters.iter().rev() {
            let mut next = Vector::zero();
            for (t, c) in &acc {
                next.axpy(c, &self.mul_letter(t, j));
            }
            acc = next;
        }
        if letters.len() % 2 == 1 {
            acc = -&acc;
        }
        acc
    }

    pub fn counit_mono(&self, m: &Mono) -> Q {
        if m.is_one() {
            Q::one()
        } else {
            Q::zero()
        }
    }

    /// All PBW monomials of weight exactly `w`.
    pub fn monomials_of_weight(&self, w: u32) -> Vec<Mono> {
        let weights = self.lie.weights().to_vec();
        let mut out = Vec::new();
        let mut cur = vec![0u32; weights.len()];
        fn rec(i: usize, left: u32, weights: &[u32], cur: &mut Vec<u32>, out: &mut Vec<Mono>) {
            if i == weights.len() {
                if left == 0 {
                    out.push(Mono(cur.clone()));
                }
                return;
            }
            let mut e = 0;
            while e * weights[i] <= left {
                cur[i] = e;
                rec(i + 1, left - e * weights[i], weights, cur, out);
                e += 1;
            }
            cur[i] = 0;
        }
        rec(0, w, &weights, &mut cur, &mut out);
        out.sort();
        out
    }

    /// Basis of `U g / F_n`.
    pub fn basis_below(&self, n: u32) -> Vec<Mono> {
        (0..n).flat_map(|w| self.monomials_of_weight(w)).collect()
    }
}

/// A pre-rendered key, so vectors can be displayed with algebra-specific names.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub(crate) struct Rendered(pub String);

impl fmt::Display for Rendered {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::qr;

    fn heis() -> Enveloping {
        Enveloping::new(LieAlgebra::heisenberg())
    }

    fn mono(e: &[u32]) -> Mono {
        Mono(e.to_vec())
    }

    #[test]
    fn heisenberg_straightening() {
        let u = heis();
        let (x, y) = (Vector::basis(mono(&[1, 0, 0])), Vector::basis(mono(&[0, 1, 0])));
        // y·x = xy - z
        let yx = u.pbw_product(&y, &x, 3);
        let expected = Vector::from_terms([(mono(&[1, 1, 0]), q(1)), (mono(&[0, 0, 1]), q(-1))]);
        assert_eq!(yx, expected);
        // x·(yx) = x²y - xz, which sits in weight 3
        let full = u.mul(&x, &yx);
        let expected = Vector::from_terms([(mono(&[2, 1, 0]), q(1)), (mono(&[1, 0, 1]), q(-1))]);
        assert_eq!(full, expected);
        assert!(u.pbw_product(&x, &yx, 3).is_zero());
        assert_eq!(u.pbw_product(&x, &yx, 4), expected);
    }

    #[test]
    fn abelian_is_commutative() {
        let u = Enveloping::new(LieAlgebra::abelian(2));
        let (x, y) = (Vector::basis(mono(&[1, 0])), Vector::basis(mono(&[0, 1])));
        assert_eq!(u.mul(&y, &x), Vector::basis(mono(&[1, 1])));
    }

    #[test]
    fn antipode_of_xy() {
        let u = heis();
        // S(xy) = yx = xy - z
        let s = u.antipode_mono(&mono(&[1, 1, 0]));
        let expected = Vector::from_terms([(mono(&[1, 1, 0]), q(1)), (mono(&[0, 0, 1]), q(-1))]);
        assert_eq!(s, expected);
        let ss = s.map_linear(|m| u.antipode_mono(m));
        assert_eq!(ss, Vector::basis(mono(&[1, 1, 0])));
    }

    #[test]
    fn exp_log_roundtrip() {
        let u = heis();
        let xi = Vector::from_terms([(0, q(1)), (1, qr(2, 3)), (2, q(-1))]);
        let e = u.exp(&xi, 3);
        let l = u.log(&e, 3).unwrap();
        assert_eq!(l, u.from_lie(&xi));
        let e5 = u.exp(&xi, 5);
        assert_eq!(u.log(&e5, 5).unwrap(), u.from_lie(&xi));

        let line = Enveloping::new(LieAlgebra::abelian(1));
        let ex = line.exp(&Vector::basis(0), 5);
        let coeffs: Vec<Q> = (0..5).map(|k| ex.get(&mono(&[k]))).collect();
        assert_eq!(coeffs, vec![q(1), q(1), qr(1, 2), qr(1, 6), qr(1, 24)]);
    }

    #[test]
    fn weight_enumeration() {
        let u = heis();
        // weight 2: x², xy, y², z
        assert_eq!(u.monomials_of_weight(2).len(), 4);
        assert_eq!(u.basis_below(3).len(), 7);
    }
}
