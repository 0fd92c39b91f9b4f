use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::sync::Mutex;

use num_traits::{One, Zero};

use crate::algebra::MalcevGroup;
use crate::exactlin::{Key, Vector, Q};
use crate::tensor::Word;

use super::{render_with, Algebra, Augmented, Hopf, HopfError};

pub trait Group: Send + Sync {
    type Elt: Key + Hash + Send + Sync;

    fn identity(&self) -> Self::Elt;
    fn mul(&self, a: &Self::Elt, b: &Self::Elt) -> Self::Elt;
    fn inverse(&self, a: &Self::Elt) -> Self::Elt;

    fn render(&self, a: &Self::Elt) -> String {
        a.to_string()
    }
}

/// An element `exp(ξ)` of a Malcev group, recorded by the coordinates of
/// `ξ` in the Lie basis.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct MalcevElt(pub Vec<Q>);

impl MalcevElt {
    pub fn from_lie(xi: &Vector<usize>, dim: usize) -> Self {
        MalcevElt((0..dim).map(|i| xi.get(&i)).collect())
    }

    pub fn log(&self) -> Vector<usize> {
        self.0.iter().enumerate().map(|(i, c)| (i, c.clone())).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    fn render_with(&self, names: &[String]) -> String {
        if self.is_identity() {
            return "e".into();
        }
        let log = self.log();
        format!("exp({})", render_with(&log, |&i| names.get(i).cloned().unwrap_or_else(|| format!("x{}", i + 1))))
    }
}

impl fmt::Display for MalcevElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_with(&[]))
    }
}

/// Memoizes the BCH product, which is the expensive step.
pub struct MalcevLaw {
    group: MalcevGroup,
    products: Mutex<HashMap<(MalcevElt, MalcevElt), MalcevElt>>,
}

impl MalcevLaw {
    pub fn new(group: MalcevGroup) -> Self {
        Self { group, products: Mutex::new(HashMap::new()) }
    }

    pub fn group(&self) -> &MalcevGroup {
        &self.group
    }

    pub fn exp(&self, xi: &Vector<usize>) -> MalcevElt {
        MalcevElt::from_lie(xi, self.group.lie().dim())
    }
}

impl fmt::Debug for MalcevLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MalcevLaw").field("dim", &self.group.lie().dim()).finish()
    }
}

impl Group for MalcevLaw {
    type Elt = MalcevElt;

    fn identity(&self) -> MalcevElt {
        MalcevElt(vec![Q::zero(); self.group.lie().dim()])
    }

    fn mul(&self, a: &MalcevElt, b: &MalcevElt) -> MalcevElt {
        if a.is_identity() {
            return b.clone();
        }
        if b.is_identity() {
            return a.clone();
        }
        let key = (a.clone(), b.clone());
        if let Some(c) = self.products.lock().unwrap().get(&key) {
            return c.clone();
        }
        let c = self.exp(&self.group.bch(&a.log(), &b.log()));
        self.products.lock().unwrap().insert(key, c.clone());
        c
    }

    fn inverse(&self, a: &MalcevElt) -> MalcevElt {
        MalcevElt(a.0.iter().map(|c| -c).collect())
    }

    fn render(&self, a: &MalcevElt) -> String {
        a.render_with(self.group.lie().names())
    }
}

/// A finite group given by its multiplication table; elements are
/// `0..order` and `0` is the identity.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    table: Vec<Vec<usize>>,
    inverses: Vec<usize>,
}

impl FiniteGroup {
    pub fn new(table: Vec<Vec<usize>>) -> Result<Self, HopfError> {
        let n = table.len();
        if n == 0 || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(HopfError::Invalid("group table must be square with entries in range".into()));
        }
        for a in 0..n {
            if table[0][a] != a || table[a][0] != a {
                return Err(HopfError::Invalid(format!("0 is not an identity at g{a}")));
            }
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(HopfError::Invalid(format!("associativity fails on (g{a}, g{b}, g{c})")));
                    }
                }
            }
        }
        let mut inverses = Vec::with_capacity(n);
        for a in 0..n {
            match (0..n).find(|&b| table[a][b] == 0 && table[b][a] == 0) {
                Some(b) => inverses.push(b),
                None => return Err(HopfError::Invalid(format!("g{a} has no inverse"))),
            }
        }
        Ok(Self { table, inverses })
    }

    /// `ℤ/n` with generator `1`.
    pub fn cyclic(n: usize) -> Self {
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::new(table).expect("cyclic group")
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }
}

impl Group for FiniteGroup {
    type Elt = usize;

    fn identity(&self) -> usize {
        0
    }

    fn mul(&self, a: &usize, b: &usize) -> usize {
        self.table[*a][*b]
    }

    fn inverse(&self, a: &usize) -> usize {
        self.inverses[*a]
    }

    fn render(&self, a: &usize) -> String {
        if *a == 0 {
            "e".into()
        } else {
            format!("g{a}")
        }
    }
}

/// `k[G]`: group elements form a basis of grouplikes, `S g = g^{-1}`,
/// `ε g = 1`.
#[derive(Debug)]
pub struct GroupAlgebra<G: Group> {
    group: G,
}

impl<G: Group> GroupAlgebra<G> {
    pub fn new(group: G) -> Self {
        Self { group }
    }

    pub fn group(&self) -> &G {
        &self.group
    }
}

impl GroupAlgebra<MalcevLaw> {
    pub fn malcev(group: MalcevGroup) -> Self {
        Self::new(MalcevLaw::new(group))
    }

    /// The basis element `exp(ξ)`.
    pub fn exp(&self, xi: &Vector<usize>) -> MalcevElt {
        self.group.exp(xi)
    }
}

impl<G: Group> Algebra for GroupAlgebra<G> {
    type B = G::Elt;

    fn one(&self) -> Vector<G::Elt> {
        Vector::basis(self.group.identity())
    }

    fn unit_basis(&self) -> Option<G::Elt> {
        Some(self.group.identity())
    }

    fn mul_basis(&self, a: &G::Elt, b: &G::Elt) -> Vector<G::Elt> {
        Vector::basis(self.group.mul(a, b))
    }

    fn render_basis(&self, b: &G::Elt) -> String {
        self.group.render(b)
    }
}

impl<G: Group> Augmented for GroupAlgebra<G> {
    fn counit_basis(&self, _b: &G::Elt) -> Q {
        Q::one()
    }
}

impl<G: Group> Hopf for GroupAlgebra<G> {
    fn comul_basis(&self, b: &G::Elt) -> Vector<Word<G::Elt>> {
        self.delta_n(b, 2)
    }

    fn antipode_basis(&self, b: &G::Elt) -> Vector<G::Elt> {
        Vector::basis(self.group.inverse(b))
    }

    fn delta_n(&self, b: &G::Elt, n: usize) -> Vector<Word<G::Elt>> {
        Vector::basis(Word(vec![b.clone(); n]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::LieAlgebra;
    use crate::exactlin::{q, qr};
    use crate::hopf::is_grouplike;

    fn heis() -> GroupAlgebra<MalcevLaw> {
        GroupAlgebra::malcev(MalcevGroup::from_lie(LieAlgebra::heisenberg()).unwrap())
    }

    #[test]
    fn malcev_group_algebra() {
        let h = heis();
        let x = h.exp(&Vector::basis(0));
        let y = h.exp(&Vector::basis(1));
        assert!(is_grouplike(&h, &x));
        assert_eq!(h.antipode_basis(&x), Vector::basis(h.exp(&Vector::term(0, q(-1)))));
        let xy = h.mul_basis(&x, &y);
        let expected = h.exp(&Vector::from_terms([(0, q(1)), (1, q(1)), (2, qr(1, 2))]));
        assert_eq!(xy, Vector::basis(expected));
        let v = Vector::from_terms([(x.clone(), q(3)), (y, qr(-1, 2))]);
        assert_eq!(h.counit(&v), qr(5, 2));
        assert_eq!(h.render_basis(&x), "exp(x)");
    }

    #[test]
    fn finite_group_validation() {
        let c3 = FiniteGroup::cyclic(3);
        assert_eq!(c3.inverse(&1), 2);
        let broken = vec![vec![0, 1], vec![1, 1]];
        assert!(FiniteGroup::new(broken).is_err());
    }
}
