use std::collections::btree_map;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use super::scalar::{format_q, is_negative, Q};

/// Basis identifiers: structured tags with a total order and a canonical rendering.
pub trait Key: Ord + Clone + fmt::Debug + fmt::Display {}

impl<T: Ord + Clone + fmt::Debug + fmt::Display> Key for T {}

/// A finitely supported formal linear combination of basis keys.
///
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Vector<K: Ord> {
    terms: BTreeMap<K, Q>,
}

impl<K: Ord> Default for Vector<K> {
    fn default() -> Self {
        Self { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> Vector<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(k: K) -> Self {
        Self::term(k, Q::one())
    }

    pub fn term(k: K, c: Q) -> Self {
        let mut v = Self::zero();
        v.add_term(k, c);
        v
    }

    pub fn from_terms<I: IntoIterator<Item = (K, Q)>>(it: I) -> Self {
        let mut v = Self::zero();
        for (k, c) in it {
            v.add_term(k, c);
        }
        v
    }

    pub fn add_term(&mut self, k: K, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c * other`.
    pub fn axpy(&mut self, c: &Q, other: &Self) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.terms {
            self.add_term(k.clone(), c * v);
        }
    }

    pub fn get(&self, k: &K) -> Q {
        self.terms.get(k).cloned().unwrap_or_else(Q::zero)
    }

    pub fn coeff(&self, k: &K) -> Option<&Q> {
        self.terms.get(k)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, Q> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, Q> {
        self.terms.keys()
    }

    pub fn leading(&self) -> Option<(&K, &Q)> {
        self.terms.iter().next()
    }

    pub fn scaled(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    pub fn retain<F: FnMut(&K, &Q) -> bool>(&mut self, mut f: F) {
        self.terms.retain(|k, v| f(k, v));
    }

    pub fn filtered<F: FnMut(&K) -> bool>(&self, mut f: F) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| f(k))
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }

    /// Linear extension of a map defined on basis keys.
    pub fn map_linear<K2: Ord + Clone, F: FnMut(&K) -> Vector<K2>>(&self, mut f: F) -> Vector<K2> {
        let mut out = Vector::zero();
        for (k, c) in &self.terms {
            out.axpy(c, &f(k));
        }
        out
    }

    /// Relabels keys through an injective-or-not map, summing collisions.
    pub fn map_keys<K2: Ord + Clone, F: FnMut(&K) -> K2>(&self, mut f: F) -> Vector<K2> {
        Vector::from_terms(self.terms.iter().map(|(k, c)| (f(k), c.clone())))
    }

    pub fn into_terms(self) -> BTreeMap<K, Q> {
        self.terms
    }

    pub fn dot(&self, other: &Self) -> Q {
        let mut acc = Q::zero();
        for (k, v) in &self.terms {
            if let Some(w) = other.terms.get(k) {
                acc += v * w;
            }
        }
        acc
    }
}

impl<K: Ord + Clone> FromIterator<(K, Q)> for Vector<K> {
    fn from_iter<I: IntoIterator<Item = (K, Q)>>(iter: I) -> Self {
        Self::from_terms(iter)
    }
}

impl<'a, K: Ord> IntoIterator for &'a Vector<K> {
    type Item = (&'a K, &'a Q);
    type IntoIter = btree_map::Iter<'a, K, Q>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<K: Ord + Clone> AddAssign<&Vector<K>> for Vector<K> {
    fn add_assign(&mut self, rhs: &Vector<K>) {
        self.axpy(&Q::one(), rhs);
    }
}

impl<K: Ord + Clone> SubAssign<&Vector<K>> for Vector<K> {
    fn sub_assign(&mut self, rhs: &Vector<K>) {
        self.axpy(&-Q::one(), rhs);
    }
}

impl<K: Ord + Clone> Add<&Vector<K>> for &Vector<K> {
    type Output = Vector<K>;
    fn add(self, rhs: &Vector<K>) -> Vector<K> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<K: Ord + Clone> Sub<&Vector<K>> for &Vector<K> {
    type Output = Vector<K>;
    fn sub(self, rhs: &Vector<K>) -> Vector<K> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<K: Ord + Clone> Neg for &Vector<K> {
    type Output = Vector<K>;
    fn neg(self) -> Vector<K> {
        self.scaled(&-Q::one())
    }
}

impl<K: Ord + fmt::Display> fmt::Display for Vector<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            let neg = is_negative(c);
            let abs = if neg { -c.clone() } else { c.clone() };
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if abs.is_one() {
                write!(f, "{k}")?;
            } else {
                write!(f, "{}*{k}", format_q(&abs))?;
            }
        }
        Ok(())
    }
}

impl<K: Ord + fmt::Display> fmt::Debug for Vector<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
