//! Finite formal linear combinations with no stored zero coefficients.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinearCombination<K: Ord, T> {
    terms: BTreeMap<K, T>,
}

impl<K: Ord, T> Default for LinearCombination<K, T> {
    fn default() -> Self {
        Self { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone, T: Scalar> LinearCombination<K, T> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(key: K) -> Self {
        Self::term(key, T::one())
    }

    pub fn term(key: K, coeff: T) -> Self {
        let mut c = Self::zero();
        c.add_term(key, coeff);
        c
    }

    pub fn add_term(&mut self, key: K, coeff: T) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// `self += coeff * other`
    pub fn add_scaled(&mut self, other: &Self, coeff: &T) {
        if coeff.is_zero() {
            return;
        }
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c.clone() * coeff.clone());
        }
    }

    pub fn scaled(&self, coeff: &T) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, coeff);
        out
    }

    pub fn coeff(&self, key: &K) -> T {
        self.terms.get(key).cloned().unwrap_or_else(T::zero)
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

    pub fn iter(&self) -> impl Iterator<Item = (&K, &T)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    /// Linear extension of `f` from basis keys to combinations.
    pub fn flat_map<K2, F>(&self, mut f: F) -> LinearCombination<K2, T>
    where
        K2: Ord + Clone,
        F: FnMut(&K) -> LinearCombination<K2, T>,
    {
        let mut out = LinearCombination::zero();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k), c);
        }
        out
    }
}

impl<K: Ord + Clone, T: Scalar> FromIterator<(K, T)> for LinearCombination<K, T> {
    fn from_iter<I: IntoIterator<Item = (K, T)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

impl<K: Ord, T> IntoIterator for LinearCombination<K, T> {
    type Item = (K, T);
    type IntoIter = btree_map::IntoIter<K, T>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

impl<K: Ord + Clone, T: Scalar> AddAssign<&Self> for LinearCombination<K, T> {
    fn add_assign(&mut self, rhs: &Self) {
        self.add_scaled(rhs, &T::one());
    }
}

impl<K: Ord + Clone, T: Scalar> SubAssign<&Self> for LinearCombination<K, T> {
    fn sub_assign(&mut self, rhs: &Self) {
        self.add_scaled(rhs, &-T::one());
    }
}

impl<K: Ord + Clone, T: Scalar> Add for LinearCombination<K, T> {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        self += &rhs;
        self
    }
}

impl<K: Ord + Clone, T: Scalar> Sub for LinearCombination<K, T> {
    type Output = Self;

    fn sub(mut self, rhs: Self) -> Self {
        self -= &rhs;
        self
    }
}

impl<K: Ord + Clone, T: Scalar> Neg for LinearCombination<K, T> {
    type Output = Self;

    fn neg(self) -> Self {
        Self { terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect() }
    }
}

impl<K: Ord + Clone, T: Scalar> Mul<&T> for LinearCombination<K, T> {
    type Output = Self;

    fn mul(self, rhs: &T) -> Self {
        self.scaled(rhs)
    }
}

impl<K: Ord + fmt::Debug, T: fmt::Display> fmt::Debug for LinearCombination<K, T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c}){k:?}")?;
        }
        Ok(())
    }
}
