use std::collections::btree_map::{self, Entry};
use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact coefficient field.
pub type Coeff = BigRational;

/// A finite linear combination of monomials with nonzero rational
/// coefficients. Shared by the commutative and the associative side.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Poly<M: Ord> {
    terms: BTreeMap<M, Coeff>,
}

impl<M: Ord> Default for Poly<M> {
    fn default() -> Self {
        Poly {
            terms: BTreeMap::new(),
        }
    }
}

impl<M: Ord + Clone> Poly<M> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(m: M) -> Self {
        Self::term(m, Coeff::one())
    }

    pub fn term(m: M, c: Coeff) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (M, Coeff)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
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

    /// Terms in ascending structural order.
    pub fn terms(&self) -> btree_map::Iter<'_, M, Coeff> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &M> {
        self.terms.keys()
    }

    pub fn coeff(&self, m: &M) -> Option<&Coeff> {
        self.terms.get(m)
    }

    pub fn add_term(&mut self, m: M, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &Poly<M>, c: &Coeff) {
        if c.is_zero() {
            return;
        }
        for (m, a) in &other.terms {
            self.add_term(m.clone(), a * c);
        }
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// Linear extension of a monomial map.
    pub fn map_monomials<N: Ord + Clone>(&self, mut f: impl FnMut(&M) -> N) -> Poly<N> {
        Poly::from_terms(self.terms.iter().map(|(m, c)| (f(m), c.clone())))
    }

    /// Bilinear extension of a monomial product.
    pub fn bilinear(&self, other: &Poly<M>, mut f: impl FnMut(&M, &M) -> M) -> Self {
        let mut out = Self::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(f(a, b), ca * cb);
            }
        }
        out
    }

    /// Greatest monomial in the structural order with its coefficient.
    pub fn max_term(&self) -> Option<(&M, &Coeff)> {
        self.terms.last_key_value()
    }
}

impl<M: Ord + Clone> Add for &Poly<M> {
    type Output = Poly<M>;
    fn add(self, rhs: &Poly<M>) -> Poly<M> {
        let mut out = self.clone();
        out.add_scaled(rhs, &Coeff::one());
        out
    }
}

impl<M: Ord + Clone> Sub for &Poly<M> {
    type Output = Poly<M>;
    fn sub(self, rhs: &Poly<M>) -> Poly<M> {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Coeff::one());
        out
    }
}

impl<M: Ord + Clone> Neg for &Poly<M> {
    type Output = Poly<M>;
    fn neg(self) -> Poly<M> {
        self.scale(&-Coeff::one())
    }
}

/// Integer shorthand for exact coefficients.
pub fn q(n: i64) -> Coeff {
    Coeff::from_integer(n.into())
}

/// `n / d` in lowest terms; panics on `d == 0`.
pub fn qq(n: i64, d: i64) -> Coeff {
    Coeff::new(n.into(), d.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_removes_terms() {
        let mut p: Poly<u32> = Poly::from_terms([(1, q(2)), (2, q(3))]);
        p.add_term(1, q(-2));
        assert_eq!(p.len(), 1);
        assert_eq!(p.coeff(&1), None);
        let z = &p - &p;
        assert!(z.is_zero());
    }

    #[test]
    fn zero_coefficients_never_stored() {
        let p: Poly<u32> = Poly::from_terms([(1, q(0)), (2, qq(0, 5))]);
        assert!(p.is_zero());
        assert!(p.scale(&q(0)).is_zero());
    }

    #[test]
    fn rationals_stay_in_lowest_terms() {
        let p: Poly<u32> = Poly::from_terms([(1, qq(2, 4))]);
        assert_eq!(p.coeff(&1), Some(&qq(1, 2)));
        assert_eq!(*p.coeff(&1).unwrap().denom(), 2.into());
    }
}
