//! Brute-force ideal spans by exact linear algebra.
//!
//! This module deliberately shares no arithmetic with the rest of the crate:
//! it has its own monomial type, its own product rules and its own
//! enumeration of the monomial basis. Only the conversions at the bottom
//! look at the main types.
//!
//! The span of `Id(F)` restricted to degree at most `d` is computed as the
//! smallest subspace containing `F` that is closed under multiplying its
//! elements of degree at most `d - 1` by single variables, on either side
//! and with either product. Rows are kept in echelon form with the pivot at
//! the highest column, columns being sorted degree-major, so the rows whose
//! pivot has degree at most `k` span the degree-`k` truncation.

use std::collections::{BTreeMap, HashMap};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::DiPoly;
use crate::assoc::ADiPoly;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Commutative,
    Associative,
}

/// A monomial on either side: a letter sequence and a mark. On the
/// commutative side letters are sorted and the mark is 1 or 2 (2 only for
/// two letters); on the associative side the mark is the dot position.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OMono {
    pub letters: Vec<u32>,
    pub mark: u8,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Product {
    Left,
    Right,
}

impl Side {
    // `Left` is the product whose value sits at the left factor (⊣),
    // `Right` the one at the right factor (⊢).
    fn mul(self, a: &OMono, b: &OMono, p: Product) -> OMono {
        let mut letters = a.letters.clone();
        letters.extend_from_slice(&b.letters);
        match self {
            Side::Associative => {
                let mark = match p {
                    Product::Left => a.mark,
                    Product::Right => a.letters.len() as u8 + b.mark,
                };
                OMono { letters, mark }
            }
            Side::Commutative => {
                letters.sort_unstable();
                let mark = if letters.len() == 2 && p == Product::Right {
                    2
                } else {
                    1
                };
                OMono { letters, mark }
            }
        }
    }

    /// Every monomial of degree at most `d` over `n` letters, degree-major.
    pub fn monomials(self, n: u32, d: usize) -> Vec<OMono> {
        let mut out = Vec::new();
        let mut words: Vec<Vec<u32>> = vec![vec![]];
        for len in 1..=d {
            let mut next = Vec::new();
            for w in &words {
                for v in 0..n {
                    if self == Side::Commutative && w.last().is_some_and(|&l| v < l) {
                        continue;
                    }
                    let mut x = w.clone();
                    x.push(v);
                    next.push(x);
                }
            }
            next.sort();
            for w in &next {
                match self {
                    Side::Commutative => {
                        out.push(OMono {
                            letters: w.clone(),
                            mark: 1,
                        });
                        if len == 2 {
                            out.push(OMono {
                                letters: w.clone(),
                                mark: 2,
                            });
                        }
                    }
                    Side::Associative => {
                        for mark in 1..=len as u8 {
                            out.push(OMono {
                                letters: w.clone(),
                                mark,
                            });
                        }
                    }
                }
            }
            words = next;
        }
        out
    }
}

/// A polynomial for the oracle: monomial to nonzero coefficient.
pub type OPoly = BTreeMap<OMono, BigRational>;

type Row = BTreeMap<usize, BigRational>;

/// Echelon basis of the degree-bounded part of an ideal.
#[derive(Debug, Clone)]
pub struct SpanBasis {
    side: Side,
    bound: usize,
    columns: Vec<OMono>,
    index: HashMap<OMono, usize>,
    pivots: BTreeMap<usize, Row>,
}

impl SpanBasis {
    fn empty(side: Side, n: u32, bound: usize) -> Self {
        let columns = side.monomials(n, bound);
        let index = columns
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        SpanBasis {
            side,
            bound,
            columns,
            index,
            pivots: BTreeMap::new(),
        }
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn monomial_count(&self) -> usize {
        self.columns.len()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn quotient_dim(&self) -> usize {
        self.columns.len() - self.pivots.len()
    }

    /// Quotient dimension of the degree-`k` truncation of the span, for
    /// `k` not above the bound. Pivots sit at the highest-degree column of
    /// their row, so rows with pivot degree at most `k` span that part.
    pub fn quotient_dim_up_to(&self, k: usize) -> usize {
        let cols = self.columns.iter().filter(|m| m.letters.len() <= k).count();
        let rank = self
            .pivots
            .keys()
            .filter(|&&c| self.columns[c].letters.len() <= k)
            .count();
        cols - rank
    }

    fn to_row(&self, f: &OPoly) -> Result<Row> {
        let mut row = Row::new();
        for (m, c) in f {
            if c.is_zero() {
                continue;
            }
            let Some(&i) = self.index.get(m) else {
                return Err(Error::DegreeOverflow {
                    degree: m.letters.len(),
                    bound: self.bound,
                });
            };
            *row.entry(i).or_insert_with(BigRational::zero) += c;
        }
        row.retain(|_, c| !c.is_zero());
        Ok(row)
    }

    // Eliminates pivots from the top down until the leading column is free.
    fn reduce(&self, mut row: Row) -> Row {
        while let Some((&col, c)) = row.iter().next_back() {
            let Some(p) = self.pivots.get(&col) else {
                break;
            };
            let c = c.clone();
            for (&j, a) in p {
                let e = row.entry(j).or_insert_with(BigRational::zero);
                *e -= &c * a;
                if e.is_zero() {
                    row.remove(&j);
                }
            }
        }
        row
    }

    // Adds a row; returns its column of highest degree if it was new.
    fn insert(&mut self, row: Row) -> Option<usize> {
        let mut row = self.reduce(row);
        let (&col, lead) = row.iter().next_back()?;
        let inv = lead.recip();
        for v in row.values_mut() {
            *v *= &inv;
        }
        self.pivots.insert(col, row);
        Some(col)
    }

    pub fn contains(&self, f: &OPoly) -> Result<bool> {
        Ok(self.reduce(self.to_row(f)?).is_empty())
    }

    /// True when the given monomials stay linearly independent modulo the
    /// span.
    pub fn independent_modulo(&self, monos: &[OMono]) -> Result<bool> {
        let mut scratch = self.clone();
        for m in monos {
            let row = scratch.to_row(&OPoly::from([(m.clone(), BigRational::one())]))?;
            if scratch.insert(row).is_none() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Brings the stored rows to reduced row-echelon form.
    pub fn into_rref(mut self) -> Self {
        let cols: Vec<usize> = self.pivots.keys().copied().collect();
        for &col in &cols {
            let row = self.pivots.remove(&col).expect("pivot");
            let mut lower = row.clone();
            lower.remove(&col);
            let reduced = self.reduce_all(lower);
            let mut full = reduced;
            full.insert(col, BigRational::one());
            self.pivots.insert(col, full);
        }
        self
    }

    // Eliminates every pivot column, not only the leading one.
    fn reduce_all(&self, mut row: Row) -> Row {
        let cols: Vec<usize> = row.keys().rev().copied().collect();
        for col in cols {
            let Some(c) = row.get(&col).cloned() else {
                continue;
            };
            if let Some(p) = self.pivots.get(&col) {
                for (&j, a) in p {
                    let e = row.entry(j).or_insert_with(BigRational::zero);
                    *e -= &c * a;
                    if e.is_zero() {
                        row.remove(&j);
                    }
                }
            }
        }
        row
    }

    /// Pivot rows in increasing pivot order.
    pub fn rows(&self) -> impl Iterator<Item = (&OMono, Vec<(&OMono, &BigRational)>)> {
        self.pivots.iter().map(|(&c, row)| {
            (
                &self.columns[c],
                row.iter().map(|(&j, a)| (&self.columns[j], a)).collect(),
            )
        })
    }
}

/// Span of `Id(gens)` in degrees at most `bound` over `n` letters.
pub fn ideal_span(gens: &[OPoly], n: u32, bound: usize, side: Side) -> Result<SpanBasis> {
    let mut span = SpanBasis::empty(side, n, bound);
    let letters: Vec<OMono> = (0..n)
        .map(|v| OMono {
            letters: vec![v],
            mark: 1,
        })
        .collect();
    let mut work: Vec<usize> = Vec::new();
    for g in gens {
        let row = span.to_row(g)?;
        if let Some(c) = span.insert(row) {
            work.push(c);
        }
    }
    while let Some(col) = work.pop() {
        // Pivot rows are never rewritten after insertion, so the row stored
        // at `col` is the one that was added.
        let row = span.pivots[&col].clone();
        if span.columns[col].letters.len() >= bound {
            continue;
        }
        for x in &letters {
            for p in [Product::Left, Product::Right] {
                for on_left in [false, true] {
                    let mut prod = Row::new();
                    for (&j, a) in &row {
                        let m = &span.columns[j];
                        let m2 = if on_left {
                            side.mul(x, m, p)
                        } else {
                            side.mul(m, x, p)
                        };
                        let k = span.index[&m2];
                        let e = prod.entry(k).or_insert_with(BigRational::zero);
                        *e += a;
                        if e.is_zero() {
                            prod.remove(&k);
                        }
                    }
                    if let Some(c) = span.insert(prod) {
                        work.push(c);
                    }
                }
            }
        }
    }
    Ok(span)
}

/// `f ∈ Id(gens)` in degrees at most `bound`.
pub fn oracle_member(f: &OPoly, gens: &[OPoly], n: u32, bound: usize, side: Side) -> Result<bool> {
    let span = ideal_span(gens, n, bound, side)?;
    span.contains(f)
}

/// Quotient dimension in degrees at most `d`, read off spans computed at
/// bounds `d, d + 1, ...` until two consecutive bounds give the same value
/// or `d + max_extra` is reached. Returns the last value and its bound.
///
/// A span at bound `D` misses ideal elements of degree at most `d` that are
/// only reachable through products of degree above `D`, so every value is an
/// upper bound for the exact dimension and they decrease towards it.
pub fn settled_quotient_dim(
    gens: &[OPoly],
    n: u32,
    d: usize,
    side: Side,
    max_extra: usize,
) -> Result<(usize, usize)> {
    let mut last = ideal_span(gens, n, d, side)?.quotient_dim_up_to(d);
    for bound in d + 1..=d + max_extra {
        let next = ideal_span(gens, n, bound, side)?.quotient_dim_up_to(d);
        if next == last {
            return Ok((next, bound));
        }
        last = next;
    }
    Ok((last, d + max_extra))
}

/// Total count of monomials of degree at most `d` over `n` letters.
pub fn monomial_count(side: Side, n: u32, d: usize) -> usize {
    side.monomials(n, d).len()
}

pub fn from_dipoly(f: &DiPoly) -> OPoly {
    f.terms()
        .map(|(m, c)| {
            (
                OMono {
                    letters: m.word().letters().iter().map(|v| v.0).collect(),
                    mark: m.marker().value(),
                },
                c.clone(),
            )
        })
        .collect()
}

pub fn from_adipoly(f: &ADiPoly) -> OPoly {
    f.terms()
        .map(|(m, c)| {
            (
                OMono {
                    letters: m.word().iter().map(|v| v.0).collect(),
                    mark: m.dot() as u8,
                },
                c.clone(),
            )
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(letters: &[u32], mark: u8) -> OMono {
        OMono {
            letters: letters.to_vec(),
            mark,
        }
    }

    fn poly(terms: &[(i64, &[u32], u8)]) -> OPoly {
        let mut p = OPoly::new();
        for &(c, l, m) in terms {
            *p.entry(mono(l, m)).or_insert_with(BigRational::zero) += BigRational::from_integer(c.into());
        }
        p.retain(|_, c| !c.is_zero());
        p
    }

    fn gen_a() -> OPoly {
        poly(&[(1, &[0, 0], 2), (-1, &[1], 1)])
    }

    #[test]
    fn monomial_counts() {
        assert_eq!(monomial_count(Side::Commutative, 2, 3), 12);
        assert_eq!(monomial_count(Side::Associative, 2, 3), 34);
        assert_eq!(monomial_count(Side::Commutative, 3, 1), 3);
    }

    #[test]
    fn empty_generators() {
        let s = ideal_span(&[], 2, 3, Side::Commutative).unwrap();
        assert_eq!(s.quotient_dim(), 12);
    }

    #[test]
    fn example_a_dimension() {
        let s = ideal_span(&[gen_a()], 2, 3, Side::Commutative).unwrap();
        assert_eq!(s.quotient_dim(), 7);
    }

    #[test]
    fn membership_examples() {
        let f = poly(&[(1, &[1, 1], 2), (-1, &[0, 0, 0, 0], 1)]);
        assert!(oracle_member(&f, &[gen_a()], 2, 4, Side::Commutative).unwrap());
        assert!(oracle_member(&gen_a(), &[gen_a()], 2, 4, Side::Commutative).unwrap());
        let x1 = poly(&[(1, &[0], 1)]);
        assert!(!oracle_member(&x1, &[gen_a()], 2, 4, Side::Commutative).unwrap());
    }

    #[test]
    fn overflow_is_reported() {
        let big = poly(&[(1, &[0, 0, 0, 0], 1)]);
        assert_eq!(
            ideal_span(&[big], 1, 3, Side::Commutative).unwrap_err(),
            Error::DegreeOverflow { degree: 4, bound: 3 }
        );
    }

    #[test]
    fn associative_products() {
        let x = mono(&[0], 1);
        let y = mono(&[1], 1);
        let xy = Side::Associative.mul(&x, &y, Product::Right);
        assert_eq!(xy, mono(&[0, 1], 2));
        assert_eq!(Side::Associative.mul(&xy, &x, Product::Left), mono(&[0, 1, 0], 2));
        assert_eq!(Side::Associative.mul(&x, &xy, Product::Right), mono(&[0, 0, 1], 3));
    }

    #[test]
    fn higher_bounds_find_degree_falling_elements() {
        // <x1 x2:2> - <x1 x2:1> lies in the ideal but is only reached through
        // degree three: (f ⊢ x1) - (f ⊣ x1) for the generator f.
        let collapse = poly(&[(1, &[0, 1], 2), (-1, &[0, 1], 1)]);
        let at_two = ideal_span(&[gen_a()], 2, 2, Side::Commutative).unwrap();
        assert_eq!(at_two.quotient_dim(), 7);
        assert!(!at_two.contains(&collapse).unwrap());
        let at_three = ideal_span(&[gen_a()], 2, 3, Side::Commutative).unwrap();
        assert!(at_three.contains(&collapse).unwrap());
        assert_eq!(
            settled_quotient_dim(&[gen_a()], 2, 2, Side::Commutative, 3).unwrap(),
            (5, 4)
        );
    }

    #[test]
    fn rref_keeps_span() {
        let s = ideal_span(&[gen_a()], 2, 3, Side::Commutative).unwrap();
        let rank = s.rank();
        let r = s.into_rref();
        assert_eq!(r.rank(), rank);
        for (pivot, row) in r.rows() {
            for (m, _) in row.iter().filter(|(m, _)| *m != pivot) {
                assert!(r.rows().all(|(p, _)| p != *m));
            }
        }
    }
}
