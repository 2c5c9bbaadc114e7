//! Normal S-polynomials, reducibility and remainders.
//!
//! A normal S-polynomial `⌊sb⌋_m` is one of `s`, `s ⊢ x` (when the leading
//! word of `s` is a single letter) or `s ⊣ ⌊b⌋_1` (when `s` is strong). Its
//! leading monomial is `⌊s̃b⌋_m`, which is what the reducibility tests match
//! against.
//!
//! Remainders are deterministic: the greatest reducible monomial is always
//! eliminated first, using the reducer with the smallest leading monomial
//! (ties broken by position in the set).

use std::cmp::Ordering;

use crate::algebra::{CWord, Coeff, DiMonomial, DiPoly, Marker, Op};
use crate::error::{Error, Result};
use crate::ordering::CenterOrder;

/// Identifies the normal S-polynomial `⌊sb⌋_m` with `s` the element at
/// position `source`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormalPolyHandle {
    pub source: usize,
    pub cofactor: CWord,
    pub marker: Marker,
}

/// Builds `⌊sb⌋_m`, or `None` when `(s, b, m)` is not one of the permitted
/// shapes. With `b` empty the result is `s` itself and `m` is ignored.
pub fn normal_poly(s: &DiPoly, b: &CWord, m: Marker, ord: CenterOrder) -> Option<DiPoly> {
    let lead = s.lead_mono(ord)?;
    if b.is_empty() {
        return Some(s.clone());
    }
    match m {
        Marker::Two if lead.degree() == 1 && b.degree() == 1 => {
            Some(s.mul_mono(&DiMonomial::var(b.letters()[0]), Op::Vdash))
        }
        Marker::One if s.is_strong(ord).ok()? => {
            let cof = DiMonomial::one(b.clone()).ok()?;
            Some(s.mul_mono(&cof, Op::Dashv))
        }
        _ => None,
    }
}

/// `⌊s̃b⌋_m`, the leading monomial of a normal polynomial with leading
/// monomial `s_lead`.
pub fn normal_leading(s_lead: &DiMonomial, b: &CWord, m: Marker) -> DiMonomial {
    if b.is_empty() {
        return s_lead.clone();
    }
    DiMonomial::from_parts_unchecked(s_lead.word().mul(b), m)
}

#[derive(Debug, Clone)]
struct Entry {
    poly: DiPoly,
    lead: DiMonomial,
    lc: Coeff,
    strong: bool,
}

/// A finite set of nonzero polynomials with cached leading data, used as
/// the divisor set for reductions.
#[derive(Debug, Clone)]
pub struct ReductionSet {
    ord: CenterOrder,
    entries: Vec<Entry>,
}

impl ReductionSet {
    pub fn new(ord: CenterOrder) -> Self {
        ReductionSet {
            ord,
            entries: Vec::new(),
        }
    }

    pub fn from_polys<I: IntoIterator<Item = DiPoly>>(ord: CenterOrder, polys: I) -> Result<Self> {
        let mut set = ReductionSet::new(ord);
        for p in polys {
            set.push(p)?;
        }
        Ok(set)
    }

    pub fn push(&mut self, poly: DiPoly) -> Result<usize> {
        let (lead, lc) = poly.leading(self.ord)?;
        let (lead, lc) = (lead.clone(), lc.clone());
        let strong = poly.is_strong(self.ord)?;
        self.entries.push(Entry {
            poly,
            lead,
            lc,
            strong,
        });
        Ok(self.entries.len() - 1)
    }

    pub fn order(&self) -> CenterOrder {
        self.ord
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> &DiPoly {
        &self.entries[i].poly
    }

    pub fn lead(&self, i: usize) -> &DiMonomial {
        &self.entries[i].lead
    }

    pub fn is_strong(&self, i: usize) -> bool {
        self.entries[i].strong
    }

    pub fn polys(&self) -> impl Iterator<Item = &DiPoly> {
        self.entries.iter().map(|e| &e.poly)
    }

    pub fn contains(&self, p: &DiPoly) -> bool {
        self.entries.iter().any(|e| &e.poly == p)
    }

    pub fn into_polys(self) -> Vec<DiPoly> {
        self.entries.into_iter().map(|e| e.poly).collect()
    }

    /// Every handle whose normal polynomial has leading monomial `t`.
    pub fn reducers(&self, t: &DiMonomial) -> Vec<NormalPolyHandle> {
        (0..self.entries.len())
            .filter_map(|i| self.reducer_from(i, t))
            .collect()
    }

    // At most one handle per source: the three shapes are mutually exclusive.
    fn reducer_from(&self, i: usize, t: &DiMonomial) -> Option<NormalPolyHandle> {
        let e = &self.entries[i];
        if &e.lead == t {
            return Some(NormalPolyHandle {
                source: i,
                cofactor: CWord::empty(),
                marker: t.marker(),
            });
        }
        match t.marker() {
            Marker::Two => {
                if e.lead.degree() != 1 {
                    return None;
                }
                let b = e.lead.word().divides(t.word())?;
                Some(NormalPolyHandle {
                    source: i,
                    cofactor: b,
                    marker: Marker::Two,
                })
            }
            Marker::One => {
                if !e.strong || e.lead.degree() >= t.degree() {
                    return None;
                }
                let b = e.lead.word().divides(t.word())?;
                Some(NormalPolyHandle {
                    source: i,
                    cofactor: b,
                    marker: Marker::One,
                })
            }
        }
    }

    /// The reducer used by [`ReductionSet::reduce_once`]: smallest leading
    /// monomial, then lowest position.
    pub fn canonical_reducer(&self, t: &DiMonomial) -> Option<NormalPolyHandle> {
        let mut best: Option<NormalPolyHandle> = None;
        for i in 0..self.entries.len() {
            if let Some(h) = self.reducer_from(i, t) {
                let better = match &best {
                    None => true,
                    Some(b) => {
                        self.ord.compare(&self.entries[i].lead, &self.entries[b.source].lead)
                            == Ordering::Less
                    }
                };
                if better {
                    best = Some(h);
                }
            }
        }
        best
    }

    pub fn is_reducible(&self, t: &DiMonomial) -> bool {
        (0..self.entries.len()).any(|i| self.reducer_from(i, t).is_some())
    }

    pub fn normal_poly(&self, h: &NormalPolyHandle) -> DiPoly {
        normal_poly(&self.entries[h.source].poly, &h.cofactor, h.marker, self.ord)
            .expect("handle produced by reducers describes a valid normal polynomial")
    }

    fn eliminate(&self, f: &mut DiPoly, t: &DiMonomial, h: &NormalPolyHandle) {
        let alpha = f.coeff(t).cloned().expect("target in support");
        let g = self.normal_poly(h);
        let factor = alpha / &self.entries[h.source].lc;
        f.add_scaled(&g, &-factor);
    }

    /// One-step reduction at the greatest reducible monomial of `f`.
    pub fn reduce_once(&self, f: &DiPoly) -> Option<(DiPoly, NormalPolyHandle)> {
        let (t, h) = self.greatest_reducible(f, None)?;
        let mut out = f.clone();
        self.eliminate(&mut out, &t, &h);
        Some((out, h))
    }

    fn greatest_reducible(
        &self,
        f: &DiPoly,
        below: Option<&DiMonomial>,
    ) -> Option<(DiMonomial, NormalPolyHandle)> {
        f.terms_desc(self.ord)
            .into_iter()
            .map(|(m, _)| m)
            .filter(|m| below.is_none_or(|b| self.ord.compare(m, b) == Ordering::Less))
            .find_map(|m| self.canonical_reducer(m).map(|h| (m.clone(), h)))
    }

    /// Fully reduces `f`; the result has no reducible monomial.
    pub fn remainder(&self, f: &DiPoly) -> DiPoly {
        let mut out = f.clone();
        // Monomials above the last eliminated one are untouched by later
        // steps, so the scan resumes strictly below it.
        let mut cursor: Option<DiMonomial> = None;
        while let Some((t, h)) = self.greatest_reducible(&out, cursor.as_ref()) {
            self.eliminate(&mut out, &t, &h);
            cursor = Some(t);
        }
        out
    }

    pub fn is_partially_reducible(&self, f: &DiPoly) -> Result<bool> {
        let lead = f.lead_mono(self.ord).ok_or(Error::ZeroPolynomial)?;
        Ok(self.is_reducible(lead))
    }
}

pub fn reducers(s: &[DiPoly], t: &DiMonomial, ord: CenterOrder) -> Result<Vec<NormalPolyHandle>> {
    Ok(ReductionSet::from_polys(ord, s.iter().cloned())?.reducers(t))
}

pub fn reduce_once(
    f: &DiPoly,
    s: &[DiPoly],
    ord: CenterOrder,
) -> Result<Option<(DiPoly, NormalPolyHandle)>> {
    Ok(ReductionSet::from_polys(ord, s.iter().cloned())?.reduce_once(f))
}

pub fn remainder(f: &DiPoly, s: &[DiPoly], ord: CenterOrder) -> Result<DiPoly> {
    Ok(ReductionSet::from_polys(ord, s.iter().cloned())?.remainder(f))
}

pub fn is_partially_reducible(f: &DiPoly, s: &[DiPoly], ord: CenterOrder) -> Result<bool> {
    ReductionSet::from_polys(ord, s.iter().cloned())?.is_partially_reducible(f)
}
