//! The free commutative dialgebra: words, diwords, polynomials, the two
//! products and leading-term data.

mod monomial;
mod poly;
mod word;

pub use monomial::{mono_mul, DiMonomial, Marker, Op};
pub use poly::{q, qq, Coeff, Poly};
pub use word::{CWord, Var};

use num_traits::One;

use crate::error::{Error, Result};
use crate::ordering::CenterOrder;

pub type DiPoly = Poly<DiMonomial>;

impl Poly<DiMonomial> {
    pub fn var(v: Var) -> Self {
        Poly::monomial(DiMonomial::var(v))
    }

    /// `self op other`, the bilinear extension of [`mono_mul`].
    pub fn mul(&self, other: &DiPoly, op: Op) -> DiPoly {
        self.bilinear(other, |a, b| mono_mul(a, b, op))
    }

    pub fn mul_mono(&self, m: &DiMonomial, op: Op) -> DiPoly {
        let mut out = DiPoly::zero();
        for (a, c) in self.terms() {
            out.add_term(mono_mul(a, m, op), c.clone());
        }
        out
    }

    /// Terms in descending order.
    pub fn terms_desc(&self, ord: CenterOrder) -> Vec<(&DiMonomial, &Coeff)> {
        let mut v: Vec<_> = self.terms().collect();
        if ord.base.is_storage_order() {
            v.reverse();
        } else {
            v.sort_by(|a, b| ord.compare(b.0, a.0));
        }
        v
    }

    /// Leading monomial and its coefficient.
    pub fn leading(&self, ord: CenterOrder) -> Result<(&DiMonomial, &Coeff)> {
        let lead = if ord.base.is_storage_order() {
            self.max_term()
        } else {
            self.terms().max_by(|a, b| ord.compare(a.0, b.0))
        };
        lead.ok_or(Error::ZeroPolynomial)
    }

    pub fn lead_mono(&self, ord: CenterOrder) -> Option<&DiMonomial> {
        self.leading(ord).ok().map(|(m, _)| m)
    }

    pub fn lead_coeff(&self, ord: CenterOrder) -> Result<&Coeff> {
        self.leading(ord).map(|(_, c)| c)
    }

    /// The word of the leading monomial.
    pub fn lead_word(&self, ord: CenterOrder) -> Result<&CWord> {
        self.leading(ord).map(|(m, _)| m.word())
    }

    /// `f - lt(f)`.
    pub fn tail(&self, ord: CenterOrder) -> Result<DiPoly> {
        let (m, c) = self.leading(ord)?;
        let mut out = self.clone();
        out.add_term(m.clone(), -c.clone());
        Ok(out)
    }

    /// `f / lc(f)`.
    pub fn monic(&self, ord: CenterOrder) -> Result<DiPoly> {
        let c = self.lead_coeff(ord)?;
        if c.is_one() {
            return Ok(self.clone());
        }
        Ok(self.scale(&c.recip()))
    }

    pub fn is_monic(&self, ord: CenterOrder) -> bool {
        self.lead_coeff(ord).map(One::is_one).unwrap_or(false)
    }

    /// Strong means the leading word strictly exceeds the leading word of
    /// the tail; an empty tail counts as smaller than every word.
    pub fn is_strong(&self, ord: CenterOrder) -> Result<bool> {
        let lead = self.lead_word(ord)?;
        let tail = self.tail(ord)?;
        Ok(match tail.lead_word(ord) {
            Err(_) => true,
            Ok(t) => ord.compare_words(lead, t) == std::cmp::Ordering::Greater,
        })
    }

    /// Maximum word length over the support (0 for the zero polynomial).
    pub fn degree(&self) -> usize {
        self.support().map(DiMonomial::degree).max().unwrap_or(0)
    }

    /// Largest variable index occurring, if any.
    pub fn max_var(&self) -> Option<Var> {
        self.support().filter_map(|m| m.word().max_var()).max()
    }
}
