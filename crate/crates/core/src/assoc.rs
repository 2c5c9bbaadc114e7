//! The free associative dialgebra `Di⟨X⟩` and the lift of a commutative
//! Gröbner–Shirshov basis to it.
//!
//! An associative diword `[u]_m` is an ordered word with a distinguished
//! position `m` (1-based). Products concatenate words; `⊣` keeps the dot of
//! the left factor and `⊢` moves it to the dot of the right factor.

use std::cmp::Ordering;
use std::fmt;

use crate::algebra::{mono_mul, CWord, DiMonomial, DiPoly, Marker, Op, Poly, Var};
use crate::completion::Basis;
use crate::error::{Error, Result};
use crate::ordering::CenterOrder;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ADiMonomial {
    word: Vec<Var>,
    dot: usize,
}

impl ADiMonomial {
    pub fn new(word: Vec<Var>, dot: usize) -> Result<Self> {
        if word.is_empty() {
            return Err(Error::EmptyWord);
        }
        if dot == 0 || dot > word.len() {
            return Err(Error::DotOutOfRange {
                dot,
                len: word.len(),
            });
        }
        Ok(ADiMonomial { word, dot })
    }

    pub fn var(v: Var) -> Self {
        ADiMonomial {
            word: vec![v],
            dot: 1,
        }
    }

    /// Test shorthand: variable indices and dot; panics on invalid input.
    pub fn of(indices: &[u32], dot: usize) -> Self {
        ADiMonomial::new(indices.iter().map(|&i| Var(i)).collect(), dot)
            .expect("valid associative diword")
    }

    pub fn word(&self) -> &[Var] {
        &self.word
    }

    pub fn dot(&self) -> usize {
        self.dot
    }

    pub fn degree(&self) -> usize {
        self.word.len()
    }
}

impl Ord for ADiMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        lifted_compare(self, other)
    }
}

impl PartialOrd for ADiMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ADiMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.word.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "x{}", v.0 + 1)?;
        }
        write!(f, " : {}]", self.dot)
    }
}

pub type ADiPoly = Poly<ADiMonomial>;

pub fn assoc_mul(a: &ADiMonomial, b: &ADiMonomial, op: Op) -> ADiMonomial {
    let mut word = Vec::with_capacity(a.word.len() + b.word.len());
    word.extend_from_slice(&a.word);
    word.extend_from_slice(&b.word);
    let dot = match op {
        Op::Dashv => a.dot,
        Op::Vdash => a.word.len() + b.dot,
    };
    ADiMonomial { word, dot }
}

pub fn assoc_mul_poly(f: &ADiPoly, g: &ADiPoly, op: Op) -> ADiPoly {
    f.bilinear(g, |a, b| assoc_mul(a, b, op))
}

/// The commutative image: sort the word, keep marker 2 only for a
/// length-two word dotted at its second letter.
pub fn gamma(a: &ADiMonomial) -> DiMonomial {
    let marker = if a.word.len() == 2 && a.dot == 2 {
        Marker::Two
    } else {
        Marker::One
    };
    DiMonomial::from_parts_unchecked(CWord::new(a.word.clone()), marker)
}

pub fn gamma_poly(f: &ADiPoly) -> DiPoly {
    f.map_monomials(gamma)
}

pub fn delta_mono(m: &DiMonomial) -> ADiMonomial {
    ADiMonomial {
        word: m.word().letters().to_vec(),
        dot: m.marker().value() as usize,
    }
}

/// The linear section of [`gamma`]: sorted word, dot equal to the marker.
pub fn delta(f: &DiPoly) -> ADiPoly {
    f.map_monomials(delta_mono)
}

/// Compares commutative images first, then length, letter sequence and dot.
pub fn lifted_compare(a: &ADiMonomial, b: &ADiMonomial) -> Ordering {
    CenterOrder::DEG_LEX
        .compare(&gamma(a), &gamma(b))
        .then_with(|| a.word.len().cmp(&b.word.len()))
        .then_with(|| a.word.cmp(&b.word))
        .then_with(|| a.dot.cmp(&b.dot))
}

/// Words of length at most `max_len` over the variables lying strictly
/// between the smallest and largest letter of `v`, the empty word included.
pub fn u_words(v: &CWord, max_len: usize) -> Vec<CWord> {
    let (Some(lo), Some(hi)) = (v.min_var(), v.max_var()) else {
        return vec![CWord::empty()];
    };
    let interior: Vec<Var> = (lo.0 + 1..hi.0).map(Var).collect();
    CWord::all_up_to(&interior, max_len)
}

/// The commutativity and bar-collapse relations of length at most three
/// over `n` variables.
pub fn w_relations(n: usize) -> Vec<ADiPoly> {
    let n = n as u32;
    let mut out = Vec::new();
    let binom = |a: ADiMonomial, b: ADiMonomial| {
        let mut p = ADiPoly::monomial(a);
        p.add_term(b, -crate::algebra::q(1));
        p
    };
    for i in 0..n {
        for j in 0..i {
            for dot in [2, 1] {
                out.push(binom(ADiMonomial::of(&[i, j], dot), ADiMonomial::of(&[j, i], dot)));
            }
        }
    }
    for i in 0..n {
        for j in i..n {
            for k in j..n {
                for dot in [2, 3] {
                    out.push(binom(
                        ADiMonomial::of(&[i, j, k], dot),
                        ADiMonomial::of(&[i, j, k], 1),
                    ));
                }
            }
        }
    }
    out
}

/// The lifted generating set, truncated at word length `bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftedBasis {
    pub bound: usize,
    pub w: Vec<ADiPoly>,
    pub g: Vec<ADiPoly>,
}

impl LiftedBasis {
    pub fn all(&self) -> impl Iterator<Item = &ADiPoly> {
        self.w.iter().chain(self.g.iter())
    }

    pub fn len(&self) -> usize {
        self.w.len() + self.g.len()
    }

    pub fn is_empty(&self) -> bool {
        self.w.is_empty() && self.g.is_empty()
    }
}

/// `W ∪ G_S` with every element of word length at most `bound`.
///
/// `G_S` consists of `δ(s)` and `δ(s ⊣ ⌊c⌋_1)` for strong `s` and nonempty
/// `c` from [`u_words`] of the leading word of `s`.
pub fn lift_basis(basis: &Basis, bound: usize) -> Result<LiftedBasis> {
    if bound < 3 {
        return Err(Error::BoundTooSmall {
            bound,
            minimum: 3,
        });
    }
    let ord = basis.presentation().order();
    let mut g = Vec::new();
    for s in basis.elements() {
        let lw = s.lead_word(ord)?;
        if lw.degree() > bound {
            continue;
        }
        let strong = s.is_strong(ord)?;
        for c in u_words(lw, bound - lw.degree()) {
            if c.is_empty() {
                g.push(delta(s));
            } else if strong {
                let cm = DiMonomial::one(c)?;
                g.push(delta(&s.mul_mono(&cm, Op::Dashv)));
            }
        }
    }
    Ok(LiftedBasis {
        bound,
        w: w_relations(basis.presentation().num_vars()),
        g,
    })
}

/// True when `gamma` intertwines the products on the two given monomials.
pub fn gamma_is_multiplicative(a: &ADiMonomial, b: &ADiMonomial, op: Op) -> bool {
    gamma(&assoc_mul(a, b, op)) == mono_mul(&gamma(a), &gamma(b), op)
}
