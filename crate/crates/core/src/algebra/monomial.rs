use std::cmp::Ordering;
use std::fmt;

use super::word::{CWord, Var};
use crate::error::{Error, Result};

/// The two dialgebra products.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Op {
    /// `⊣`, the left product.
    Dashv,
    /// `⊢`, the right product.
    Vdash,
}

impl Op {
    pub const BOTH: [Op; 2] = [Op::Dashv, Op::Vdash];
}

/// Center marker of a commutative diword.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Marker {
    One = 1,
    Two = 2,
}

impl Marker {
    pub fn value(self) -> u8 {
        self as u8
    }

    pub fn from_value(m: u8) -> Option<Marker> {
        match m {
            1 => Some(Marker::One),
            2 => Some(Marker::Two),
            _ => None,
        }
    }
}

/// A basis element `⌊u⌋_m` of the free commutative dialgebra.
///
/// The word is nonempty and marker 2 only occurs on words of length 2.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DiMonomial {
    word: CWord,
    marker: Marker,
}

impl DiMonomial {
    pub fn new(word: CWord, marker: Marker) -> Result<Self> {
        if word.is_empty() {
            return Err(Error::EmptyWord);
        }
        if marker == Marker::Two && word.degree() != 2 {
            return Err(Error::Marker {
                len: word.degree(),
            });
        }
        Ok(DiMonomial { word, marker })
    }

    /// `⌊u⌋_1`; always valid for a nonempty word.
    pub fn one(word: CWord) -> Result<Self> {
        DiMonomial::new(word, Marker::One)
    }

    pub fn var(v: Var) -> Self {
        DiMonomial {
            word: CWord::var(v),
            marker: Marker::One,
        }
    }

    /// Shorthand for tests and fixtures; panics on an invalid shape.
    pub fn of(indices: &[u32], marker: u8) -> Self {
        let marker = Marker::from_value(marker).expect("marker must be 1 or 2");
        DiMonomial::new(CWord::from_indices(indices), marker).expect("invalid monomial")
    }

    pub fn word(&self) -> &CWord {
        &self.word
    }

    pub fn marker(&self) -> Marker {
        self.marker
    }

    pub fn degree(&self) -> usize {
        self.word.degree()
    }

    /// Same word with marker 1 (the monomial obtained by forgetting the center).
    pub fn with_marker_one(&self) -> DiMonomial {
        DiMonomial {
            word: self.word.clone(),
            marker: Marker::One,
        }
    }

    pub(crate) fn from_parts_unchecked(word: CWord, marker: Marker) -> Self {
        debug_assert!(!word.is_empty());
        debug_assert!(marker == Marker::One || word.degree() == 2);
        DiMonomial { word, marker }
    }
}

/// Product of two diwords in the free commutative disemigroup.
///
/// Two letters multiply to `⌊xx'⌋_2` under `⊢` and `⌊xx'⌋_1` under `⊣`;
/// every product of total length above 2 is `⌊uv⌋_1`.
pub fn mono_mul(a: &DiMonomial, b: &DiMonomial, op: Op) -> DiMonomial {
    let word = a.word.mul(&b.word);
    let marker = if a.degree() == 1 && b.degree() == 1 && op == Op::Vdash {
        Marker::Two
    } else {
        Marker::One
    };
    DiMonomial { word, marker }
}

/// Deg-lex-center order, the structural order used for storage.
impl Ord for DiMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.word
            .cmp(&other.word)
            .then(self.marker.cmp(&other.marker))
    }
}

impl PartialOrd for DiMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for DiMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{} : {}>", self.word, self.marker.value())
    }
}
