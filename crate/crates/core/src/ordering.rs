//! Monomial orderings on commutative words and their monomial-center
//! extensions to diwords.
//!
//! A word ordering must be a well ordering compatible with multiplication
//! (`u > v` implies `uw > vw`). The center extension compares words first and
//! breaks ties on the marker, so `⌊w⌋_2 > ⌊w⌋_1`.

use std::cmp::Ordering;

use crate::algebra::{CWord, DiMonomial};

/// Ordering on commutative words.
///
/// Only deg-lex ships. Pure lex is deliberately absent: it is not a well
/// ordering on words without unit once there are two or more variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum WordOrder {
    #[default]
    DegLex,
}

impl WordOrder {
    pub fn compare(self, u: &CWord, v: &CWord) -> Ordering {
        match self {
            WordOrder::DegLex => u
                .degree()
                .cmp(&v.degree())
                .then_with(|| u.letters().cmp(v.letters())),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            WordOrder::DegLex => "deglex",
        }
    }

    pub fn from_name(name: &str) -> Option<WordOrder> {
        match name {
            "deglex" => Some(WordOrder::DegLex),
            _ => None,
        }
    }

    /// True when this order coincides with the storage order of polynomial
    /// terms, so leading terms can be read off the end of the term map.
    pub(crate) fn is_storage_order(self) -> bool {
        match self {
            WordOrder::DegLex => true,
        }
    }
}

/// Monomial-center ordering induced by a word ordering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct CenterOrder {
    pub base: WordOrder,
}

impl CenterOrder {
    pub const DEG_LEX: CenterOrder = CenterOrder {
        base: WordOrder::DegLex,
    };

    pub fn new(base: WordOrder) -> Self {
        CenterOrder { base }
    }

    pub fn compare(self, a: &DiMonomial, b: &DiMonomial) -> Ordering {
        self.base
            .compare(a.word(), b.word())
            .then(a.marker().cmp(&b.marker()))
    }

    pub fn compare_words(self, u: &CWord, v: &CWord) -> Ordering {
        self.base.compare(u, v)
    }

    pub fn max<'a>(self, a: &'a DiMonomial, b: &'a DiMonomial) -> &'a DiMonomial {
        if self.compare(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}

/// Deg-lex comparison of commutative words.
pub fn word_compare(u: &CWord, v: &CWord) -> Ordering {
    WordOrder::DegLex.compare(u, v)
}

/// Deg-lex-center comparison of diwords.
pub fn center_compare(a: &DiMonomial, b: &DiMonomial) -> Ordering {
    CenterOrder::DEG_LEX.compare(a, b)
}
