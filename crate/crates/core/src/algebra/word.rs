use std::cmp::Ordering;
use std::fmt;

/// A generator, identified by its position in the declared variable order.
/// Index 0 is the smallest variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(pub u32);

impl Var {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A commutative word: a finite multiset of variables stored as an ascending
/// sequence. The empty word is allowed here (it is the unit of the monoid and
/// appears as a cofactor); monomials reject it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct CWord(Vec<Var>);

impl CWord {
    pub fn empty() -> Self {
        CWord(Vec::new())
    }

    pub fn new(mut letters: Vec<Var>) -> Self {
        letters.sort_unstable();
        CWord(letters)
    }

    pub fn var(v: Var) -> Self {
        CWord(vec![v])
    }

    pub fn from_indices(indices: &[u32]) -> Self {
        CWord::new(indices.iter().map(|&i| Var(i)).collect())
    }

    pub fn letters(&self) -> &[Var] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn min_var(&self) -> Option<Var> {
        self.0.first().copied()
    }

    pub fn max_var(&self) -> Option<Var> {
        self.0.last().copied()
    }

    /// Multiset union, i.e. the product in the free commutative monoid.
    pub fn mul(&self, other: &CWord) -> CWord {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            if self.0[i] <= other.0[j] {
                out.push(self.0[i]);
                i += 1;
            } else {
                out.push(other.0[j]);
                j += 1;
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        CWord(out)
    }

    /// Returns `q` with `self * q == other`, if `self` divides `other`.
    pub fn divides(&self, other: &CWord) -> Option<CWord> {
        let mut quotient = Vec::with_capacity(other.0.len().saturating_sub(self.0.len()));
        let mut i = 0;
        for &letter in &other.0 {
            if i < self.0.len() && self.0[i] == letter {
                i += 1;
            } else if i < self.0.len() && self.0[i] < letter {
                return None;
            } else {
                quotient.push(letter);
            }
        }
        (i == self.0.len()).then_some(CWord(quotient))
    }

    /// Every word of length at most `max_len` over `alphabet` (the empty
    /// word included), in ascending deg-lex order.
    pub fn all_up_to(alphabet: &[Var], max_len: usize) -> Vec<CWord> {
        let mut alphabet = alphabet.to_vec();
        alphabet.sort_unstable();
        alphabet.dedup();
        let mut out = vec![CWord::empty()];
        let mut layer = vec![CWord::empty()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &layer {
                // Extend only with letters >= the last one to keep words sorted.
                let from = w.0.last().copied();
                for &v in alphabet.iter().filter(|&&v| from.is_none_or(|f| v >= f)) {
                    let mut letters = w.0.clone();
                    letters.push(v);
                    next.push(CWord(letters));
                }
            }
            next.sort();
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }

    /// Least common multiple: the letter-wise maximum multiplicity.
    pub fn lcm(&self, other: &CWord) -> CWord {
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() || j < other.0.len() {
            match (self.0.get(i), other.0.get(j)) {
                (Some(a), Some(b)) if a == b => {
                    out.push(*a);
                    i += 1;
                    j += 1;
                }
                (Some(a), Some(b)) if a < b => {
                    out.push(*a);
                    i += 1;
                }
                (Some(_), Some(b)) => {
                    out.push(*b);
                    j += 1;
                }
                (Some(a), None) => {
                    out.push(*a);
                    i += 1;
                }
                (None, Some(b)) => {
                    out.push(*b);
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        CWord(out)
    }
}

/// Deg-lex: length first, then the sorted letter sequences lexicographically.
impl Ord for CWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for CWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for CWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "e");
        }
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "x{}", v.0 + 1)?;
        }
        Ok(())
    }
}
