use std::collections::HashSet;

use crate::algebra::{DiPoly, Var};
use crate::error::{Error, Result};
use crate::ordering::{CenterOrder, WordOrder};

/// A finite, totally ordered variable set together with the active ordering.
///
/// Polynomials refer to variables by index; every operation that takes a
/// presentation checks that its inputs stay inside it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Presentation {
    names: Vec<String>,
    order: CenterOrder,
}

impl Presentation {
    /// Variables in ascending order.
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>, order: WordOrder) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::PresentationMismatch(
                "a presentation needs at least one variable".into(),
            ));
        }
        let mut seen = HashSet::new();
        for n in &names {
            if !seen.insert(n.as_str()) {
                return Err(Error::PresentationMismatch(format!(
                    "variable `{n}` declared twice"
                )));
            }
        }
        Ok(Presentation {
            names,
            order: CenterOrder::new(order),
        })
    }

    /// `x1 < x2 < ... < xn` under deg-lex.
    pub fn standard(n: usize) -> Self {
        assert!(n > 0);
        Presentation {
            names: (1..=n).map(|i| format!("x{i}")).collect(),
            order: CenterOrder::DEG_LEX,
        }
    }

    pub fn num_vars(&self) -> usize {
        self.names.len()
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        (0..self.names.len() as u32).map(Var)
    }

    pub fn name(&self, v: Var) -> &str {
        &self.names[v.index()]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn var_by_name(&self, name: &str) -> Option<Var> {
        self.names.iter().position(|n| n == name).map(|i| Var(i as u32))
    }

    pub fn order(&self) -> CenterOrder {
        self.order
    }

    pub fn check_var(&self, v: Var) -> Result<()> {
        if v.index() < self.names.len() {
            Ok(())
        } else {
            Err(Error::VariableOutOfRange {
                index: v.index(),
                len: self.names.len(),
            })
        }
    }

    pub fn check_poly(&self, f: &DiPoly) -> Result<()> {
        match f.max_var() {
            Some(v) => self.check_var(v),
            None => Ok(()),
        }
    }

    pub fn check_polys<'a>(&self, fs: impl IntoIterator<Item = &'a DiPoly>) -> Result<()> {
        fs.into_iter().try_for_each(|f| self.check_poly(f))
    }

    pub fn ensure_same(&self, other: &Presentation) -> Result<()> {
        if self.names != other.names {
            return Err(Error::PresentationMismatch(format!(
                "variables [{}] vs [{}]",
                self.names.join(" < "),
                other.names.join(" < ")
            )));
        }
        if self.order != other.order {
            return Err(Error::PresentationMismatch(format!(
                "orderings {} vs {}",
                self.order.base.name(),
                other.order.base.name()
            )));
        }
        Ok(())
    }
}
