//! Membership, ideal equality, irreducible monomials and disemigroup
//! normal forms.

use std::sync::OnceLock;

use num_traits::One;

use crate::algebra::{CWord, Coeff, DiMonomial, DiPoly, Marker, Var};
use crate::completion::{complete, complete_observed, reduce_basis, Basis};
use crate::error::{Error, Result};
use crate::presentation::Presentation;

/// `f ∈ Id(F)`, decided by completing `F` and reducing `f`.
pub fn is_member(presentation: &Presentation, f: &DiPoly, generators: &[DiPoly]) -> Result<bool> {
    presentation.check_poly(f)?;
    let basis = complete(presentation, generators)?;
    Ok(basis.reduction_set().remainder(f).is_zero())
}

/// The unique reduced Gröbner–Shirshov basis of `Id(F)`.
pub fn reduced_basis(presentation: &Presentation, generators: &[DiPoly]) -> Result<Basis> {
    Ok(reduce_basis(&complete(presentation, generators)?))
}

/// `Id(F) = Id(G)`, by comparing reduced bases.
pub fn ideal_equal(
    pf: &Presentation,
    f: &[DiPoly],
    pg: &Presentation,
    g: &[DiPoly],
) -> Result<bool> {
    pf.ensure_same(pg)?;
    let rf = reduced_basis(pf, f)?;
    let rg = reduced_basis(pg, g)?;
    Ok(rf.elements() == rg.elements())
}

/// All monomials of degree at most `d` over the first `n` variables, in
/// ascending order.
pub fn monomials_up_to(n: usize, d: usize) -> Vec<DiMonomial> {
    let vars: Vec<Var> = (0..n as u32).map(Var).collect();
    let mut out = Vec::new();
    for w in CWord::all_up_to(&vars, d).into_iter().filter(|w| !w.is_empty()) {
        let two = w.degree() == 2;
        out.push(DiMonomial::from_parts_unchecked(w.clone(), Marker::One));
        if two {
            out.push(DiMonomial::from_parts_unchecked(w, Marker::Two));
        }
    }
    out
}

/// Irreducible monomials of degree at most `d` with respect to `basis`.
pub fn irr_up_to(basis: &Basis, d: usize) -> Result<Vec<DiMonomial>> {
    if d == 0 {
        return Err(Error::BoundTooSmall { bound: 0, minimum: 1 });
    }
    let set = basis.reduction_set();
    Ok(monomials_up_to(basis.presentation().num_vars(), d)
        .into_iter()
        .filter(|t| !set.is_reducible(t))
        .collect())
}

/// A finitely presented commutative disemigroup: generators with monomial
/// relations `u = v`, stored oriented so that `u > v`.
#[derive(Debug)]
pub struct DisemigroupPresentation {
    presentation: Presentation,
    relations: Vec<(DiMonomial, DiMonomial)>,
    completed: OnceLock<Result<Basis>>,
}

impl DisemigroupPresentation {
    /// Orients each pair by the active ordering and drops trivial ones.
    pub fn new(presentation: Presentation, pairs: &[(DiMonomial, DiMonomial)]) -> Result<Self> {
        let ord = presentation.order();
        let mut relations = Vec::new();
        for (u, v) in pairs {
            for w in [u, v] {
                if let Some(x) = w.word().max_var() {
                    presentation.check_var(x)?;
                }
            }
            let pair = match ord.compare(u, v) {
                std::cmp::Ordering::Equal => continue,
                std::cmp::Ordering::Greater => (u.clone(), v.clone()),
                std::cmp::Ordering::Less => (v.clone(), u.clone()),
            };
            if !relations.contains(&pair) {
                relations.push(pair);
            }
        }
        Ok(DisemigroupPresentation {
            presentation,
            relations,
            completed: OnceLock::new(),
        })
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn relations(&self) -> &[(DiMonomial, DiMonomial)] {
        &self.relations
    }

    /// The binomials `u - v`.
    pub fn binomials(&self) -> Vec<DiPoly> {
        self.relations
            .iter()
            .map(|(u, v)| {
                let mut p = DiPoly::monomial(u.clone());
                p.add_term(v.clone(), -Coeff::one());
                p
            })
            .collect()
    }

    /// The completed basis, computed once per presentation.
    pub fn basis(&self) -> Result<&Basis> {
        self.completed
            .get_or_init(|| {
                let ord = self.presentation.order();
                complete_observed(&self.presentation, &self.binomials(), |h| {
                    check_binomial(h, ord)
                })
                .map(|(b, _)| b)
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    /// The irreducible representative of the class of `t`.
    pub fn nf(&self, t: &DiMonomial) -> Result<DiMonomial> {
        if let Some(x) = t.word().max_var() {
            self.presentation.check_var(x)?;
        }
        let r = self.basis()?.reduction_set().remainder(&DiPoly::monomial(t.clone()));
        let mut terms = r.terms();
        match (terms.next(), terms.next()) {
            (Some((m, c)), None) if c.is_one() => Ok(m.clone()),
            _ => Err(Error::BinomialInvariantViolated(format!(
                "normal form of {t} is not a single monomial"
            ))),
        }
    }

    pub fn equal(&self, a: &DiMonomial, b: &DiMonomial) -> Result<bool> {
        Ok(self.nf(a)? == self.nf(b)?)
    }
}

fn check_binomial(h: &DiPoly, ord: crate::ordering::CenterOrder) -> Result<()> {
    let desc = h.terms_desc(ord);
    let ok = desc.len() == 2 && desc[0].1.is_one() && (-desc[1].1).is_one();
    if ok {
        Ok(())
    } else {
        Err(Error::BinomialInvariantViolated(format!(
            "{} terms with coefficients [{}]",
            desc.len(),
            desc.iter().map(|(_, c)| c.to_string()).collect::<Vec<_>>().join(", ")
        )))
    }
}
