//! Completion to a Gröbner–Shirshov basis, minimal and reduced bases, and
//! the basis check.

use std::collections::VecDeque;

use crate::algebra::{DiPoly, Var};
use crate::composition::{pair_compositions, self_compositions, Composition};
use crate::error::Result;
use crate::presentation::Presentation;
use crate::reduction::ReductionSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BasisKind {
    Raw,
    Gsb,
    Minimal,
    Reduced,
}

/// An ordered list of monic, nonzero polynomials over a presentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Basis {
    presentation: Presentation,
    elements: Vec<DiPoly>,
    kind: BasisKind,
}

impl Basis {
    /// Wraps a list without checking any basis property; elements are made
    /// monic and zeros dropped.
    pub fn raw(presentation: Presentation, polys: &[DiPoly]) -> Result<Basis> {
        presentation.check_polys(polys)?;
        let ord = presentation.order();
        let mut elements: Vec<DiPoly> = Vec::new();
        for f in polys.iter().filter(|f| !f.is_zero()) {
            let m = f.monic(ord)?;
            if !elements.contains(&m) {
                elements.push(m);
            }
        }
        Ok(Basis {
            presentation,
            elements,
            kind: BasisKind::Raw,
        })
    }

    /// Wraps `polys` and marks it as a Gröbner–Shirshov basis if
    /// [`is_gsb`] confirms it; otherwise the result stays raw.
    pub fn verified(presentation: Presentation, polys: &[DiPoly]) -> Result<Basis> {
        let mut b = Basis::raw(presentation, polys)?;
        if is_gsb(&b.presentation, &b.elements)? {
            b.kind = BasisKind::Gsb;
        }
        Ok(b)
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn elements(&self) -> &[DiPoly] {
        &self.elements
    }

    pub fn kind(&self) -> BasisKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn reduction_set(&self) -> ReductionSet {
        ReductionSet::from_polys(self.presentation.order(), self.elements.iter().cloned())
            .expect("basis elements are nonzero")
    }
}

#[derive(Debug, Clone, Copy)]
enum Task {
    Single(usize),
    Pair(usize, usize),
}

/// Statistics of one completion run.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CompletionStats {
    pub tasks: usize,
    pub compositions: usize,
    pub appended: usize,
}

fn compositions_of(set: &ReductionSet, task: Task, vars: &[Var]) -> Vec<Composition> {
    let ord = set.order();
    match task {
        Task::Single(i) => self_compositions(set.get(i), vars, ord),
        Task::Pair(i, j) => {
            let mut cs = pair_compositions(set.get(i), set.get(j), vars, ord);
            if i > j {
                cs.retain(|c| !c.is_symmetric_long());
            }
            cs
        }
    }
}

/// Completes `polys` to a Gröbner–Shirshov basis of the ideal they generate.
pub fn complete(presentation: &Presentation, polys: &[DiPoly]) -> Result<Basis> {
    complete_observed(presentation, polys, |_| Ok(())).map(|(b, _)| b)
}

/// [`complete`], calling `observe` on every element as it is appended
/// (inputs included); an error from `observe` aborts the run.
pub fn complete_observed(
    presentation: &Presentation,
    polys: &[DiPoly],
    mut observe: impl FnMut(&DiPoly) -> Result<()>,
) -> Result<(Basis, CompletionStats)> {
    let start = Basis::raw(presentation.clone(), polys)?;
    let ord = presentation.order();
    let vars: Vec<Var> = presentation.vars().collect();
    let mut set = ReductionSet::new(ord);
    let mut queue = VecDeque::new();
    let mut stats = CompletionStats::default();

    let mut append = |set: &mut ReductionSet, queue: &mut VecDeque<Task>, h: DiPoly| -> Result<()> {
        if set.contains(&h) {
            return Ok(());
        }
        observe(&h)?;
        let k = set.push(h)?;
        queue.push_back(Task::Single(k));
        for s in 0..k {
            queue.push_back(Task::Pair(k, s));
            queue.push_back(Task::Pair(s, k));
        }
        Ok(())
    };

    for f in start.elements {
        append(&mut set, &mut queue, f)?;
    }
    let initial = set.len();
    while let Some(task) = queue.pop_front() {
        stats.tasks += 1;
        for c in compositions_of(&set, task, &vars) {
            stats.compositions += 1;
            let h = set.remainder(&c.value);
            if !h.is_zero() {
                append(&mut set, &mut queue, h.monic(ord)?)?;
            }
        }
    }
    stats.appended = set.len() - initial;
    Ok((
        Basis {
            presentation: presentation.clone(),
            elements: set.into_polys(),
            kind: BasisKind::Gsb,
        },
        stats,
    ))
}

/// True iff every composition of `polys` has remainder zero modulo `polys`.
pub fn is_gsb(presentation: &Presentation, polys: &[DiPoly]) -> Result<bool> {
    let basis = Basis::raw(presentation.clone(), polys)?;
    let set = basis.reduction_set();
    let vars: Vec<Var> = presentation.vars().collect();
    let n = set.len();
    let mut tasks: Vec<Task> = (0..n).map(Task::Single).collect();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                tasks.push(Task::Pair(i, j));
            }
        }
    }
    Ok(tasks.into_iter().all(|t| {
        compositions_of(&set, t, &vars)
            .iter()
            .all(|c| set.remainder(&c.value).is_zero())
    }))
}

fn sorted_by_leading(basis: &Basis) -> Vec<DiPoly> {
    let ord = basis.presentation.order();
    let mut v = basis.elements.clone();
    v.sort_by(|a, b| {
        ord.compare(a.lead_mono(ord).unwrap(), b.lead_mono(ord).unwrap())
            .then_with(|| a.cmp(b))
    });
    v
}

fn derived_kind(input: BasisKind, target: BasisKind) -> BasisKind {
    if input == BasisKind::Raw {
        BasisKind::Raw
    } else {
        target
    }
}

/// Drops, in ascending order of leading monomial, every element whose
/// leading monomial is reducible by the remaining ones.
pub fn minimalize(basis: &Basis) -> Basis {
    let ord = basis.presentation.order();
    let mut survivors = sorted_by_leading(basis);
    let mut i = 0;
    while i < survivors.len() {
        let rest = ReductionSet::from_polys(
            ord,
            survivors
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != i)
                .map(|(_, p)| p.clone()),
        )
        .expect("nonzero");
        if rest.is_partially_reducible(&survivors[i]).expect("nonzero") {
            survivors.remove(i);
        } else {
            i += 1;
        }
    }
    Basis {
        presentation: basis.presentation.clone(),
        elements: survivors,
        kind: derived_kind(basis.kind, BasisKind::Minimal),
    }
}

/// The reduced basis: minimalize, then replace each element by its
/// remainder modulo the others. Sorted ascending by leading monomial.
pub fn reduce_basis(basis: &Basis) -> Basis {
    let ord = basis.presentation.order();
    let minimal = minimalize(basis);
    let elems = &minimal.elements;
    let mut out = Vec::new();
    for (i, h) in elems.iter().enumerate() {
        let rest = ReductionSet::from_polys(
            ord,
            elems
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != i)
                .map(|(_, p)| p.clone()),
        )
        .expect("nonzero");
        let r = rest.remainder(h);
        if !r.is_zero() {
            out.push(r.monic(ord).expect("nonzero"));
        }
    }
    let mut reduced = Basis {
        presentation: basis.presentation.clone(),
        elements: out,
        kind: derived_kind(basis.kind, BasisKind::Reduced),
    };
    reduced.elements = sorted_by_leading(&reduced);
    reduced
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{q, DiMonomial, Op};

    fn p(terms: &[(i64, &[u32], u8)]) -> DiPoly {
        DiPoly::from_terms(
            terms
                .iter()
                .map(|(c, ix, mk)| (DiMonomial::of(ix, *mk), q(*c))),
        )
    }

    fn example_a() -> (Presentation, Vec<DiPoly>) {
        (Presentation::standard(2), vec![p(&[(1, &[0, 0], 2), (-1, &[1], 1)])])
    }

    fn example_a_basis() -> Vec<DiPoly> {
        vec![
            p(&[(1, &[0, 0], 2), (-1, &[1], 1)]),
            p(&[(1, &[0, 1], 2), (-1, &[0, 1], 1)]),
            p(&[(1, &[1, 1], 2), (-1, &[1, 1], 1)]),
        ]
    }

    #[test]
    fn completes_example_a() {
        let (pres, f) = example_a();
        let b = complete(&pres, &f).unwrap();
        assert_eq!(b.elements(), example_a_basis().as_slice());
        assert_eq!(b.kind(), BasisKind::Gsb);
        assert!(is_gsb(&pres, b.elements()).unwrap());
        assert!(!is_gsb(&pres, &f).unwrap());
    }

    #[test]
    fn collapse_binomial_is_already_complete() {
        let pres = Presentation::standard(1);
        let f = vec![p(&[(1, &[0, 0], 2), (-1, &[0, 0], 1)])];
        assert_eq!(complete(&pres, &f).unwrap().elements(), f.as_slice());
    }

    #[test]
    fn empty_and_zero_inputs() {
        let pres = Presentation::standard(2);
        assert!(complete(&pres, &[]).unwrap().is_empty());
        assert!(complete(&pres, &[DiPoly::zero()]).unwrap().is_empty());
        assert!(is_gsb(&pres, &[]).unwrap());
    }

    #[test]
    fn inputs_are_made_monic() {
        let pres = Presentation::standard(1);
        let f = vec![p(&[(3, &[0, 0], 2), (-3, &[0, 0], 1)])];
        let b = complete(&pres, &f).unwrap();
        assert_eq!(b.elements(), &[p(&[(1, &[0, 0], 2), (-1, &[0, 0], 1)])]);
    }

    #[test]
    fn example_a_is_already_reduced() {
        let (pres, f) = example_a();
        let b = complete(&pres, &f).unwrap();
        let r = reduce_basis(&b);
        assert_eq!(r.elements(), example_a_basis().as_slice());
        assert_eq!(r.kind(), BasisKind::Reduced);
        assert_eq!(reduce_basis(&r), r);
    }

    #[test]
    fn minimalize_drops_redundant_multiple() {
        let pres = Presentation::standard(2);
        let s = p(&[(1, &[0, 1], 1), (-1, &[0], 1)]);
        let redundant = s.mul_mono(&DiMonomial::var(Var(1)), Op::Dashv);
        let padded = Basis {
            presentation: pres.clone(),
            elements: vec![s.clone(), redundant],
            kind: BasisKind::Gsb,
        };
        assert_eq!(minimalize(&padded).elements(), &[s]);
    }

    #[test]
    fn equal_leadings_leave_one_survivor() {
        let pres = Presentation::standard(2);
        let a = p(&[(1, &[0, 1], 1), (-1, &[0], 1)]);
        let b = p(&[(1, &[0, 1], 1), (-1, &[1], 1)]);
        let basis = Basis {
            presentation: pres,
            elements: vec![a, b],
            kind: BasisKind::Gsb,
        };
        assert_eq!(minimalize(&basis).len(), 1);
    }
}
