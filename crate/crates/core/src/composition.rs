//! Compositions of single polynomials and of ordered pairs.

use std::fmt;

use crate::algebra::{mono_mul, CWord, DiMonomial, DiPoly, Marker, Op, Var};
use crate::ordering::CenterOrder;
use crate::reduction::normal_poly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CompositionKind {
    Multiplication,
    Special,
    Equal,
    ShortIntersection,
    EqualMultiplication,
    LongIntersection,
}

impl fmt::Display for CompositionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CompositionKind::Multiplication => "multiplication",
            CompositionKind::Special => "special",
            CompositionKind::Equal => "equal",
            CompositionKind::ShortIntersection => "short-intersection",
            CompositionKind::EqualMultiplication => "equal-multiplication",
            CompositionKind::LongIntersection => "long-intersection",
        };
        f.write_str(s)
    }
}

/// Auxiliary data a composition was built from.
///
/// `a` and `b` are the cofactors of the first and second source; both are
/// empty unless the kind is a long intersection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Provenance {
    pub var: Option<Var>,
    pub op: Option<Op>,
    pub a: CWord,
    pub b: CWord,
}

impl Provenance {
    fn plain() -> Self {
        Provenance {
            var: None,
            op: None,
            a: CWord::empty(),
            b: CWord::empty(),
        }
    }

    fn with_var(x: Var, op: Option<Op>) -> Self {
        Provenance {
            var: Some(x),
            op,
            ..Provenance::plain()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Composition {
    pub kind: CompositionKind,
    pub value: DiPoly,
    /// The monomial below which the value must be expressible for the
    /// composition to count as trivial.
    pub ambient: DiMonomial,
    pub provenance: Provenance,
}

impl Composition {
    /// True for a long intersection where both cofactors are nonempty; the
    /// reversed pair yields the negated value.
    pub fn is_symmetric_long(&self) -> bool {
        self.kind == CompositionKind::LongIntersection
            && !self.provenance.a.is_empty()
            && !self.provenance.b.is_empty()
    }
}

/// Multiplication compositions of a non-strong `f`, or the special
/// compositions of a strong `f` whose leading word has length above one and
/// which has a bare variable among its terms.
pub fn self_compositions(f: &DiPoly, vars: &[Var], ord: CenterOrder) -> Vec<Composition> {
    let Some(lead) = f.lead_mono(ord) else {
        return Vec::new();
    };
    let strong = f.is_strong(ord).unwrap_or(true);
    let mut out = Vec::new();
    if !strong {
        for &x in vars {
            let xm = DiMonomial::var(x);
            for op in [Op::Vdash, Op::Dashv] {
                let value = f.mul_mono(&xm, op);
                let ambient = value
                    .lead_mono(ord)
                    .cloned()
                    .unwrap_or_else(|| mono_mul(lead, &xm, op));
                out.push(Composition {
                    kind: CompositionKind::Multiplication,
                    value,
                    ambient,
                    provenance: Provenance::with_var(x, Some(op)),
                });
            }
        }
    } else if lead.degree() > 1 && f.support().any(|m| m.degree() == 1) {
        for &x in vars {
            let xm = DiMonomial::var(x);
            let value = &f.mul_mono(&xm, Op::Vdash) - &f.mul_mono(&xm, Op::Dashv);
            out.push(Composition {
                kind: CompositionKind::Special,
                value,
                ambient: mono_mul(lead, &xm, Op::Dashv),
                provenance: Provenance::with_var(x, None),
            });
        }
    }
    out
}

/// Compositions of the ordered pair `(f, g)`.
///
/// Long intersections with both cofactors nonempty are returned for either
/// order; callers iterating over ordered pairs may skip one direction (see
/// [`Composition::is_symmetric_long`]).
pub fn pair_compositions(f: &DiPoly, g: &DiPoly, vars: &[Var], ord: CenterOrder) -> Vec<Composition> {
    let (Some(fl), Some(gl)) = (f.lead_mono(ord), g.lead_mono(ord)) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    let (fw, gw) = (fl.word(), gl.word());

    if fl == gl {
        out.push(Composition {
            kind: CompositionKind::Equal,
            value: f - g,
            ambient: fl.clone(),
            provenance: Provenance::plain(),
        });
    }

    if fw.degree() == 2 && gw.degree() == 1 {
        if let Some(x) = gw.divides(fw) {
            if let Some(gx) = normal_poly(g, &x, fl.marker(), ord) {
                out.push(Composition {
                    kind: CompositionKind::ShortIntersection,
                    value: f - &gx,
                    ambient: fl.clone(),
                    provenance: Provenance::with_var(x.letters()[0], None),
                });
            }
        }
    }

    let both_strong = f.is_strong(ord).unwrap_or(false) && g.is_strong(ord).unwrap_or(false);
    if both_strong && fw.degree() + gw.degree() > 3 && fl != gl {
        if fw == gw {
            for &x in vars {
                let xm = DiMonomial::var(x);
                out.push(Composition {
                    kind: CompositionKind::EqualMultiplication,
                    value: &f.mul_mono(&xm, Op::Dashv) - &g.mul_mono(&xm, Op::Dashv),
                    ambient: DiMonomial::from_parts_unchecked(fw.mul(&x_word(x)), Marker::One),
                    provenance: Provenance::with_var(x, Some(Op::Dashv)),
                });
            }
        } else {
            let w = fw.lcm(gw);
            let a = fw.divides(&w).expect("lcm is a multiple");
            let b = gw.divides(&w).expect("lcm is a multiple");
            let a_ok = !a.is_empty() || fl.marker() == Marker::One;
            if !b.is_empty() && w.degree() < fw.degree() + gw.degree() && a_ok {
                let fa = dashv_word(f, &a);
                let gb = dashv_word(g, &b);
                out.push(Composition {
                    kind: CompositionKind::LongIntersection,
                    value: &fa - &gb,
                    ambient: DiMonomial::from_parts_unchecked(w, Marker::One),
                    provenance: Provenance {
                        var: None,
                        op: None,
                        a,
                        b,
                    },
                });
            }
        }
    }
    out
}

fn x_word(x: Var) -> CWord {
    CWord::var(x)
}

// `f ⊣ ⌊a⌋_1`, or `f` when `a` is empty.
fn dashv_word(f: &DiPoly, a: &CWord) -> DiPoly {
    match DiMonomial::one(a.clone()) {
        Ok(am) => f.mul_mono(&am, Op::Dashv),
        Err(_) => f.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::q;

    const ORD: CenterOrder = CenterOrder::DEG_LEX;

    fn p(terms: &[(i64, &[u32], u8)]) -> DiPoly {
        DiPoly::from_terms(
            terms
                .iter()
                .map(|(c, ix, mk)| (DiMonomial::of(ix, *mk), q(*c))),
        )
    }

    fn vars(n: u32) -> Vec<Var> {
        (0..n).map(Var).collect()
    }

    #[test]
    fn multiplication_of_collapse_binomial_vanishes() {
        let f = p(&[(1, &[0, 0], 2), (-1, &[0, 0], 1)]);
        let cs = self_compositions(&f, &vars(1), ORD);
        assert_eq!(cs.len(), 2);
        for c in cs {
            assert_eq!(c.kind, CompositionKind::Multiplication);
            assert!(c.value.is_zero());
        }
    }

    #[test]
    fn special_composition_of_square_relation() {
        let f = p(&[(1, &[0, 0], 2), (-1, &[1], 1)]);
        let cs = self_compositions(&f, &vars(2), ORD);
        assert_eq!(cs.len(), 2);
        assert!(cs.iter().all(|c| c.kind == CompositionKind::Special));
        assert_eq!(cs[0].value, p(&[(1, &[0, 1], 1), (-1, &[0, 1], 2)]));
        assert_eq!(cs[0].ambient, DiMonomial::of(&[0, 0, 0], 1));
        assert_eq!(cs[1].value, p(&[(1, &[1, 1], 1), (-1, &[1, 1], 2)]));
    }

    #[test]
    fn strong_single_letter_has_no_self_compositions() {
        let f = p(&[(1, &[1], 1), (-1, &[0], 1)]);
        assert!(self_compositions(&f, &vars(2), ORD).is_empty());
    }

    #[test]
    fn long_intersection_example() {
        let f = p(&[(1, &[0, 1], 1), (-1, &[0], 1)]);
        let g = p(&[(1, &[1, 1], 1), (-1, &[1], 1)]);
        let cs = pair_compositions(&f, &g, &vars(2), ORD);
        assert_eq!(cs.len(), 1);
        let c = &cs[0];
        assert_eq!(c.kind, CompositionKind::LongIntersection);
        assert_eq!(c.ambient, DiMonomial::of(&[0, 1, 1], 1));
        assert!(c.value.is_zero());
        assert!(c.is_symmetric_long());
    }

    #[test]
    fn equal_multiplication_example() {
        let f = p(&[(1, &[0, 1], 2), (1, &[0], 1)]);
        let g = p(&[(1, &[0, 1], 1), (1, &[1], 1)]);
        let cs = pair_compositions(&f, &g, &vars(2), ORD);
        assert_eq!(cs.len(), 2);
        assert!(cs.iter().all(|c| c.kind == CompositionKind::EqualMultiplication));
        assert_eq!(cs[0].value, p(&[(1, &[0, 0], 1), (-1, &[0, 1], 1)]));
        assert_eq!(cs[0].ambient, DiMonomial::of(&[0, 0, 1], 1));
    }

    #[test]
    fn equal_composition_drops_leading() {
        let f = p(&[(1, &[0, 1], 2), (1, &[0], 1)]);
        let g = p(&[(1, &[0, 1], 2), (2, &[1], 1)]);
        let cs = pair_compositions(&f, &g, &vars(2), ORD);
        let eq: Vec<_> = cs.iter().filter(|c| c.kind == CompositionKind::Equal).collect();
        assert_eq!(eq.len(), 1);
        assert_eq!(eq[0].value, p(&[(1, &[0], 1), (-2, &[1], 1)]));
    }

    #[test]
    fn short_intersection_uses_vdash_for_marker_two() {
        // f = <x1 x2:2> - x1, g = x2 - x1
        let f = p(&[(1, &[0, 1], 2), (-1, &[0], 1)]);
        let g = p(&[(1, &[1], 1), (-1, &[0], 1)]);
        let cs = pair_compositions(&f, &g, &vars(2), ORD);
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].kind, CompositionKind::ShortIntersection);
        // f - (g ⊢ x1) = <x1 x1:2> - x1
        assert_eq!(cs[0].value, p(&[(1, &[0, 0], 2), (-1, &[0], 1)]));
        assert_eq!(cs[0].ambient, DiMonomial::of(&[0, 1], 2));
    }

    #[test]
    fn leading_below_ambient() {
        let polys = [
            p(&[(1, &[0, 1], 1), (-1, &[0], 1)]),
            p(&[(1, &[1, 1], 1), (-3, &[0, 0], 2)]),
            p(&[(1, &[0, 1], 2), (1, &[1], 1)]),
            p(&[(1, &[1], 1), (-1, &[0], 1)]),
            p(&[(1, &[0, 0, 1], 1), (2, &[1, 1], 2)]),
            p(&[(1, &[0, 1], 1), (1, &[0, 0], 2)]),
        ];
        for f in &polys {
            for g in &polys {
                if f == g {
                    continue;
                }
                for c in pair_compositions(f, g, &vars(2), ORD) {
                    if let Some(l) = c.value.lead_mono(ORD) {
                        assert_eq!(ORD.compare(l, &c.ambient), std::cmp::Ordering::Less, "{c:?}");
                    }
                }
            }
        }
    }
}
