use std::fmt::Write;

use num_traits::{One, Signed};

use crate::algebra::{Coeff, DiMonomial, DiPoly};
use crate::assoc::{ADiMonomial, ADiPoly};
use crate::presentation::Presentation;

pub fn format_monomial(pres: &Presentation, m: &DiMonomial) -> String {
    let names: Vec<&str> = m.word().letters().iter().map(|&v| pres.name(v)).collect();
    format!("<{} : {}>", names.join(" "), m.marker().value())
}

pub fn format_amonomial(pres: &Presentation, m: &ADiMonomial) -> String {
    let names: Vec<&str> = m.word().iter().map(|&v| pres.name(v)).collect();
    format!("[{} : {}]", names.join(" "), m.dot())
}

// Joins signed terms: `-2 <..>` first, ` - 2 <..>` / ` + <..>` later.
fn join_terms<'a>(terms: impl Iterator<Item = (String, &'a Coeff)>) -> String {
    let mut out = String::new();
    for (i, (mono, c)) in terms.enumerate() {
        let neg = c.is_negative();
        let abs = c.abs();
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        if !abs.is_one() {
            write!(out, "{abs} ").expect("write to string");
        }
        out.push_str(&mono);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Terms in descending order; coefficient 1 is omitted.
pub fn format_poly(pres: &Presentation, f: &DiPoly) -> String {
    join_terms(
        f.terms_desc(pres.order())
            .into_iter()
            .map(|(m, c)| (format_monomial(pres, m), c)),
    )
}

pub fn format_apoly(pres: &Presentation, f: &ADiPoly) -> String {
    join_terms(f.terms().rev().map(|(m, c)| (format_amonomial(pres, m), c)))
}

/// The `vars` and `order` header lines.
pub fn format_header(pres: &Presentation) -> String {
    format!(
        "vars {}\norder {}\n",
        pres.names().join(" < "),
        pres.order().base.name()
    )
}

/// A complete presentation file listing `polys` as `poly <prefix>1`, ...
pub fn format_file(pres: &Presentation, prefix: &str, polys: &[DiPoly]) -> String {
    let mut out = format_header(pres);
    for (i, f) in polys.iter().enumerate() {
        writeln!(out, "poly {prefix}{} = {}", i + 1, format_poly(pres, f)).expect("write to string");
    }
    out
}
