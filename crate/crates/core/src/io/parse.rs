use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::{CWord, Coeff, DiMonomial, DiPoly, Marker, Var};
use crate::error::{Error, Result};
use crate::ordering::WordOrder;
use crate::presentation::Presentation;

/// The contents of a presentation file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresentationFile {
    pub presentation: Presentation,
    pub polys: Vec<(String, DiPoly)>,
    pub relations: Vec<(DiMonomial, DiMonomial)>,
}

impl PresentationFile {
    /// The named polynomials followed by `u - v` for every relation.
    pub fn generators(&self) -> Vec<DiPoly> {
        let mut out: Vec<DiPoly> = self.polys.iter().map(|(_, p)| p.clone()).collect();
        for (u, v) in &self.relations {
            let mut p = DiPoly::monomial(u.clone());
            p.add_term(v.clone(), -Coeff::from_integer(1.into()));
            out.push(p);
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Sym(char),
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    column: usize,
}

struct Line {
    number: usize,
    tokens: Vec<Token>,
    pos: usize,
    end_column: usize,
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

fn lex(number: usize, text: &str) -> Result<Line> {
    let chars: Vec<char> = text.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = i + 1;
        if c == '#' {
            break;
        }
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            tokens.push(Token {
                tok: Tok::Ident(chars[start..i].iter().collect()),
                column,
            });
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            tokens.push(Token {
                tok: Tok::Int(digits.parse().expect("ascii digits")),
                column,
            });
        } else if "<>:=+-*/".contains(c) {
            tokens.push(Token {
                tok: Tok::Sym(c),
                column,
            });
            i += 1;
        } else {
            return Err(syntax(number, column, format!("unexpected character `{c}`")));
        }
    }
    Ok(Line {
        number,
        tokens,
        pos: 0,
        end_column: chars.len() + 1,
    })
}

impl Line {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|t| &t.tok)
    }

    fn column(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map_or(self.end_column, |t| t.column)
    }

    fn error(&self, message: impl Into<String>) -> Error {
        syntax(self.number, self.column(), message)
    }

    /// Attaches this line's position to errors that lack one.
    fn locate(&self, e: Error) -> Error {
        match e {
            Error::UnknownVariable(_) | Error::Marker { .. } => self.error(e.to_string()),
            other => other,
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.tokens.len()
    }

    fn expect_end(&self) -> Result<()> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.error("unexpected trailing input"))
        }
    }

    fn eat_sym(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect_sym(&mut self, c: char) -> Result<()> {
        if self.eat_sym(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{c}`")))
        }
    }

    fn ident(&mut self, what: &str) -> Result<(String, usize)> {
        let column = self.column();
        match self.peek() {
            Some(Tok::Ident(s)) => {
                let s = s.clone();
                self.pos += 1;
                Ok((s, column))
            }
            _ => Err(self.error(format!("expected {what}"))),
        }
    }

    fn int(&mut self) -> Option<(BigInt, usize)> {
        let column = self.column();
        match self.peek() {
            Some(Tok::Int(n)) => {
                let n = n.clone();
                self.pos += 1;
                Some((n, column))
            }
            _ => None,
        }
    }

    fn rational(&mut self) -> Result<Option<Coeff>> {
        let Some((num, _)) = self.int() else {
            return Ok(None);
        };
        if !self.eat_sym('/') {
            return Ok(Some(Coeff::from_integer(num)));
        }
        let Some((den, column)) = self.int() else {
            return Err(self.error("expected denominator"));
        };
        if den.is_zero() {
            return Err(Error::ZeroDenominator {
                line: self.number,
                column,
            });
        }
        Ok(Some(Coeff::new(num, den)))
    }

    fn monomial(&mut self, pres: &Presentation) -> Result<DiMonomial> {
        self.expect_sym('<')?;
        let mut letters = Vec::new();
        while let Some(Tok::Ident(name)) = self.peek() {
            let v = pres
                .var_by_name(name)
                .ok_or_else(|| Error::UnknownVariable(name.clone()))?;
            letters.push(v);
            self.pos += 1;
        }
        if letters.is_empty() {
            return Err(self.error("expected a variable"));
        }
        self.expect_sym(':')?;
        let marker = match self.int() {
            Some((n, _)) if n == 1.into() => Marker::One,
            Some((n, _)) if n == 2.into() => Marker::Two,
            _ => return Err(syntax(self.number, self.tokens[self.pos - 1].column, "marker must be 1 or 2")),
        };
        self.expect_sym('>')?;
        DiMonomial::new(CWord::new(letters), marker)
    }

    fn term(&mut self, pres: &Presentation) -> Result<(DiMonomial, Coeff)> {
        let c = self.rational()?;
        if c.is_some() {
            self.eat_sym('*');
        }
        let m = self.monomial(pres)?;
        Ok((m, c.unwrap_or_else(|| Coeff::from_integer(1.into()))))
    }

    fn poly(&mut self, pres: &Presentation) -> Result<DiPoly> {
        if self.tokens.len() == self.pos + 1 && self.peek() == Some(&Tok::Int(BigInt::zero())) {
            self.pos += 1;
            return Ok(DiPoly::zero());
        }
        let mut out = DiPoly::zero();
        let mut sign = if self.eat_sym('-') {
            -1
        } else {
            self.eat_sym('+');
            1
        };
        loop {
            let (m, c) = self.term(pres)?;
            out.add_term(m, if sign < 0 { -c } else { c });
            if self.eat_sym('+') {
                sign = 1;
            } else if self.eat_sym('-') {
                sign = -1;
            } else {
                break;
            }
        }
        Ok(out)
    }
}

fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(i, l)| (i + 1, l))
}

/// Parses a presentation file.
pub fn parse_file(text: &str) -> Result<PresentationFile> {
    let mut presentation: Option<Presentation> = None;
    let mut order_seen = false;
    let mut polys = Vec::new();
    let mut relations = Vec::new();
    let mut names = HashSet::new();
    let mut last_line = 0;
    for (number, raw) in lines(text) {
        last_line = number;
        let mut line = lex(number, raw)?;
        if line.at_end() {
            continue;
        }
        let (keyword, column) = line.ident("a keyword")?;
        match keyword.as_str() {
            "vars" => {
                if presentation.is_some() {
                    return Err(syntax(number, column, "variables already declared"));
                }
                let mut vars = vec![line.ident("a variable name")?];
                while line.eat_sym('<') {
                    vars.push(line.ident("a variable name")?);
                }
                line.expect_end()?;
                let mut seen = HashSet::new();
                for (v, c) in &vars {
                    if !seen.insert(v.clone()) {
                        return Err(syntax(number, *c, format!("variable `{v}` declared twice")));
                    }
                }
                presentation = Some(Presentation::new(
                    vars.into_iter().map(|(v, _)| v),
                    WordOrder::DegLex,
                )?);
            }
            "order" => {
                let Some(p) = presentation.as_ref() else {
                    return Err(syntax(number, column, "`order` before `vars`"));
                };
                if order_seen {
                    return Err(syntax(number, column, "ordering already declared"));
                }
                order_seen = true;
                let (name, c) = line.ident("an ordering name")?;
                let Some(order) = WordOrder::from_name(&name) else {
                    return Err(syntax(number, c, format!("unknown ordering `{name}`")));
                };
                line.expect_end()?;
                presentation = Some(Presentation::new(p.names().to_vec(), order)?);
            }
            "poly" => {
                let Some(p) = presentation.as_ref() else {
                    return Err(syntax(number, column, "`poly` before `vars`"));
                };
                let (name, c) = line.ident("a polynomial name")?;
                if !names.insert(name.clone()) {
                    return Err(syntax(number, c, format!("name `{name}` used twice")));
                }
                line.expect_sym('=')?;
                let f = line.poly(p).map_err(|e| line.locate(e))?;
                line.expect_end()?;
                polys.push((name, f));
            }
            "rel" => {
                let Some(p) = presentation.as_ref() else {
                    return Err(syntax(number, column, "`rel` before `vars`"));
                };
                let u = line.monomial(p).map_err(|e| line.locate(e))?;
                line.expect_sym('=')?;
                let v = line.monomial(p).map_err(|e| line.locate(e))?;
                line.expect_end()?;
                relations.push((u, v));
            }
            other => {
                return Err(syntax(number, column, format!("unknown keyword `{other}`")));
            }
        }
    }
    let Some(presentation) = presentation else {
        return Err(syntax(last_line + 1, 1, "missing `vars` declaration"));
    };
    Ok(PresentationFile {
        presentation,
        polys,
        relations,
    })
}

/// Parses a polynomial expression such as `2 <x1 x2 : 1> - <x1 : 1>`.
pub fn parse_poly(pres: &Presentation, text: &str) -> Result<DiPoly> {
    let mut line = lex(1, text)?;
    let f = line.poly(pres)?;
    line.expect_end()?;
    Ok(f)
}

/// Parses a single monomial such as `<x2 x1 : 2>`.
pub fn parse_monomial(pres: &Presentation, text: &str) -> Result<DiMonomial> {
    let mut line = lex(1, text)?;
    let m = line.monomial(pres)?;
    line.expect_end()?;
    Ok(m)
}

/// Parses a variable name.
pub fn parse_var(pres: &Presentation, name: &str) -> Result<Var> {
    pres.var_by_name(name.trim())
        .ok_or_else(|| Error::UnknownVariable(name.trim().to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{q, qq};

    fn pres3() -> Presentation {
        Presentation::standard(3)
    }

    #[test]
    fn parses_worked_example() {
        let f = parse_poly(&pres3(), "2 <x2 x3 : 2> - 2 <x2 x3 : 1> + 3 <x1 x3 : 2>").unwrap();
        assert_eq!(f.len(), 3);
        assert_eq!(f.coeff(&DiMonomial::of(&[1, 2], 2)), Some(&q(2)));
        assert_eq!(f.coeff(&DiMonomial::of(&[1, 2], 1)), Some(&q(-2)));
        assert_eq!(f.coeff(&DiMonomial::of(&[0, 2], 2)), Some(&q(3)));
    }

    #[test]
    fn marker_and_name_errors() {
        assert_eq!(
            parse_poly(&pres3(), "<x1 x1 x1 : 2>"),
            Err(Error::Marker { len: 3 })
        );
        assert_eq!(
            parse_poly(&pres3(), "<x1 y : 1>"),
            Err(Error::UnknownVariable("y".into()))
        );
        assert_eq!(
            parse_poly(&pres3(), "3/0 <x1 : 1>"),
            Err(Error::ZeroDenominator { line: 1, column: 3 })
        );
        assert!(matches!(
            parse_poly(&pres3(), "<x1 : 3>"),
            Err(Error::Syntax { line: 1, column: 7, .. })
        ));
        assert!(matches!(
            parse_poly(&pres3(), "<x1 : 1> +"),
            Err(Error::Syntax { line: 1, column: 11, .. })
        ));
    }

    #[test]
    fn letters_are_sorted_and_terms_collected() {
        let f = parse_poly(&pres3(), "-<x2 x1 : 1> + 1/2 * <x1 x2 : 1>").unwrap();
        assert_eq!(f.coeff(&DiMonomial::of(&[0, 1], 1)), Some(&qq(-1, 2)));
        assert!(parse_poly(&pres3(), "0").unwrap().is_zero());
        assert!(parse_poly(&pres3(), "<x1:1> - <x1:1>").unwrap().is_zero());
    }

    #[test]
    fn parses_files() {
        let text = "\
# example
vars a < b
order deglex

poly f = <a a : 2> - <b : 1>   # trailing comment
rel <b b : 2> = <a : 1>
";
        let file = parse_file(text).unwrap();
        assert_eq!(file.presentation.names(), &["a".to_string(), "b".to_string()]);
        assert_eq!(file.polys.len(), 1);
        assert_eq!(file.relations, vec![(DiMonomial::of(&[1, 1], 2), DiMonomial::of(&[0], 1))]);
        assert_eq!(file.generators().len(), 2);
    }

    #[test]
    fn file_errors_are_located() {
        assert!(matches!(
            parse_file("poly f = <x1 : 1>"),
            Err(Error::Syntax { line: 1, column: 1, .. })
        ));
        assert!(matches!(
            parse_file("vars x1\npoly f = <x1 : 1>\npoly f = <x1 : 1>"),
            Err(Error::Syntax { line: 3, column: 6, .. })
        ));
        assert!(matches!(
            parse_file("vars x1\norder lex"),
            Err(Error::Syntax { line: 2, column: 7, .. })
        ));
        assert!(matches!(
            parse_file("vars x1 < x1"),
            Err(Error::Syntax { line: 1, column: 11, .. })
        ));
        assert!(matches!(
            parse_file("vars x1\nfoo"),
            Err(Error::Syntax { line: 2, column: 1, .. })
        ));
        assert!(matches!(
            parse_file("# nothing"),
            Err(Error::Syntax { line: 2, column: 1, .. })
        ));
        assert!(matches!(
            parse_file("vars x1 ; x2"),
            Err(Error::Syntax { line: 1, column: 9, .. })
        ));
    }

    #[test]
    fn monomial_only() {
        assert_eq!(parse_monomial(&pres3(), "<x2 x1 : 2>").unwrap(), DiMonomial::of(&[0, 1], 2));
        assert!(parse_monomial(&pres3(), "2 <x1 : 1>").is_err());
    }
}
