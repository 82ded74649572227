//! Recursive-descent parser for the polynomial expression grammar: integers,
//! symbols theta / u / z1..zn / t, operators + - * ^, parentheses; whitespace
//! insignificant.

use crate::algebra::field::Fq;
use crate::algebra::multipoly::{MultiPoly, Vars};
use crate::algebra::unipoly::UniPoly;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(u64),
    Sym(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn lex(src: &str) -> Result<Vec<Tok>> {
    let mut out = vec![];
    let chars: Vec<char> = src.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                out.push(Tok::Plus);
                i += 1;
            }
            '-' => {
                out.push(Tok::Minus);
                i += 1;
            }
            '*' => {
                out.push(Tok::Star);
                i += 1;
            }
            '^' => {
                out.push(Tok::Caret);
                i += 1;
            }
            '(' => {
                out.push(Tok::LParen);
                i += 1;
            }
            ')' => {
                out.push(Tok::RParen);
                i += 1;
            }
            '0'..='9' => {
                let mut n = 0u64;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    n = n
                        .checked_mul(10)
                        .and_then(|m| m.checked_add(chars[i] as u64 - '0' as u64))
                        .ok_or_else(|| Error::Parse("integer literal overflow".into()))?;
                    i += 1;
                }
                out.push(Tok::Int(n));
            }
            _ if c.is_ascii_alphabetic() => {
                let mut s = String::new();
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    s.push(chars[i]);
                    i += 1;
                }
                out.push(Tok::Sym(s));
            }
            _ => return Err(Error::Parse(format!("unexpected character '{}'", c))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: &'a [Tok],
    pos: usize,
    field: Fq,
    vars: Vars,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let mut acc = match self.peek() {
            Some(Tok::Minus) => {
                self.next();
                self.term()?.neg()
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.next();
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.next();
                    acc = acc.sub(&self.term()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.next();
                    acc = acc.mul(&self.power()?);
                }
                // implicit multiplication: `2theta`, `theta z1`, `2(..)`
                Some(Tok::Sym(_)) | Some(Tok::Int(_)) | Some(Tok::LParen) => {
                    acc = acc.mul(&self.power()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<MultiPoly> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.next();
            match self.next() {
                Some(Tok::Int(e)) => Ok(base.pow(e)),
                _ => Err(Error::Parse("expected integer exponent after '^'".into())),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<MultiPoly> {
        match self.next() {
            Some(Tok::Int(n)) => Ok(MultiPoly::constant(
                &self.field,
                &self.vars,
                self.field.from_int(n as i64),
            )),
            Some(Tok::Sym(s)) => {
                if s == "u" {
                    return Ok(MultiPoly::constant(
                        &self.field,
                        &self.vars,
                        self.field.generator(),
                    ));
                }
                if !self.vars.contains(&s) {
                    return Err(Error::UnknownVariable(s));
                }
                MultiPoly::var_pow(&self.field, &self.vars, &s, 1)
            }
            Some(Tok::LParen) => {
                let e = self.expr()?;
                match self.next() {
                    Some(Tok::RParen) => Ok(e),
                    _ => Err(Error::Parse("expected ')'".into())),
                }
            }
            other => Err(Error::Parse(format!("unexpected token {:?}", other))),
        }
    }
}

/// Parse an expression into the given variable context.
pub fn parse_multipoly(src: &str, field: &Fq, vars: &Vars) -> Result<MultiPoly> {
    let toks = lex(src)?;
    let mut p = Parser {
        toks: &toks,
        pos: 0,
        field: field.clone(),
        vars: vars.clone(),
    };
    let e = p.expr()?;
    if p.pos != toks.len() {
        return Err(Error::Parse("trailing input".into()));
    }
    Ok(e)
}

/// Parse an element of A = F_q[theta] (symbols theta and u only).
pub fn parse_unipoly(src: &str, field: &Fq) -> Result<UniPoly> {
    let vars = Vars::new(&["theta"]);
    let mp = parse_multipoly(src, field, &vars)?;
    mp.to_unipoly()
}

/// Parse the module coefficient list `[<poly>, <poly>, ...]` giving the
/// tau-coefficients above the constant term.
pub fn parse_poly_list(src: &str, field: &Fq) -> Result<Vec<UniPoly>> {
    let trimmed = src.trim();
    let inner = trimmed
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| Error::Parse("expected [poly, poly, ...]".into()))?;
    let mut out = vec![];
    if inner.trim().is_empty() {
        return Ok(out);
    }
    for part in inner.split(',') {
        out.push(parse_unipoly(part, field)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::fq_make;

    #[test]
    fn parses_basic_grammar() {
        let f = fq_make(3, 1, None).unwrap();
        let p = parse_unipoly("theta^2 + 2*theta + 1", &f).unwrap();
        assert_eq!(p, UniPoly::from_ints(&f, &[1, 2, 1]));
        let q = parse_unipoly("(theta + 1)^2", &f).unwrap();
        assert_eq!(q, p);
        let r = parse_unipoly("theta - 1", &f).unwrap();
        assert_eq!(r, UniPoly::from_ints(&f, &[-1, 1]));
    }

    #[test]
    fn parses_z_variables() {
        let f = fq_make(3, 1, None).unwrap();
        let vars = Vars::new(&["theta", "z1", "z2"]);
        let p = parse_multipoly("z1 z2 - theta^2", &f, &vars).unwrap();
        assert_eq!(p.degree_in("z1"), Some(1));
        assert_eq!(p.degree_in("theta"), Some(2));
        assert!(matches!(
            parse_multipoly("z3", &f, &vars),
            Err(Error::UnknownVariable(_))
        ));
    }

    #[test]
    fn parses_coefficient_lists() {
        let f = fq_make(3, 1, None).unwrap();
        let l = parse_poly_list("[0, 1]", &f).unwrap();
        assert_eq!(l.len(), 2);
        assert!(l[0].is_zero());
        assert!(l[1].is_one());
    }
}
