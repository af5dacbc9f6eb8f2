//! Text form of free-algebra elements.
//!
//! ```text
//! expr   := ["-"] term (("+" | "-") term)*
//! term   := rational | [rational "*"] factor ["*" factor]
//! factor := generator ["^" nat] | "(" expr ")" | "1"
//! ```
//!
//! A product of three or more factors must be parenthesized, and powers are
//! only allowed on generators, where they expand left-nested.

use super::{fmul, FreeElement, MonomialTable, Tree};
use crate::error::{Error, Result};
use crate::exactlin::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        let simple = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(t) = simple {
            out.push((pos, t));
            i += 1;
        } else if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            out.push((pos, Tok::Int(chars[start..i].iter().map(|x| x.1).collect())));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].1.is_alphanumeric() || chars[i].1 == '_') {
                i += 1;
            }
            out.push((pos, Tok::Ident(chars[start..i].iter().map(|x| x.1).collect())));
        } else {
            return Err(Error::Parse { position: pos, message: format!("unexpected character '{c}'") });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    names: &'a [String],
    table: &'a MonomialTable,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.1)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.0)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse { position: self.offset(), message: message.into() })
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<FreeElement> {
        let mut sign = if self.eat(&Tok::Minus) { -Scalar::one() } else { Scalar::one() };
        let mut acc = FreeElement::zero();
        loop {
            let t = self.term()?;
            acc = acc.axpy(&sign, &t);
            sign = match self.peek() {
                Some(Tok::Plus) => Scalar::one(),
                Some(Tok::Minus) => -Scalar::one(),
                _ => return Ok(acc),
            };
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<FreeElement> {
        let coeff = match self.peek() {
            Some(Tok::Int(_)) => {
                let c = self.rational()?;
                if !self.eat(&Tok::Star) {
                    return Ok(FreeElement::one().scale(&c));
                }
                c
            }
            _ => Scalar::one(),
        };
        let first = self.factor()?;
        let value = if self.eat(&Tok::Star) {
            let second = self.factor()?;
            if self.peek() == Some(&Tok::Star) {
                return self.err("ambiguous nonassociative product: parenthesize products of three or more factors");
            }
            fmul(self.table, &first, &second)?
        } else {
            first
        };
        Ok(value.scale(&coeff))
    }

    fn integer(&mut self) -> Result<i64> {
        match self.peek().cloned() {
            Some(Tok::Int(s)) => {
                let v = s.parse::<i64>().or_else(|_| self.err("integer literal too large"))?;
                self.pos += 1;
                Ok(v)
            }
            _ => self.err("expected an integer"),
        }
    }

    fn rational(&mut self) -> Result<Scalar> {
        let num = self.integer()?;
        if self.eat(&Tok::Slash) {
            let den = self.integer()?;
            if den == 0 {
                return self.err("zero denominator");
            }
            Ok(Scalar::ratio(num, den))
        } else {
            Ok(Scalar::from_int(num))
        }
    }

    fn factor(&mut self) -> Result<FreeElement> {
        match self.peek().cloned() {
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(&Tok::RParen) {
                    return self.err("expected ')'");
                }
                if self.peek() == Some(&Tok::Caret) {
                    return self.err("powers are only allowed on generators");
                }
                Ok(inner)
            }
            Some(Tok::Int(s)) if s == "1" => {
                self.pos += 1;
                if self.peek() == Some(&Tok::Caret) {
                    return self.err("powers are only allowed on generators");
                }
                Ok(FreeElement::one())
            }
            Some(Tok::Ident(name)) => {
                let Some(g) = self.names.iter().position(|n| *n == name) else {
                    return self.err(format!("unknown generator '{name}'"));
                };
                self.pos += 1;
                let n = if self.eat(&Tok::Caret) {
                    let n = self.integer()?;
                    usize::try_from(n).or_else(|_| self.err("negative exponent"))?
                } else {
                    1
                };
                if n > self.table.max_degree() {
                    return Err(Error::DegreeBudgetExceeded { needed: n, cap: self.table.max_degree() });
                }
                Ok(FreeElement::monomial(self.table.power(g, n)?))
            }
            _ => self.err("expected a generator, '1' or '('"),
        }
    }
}

/// Parses an expression over the generators named `names`.
pub fn parse(text: &str, names: &[String], table: &MonomialTable) -> Result<FreeElement> {
    if names.len() != table.generators() {
        return Err(Error::DimensionMismatch { expected: table.generators(), found: names.len() });
    }
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(Error::Parse { position: 0, message: "empty expression".into() });
    }
    let mut p = Parser { toks, pos: 0, end: text.len(), names, table };
    let value = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("unexpected trailing input");
    }
    Ok(value)
}

fn write_tree(t: &Tree, names: &[String], nested: bool, out: &mut String) {
    if let Some((g, n)) = t.as_power() {
        out.push_str(&names[g]);
        if n > 1 {
            out.push('^');
            out.push_str(&n.to_string());
        }
        return;
    }
    let Tree::Node(l, r) = t else { unreachable!("leaves are powers") };
    if nested {
        out.push('(');
    }
    write_tree(l, names, true, out);
    out.push('*');
    write_tree(r, names, true, out);
    if nested {
        out.push(')');
    }
}

/// Text of one indexed monomial; the unit prints as `1`.
pub fn format_monomial(table: &MonomialTable, names: &[String], idx: usize) -> String {
    match table.tree(idx) {
        None => "1".into(),
        Some(t) => {
            let mut s = String::new();
            write_tree(&t, names, false, &mut s);
            s
        }
    }
}

/// Canonical text of an element: terms in index order, unit coefficients
/// omitted, products under a coefficient parenthesized.
pub fn format(x: &FreeElement, table: &MonomialTable, names: &[String]) -> String {
    format_terms(x.terms().iter().map(|(i, c)| (*i, c)), table, names)
}

/// Text of `sum c_i m_i` with the terms in the given order.
pub fn format_terms<'a, I>(terms: I, table: &MonomialTable, names: &[String]) -> String
where
    I: IntoIterator<Item = (usize, &'a Scalar)>,
{
    let mut out = String::new();
    for (n, (idx, c)) in terms.into_iter().filter(|(_, c)| !c.is_zero()).enumerate() {
        let mag = c.abs();
        match (n, c.is_negative()) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        match table.tree(idx) {
            None => out.push_str(&mag.to_string()),
            Some(t) if mag.is_one() => write_tree(&t, names, false, &mut out),
            Some(t) => {
                out.push_str(&mag.to_string());
                out.push('*');
                write_tree(&t, names, true, &mut out);
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
