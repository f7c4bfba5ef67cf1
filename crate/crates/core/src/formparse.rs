//! Text format for exact polynomials.
//!
//! ```text
//! expr     := ['-'] term (('+' | '-') term)*
//! term     := factor (('*' | '/') factor)*
//! factor   := base ('^' natural)?
//! base     := rational | symbol | '(' expr ')'
//! rational := integer ('/' positive-integer)?
//! ```
//!
//! A leading minus is allowed at the head of any `expr`, so also right
//! after `(`. Implicit multiplication (`2x`) is rejected. Symbols must be
//! declared variables or the ring parameter. Division is only by nonzero
//! constants of the coefficient ring: rational literals, and in a function
//! field any parameter expression. `2/3^2` is `(2/3)^2` since the rational
//! literal is a base.

use crate::error::{Error, Result};
use crate::poly::{MultiPoly, UniPoly};
use crate::rings::{dense, Field, Ring};
use num_bigint::BigInt;
use num_traits::ToPrimitive;

/// Largest exponent accepted after `^`.
pub const MAX_EXPONENT: u32 = 1000;
/// Largest number of terms a power may expand to.
pub const MAX_TERMS: u64 = 10_000;

/// Upper bound C(e+k-1, k-1) on the terms of a k-term polynomial to the e,
/// saturating.
fn expansion_bound(k: usize, e: u32) -> u64 {
    if k <= 1 {
        return 1;
    }
    let mut b: u64 = 1;
    for i in 1..k as u64 {
        b = b.saturating_mul(e as u64 + i) / i;
        if b > MAX_TERMS {
            return u64::MAX;
        }
    }
    b
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let ch = bytes[i];
        if ch.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match ch {
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Int(text[start..i].parse().unwrap())));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            _ => {
                let c = text[start..].chars().next().unwrap();
                return Err(Error::Syntax { pos: start, msg: format!("unexpected character '{c}'") });
            }
        };
        out.push((start, tok));
        i += 1;
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

struct Parser<'a, R: Ring> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    ring: &'a R,
    vars: &'a [&'a str],
}

impl<'a, R: Ring> Parser<'a, R> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { pos: self.offset(), msg: msg.into() })
    }

    fn constant(&self, c: R::Element) -> MultiPoly<R> {
        MultiPoly::constant(self.ring, c)
    }

    fn expr(&mut self) -> Result<MultiPoly<R>> {
        let negate = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Tok::Minus => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly<R>> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    acc = acc.mul(&self.factor()?);
                }
                Tok::Slash => {
                    let at = self.offset();
                    self.bump();
                    let divisor = self.factor()?;
                    acc = self.divide(acc, &divisor, at)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn divide(&self, num: MultiPoly<R>, divisor: &MultiPoly<R>, at: usize) -> Result<MultiPoly<R>> {
        if !self.ring.supports_division() {
            return Err(Error::DivisionUnsupported { pos: at });
        }
        let Some(c) = divisor.as_constant() else {
            return Err(Error::Syntax { pos: at, msg: "division by a non-constant expression".into() });
        };
        let inv = self.ring.inv(&c).ok_or(Error::DivisionByZero)?;
        Ok(num.scale(&inv))
    }

    fn factor(&mut self) -> Result<MultiPoly<R>> {
        let base = self.base()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        match self.bump() {
            Tok::Int(n) => match n.to_u32() {
                Some(e) if e <= MAX_EXPONENT && expansion_bound(base.num_terms(), e) <= MAX_TERMS => {
                    Ok(base.pow(e))
                }
                _ => {
                    self.pos -= 1;
                    self.err("exponent too large")
                }
            },
            _ => {
                self.pos -= 1;
                self.err("expected a natural-number exponent")
            }
        }
    }

    fn base(&mut self) -> Result<MultiPoly<R>> {
        let at = self.offset();
        match self.bump() {
            Tok::Int(n) => {
                let value = self.constant(self.ring.from_int(&n));
                // rational := integer '/' positive-integer
                if *self.peek() == Tok::Slash {
                    if let Tok::Int(d) = &self.toks[self.pos + 1].1 {
                        let d = d.clone();
                        let slash_at = self.offset();
                        self.bump();
                        self.bump();
                        if d == BigInt::from(0) {
                            return Err(Error::DivisionByZero);
                        }
                        let dv = self.constant(self.ring.from_int(&d));
                        if !self.ring.supports_division() {
                            return Err(Error::DivisionUnsupported { pos: slash_at });
                        }
                        if dv.is_zero() {
                            return Err(Error::DivisionByZero);
                        }
                        return self.divide(value, &dv, slash_at);
                    }
                }
                Ok(value)
            }
            Tok::Ident(name) => {
                if self.vars.contains(&name.as_str()) {
                    Ok(MultiPoly::var(self.ring, &name))
                } else if self.ring.parameter() == Some(name.as_str()) {
                    Ok(self.constant(self.ring.parameter_element().unwrap()))
                } else {
                    Err(Error::UnknownSymbol(name))
                }
            }
            Tok::LParen => {
                let inner = self.expr()?;
                if self.bump() != Tok::RParen {
                    self.pos -= 1;
                    return self.err("expected ')'");
                }
                Ok(inner)
            }
            Tok::End => Err(Error::Syntax { pos: at, msg: "unexpected end of input".into() }),
            other => Err(Error::Syntax { pos: at, msg: format!("unexpected token {other:?}") }),
        }
    }
}

/// Parses `text` into a polynomial in the declared `vars` over `ring`.
pub fn parse_poly<R: Ring>(text: &str, ring: &R, vars: &[&str]) -> Result<MultiPoly<R>> {
    let toks = tokenize(text)?;
    let mut p = Parser { toks, pos: 0, ring, vars };
    let out = p.expr()?;
    if *p.peek() != Tok::End {
        return p.err("unexpected trailing input");
    }
    let declared: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
    Ok(out.with_vars(&declared))
}

/// Parses a univariate polynomial in `var`.
pub fn parse_univariate<F: Field>(text: &str, field: &F, var: &str) -> Result<UniPoly<F>> {
    UniPoly::from_multi(&parse_poly(text, field, &[var])?, var)
}

/// Parses a constant of the ring (a rational, a residue, or a parameter
/// expression in a function field).
pub fn parse_element<R: Ring>(text: &str, ring: &R) -> Result<R::Element> {
    parse_poly(text, ring, &[])?.as_constant().ok_or_else(|| Error::Internal("constant expected".into()))
}

/// Canonical text: graded-lex descending terms, re-parseable.
pub fn format_poly<R: Ring>(p: &MultiPoly<R>) -> String {
    dense::join_terms(p.ring(), p.terms().map(|(m, c)| (c, p.monomial_text(m))))
}
