//! Recursive-descent parser for the polynomial grammar
//!
//! ```text
//! expr   := ('+'|'-')? term (('+'|'-') term)*
//! term   := coeff ('*' factor)* | factor ('*' factor)*
//! factor := var ('^' nat)?
//! coeff  := int ('/' posint)?
//! ```

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Ctx, Monomial, MultiPoly};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

fn syntax(pos: usize, msg: impl Into<String>) -> Error {
    Error::Syntax { pos, msg: msg.into() }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let start = i;
        match b {
            b' ' | b'\t' | b'\r' | b'\n' => {
                i += 1;
                continue;
            }
            b'+' => out.push((start, Tok::Plus)),
            b'-' => out.push((start, Tok::Minus)),
            b'*' => out.push((start, Tok::Star)),
            b'/' => out.push((start, Tok::Slash)),
            b'^' => out.push((start, Tok::Caret)),
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n = text[start..i].parse().expect("digits");
                out.push((start, Tok::Int(n)));
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().unwrap();
                return Err(syntax(start, format!("unexpected character `{ch}`")));
            }
        }
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
    ctx: &'a Ctx,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.at).map(|(_, t)| t.clone());
        self.at += 1;
        t
    }

    fn expr(&mut self) -> Result<Vec<(Monomial, BigRational)>> {
        let mut terms = Vec::new();
        let mut sign = match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                -BigRational::one()
            }
            Some(Tok::Plus) => {
                self.bump();
                BigRational::one()
            }
            _ => BigRational::one(),
        };
        loop {
            let (m, c) = self.term()?;
            terms.push((m, c * sign));
            sign = match self.peek() {
                Some(Tok::Plus) => BigRational::one(),
                Some(Tok::Minus) => -BigRational::one(),
                None => break,
                Some(_) => return Err(syntax(self.pos(), "expected `+`, `-` or end of input")),
            };
            self.bump();
        }
        Ok(terms)
    }

    fn term(&mut self) -> Result<(Monomial, BigRational)> {
        let mut mono = Monomial::one(self.ctx.len());
        let coeff = match self.peek() {
            Some(Tok::Int(_)) => self.coeff()?,
            Some(Tok::Ident(_)) => {
                mono = mono.mul(&self.factor()?)?;
                BigRational::one()
            }
            _ => return Err(syntax(self.pos(), "expected a coefficient or a variable")),
        };
        while let Some(Tok::Star) = self.peek() {
            self.bump();
            mono = mono.mul(&self.factor()?)?;
        }
        Ok((mono, coeff))
    }

    fn coeff(&mut self) -> Result<BigRational> {
        let Some(Tok::Int(num)) = self.bump() else { unreachable!() };
        if let Some(Tok::Slash) = self.peek() {
            self.bump();
            let pos = self.pos();
            match self.bump() {
                Some(Tok::Int(den)) if !den.is_zero() => Ok(BigRational::new(num, den)),
                Some(Tok::Int(_)) => Err(syntax(pos, "zero denominator")),
                _ => Err(syntax(pos, "expected a positive integer denominator")),
            }
        } else {
            Ok(BigRational::from_integer(num))
        }
    }

    fn factor(&mut self) -> Result<Monomial> {
        let pos = self.pos();
        let name = match self.bump() {
            Some(Tok::Ident(n)) => n,
            _ => return Err(syntax(pos, "expected a variable")),
        };
        let idx = self.ctx.index_of(&name).ok_or(Error::UnknownVariable(name))?;
        let mut exp = 1u32;
        if let Some(Tok::Caret) = self.peek() {
            self.bump();
            let pos = self.pos();
            exp = match self.bump() {
                Some(Tok::Int(n)) => u32::try_from(n).map_err(|_| Error::ExponentOverflow)?,
                _ => return Err(syntax(pos, "expected a natural-number exponent")),
            };
        }
        let mut e = vec![0; self.ctx.len()];
        e[idx] = exp;
        Ok(Monomial::from_exponents(e))
    }
}

/// Parses `text` into a polynomial over `ctx`.
pub fn parse_poly(text: &str, ctx: &Ctx) -> Result<MultiPoly> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(syntax(0, "empty polynomial"));
    }
    let mut p = Parser { toks, at: 0, end: text.len(), ctx };
    let terms = p.expr()?;
    Ok(MultiPoly::from_terms(ctx, terms))
}
