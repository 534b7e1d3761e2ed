//! Text format for polynomials.
//!
//! ```text
//! poly   := sign? term (sign term)*
//! term   := coeff ('*' factor)* | factor ('*' factor)*
//! coeff  := int ('/' int)?
//! factor := var ('^' int)?
//! ```
//! Variables are the ring's names (`x1`, `y3`, `t`, ...). Whitespace is ignored.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

use super::{Monomial, Polynomial, RingRef};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        match c {
            c if c.is_ascii_whitespace() => {
                i += 1;
                continue;
            }
            '+' => out.push((start, Tok::Plus)),
            '-' => out.push((start, Tok::Minus)),
            '*' => out.push((start, Tok::Star)),
            '^' => out.push((start, Tok::Caret)),
            '/' => out.push((start, Tok::Slash)),
            c if c.is_ascii_digit() => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let v: BigInt = text[start..i].parse().unwrap();
                out.push((start, Tok::Num(v)));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            other => {
                return Err(Error::Parse {
                    pos: start,
                    msg: format!("unexpected character {other:?}"),
                })
            }
        }
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    ring: &'a RingRef,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.offset(),
            msg: msg.into(),
        })
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn integer(&mut self) -> Result<BigInt> {
        match self.peek() {
            Some(Tok::Num(_)) => match self.next() {
                Some(Tok::Num(v)) => Ok(v),
                _ => unreachable!(),
            },
            _ => self.err("expected integer"),
        }
    }

    fn factor(&mut self, mono: &mut Monomial) -> Result<()> {
        let name = match self.peek() {
            Some(Tok::Ident(name)) => name.clone(),
            _ => return self.err("expected variable"),
        };
        let idx = match self.ring.var_index(&name) {
            Some(i) => i,
            None => return self.err(format!("unknown variable {name:?}")),
        };
        self.pos += 1;
        let mut e: u32 = 1;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            let v = self.integer()?;
            e = match u32::try_from(&v) {
                Ok(e) if e <= u16::MAX as u32 => e,
                _ => return self.err("exponent too large"),
            };
        }
        let slot = &mut mono.exps_mut()[idx];
        let total = *slot as u32 + e;
        if total > u16::MAX as u32 {
            return self.err("exponent too large");
        }
        *slot = total as u16;
        Ok(())
    }

    fn term(&mut self) -> Result<(Monomial, BigRational)> {
        let mut mono = self.ring.one_monomial();
        let mut coeff = BigRational::from_integer(1.into());
        let mut need_factor = false;
        match self.peek() {
            Some(Tok::Num(_)) => {
                let num = self.integer()?;
                let mut den = BigInt::from(1);
                if self.peek() == Some(&Tok::Slash) {
                    self.pos += 1;
                    den = self.integer()?;
                    if den.is_zero() {
                        return self.err("zero denominator");
                    }
                }
                coeff = BigRational::new(num, den);
                if self.peek() == Some(&Tok::Star) {
                    self.pos += 1;
                    need_factor = true;
                }
            }
            Some(Tok::Ident(_)) => need_factor = true,
            _ => return self.err("expected term"),
        }
        while need_factor {
            self.factor(&mut mono)?;
            need_factor = false;
            if self.peek() == Some(&Tok::Star) {
                self.pos += 1;
                need_factor = true;
            }
        }
        Ok((mono, coeff))
    }

    fn polynomial(&mut self) -> Result<Vec<(Monomial, BigRational)>> {
        let mut terms = Vec::new();
        let mut negative = false;
        match self.peek() {
            Some(Tok::Minus) => {
                negative = true;
                self.pos += 1;
            }
            Some(Tok::Plus) => self.pos += 1,
            None => return self.err("empty polynomial"),
            _ => {}
        }
        loop {
            let (m, c) = self.term()?;
            terms.push((m, if negative { -c } else { c }));
            match self.peek() {
                None => break,
                Some(Tok::Plus) => negative = false,
                Some(Tok::Minus) => negative = true,
                Some(_) => return self.err("expected '+' or '-'"),
            }
            self.pos += 1;
        }
        Ok(terms)
    }
}

pub fn parse_polynomial(text: &str, ring: &RingRef) -> Result<Polynomial> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.len(),
        ring,
    };
    let raw = p.polynomial()?;
    let field = ring.field();
    let mut terms = Vec::with_capacity(raw.len());
    for (m, c) in raw {
        let c = field.element(&c)?;
        terms.push((m, c));
    }
    Ok(Polynomial::from_terms(ring, terms))
}
