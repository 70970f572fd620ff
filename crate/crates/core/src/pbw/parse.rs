//! Text input for algebra elements.
//!
//! Grammar (whitespace is insignificant except as a separator):
//!
//! ```text
//! expr    := product (('+' | '-') product)*
//! product := power (('*' | '/' | <juxtaposition>) power)*
//! power   := '-' power | atom ('^' integer)?
//! atom    := integer | 'f' | 'q' | 'h' | 'z' | 'p' | 'e' | '(' expr ')'
//! ```
//!
//! Division is only by nonzero scalars, so `3/2*h` reads as expected.


use super::{AlgebraElement, Generator, Monomial};
use crate::error::{Error, Result};
use crate::Scalar;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(String),
    Gen(Generator),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        i += 1;
        let tok = match c {
            c if c.is_whitespace() => continue,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            d if d.is_ascii_digit() => {
                let mut s = d.to_string();
                while i < chars.len() && chars[i].1.is_ascii_digit() {
                    s.push(chars[i].1);
                    i += 1;
                }
                Tok::Int(s)
            }
            c => match Generator::from_symbol(c) {
                Some(g) => Tok::Gen(g),
                None => {
                    return Err(Error::Parse {
                        position: pos,
                        message: format!("unexpected character '{c}'"),
                    })
                }
            },
        };
        out.push((pos, tok));
    }
    Ok(out)
}

struct Parser<'a> {
    toks: &'a [(usize, Tok)],
    at: usize,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.1)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |t| t.0)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse { position: self.pos(), message: message.into() })
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.at).map(|t| t.1.clone());
        self.at += 1;
        t
    }

    fn expr<S: Scalar>(&mut self) -> Result<AlgebraElement<S>> {
        let mut acc = self.product()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = acc + self.product()?;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = acc - self.product()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn product<S: Scalar>(&mut self) -> Result<AlgebraElement<S>> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    acc = acc.multiply(&self.power()?);
                }
                Some(Tok::Slash) => {
                    self.bump();
                    let at = self.pos();
                    let d: AlgebraElement<S> = self.power()?;
                    let c = scalar_value(&d).filter(|c| !c.is_zero()).ok_or(Error::Parse {
                        position: at,
                        message: "divisor must be a nonzero scalar".into(),
                    })?;
                    acc = acc.scale(&(S::one() / c));
                }
                Some(Tok::Int(_)) | Some(Tok::Gen(_)) | Some(Tok::LParen) => {
                    acc = acc.multiply(&self.power()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power<S: Scalar>(&mut self) -> Result<AlgebraElement<S>> {
        if self.peek() == Some(&Tok::Minus) {
            self.bump();
            return Ok(-self.power()?);
        }
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.bump();
        match self.bump() {
            Some(Tok::Int(s)) => match s.parse::<u32>() {
                Ok(n) => Ok(base.pow(n)),
                Err(_) => {
                    self.at -= 1;
                    self.err("exponent too large")
                }
            },
            _ => {
                self.at -= 1;
                self.err("expected a nonnegative integer exponent")
            }
        }
    }

    fn atom<S: Scalar>(&mut self) -> Result<AlgebraElement<S>> {
        match self.peek().cloned() {
            Some(Tok::Int(s)) => {
                let v = S::parse_exact(&s);
                match v {
                    Some(v) => {
                        self.bump();
                        Ok(AlgebraElement::scalar(v))
                    }
                    None => self.err("integer literal out of range"),
                }
            }
            Some(Tok::Gen(g)) => {
                self.bump();
                Ok(AlgebraElement::generator(g))
            }
            Some(Tok::LParen) => {
                self.bump();
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.err("expected ')'");
                }
                self.bump();
                Ok(inner)
            }
            Some(_) => self.err("expected a number, generator or '('"),
            None => self.err("unexpected end of input"),
        }
    }
}

fn scalar_value<S: Scalar>(x: &AlgebraElement<S>) -> Option<S> {
    match x.degree() {
        None => Some(S::zero()),
        Some(0) => Some(x.coeff(&Monomial::ONE)),
        _ => None,
    }
}

/// Parse an expression over `f, q, h, z, p, e` into PBW normal form.
pub fn parse_element<S: Scalar>(src: &str) -> Result<AlgebraElement<S>> {
    let toks = lex(src)?;
    let mut p = Parser { toks: &toks, at: 0, end: src.len() };
    if toks.is_empty() {
        return p.err("empty expression");
    }
    let v = p.expr()?;
    if p.at < toks.len() {
        return p.err("unexpected trailing input");
    }
    Ok(v)
}
