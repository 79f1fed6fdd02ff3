//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := '-' factor | base ('^' uint)?
//! base   := rational | identifier | '(' expr ')'
//! ```
//!
//! Rationals are `123` or `123/456`; identifiers are `x`, `y`, `z`, `t`,
//! `alpha` and `lambda_k`. Unary minus binds looser than `^`, so `-x^2`
//! reads as `-(x^2)`.

use std::sync::Arc;

use num_bigint::BigInt;

use super::{Monomial, MPoly, Var};
use crate::arith::{AlgNum, NumberField, Rational, Ring, UPoly};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(Rational),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, column, message: message.into() }
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, col);
        if c == '\n' {
            line += 1;
            col = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        let simple = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(tok) = simple {
            out.push(Token { tok, line: l0, column: c0 });
            i += 1;
            col += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let num: BigInt = chars[start..i].iter().collect::<String>().parse().unwrap();
            let mut value = Rational::from_integer(num);
            if i < chars.len() && chars[i] == '/' {
                let slash_col = c0 + (i - start);
                i += 1;
                let dstart = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                if dstart == i {
                    return Err(err(l0, slash_col + 1, "expected an integer denominator after '/'"));
                }
                let den: BigInt = chars[dstart..i].iter().collect::<String>().parse().unwrap();
                if num_traits::Zero::is_zero(&den) {
                    return Err(err(l0, slash_col + 1, "zero denominator"));
                }
                value /= Rational::from_integer(den);
            }
            col += i - start;
            out.push(Token { tok: Tok::Num(value), line: l0, column: c0 });
            continue;
        }
        if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            col += i - start;
            let name: String = chars[start..i].iter().collect();
            out.push(Token { tok: Tok::Ident(name), line: l0, column: c0 });
            continue;
        }
        return Err(err(l0, c0, format!("unexpected character '{c}'")));
    }
    out.push(Token { tok: Tok::End, line, column: col });
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if t.tok != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<MPoly<Rational>> {
        let mut acc = self.term()?;
        loop {
            match self.peek().tok {
                Tok::Plus => {
                    self.bump();
                    acc = acc + self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MPoly<Rational>> {
        let mut acc = self.factor()?;
        while self.peek().tok == Tok::Star {
            self.bump();
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<MPoly<Rational>> {
        if self.peek().tok == Tok::Minus {
            self.bump();
            return Ok(-self.factor()?);
        }
        let base = self.base()?;
        if self.peek().tok == Tok::Caret {
            self.bump();
            let t = self.bump();
            let e = match &t.tok {
                Tok::Num(r) if r.is_integer() => {
                    u32::try_from(r.to_integer()).map_err(|_| err(t.line, t.column, "exponent too large"))?
                }
                _ => return Err(err(t.line, t.column, "expected a nonnegative integer exponent")),
            };
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<MPoly<Rational>> {
        let t = self.bump();
        match t.tok {
            Tok::Num(r) => Ok(MPoly::constant(r)),
            Tok::Ident(name) => match Var::from_name(&name) {
                Some(v) => Ok(MPoly::var(v)),
                None => Err(err(t.line, t.column, format!("unknown identifier `{name}`"))),
            },
            Tok::LParen => {
                let e = self.expr()?;
                let close = self.bump();
                if close.tok != Tok::RParen {
                    return Err(err(close.line, close.column, "expected ')'"));
                }
                Ok(e)
            }
            Tok::End => Err(err(t.line, t.column, "unexpected end of input")),
            other => Err(err(t.line, t.column, format!("unexpected token {other:?}"))),
        }
    }
}

/// Parses a polynomial with rational coefficients. The identifier `alpha`
/// is kept as an ordinary variable.
pub fn parse_poly(text: &str) -> Result<MPoly<Rational>> {
    let toks = tokenize(text)?;
    let mut p = Parser { toks, pos: 0 };
    let e = p.expr()?;
    let t = p.peek();
    if t.tok != Tok::End {
        return Err(err(t.line, t.column, "unexpected trailing input"));
    }
    Ok(e)
}

/// Parses a univariate polynomial in `t`.
pub fn parse_upoly(text: &str) -> Result<UPoly<Rational>> {
    let p = parse_poly(text)?;
    p.to_upoly(Var::T).ok_or_else(|| {
        let v = p.vars().into_iter().find(|v| *v != Var::T).unwrap_or(Var::X);
        Error::UnknownVariable(format!("{v} (only t is allowed here)"))
    })
}

/// Interprets `alpha` as the generator of `field`.
pub fn into_extension(p: &MPoly<Rational>, field: &Arc<NumberField>) -> MPoly<AlgNum> {
    let gen = field.generator();
    let mut out = MPoly::zero();
    for (m, c) in p.terms() {
        let (e, rest) = m.split_off(Var::ALPHA);
        let coeff = AlgNum::rational(c.clone()) * &gen.pow(e);
        out.add_term(rest, coeff);
    }
    out
}

/// Parses a polynomial over `field`, reading `alpha` as its generator.
pub fn parse_poly_ext(text: &str, field: &Arc<NumberField>) -> Result<MPoly<AlgNum>> {
    Ok(into_extension(&parse_poly(text)?, field))
}

/// Rewrites extension coefficients as polynomials in the variable `alpha`.
pub fn from_extension(p: &MPoly<AlgNum>) -> MPoly<Rational> {
    let mut out = MPoly::zero();
    for (m, c) in p.terms() {
        for (i, a) in c.poly().coeffs().iter().enumerate() {
            out.add_term(m.mul(&Monomial::var(Var::ALPHA, i as u32)), a.clone());
        }
    }
    out
}
