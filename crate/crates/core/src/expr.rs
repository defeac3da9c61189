//! A small arithmetic expression grammar shared by scalar and algebra-element parsing.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | identifier | '(' expr ')'
//! ```
//! Identifiers are `[A-Za-z_][A-Za-z0-9_.]*`.

use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{message} at offset {offset} in {input:?}")]
pub struct ExprError {
    pub input: String,
    pub offset: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    Var(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
}

fn tokenize(input: &str) -> Result<Vec<(usize, Tok)>, ExprError> {
    let bytes: Vec<char> = input.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = bytes[start..i].iter().collect();
            out.push((start, Tok::Int(s.parse().expect("digits"))));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == '_' || bytes[i] == '.') {
                i += 1;
            }
            out.push((start, Tok::Ident(bytes[start..i].iter().collect())));
        } else if "+-*/^()".contains(c) {
            out.push((i, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(ExprError {
                input: input.to_string(),
                offset: i,
                message: format!("unexpected character {c:?}"),
            });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    input: &'a str,
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, message: impl Into<String>) -> ExprError {
        let offset = self.toks.get(self.pos).map_or(self.input.len(), |t| t.0);
        ExprError {
            input: self.input.to_string(),
            offset,
            message: message.into(),
        }
    }

    fn peek_sym(&self) -> Option<char> {
        match self.toks.get(self.pos) {
            Some((_, Tok::Sym(c))) => Some(*c),
            _ => None,
        }
    }

    fn expr(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.term()?;
        while let Some(c @ ('+' | '-')) = self.peek_sym() {
            self.pos += 1;
            let rhs = self.term()?;
            lhs = if c == '+' {
                Expr::Add(Box::new(lhs), Box::new(rhs))
            } else {
                Expr::Sub(Box::new(lhs), Box::new(rhs))
            };
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.unary()?;
        while let Some(c @ ('*' | '/')) = self.peek_sym() {
            self.pos += 1;
            let rhs = self.unary()?;
            lhs = if c == '*' {
                Expr::Mul(Box::new(lhs), Box::new(rhs))
            } else {
                Expr::Div(Box::new(lhs), Box::new(rhs))
            };
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, ExprError> {
        if self.peek_sym() == Some('-') {
            self.pos += 1;
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ExprError> {
        let base = self.atom()?;
        if self.peek_sym() == Some('^') {
            self.pos += 1;
            match self.toks.get(self.pos) {
                Some((_, Tok::Int(n))) => {
                    let k: u32 = n.try_into().map_err(|_| self.err("exponent too large"))?;
                    self.pos += 1;
                    return Ok(Expr::Pow(Box::new(base), k));
                }
                _ => return Err(self.err("expected a nonnegative integer exponent")),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, ExprError> {
        match self.toks.get(self.pos).cloned() {
            Some((_, Tok::Int(n))) => {
                self.pos += 1;
                Ok(Expr::Int(n))
            }
            Some((_, Tok::Ident(s))) => {
                self.pos += 1;
                Ok(Expr::Var(s))
            }
            Some((_, Tok::Sym('('))) => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek_sym() != Some(')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            _ => Err(self.err("expected a number, identifier or '('")),
        }
    }
}

pub fn parse(input: &str) -> Result<Expr, ExprError> {
    let toks = tokenize(input)?;
    let mut p = Parser { input, toks, pos: 0 };
    if p.toks.is_empty() {
        return Err(p.err("empty expression"));
    }
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}

/// Target of expression evaluation.
pub trait ExprRing {
    type Value: Clone;
    fn int(&self, n: &BigInt) -> Result<Self::Value, String>;
    fn var(&self, name: &str) -> Result<Self::Value, String>;
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn sub(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn neg(&self, a: &Self::Value) -> Self::Value;
    fn div(&self, a: &Self::Value, b: &Self::Value) -> Result<Self::Value, String>;
    fn one(&self) -> Self::Value;
}

pub fn eval<R: ExprRing>(ring: &R, e: &Expr) -> Result<R::Value, String> {
    Ok(match e {
        Expr::Int(n) => ring.int(n)?,
        Expr::Var(v) => ring.var(v)?,
        Expr::Neg(a) => ring.neg(&eval(ring, a)?),
        Expr::Add(a, b) => ring.add(&eval(ring, a)?, &eval(ring, b)?),
        Expr::Sub(a, b) => ring.sub(&eval(ring, a)?, &eval(ring, b)?),
        Expr::Mul(a, b) => ring.mul(&eval(ring, a)?, &eval(ring, b)?),
        Expr::Div(a, b) => ring.div(&eval(ring, a)?, &eval(ring, b)?)?,
        Expr::Pow(a, k) => {
            let base = eval(ring, a)?;
            let mut acc = ring.one();
            for _ in 0..*k {
                acc = ring.mul(&acc, &base);
            }
            acc
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence() {
        let e = parse("-z^2+3*w").unwrap();
        let expected = Expr::Add(
            Box::new(Expr::Neg(Box::new(Expr::Pow(Box::new(Expr::Var("z".into())), 2)))),
            Box::new(Expr::Mul(
                Box::new(Expr::Int(3.into())),
                Box::new(Expr::Var("w".into())),
            )),
        );
        assert_eq!(e, expected);
    }

    #[test]
    fn errors_carry_offsets() {
        let err = parse("g1 + ").unwrap_err();
        assert_eq!(err.offset, 5);
        let err = parse("g1 $ 2").unwrap_err();
        assert_eq!(err.offset, 3);
        assert!(parse("(x").is_err());
        assert!(parse("x^y").is_err());
    }
}
