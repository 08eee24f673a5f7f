//! A small infix parser for polynomials: `+ - * ^`, parentheses, integer or `a/b` literals.

use std::sync::Arc;

use crate::error::{AlgError, Result};
use crate::field::Field;
use crate::poly::{Polynomial, Ring};

/// Parses an expression such as `x2*y3 + x3*y2 - 3/2*u^2` over `ring`.
pub fn parse_poly<F: Field>(ring: &Arc<Ring<F>>, src: &str) -> Result<Polynomial<F>> {
    let tokens = tokenize(src)?;
    let mut p = Parser { ring, tokens, pos: 0 };
    let out = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(AlgError::Parse(format!("trailing input in `{src}`")));
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Op(char),
}

fn tokenize(src: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '/') {
                i += 1;
            }
            out.push(Tok::Num(chars[start..i].iter().collect()));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(AlgError::Parse(format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

struct Parser<'a, F: Field> {
    ring: &'a Arc<Ring<F>>,
    tokens: Vec<Tok>,
    pos: usize,
}

impl<F: Field> Parser<'_, F> {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial<F>> {
        let mut acc = if self.eat('-') { self.term()?.neg() } else { self.term()? };
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial<F>> {
        let mut acc = self.power()?;
        while self.eat('*') {
            acc = acc.mul(&self.power()?);
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Polynomial<F>> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.tokens.get(self.pos).cloned() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    let e: u32 = n.parse().map_err(|_| AlgError::Parse(format!("bad exponent `{n}`")))?;
                    Ok(base.pow(e))
                }
                _ => Err(AlgError::Parse("exponent must be a nonnegative integer".into())),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial<F>> {
        match self.tokens.get(self.pos).cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Polynomial::constant(self.ring, self.ring.field.parse(&n)?))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                Polynomial::var_named(self.ring, &name)
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(AlgError::Parse("missing `)`".into()));
                }
                Ok(e)
            }
            Some(Tok::Op('-')) => {
                self.pos += 1;
                Ok(self.power()?.neg())
            }
            other => Err(AlgError::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::monomial::MonomialOrder;

    #[test]
    fn parses_and_prints() {
        let r = Ring::new(PrimeField::new(5).unwrap(), &["x", "y"], MonomialOrder::Grevlex);
        let p = parse_poly(&r, "(x + y)^2 - 2*x*y").unwrap();
        assert_eq!(p, parse_poly(&r, "x^2 + y^2").unwrap());
        assert_eq!(parse_poly(&r, "1/2*x").unwrap(), parse_poly(&r, "3*x").unwrap());
        assert!(parse_poly(&r, "z").is_err());
    }
}
