//! Recursive-descent parser for the polynomial text grammar.
//!
//! Grammar: integer literals (optionally `a/b` fractions in engine output),
//! variable identifiers `[A-Za-z][A-Za-z0-9_']*`, operators `+ - * ^`,
//! parentheses; whitespace insignificant.

use num_bigint::BigInt;

use super::coeff::Coefficient;
use super::poly::Poly;
use super::ring::Ring;
use crate::error::{Error, Result};

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    current: Option<Token>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Result<Self> {
        let mut lx = Lexer {
            chars: text.chars().peekable(),
            current: None,
        };
        lx.advance()?;
        Ok(lx)
    }

    fn advance(&mut self) -> Result<()> {
        while matches!(self.chars.peek(), Some(c) if c.is_whitespace()) {
            self.chars.next();
        }
        let c = match self.chars.peek() {
            None => {
                self.current = None;
                return Ok(());
            }
            Some(&c) => c,
        };
        let tok = match c {
            '+' => {
                self.chars.next();
                Token::Plus
            }
            '-' => {
                self.chars.next();
                Token::Minus
            }
            '*' => {
                self.chars.next();
                Token::Star
            }
            '^' => {
                self.chars.next();
                Token::Caret
            }
            '/' => {
                self.chars.next();
                Token::Slash
            }
            '(' => {
                self.chars.next();
                Token::LParen
            }
            ')' => {
                self.chars.next();
                Token::RParen
            }
            c if c.is_ascii_digit() => {
                let mut s = String::new();
                while matches!(self.chars.peek(), Some(c) if c.is_ascii_digit()) {
                    s.push(self.chars.next().unwrap());
                }
                Token::Int(s.parse().expect("digits"))
            }
            c if c.is_ascii_alphabetic() => {
                let mut s = String::new();
                while matches!(self.chars.peek(), Some(&c)
                    if c.is_ascii_alphanumeric() || c == '_' || c == '\'')
                {
                    s.push(self.chars.next().unwrap());
                }
                Token::Ident(s)
            }
            other => return Err(Error::Syntax(format!("unexpected character `{}`", other))),
        };
        self.current = Some(tok);
        Ok(())
    }
}

struct Parser<'a> {
    lexer: Lexer<'a>,
    ring: &'a Ring,
}

impl<'a> Parser<'a> {
    fn expr(&mut self) -> Result<Poly> {
        let mut acc = match self.lexer.current {
            Some(Token::Minus) => {
                self.lexer.advance()?;
                self.term()?.neg()
            }
            Some(Token::Plus) => {
                self.lexer.advance()?;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.lexer.current {
                Some(Token::Plus) => {
                    self.lexer.advance()?;
                    acc = acc.add(&self.term()?)?;
                }
                Some(Token::Minus) => {
                    self.lexer.advance()?;
                    acc = acc.sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.power()?;
        while self.lexer.current == Some(Token::Star) {
            self.lexer.advance()?;
            acc = acc.mul(&self.power()?)?;
        }
        Ok(acc)
    }

    /// Like `term`, but reports the top-level factors of the product.
    fn term_factors(&mut self) -> Result<(Poly, Vec<Poly>)> {
        let mut factors = vec![self.power()?];
        while self.lexer.current == Some(Token::Star) {
            self.lexer.advance()?;
            factors.push(self.power()?);
        }
        let mut acc = Poly::one(self.ring);
        for f in &factors {
            acc = acc.mul(f)?;
        }
        Ok((acc, factors))
    }

    fn power(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if self.lexer.current == Some(Token::Caret) {
            self.lexer.advance()?;
            let mut negative = false;
            if self.lexer.current == Some(Token::Minus) {
                negative = true;
                self.lexer.advance()?;
            }
            match self.lexer.current.take() {
                Some(Token::Int(n)) => {
                    self.lexer.advance()?;
                    if negative {
                        return Err(Error::NegativeExponent);
                    }
                    let e: u32 = n
                        .try_into()
                        .map_err(|_| Error::Syntax("exponent too large".into()))?;
                    Ok(base.pow(e))
                }
                _ => Err(Error::Syntax("expected integer exponent after `^`".into())),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Poly> {
        match self.lexer.current.take() {
            Some(Token::Int(n)) => {
                self.lexer.advance()?;
                // Allow `a/b` rational literals (engine output round-trips).
                if self.lexer.current == Some(Token::Slash) {
                    self.lexer.advance()?;
                    match self.lexer.current.take() {
                        Some(Token::Int(d)) => {
                            self.lexer.advance()?;
                            let num = Coefficient::from_bigint(n, self.ring.domain());
                            let den = Coefficient::from_bigint(d, self.ring.domain());
                            let c = num.div(&den, self.ring.domain())?;
                            return Ok(Poly::constant(self.ring, c));
                        }
                        _ => return Err(Error::Syntax("expected integer after `/`".into())),
                    }
                }
                Ok(Poly::constant(
                    self.ring,
                    Coefficient::from_bigint(n, self.ring.domain()),
                ))
            }
            Some(Token::Ident(name)) => {
                self.lexer.advance()?;
                match self.ring.var_index(&name) {
                    Some(idx) => Ok(Poly::var(self.ring, idx)),
                    None => Err(Error::UnknownVariable(name)),
                }
            }
            Some(Token::LParen) => {
                self.lexer.advance()?;
                let inner = self.expr()?;
                if self.lexer.current != Some(Token::RParen) {
                    return Err(Error::Syntax("expected `)`".into()));
                }
                self.lexer.advance()?;
                Ok(inner)
            }
            Some(Token::Minus) => {
                self.lexer.advance()?;
                Ok(self.atom()?.neg())
            }
            other => Err(Error::Syntax(format!("unexpected token {:?}", other))),
        }
    }
}

/// Parse an expression into a canonical polynomial.
pub fn parse_poly(text: &str, ring: &Ring) -> Result<Poly> {
    let mut p = Parser {
        lexer: Lexer::new(text)?,
        ring,
    };
    let poly = p.expr()?;
    if p.lexer.current.is_some() {
        return Err(Error::Syntax(format!(
            "trailing input after expression: {:?}",
            p.lexer.current
        )));
    }
    Ok(poly)
}

/// Parse an expression and report the factors visible at the top level of
/// the product syntax (used as component-splitting hints). A non-product
/// expression yields itself as the single factor.
pub fn parse_poly_factors(text: &str, ring: &Ring) -> Result<(Poly, Vec<Poly>)> {
    let mut p = Parser {
        lexer: Lexer::new(text)?,
        ring,
    };
    // Only a bare (possibly negated) product exposes factors.
    let leading_minus = p.lexer.current == Some(Token::Minus);
    if leading_minus {
        p.lexer.advance()?;
    }
    let (poly, factors) = p.term_factors()?;
    if p.lexer.current.is_some() {
        // A sum: reparse from scratch as a plain expression.
        let full = parse_poly(text, ring)?;
        return Ok((full.clone(), vec![full]));
    }
    let poly = if leading_minus { poly.neg() } else { poly };
    Ok((poly, factors))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn breakpoint_generator() {
        let ring = Ring::rational(&["y1", "y2", "x1", "x2"]);
        let p = parse_poly("y1*x1 + y2*x2", &ring).unwrap();
        assert_eq!(p.num_terms(), 2);
        assert_eq!(p.total_degree(), 2);
    }

    #[test]
    fn zero_literal() {
        let ring = Ring::rational(&["x"]);
        assert!(parse_poly("0", &ring).unwrap().is_zero());
    }

    #[test]
    fn algebraic_identity_collapses() {
        let ring = Ring::rational(&["x"]);
        let p = parse_poly("(x+1)^2 - x^2 - 2*x", &ring).unwrap();
        assert_eq!(p, Poly::from_int(&ring, 1));
    }

    #[test]
    fn unknown_variable() {
        let ring = Ring::rational(&["x"]);
        assert_eq!(
            parse_poly("x + z", &ring),
            Err(Error::UnknownVariable("z".into()))
        );
    }

    #[test]
    fn negative_exponent_rejected() {
        let ring = Ring::rational(&["x"]);
        assert_eq!(parse_poly("x^-2", &ring), Err(Error::NegativeExponent));
    }

    #[test]
    fn malformed_rejected() {
        let ring = Ring::rational(&["x"]);
        assert!(parse_poly("x + * 2", &ring).is_err());
        assert!(parse_poly("(x", &ring).is_err());
    }

    #[test]
    fn factors_of_explicit_product() {
        let ring = Ring::rational(&["x", "y"]);
        let (p, factors) = parse_poly_factors("(x - y)*(x + y)", &ring).unwrap();
        assert_eq!(p, parse_poly("x^2 - y^2", &ring).unwrap());
        assert_eq!(factors.len(), 2);
        assert_eq!(factors[0], parse_poly("x - y", &ring).unwrap());
    }

    #[test]
    fn factors_of_sum_is_whole() {
        let ring = Ring::rational(&["x", "y"]);
        let (_, factors) = parse_poly_factors("x*y + 1", &ring).unwrap();
        assert_eq!(factors.len(), 1);
    }
}
