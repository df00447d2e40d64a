//! Recursive-descent parser for expressions in q, t and z = q - q^-1.
//!
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/')? unary)*      juxtaposition multiplies
//! unary  := '-' unary | power
//! power  := atom ('^' exponent)?
//! atom   := integer | 'q' | 't' | 'z' | '(' expr ')'

use num_bigint::BigInt;

use super::ratfunc::RationalQT;
use super::Rational;
use crate::error::{KlmovError, Result};

pub fn parse_rational(input: &str) -> Result<RationalQT> {
    let mut p = Parser { chars: input.chars().filter(|c| !c.is_whitespace()).collect(), pos: 0 };
    let v = p.expr()?;
    if p.pos != p.chars.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(v)
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn error(&self, msg: &str) -> KlmovError {
        KlmovError::Parse(format!("{msg} at position {}", self.pos))
    }

    fn expr(&mut self) -> Result<RationalQT> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                '+' => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                '-' => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RationalQT> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                Some('/') => {
                    self.pos += 1;
                    let d = self.unary()?;
                    if d.is_zero() {
                        return Err(self.error("division by zero"));
                    }
                    acc = acc.div(&d).map_err(|_| self.error("divisor is not invertible in this ring"))?;
                }
                Some(c) if c == '(' || c.is_ascii_alphanumeric() => {
                    acc = &acc * &self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<RationalQT> {
        if self.peek() == Some('-') {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        if self.peek() == Some('+') {
            self.pos += 1;
        }
        self.power()
    }

    fn power(&mut self) -> Result<RationalQT> {
        let base = self.atom()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        let e = self.exponent()?;
        if e >= 0 {
            Ok(base.pow(e as u32))
        } else {
            let inv = base.inv().map_err(|_| self.error("negative power of a non-invertible base"))?;
            Ok(inv.pow(e.unsigned_abs() as u32))
        }
    }

    fn exponent(&mut self) -> Result<i64> {
        let paren = self.peek() == Some('(');
        if paren {
            self.pos += 1;
        }
        let neg = match self.peek() {
            Some('-') => {
                self.pos += 1;
                true
            }
            Some('+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let n = self.integer()?;
        let n: i64 = n.try_into().map_err(|_| self.error("exponent out of range"))?;
        if paren {
            if self.peek() != Some(')') {
                return Err(self.error("expected ')'"));
            }
            self.pos += 1;
        }
        Ok(if neg { -n } else { n })
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        Ok(s.parse().expect("digits parse"))
    }

    fn atom(&mut self) -> Result<RationalQT> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some('q') => {
                self.pos += 1;
                Ok(RationalQT::q_pow(1))
            }
            Some('t') => {
                self.pos += 1;
                Ok(RationalQT::t_pow(1))
            }
            Some('z') => {
                self.pos += 1;
                Ok(RationalQT::z())
            }
            Some(c) if c.is_ascii_digit() => Ok(RationalQT::constant(Rational::from_integer(self.integer()?))),
            _ => Err(self.error("expected q, t, z, a number or '('")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_rendered_output() {
        let x = parse_rational("1 + (t - t^-1)/(q - q^-1)").unwrap();
        let again = parse_rational(&x.to_string()).unwrap();
        assert_eq!(x, again);
    }

    #[test]
    fn z_and_implicit_products() {
        assert_eq!(parse_rational("z").unwrap(), parse_rational("q-q^(-1)").unwrap());
        assert_eq!(parse_rational("2q t").unwrap(), parse_rational("2*q*t").unwrap());
        assert_eq!(parse_rational("3/6").unwrap(), RationalQT::constant(Rational::new(1.into(), 2.into())));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_rational("q +").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1/(t-1)").is_err());
    }
}
