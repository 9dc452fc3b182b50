//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr     := '-'? term (('+'|'-') term)*
//! term     := factor ('*' factor)*
//! factor   := base ('^' nat)?
//! base     := rational | ident | '(' expr ')'
//! rational := int ('/' nat)?
//! ident    := letter (letter | digit | '_')*
//! ```

use num_bigint::BigInt;
use num_traits::Zero;

use super::polynomial::{Polynomial, VariableSet};
use crate::error::{Error, Result};
use crate::linalg::Scalar;

pub fn parse(text: &str, vars: &VariableSet) -> Result<Polynomial> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        vars,
    };
    let f = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("operator or end of input"));
    }
    Ok(f)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: &'a VariableSet,
}

impl Parser<'_> {
    fn error(&self, expected: &str) -> Error {
        Error::Syntax {
            position: self.pos,
            expected: expected.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn nvars(&self) -> usize {
        self.vars.len()
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let negate = self.eat(b'-');
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            if self.eat(b'+') {
                acc = acc.add(&self.term()?);
            } else if self.eat(b'-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.base()?;
        if self.eat(b'^') {
            let e = self.nat()?;
            let e = u32::try_from(e).map_err(|_| self.error("exponent below 2^32"))?;
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }

    fn base(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("`)`"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.digits()?;
                let value = if self.eat(b'/') {
                    let den = self.nat()?;
                    if den.is_zero() {
                        return Err(self.error("nonzero denominator"));
                    }
                    Scalar::new(num, den)
                } else {
                    Scalar::from_integer(num)
                };
                Ok(Polynomial::constant(self.nvars(), value))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                self.vars.var(name)
            }
            _ => Err(self.error("number, variable or `(`")),
        }
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("digits"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        Ok(s.parse().expect("digit string"))
    }

    fn nat(&mut self) -> Result<BigInt> {
        self.digits()
    }
}
