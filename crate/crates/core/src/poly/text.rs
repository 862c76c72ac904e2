//! Parser for the polynomial text grammar.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' INT)?
//! atom   := RATIONAL | 'x' DIGIT | 'e' DIGIT+ | '(' expr ')'
//! ```
//!
//! `RATIONAL` is `p` or `p/q`. Juxtaposition is rejected: `2x1` and `x1x2`
//! are errors, write `2*x1` and `x1*x2`. A blade `e21` is read as the product
//! `e2*e1`.

use crate::clifford::{blade_product, Blade, Multivector};
use crate::error::{Error, Result};
use crate::poly::{CliffordPolynomial, ScalarPoly};
use crate::scalar::Scalar;

/// Parses a polynomial in `x_0, …, x_dim` with blades of `R_{0,dim}`.
pub fn parse_polynomial<S: Scalar>(text: &str, dim: usize) -> Result<CliffordPolynomial<S>> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        dim,
    };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.err("unexpected trailing input (juxtaposition is not allowed)"));
    }
    Ok(out)
}

/// Parses a constant multivector such as `3/2 + 1*e1 - 2*e12`.
pub fn parse_multivector<S: Scalar>(text: &str, dim: usize) -> Result<Multivector<S>> {
    parse_polynomial::<S>(text, dim)?.as_constant().ok_or(Error::Parse {
        pos: 0,
        msg: "expected a constant multivector, found variables".into(),
    })
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    dim: usize,
}

impl Parser<'_> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
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

    fn digits(&mut self) -> &str {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits")
    }

    fn expr<S: Scalar>(&mut self) -> Result<CliffordPolynomial<S>> {
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == b'+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term<S: Scalar>(&mut self) -> Result<CliffordPolynomial<S>> {
        let mut acc = self.unary()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let rhs = self.unary()?;
            acc = &acc * &rhs;
        }
        Ok(acc)
    }

    fn unary<S: Scalar>(&mut self) -> Result<CliffordPolynomial<S>> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(self.unary::<S>()?.neg())
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power<S: Scalar>(&mut self) -> Result<CliffordPolynomial<S>> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let digits = self.digits();
            if digits.is_empty() {
                return Err(self.err("expected a non-negative integer exponent after `^`"));
            }
            let k: u32 = digits.parse().map_err(|_| self.err("exponent too large"))?;
            return Ok(base.pow(k));
        }
        Ok(base)
    }

    fn atom<S: Scalar>(&mut self) -> Result<CliffordPolynomial<S>> {
        let nvars = self.dim + 1;
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.digits().to_string();
                let mut lit = num;
                if self.src.get(self.pos) == Some(&b'/') {
                    self.pos += 1;
                    let den = self.digits();
                    if den.is_empty() {
                        return Err(self.err("expected a denominator after `/`"));
                    }
                    if den.bytes().all(|b| b == b'0') {
                        return Err(self.err("zero denominator"));
                    }
                    lit = format!("{lit}/{den}");
                }
                let value: S = lit.parse().map_err(|_| self.err(format!("bad number `{lit}`")))?;
                Ok(CliffordPolynomial::from_scalar_poly(
                    self.dim,
                    Blade::SCALAR,
                    ScalarPoly::constant(nvars, value),
                ))
            }
            Some(b'x') => {
                self.pos += 1;
                let Some(&c) = self.src.get(self.pos).filter(|c| c.is_ascii_digit()) else {
                    return Err(self.err("expected a digit after `x`"));
                };
                self.pos += 1;
                let i = (c - b'0') as usize;
                if i > self.dim {
                    return Err(Error::Parse {
                        pos: self.pos - 2,
                        msg: format!("variable x{i} outside x0..x{}", self.dim),
                    });
                }
                Ok(CliffordPolynomial::var(self.dim, i))
            }
            Some(b'e') => {
                let start = self.pos;
                self.pos += 1;
                let digits = self.digits().to_string();
                if digits.is_empty() {
                    return Err(self.err("expected blade indices after `e`"));
                }
                let mut sign = 1i8;
                let mut blade = Blade::SCALAR;
                if digits != "0" {
                    for ch in digits.bytes() {
                        let i = (ch - b'0') as usize;
                        if i == 0 || i > self.dim {
                            return Err(Error::Parse {
                                pos: start,
                                msg: format!("blade index {i} outside 1..{}", self.dim),
                            });
                        }
                        let (s, b) = blade_product(blade, Blade::generator(i));
                        sign *= s;
                        blade = b;
                    }
                }
                let one = if sign > 0 { S::one() } else { -S::one() };
                Ok(CliffordPolynomial::from_scalar_poly(
                    self.dim,
                    blade,
                    ScalarPoly::constant(nvars, one),
                ))
            }
            Some(c) => Err(self.err(format!("unexpected character `{}`", c as char))),
            None => Err(self.err("unexpected end of input")),
        }
    }
}
