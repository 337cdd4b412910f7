//! A small parser for polynomial text such as `x1^2 - 1/2*x2*x3`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::MultiPoly;
use crate::scalar::Scalar;

pub fn parse_poly(num_vars: usize, text: &str) -> Result<MultiPoly> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, num_vars };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(out)
}

/// Parses a whole tuple of forms, e.g. `["x1*x2", "x1^2"]`.
pub fn parse_polys(num_vars: usize, texts: &[&str]) -> Result<Vec<MultiPoly>> {
    texts.iter().map(|t| parse_poly(num_vars, t)).collect()
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    num_vars: usize,
}

impl Parser<'_> {
    fn error(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at byte {}", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == b'+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    acc = &acc * &rhs;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let d = self.integer()?;
                    if d.is_zero() {
                        return Err(self.error("division by zero"));
                    }
                    acc = acc.scale_by(&Scalar::new(1.into(), d));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<MultiPoly> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.integer()?;
            let e: u32 = e.try_into().map_err(|_| self.error("exponent out of range"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MultiPoly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b'x') => {
                self.pos += 1;
                let idx = self.integer()?;
                let idx: usize = idx.try_into().map_err(|_| self.error("bad variable index"))?;
                if idx == 0 || idx > self.num_vars {
                    return Err(self.error(&format!("variable x{idx} out of range")));
                }
                Ok(MultiPoly::var(self.num_vars, idx - 1))
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(MultiPoly::constant(self.num_vars, Scalar::from_integer(n)))
            }
            _ => Err(self.error("expected a number, variable or '('")),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(digits.parse().unwrap())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::frac;

    #[test]
    fn round_trips_printed_text() {
        for text in ["x1*x2", "x1^2 - x2^2", "-1/2*x1^2 + 3*x2 - 1", "x2^2 + x3^2 + x4^2"] {
            let p = parse_poly(4, text).unwrap();
            assert_eq!(p.to_text(), text);
        }
    }

    #[test]
    fn parentheses_and_powers() {
        let p = parse_poly(2, "(x1 + x2)^2").unwrap();
        assert_eq!(p.to_text(), "x1^2 + 2*x1*x2 + x2^2");
        let q = parse_poly(2, "x1/4").unwrap();
        assert_eq!(q.coefficient(&[1, 0]), frac(1, 4));
    }

    #[test]
    fn errors_carry_positions() {
        assert!(matches!(parse_poly(2, "x3"), Err(Error::Parse(_))));
        assert!(matches!(parse_poly(2, "x1 +"), Err(Error::Parse(_))));
        assert!(matches!(parse_poly(2, "x1/0"), Err(Error::Parse(_))));
    }
}
