//! Parser for the polynomial expression language.
//!
//! ```text
//! expr   := sign? term (('+' | '-') term)*
//! term   := coeff? ('*'? factor)*          (at least one of the two)
//! factor := 'u' index? ('^' int)?          (index 1..d; required when d > 1)
//! coeff  := unsigned decimal integer
//! int    := '-'? unsigned decimal integer
//! ```
//!
//! Whitespace is insignificant. Coefficients are reduced mod p.

use crate::error::{Error, Result};
use crate::ffield::Prime;
use crate::laurent::LaurentPoly;

const EXPONENT_LIMIT: i64 = 1 << 31;

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    modulus: Prime,
    dim: usize,
}

fn syntax(offset: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        offset,
        message: message.into(),
    }
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn digits(&self) -> usize {
        self.bytes[self.pos..]
            .iter()
            .take_while(|b| b.is_ascii_digit())
            .count()
    }

    /// Unsigned decimal reduced mod p.
    fn coeff(&mut self) -> u64 {
        let p = self.modulus.get();
        let mut v = 0u64;
        while let Some(b) = self.bytes.get(self.pos).filter(|b| b.is_ascii_digit()) {
            v = (v * 10 + u64::from(b - b'0')) % p;
            self.pos += 1;
        }
        v
    }

    fn exponent(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        let negative = self.bytes.get(self.pos) == Some(&b'-');
        if negative {
            self.pos += 1;
            self.skip_ws();
        }
        let n = self.digits();
        if n == 0 {
            return Err(syntax(self.pos, "expected an integer exponent"));
        }
        let mut v: i64 = 0;
        for &b in &self.bytes[self.pos..self.pos + n] {
            v = v
                .checked_mul(10)
                .and_then(|v| v.checked_add(i64::from(b - b'0')))
                .filter(|v| *v <= EXPONENT_LIMIT)
                .ok_or_else(|| syntax(start, "exponent overflow"))?;
        }
        self.pos += n;
        Ok(if negative { -v } else { v })
    }

    /// Parses one `u`-factor and adds its exponent into `exps`.
    fn factor(&mut self, exps: &mut [i64]) -> Result<()> {
        let at = self.pos;
        self.pos += 1; // 'u'
        let n = self.digits();
        let var = if n > 0 {
            let text = std::str::from_utf8(&self.bytes[self.pos..self.pos + n]).expect("ascii");
            self.pos += n;
            let k: usize = text
                .parse()
                .map_err(|_| syntax(at, "variable index too large"))?;
            if k == 0 || k > self.dim {
                return Err(syntax(at, format!("variable u{k} outside 1..{}", self.dim)));
            }
            k - 1
        } else if self.dim == 1 {
            0
        } else {
            return Err(syntax(at, format!("expected a variable index 1..{}", self.dim)));
        };
        let e = if self.peek() == Some(b'^') {
            self.pos += 1;
            self.exponent()?
        } else {
            1
        };
        exps[var] = exps[var]
            .checked_add(e)
            .filter(|v| v.abs() <= EXPONENT_LIMIT)
            .ok_or_else(|| syntax(at, "exponent overflow"))?;
        Ok(())
    }

    fn term(&mut self) -> Result<(Vec<i64>, u64)> {
        let start = self.pos;
        let mut exps = vec![0; self.dim];
        let mut seen = false;
        let mut c = 1u64;
        if matches!(self.peek(), Some(b) if b.is_ascii_digit()) {
            c = self.coeff();
            seen = true;
        }
        loop {
            match self.peek() {
                Some(b'*') if seen => {
                    self.pos += 1;
                    if self.peek() != Some(b'u') {
                        return Err(syntax(self.pos, "expected a variable after '*'"));
                    }
                }
                Some(b'u') => {
                    self.factor(&mut exps)?;
                    seen = true;
                }
                _ => break,
            }
        }
        if !seen {
            self.skip_ws();
            return Err(syntax(self.pos.max(start), "expected a term"));
        }
        Ok((exps, c))
    }

    fn expr(&mut self) -> Result<LaurentPoly> {
        let p = self.modulus;
        let mut out = LaurentPoly::zero(p, self.dim);
        let mut negate = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            let (x, c) = self.term()?;
            out.insert_add(x, if negate { p.neg(c) } else { c });
            match self.peek() {
                None => break,
                Some(b'+') => negate = false,
                Some(b'-') => negate = true,
                Some(b) => {
                    return Err(syntax(self.pos, format!("unexpected '{}'", b as char)));
                }
            }
            self.pos += 1;
        }
        Ok(out)
    }
}

/// Parses `text` into a polynomial over F_p in `dim` variables.
pub fn parse_poly(text: &str, modulus: Prime, dim: usize) -> Result<LaurentPoly> {
    if dim == 0 {
        return Err(Error::ZeroDimension);
    }
    let mut parser = Parser {
        bytes: text.as_bytes(),
        pos: 0,
        modulus,
        dim,
    };
    parser.expr()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    #[test]
    fn reads_examples() {
        let f = parse_poly("1 + u + u^-1", p(2), 1).unwrap();
        assert_eq!(f, LaurentPoly::from_1d(p(2), &[(0, 1), (1, 1), (-1, 1)]));
        let f = parse_poly("2u^3 + 3", p(5), 1).unwrap();
        assert_eq!(f, LaurentPoly::from_1d(p(5), &[(3, 2), (0, 3)]));
        assert!(parse_poly("u + u", p(2), 1).unwrap().is_zero());
    }

    #[test]
    fn signs_and_whitespace() {
        let f = parse_poly(" - u ^ - 2 -1+ 7 u", p(5), 1).unwrap();
        assert_eq!(f, LaurentPoly::from_1d(p(5), &[(-2, -1), (0, -1), (1, 7)]));
        assert_eq!(parse_poly("0", p(3), 1).unwrap(), LaurentPoly::zero(p(3), 1));
        assert_eq!(parse_poly("12", p(5), 1).unwrap(), LaurentPoly::from_1d(p(5), &[(0, 2)]));
        assert_eq!(parse_poly("u1^2", p(5), 1).unwrap(), LaurentPoly::from_1d(p(5), &[(2, 1)]));
    }

    #[test]
    fn multivariate() {
        let f = parse_poly("2u1*u2^-1 + u2 + 3", p(5), 2).unwrap();
        let g = LaurentPoly::from_terms(p(5), 2, vec![(vec![1, -1], 2), (vec![0, 1], 1), (vec![0, 0], 3)]).unwrap();
        assert_eq!(f, g);
        assert_eq!(parse_poly("u1 u1", p(5), 2).unwrap(), parse_poly("u1^2", p(5), 2).unwrap());
        assert!(parse_poly("u", p(5), 2).is_err());
        assert!(parse_poly("u3", p(5), 2).is_err());
    }

    #[test]
    fn errors_carry_offsets() {
        assert_eq!(
            parse_poly("1 + ", p(3), 1),
            Err(Error::Syntax { offset: 4, message: "expected a term".into() })
        );
        assert!(matches!(parse_poly("1 $ u", p(3), 1), Err(Error::Syntax { offset: 2, .. })));
        assert!(matches!(parse_poly("u^", p(3), 1), Err(Error::Syntax { offset: 2, .. })));
        assert!(matches!(parse_poly("", p(3), 1), Err(Error::Syntax { offset: 0, .. })));
        assert!(matches!(parse_poly("u^99999999999", p(3), 1), Err(Error::Syntax { .. })));
        assert!(parse_poly("u^2147483648", p(3), 1).is_ok());
        assert!(parse_poly("u^2147483649", p(3), 1).is_err());
    }

    #[test]
    fn render_then_parse_is_identity() {
        let f = LaurentPoly::from_1d(p(7), &[(-3, 2), (0, 6), (5, 1)]);
        assert_eq!(parse_poly(&f.to_string(), p(7), 1).unwrap(), f);
        let g = LaurentPoly::from_terms(p(3), 3, vec![(vec![1, -2, 0], 2), (vec![0, 0, 0], 1)]).unwrap();
        assert_eq!(parse_poly(&g.to_string(), p(3), 3).unwrap(), g);
    }
}
