//! Scalar literals: polynomials in `t` (standing for q²) with rational
//! coefficients, e.g. `1/2*t^2 - 3*t + 1` or `-t^-1`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{CycNum, Field, Rat};
use crate::error::{Error, Result};

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
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

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digits parse as an integer"))
    }

    fn exponent(&mut self) -> Result<i64> {
        if !self.eat(b'^') {
            return Ok(1);
        }
        let neg = self.eat(b'-');
        let start = self.pos;
        let n = self.integer()?;
        let n: i64 = n.try_into().map_err(|_| Error::Parse {
            pos: start,
            msg: "exponent too large".into(),
        })?;
        Ok(if neg { -n } else { n })
    }

    /// term := coef ['*' 't' ['^' exp]] | 't' ['^' exp]
    fn term(&mut self) -> Result<(Rat, i64)> {
        match self.peek() {
            Some(b't') => {
                self.pos += 1;
                Ok((Rat::one(), self.exponent()?))
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let coef = if self.eat(b'/') {
                    let at = self.pos;
                    let den = self.integer()?;
                    if den.is_zero() {
                        return Err(Error::Parse { pos: at, msg: "zero denominator".into() });
                    }
                    Rat::new(num, den)
                } else {
                    Rat::from_integer(num)
                };
                if self.eat(b'*') {
                    if !self.eat(b't') {
                        return self.err("expected 't' after '*'");
                    }
                    Ok((coef, self.exponent()?))
                } else {
                    Ok((coef, 0))
                }
            }
            Some(_) => self.err("expected a number or 't'"),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses a scalar literal and reduces it into the field.
pub fn parse_literal(ctx: &Field, src: &str) -> Result<CycNum> {
    let mut lx = Lexer { src: src.as_bytes(), pos: 0 };
    let mut acc = CycNum::zero(ctx);
    let mut first = true;
    loop {
        let sign = match lx.peek() {
            Some(b'+') => {
                lx.pos += 1;
                1
            }
            Some(b'-') => {
                lx.pos += 1;
                -1
            }
            None if !first => break,
            _ if first => 1,
            Some(_) => return lx.err("expected '+' or '-'"),
            None => unreachable!(),
        };
        let (coef, exp) = lx.term()?;
        let coef = if sign < 0 { -coef } else { coef };
        acc += &CycNum::q2pow(ctx, exp).scale(&coef);
        first = false;
        if lx.peek().is_none() {
            break;
        }
    }
    Ok(acc)
}

fn fmt_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Formats an element as a literal accepted by [`parse_literal`],
/// highest power first.
pub fn format_literal(x: &CycNum) -> String {
    let mut out = String::new();
    for (k, c) in x.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let monomial = match k {
            0 => String::new(),
            1 => "t".to_string(),
            _ => format!("t^{k}"),
        };
        if monomial.is_empty() {
            out.push_str(&fmt_rat(&mag));
        } else if mag.is_one() {
            out.push_str(&monomial);
        } else {
            out.push_str(&format!("{}*{}", fmt_rat(&mag), monomial));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclofield::FieldCtx;

    #[test]
    fn parses_polynomials() {
        let f = FieldCtx::new(5).unwrap();
        let x = parse_literal(&f, "1/2*t^2 - 3*t + 1").unwrap();
        let half = Rat::new(1.into(), 2.into());
        let expected = &(&CycNum::q2pow(&f, 2).scale(&half) - &CycNum::zeta(&f).scale(&Rat::from_integer(3.into())))
            + &CycNum::one(&f);
        assert_eq!(x, expected);
        assert_eq!(parse_literal(&f, "t^-1").unwrap(), CycNum::q2pow(&f, 4));
        assert_eq!(parse_literal(&f, "-t").unwrap(), -CycNum::zeta(&f));
        assert_eq!(parse_literal(&f, " 0 ").unwrap(), CycNum::zero(&f));
    }

    #[test]
    fn reduces_high_powers() {
        let f = FieldCtx::new(4).unwrap();
        assert_eq!(parse_literal(&f, "t^2").unwrap(), CycNum::from_int(&f, -1));
        assert_eq!(parse_literal(&f, "t^4 + t^2").unwrap(), CycNum::zero(&f));
    }

    #[test]
    fn reports_error_position() {
        let f = FieldCtx::new(3).unwrap();
        match parse_literal(&f, "1 + x") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_literal(&f, ""), Err(Error::Parse { pos: 0, .. })));
        assert!(matches!(parse_literal(&f, "1/0"), Err(Error::Parse { .. })));
        assert!(matches!(parse_literal(&f, "2 3"), Err(Error::Parse { .. })));
        assert!(matches!(parse_literal(&f, "2*"), Err(Error::Parse { .. })));
    }

    #[test]
    fn format_round_trips() {
        let f = FieldCtx::new(7).unwrap();
        for s in ["0", "1", "-3/4*t^5 + t^2 - 2", "t"] {
            let x = parse_literal(&f, s).unwrap();
            assert_eq!(format_literal(&x), s);
        }
    }
}
