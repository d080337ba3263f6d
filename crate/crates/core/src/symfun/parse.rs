use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::{GradedPolynomial, Monomial, Var};
use crate::scalars::Rational;
use crate::{Error, Result};

/// Parses a polynomial in `e`, `p<i>`, `x<i>` and `a<j>`.
///
/// Grammar (whitespace ignored between tokens):
///
/// ```text
/// poly   := sign? term (sign term)*
/// term   := factor ('*' factor)*
/// factor := int ('/' int)? | var ('^' int)?
/// var    := 'e' | 'p' int | 'x' int | 'a' int
/// ```
///
/// The Euler class carries weight `e_weight` (the half-dimension `n`).
pub fn parse_polynomial(text: &str, e_weight: u32) -> Result<GradedPolynomial> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        e_weight,
    };
    let poly = p.poly()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected character"));
    }
    Ok(poly)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    e_weight: u32,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        let message = if self.pos >= self.src.len() {
            format!("{msg}: unexpected end of input")
        } else {
            format!("{msg} near {:?}", self.src[self.pos] as char)
        };
        Error::Syntax {
            offset: self.pos,
            message,
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

    fn int(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digits parse"))
    }

    fn small_int(&mut self, what: &str) -> Result<u32> {
        let start = self.pos;
        let v = self.int()?;
        u32::try_from(v).map_err(|_| Error::Syntax {
            offset: start,
            message: format!("{what} out of range"),
        })
    }

    fn poly(&mut self) -> Result<GradedPolynomial> {
        let mut acc = GradedPolynomial::zero();
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
            let t = self.term()?;
            acc = if negate { &acc - &t } else { &acc + &t };
            match self.peek() {
                Some(b'+') => negate = false,
                Some(b'-') => negate = true,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<GradedPolynomial> {
        let mut coef = Rational::one();
        let mut mono = Vec::new();
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let num = self.int()?;
                    let den = if self.peek() == Some(b'/') {
                        self.pos += 1;
                        let at = self.pos;
                        let d = self.int()?;
                        if d.is_zero() {
                            return Err(Error::Syntax {
                                offset: at,
                                message: "zero denominator".into(),
                            });
                        }
                        d
                    } else {
                        BigInt::one()
                    };
                    coef *= Rational::new(num, den);
                }
                Some(b'e' | b'p' | b'x' | b'a') => {
                    let v = self.var()?;
                    let exp = if self.peek() == Some(b'^') {
                        self.pos += 1;
                        self.small_int("exponent")?
                    } else {
                        1
                    };
                    mono.push((v, exp));
                }
                _ => return Err(self.err("expected term")),
            }
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        let vars: Vec<Var> = mono.iter().map(|&(v, _)| v).collect();
        Ok(GradedPolynomial::monomial(Monomial::from_pairs(mono), coef).with_variables(vars))
    }

    fn var(&mut self) -> Result<Var> {
        let c = self.src[self.pos];
        let start = self.pos;
        self.pos += 1;
        if c == b'e' {
            return Ok(Var::E(self.e_weight));
        }
        if !self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            return Err(self.err("expected variable index"));
        }
        let i = self.small_int("variable index")?;
        if i == 0 {
            return Err(Error::Syntax {
                offset: start,
                message: "variable indices start at 1".into(),
            });
        }
        Ok(match c {
            b'p' => Var::P(i),
            b'x' => Var::X(i),
            _ => Var::A(i),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfun::l_table;

    #[test]
    fn parses_flagship() {
        let xi = parse_polynomial("e^2 - p2", 2).unwrap();
        assert_eq!(xi.num_terms(), 2);
        assert_eq!(xi.homogeneous_weight(), Some(4));
        assert_eq!(xi.to_string(), "e^2 - p2");
    }

    #[test]
    fn parses_l2() {
        let l2 = parse_polynomial("7/45*p2 - 1/45*p1^2", 2).unwrap();
        assert_eq!(l2, *l_table(2).l(2));
    }

    #[test]
    fn syntax_error_offset() {
        match parse_polynomial("e + ", 2) {
            Err(Error::Syntax { offset, .. }) => assert_eq!(offset, 4),
            other => panic!("expected syntax error, got {other:?}"),
        }
        assert!(matches!(
            parse_polynomial("p0", 2),
            Err(Error::Syntax { offset: 0, .. })
        ));
        assert!(matches!(
            parse_polynomial("p1 p2", 2),
            Err(Error::Syntax { offset: 3, .. })
        ));
        assert!(parse_polynomial("1/0*e", 2).is_err());
        assert!(parse_polynomial("p", 2).is_err());
    }

    #[test]
    fn reserialization_is_idempotent() {
        for text in ["-3*p1*e + 2/3*e^2 - p1^2 + 4", "p3 - e^2", "5", "-x2*a1"] {
            let once = parse_polynomial(text, 3).unwrap().to_string();
            let twice = parse_polynomial(&once, 3).unwrap().to_string();
            assert_eq!(once, twice);
        }
    }
}
