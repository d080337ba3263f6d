use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::repring::group_order;
use crate::scalars::{Cyclotomic, CyclotomicField, Rational};
use crate::{Error, Result};

/// An element `sum_r c_r g^r` of the integral group ring `Z[C_{p^k}]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupRingElement {
    p: u32,
    level: u32,
    coeffs: BTreeMap<u64, i64>,
}

impl GroupRingElement {
    pub fn zero(p: u32, level: u32) -> GroupRingElement {
        assert!(level >= 1, "level must be at least 1");
        GroupRingElement {
            p,
            level,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn constant(p: u32, level: u32, c: i64) -> GroupRingElement {
        GroupRingElement::from_terms(p, level, [(0, c)])
    }

    pub fn one(p: u32, level: u32) -> GroupRingElement {
        GroupRingElement::constant(p, level, 1)
    }

    /// `g^r`.
    pub fn group_element(p: u32, level: u32, r: i64) -> GroupRingElement {
        GroupRingElement::from_terms(p, level, [(r, 1)])
    }

    /// `sum c g^r` over `(r, c)` pairs; exponents are reduced mod `p^k`.
    pub fn from_terms<I: IntoIterator<Item = (i64, i64)>>(p: u32, level: u32, terms: I) -> GroupRingElement {
        let mut x = GroupRingElement::zero(p, level);
        for (r, c) in terms {
            x.add_term(r, c);
        }
        x
    }

    fn add_term(&mut self, r: i64, c: i64) {
        if c == 0 {
            return;
        }
        let r = r.rem_euclid(self.order() as i64) as u64;
        let e = self.coeffs.entry(r).or_insert(0);
        *e += c;
        if *e == 0 {
            self.coeffs.remove(&r);
        }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn order(&self) -> u64 {
        (self.p as u64).pow(self.level)
    }

    /// Coefficient of `g^r`.
    pub fn coefficient(&self, r: i64) -> i64 {
        let r = r.rem_euclid(self.order() as i64) as u64;
        self.coeffs.get(&r).copied().unwrap_or(0)
    }

    /// Nonzero `(r, c_r)` in ascending `r`.
    pub fn terms(&self) -> impl Iterator<Item = (u64, i64)> + '_ {
        self.coeffs.iter().map(|(&r, &c)| (r, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn check_same(&self, o: &GroupRingElement) {
        assert!(
            self.p == o.p && self.level == o.level,
            "group ring elements over different groups"
        );
    }

    pub fn add(&self, o: &GroupRingElement) -> GroupRingElement {
        self.check_same(o);
        let mut out = self.clone();
        for (r, c) in o.terms() {
            out.add_term(r as i64, c);
        }
        out
    }

    pub fn sub(&self, o: &GroupRingElement) -> GroupRingElement {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> GroupRingElement {
        self.scale(-1)
    }

    pub fn scale(&self, k: i64) -> GroupRingElement {
        GroupRingElement::from_terms(self.p, self.level, self.terms().map(|(r, c)| (r as i64, c * k)))
    }

    pub fn mul(&self, o: &GroupRingElement) -> GroupRingElement {
        self.check_same(o);
        let mut out = GroupRingElement::zero(self.p, self.level);
        for (a, x) in self.terms() {
            for (b, y) in o.terms() {
                out.add_term((a + b) as i64, x * y);
            }
        }
        out
    }

    /// The involution `g -> g^{-1}`.
    pub fn conj(&self) -> GroupRingElement {
        GroupRingElement::from_terms(self.p, self.level, self.terms().map(|(r, c)| (-(r as i64), c)))
    }

    /// Multiplication by `g^s`.
    pub fn shift(&self, s: i64) -> GroupRingElement {
        GroupRingElement::from_terms(self.p, self.level, self.terms().map(|(r, c)| (r as i64 + s, c)))
    }

    /// Image under `g -> eta^e`, `eta` the generator of `field`.
    pub fn evaluate(&self, field: &Arc<CyclotomicField>, e: u64) -> Cyclotomic {
        Cyclotomic::from_exponents(
            field,
            self.terms()
                .map(|(r, c)| ((r * e) as i64, Rational::from_integer(c.into()))),
        )
    }

    /// Parses `"c0 + c1*g + c2*g^2 - g^-1 ..."`.
    pub fn parse(text: &str, p: u32, level: u32) -> Result<GroupRingElement> {
        group_order(p, level)?;
        let src = text.as_bytes();
        let mut pos = 0usize;
        let mut out = GroupRingElement::zero(p, level);
        let skip = |pos: &mut usize| {
            while *pos < src.len() && src[*pos].is_ascii_whitespace() {
                *pos += 1;
            }
        };
        let err = |pos: usize, msg: &str| Error::Syntax {
            offset: pos,
            message: format!("{msg} in group ring element {text:?}"),
        };
        let int = |pos: &mut usize| -> Option<i64> {
            let start = *pos;
            while *pos < src.len() && src[*pos].is_ascii_digit() {
                *pos += 1;
            }
            text[start..*pos].parse().ok()
        };
        let mut first = true;
        loop {
            skip(&mut pos);
            if pos == src.len() {
                if first {
                    return Err(err(pos, "empty input"));
                }
                break;
            }
            let mut sign = 1i64;
            if src[pos] == b'+' || src[pos] == b'-' {
                if src[pos] == b'-' {
                    sign = -1;
                }
                pos += 1;
                skip(&mut pos);
            } else if !first {
                return Err(err(pos, "expected '+' or '-'"));
            }
            first = false;
            let mut coeff = 1i64;
            let exp;
            let mut have_coeff = false;
            if pos < src.len() && src[pos].is_ascii_digit() {
                coeff = int(&mut pos).ok_or_else(|| err(pos, "integer too large"))?;
                have_coeff = true;
                skip(&mut pos);
                if pos < src.len() && src[pos] == b'*' {
                    pos += 1;
                    skip(&mut pos);
                } else {
                    out.add_term(0, sign * coeff);
                    continue;
                }
            }
            if pos < src.len() && src[pos] == b'g' {
                pos += 1;
                skip(&mut pos);
                if pos >= src.len() || src[pos] != b'^' {
                    exp = 1;
                } else {
                    pos += 1;
                    skip(&mut pos);
                    let neg = pos < src.len() && src[pos] == b'-';
                    if neg {
                        pos += 1;
                    }
                    if pos >= src.len() || !src[pos].is_ascii_digit() {
                        return Err(err(pos, "expected exponent"));
                    }
                    let e = int(&mut pos).ok_or_else(|| err(pos, "exponent too large"))?;
                    exp = if neg { -e } else { e };
                }
            } else if have_coeff {
                return Err(err(pos, "expected 'g'"));
            } else {
                return Err(err(pos, "expected a term"));
            }
            out.add_term(exp, sign * coeff);
        }
        Ok(out)
    }
}

impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (r, c)) in self.terms().enumerate() {
            let sep = match (k, c < 0) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            let a = c.unsigned_abs();
            let g = match r {
                0 => String::new(),
                1 => "g".to_string(),
                _ => format!("g^{r}"),
            };
            match (r, a) {
                (0, _) => write!(f, "{sep}{a}")?,
                (_, 1) => write!(f, "{sep}{g}")?,
                _ => write!(f, "{sep}{a}*{g}")?,
            }
        }
        Ok(())
    }
}
