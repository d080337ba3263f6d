use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::Rational;
use crate::{Error, Result};

const P_CAP: u64 = 1 << 31;

/// Deterministic trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Smallest odd prime strictly greater than `n`.
pub fn next_odd_prime_after(n: u64) -> u64 {
    let mut c = (n + 1).max(3);
    while !is_prime(c) {
        c += 1;
    }
    c
}

/// The prime field `F_p`. Construction checks that `p` is prime and below `2^31`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p >= P_CAP || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p: p as u32 })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn zero(&self) -> FpScalar {
        FpScalar { p: self.p, value: 0 }
    }

    pub fn one(&self) -> FpScalar {
        FpScalar { p: self.p, value: 1 }
    }

    pub fn elem(&self, v: i64) -> FpScalar {
        FpScalar {
            p: self.p,
            value: v.rem_euclid(self.p as i64) as u32,
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> FpScalar {
        let r = v.mod_floor(&BigInt::from(self.p));
        FpScalar {
            p: self.p,
            value: r.to_u32().expect("residue fits"),
        }
    }

    /// Reduces a rational whose denominator is prime to `p`.
    pub fn from_rational(&self, q: &Rational) -> Result<FpScalar> {
        let den = self.from_bigint(q.denom());
        let inv = den.inv().ok_or_else(|| Error::DenominatorCollision {
            den: q.denom().to_string(),
            p: self.p,
        })?;
        Ok(self.from_bigint(q.numer()) * inv)
    }
}

/// A residue modulo a prime `p < 2^31`, stored in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FpScalar {
    p: u32,
    value: u32,
}

impl FpScalar {
    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn field(&self) -> PrimeField {
        PrimeField { p: self.p }
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn pow(self, mut e: u64) -> FpScalar {
        let p = self.p as u64;
        let mut base = self.value as u64;
        let mut acc = 1u64 % p;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        FpScalar {
            p: self.p,
            value: acc as u32,
        }
    }

    pub fn inv(self) -> Option<FpScalar> {
        if self.value == 0 {
            None
        } else {
            Some(self.pow(self.p as u64 - 2))
        }
    }

    /// Representative in `(-p/2, p/2]`.
    pub fn balanced(&self) -> i64 {
        let v = self.value as i64;
        let p = self.p as i64;
        if 2 * v > p {
            v - p
        } else {
            v
        }
    }
}

impl fmt::Display for FpScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for FpScalar {
    type Output = FpScalar;
    fn add(self, rhs: FpScalar) -> FpScalar {
        assert_eq!(self.p, rhs.p, "mixed prime fields");
        let s = self.value as u64 + rhs.value as u64;
        FpScalar {
            p: self.p,
            value: (s % self.p as u64) as u32,
        }
    }
}

impl Sub for FpScalar {
    type Output = FpScalar;
    fn sub(self, rhs: FpScalar) -> FpScalar {
        self + (-rhs)
    }
}

impl Neg for FpScalar {
    type Output = FpScalar;
    fn neg(self) -> FpScalar {
        FpScalar {
            p: self.p,
            value: if self.value == 0 { 0 } else { self.p - self.value },
        }
    }
}

impl Mul for FpScalar {
    type Output = FpScalar;
    fn mul(self, rhs: FpScalar) -> FpScalar {
        assert_eq!(self.p, rhs.p, "mixed prime fields");
        FpScalar {
            p: self.p,
            value: (self.value as u64 * rhs.value as u64 % self.p as u64) as u32,
        }
    }
}
