use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// Arbitrary-precision rational, always stored reduced with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Parses `a`, `-a` or `a/b` with decimal integers.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::Syntax {
        offset: 0,
        message: format!("invalid rational literal {text:?}"),
    };
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

// Trial division reaches 2^16; any cofactor below 2^32 left over is prime.
const TRIAL_LIMIT: u64 = 1 << 16;

/// Prime factors (without multiplicity, ascending) of a nonzero integer.
///
/// Integers whose cofactor after trial division to `2^16` exceeds `2^32`
/// are rejected, since every prime this crate works with is below `2^31`.
pub fn prime_factors(n: &BigInt) -> Result<Vec<u64>> {
    if n.is_zero() {
        return Err(Error::Domain("zero has no prime factorisation".into()));
    }
    let mut rest = n.abs();
    let mut factors = Vec::new();
    let mut d = 2u64;
    while d <= TRIAL_LIMIT {
        let bd = BigInt::from(d);
        if (&rest % &bd).is_zero() {
            factors.push(d);
            while (&rest % &bd).is_zero() {
                rest /= &bd;
            }
        }
        if &bd * &bd > rest {
            break;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if !rest.is_one() {
        match rest.to_u64() {
            Some(r) if r < (1u64 << 32) => factors.push(r),
            _ => {
                return Err(Error::Domain(format!(
                    "{n} has prime factors beyond the supported range"
                )))
            }
        }
    }
    factors.sort_unstable();
    factors.dedup();
    Ok(factors)
}

/// Largest prime dividing the numerator or denominator of `q` (1 for ±1).
pub fn largest_prime_factor(q: &Rational) -> Result<u64> {
    let num = prime_factors(q.numer())?;
    let den = prime_factors(q.denom())?;
    Ok(num.into_iter().chain(den).max().unwrap_or(1))
}

pub(crate) fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("-47/7").unwrap(), rat(-47, 7));
        assert_eq!(parse_rational("6/4").unwrap(), rat(3, 2));
        assert_eq!(parse_rational("5").unwrap(), rat(5, 1));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn factors() {
        assert_eq!(prime_factors(&BigInt::from(-84)).unwrap(), vec![2, 3, 7]);
        assert_eq!(prime_factors(&BigInt::from(1)).unwrap(), Vec::<u64>::new());
        assert_eq!(largest_prime_factor(&rat(-47, 7)).unwrap(), 47);
        assert_eq!(largest_prime_factor(&rat(1, 1)).unwrap(), 1);
        let big = BigInt::from(65_537u64 * 4);
        assert_eq!(prime_factors(&big).unwrap(), vec![2, 65_537]);
        assert!(prime_factors(&BigInt::zero()).is_err());
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(6), BigInt::from(720));
    }
}
