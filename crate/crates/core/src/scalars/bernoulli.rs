use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Rational;
use crate::{Error, Result};

/// `B_0, ..., B_max` in the convention `t/(e^t - 1) = sum B_m t^m / m!`
/// (so `B_1 = -1/2`), computed with the Akiyama–Tanigawa transform.
pub fn bernoulli_numbers(max: usize) -> Vec<Rational> {
    let mut row: Vec<Rational> = Vec::with_capacity(max + 1);
    let mut out = Vec::with_capacity(max + 1);
    for m in 0..=max {
        row.push(Rational::new(BigInt::one(), BigInt::from(m + 1)));
        for j in (1..=m).rev() {
            let diff = &row[j - 1] - &row[j];
            row[j - 1] = diff * Rational::from_integer(BigInt::from(j));
        }
        out.push(row[0].clone());
    }
    // The transform produces the B_1 = +1/2 convention.
    if max >= 1 {
        out[1] = -out[1].clone();
    }
    out
}

/// `B_m` for even positive `m`.
pub fn bernoulli(m: u32) -> Result<Rational> {
    if m == 0 || m % 2 == 1 {
        return Err(Error::Domain(format!(
            "bernoulli expects an even positive index, got {m}"
        )));
    }
    let mut all = bernoulli_numbers(m as usize);
    let b = all.pop().expect("non-empty");
    debug_assert!(!b.is_zero());
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;
    use num_integer::binomial;

    // Independent oracle: sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1, solved for B_m.
    fn recurrence_oracle(max: usize) -> Vec<Rational> {
        let mut b = vec![Rational::one()];
        for m in 1..=max {
            let mut s = Rational::zero();
            for (j, bj) in b.iter().enumerate() {
                s += Rational::from_integer(binomial(BigInt::from(m + 1), BigInt::from(j))) * bj;
            }
            b.push(-s / Rational::from_integer(BigInt::from(m + 1)));
        }
        b
    }

    #[test]
    fn frozen_values() {
        assert_eq!(bernoulli(2).unwrap(), rat(1, 6));
        assert_eq!(bernoulli(4).unwrap(), rat(-1, 30));
        assert_eq!(bernoulli(6).unwrap(), rat(1, 42));
        assert_eq!(bernoulli(12).unwrap(), rat(-691, 2730));
    }

    #[test]
    fn matches_defining_recurrence() {
        assert_eq!(bernoulli_numbers(30), recurrence_oracle(30));
    }

    #[test]
    fn odd_indices_vanish() {
        let b = bernoulli_numbers(21);
        assert_eq!(b[1], rat(-1, 2));
        for m in (3..=21).step_by(2) {
            assert!(b[m].is_zero());
        }
    }

    #[test]
    fn domain_errors() {
        assert!(bernoulli(0).is_err());
        assert!(bernoulli(3).is_err());
    }
}
