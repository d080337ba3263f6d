//! Fixed-point ball arithmetic: `[mid - rad, mid + rad] * 2^-prec`, with
//! every rounding step absorbed into `rad`.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::Rational;

#[derive(Clone, Debug)]
pub(crate) struct Ball {
    mid: BigInt,
    rad: BigInt,
}

fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    if r.is_zero() {
        q
    } else {
        q + 1
    }
}

impl Ball {
    pub(crate) fn zero() -> Ball {
        Ball {
            mid: BigInt::zero(),
            rad: BigInt::zero(),
        }
    }

    pub(crate) fn from_rational(q: &Rational, prec: u32) -> Ball {
        let scaled = q.numer() << prec;
        Ball {
            mid: scaled.div_floor(q.denom()),
            rad: BigInt::from(1),
        }
    }

    pub(crate) fn add(&self, o: &Ball) -> Ball {
        Ball {
            mid: &self.mid + &o.mid,
            rad: &self.rad + &o.rad,
        }
    }

    pub(crate) fn sub(&self, o: &Ball) -> Ball {
        Ball {
            mid: &self.mid - &o.mid,
            rad: &self.rad + &o.rad,
        }
    }

    pub(crate) fn mul(&self, o: &Ball, prec: u32) -> Ball {
        let scale = BigInt::from(1) << prec;
        let mid = (&self.mid * &o.mid).div_floor(&scale);
        let err = self.mid.abs() * &o.rad + o.mid.abs() * &self.rad + &self.rad * &o.rad;
        Ball {
            mid,
            rad: ceil_div(&err, &scale) + 1,
        }
    }

    pub(crate) fn scale_rational(&self, q: &Rational) -> Ball {
        let mid = (&self.mid * q.numer()).div_floor(q.denom());
        let rad = ceil_div(&(&self.rad * q.numer().abs()), q.denom()) + 1;
        Ball { mid, rad }
    }

    /// Upper bound of `|x|` in ulps.
    pub(crate) fn magnitude_bound(&self) -> BigInt {
        self.mid.abs() + &self.rad
    }

    /// `Some(sign)` when the ball excludes zero.
    pub(crate) fn certain_sign(&self) -> Option<i8> {
        if self.mid.abs() > self.rad {
            Some(if self.mid.sign() == Sign::Minus { -1 } else { 1 })
        } else {
            None
        }
    }
}

/// `atan(1/x)` by its alternating series.
fn atan_inv(x: u64, prec: u32) -> Ball {
    let one = BigInt::from(1) << prec;
    let x = BigInt::from(x);
    let x2 = &x * &x;
    let mut power = x.clone();
    let mut mid = BigInt::zero();
    let mut terms = 0u32;
    let mut n = 0u64;
    loop {
        let term = one.div_floor(&(&power * BigInt::from(2 * n + 1)));
        if term.is_zero() {
            break;
        }
        if n % 2 == 0 {
            mid += term;
        } else {
            mid -= term;
        }
        terms += 1;
        power *= &x2;
        n += 1;
    }
    // one truncation ulp per term, plus the alternating tail (< 1 ulp).
    Ball {
        mid,
        rad: BigInt::from(terms + 1),
    }
}

/// Machin: `pi = 16 atan(1/5) - 4 atan(1/239)`.
pub(crate) fn pi(prec: u32) -> Ball {
    let a = atan_inv(5, prec);
    let b = atan_inv(239, prec);
    Ball {
        mid: a.mid * 16 - b.mid * 4,
        rad: a.rad * 16 + b.rad * 4,
    }
}

/// `cos(pi * t)` for rational `t` with `|t| <= 1`.
pub(crate) fn cos_pi_times(t: &Rational, pi: &Ball, prec: u32) -> Ball {
    let theta = pi.scale_rational(t);
    let theta2 = theta.mul(&theta, prec);
    let mut term = Ball::from_rational(&Rational::from_integer(1.into()), prec);
    let mut sum = term.clone();
    let few_ulps = BigInt::from(8);
    let mut n = 1u64;
    loop {
        let next = term
            .mul(&theta2, prec)
            .scale_rational(&Rational::new(1.into(), BigInt::from((2 * n - 1) * (2 * n))));
        term = next;
        sum = if n % 2 == 1 { sum.sub(&term) } else { sum.add(&term) };
        // For n >= 4 each later term is at most half the previous one, so
        // the tail is bounded by twice the last term.
        let bound = term.magnitude_bound();
        if n >= 4 && bound <= few_ulps {
            sum.rad += bound * 2;
            break;
        }
        n += 1;
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;

    fn contains(b: &Ball, x: f64, prec: u32) -> bool {
        let s = 2f64.powi(prec as i32);
        let lo = (&b.mid - &b.rad).to_string().parse::<f64>().unwrap() / s;
        let hi = (&b.mid + &b.rad).to_string().parse::<f64>().unwrap() / s;
        lo - 1e-12 <= x && x <= hi + 1e-12
    }

    #[test]
    fn pi_enclosure() {
        let p = pi(80);
        assert!(contains(&p, std::f64::consts::PI, 80));
        assert!(p.rad < BigInt::from(1000));
    }

    #[test]
    fn cos_enclosures() {
        let prec = 70;
        let p = pi(prec);
        for (t, expect) in [
            (rat(0, 1), 1.0),
            (rat(1, 2), 0.0),
            (rat(2, 5), (2.0 * std::f64::consts::PI / 5.0).cos()),
            (rat(-4, 5), (4.0 * std::f64::consts::PI / 5.0).cos()),
            (rat(1, 1), -1.0),
        ] {
            let c = cos_pi_times(&t, &p, prec);
            assert!(contains(&c, expect, prec), "cos(pi*{t})");
        }
    }
}
