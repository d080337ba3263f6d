//! Exact arithmetic substrate.
//!
//! Rationals are [`num_rational::BigRational`]; everything else here is
//! built on top of them: Bernoulli numbers, prime fields `F_p` with
//! `p < 2^31`, and cyclotomic fields with certified sign determination
//! for their real elements.

mod ball;
mod bernoulli;
mod cyclotomic;
mod fp;
mod rational;

pub use bernoulli::{bernoulli, bernoulli_numbers};
pub use cyclotomic::{cyclotomic_polynomial, sign_of, Cyclotomic, CyclotomicField, CyclotomicReal};
pub use fp::{is_prime, next_odd_prime_after, FpScalar, PrimeField};
pub use rational::{factorial, largest_prime_factor, parse_rational, prime_factors, rat, Rational};
