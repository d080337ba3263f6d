use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::ball::{self, Ball};
use super::rational::gcd_u64;
use super::Rational;
use crate::{Error, Result};

/// Integer coefficients (constant term first) of the cyclotomic polynomial `Phi_d`.
pub fn cyclotomic_polynomial(d: u64) -> Vec<BigInt> {
    assert!(d >= 1, "cyclotomic level must be positive");
    // x^d - 1 divided by Phi_e for every proper divisor e.
    let mut num = vec![BigInt::zero(); d as usize + 1];
    num[0] = -BigInt::one();
    num[d as usize] = BigInt::one();
    for e in (1..d).filter(|e| d % e == 0) {
        num = exact_div_monic(&num, &cyclotomic_polynomial(e));
    }
    num
}

fn exact_div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let nd = rem.len() - 1;
    let mut q = vec![BigInt::zero(); nd - dd + 1];
    for i in (0..=nd - dd).rev() {
        let c = rem[i + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[i + j] -= &c * dj;
        }
        q[i] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    q
}

/// `Q(eta)` with `eta` a primitive `level`-th root of unity, in the power
/// basis `1, eta, ..., eta^(deg-1)` modulo `Phi_level`.
#[derive(Debug)]
pub struct CyclotomicField {
    level: u64,
    degree: usize,
    // reduced coordinates of eta^a for 0 <= a < level
    powers: Vec<Vec<Rational>>,
    // the same, as integers (sparse: index and nonzero coefficient)
    int_powers: Vec<Vec<(usize, BigInt)>>,
    modulus: Vec<Rational>,
}

impl CyclotomicField {
    pub fn new(level: u64) -> Arc<CyclotomicField> {
        let phi: Vec<Rational> = cyclotomic_polynomial(level)
            .into_iter()
            .map(Rational::from_integer)
            .collect();
        let degree = phi.len() - 1;
        let mut powers = Vec::with_capacity(level as usize);
        let mut cur = vec![Rational::zero(); degree];
        cur[0] = Rational::one();
        for _ in 0..level {
            powers.push(cur.clone());
            // multiply by eta, folding eta^degree = -sum phi_j eta^j
            let top = cur[degree - 1].clone();
            for j in (1..degree).rev() {
                cur[j] = cur[j - 1].clone() - &top * &phi[j];
            }
            cur[0] = -(&top * &phi[0]);
        }
        let int_powers = powers
            .iter()
            .map(|v| {
                v.iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(j, c)| (j, c.to_integer()))
                    .collect()
            })
            .collect();
        Arc::new(CyclotomicField {
            level,
            degree,
            powers,
            int_powers,
            modulus: phi,
        })
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn degree(&self) -> usize {
        self.degree
    }
}

/// An element of a cyclotomic field.
#[derive(Clone)]
pub struct Cyclotomic {
    field: Arc<CyclotomicField>,
    coeffs: Vec<Rational>,
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic[{}](", self.field.level)?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        self.field.level == other.field.level && self.coeffs == other.coeffs
    }
}

impl Eq for Cyclotomic {}

impl Cyclotomic {
    pub fn zero(field: &Arc<CyclotomicField>) -> Cyclotomic {
        Cyclotomic {
            field: field.clone(),
            coeffs: vec![Rational::zero(); field.degree],
        }
    }

    pub fn from_rational(field: &Arc<CyclotomicField>, q: Rational) -> Cyclotomic {
        let mut z = Cyclotomic::zero(field);
        z.coeffs[0] = q;
        z
    }

    pub fn one(field: &Arc<CyclotomicField>) -> Cyclotomic {
        Cyclotomic::from_rational(field, Rational::one())
    }

    /// `eta^a` for any integer exponent.
    pub fn root_power(field: &Arc<CyclotomicField>, a: i64) -> Cyclotomic {
        let idx = a.rem_euclid(field.level as i64) as usize;
        Cyclotomic {
            field: field.clone(),
            coeffs: field.powers[idx].clone(),
        }
    }

    /// Builds `sum_a c_a eta^a` from exponent/coefficient pairs.
    pub fn from_exponents<I>(field: &Arc<CyclotomicField>, terms: I) -> Cyclotomic
    where
        I: IntoIterator<Item = (i64, Rational)>,
    {
        let mut z = Cyclotomic::zero(field);
        for (a, c) in terms {
            if c.is_zero() {
                continue;
            }
            let idx = a.rem_euclid(field.level as i64) as usize;
            for (zj, pj) in z.coeffs.iter_mut().zip(&field.powers[idx]) {
                *zj += &c * pj;
            }
        }
        z
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn same_field(&self, o: &Cyclotomic) {
        assert_eq!(self.field.level, o.field.level, "mixed cyclotomic fields");
    }

    pub fn add(&self, o: &Cyclotomic) -> Cyclotomic {
        self.same_field(o);
        Cyclotomic {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, o: &Cyclotomic) -> Cyclotomic {
        self.same_field(o);
        Cyclotomic {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn neg(&self) -> Cyclotomic {
        Cyclotomic {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, q: &Rational) -> Cyclotomic {
        Cyclotomic {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|a| a * q).collect(),
        }
    }

    pub fn mul(&self, o: &Cyclotomic) -> Cyclotomic {
        self.same_field(o);
        // integer arithmetic over a common denominator, normalised once
        let (a, da) = integer_coordinates(&self.coeffs);
        let (b, db) = integer_coordinates(&o.coeffs);
        let deg = self.field.degree;
        let mut prod = vec![BigInt::zero(); 2 * deg - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        let level = self.field.level as usize;
        let mut out = vec![BigInt::zero(); deg];
        for (e, c) in prod.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if e < deg {
                out[e] += c;
            } else {
                for (j, pj) in &self.field.int_powers[e % level] {
                    out[*j] += &c * pj;
                }
            }
        }
        let den = da * db;
        Cyclotomic {
            field: self.field.clone(),
            coeffs: out.into_iter().map(|c| Rational::new(c, den.clone())).collect(),
        }
    }

    /// Complex conjugation `eta -> eta^-1`.
    pub fn conj(&self) -> Cyclotomic {
        Cyclotomic::from_exponents(
            &self.field,
            self.coeffs.iter().enumerate().map(|(j, c)| (-(j as i64), c.clone())),
        )
    }

    pub fn is_real(&self) -> bool {
        self.conj() == *self
    }

    /// Multiplicative inverse by the extended Euclidean algorithm against `Phi`.
    pub fn inv(&self) -> Option<Cyclotomic> {
        if self.is_zero() {
            return None;
        }
        let (g, s) = ext_gcd(trim(self.coeffs.clone()), trim(self.field.modulus.clone()));
        // g is a nonzero constant since Phi is irreducible
        debug_assert_eq!(g.len(), 1);
        let c = g[0].clone();
        let mut coeffs: Vec<Rational> = s.into_iter().map(|x| x / &c).collect();
        coeffs.resize(self.field.degree, Rational::zero());
        Some(Cyclotomic {
            field: self.field.clone(),
            coeffs,
        })
    }

    /// Value of the real part under `eta -> exp(2 pi i r / level)` as a ball.
    fn real_part_ball(&self, embedding: u64, prec: u32) -> Ball {
        let level = self.field.level;
        let pi = ball::pi(prec + 8);
        let mut acc = Ball::zero();
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            // angle 2 pi t with t = jr/level reduced into (-1/2, 1/2]
            let mut e = (j as u64 * embedding) % level;
            let mut neg = false;
            if 2 * e > level {
                e = level - e;
                neg = true;
            }
            let mut t = Rational::new(BigInt::from(2 * e), BigInt::from(level));
            if neg {
                t = -t;
            }
            let cos = ball::cos_pi_times(&t, &pi, prec + 8);
            let term = cos.scale_rational(c);
            acc = acc.add(&term);
        }
        acc
    }
}

/// Integer numerators over the least common denominator.
fn integer_coordinates(v: &[Rational]) -> (Vec<BigInt>, BigInt) {
    use num_integer::Integer;
    let den = v.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let nums = v.iter().map(|q| q.numer() * (&den / q.denom())).collect();
    (nums, den)
}

fn trim(mut v: Vec<Rational>) -> Vec<Rational> {
    while v.len() > 1 && v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn poly_sub_mul(a: &[Rational], q: &[Rational], b: &[Rational]) -> Vec<Rational> {
    // a - q*b
    let mut out = a.to_vec();
    let len = (q.len() + b.len()).saturating_sub(1).max(a.len());
    out.resize(len, Rational::zero());
    for (i, qi) in q.iter().enumerate() {
        if qi.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] -= qi * bj;
        }
    }
    trim(out)
}

fn poly_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    if rem.len() <= db {
        return (vec![Rational::zero()], rem);
    }
    let lead_inv = b[db].recip();
    let mut q = vec![Rational::zero(); rem.len() - db];
    for i in (0..q.len()).rev() {
        let c = &rem[i + db] * &lead_inv;
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            rem[i + j] -= &c * bj;
        }
        q[i] = c;
    }
    (trim(q), trim(rem))
}

/// Returns `(g, s)` with `s*a = g mod b`.
fn ext_gcd(a: Vec<Rational>, b: Vec<Rational>) -> (Vec<Rational>, Vec<Rational>) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (vec![Rational::one()], vec![Rational::zero()]);
    while !(r1.len() == 1 && r1[0].is_zero()) {
        let (q, r) = poly_divrem(&r0, &r1);
        let s = poly_sub_mul(&s0, &q, &s1);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    (r0, s0)
}

/// A real element of a cyclotomic field together with a complex embedding
/// `eta -> exp(2 pi i r / level)`, `gcd(r, level) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicReal {
    value: Cyclotomic,
    embedding: u64,
}

impl CyclotomicReal {
    pub fn new(value: Cyclotomic, embedding: u64) -> Result<CyclotomicReal> {
        let level = value.field.level;
        let embedding = embedding % level;
        if gcd_u64(embedding, level) != 1 {
            return Err(Error::Domain(format!(
                "embedding index {embedding} is not a unit modulo {level}"
            )));
        }
        if !value.is_real() {
            return Err(Error::Domain("element is not fixed by conjugation".into()));
        }
        Ok(CyclotomicReal { value, embedding })
    }

    pub fn value(&self) -> &Cyclotomic {
        &self.value
    }

    pub fn embedding(&self) -> u64 {
        self.embedding
    }
}

/// Sign of a real cyclotomic number under its embedding.
///
/// Zero is decided exactly from the reduced coordinates; otherwise the value
/// is enclosed in balls of doubling precision until the ball excludes zero.
pub fn sign_of(x: &CyclotomicReal) -> i8 {
    if x.value.is_zero() {
        return 0;
    }
    if x.value.field.level <= 2 {
        return if x.value.coeffs[0].is_positive() { 1 } else { -1 };
    }
    let mut prec = 64u32;
    loop {
        if let Some(s) = x.value.real_part_ball(x.embedding, prec).certain_sign() {
            return s;
        }
        prec *= 2;
    }
}
