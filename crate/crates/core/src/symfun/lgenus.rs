use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::poly::{GradedPolynomial, Monomial, Var};
use crate::scalars::{bernoulli, factorial, Rational};
use crate::{Error, Result};

/// Coefficients `f_0, f_2, ..., f_{2max}` of `t/tanh(t) = sum f_{2i} t^{2i}`,
/// where `f_{2i} = 2^{2i} B_{2i} / (2i)!`.
pub fn tanh_series(max: u32) -> Vec<Rational> {
    let mut out = vec![Rational::one()];
    for i in 1..=max {
        let b = bernoulli(2 * i).expect("even index");
        let pow = Rational::from_integer(BigInt::one() << (2 * i));
        out.push(pow * b / Rational::from_integer(factorial(2 * i)));
    }
    out
}

/// `2^{2i} (2^{2i-1} - 1) |B_{2i}| / (2i)!`, the coefficient of `p_i` in `L_i`.
pub fn l_leading_coefficient(i: u32) -> Result<Rational> {
    if i == 0 {
        return Err(Error::Domain("leading coefficient needs i >= 1".into()));
    }
    let b = bernoulli(2 * i)?.abs();
    let a = Rational::from_integer(BigInt::one() << (2 * i));
    let c = Rational::from_integer((BigInt::one() << (2 * i - 1)) - 1);
    Ok(a * c * b / Rational::from_integer(factorial(2 * i)))
}

/// Hirzebruch L-polynomials `L_i(p_1, ..., p_i)` and their inverses
/// `P_i(x_1, ..., x_i)` with `p_i = P_i(L_1, ..., L_i)`.
#[derive(Clone, Debug)]
pub struct LTable {
    max: u32,
    l: Vec<GradedPolynomial>,
    inverse: Vec<GradedPolynomial>,
}

impl LTable {
    pub fn max_index(&self) -> u32 {
        self.max
    }

    /// `L_i` in the variables `p_1, ..., p_i`; `L_0 = 1`.
    pub fn l(&self, i: u32) -> &GradedPolynomial {
        &self.l[i as usize]
    }

    /// `P_i` in the variables `x_1, ..., x_i`; `P_0 = 1`.
    pub fn p_inverse(&self, i: u32) -> &GradedPolynomial {
        &self.inverse[i as usize]
    }

    /// The assignment `p_i -> P_i(x)` for `1 <= i <= max`.
    pub fn pontryagin_to_l(&self) -> BTreeMap<Var, GradedPolynomial> {
        (1..=self.max)
            .map(|i| (Var::P(i), self.inverse[i as usize].clone()))
            .collect()
    }

    /// The assignment `x_i -> L_i(p)` for `1 <= i <= max`.
    pub fn l_to_pontryagin(&self) -> BTreeMap<Var, GradedPolynomial> {
        (1..=self.max)
            .map(|i| (Var::X(i), self.l[i as usize].clone()))
            .collect()
    }
}

fn series_mul(a: &[Rational], b: &[Rational], len: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); len];
    for (i, ai) in a.iter().enumerate().take(len) {
        for (j, bj) in b.iter().enumerate().take(len - i) {
            out[i + j] += ai * bj;
        }
    }
    out
}

/// Coefficients `c_1, ..., c_len-1` of `log g(u)` for a series `g` with `g(0) = 1`.
fn series_log(g: &[Rational], len: usize) -> Vec<Rational> {
    // inverse of g
    let mut inv = vec![Rational::zero(); len];
    inv[0] = Rational::one();
    for n in 1..len {
        let mut s = Rational::zero();
        for k in 1..=n.min(g.len() - 1) {
            s += &g[k] * &inv[n - k];
        }
        inv[n] = -s;
    }
    let deriv: Vec<Rational> = (1..g.len())
        .map(|k| &g[k] * Rational::from_integer(BigInt::from(k)))
        .collect();
    let quot = series_mul(&deriv, &inv, len);
    let mut out = vec![Rational::zero(); len];
    for k in 1..len {
        out[k] = &quot[k - 1] / Rational::from_integer(BigInt::from(k));
    }
    out
}

/// Builds `L_1..L_max` from the even series `t/tanh(t)`.
///
/// Writing `t/tanh(t) = g(t^2)`, the product `prod_j g(b_j s)` over
/// `b_j = a_j^2` equals `exp(sum_k c_k P_k s^k)` where `log g = sum c_k u^k`
/// and `P_k` are the power sums of the `b_j`. Newton's identities express
/// `P_k` in the elementary symmetric polynomials of the `b_j`, which are
/// then renamed `p_j`.
pub fn l_table(max: u32) -> LTable {
    assert!(max >= 1, "l_table needs max >= 1");
    // one guard order past max
    let len = max as usize + 2;
    let g = tanh_series(len as u32 - 1);
    let log_g = series_log(&g, len);

    let p = |j: usize| GradedPolynomial::var(Var::P(j as u32));
    let mut power_sums: Vec<GradedPolynomial> = vec![GradedPolynomial::zero()];
    for k in 1..len {
        let mut pk = p(k).scale(&Rational::from_integer(BigInt::from(k)));
        if k % 2 == 0 {
            pk = -pk;
        }
        for i in 1..k {
            let t = &p(i) * &power_sums[k - i];
            pk = if i % 2 == 1 { &pk + &t } else { &pk - &t };
        }
        power_sums.push(pk);
    }
    let exponent: Vec<GradedPolynomial> = (0..len).map(|k| power_sums[k].scale(&log_g[k])).collect();
    // exp via n E_n = sum_{k=1}^n k A_k E_{n-k}
    let mut l = vec![GradedPolynomial::one()];
    for n in 1..len {
        let mut acc = GradedPolynomial::zero();
        for k in 1..=n {
            let t = &exponent[k] * &l[n - k];
            acc = &acc + &t.scale(&Rational::from_integer(BigInt::from(k)));
        }
        l.push(acc.scale(&Rational::new(BigInt::one(), BigInt::from(n))));
    }
    debug_assert_eq!(l[len - 1].homogeneous_weight(), Some(2 * (len as u32 - 1)));
    l.truncate(max as usize + 1);

    // triangular inversion: x_i = c_i p_i + R_i(p_1..p_{i-1})
    let mut inverse = vec![GradedPolynomial::one()];
    for i in 1..=max {
        let lead_mono = Monomial::var(Var::P(i), 1);
        let c = l[i as usize].coefficient(&lead_mono);
        let rest = &l[i as usize] - &GradedPolynomial::monomial(lead_mono, c.clone());
        let assign: BTreeMap<Var, GradedPolynomial> = rest
            .used_variables()
            .into_iter()
            .map(|v| match v {
                Var::P(j) => (v, inverse[j as usize].clone()),
                _ => unreachable!("L_i involves only Pontryagin classes"),
            })
            .collect();
        let rest_x = rest.substitute(&assign).expect("variables come from rest");
        let pi = (&GradedPolynomial::var(Var::X(i)) - &rest_x).scale(&c.recip());
        inverse.push(pi.restricted_to((1..=i).map(Var::X)));
    }
    LTable { max, l, inverse }
}

/// Coefficient of `p_i` in `L_i`, checked against the closed Bernoulli formula.
pub fn leading_coefficient_check(i: u32) -> Result<Rational> {
    let expected = l_leading_coefficient(i)?;
    let table = l_table(i);
    let found = table.l(i).coefficient(&Monomial::var(Var::P(i), 1));
    if found != expected {
        return Err(Error::Internal(format!(
            "coefficient of p{i} in L{i} is {found}, closed formula gives {expected}"
        )));
    }
    Ok(found)
}

/// `ell_i(a_1, ..., a_n)`: the coefficient of `t^{2i}` in `prod_j f(a_j t)`
/// with `f(t) = t/tanh(t)`, expanded directly in the `a_j`.
pub fn ell_polynomial(i: u32, n: u32) -> GradedPolynomial {
    let f = tanh_series(i);
    let vars: Vec<Var> = (1..=n).map(Var::A).collect();
    // series in t^2, coefficients polynomials in a
    let mut acc: Vec<GradedPolynomial> = vec![GradedPolynomial::one()];
    acc.resize(i as usize + 1, GradedPolynomial::zero());
    for &a in &vars {
        let factor: Vec<GradedPolynomial> = (0..=i as usize)
            .map(|t| GradedPolynomial::monomial(Monomial::var(a, 2 * t as u32), f[t].clone()))
            .collect();
        let mut next = vec![GradedPolynomial::zero(); i as usize + 1];
        for (d1, c1) in acc.iter().enumerate() {
            if c1.is_zero() {
                continue;
            }
            for (d2, c2) in factor.iter().enumerate().take(i as usize + 1 - d1) {
                next[d1 + d2] = &next[d1 + d2] + &(c1 * c2);
            }
        }
        acc = next;
    }
    acc.swap_remove(i as usize).with_variables(vars)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;

    fn p(i: u32) -> GradedPolynomial {
        GradedPolynomial::var(Var::P(i))
    }

    fn a(j: u32) -> GradedPolynomial {
        GradedPolynomial::var(Var::A(j))
    }

    // Oracle: t/tanh(t) = cosh(t) / (sinh(t)/t) by direct series division of
    // the factorial expansions.
    fn tanh_series_oracle(max: usize) -> Vec<Rational> {
        let fact = |k: usize| Rational::from_integer(factorial(k as u32));
        let cosh: Vec<Rational> = (0..=max).map(|i| fact(2 * i).recip()).collect();
        let sinhc: Vec<Rational> = (0..=max).map(|i| fact(2 * i + 1).recip()).collect();
        let mut q = vec![Rational::zero(); max + 1];
        for n in 0..=max {
            let mut s = cosh[n].clone();
            for k in 1..=n {
                s -= &sinhc[k] * &q[n - k];
            }
            q[n] = s;
        }
        q
    }

    #[test]
    fn inverse_tables_use_only_l_coordinates() {
        let t = l_table(4);
        for i in 1..=4 {
            let expect: std::collections::BTreeSet<Var> = (1..=i).map(Var::X).collect();
            assert_eq!(t.p_inverse(i).variables(), &expect);
        }
    }

    #[test]
    fn series_coefficients() {
        assert_eq!(tanh_series(6), tanh_series_oracle(6));
        let f = tanh_series(2);
        assert_eq!(f[1], rat(1, 3));
        assert_eq!(f[2], rat(-1, 45));
    }

    #[test]
    fn low_l_polynomials() {
        let t = l_table(3);
        assert_eq!(*t.l(1), p(1).scale(&rat(1, 3)));
        assert_eq!(*t.l(2), (p(2).scale(&rat(7, 1)) - p(1).pow(2)).scale(&rat(1, 45)));
        let l3 = p(3).scale(&rat(62, 1)) - (p(1) * p(2)).scale(&rat(13, 1)) + p(1).pow(3).scale(&rat(2, 1));
        assert_eq!(*t.l(3), l3.scale(&rat(1, 945)));
        assert_eq!(t.l(2).to_string(), "7/45*p2 - 1/45*p1^2");
    }

    #[test]
    fn inverse_polynomials() {
        let t = l_table(2);
        let x = |i| GradedPolynomial::var(Var::X(i));
        assert_eq!(*t.p_inverse(1), x(1).scale(&rat(3, 1)));
        let p2 = (x(2).scale(&rat(45, 1)) + x(1).pow(2).scale(&rat(9, 1))).scale(&rat(1, 7));
        assert_eq!(*t.p_inverse(2), p2);
    }

    #[test]
    fn leading_coefficients() {
        assert_eq!(leading_coefficient_check(1).unwrap(), rat(1, 3));
        assert_eq!(leading_coefficient_check(2).unwrap(), rat(7, 45));
        assert_eq!(leading_coefficient_check(3).unwrap(), rat(62, 945));
        assert!(l_leading_coefficient(0).is_err());
    }

    #[test]
    fn ell_examples() {
        assert_eq!(ell_polynomial(0, 3), GradedPolynomial::one());
        assert_eq!(ell_polynomial(1, 2), (a(1).pow(2) + a(2).pow(2)).scale(&rat(1, 3)));
        assert_eq!(ell_polynomial(2, 1), a(1).pow(4).scale(&rat(-1, 45)));
    }

    fn elementary_of_squares(j: u32, n: u32) -> GradedPolynomial {
        // coefficient of s^j in prod (1 + a_i^2 s)
        let mut acc = vec![GradedPolynomial::one()];
        for i in 1..=n {
            let mut next = vec![GradedPolynomial::zero(); acc.len() + 1];
            for (d, c) in acc.iter().enumerate() {
                next[d] = &next[d] + c;
                next[d + 1] = &next[d + 1] + &(c * &a(i).pow(2));
            }
            acc = next;
        }
        acc.get(j as usize).cloned().unwrap_or_default()
    }

    #[test]
    fn ell_agrees_with_l_of_elementary_squares() {
        let t = l_table(4);
        for n in 1..=4 {
            for i in 1..=4 {
                let assign: BTreeMap<Var, GradedPolynomial> =
                    (1..=i).map(|j| (Var::P(j), elementary_of_squares(j, n))).collect();
                let via_l = t
                    .l(i)
                    .clone()
                    .with_variables((1..=i).map(Var::P))
                    .substitute(&assign)
                    .unwrap();
                assert_eq!(via_l, ell_polynomial(i, n), "i={i} n={n}");
            }
        }
    }
}
