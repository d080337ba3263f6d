//! Even-degree cohomology `H^{2j}(BC_p; F_p) = F_p c^j` and the characteristic
//! classes of linear and non-linear representation data.

use std::fmt;

use crate::repring::VirtualRep;
use crate::scalars::{factorial, FpScalar, PrimeField};
use crate::symfun::tanh_series;
use crate::{Error, Result};

/// `coefficient * c^half_degree` in `H^{2 half_degree}(BC_p; F_p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CpClass {
    half_degree: u32,
    coeff: FpScalar,
}

impl CpClass {
    pub fn new(half_degree: u32, coeff: FpScalar) -> CpClass {
        CpClass { half_degree, coeff }
    }

    pub fn p(&self) -> u32 {
        self.coeff.p()
    }

    pub fn half_degree(&self) -> u32 {
        self.half_degree
    }

    pub fn coefficient(&self) -> FpScalar {
        self.coeff
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }
}

impl fmt::Display for CpClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.half_degree {
            0 => write!(f, "{}", self.coeff),
            1 => write!(f, "{}*c", self.coeff),
            j => write!(f, "{}*c^{j}", self.coeff),
        }
    }
}

/// Weights of `rho = chi^{a_1} + ... + chi^{a_n}`, each canonicalized to
/// `[1, p-1]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearRepData {
    field: PrimeField,
    residues: Vec<u32>,
}

impl LinearRepData {
    /// Errors if `p` is not prime or some weight is divisible by `p`
    /// (the representation must have no trivial summand).
    pub fn new(p: u64, residues: &[i64]) -> Result<LinearRepData> {
        let field = PrimeField::new(p)?;
        let residues = residues
            .iter()
            .map(|&a| {
                let r = field.elem(a);
                if r.is_zero() {
                    Err(Error::Domain(format!("weight {a} is divisible by {p}")))
                } else {
                    Ok(r.value())
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(LinearRepData { field, residues })
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn p(&self) -> u32 {
        self.field.p()
    }

    /// Complex dimension `n`.
    pub fn n(&self) -> u32 {
        self.residues.len() as u32
    }

    pub fn residues(&self) -> &[u32] {
        &self.residues
    }

    pub fn direct_sum(&self, o: &LinearRepData) -> Result<LinearRepData> {
        if self.p() != o.p() {
            return Err(Error::Mismatch(format!("F_{} vs F_{}", self.p(), o.p())));
        }
        let mut residues = self.residues.clone();
        residues.extend_from_slice(&o.residues);
        Ok(LinearRepData {
            field: self.field,
            residues,
        })
    }

    fn weights(&self) -> impl Iterator<Item = FpScalar> + '_ {
        self.residues.iter().map(|&a| self.field.elem(a as i64))
    }
}

/// `e(rho) = (prod a_j) c^n`.
pub fn euler_class(rho: &LinearRepData) -> CpClass {
    let e = rho.weights().fold(rho.field.one(), |acc, a| acc * a);
    CpClass::new(rho.n(), e)
}

/// `ell_i(a_1, ..., a_n) c^{2i}`, computed as the `t^{2i}` coefficient of
/// `prod_j a_j t / tanh(a_j t)` over `F_p`.
pub fn l_class_linear(rho: &LinearRepData, i: u32) -> Result<CpClass> {
    let p = rho.p();
    if (p as u64) <= 2 * i as u64 + 1 {
        return Err(Error::DenominatorCollision {
            den: format!("({})!", 2 * i + 1),
            p,
        });
    }
    let f = &rho.field;
    // s-coefficients of t / tanh t with s = t^2: 2^{2u} B_{2u} / (2u)!
    let base: Vec<FpScalar> = tanh_series(i)
        .iter()
        .map(|c| f.from_rational(c))
        .collect::<Result<_>>()?;
    let mut prod = vec![f.zero(); i as usize + 1];
    prod[0] = f.one();
    for a in rho.weights() {
        let a2 = a * a;
        let mut scaled = base.clone();
        let mut w = f.one();
        for c in scaled.iter_mut() {
            *c = *c * w;
            w = w * a2;
        }
        let mut next = vec![f.zero(); i as usize + 1];
        for (u, &x) in prod.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (v, &y) in scaled.iter().enumerate().take(i as usize + 1 - u) {
                next[u + v] = next[u + v] + x * y;
            }
        }
        prod = next;
    }
    Ok(CpClass::new(2 * i, prod[i as usize]))
}

/// `ch_j(xi) = (sum_r m_r r^j / j!) c^j` with `0^0 = 1`.
pub fn chern_character(xi: &VirtualRep, j: u32) -> Result<CpClass> {
    if xi.level() != 1 {
        return Err(Error::Mismatch(format!(
            "chern_character needs a representation of C_p, got level {}",
            xi.level()
        )));
    }
    let f = PrimeField::new(xi.p() as u64)?;
    if j >= xi.p() {
        return Err(Error::Domain(format!("{j}! vanishes mod {}", xi.p())));
    }
    let sum = xi
        .pairs()
        .into_iter()
        .fold(f.zero(), |acc, (r, m)| acc + f.elem(m) * f.elem(r as i64).pow(j as u64));
    let fact = f.from_bigint(&factorial(j));
    let inv = fact.inv().expect("j < p");
    Ok(CpClass::new(j, sum * inv))
}

/// Pullback of `L_i` along the non-linear action built from `(rho, xi)`:
/// `ell_i(a) - 2^{2+2i-n} e(rho) ch_{2i-n}(xi)` when `2i >= n`, and
/// `ell_i(a)` otherwise. The half-dimension `n` is the degree of `rho`.
pub fn pullback_l_nonlinear(rho: &LinearRepData, xi: &VirtualRep, i: u32) -> Result<CpClass> {
    let p = rho.p();
    if p == 2 {
        return Err(Error::Domain("pullback_l_nonlinear needs an odd prime".into()));
    }
    if (p as u64) <= 2 * i as u64 + 1 {
        return Err(Error::Domain(format!("p = {p} must exceed 2i+1 = {}", 2 * i + 1)));
    }
    if xi.p() != p || xi.level() != 1 {
        return Err(Error::Mismatch(format!(
            "xi lives in R(C_{}^{}), expected R(C_{p})",
            xi.p(),
            xi.level()
        )));
    }
    let ell = l_class_linear(rho, i)?;
    let n = rho.n();
    if 2 * i < n {
        return Ok(ell);
    }
    let d = 2 * i - n;
    let ch = chern_character(xi, d)?;
    let two = rho.field.elem(2).pow((2 + d) as u64);
    let corr = two * euler_class(rho).coefficient() * ch.coefficient();
    Ok(CpClass::new(2 * i, ell.coefficient() - corr))
}
