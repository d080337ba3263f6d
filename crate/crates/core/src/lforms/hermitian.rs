use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::integer::{determinant, IntegerForm};
use super::{GroupRingElement, Parity};
use crate::repring::{group_order, VirtualRep};
use crate::scalars::{sign_of, Cyclotomic, CyclotomicField, CyclotomicReal, Rational};
use crate::{Error, Result};

/// A `(-1)^n`-hermitian form over `Z[C_{p^k}]` on a free module with basis
/// `e_1, ..., e_q`, together with the coefficient-of-1 shadow of its
/// quadratic refinement (values mod 2 for `epsilon = -1`, all zero for
/// `epsilon = +1`).
///
/// Values follow `lambda(x a, y b) = conj(a) lambda(x, y) b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HermitianForm {
    p: u32,
    level: u32,
    parity: Parity,
    matrix: Vec<Vec<GroupRingElement>>,
    refinement: Vec<u8>,
}

/// A square matrix over `Z[C_{p^k}]`.
pub type GroupRingMatrix = Vec<Vec<GroupRingElement>>;

impl HermitianForm {
    /// Checks squareness, the group of every entry, `Lambda* = epsilon
    /// Lambda`, and the refinement values. Unimodularity is checked
    /// separately by [`is_unimodular`](Self::is_unimodular).
    pub fn new(
        p: u32,
        level: u32,
        parity: Parity,
        matrix: GroupRingMatrix,
        refinement: Vec<u8>,
    ) -> Result<HermitianForm> {
        group_order(p, level)?;
        let q = matrix.len();
        if matrix.iter().any(|row| row.len() != q) {
            return Err(Error::InvalidForm("matrix is not square".into()));
        }
        if matrix.iter().flatten().any(|x| x.p() != p || x.level() != level) {
            return Err(Error::InvalidForm(format!("entries must lie in Z[C_{p}^{level}]")));
        }
        let eps = parity.epsilon();
        for i in 0..q {
            for j in 0..q {
                if matrix[j][i].conj() != matrix[i][j].scale(eps) {
                    return Err(Error::InvalidForm(format!(
                        "entry ({i}, {j}) violates Lambda* = {eps} Lambda"
                    )));
                }
            }
        }
        if refinement.len() != q {
            return Err(Error::InvalidForm(format!(
                "refinement has {} values for rank {q}",
                refinement.len()
            )));
        }
        match parity {
            Parity::Plus if refinement.iter().any(|&v| v != 0) => {
                return Err(Error::InvalidForm("refinement is trivial for epsilon = +1".into()))
            }
            Parity::Minus if refinement.iter().any(|&v| v > 1) => {
                return Err(Error::InvalidForm("refinement values lie in Z/2".into()))
            }
            _ => {}
        }
        Ok(HermitianForm {
            p,
            level,
            parity,
            matrix,
            refinement,
        })
    }

    /// An integer matrix viewed over the group ring with trivial action.
    pub fn from_integer_matrix(
        p: u32,
        level: u32,
        parity: Parity,
        matrix: &[Vec<i64>],
        refinement: Vec<u8>,
    ) -> Result<HermitianForm> {
        let m = matrix
            .iter()
            .map(|row| row.iter().map(|&x| GroupRingElement::constant(p, level, x)).collect())
            .collect();
        HermitianForm::new(p, level, parity, m, refinement)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &[Vec<GroupRingElement>] {
        &self.matrix
    }

    pub fn entry(&self, i: usize, j: usize) -> &GroupRingElement {
        &self.matrix[i][j]
    }

    pub fn refinement(&self) -> &[u8] {
        &self.refinement
    }

    fn order(&self) -> u64 {
        (self.p as u64).pow(self.level)
    }

    /// Orthogonal sum.
    pub fn direct_sum(&self, o: &HermitianForm) -> Result<HermitianForm> {
        if (self.p, self.level, self.parity) != (o.p, o.level, o.parity) {
            return Err(Error::Mismatch(
                "forms over different rings or of different parity".into(),
            ));
        }
        let (a, b) = (self.rank(), o.rank());
        let zero = GroupRingElement::zero(self.p, self.level);
        let mut m = vec![vec![zero; a + b]; a + b];
        for i in 0..a {
            for j in 0..a {
                m[i][j] = self.matrix[i][j].clone();
            }
        }
        for i in 0..b {
            for j in 0..b {
                m[a + i][a + j] = o.matrix[i][j].clone();
            }
        }
        let mut refinement = self.refinement.clone();
        refinement.extend_from_slice(&o.refinement);
        Ok(HermitianForm {
            matrix: m,
            refinement,
            ..self.clone()
        })
    }

    /// The integer form `b(e_a, e_b)` = coefficient of `1` in `lambda_ab`,
    /// on the chosen group-ring basis.
    pub fn coefficient_form(&self) -> IntegerForm {
        let m = self
            .matrix
            .iter()
            .map(|row| row.iter().map(|x| x.coefficient(0)).collect())
            .collect();
        IntegerForm::new(self.parity, m).expect("coefficient of 1 inherits the symmetry")
    }

    /// The integer form on the full `Z`-basis `e_a g^i`:
    /// `b(e_a g^i, e_b g^j)` = coefficient of `g^{i-j}` in `lambda_ab`.
    pub fn expanded_coefficient_form(&self) -> IntegerForm {
        let n = self.order() as usize;
        let q = self.rank();
        let mut m = vec![vec![0i64; q * n]; q * n];
        for a in 0..q {
            for b in 0..q {
                for i in 0..n {
                    for j in 0..n {
                        m[a * n + i][b * n + j] = self.matrix[a][b].coefficient(i as i64 - j as i64);
                    }
                }
            }
        }
        IntegerForm::new(self.parity, m).expect("expansion inherits the symmetry")
    }

    /// Unimodularity of the expanded integer form (`det = ±1`), which also
    /// forces invertibility of `Lambda(zeta^r)` at every character.
    pub fn is_unimodular(&self) -> bool {
        let d = determinant(self.expanded_coefficient_form().matrix());
        d == 1.into() || d == (-1).into()
    }

    /// `E Lambda E*`: the form on the new basis `f_a = sum_c e_c conj(E_ac)`.
    ///
    /// The refinement is transported by `mu(x + y) = mu(x) + mu(y) +
    /// lambda(x, y)` with each `mu(e_c)` represented by `q_c * 1`, and the
    /// coefficient of 1 read off mod 2.
    pub fn congruence(&self, e: &GroupRingMatrix) -> Result<HermitianForm> {
        let q = self.rank();
        if e.len() != q || e.iter().any(|row| row.len() != q) {
            return Err(Error::Mismatch(format!("congruence matrix must be {q}x{q}")));
        }
        if e.iter().flatten().any(|x| x.p() != self.p || x.level() != self.level) {
            return Err(Error::Mismatch("congruence matrix over a different group ring".into()));
        }
        let zero = GroupRingElement::zero(self.p, self.level);
        // E Lambda
        let mut el = vec![vec![zero.clone(); q]; q];
        for a in 0..q {
            for d in 0..q {
                let mut s = zero.clone();
                for c in 0..q {
                    if !e[a][c].is_zero() && !self.matrix[c][d].is_zero() {
                        s = s.add(&e[a][c].mul(&self.matrix[c][d]));
                    }
                }
                el[a][d] = s;
            }
        }
        let mut m = vec![vec![zero.clone(); q]; q];
        for a in 0..q {
            for b in 0..q {
                let mut s = zero.clone();
                for d in 0..q {
                    if !el[a][d].is_zero() && !e[b][d].is_zero() {
                        s = s.add(&el[a][d].mul(&e[b][d].conj()));
                    }
                }
                m[a][b] = s;
            }
        }
        let refinement = match self.parity {
            Parity::Plus => vec![0; q],
            Parity::Minus => (0..q)
                .map(|a| {
                    let mut s = 0i64;
                    for c in 0..q {
                        let x = &e[a][c];
                        if x.is_zero() {
                            continue;
                        }
                        if self.refinement[c] == 1 {
                            s += x.mul(&x.conj()).coefficient(0);
                        }
                        for d in c + 1..q {
                            s += x.mul(&self.matrix[c][d]).mul(&e[a][d].conj()).coefficient(0);
                        }
                    }
                    s.rem_euclid(2) as u8
                })
                .collect(),
        };
        HermitianForm::new(self.p, self.level, self.parity, m, refinement)
    }

    /// The transfer to `Z[C_{p^{k-1}}]`, with `C_{p^{k-1}}` generated by
    /// `h = g^p`: the basis `e_a t^i` (`0 <= i < p`, `t = g`) carries
    /// `Tr(t^{-i} lambda_ab t^j)`, where `Tr` keeps `g^{pu} -> h^u` and kills
    /// the other group elements.
    pub fn transfer(&self) -> Result<HermitianForm> {
        if self.level < 2 {
            return Err(Error::Domain("transfer needs level k >= 2".into()));
        }
        let p = self.p as usize;
        let q = self.rank();
        let lower = self.level - 1;
        let trace = |x: &GroupRingElement| {
            GroupRingElement::from_terms(
                self.p,
                lower,
                x.terms()
                    .filter(|&(r, _)| r % self.p as u64 == 0)
                    .map(|(r, c)| ((r / self.p as u64) as i64, c)),
            )
        };
        let mut m = vec![vec![GroupRingElement::zero(self.p, lower); q * p]; q * p];
        for a in 0..q {
            for b in 0..q {
                for i in 0..p {
                    for j in 0..p {
                        let shifted = self.matrix[a][b].shift(j as i64 - i as i64);
                        m[a * p + i][b * p + j] = trace(&shifted);
                    }
                }
            }
        }
        let refinement = self
            .refinement
            .iter()
            .flat_map(|&v| std::iter::repeat(v).take(p))
            .collect();
        HermitianForm::new(self.p, lower, self.parity, m, refinement)
    }

    /// Character-by-character signatures: the multiplicity of `chi^r` is the
    /// signature of `Lambda(zeta^r)` for `epsilon = +1`, and of
    /// `i Lambda(zeta^r)` for `epsilon = -1` (`zeta = exp(2 pi i / p^k)`).
    pub fn multisignature(&self) -> Result<VirtualRep> {
        if !self.is_unimodular() {
            return Err(Error::NotUnimodular(
                "expanded integer form has determinant other than ±1".into(),
            ));
        }
        let n = self.order();
        let mut fields: BTreeMap<u64, Arc<CyclotomicField>> = BTreeMap::new();
        for r in 0..n {
            let d = n / r.gcd(&n);
            fields.entry(d).or_insert_with(|| CyclotomicField::new(d));
        }
        let sigs = (0..n)
            .into_par_iter()
            .map(|r| {
                let g = r.gcd(&n);
                let field = &fields[&(n / g)];
                character_signature(self, field, r / g)
            })
            .collect::<Result<Vec<i64>>>()?;
        Ok(VirtualRep::from_pairs(
            self.p,
            self.level,
            sigs.into_iter().enumerate().map(|(r, s)| (r as i64, s)),
        ))
    }
}

/// Signature of `Lambda(eta^e)` (or of `i Lambda(eta^e)` for skew forms),
/// `eta = exp(2 pi i / d)` the generator of `field`.
fn character_signature(form: &HermitianForm, field: &Arc<CyclotomicField>, e: u64) -> Result<i64> {
    let mut h: Vec<Vec<Cyclotomic>> = form
        .matrix
        .iter()
        .map(|row| row.iter().map(|x| x.evaluate(field, e)).collect())
        .collect();
    if form.parity == Parity::Minus {
        if field.level() <= 2 {
            // i H is hermitian with spectrum symmetric about 0
            return if is_singular(h) {
                Err(Error::NotUnimodular("form is singular at a real character".into()))
            } else {
                Ok(0)
            };
        }
        // delta = eta - eta^{-1} = 2 i sin(2 pi / d) with sin(2 pi / d) > 0
        let delta = Cyclotomic::root_power(field, 1).sub(&Cyclotomic::root_power(field, -1));
        for x in h.iter_mut().flatten() {
            *x = x.mul(&delta);
        }
    }
    hermitian_signature(h)
}

fn is_singular(mut a: Vec<Vec<Cyclotomic>>) -> bool {
    let n = a.len();
    for k in 0..n {
        let Some(piv) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return true;
        };
        a.swap(piv, k);
        let inv = a[k][k].inv().expect("nonzero pivot");
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = a[i][k].mul(&inv);
            for j in k..n {
                let v = a[i][j].sub(&f.mul(&a[k][j]));
                a[i][j] = v;
            }
        }
    }
    false
}

/// Signature of a hermitian matrix over a cyclotomic field by congruence
/// elimination; a vanishing remainder means the matrix is singular.
/// Field degree up to which pivots are inverted during elimination.
const INVERSION_DEGREE: usize = 6;

fn hermitian_signature(mut h: Vec<Vec<Cyclotomic>>) -> Result<i64> {
    let mut sig = 0i64;
    let mut scale_sign = 1i64;
    while !h.is_empty() {
        let n = h.len();
        let piv = match (0..n).find(|&i| !h[i][i].is_zero()) {
            Some(i) => i,
            None => {
                let Some((i, j)) = (0..n)
                    .flat_map(|i| (0..n).map(move |j| (i, j)))
                    .find(|&(i, j)| !h[i][j].is_zero())
                else {
                    return Err(Error::NotUnimodular("form is singular at a character".into()));
                };
                // e_i -> e_i + t e_j with t = conj(h_ij): diagonal 2 |h_ij|^2
                let t = h[i][j].conj();
                let tb = h[i][j].clone();
                for k in 0..n {
                    let v = h[i][k].add(&tb.mul(&h[j][k]));
                    h[i][k] = v;
                }
                for k in 0..n {
                    let v = h[k][i].add(&h[k][j].mul(&t));
                    h[k][i] = v;
                }
                i
            }
        };
        let d = h[piv][piv].clone();
        let real = CyclotomicReal::new(d.clone(), 1).map_err(|e| Error::Internal(format!("diagonal entry: {e}")))?;
        let s = sign_of(&real) as i64;
        // the remaining block is `scale_sign` times a positive multiple of
        // the true Schur complement
        sig += scale_sign * s;
        let row = h[piv].clone();
        let mut next: Vec<Vec<Cyclotomic>> = Vec::with_capacity(n - 1);
        // Small fields: exact Schur complement `H22 - b d^-1 b*`. Large
        // fields, where inversion is costly: the inverse-free `d H22 - b b*`.
        let inv = (d.field().degree() <= INVERSION_DEGREE).then(|| d.inv().expect("nonzero pivot"));
        if inv.is_none() {
            scale_sign *= s;
        }
        for (i, hi) in h.iter().enumerate() {
            if i == piv {
                continue;
            }
            let f = match &inv {
                Some(inv) => hi[piv].mul(inv),
                None => hi[piv].clone(),
            };
            next.push(
                (0..n)
                    .filter(|&j| j != piv)
                    .map(|j| {
                        let base = if inv.is_some() { hi[j].clone() } else { d.mul(&hi[j]) };
                        if f.is_zero() {
                            base
                        } else {
                            base.sub(&f.mul(&row[j]))
                        }
                    })
                    .collect(),
            );
        }
        remove_content(&mut next);
        h = next;
    }
    Ok(sig)
}

/// Divides the whole matrix by the positive rational content of its
/// entries, which changes no signature.
fn remove_content(h: &mut [Vec<Cyclotomic>]) {
    let mut num = BigInt::zero();
    let mut den = BigInt::one();
    for q in h.iter().flatten().flat_map(|x| x.coefficients()) {
        if !q.is_zero() {
            num = num.gcd(q.numer());
            den = den.lcm(q.denom());
        }
    }
    if num.is_zero() || (num.is_one() && den.is_one()) {
        return;
    }
    let c = Rational::new(den, num);
    for x in h.iter_mut().flatten() {
        *x = x.scale(&c);
    }
}

/// `h` copies of `[[0, 1], [epsilon, 0]]` with zero refinement.
pub fn hyperbolic(parity: Parity, p: u32, level: u32, h: usize) -> Result<HermitianForm> {
    group_order(p, level)?;
    let zero = GroupRingElement::zero(p, level);
    let mut m = vec![vec![zero; 2 * h]; 2 * h];
    for b in 0..h {
        m[2 * b][2 * b + 1] = GroupRingElement::one(p, level);
        m[2 * b + 1][2 * b] = GroupRingElement::constant(p, level, parity.epsilon());
    }
    HermitianForm::new(p, level, parity, m, vec![0; 2 * h])
}

/// `I + c E_ij` (`i != j`).
pub fn elementary_matrix(p: u32, level: u32, rank: usize, i: usize, j: usize, c: GroupRingElement) -> GroupRingMatrix {
    assert!(
        i != j && i < rank && j < rank,
        "elementary matrix needs distinct indices below the rank"
    );
    let mut m = identity_matrix(p, level, rank);
    m[i][j] = c;
    m
}

/// The identity with the unit `±g^s` in position `(i, i)`.
pub fn unit_diagonal_matrix(p: u32, level: u32, rank: usize, i: usize, sign: i64, s: i64) -> GroupRingMatrix {
    assert!(sign == 1 || sign == -1, "unit sign must be ±1");
    let mut m = identity_matrix(p, level, rank);
    m[i][i] = GroupRingElement::group_element(p, level, s).scale(sign);
    m
}

pub fn identity_matrix(p: u32, level: u32, rank: usize) -> GroupRingMatrix {
    (0..rank)
        .map(|i| {
            (0..rank)
                .map(|j| GroupRingElement::constant(p, level, i64::from(i == j)))
                .collect()
        })
        .collect()
}
