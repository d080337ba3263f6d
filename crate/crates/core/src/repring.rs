//! Representation rings `R(C_{p^k})` and the Chern-character target solver.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::scalars::{FpScalar, PrimeField};
use crate::{Error, Result};

/// A virtual complex representation of `C_{p^k}` in the basis of characters
/// `chi^r`, `0 <= r < p^k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VirtualRep {
    p: u32,
    level: u32,
    mults: BTreeMap<u64, i64>,
}

/// Order `p^level` of the cyclic group.
pub fn group_order(p: u32, level: u32) -> Result<u64> {
    (p as u64)
        .checked_pow(level)
        .filter(|&n| n < (1u64 << 40))
        .ok_or_else(|| Error::Domain(format!("group order {p}^{level} is too large")))
}

impl VirtualRep {
    pub fn zero(p: u32, level: u32) -> VirtualRep {
        assert!(level >= 1, "level must be at least 1");
        VirtualRep {
            p,
            level,
            mults: BTreeMap::new(),
        }
    }

    /// The character `chi^r`.
    pub fn character(p: u32, level: u32, r: i64) -> VirtualRep {
        let mut v = VirtualRep::zero(p, level);
        v.add_mult(r, 1);
        v
    }

    pub fn from_pairs<I: IntoIterator<Item = (i64, i64)>>(p: u32, level: u32, pairs: I) -> VirtualRep {
        let mut v = VirtualRep::zero(p, level);
        for (r, m) in pairs {
            v.add_mult(r, m);
        }
        v
    }

    fn add_mult(&mut self, r: i64, m: i64) {
        if m == 0 {
            return;
        }
        let r = r.rem_euclid(self.order() as i64) as u64;
        let e = self.mults.entry(r).or_insert(0);
        *e += m;
        if *e == 0 {
            self.mults.remove(&r);
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

    pub fn multiplicity(&self, r: i64) -> i64 {
        let r = r.rem_euclid(self.order() as i64) as u64;
        self.mults.get(&r).copied().unwrap_or(0)
    }

    /// Nonzero `(r, m_r)` pairs in ascending `r`.
    pub fn pairs(&self) -> Vec<(u64, i64)> {
        self.mults.iter().map(|(&r, &m)| (r, m)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.mults.is_empty()
    }

    pub fn dim(&self) -> i64 {
        self.mults.values().sum()
    }

    fn check_same(&self, o: &VirtualRep) -> Result<()> {
        if self.p != o.p || self.level != o.level {
            return Err(Error::Mismatch(format!(
                "R(C_{}^{}) vs R(C_{}^{})",
                self.p, self.level, o.p, o.level
            )));
        }
        Ok(())
    }

    pub fn add(&self, o: &VirtualRep) -> Result<VirtualRep> {
        self.check_same(o)?;
        let mut out = self.clone();
        for (&r, &m) in &o.mults {
            out.add_mult(r as i64, m);
        }
        Ok(out)
    }

    pub fn sub(&self, o: &VirtualRep) -> Result<VirtualRep> {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> VirtualRep {
        self.scale(-1)
    }

    pub fn scale(&self, k: i64) -> VirtualRep {
        let mut out = VirtualRep::zero(self.p, self.level);
        for (&r, &m) in &self.mults {
            out.add_mult(r as i64, m * k);
        }
        out
    }

    /// Tensor product: `chi^a chi^b = chi^{a+b}`.
    pub fn mul(&self, o: &VirtualRep) -> Result<VirtualRep> {
        self.check_same(o)?;
        let mut out = VirtualRep::zero(self.p, self.level);
        for (&a, &ma) in &self.mults {
            for (&b, &mb) in &o.mults {
                out.add_mult((a + b) as i64, ma * mb);
            }
        }
        Ok(out)
    }

    /// Complex conjugation `chi^r -> chi^{-r}`.
    pub fn conjugate(&self) -> VirtualRep {
        let mut out = VirtualRep::zero(self.p, self.level);
        for (&r, &m) in &self.mults {
            out.add_mult(-(r as i64), m);
        }
        out
    }

    /// Restriction to `C_{p^{k-1}}`: `chi^r -> chi^{r mod p^{k-1}}`.
    pub fn restrict(&self) -> Result<VirtualRep> {
        if self.level < 2 {
            return Err(Error::Domain("restriction needs level k >= 2".into()));
        }
        let mut out = VirtualRep::zero(self.p, self.level - 1);
        for (&r, &m) in &self.mults {
            out.add_mult(r as i64, m);
        }
        Ok(out)
    }
}

impl fmt::Display for VirtualRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mults.is_empty() {
            return write!(f, "0");
        }
        for (k, (r, m)) in self.mults.iter().enumerate() {
            let sep = match (k, *m < 0) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            let a = m.unsigned_abs();
            if a == 1 {
                write!(f, "{sep}chi^{r}")?;
            } else {
                write!(f, "{sep}{a}*chi^{r}")?;
            }
        }
        Ok(())
    }
}

/// Wire form: sorted `[r, m_r]` pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RepPairs(pub Vec<(u64, i64)>);

impl From<&VirtualRep> for RepPairs {
    fn from(v: &VirtualRep) -> RepPairs {
        RepPairs(v.pairs())
    }
}

impl RepPairs {
    /// Rebuilds a representation, rejecting unsorted, duplicate, zero or
    /// out-of-range entries so that the wire form stays canonical.
    pub fn to_rep(&self, p: u32, level: u32) -> Result<VirtualRep> {
        let order = group_order(p, level)?;
        let mut prev: Option<u64> = None;
        for &(r, m) in &self.0 {
            if r >= order || m == 0 || prev.is_some_and(|q| q >= r) {
                return Err(Error::Domain(format!("non-canonical representation entry [{r}, {m}]")));
            }
            prev = Some(r);
        }
        let mut v = VirtualRep::zero(p, level);
        v.mults = self.0.iter().copied().collect();
        Ok(v)
    }
}

// Vandermonde systems up to this size are solved by elimination; beyond it
// the power-sum inversion keeps the cost linear in p per nonzero target.
const ELIMINATION_LIMIT: u32 = 400;

/// Finds `xi = sum_r m_r chi^r` with `0 <= m_r < p` and `ch_j(xi) = x_j c^j`
/// for `0 <= j < p`.
///
/// The Chern character matrix is `diag(j!)^{-1} (r^j)_{j,r}`, so the targets
/// are scaled by `j!` and the Vandermonde system `(r^j) m = (j! x_j)` is
/// solved over `F_p`.
pub fn solve_chern_targets(field: &PrimeField, targets: &[FpScalar]) -> Result<VirtualRep> {
    let p = field.p();
    if p == 2 {
        return Err(Error::Domain("solve_chern_targets needs an odd prime".into()));
    }
    if targets.len() != p as usize || targets.iter().any(|t| t.p() != p) {
        return Err(Error::Mismatch(format!("expected {p} targets in F_{p}")));
    }
    let scaled = scale_by_factorials(field, targets);
    let m = if p <= ELIMINATION_LIMIT {
        solve_by_elimination(field, &scaled)
    } else {
        solve_by_power_sums(field, &scaled)
    };
    Ok(VirtualRep::from_pairs(
        p,
        1,
        m.into_iter().enumerate().map(|(r, v)| (r as i64, v.value() as i64)),
    ))
}

fn scale_by_factorials(field: &PrimeField, targets: &[FpScalar]) -> Vec<FpScalar> {
    let mut fact = field.one();
    targets
        .iter()
        .enumerate()
        .map(|(j, &x)| {
            if j > 0 {
                fact = fact * field.elem(j as i64);
            }
            x * fact
        })
        .collect()
}

/// `r^j` with `0^0 = 1`.
fn power(field: &PrimeField, r: u64, j: u64) -> FpScalar {
    field.elem(r as i64).pow(j)
}

/// Gauss–Jordan elimination of `(r^j)_{j,r} m = y` over `F_p`.
pub(crate) fn solve_by_elimination(field: &PrimeField, y: &[FpScalar]) -> Vec<FpScalar> {
    let n = y.len();
    let mut rows: Vec<Vec<FpScalar>> = (0..n)
        .map(|j| {
            let mut row: Vec<FpScalar> = (0..n).map(|r| power(field, r as u64, j as u64)).collect();
            row.push(y[j]);
            row
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !rows[r][col].is_zero())
            .expect("Vandermonde matrix over distinct nodes is invertible");
        rows.swap(col, pivot);
        let inv = rows[col][col].inv().expect("nonzero pivot");
        for x in rows[col].iter_mut() {
            *x = *x * inv;
        }
        let pivot_row = rows[col].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let f = row[col];
            for (x, &pv) in row.iter_mut().zip(&pivot_row) {
                *x = *x - f * pv;
            }
        }
    }
    rows.into_iter().map(|row| row[n]).collect()
}

/// Closed-form inverse of the full Vandermonde matrix over `F_p`.
///
/// Writing `m_r = h(r)` for a polynomial `h = sum_t h_t X^t` of degree below
/// `p`, the power sums `sum_r r^u` vanish unless `u > 0` and `(p-1) | u`,
/// where they equal `-1`. Hence `h_t = -y_{p-1-t}` for `t >= 1` and
/// `h_0 = y_0 - y_{p-1}`.
pub(crate) fn solve_by_power_sums(field: &PrimeField, y: &[FpScalar]) -> Vec<FpScalar> {
    let p = field.p() as usize;
    let mut h: Vec<(u64, FpScalar)> = Vec::new();
    let h0 = y[0] - y[p - 1];
    for (t, &yt) in y.iter().enumerate().skip(1).map(|(t, _)| (t, &y[p - 1 - t])) {
        if !yt.is_zero() {
            h.push((t as u64, -yt));
        }
    }
    (0..p)
        .map(|r| h.iter().fold(h0, |acc, &(t, ht)| acc + ht * power(field, r as u64, t)))
        .collect()
}

/// `m (xi + (-1)^n conj(xi))` with `2m = 1 mod p`, `m = (p+1)/2`.
pub fn symmetrize(xi: &VirtualRep, n: u32) -> Result<VirtualRep> {
    if xi.p % 2 == 0 {
        return Err(Error::Domain("symmetrize needs an odd prime".into()));
    }
    let m = (xi.p as i64 + 1) / 2;
    let conj = xi.conjugate();
    let sum = if n % 2 == 0 { xi.add(&conj)? } else { xi.sub(&conj)? };
    Ok(sum.scale(m))
}
