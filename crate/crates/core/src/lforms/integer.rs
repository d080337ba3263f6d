use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::Parity;
use crate::scalars::Rational;
use crate::{Error, Result};

/// An integer matrix `b` with `b^T = epsilon b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntegerForm {
    parity: Parity,
    matrix: Vec<Vec<i64>>,
}

impl IntegerForm {
    pub fn new(parity: Parity, matrix: Vec<Vec<i64>>) -> Result<IntegerForm> {
        let q = matrix.len();
        if matrix.iter().any(|row| row.len() != q) {
            return Err(Error::InvalidForm("matrix is not square".into()));
        }
        let eps = parity.epsilon();
        for i in 0..q {
            for j in 0..q {
                if matrix[j][i] != eps * matrix[i][j] {
                    return Err(Error::InvalidForm(format!("entry ({i}, {j}) violates b^T = {eps} b")));
                }
            }
        }
        Ok(IntegerForm { parity, matrix })
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        determinant(&self.matrix)
    }

    pub fn is_unimodular(&self) -> bool {
        self.determinant().abs() == BigInt::from(1)
    }
}

pub(crate) fn determinant(matrix: &[Vec<i64>]) -> BigInt {
    let n = matrix.len();
    let mut a: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut sign = 1;
    let mut prev = BigInt::from(1);
    for k in 0..n {
        let Some(piv) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return BigInt::zero();
        };
        if piv != k {
            a.swap(piv, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    if n == 0 {
        return BigInt::from(1);
    }
    prev * sign
}

/// Signature of a symmetric integer form by exact congruence
/// diagonalization over the rationals; degenerate directions count zero.
pub fn signature_int(b: &IntegerForm) -> Result<i64> {
    if b.parity != Parity::Plus {
        return Err(Error::InvalidForm("signature needs a symmetric form".into()));
    }
    let mut h: Vec<Vec<Rational>> = b
        .matrix
        .iter()
        .map(|row| row.iter().map(|&x| Rational::from_integer(x.into())).collect())
        .collect();
    let mut sig = 0i64;
    while !h.is_empty() {
        let n = h.len();
        let piv = match (0..n).find(|&i| !h[i][i].is_zero()) {
            Some(i) => i,
            None => {
                let Some((i, j)) = (0..n)
                    .flat_map(|i| (0..n).map(move |j| (i, j)))
                    .find(|&(i, j)| !h[i][j].is_zero())
                else {
                    break;
                };
                // e_i -> e_i + e_j gives diagonal 2 h_ij
                for k in 0..n {
                    let v = h[j][k].clone();
                    h[i][k] += v;
                }
                for k in 0..n {
                    let v = h[k][j].clone();
                    h[k][i] += v;
                }
                i
            }
        };
        let d = h[piv][piv].clone();
        sig += if d.is_positive() { 1 } else { -1 };
        let row = h[piv].clone();
        let mut next = Vec::with_capacity(n - 1);
        for (i, hi) in h.iter().enumerate() {
            if i == piv {
                continue;
            }
            let f = &hi[piv] / &d;
            next.push((0..n).filter(|&j| j != piv).map(|j| &hi[j] - &f * &row[j]).collect());
        }
        h = next;
    }
    Ok(sig)
}

/// Arf invariant of the quadratic refinement `q` (values mod 2 on the
/// basis) of the mod-2 reduction of `b`, which must be alternating and
/// nondegenerate.
pub fn arf(b: &IntegerForm, q: &[u8]) -> Result<u8> {
    let n = b.rank();
    if q.len() != n {
        return Err(Error::InvalidForm(format!(
            "refinement has {} values for rank {n}",
            q.len()
        )));
    }
    let bm: Vec<Vec<u8>> = b
        .matrix
        .iter()
        .map(|row| row.iter().map(|&x| x.rem_euclid(2) as u8).collect())
        .collect();
    if (0..n).any(|i| bm[i][i] != 0) {
        return Err(Error::InvalidForm("mod-2 form is not alternating".into()));
    }
    let pair = |x: &[u8], y: &[u8]| -> u8 {
        let mut s = 0;
        for i in 0..n {
            if x[i] == 0 {
                continue;
            }
            for j in 0..n {
                s ^= x[i] & bm[i][j] & y[j];
            }
        }
        s
    };
    let quad = |x: &[u8]| -> u8 {
        let mut s = 0;
        for i in 0..n {
            if x[i] == 0 {
                continue;
            }
            s ^= q[i] & 1;
            for j in i + 1..n {
                s ^= x[j] & bm[i][j];
            }
        }
        s
    };
    let mut vecs: Vec<Vec<u8>> = (0..n).map(|i| (0..n).map(|j| u8::from(i == j)).collect()).collect();
    let mut total = 0u8;
    while let Some(e) = vecs.pop() {
        let Some(fi) = vecs.iter().position(|v| pair(&e, v) == 1) else {
            return Err(Error::InvalidForm("mod-2 form is degenerate".into()));
        };
        let f = vecs.swap_remove(fi);
        total ^= quad(&e) & quad(&f);
        // project the rest onto the orthogonal complement of <e, f>
        for v in vecs.iter_mut() {
            let (ve, vf) = (pair(v, &e), pair(v, &f));
            for k in 0..n {
                v[k] ^= (vf & e[k]) ^ (ve & f[k]);
            }
        }
    }
    Ok(total)
}

/// The `E_8` Cartan matrix: even, unimodular, positive definite.
pub fn e8_matrix() -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; 8]; 8];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 2;
    }
    // chain 0-1-2-3-4-5-6 with node 7 attached to node 4
    let edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7)];
    for (a, b) in edges {
        m[a][b] = -1;
        m[b][a] = -1;
    }
    m
}
