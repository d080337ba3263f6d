use rand::Rng;

use super::hermitian::{elementary_matrix, hyperbolic, unit_diagonal_matrix};
use super::{GroupRingElement, HermitianForm, Parity};
use crate::{Error, Result};

/// A random unimodular form for tests and benchmarks: a hyperbolic or
/// (for `epsilon = +1`) diagonal `±1` form twisted by 1–6 random elementary
/// or unit-diagonal congruences, entries of support at most 3 with
/// coefficients in `[-2, 2]`. Skew forms need even rank and get a random
/// refinement.
pub fn random_form<R: Rng + ?Sized>(
    rng: &mut R,
    p: u32,
    level: u32,
    parity: Parity,
    rank: usize,
) -> Result<HermitianForm> {
    if rank == 0 {
        return Err(Error::Domain("random forms need positive rank".into()));
    }
    let mut form = match parity {
        Parity::Minus if rank % 2 == 1 => {
            return Err(Error::Domain("skew-hermitian unimodular forms need even rank".into()))
        }
        Parity::Minus => {
            let h = hyperbolic(parity, p, level, rank / 2)?;
            let q: Vec<u8> = (0..rank).map(|_| rng.gen_range(0..2)).collect();
            HermitianForm::new(p, level, parity, h.matrix().to_vec(), q)?
        }
        Parity::Plus if rank % 2 == 0 && rng.gen_bool(0.5) => hyperbolic(parity, p, level, rank / 2)?,
        Parity::Plus => {
            let diag: Vec<Vec<i64>> = (0..rank)
                .map(|i| {
                    (0..rank)
                        .map(|j| if i == j { [1, -1][rng.gen_range(0..2)] } else { 0 })
                        .collect()
                })
                .collect();
            HermitianForm::from_integer_matrix(p, level, parity, &diag, vec![0; rank])?
        }
    };
    let order = (p as i64).pow(level);
    for _ in 0..rng.gen_range(1..=6) {
        let e = if rank > 1 && rng.gen_bool(0.8) {
            let i = rng.gen_range(0..rank);
            let j = (i + rng.gen_range(1..rank)) % rank;
            let support = rng.gen_range(1..=3);
            let c = GroupRingElement::from_terms(
                p,
                level,
                (0..support).map(|_| (rng.gen_range(0..order), [-2, -1, 1, 2][rng.gen_range(0..4)])),
            );
            elementary_matrix(p, level, rank, i, j, c)
        } else {
            let sign = [1, -1][rng.gen_range(0..2)];
            unit_diagonal_matrix(p, level, rank, rng.gen_range(0..rank), sign, rng.gen_range(0..order))
        };
        form = form.congruence(&e)?;
    }
    Ok(form)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn seeded_and_unimodular() {
        for seed in 0..10 {
            let a = random_form(&mut ChaCha8Rng::seed_from_u64(seed), 3, 1, Parity::Plus, 3).unwrap();
            let b = random_form(&mut ChaCha8Rng::seed_from_u64(seed), 3, 1, Parity::Plus, 3).unwrap();
            assert_eq!(a, b);
            assert!(a.is_unimodular());
            let s = random_form(&mut ChaCha8Rng::seed_from_u64(seed), 5, 1, Parity::Minus, 2).unwrap();
            assert!(s.is_unimodular());
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        assert!(random_form(&mut rng, 3, 1, Parity::Minus, 3).is_err());
    }
}
