//! Shared fixtures for the criterion benches.

use pontryagin_core::lforms::{random_form, Parity};
use pontryagin_core::{FpScalar, HermitianForm, PrimeField};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Random unimodular forms over `Z[C_{p^k}]`, reproducible from `seed`.
pub fn seeded_forms(seed: u64, p: u32, level: u32, parity: Parity, rank: usize, count: usize) -> Vec<HermitianForm> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| random_form(&mut rng, p, level, parity, rank).expect("valid form parameters"))
        .collect()
}

/// A random Chern-character target vector `(y_0, ..., y_{p-1})`.
pub fn seeded_targets(seed: u64, field: &PrimeField) -> Vec<FpScalar> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = field.p();
    (0..p).map(|_| field.elem(rng.gen_range(0..p as i64))).collect()
}
