//! Hermitian forms over `Z[C_{p^k}]`: multisignatures, coefficient forms,
//! signatures, Arf invariants, congruences and transfers.

mod file;
mod group_ring;
mod hermitian;
mod integer;
mod random;

use serde::{Deserialize, Serialize};

pub use file::FormFile;
pub use group_ring::GroupRingElement;
pub use hermitian::{
    elementary_matrix, hyperbolic, identity_matrix, unit_diagonal_matrix, GroupRingMatrix, HermitianForm,
};
pub use integer::{arf, e8_matrix, signature_int, IntegerForm};
pub use random::random_form;

use crate::repring::VirtualRep;
use crate::Result;

/// The symmetry `epsilon = (-1)^n` of a form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Parity {
    Plus,
    Minus,
}

impl Parity {
    pub fn epsilon(self) -> i64 {
        match self {
            Parity::Plus => 1,
            Parity::Minus => -1,
        }
    }

    pub fn from_epsilon(eps: i64) -> Option<Parity> {
        match eps {
            1 => Some(Parity::Plus),
            -1 => Some(Parity::Minus),
            _ => None,
        }
    }

    /// `(-1)^n`.
    pub fn of_dimension(n: u32) -> Parity {
        if n % 2 == 0 {
            Parity::Plus
        } else {
            Parity::Minus
        }
    }
}

/// Coefficient of `1` in every entry.
pub fn coefficient_form(form: &HermitianForm) -> IntegerForm {
    form.coefficient_form()
}

pub fn multisignature(form: &HermitianForm) -> Result<VirtualRep> {
    form.multisignature()
}

pub fn transfer(form: &HermitianForm) -> Result<HermitianForm> {
    form.transfer()
}

pub fn congruence(form: &HermitianForm, e: &GroupRingMatrix) -> Result<HermitianForm> {
    form.congruence(e)
}
