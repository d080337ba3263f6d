//! Exact algebra behind detecting the Euler class and the topological
//! Pontryagin classes of `BTop(2n)` with cyclic group actions.
//!
//! The crate is organised bottom-up:
//!
//! * [`scalars`]: rationals, Bernoulli numbers, prime fields and exact
//!   sign determination in real cyclotomic fields.
//! * [`symfun`]: weighted polynomials over the rationals, the L-genus
//!   multiplicative sequence and its inverse.
//! * [`cyclic_coh`]: even mod-p cohomology of `BC_p` and the characteristic
//!   classes of linear and non-linear representation data.
//! * [`repring`]: representation rings of cyclic `p`-groups and the
//!   Chern-character target solver.
//! * [`detect`]: the witness pipeline and certificate verification.
//! * [`lforms`]: hermitian forms over `Z[C_{p^k}]`, multisignatures,
//!   Arf invariants and transfers.
//! * [`certificate`]: the JSON certificate file format.

pub mod certificate;
pub mod cyclic_coh;
pub mod detect;
mod error;
pub mod lforms;
pub mod repring;
pub mod scalars;
pub mod symfun;

pub use error::{Error, Result};

pub use cyclic_coh::{CpClass, LinearRepData};
pub use detect::{DetectionProblem, WitnessCertificate, WitnessPoint};
pub use lforms::{GroupRingElement, HermitianForm, IntegerForm, Parity};
pub use repring::VirtualRep;
pub use scalars::{CyclotomicReal, FpScalar, PrimeField, Rational};
pub use symfun::{GradedPolynomial, LTable, Var};
