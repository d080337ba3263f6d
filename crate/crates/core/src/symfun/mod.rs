//! Weighted polynomials over the rationals and the L-genus
//! multiplicative sequence.

mod lgenus;
mod parse;
mod poly;

pub use lgenus::{ell_polynomial, l_leading_coefficient, l_table, leading_coefficient_check, tanh_series, LTable};
pub use parse::parse_polynomial;
pub use poly::{GradedPolynomial, Monomial, Var};
