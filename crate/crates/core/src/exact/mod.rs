//! Exact integer and rational algebra: polynomials, matrices,
//! characteristic polynomials, ranks and real-root counting.
//!
//! Nothing here touches floating point.

mod charpoly;
mod matrix;
pub mod modular;
mod poly;
mod rank;
mod sturm;

pub use charpoly::{charpoly, charpoly_berkowitz, charpoly_mod_p, charpoly_multimodular, BERKOWITZ_MAX_N};
pub use matrix::{eval_poly_at_matrix, IntMatrix};
pub use poly::IntPoly;
pub use rank::{bareiss_rank, independent_rows_mod_p, rank_exact, rank_mod_p};
pub use sturm::{real_root_count, sturm_root_count, sturm_sequence};

/// Exact rational with positive, coprime denominator.
pub type Rat = num_rational::BigRational;

use num_bigint::BigInt;

/// `(quotient, remainder)` of `p` by `x - t`.
pub fn divide_out_root(p: &IntPoly, t: &BigInt) -> (IntPoly, BigInt) {
    p.divide_out_root(t)
}

pub fn eval_poly_at_int(p: &IntPoly, t: &BigInt) -> BigInt {
    p.eval(t)
}

/// Integer roots with multiplicities, ascending.
pub fn integer_roots(p: &IntPoly) -> Vec<(BigInt, usize)> {
    p.integer_roots()
}
