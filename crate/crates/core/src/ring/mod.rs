//! Exact Laurent polynomials and rational functions in `q, t, u`, and q-analogs.

mod gcd;
mod parse;
mod poly;
mod qseries;
mod rat;

pub use gcd::gcd;
pub use poly::{Mono, QtPoly, Q, T, U};
pub use qseries::{
    binom2, pochhammer, q_binomial, q_factorial, q_int, q_multinomial, q_pochhammer, qq_pochhammer,
    tt_pochhammer,
};
pub use rat::QtRat;

/// `normalize` as a free function.
pub fn normalize(r: &QtRat) -> QtRat {
    r.normalize()
}
