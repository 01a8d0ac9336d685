//! Exact linear algebra over Q, Z/p and Q[x].
//!
//! Scalars are arbitrary-precision: [`Rational`] is always kept in lowest
//! terms with a positive denominator (zero is 0/1), [`Int`] is an unbounded
//! integer. Matrices are dense.
//!
//! Conventions that the rest of the crate depends on:
//! - row reduction scans each column top-down and pivots on the *first*
//!   nonzero entry (no magnitude heuristics; results are exact either way);
//! - nullspace bases are "canonical integral": per free column, the free
//!   variable is set to +1, denominators are cleared and common integer
//!   factors cancelled, so every basis vector is a primitive integer vector;
//! - Smith-form diagonals over Q[x] are normalized monic.

mod matrix;
mod modular;
mod poly;
mod reducer;
mod ring;
mod smith;

pub use matrix::{cib_from_rcf, invert, nullspace_cib, rcf, RatMatrix, Rcf};
pub use modular::{mod_nullspace, mod_rcf, ModMatrix, ModRcf};
pub use poly::UniPoly;
pub use reducer::{ModReducer, RatReducer};
pub use ring::{IntRing, ModRing, PolyRing, RatRing, Ring};
pub use smith::{smith_diagonal, PolyMatrix};

use num::BigInt;
use num::BigRational;

/// Arbitrary-precision rational, always in lowest terms, denominator > 0.
pub type Rational = BigRational;
/// Arbitrary-precision integer.
pub type Int = BigInt;

/// Integer rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(Int::from(n))
}

/// Rational n/d in lowest terms. Panics if d == 0.
pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(Int::from(n), Int::from(d))
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ExactLaError {
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("polynomial division by zero")]
    PolyDivByZero,
    #[error("modulus {0} is not a prime greater than 1")]
    BadModulus(u64),
}
