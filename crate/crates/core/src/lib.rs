//! Exact-arithmetic toolkit for a family of alternating quaternary algebras.
//!
//! The library has four layers:
//!
//! - [`exactla`]: exact linear algebra over the rationals, over prime fields,
//!   and over the univariate polynomial ring Q[x] (row canonical forms,
//!   canonical integral nullspace bases, inversion, Smith form).
//! - [`sl2rep`]: irreducible sl(2) representations V(n), the tensor basis of
//!   their fourth exterior power, highest weight vectors, and the structure
//!   constants of the equivariant projections Lambda^4 V(n) -> V(n).
//! - [`multiplicity`]: closed-form and enumerative counts of how often V(n)
//!   occurs in Lambda^4 V(n), via cycle indices and restricted partitions.
//! - [`identity`]: multilinear monomial bases in degrees 4, 7 and 10,
//!   straightening, randomized fill-and-reduce identity searches, module
//!   generator extraction, and parametric Smith-form scans.

pub mod exactla;
pub mod identity;
pub mod multiplicity;
pub mod sl2rep;

/// Library version, embedded in run manifests.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
