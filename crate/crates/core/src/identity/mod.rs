//! Multilinear polynomial identities of the alternating quaternary bracket.
//!
//! A degree-d multilinear identity is a linear combination of bracketings
//! of d distinct variables that evaluates to zero for every substitution
//! into a fixed structure. This module provides:
//!
//! - canonical monomial bases in degrees 4, 7 and 10, with a straightening
//!   rule that rewrites an arbitrary bracketing as a signed basis monomial
//!   ([`monomial`]);
//! - identity vectors over the integers, the symmetric-group action on
//!   them, and the two distinguished identities: the derivation identity D
//!   and the alternating sum S ([`vector`]);
//! - evaluation of monomials and identities on argument tuples over any
//!   coefficient ring ([`evaluate`]);
//! - the fill-and-reduce search for the full identity space of a structure,
//!   with held-out validation, plus minimal generator extraction under the
//!   symmetric-group action ([`search`]);
//! - the degree-10 consequences of D and S and the dimension of the module
//!   they generate ([`consequences`]);
//! - Smith-form scans of one-parameter pencils f + x g to locate the
//!   parameter values with extra identities ([`parametric`]).
//!
//! All searches are deterministic: argument tuples come from a seeded
//! [`SplitMix64`] stream and every basis is in a pinned order
//! ([`ORDER_VERSION`]).

pub mod consequences;
pub mod evaluate;
pub mod monomial;
pub mod parametric;
pub mod rng;
pub mod search;
pub mod vector;

pub use consequences::{
    consequence_module_dimension, consequence_module_dimension_with, degree10_consequences,
};
pub use evaluate::{evaluate_identity, evaluate_monomial, MonomialEvaluator};
pub use monomial::{
    basis_len, straighten, MalformedBracketing, Monomial, MonomialBasis, RawArg, RawBracket,
    Straightened, UnsupportedDegree, ORDER_VERSION,
};
pub use parametric::{parametric_scan, parametric_scan_with, summarize_diagonal, ParametricStructure};
pub use rng::SplitMix64;
pub use search::{
    fill_and_reduce, fill_and_reduce_with, module_generators, module_generators_with,
    permutation_module, Arithmetic, ModuleGenerators, SearchConfig, SearchOutcome,
};
pub use vector::{
    apply_permutation, canonical_identity, permutation_sign, CanonicalIdentity, IdentityVector,
};
