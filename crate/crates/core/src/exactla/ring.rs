//! Commutative ring abstraction for the multilinear evaluation kernels.
//!
//! The algebra structures get evaluated over three coefficient rings:
//! unbounded integers (exact searches), a prime field (large modular
//! searches), and Q[x] (parametric pencils of structures). The ring carries
//! any context an element needs, e.g. the modulus.

use num::Zero;

use super::{Int, Rational, UniPoly};

pub trait Ring {
    type Elem: Clone + std::fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn from_int(&self, v: &Int) -> Self::Elem;
    fn from_u64(&self, v: u64) -> Self::Elem;
}

/// Unbounded integers.
pub struct IntRing;

impl Ring for IntRing {
    type Elem = Int;

    fn zero(&self) -> Int {
        Int::zero()
    }
    fn one(&self) -> Int {
        Int::from(1)
    }
    fn is_zero(&self, a: &Int) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Int, b: &Int) -> Int {
        a + b
    }
    fn sub(&self, a: &Int, b: &Int) -> Int {
        a - b
    }
    fn mul(&self, a: &Int, b: &Int) -> Int {
        a * b
    }
    fn neg(&self, a: &Int) -> Int {
        -a
    }
    fn from_int(&self, v: &Int) -> Int {
        v.clone()
    }
    fn from_u64(&self, v: u64) -> Int {
        Int::from(v)
    }
}

/// Rationals.
pub struct RatRing;

impl Ring for RatRing {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn one(&self) -> Rational {
        super::rat(1)
    }
    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }
    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a - b
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn neg(&self, a: &Rational) -> Rational {
        -a
    }
    fn from_int(&self, v: &Int) -> Rational {
        Rational::from_integer(v.clone())
    }
    fn from_u64(&self, v: u64) -> Rational {
        Rational::from_integer(Int::from(v))
    }
}

/// Prime field Z/p; elements are residues in [0, p).
///
/// Multiplication assumes p < 2^32 so products fit in u64.
pub struct ModRing {
    pub p: u64,
}

impl ModRing {
    pub fn new(p: u64) -> Self {
        debug_assert!(p > 1 && p < (1 << 32));
        ModRing { p }
    }
}

impl Ring for ModRing {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn from_int(&self, v: &Int) -> u64 {
        use num::Integer;
        let m = v.mod_floor(&Int::from(self.p));
        u64::try_from(m).expect("reduced residue fits in u64")
    }
    fn from_u64(&self, v: u64) -> u64 {
        v % self.p
    }
}

/// The polynomial ring Q[x].
pub struct PolyRing;

impl Ring for PolyRing {
    type Elem = UniPoly;

    fn zero(&self) -> UniPoly {
        UniPoly::zero()
    }
    fn one(&self) -> UniPoly {
        UniPoly::one()
    }
    fn is_zero(&self, a: &UniPoly) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &UniPoly, b: &UniPoly) -> UniPoly {
        a.add(b)
    }
    fn sub(&self, a: &UniPoly, b: &UniPoly) -> UniPoly {
        a.sub(b)
    }
    fn mul(&self, a: &UniPoly, b: &UniPoly) -> UniPoly {
        a.mul(b)
    }
    fn neg(&self, a: &UniPoly) -> UniPoly {
        a.neg()
    }
    fn from_int(&self, v: &Int) -> UniPoly {
        UniPoly::constant(Rational::from_integer(v.clone()))
    }
    fn from_u64(&self, v: u64) -> UniPoly {
        UniPoly::constant(Rational::from_integer(Int::from(v)))
    }
}
