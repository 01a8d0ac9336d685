//! Decomposition of the fourth exterior power into irreducible summands,
//! and the weight vector basis adapted to that decomposition.
//!
//! A highest weight vector of weight w is a weight-w vector killed by E;
//! it generates an irreducible summand V(w), and the multiplicity of V(w)
//! in the decomposition equals dim M_w - dim M_{w+2}, where M_w is the
//! weight-w slice of the exterior power (E maps M_w onto M_{w+2} for
//! w >= 0). Applying the divided powers (1/k!) F^k for k = 0..=w to a
//! highest weight vector with integer coordinates yields w + 1 integer
//! weight vectors spanning the summand: the 1/k! exactly cancels the
//! coefficients accumulated by F, so integrality is preserved (asserted
//! at every step).
//!
//! The weight vector basis lists summands by decreasing highest weight,
//! equal weights ordered as their highest weight vectors appear in the
//! canonical integral nullspace basis, and vectors within a summand by
//! increasing F power. The change of basis matrix C holds these vectors
//! as columns; the rows of C^-1 express projection onto each summand in
//! quadruple coordinates.

use num::{Integer, Zero};

use crate::exactla::{invert, nullspace_cib, Int, RatMatrix, Rational};

use super::action::{act_on_quadruple, e_action_matrix, Gen};
use super::basis::ExteriorBasis;

/// Canonical integral basis of the highest weight vectors of weight w, in
/// coordinates over the weight-w slice of the exterior basis.
pub fn highest_weight_vectors(basis: &ExteriorBasis, w: i32) -> Vec<Vec<Int>> {
    nullspace_cib(&e_action_matrix(basis, w))
}

/// Multiset of irreducible summands of the fourth exterior power of V(n),
/// as (highest weight, multiplicity) pairs in decreasing weight order.
pub fn decompose(n: u32) -> Vec<(i32, usize)> {
    let basis = ExteriorBasis::new(n);
    let mut out = Vec::new();
    for w in basis.weights().filter(|&w| w >= 0) {
        let mult = basis
            .dim_weight(w)
            .checked_sub(basis.dim_weight(w + 2))
            .expect("weight space dimensions must not increase away from zero");
        if mult > 0 {
            out.push((w, mult));
        }
    }
    out
}

/// Apply a generator to an integer vector in quadruple coordinates.
pub fn apply(g: Gen, basis: &ExteriorBasis, coords: &[Int]) -> Vec<Int> {
    let mut out = vec![Int::zero(); basis.dim()];
    for (i, c) in coords.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (q, a) in act_on_quadruple(g, basis.n(), &basis.quad(i)) {
            let j = basis
                .index_of(&q)
                .expect("generator action stays inside the wedge basis");
            out[j] += c * Int::from(a);
        }
    }
    out
}

/// Embed coordinates over the weight-w slice into full quadruple
/// coordinates.
pub fn embed(basis: &ExteriorBasis, w: i32, slice: &[Int]) -> Vec<Int> {
    let range = basis.weight_range(w);
    assert_eq!(
        slice.len(),
        range.len(),
        "slice length must match the weight-{w} space dimension"
    );
    let mut out = vec![Int::zero(); basis.dim()];
    for (off, x) in slice.iter().enumerate() {
        out[range.start + off] = x.clone();
    }
    out
}

/// One irreducible summand V(weight) of the decomposition.
#[derive(Clone, Debug)]
pub struct Summand {
    /// Highest weight of the summand.
    pub weight: i32,
    /// Position among the summands of equal weight, in the order their
    /// highest weight vectors appear in the canonical integral basis.
    pub copy: usize,
    /// Highest weight vector in coordinates over its weight slice.
    pub hwv: Vec<Int>,
}

/// The divided power (1/k!) F^k applied to a highest weight vector, in
/// full quadruple coordinates.
#[derive(Clone, Debug)]
pub struct WeightVector {
    /// Index into the summand list of the generating highest weight vector.
    pub summand: usize,
    /// F power k; the vector has weight summand weight minus 2k.
    pub power: usize,
    /// Integer coordinates over the full exterior basis, supported on a
    /// single weight slice.
    pub coords: Vec<Int>,
}

/// The weight vector basis of the fourth exterior power of V(n).
#[derive(Clone, Debug)]
pub struct WeightVectorBasis {
    basis: ExteriorBasis,
    summands: Vec<Summand>,
    vectors: Vec<WeightVector>,
}

impl WeightVectorBasis {
    pub fn new(n: u32) -> Self {
        let basis = ExteriorBasis::new(n);
        let mut summands = Vec::new();
        let mut vectors = Vec::new();
        let weights: Vec<i32> = basis.weights().filter(|&w| w >= 0).collect();
        for w in weights {
            for (copy, hwv) in highest_weight_vectors(&basis, w).into_iter().enumerate() {
                let s = summands.len();
                let mut u = embed(&basis, w, &hwv);
                summands.push(Summand { weight: w, copy, hwv });
                vectors.push(WeightVector {
                    summand: s,
                    power: 0,
                    coords: u.clone(),
                });
                for k in 1..=w as usize {
                    u = apply(Gen::F, &basis, &u)
                        .into_iter()
                        .map(|x| exact_div(x, k))
                        .collect();
                    vectors.push(WeightVector {
                        summand: s,
                        power: k,
                        coords: u.clone(),
                    });
                }
            }
        }
        assert_eq!(
            vectors.len(),
            basis.dim(),
            "weight vector count must equal the exterior power dimension"
        );
        WeightVectorBasis {
            basis,
            summands,
            vectors,
        }
    }

    pub fn n(&self) -> u32 {
        self.basis.n()
    }

    pub fn basis(&self) -> &ExteriorBasis {
        &self.basis
    }

    pub fn summands(&self) -> &[Summand] {
        &self.summands
    }

    pub fn vectors(&self) -> &[WeightVector] {
        &self.vectors
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    /// First index of the vector block belonging to summand s: the sum of
    /// weight + 1 over the preceding summands.
    pub fn block_offset(&self, s: usize) -> usize {
        self.summands[..s]
            .iter()
            .map(|x| x.weight as usize + 1)
            .sum()
    }

    /// Change of basis matrix C whose j-th column holds the j-th weight
    /// vector in quadruple coordinates.
    pub fn change_of_basis(&self) -> RatMatrix {
        let d = self.dim();
        let mut c = RatMatrix::zero(d, d);
        for (j, v) in self.vectors.iter().enumerate() {
            for (i, x) in v.coords.iter().enumerate() {
                if !x.is_zero() {
                    c.set(i, j, Rational::from(x.clone()));
                }
            }
        }
        c
    }

    /// Inverse of the change of basis matrix.
    pub fn inverse_change_of_basis(&self) -> RatMatrix {
        invert(&self.change_of_basis()).expect("weight vectors must form a basis")
    }
}

/// Divide by k, panicking when the division is not exact.
fn exact_div(x: Int, k: usize) -> Int {
    let (q, r) = x.div_rem(&Int::from(k));
    assert!(r.is_zero(), "divided power coordinates must stay integral");
    q
}
