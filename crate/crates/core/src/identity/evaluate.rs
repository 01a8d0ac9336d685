//! Monomial and identity evaluation over a prepared structure.
//!
//! Evaluating a monomial substitutes one vector per variable and applies the
//! bracket along the association type. The searches evaluate every basis
//! monomial on the same argument tuple, so the evaluator precomputes an
//! execution plan per monomial and shares the first-level bracket values:
//! in degree 10 each of the C(10,4) = 210 leaf brackets feeds many of the
//! 5775 monomials.

use std::collections::HashMap;

use crate::exactla::Ring;
use crate::sl2rep::bracket::PreparedStructure;

use super::monomial::{Monomial, MonomialBasis};
use super::vector::IdentityVector;

/// Evaluate one monomial: variable v takes the value `args[v-1]`.
pub fn evaluate_monomial<R: Ring>(
    ps: &PreparedStructure<R>,
    m: &Monomial,
    args: &[Vec<R::Elem>],
) -> Vec<R::Elem> {
    assert_eq!(args.len(), m.degree() as usize, "one argument vector per variable");
    let arg = |v: u8| &args[v as usize - 1];
    let own = |vars: [u8; 4]| ps.bracket([arg(vars[0]), arg(vars[1]), arg(vars[2]), arg(vars[3])]);
    match *m {
        Monomial::Single { group } => own(group),
        Monomial::Nested { inner, outer } => {
            let head = own(inner);
            ps.bracket([&head, arg(outer[0]), arg(outer[1]), arg(outer[2])])
        }
        Monomial::Chain { inner, middle, outer } => {
            let head = own(inner);
            let mid = ps.bracket([&head, arg(middle[0]), arg(middle[1]), arg(middle[2])]);
            ps.bracket([&mid, arg(outer[0]), arg(outer[1]), arg(outer[2])])
        }
        Monomial::Pair { left, right, outer } => {
            let l = own(left);
            let r = own(right);
            ps.bracket([&l, &r, arg(outer[0]), arg(outer[1])])
        }
    }
}

/// Evaluate a coefficient vector: the signed sum of its monomial values.
pub fn evaluate_identity<R: Ring>(
    ps: &PreparedStructure<R>,
    basis: &MonomialBasis,
    iv: &IdentityVector,
    args: &[Vec<R::Elem>],
) -> Vec<R::Elem> {
    assert_eq!(basis.degree(), iv.degree(), "basis and vector degree");
    let ring = ps.ring();
    let mut acc = vec![ring.zero(); ps.dim()];
    for (i, c) in iv.terms() {
        let c = ring.from_int(c);
        let val = evaluate_monomial(ps, basis.get(i), args);
        for (a, v) in acc.iter_mut().zip(&val) {
            *a = ring.add(a, &ring.mul(&c, v));
        }
    }
    acc
}

enum Plan {
    Single { leaf: usize },
    Nested { leaf: usize, outer: [u8; 3] },
    Chain { leaf: usize, middle: [u8; 3], outer: [u8; 3] },
    Pair { left: usize, right: usize, outer: [u8; 2] },
}

/// Batch evaluator for a whole monomial basis over one structure.
pub struct MonomialEvaluator<'a, R: Ring> {
    ps: &'a PreparedStructure<R>,
    /// Distinct first-level bracket groups, in first-use order.
    leaves: Vec<[u8; 4]>,
    plans: Vec<Plan>,
    degree: u32,
}

impl<'a, R: Ring> MonomialEvaluator<'a, R> {
    pub fn new(ps: &'a PreparedStructure<R>, basis: &MonomialBasis) -> Self {
        let mut leaf_ids: HashMap<[u8; 4], usize> = HashMap::new();
        let mut leaves = Vec::new();
        let mut leaf = |g: [u8; 4]| -> usize {
            *leaf_ids.entry(g).or_insert_with(|| {
                leaves.push(g);
                leaves.len() - 1
            })
        };
        let plans = basis
            .monomials()
            .iter()
            .map(|m| match *m {
                Monomial::Single { group } => Plan::Single { leaf: leaf(group) },
                Monomial::Nested { inner, outer } => Plan::Nested { leaf: leaf(inner), outer },
                Monomial::Chain { inner, middle, outer } => {
                    Plan::Chain { leaf: leaf(inner), middle, outer }
                }
                Monomial::Pair { left, right, outer } => {
                    Plan::Pair { left: leaf(left), right: leaf(right), outer }
                }
            })
            .collect();
        MonomialEvaluator { ps, leaves, plans, degree: basis.degree() }
    }

    /// Values of every basis monomial on one argument tuple, in basis order.
    pub fn evaluate_all(&self, args: &[Vec<R::Elem>]) -> Vec<Vec<R::Elem>> {
        assert_eq!(args.len(), self.degree as usize, "one argument vector per variable");
        let arg = |v: u8| &args[v as usize - 1];
        let leaf_vals: Vec<Vec<R::Elem>> = self
            .leaves
            .iter()
            .map(|g| self.ps.bracket([arg(g[0]), arg(g[1]), arg(g[2]), arg(g[3])]))
            .collect();
        self.plans
            .iter()
            .map(|plan| match plan {
                Plan::Single { leaf } => leaf_vals[*leaf].clone(),
                Plan::Nested { leaf, outer } => {
                    self.ps.bracket([&leaf_vals[*leaf], arg(outer[0]), arg(outer[1]), arg(outer[2])])
                }
                Plan::Chain { leaf, middle, outer } => {
                    let mid = self.ps.bracket([
                        &leaf_vals[*leaf],
                        arg(middle[0]),
                        arg(middle[1]),
                        arg(middle[2]),
                    ]);
                    self.ps.bracket([&mid, arg(outer[0]), arg(outer[1]), arg(outer[2])])
                }
                Plan::Pair { left, right, outer } => {
                    self.ps.bracket([&leaf_vals[*left], &leaf_vals[*right], arg(outer[0]), arg(outer[1])])
                }
            })
            .collect()
    }
}
