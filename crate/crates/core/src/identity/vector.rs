//! Integer coefficient vectors over the canonical monomial basis.
//!
//! An identity candidate in degree d is a linear combination of the degree-d
//! canonical monomials; it holds in an algebra when the combination
//! evaluates to zero for all arguments. Coefficients are kept as exact
//! integers: nullspace bases arrive as primitive integer vectors, and the
//! two distinguished degree-7 identities have coefficients in {-1, 0, 1}.
//!
//! Applying a variable permutation sends each monomial to a signed canonical
//! monomial (straightening), so the symmetric group acts on coefficient
//! vectors by signed column permutations; [`apply_permutation`] implements
//! that action.

use num::{Signed, Zero};

use crate::exactla::Int;

use super::monomial::{basis_len, straighten, Monomial, MonomialBasis, RawArg, RawBracket, Straightened};

/// Coefficient vector of an identity candidate, indexed by the canonical
/// monomial basis of its degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IdentityVector {
    degree: u32,
    coeffs: Vec<Int>,
}

impl IdentityVector {
    pub fn zero(degree: u32) -> Self {
        let len = basis_len(degree).unwrap_or_else(|| panic!("unsupported degree {degree}"));
        IdentityVector { degree, coeffs: vec![Int::zero(); len] }
    }

    pub fn from_coeffs(degree: u32, coeffs: Vec<Int>) -> Self {
        let len = basis_len(degree).unwrap_or_else(|| panic!("unsupported degree {degree}"));
        assert_eq!(coeffs.len(), len, "coefficient count for degree {degree}");
        IdentityVector { degree, coeffs }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coeffs(&self) -> &[Int] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Int {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Nonzero entries as (basis index, coefficient).
    pub fn terms(&self) -> impl Iterator<Item = (usize, &Int)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c))
    }

    pub fn add_term(&mut self, index: usize, c: &Int) {
        self.coeffs[index] += c;
    }

    pub fn neg(&self) -> IdentityVector {
        IdentityVector {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Sum of squared coefficients; the sort weight in the module
    /// generators algorithm.
    pub fn norm_squared(&self) -> Int {
        self.coeffs.iter().map(|c| c * c).sum()
    }

    /// Divide by the gcd of the coefficients (no-op for the zero vector).
    pub fn primitive(&self) -> IdentityVector {
        use num::Integer;
        let mut g = Int::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        if g.is_zero() || g == Int::from(1) {
            return self.clone();
        }
        IdentityVector {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        }
    }

    /// Serialize as `index:coefficient` pairs for the nonzero entries, in
    /// basis order.
    pub fn to_pair_line(&self) -> String {
        let mut parts = Vec::new();
        for (i, c) in self.terms() {
            parts.push(format!("{i}:{c}"));
        }
        parts.join(" ")
    }

    /// Parse the `to_pair_line` format.
    pub fn from_pair_line(degree: u32, line: &str) -> Option<IdentityVector> {
        let mut out = IdentityVector::zero(degree);
        for part in line.split_whitespace() {
            let (i, c) = part.split_once(':')?;
            let i: usize = i.parse().ok()?;
            let c: Int = c.parse().ok()?;
            if i >= out.coeffs.len() {
                return None;
            }
            out.coeffs[i] = c;
        }
        Some(out)
    }
}

/// Sign of a permutation given in one-line form over 1..=n.
pub fn permutation_sign(perm: &[u8]) -> i32 {
    let mut sign = 1;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                sign = -sign;
            }
        }
    }
    sign
}

fn assert_permutation(perm: &[u8], degree: u32) {
    assert_eq!(perm.len(), degree as usize, "permutation length");
    let mut seen = vec![false; degree as usize];
    for &v in perm {
        assert!(v >= 1 && v as u32 <= degree && !seen[v as usize - 1], "not a permutation of 1..={degree}");
        seen[v as usize - 1] = true;
    }
}

/// Relabel the variables of every monomial by `perm` (variable v becomes
/// `perm[v-1]`), straighten, and accumulate the signed coefficients.
pub fn apply_permutation(basis: &MonomialBasis, iv: &IdentityVector, perm: &[u8]) -> IdentityVector {
    assert_eq!(basis.degree(), iv.degree(), "basis and vector degree");
    assert_permutation(perm, iv.degree());
    let mut out = IdentityVector::zero(iv.degree());
    for (i, c) in iv.terms() {
        let raw = basis.get(i).permuted_raw(perm);
        match straighten(&raw).expect("relabeling a canonical monomial stays well-formed") {
            Straightened::Zero => unreachable!("bijective relabeling cannot repeat a variable"),
            Straightened::Term { monomial, sign } => {
                let j = basis.index_of(&monomial);
                if sign > 0 {
                    out.coeffs[j] += c;
                } else {
                    out.coeffs[j] -= c;
                }
            }
        }
    }
    out
}

/// The two distinguished degree-7 identities.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CanonicalIdentity {
    /// The inner bracket acts as a derivation of the outer one: the
    /// straightened five-term form
    /// `[[a,b,c,d],e,f,g] - [[a,b,c,e],d,f,g] + [[a,b,c,f],d,e,g]
    ///  - [[a,b,c,g],d,e,f] + [[d,e,f,g],a,b,c]`.
    Derivation,
    /// The signed sum of `[[a,b,c,d],e,f,g]` over all permutations of the
    /// seven variables, scaled to primitive coefficients.
    AlternatingSum,
}

/// Coefficient vector of a distinguished identity over the degree-7 basis.
pub fn canonical_identity(basis: &MonomialBasis, kind: CanonicalIdentity) -> IdentityVector {
    assert_eq!(basis.degree(), 7, "canonical identities live in degree 7");
    match kind {
        CanonicalIdentity::Derivation => {
            let mut out = IdentityVector::zero(7);
            let terms: [(i64, [u8; 4], [u8; 3]); 5] = [
                (1, [1, 2, 3, 4], [5, 6, 7]),
                (-1, [1, 2, 3, 5], [4, 6, 7]),
                (1, [1, 2, 3, 6], [4, 5, 7]),
                (-1, [1, 2, 3, 7], [4, 5, 6]),
                (1, [4, 5, 6, 7], [1, 2, 3]),
            ];
            for (c, inner, outer) in terms {
                let m = Monomial::Nested { inner, outer };
                out.coeffs[basis.index_of(&m)] += Int::from(c);
            }
            out
        }
        CanonicalIdentity::AlternatingSum => {
            use itertools::Itertools;
            let mut out = IdentityVector::zero(7);
            for perm in (1u8..=7).permutations(7) {
                let raw = RawBracket::new([
                    RawArg::nested(RawBracket::new([
                        RawArg::Var(perm[0]),
                        RawArg::Var(perm[1]),
                        RawArg::Var(perm[2]),
                        RawArg::Var(perm[3]),
                    ])),
                    RawArg::Var(perm[4]),
                    RawArg::Var(perm[5]),
                    RawArg::Var(perm[6]),
                ]);
                let Straightened::Term { monomial, sign } = straighten(&raw).expect("well-formed")
                else {
                    unreachable!("distinct variables cannot vanish");
                };
                let c = permutation_sign(&perm) * sign;
                out.coeffs[basis.index_of(&monomial)] += Int::from(c);
            }
            let out = out.primitive();
            debug_assert!(
                out.coeffs.iter().all(|c| c.abs() == Int::from(1)),
                "all coefficients of the alternating sum are unit after scaling"
            );
            debug_assert_eq!(out.coeffs[0], Int::from(1), "leading coefficient normalization");
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use itertools::Itertools;

    use super::*;

    fn basis7() -> MonomialBasis {
        MonomialBasis::new(7).unwrap()
    }

    #[test]
    fn derivation_identity_has_five_unit_terms() {
        let basis = basis7();
        let d = canonical_identity(&basis, CanonicalIdentity::Derivation);
        let terms: Vec<(usize, Int)> = d.terms().map(|(i, c)| (i, c.clone())).collect();
        assert_eq!(terms.len(), 5);
        assert!(terms.iter().all(|(_, c)| c.abs() == Int::from(1)));
        assert_eq!(d.norm_squared(), Int::from(5));
    }

    #[test]
    fn derivation_identity_matches_its_defining_equation() {
        // [a,b,c,[d,e,f,g]] minus the four terms distributing [a,b,c,.]
        // over the inner slots straightens to the negative of the stored
        // five-term form.
        let basis = basis7();
        let mut expanded = IdentityVector::zero(7);
        let head = |slots: [u8; 4]| {
            RawArg::nested(RawBracket::new(slots.map(RawArg::Var)))
        };
        let mut add = |c: i64, raw: RawBracket| {
            let Straightened::Term { monomial, sign } = straighten(&raw).unwrap() else {
                panic!("term expected");
            };
            expanded.add_term(basis.index_of(&monomial), &Int::from(c * sign as i64));
        };
        add(1, RawBracket::new([RawArg::Var(1), RawArg::Var(2), RawArg::Var(3), head([4, 5, 6, 7])]));
        add(-1, RawBracket::new([head([1, 2, 3, 4]), RawArg::Var(5), RawArg::Var(6), RawArg::Var(7)]));
        add(-1, RawBracket::new([RawArg::Var(4), head([1, 2, 3, 5]), RawArg::Var(6), RawArg::Var(7)]));
        add(-1, RawBracket::new([RawArg::Var(4), RawArg::Var(5), head([1, 2, 3, 6]), RawArg::Var(7)]));
        add(-1, RawBracket::new([RawArg::Var(4), RawArg::Var(5), RawArg::Var(6), head([1, 2, 3, 7])]));
        let d = canonical_identity(&basis, CanonicalIdentity::Derivation);
        assert_eq!(expanded, d.neg(), "defining equation equals minus the canonical form");
    }

    #[test]
    fn alternating_sum_has_all_unit_coefficients() {
        let basis = basis7();
        let s = canonical_identity(&basis, CanonicalIdentity::AlternatingSum);
        assert_eq!(s.terms().count(), 35);
        assert!(s.coeffs().iter().all(|c| c.abs() == Int::from(1)));
        assert_eq!(*s.coeff(0), Int::from(1));
    }

    #[test]
    fn alternating_sum_is_sign_equivariant() {
        let basis = basis7();
        let s = canonical_identity(&basis, CanonicalIdentity::AlternatingSum);
        for perm in (1u8..=7).permutations(7).step_by(397) {
            let image = apply_permutation(&basis, &s, &perm);
            let expect = if permutation_sign(&perm) > 0 { s.clone() } else { s.neg() };
            assert_eq!(image, expect, "alternating sum must transform by the sign character");
        }
    }

    #[test]
    fn derivation_identity_alternates_in_its_two_groups() {
        let basis = basis7();
        let d = canonical_identity(&basis, CanonicalIdentity::Derivation);
        let swap12: Vec<u8> = vec![2, 1, 3, 4, 5, 6, 7];
        let swap56: Vec<u8> = vec![1, 2, 3, 4, 6, 5, 7];
        assert_eq!(apply_permutation(&basis, &d, &swap12), d.neg());
        assert_eq!(apply_permutation(&basis, &d, &swap56), d.neg());
    }

    #[test]
    fn permutations_compose_and_invert() {
        let basis = basis7();
        let d = canonical_identity(&basis, CanonicalIdentity::Derivation);
        let id: Vec<u8> = (1..=7).collect();
        assert_eq!(apply_permutation(&basis, &d, &id), d);
        let tau: Vec<u8> = vec![3, 1, 2, 7, 4, 6, 5];
        let inv: Vec<u8> = vec![2, 3, 1, 5, 7, 6, 4];
        let once = apply_permutation(&basis, &d, &tau);
        assert_eq!(apply_permutation(&basis, &once, &inv), d);
    }

    #[test]
    fn pair_lines_round_trip() {
        let basis = basis7();
        let d = canonical_identity(&basis, CanonicalIdentity::Derivation);
        let line = d.to_pair_line();
        assert_eq!(IdentityVector::from_pair_line(7, &line).unwrap(), d);
    }

    #[test]
    fn permutation_sign_counts_inversions() {
        assert_eq!(permutation_sign(&[1, 2, 3]), 1);
        assert_eq!(permutation_sign(&[2, 1, 3]), -1);
        assert_eq!(permutation_sign(&[2, 3, 1]), 1);
        assert_eq!(permutation_sign(&[3, 2, 1]), -1);
    }
}
