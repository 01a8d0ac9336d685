//! Degree-10 consequences of the degree-7 identities.
//!
//! A degree-7 identity I(x1,...,x7) yields degree-10 identities in two ways:
//! substituting a bracket of four variables into one slot, and bracketing
//! the whole identity with three fresh variables. Because the two
//! distinguished identities alternate in groups of their slots, only a few
//! substitution slots produce genuinely different consequences:
//!
//! * the derivation identity alternates in slots {1,2,3} and {4,5,6,7}, so
//!   six consequences suffice: substitution into slot 1, into each of slots
//!   4..7, and the outer bracketing;
//! * the alternating sum alternates in all seven slots, so two suffice:
//!   substitution into slot 1 and the outer bracketing.
//!
//! The dimension of the module these consequences generate is computed from
//! symmetry classes rather than all 10! permutation images: a consequence
//! that alternates in variable blocks of sizes (k1, k2, ...) has, up to
//! sign, one image per ordered partition of the ten variables into blocks
//! of those sizes. Substituting into slots 5..7 of the derivation identity
//! is skipped because those consequences are signed variable relabelings of
//! the slot-4 consequence; this is asserted, not assumed.

use crate::exactla::{ModReducer, ModRing, Ring};

use super::monomial::{straighten, Monomial, MonomialBasis, RawArg, RawBracket, Straightened};
use super::vector::{apply_permutation, canonical_identity, CanonicalIdentity, IdentityVector};

/// Substitute `args[k]` for slot k+1 of every monomial of a degree-7
/// coefficient vector and restraighten over the degree-10 basis.
fn substitute(
    basis7: &MonomialBasis,
    basis10: &MonomialBasis,
    iv: &IdentityVector,
    args: &[RawArg; 7],
) -> IdentityVector {
    let mut out = IdentityVector::zero(10);
    for (i, c) in iv.terms() {
        let Monomial::Nested { inner, outer } = *basis7.get(i) else {
            panic!("degree-7 basis monomials are singly nested");
        };
        let slot = |v: u8| args[v as usize - 1].clone();
        let raw = RawBracket::new([
            RawArg::nested(RawBracket::new([
                slot(inner[0]),
                slot(inner[1]),
                slot(inner[2]),
                slot(inner[3]),
            ])),
            slot(outer[0]),
            slot(outer[1]),
            slot(outer[2]),
        ]);
        match straighten(&raw).expect("substitution preserves well-formedness") {
            Straightened::Zero => unreachable!("distinct variables cannot repeat"),
            Straightened::Term { monomial, sign } => {
                out.add_term(basis10.index_of(&monomial), &(c * sign));
            }
        }
    }
    out
}

/// Bracket every monomial of a degree-7 coefficient vector with three fresh
/// variables: I(x1..x7) becomes [I(x1..x7), x8, x9, x10].
fn wrap(basis7: &MonomialBasis, basis10: &MonomialBasis, iv: &IdentityVector) -> IdentityVector {
    let mut out = IdentityVector::zero(10);
    let id: Vec<u8> = (1..=7).collect();
    for (i, c) in iv.terms() {
        let inner = basis7.get(i).permuted_raw(&id);
        let raw = RawBracket::new([
            RawArg::nested(inner),
            RawArg::Var(8),
            RawArg::Var(9),
            RawArg::Var(10),
        ]);
        match straighten(&raw).expect("wrapping preserves well-formedness") {
            Straightened::Zero => unreachable!("distinct variables cannot repeat"),
            Straightened::Term { monomial, sign } => {
                out.add_term(basis10.index_of(&monomial), &(c * sign));
            }
        }
    }
    out
}

/// Argument list that feeds `[x_slot, x8, x9, x10]` into one slot and plain
/// variables into the rest.
fn slot_substitution_args(slot: u8) -> [RawArg; 7] {
    std::array::from_fn(|k| {
        let v = k as u8 + 1;
        if v == slot {
            RawArg::nested(RawBracket::new([
                RawArg::Var(v),
                RawArg::Var(8),
                RawArg::Var(9),
                RawArg::Var(10),
            ]))
        } else {
            RawArg::Var(v)
        }
    })
}

/// The degree-10 consequences of a distinguished degree-7 identity, in the
/// order: slot substitutions, then the outer bracketing.
pub fn degree10_consequences(kind: CanonicalIdentity) -> Vec<IdentityVector> {
    let basis7 = MonomialBasis::new(7).unwrap();
    let basis10 = MonomialBasis::new(10).unwrap();
    let iv = canonical_identity(&basis7, kind);
    let slots: &[u8] = match kind {
        CanonicalIdentity::Derivation => &[1, 4, 5, 6, 7],
        CanonicalIdentity::AlternatingSum => &[1],
    };
    let mut out: Vec<IdentityVector> = slots
        .iter()
        .map(|&slot| substitute(&basis7, &basis10, &iv, &slot_substitution_args(slot)))
        .collect();
    out.push(wrap(&basis7, &basis10, &iv));
    out
}

/// A consequence together with the variable blocks it alternates in; images
/// under permutations moving whole blocks are equal up to sign, so ordered
/// block partitions enumerate the distinct rows.
struct SymmetryClass {
    vector: IdentityVector,
    blocks: Vec<Vec<u8>>,
}

fn assert_alternates(basis10: &MonomialBasis, class: &SymmetryClass, what: &str) {
    for block in &class.blocks {
        for w in block.windows(2) {
            let mut perm: Vec<u8> = (1..=10).collect();
            perm.swap(w[0] as usize - 1, w[1] as usize - 1);
            let image = apply_permutation(basis10, &class.vector, &perm);
            assert_eq!(
                image,
                class.vector.neg(),
                "{what} must alternate in the block {block:?} (swap {w:?})"
            );
        }
    }
}

/// Representative consequences for the module-dimension computation, with
/// the redundant derivation slots eliminated by an asserted relabeling.
fn symmetry_classes(kind: CanonicalIdentity) -> Vec<SymmetryClass> {
    let basis10 = MonomialBasis::new(10).unwrap();
    let cons = degree10_consequences(kind);
    let classes = match kind {
        CanonicalIdentity::Derivation => {
            // Substituting into slots 5, 6, 7 relabels the slot-4
            // consequence by a transposition, up to sign.
            for (i, &other) in [5u8, 6, 7].iter().enumerate() {
                let mut perm: Vec<u8> = (1..=10).collect();
                perm.swap(3, other as usize - 1);
                let relabeled = apply_permutation(&basis10, &cons[1], &perm);
                assert!(
                    relabeled == cons[2 + i] || relabeled == cons[2 + i].neg(),
                    "slot-{other} consequence must be a signed relabeling of the slot-4 one"
                );
            }
            vec![
                SymmetryClass {
                    vector: cons[0].clone(),
                    blocks: vec![vec![1, 8, 9, 10], vec![2, 3], vec![4, 5, 6, 7]],
                },
                SymmetryClass {
                    vector: cons[1].clone(),
                    blocks: vec![vec![1, 2, 3], vec![4, 8, 9, 10], vec![5, 6, 7]],
                },
                SymmetryClass {
                    vector: cons[5].clone(),
                    blocks: vec![vec![1, 2, 3], vec![4, 5, 6, 7], vec![8, 9, 10]],
                },
            ]
        }
        CanonicalIdentity::AlternatingSum => vec![
            SymmetryClass {
                vector: cons[0].clone(),
                blocks: vec![vec![1, 8, 9, 10], vec![2, 3, 4, 5, 6, 7]],
            },
            SymmetryClass {
                vector: cons[1].clone(),
                blocks: vec![vec![1, 2, 3, 4, 5, 6, 7], vec![8, 9, 10]],
            },
        ],
    };
    for class in &classes {
        assert_alternates(&basis10, class, "symmetry-class representative");
    }
    classes
}

/// Ordered partitions of 1..=10 into blocks of the given sizes, emitted as
/// the block lists in lexicographic order.
fn ordered_partitions(sizes: &[usize]) -> Vec<Vec<Vec<u8>>> {
    fn choose(set: &[u8], k: usize) -> Vec<(Vec<u8>, Vec<u8>)> {
        fn rec(set: &[u8], k: usize, start: usize, cur: &mut Vec<u8>, out: &mut Vec<(Vec<u8>, Vec<u8>)>) {
            if cur.len() == k {
                let rest: Vec<u8> = set.iter().copied().filter(|v| !cur.contains(v)).collect();
                out.push((cur.clone(), rest));
                return;
            }
            for i in start..set.len() {
                cur.push(set[i]);
                rec(set, k, i + 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(set, k, 0, &mut Vec::new(), &mut out);
        out
    }
    fn rec(remaining: Vec<u8>, sizes: &[usize], prefix: Vec<Vec<u8>>, out: &mut Vec<Vec<Vec<u8>>>) {
        match sizes.split_first() {
            None => out.push(prefix),
            Some((&k, rest)) => {
                for (block, left) in choose(&remaining, k) {
                    let mut next = prefix.clone();
                    next.push(block);
                    rec(left, rest, next, out);
                }
            }
        }
    }
    let all: Vec<u8> = (1..=10).collect();
    let mut out = Vec::new();
    rec(all, sizes, Vec::new(), &mut out);
    out
}

/// Dimension of the module generated by the degree-10 consequences of a
/// distinguished identity, computed over Z/p from one row per symmetry
/// class image.
pub fn consequence_module_dimension(kind: CanonicalIdentity, p: u64) -> usize {
    consequence_module_dimension_with(kind, p, |_, _| {})
}

/// As [`consequence_module_dimension`], reporting (rows fed, rank).
pub fn consequence_module_dimension_with(
    kind: CanonicalIdentity,
    p: u64,
    mut progress: impl FnMut(usize, usize),
) -> usize {
    let basis10 = MonomialBasis::new(10).unwrap();
    let ring = ModRing::new(p);
    let classes = symmetry_classes(kind);
    let mut reducer = ModReducer::new(p, basis10.len());
    let mut row = vec![0u64; basis10.len()];
    let mut fed = 0usize;
    for class in &classes {
        let sizes: Vec<usize> = class.blocks.iter().map(Vec::len).collect();
        for partition in ordered_partitions(&sizes) {
            // Map each block's variables, in ascending order, onto the
            // partition's block; other assignments differ only by sign.
            let mut perm = vec![0u8; 10];
            for (block, target) in class.blocks.iter().zip(&partition) {
                for (&from, &to) in block.iter().zip(target) {
                    perm[from as usize - 1] = to;
                }
            }
            let image = apply_permutation(&basis10, &class.vector, &perm);
            for (j, c) in image.coeffs().iter().enumerate() {
                row[j] = ring.from_int(c);
            }
            reducer.add_row(&row);
            fed += 1;
            if fed % 500 == 0 {
                progress(fed, reducer.rank());
            }
        }
    }
    progress(fed, reducer.rank());
    reducer.rank()
}
