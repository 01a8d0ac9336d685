//! Randomized properties of the core algorithms. Every test here checks an
//! algebraic law on freshly generated inputs; none of them compares against
//! recorded tables, so they exercise the library independently of the data
//! the acceptance suite pins down.

use std::sync::OnceLock;

use num::Zero;
use proptest::prelude::*;

use quatalg::exactla::{frac, invert, nullspace_cib, rcf, Int, IntRing, RatMatrix, Rational};
use quatalg::identity::{
    apply_permutation, evaluate_identity, fill_and_reduce, permutation_sign, Arithmetic,
    IdentityVector, MonomialBasis, SearchConfig, SplitMix64,
};
use quatalg::sl2rep::action::{apply_vn, Gen};
use quatalg::sl2rep::basis::ExteriorBasis;
use quatalg::sl2rep::decompose::apply;
use quatalg::sl2rep::structure::{structure_table, StructureTable};

fn cached_table(n: u32, copy: usize) -> &'static StructureTable {
    static T40: OnceLock<StructureTable> = OnceLock::new();
    static T60: OnceLock<StructureTable> = OnceLock::new();
    static T80: OnceLock<StructureTable> = OnceLock::new();
    static T81: OnceLock<StructureTable> = OnceLock::new();
    let cell = match (n, copy) {
        (4, 0) => &T40,
        (6, 0) => &T60,
        (8, 0) => &T80,
        (8, 1) => &T81,
        _ => panic!("no cached structure for n={n} copy={copy}"),
    };
    cell.get_or_init(|| structure_table(n, copy).expect("structure exists"))
}

fn exterior_dim(n: u32) -> usize {
    let m = n as usize + 1;
    m * (m - 1) * (m - 2) * (m - 3) / 24
}

/// Row-major rational matrix data: entries are (numerator, denominator).
fn matrix_data(
    rows: std::ops::RangeInclusive<usize>,
    cols: std::ops::RangeInclusive<usize>,
) -> impl Strategy<Value = Vec<Vec<(i64, u8)>>> {
    (rows, cols).prop_flat_map(|(r, c)| {
        proptest::collection::vec(proptest::collection::vec((-9i64..=9, 1u8..=4), c), r)
    })
}

fn to_matrix(data: &[Vec<(i64, u8)>]) -> RatMatrix {
    RatMatrix::from_rows(
        data.iter()
            .map(|row| row.iter().map(|&(n, d)| frac(n, i64::from(d))).collect())
            .collect(),
    )
}

fn int_vec(len: usize) -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(-9i64..=9, len)
}

fn to_ints(v: &[i64]) -> Vec<Int> {
    v.iter().map(|&x| Int::from(x)).collect()
}

fn vec_add(a: &[Int], b: &[Int]) -> Vec<Int> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn vec_sub(a: &[Int], b: &[Int]) -> Vec<Int> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn vec_scale(k: i64, a: &[Int]) -> Vec<Int> {
    a.iter().map(|x| x * Int::from(k)).collect()
}

/// Permutation of 1..=degree drawn from a seed by a Fisher-Yates shuffle.
fn permutation(degree: usize, seed: u64) -> Vec<u8> {
    let mut perm: Vec<u8> = (1..=degree as u8).collect();
    let mut rng = SplitMix64::new(seed);
    for i in (1..degree).rev() {
        let j = (rng.next_u64() % (i as u64 + 1)) as usize;
        perm.swap(i, j);
    }
    perm
}

fn inverse_permutation(perm: &[u8]) -> Vec<u8> {
    let mut inv = vec![0u8; perm.len()];
    for (i, &p) in perm.iter().enumerate() {
        inv[p as usize - 1] = i as u8 + 1;
    }
    inv
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn rcf_is_idempotent(data in matrix_data(1..=5, 1..=5)) {
        let m = to_matrix(&data);
        let first = rcf(&m);
        let second = rcf(&first.matrix);
        prop_assert_eq!(&second.matrix, &first.matrix, "reducing a reduced matrix must not change it");
        prop_assert_eq!(second.rank, first.rank, "rank must be stable under re-reduction");
        prop_assert_eq!(second.pivot_cols, first.pivot_cols, "pivot columns must be stable");
    }

    #[test]
    fn integral_nullspace_vectors_annihilate_the_matrix(data in matrix_data(1..=5, 1..=6)) {
        let m = to_matrix(&data);
        let basis = nullspace_cib(&m);
        let rank = rcf(&m).rank;
        prop_assert_eq!(basis.len(), m.cols() - rank, "nullspace dimension must complement the rank");
        for v in &basis {
            prop_assert!(v.iter().any(|c| !c.is_zero()), "basis vectors must be nonzero");
            for i in 0..m.rows() {
                let mut acc = Rational::zero();
                for (j, c) in v.iter().enumerate() {
                    acc += m.at(i, j) * Rational::from_integer(c.clone());
                }
                prop_assert!(acc.is_zero(), "row {} times kernel vector must vanish exactly", i);
            }
        }
    }

    #[test]
    fn inverses_multiply_to_the_identity(data in matrix_data(1..=5, 1..=5)) {
        let square: Vec<Vec<(i64, u8)>> = {
            let size = data.len().min(data[0].len());
            data.iter().take(size).map(|row| row[..size].to_vec()).collect()
        };
        let m = to_matrix(&square);
        match invert(&m) {
            Ok(inv) => {
                prop_assert!(m.mul(&inv).is_identity(), "M * M^-1 must be the identity");
                prop_assert!(inv.mul(&m).is_identity(), "M^-1 * M must be the identity");
            }
            Err(_) => {
                prop_assert!(rcf(&m).rank < m.rows(), "only rank-deficient matrices may fail to invert");
            }
        }
    }

    #[test]
    fn generator_commutators_hold_on_the_exterior_power(
        (n, coords) in prop_oneof![Just(4u32), Just(6), Just(8)]
            .prop_flat_map(|n| (Just(n), int_vec(exterior_dim(n))))
    ) {
        let basis = ExteriorBasis::new(n);
        let v = to_ints(&coords);
        let e = |w: &[Int]| apply(Gen::E, &basis, w);
        let f = |w: &[Int]| apply(Gen::F, &basis, w);
        let h = |w: &[Int]| apply(Gen::H, &basis, w);
        prop_assert_eq!(vec_sub(&e(&f(&v)), &f(&e(&v))), h(&v), "EF - FE must equal H");
        prop_assert_eq!(vec_sub(&h(&e(&v)), &e(&h(&v))), vec_scale(2, &e(&v)), "HE - EH must equal 2E");
        prop_assert_eq!(vec_sub(&h(&f(&v)), &f(&h(&v))), vec_scale(-2, &f(&v)), "HF - FH must equal -2F");
    }

    #[test]
    fn brackets_alternate_and_are_multilinear(
        (n, copy, args, extra) in prop_oneof![Just((4u32, 0usize)), Just((6, 0)), Just((8, 1))]
            .prop_flat_map(|(n, copy)| {
                let len = n as usize + 1;
                (Just(n), Just(copy),
                 proptest::collection::vec(int_vec(len), 4),
                 int_vec(len))
            }),
        slot_a in 0usize..4,
        slot_b in 0usize..4,
    ) {
        let ps = cached_table(n, copy).prepare(IntRing);
        let args: Vec<Vec<Int>> = args.iter().map(|a| to_ints(a)).collect();
        let extra = to_ints(&extra);
        let bracket = |a: &[Int], b: &[Int], c: &[Int], d: &[Int]| ps.bracket([a, b, c, d]);

        if slot_a != slot_b {
            let mut repeated: Vec<&[Int]> = args.iter().map(Vec::as_slice).collect();
            repeated[slot_b] = repeated[slot_a];
            let value = ps.bracket([repeated[0], repeated[1], repeated[2], repeated[3]]);
            prop_assert!(value.iter().all(Int::is_zero), "a repeated argument must give zero");

            let mut swapped: Vec<&[Int]> = args.iter().map(Vec::as_slice).collect();
            swapped.swap(slot_a, slot_b);
            let plain = ps.bracket([&args[0], &args[1], &args[2], &args[3]]);
            let flipped = ps.bracket([swapped[0], swapped[1], swapped[2], swapped[3]]);
            prop_assert_eq!(vec_add(&plain, &flipped), vec![Int::zero(); n as usize + 1],
                "swapping two arguments must flip the sign");
        }

        let summed = vec_add(&args[0], &extra);
        let lhs = bracket(&summed, &args[1], &args[2], &args[3]);
        let rhs = vec_add(
            &bracket(&args[0], &args[1], &args[2], &args[3]),
            &bracket(&extra, &args[1], &args[2], &args[3]),
        );
        prop_assert_eq!(lhs, rhs, "the bracket must be additive in its first slot");
    }

    #[test]
    fn generators_act_as_derivations_of_the_bracket(
        (n, copy, args) in prop_oneof![Just((4u32, 0usize)), Just((6, 0)), Just((8, 0)), Just((8, 1))]
            .prop_flat_map(|(n, copy)| {
                let len = n as usize + 1;
                (Just(n), Just(copy), proptest::collection::vec(int_vec(len), 4))
            }),
        gen in prop_oneof![Just(Gen::H), Just(Gen::E), Just(Gen::F)],
    ) {
        let ps = cached_table(n, copy).prepare(IntRing);
        let args: Vec<Vec<Int>> = args.iter().map(|a| to_ints(a)).collect();
        let product = ps.bracket([&args[0], &args[1], &args[2], &args[3]]);
        let lhs = apply_vn(gen, n, &product);
        let mut rhs = vec![Int::zero(); n as usize + 1];
        for k in 0..4 {
            let mut moved: Vec<Vec<Int>> = args.clone();
            moved[k] = apply_vn(gen, n, &args[k]);
            let term = ps.bracket([&moved[0], &moved[1], &moved[2], &moved[3]]);
            rhs = vec_add(&rhs, &term);
        }
        prop_assert_eq!(lhs, rhs, "the generator must satisfy the Leibniz rule for the bracket");
    }

    #[test]
    fn relabeling_variables_is_invertible_and_preserves_norms(
        entries in proptest::collection::vec((0usize..35, -9i64..=9), 1..6),
        seed in any::<u64>(),
    ) {
        let basis = MonomialBasis::new(7).expect("degree 7 is supported");
        let mut coeffs = vec![Int::zero(); basis.len()];
        for &(idx, c) in &entries {
            coeffs[idx] += Int::from(c);
        }
        let v = IdentityVector::from_coeffs(7, coeffs);
        let perm = permutation(7, seed);
        let inv = inverse_permutation(&perm);

        let image = apply_permutation(&basis, &v, &perm);
        prop_assert_eq!(image.norm_squared(), v.norm_squared(),
            "relabeling composes sign flips and index moves, so the norm is unchanged");
        let back = apply_permutation(&basis, &image, &inv);
        prop_assert_eq!(back.coeffs(), v.coeffs(), "the inverse relabeling must restore the vector");
        prop_assert_eq!(permutation_sign(&perm), permutation_sign(&inv),
            "a permutation and its inverse have the same parity");
    }

    #[test]
    fn relabeling_a_single_monomial_gives_a_signed_monomial(
        idx in 0usize..35,
        seed in any::<u64>(),
    ) {
        let basis = MonomialBasis::new(7).expect("degree 7 is supported");
        let mut coeffs = vec![Int::zero(); basis.len()];
        coeffs[idx] = Int::from(1);
        let v = IdentityVector::from_coeffs(7, coeffs);
        let image = apply_permutation(&basis, &v, &permutation(7, seed));
        let support: Vec<&Int> = image.coeffs().iter().filter(|c| !c.is_zero()).collect();
        prop_assert_eq!(support.len(), 1, "a monomial must map to a single monomial");
        prop_assert_eq!(support[0] * support[0], Int::from(1), "the image coefficient must be a sign");
    }
}

#[test]
fn searches_are_deterministic_under_a_fixed_seed() {
    let table = structure_table(4, 0).expect("V(4) has a structure");
    let config = SearchConfig { p: 10, s: 40, seed: 11, arithmetic: Arithmetic::Rational };
    let first = fill_and_reduce(&table, 7, &config);
    let second = fill_and_reduce(&table, 7, &config);
    assert_eq!(first.rank, second.rank, "rank must not vary between runs");
    assert_eq!(first.iterations, second.iterations, "iteration count must not vary between runs");
    assert_eq!(first.nullspace.len(), second.nullspace.len(), "nullspace size must not vary");
    for (a, b) in first.nullspace.iter().zip(&second.nullspace) {
        assert_eq!(a.coeffs(), b.coeffs(), "nullspace vectors must match coefficient by coefficient");
    }
}

#[test]
fn reported_identities_vanish_on_held_out_tuples() {
    let table = structure_table(4, 0).expect("V(4) has a structure");
    let config = SearchConfig { p: 10, s: 60, seed: 5, arithmetic: Arithmetic::Rational };
    let outcome = fill_and_reduce(&table, 7, &config);
    assert!(!outcome.nullspace.is_empty(), "the degree 7 search on V(4) finds identities");

    let prepared = table.prepare(IntRing);
    let basis = MonomialBasis::new(7).expect("degree 7 is supported");
    let mut rng = SplitMix64::new(0xFEED_FACE);
    for tuple in 0..20 {
        let args: Vec<Vec<Int>> = (0..7)
            .map(|_| (0..5).map(|_| Int::from((rng.next_u64() % 19) as i64 - 9)).collect())
            .collect();
        for identity in &outcome.nullspace {
            let value = evaluate_identity(&prepared, &basis, identity, &args);
            assert!(
                value.iter().all(Int::is_zero),
                "identity must vanish on held-out tuple {tuple}"
            );
        }
    }
}
