//! Checks of computed bases, highest weight vectors, and structure tables
//! against independently recorded tables under tests/data.

mod common;

use quatalg::sl2rep::basis::ExteriorBasis;
use quatalg::sl2rep::decompose::{highest_weight_vectors, WeightVectorBasis};
use quatalg::sl2rep::structure::structure_table;

use common::{data, parse_structure_entries, parse_weight_quads, parse_weight_vectors, parse_wvb};

#[test]
fn tensor_basis_for_n6_matches_recorded_table() {
    let basis = ExteriorBasis::new(6);
    let table = parse_weight_quads(&data("tensor_n6.txt"));
    assert_eq!(
        table.len(),
        basis.weights().count(),
        "every weight must be recorded"
    );
    for (w, quads) in table {
        let range = basis.weight_range(w);
        assert_eq!(
            &basis.quads()[range],
            &quads[..],
            "weight-{w} quadruples in standard order"
        );
    }
}

#[test]
fn highest_weight_vectors_match_recorded_tables() {
    for (n, file) in [(6, "cib_n6.txt"), (8, "cib_n8.txt")] {
        let basis = ExteriorBasis::new(n);
        let recorded = parse_weight_vectors(&data(file));
        // Consecutive lines with equal weight list the copies in order.
        let mut by_weight: Vec<(i32, Vec<Vec<quatalg::exactla::Int>>)> = Vec::new();
        for (w, v) in recorded {
            match by_weight.last_mut() {
                Some((pw, vs)) if *pw == w => vs.push(v),
                _ => by_weight.push((w, vec![v])),
            }
        }
        for (w, expect) in by_weight {
            assert_eq!(
                highest_weight_vectors(&basis, w),
                expect,
                "canonical highest weight vectors of weight {w} for n = {n}"
            );
        }
    }
}

#[test]
fn weight_vector_bases_match_recorded_tables() {
    for (n, file) in [(4, "wvb_n4.txt"), (6, "wvb_n6.txt"), (8, "wvb_n8.txt")] {
        let wvb = WeightVectorBasis::new(n);
        let blocks = parse_wvb(&data(file));
        assert_eq!(
            blocks.len(),
            wvb.summands().len(),
            "summand count for n = {n}"
        );
        let mut vecs = wvb.vectors().iter();
        for (s, block) in blocks.iter().enumerate() {
            assert_eq!(
                (wvb.summands()[s].weight, wvb.summands()[s].copy),
                (block.weight, block.copy),
                "summand {s} label for n = {n}"
            );
            for (k, (w, coeffs)) in block.rows.iter().enumerate() {
                assert_eq!(*w, block.weight - 2 * k as i32, "row weight in {file}");
                let v = vecs.next().expect("missing weight vector");
                assert_eq!((v.summand, v.power), (s, k));
                let range = wvb.basis().weight_range(*w);
                assert_eq!(
                    &v.coords[range],
                    &coeffs[..],
                    "divided power {k} of summand {s} for n = {n}"
                );
            }
        }
        assert!(vecs.next().is_none(), "extra weight vectors for n = {n}");
    }
}

#[test]
fn integral_structure_tables_match_recorded_tables() {
    for (n, copy, file, scale) in [
        (4, 0, "structure_n4.txt", 12i64),
        (6, 0, "structure_n6.txt", 120),
    ] {
        let t = structure_table(n, copy).unwrap();
        assert_eq!(
            *t.scale(),
            quatalg::exactla::Int::from(scale),
            "denominator lcm for n = {n}"
        );
        let recorded = parse_structure_entries(&data(file));
        let computed: Vec<_> = t
            .quads()
            .iter()
            .copied()
            .zip(t.integral().iter().cloned())
            .collect();
        assert_eq!(computed, recorded, "integral table for n = {n}");
    }
}

#[test]
fn integral_structure_tables_for_n8_match_recorded_tables() {
    for (copy, file) in [(0, "structure_n8_f.txt"), (1, "structure_n8_g.txt")] {
        let t = structure_table(8, copy).unwrap();
        let recorded = parse_structure_entries(&data(file));
        let computed: Vec<_> = t
            .quads()
            .iter()
            .copied()
            .zip(t.integral().iter().cloned())
            .collect();
        assert_eq!(computed, recorded, "integral table for n = 8 copy {copy}");
    }
}
