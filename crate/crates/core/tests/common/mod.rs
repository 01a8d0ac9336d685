//! Shared parsers for the golden data files under tests/data.
#![allow(dead_code)]

use std::fs;
use std::path::PathBuf;

use quatalg::exactla::Int;
use quatalg::sl2rep::basis::Quadruple;

/// Read a file from tests/data.
pub fn data(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name);
    fs::read_to_string(&path).unwrap_or_else(|e| panic!("cannot read {}: {e}", path.display()))
}

fn nonempty_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines().map(str::trim).filter(|l| !l.is_empty())
}

/// Parse `[p,q,r,s]`.
pub fn quad(s: &str) -> Quadruple {
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .unwrap_or_else(|| panic!("malformed quadruple `{s}`"));
    let parts: Vec<i32> = inner
        .split(',')
        .map(|p| p.trim().parse().expect("quadruple component"))
        .collect();
    Quadruple::new(parts.try_into().expect("four components"))
}

/// Lines `w: c0 c1 ...`, one integer vector per line keyed by weight.
pub fn parse_weight_vectors(text: &str) -> Vec<(i32, Vec<Int>)> {
    nonempty_lines(text)
        .map(|l| {
            let (w, rest) = l.split_once(':').expect("missing `:`");
            let coeffs = rest
                .split_whitespace()
                .map(|t| t.parse().expect("integer coefficient"))
                .collect();
            (w.trim().parse().expect("weight"), coeffs)
        })
        .collect()
}

/// Lines `w: [p,q,r,s] [p,q,r,s] ...` keyed by weight.
pub fn parse_weight_quads(text: &str) -> Vec<(i32, Vec<Quadruple>)> {
    nonempty_lines(text)
        .map(|l| {
            let (w, rest) = l.split_once(':').expect("missing `:`");
            let quads = rest.split_whitespace().map(quad).collect();
            (w.trim().parse().expect("weight"), quads)
        })
        .collect()
}

/// One summand block of a weight vector basis file.
pub struct WvbBlock {
    pub weight: i32,
    pub copy: usize,
    /// (weight, slice coordinates) per vector, in increasing F power.
    pub rows: Vec<(i32, Vec<Int>)>,
}

/// Blocks headed `summand <w> copy <c>` followed by `w: c0 c1 ...` rows.
pub fn parse_wvb(text: &str) -> Vec<WvbBlock> {
    let mut blocks: Vec<WvbBlock> = Vec::new();
    for l in nonempty_lines(text) {
        if let Some(head) = l.strip_prefix("summand ") {
            let mut it = head.split_whitespace();
            let weight = it.next().expect("weight").parse().expect("weight");
            assert_eq!(it.next(), Some("copy"), "malformed block header `{l}`");
            let copy = it.next().expect("copy").parse().expect("copy");
            blocks.push(WvbBlock {
                weight,
                copy,
                rows: Vec::new(),
            });
        } else {
            let (w, rest) = l.split_once(':').expect("missing `:`");
            let coeffs = rest
                .split_whitespace()
                .map(|t| t.parse().expect("integer coefficient"))
                .collect();
            blocks
                .last_mut()
                .expect("row before first block header")
                .rows
                .push((w.trim().parse().expect("weight"), coeffs));
        }
    }
    blocks
}

/// Lines `[p,q,r,s] = c`.
pub fn parse_structure_entries(text: &str) -> Vec<(Quadruple, Int)> {
    nonempty_lines(text)
        .map(|l| {
            let (lhs, rhs) = l.split_once('=').expect("missing `=`");
            (quad(lhs), rhs.trim().parse().expect("integer entry"))
        })
        .collect()
}
