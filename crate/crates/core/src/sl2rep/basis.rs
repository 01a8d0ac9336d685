//! Weight bases for V(n) and for its fourth exterior power.
//!
//! V(n) is the irreducible sl2 representation of highest weight n. Its
//! basis vectors are indexed 0..=n, with index i carrying weight n - 2i.
//!
//! The fourth exterior power has basis the wedges v_p ^ v_q ^ v_r ^ v_s
//! written as weight quadruples [p, q, r, s] with
//! n >= p > q > r > s >= -n and every component congruent to n mod 2.
//! The standard order lists quadruples by total weight descending, ties
//! broken lexicographically with larger components first, so each weight
//! occupies one contiguous index range.

use std::collections::HashMap;
use std::fmt;
use std::ops::Range;

/// A wedge basis vector of the fourth exterior power, stored as its four
/// strictly decreasing component weights.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Quadruple(pub [i32; 4]);

impl Quadruple {
    /// Panics unless the components are strictly decreasing.
    pub fn new(components: [i32; 4]) -> Self {
        assert!(
            components.windows(2).all(|w| w[0] > w[1]),
            "quadruple components must be strictly decreasing: {components:?}"
        );
        Quadruple(components)
    }

    pub fn weight(&self) -> i32 {
        self.0.iter().sum()
    }
}

impl fmt::Display for Quadruple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [p, q, r, s] = self.0;
        write!(f, "[{p},{q},{r},{s}]")
    }
}

/// Index of the weight-w basis vector of V(n).
pub fn vn_index(n: u32, w: i32) -> usize {
    let n = n as i32;
    debug_assert!(w.abs() <= n && (n - w) % 2 == 0, "weight {w} not in V({n})");
    ((n - w) / 2) as usize
}

/// Weight of the basis vector of V(n) at index i.
pub fn vn_weight(n: u32, i: usize) -> i32 {
    debug_assert!(i <= n as usize);
    n as i32 - 2 * i as i32
}

/// The wedge basis of the fourth exterior power of V(n), in standard order.
#[derive(Clone, Debug)]
pub struct ExteriorBasis {
    n: u32,
    quads: Vec<Quadruple>,
    index: HashMap<Quadruple, usize>,
    /// Distinct weights in descending order, paired with their index range.
    weight_ranges: Vec<(i32, Range<usize>)>,
}

impl ExteriorBasis {
    pub fn new(n: u32) -> Self {
        let ni = n as i32;
        let mut quads = Vec::new();
        // Component values n, n-2, ..., -n in descending order; choosing
        // indices a < b < c < d yields strictly decreasing components and
        // enumerates quadruples in descending lexicographic order.
        let vals: Vec<i32> = (0..=n as usize).map(|i| ni - 2 * i as i32).collect();
        let m = vals.len();
        for a in 0..m {
            for b in a + 1..m {
                for c in b + 1..m {
                    for d in c + 1..m {
                        quads.push(Quadruple([vals[a], vals[b], vals[c], vals[d]]));
                    }
                }
            }
        }
        // Stable sort keeps the descending lexicographic order within each
        // weight group.
        quads.sort_by_key(|q| -q.weight());

        let index = quads.iter().enumerate().map(|(i, q)| (*q, i)).collect();
        let mut weight_ranges: Vec<(i32, Range<usize>)> = Vec::new();
        for (i, q) in quads.iter().enumerate() {
            match weight_ranges.last_mut() {
                Some((w, range)) if *w == q.weight() => range.end = i + 1,
                _ => weight_ranges.push((q.weight(), i..i + 1)),
            }
        }
        ExteriorBasis {
            n,
            quads,
            index,
            weight_ranges,
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Dimension: C(n+1, 4).
    pub fn dim(&self) -> usize {
        self.quads.len()
    }

    pub fn quads(&self) -> &[Quadruple] {
        &self.quads
    }

    pub fn quad(&self, i: usize) -> Quadruple {
        self.quads[i]
    }

    pub fn index_of(&self, q: &Quadruple) -> Option<usize> {
        self.index.get(q).copied()
    }

    /// Index range of the weight-w quadruples; empty when the weight does
    /// not occur.
    pub fn weight_range(&self, w: i32) -> Range<usize> {
        self.weight_ranges
            .iter()
            .find(|(wt, _)| *wt == w)
            .map_or(0..0, |(_, r)| r.clone())
    }

    pub fn dim_weight(&self, w: i32) -> usize {
        self.weight_range(w).len()
    }

    /// Distinct weights in descending order.
    pub fn weights(&self) -> impl Iterator<Item = i32> + '_ {
        self.weight_ranges.iter().map(|(w, _)| *w)
    }
}
