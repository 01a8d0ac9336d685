//! The sl2 action on V(n) and on its fourth exterior power.
//!
//! On the basis vector v_{n-2i} of V(n):
//!   H.v_{n-2i} = (n-2i) v_{n-2i}
//!   E.v_{n-2i} = (n-i+1) v_{n-2i+2}  (zero for i = 0)
//!   F.v_{n-2i} = (i+1) v_{n-2i-2}    (zero for i = n)
//!
//! On a wedge of four basis vectors the generators act by the Leibniz rule,
//! one slot at a time; a slot whose image collides with another component
//! contributes nothing, and the surviving tuples are re-sorted into strictly
//! decreasing order with the sign of the sorting permutation.

use num::Zero;

use super::basis::{vn_index, vn_weight, ExteriorBasis, Quadruple};
use crate::exactla::{rat, Int, RatMatrix};

/// The standard generators of sl2.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Gen {
    H,
    E,
    F,
}

/// Image of the basis vector of V(n) at index i under a generator, as a
/// sparse vector: at most one pair (index, coefficient).
///
/// Panics when i > n.
pub fn act(g: Gen, n: u32, i: usize) -> Vec<(usize, i64)> {
    assert!(i <= n as usize, "basis index {i} out of range for V({n})");
    let w = vn_weight(n, i);
    match act_on_weight(g, n, w) {
        Some((coef, new_w)) => vec![(vn_index(n, new_w), coef)],
        None => Vec::new(),
    }
}

/// Weight-level form of the action: the image of the weight-w basis vector
/// is coef times the basis vector of the returned weight, or zero (None).
pub fn act_on_weight(g: Gen, n: u32, w: i32) -> Option<(i64, i32)> {
    let ni = n as i64;
    let w64 = w as i64;
    match g {
        Gen::H => {
            if w == 0 {
                None
            } else {
                Some((w64, w))
            }
        }
        Gen::E => {
            if w == ni as i32 {
                None
            } else {
                Some(((ni + w64) / 2 + 1, w + 2))
            }
        }
        Gen::F => {
            if w == -(ni as i32) {
                None
            } else {
                Some(((ni - w64) / 2 + 1, w - 2))
            }
        }
    }
}

/// Sorts the components of a 4-tuple into strictly decreasing order,
/// returning the sign of the permutation, or None when two components
/// coincide (a repeated factor kills the wedge).
fn sort_desc_with_sign(mut t: [i32; 4]) -> Option<(Quadruple, i64)> {
    let mut sign = 1i64;
    for i in 1..4 {
        let mut j = i;
        while j > 0 && t[j - 1] < t[j] {
            t.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if t.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((Quadruple(t), sign))
}

/// Leibniz action of a generator on a wedge basis vector, as a sparse
/// combination of quadruples. Terms with distinct quadruples are returned
/// separately; no two terms share a quadruple.
pub fn act_on_quadruple(g: Gen, n: u32, t: &Quadruple) -> Vec<(Quadruple, i64)> {
    if let Gen::H = g {
        let w = t.weight();
        return if w == 0 {
            Vec::new()
        } else {
            vec![(*t, w as i64)]
        };
    }
    let mut out: Vec<(Quadruple, i64)> = Vec::new();
    for slot in 0..4 {
        let Some((coef, new_w)) = act_on_weight(g, n, t.0[slot]) else {
            continue;
        };
        let mut components = t.0;
        components[slot] = new_w;
        let Some((sorted, sign)) = sort_desc_with_sign(components) else {
            continue;
        };
        match out.iter_mut().find(|(q, _)| *q == sorted) {
            Some((_, c)) => *c += sign * coef,
            None => out.push((sorted, sign * coef)),
        }
    }
    out.retain(|(_, c)| *c != 0);
    out
}

/// Apply a generator to an integer coordinate vector over V(n).
pub fn apply_vn(g: Gen, n: u32, coords: &[Int]) -> Vec<Int> {
    assert_eq!(coords.len(), n as usize + 1, "coordinate length for V({n})");
    let mut out = vec![Int::zero(); n as usize + 1];
    for (i, c) in coords.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (j, a) in act(g, n, i) {
            out[j] += c * Int::from(a);
        }
    }
    out
}

/// Matrix of a generator from the weight-w slice of the fourth exterior
/// power of V(n) to the target slice (weight w+2 for E, w-2 for F, w for H),
/// in the standard quadruple order of both slices.
pub fn action_matrix(g: Gen, basis: &ExteriorBasis, w: i32) -> RatMatrix {
    let n = basis.n();
    let source = basis.weight_range(w);
    let target_w = match g {
        Gen::H => w,
        Gen::E => w + 2,
        Gen::F => w - 2,
    };
    let target = basis.weight_range(target_w);
    let mut m = RatMatrix::zero(target.len(), source.len());
    for (col, src) in source.clone().enumerate() {
        for (quad, coef) in act_on_quadruple(g, n, &basis.quad(src)) {
            let idx = basis
                .index_of(&quad)
                .expect("image quadruple must lie in the basis");
            debug_assert!(target.contains(&idx));
            m.set(idx - target.start, col, rat(coef));
        }
    }
    m
}

/// The matrix of E from the weight-w slice to the weight-(w+2) slice; its
/// nullspace consists of the highest weight vectors of weight w.
pub fn e_action_matrix(basis: &ExteriorBasis, w: i32) -> RatMatrix {
    action_matrix(Gen::E, basis, w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::RatMatrix;

    #[test]
    fn h_scales_by_weight() {
        assert_eq!(act(Gen::H, 4, 1), vec![(1, 2)], "H.v_2 = 2 v_2 in V(4)");
        assert_eq!(act(Gen::H, 4, 2), vec![], "H kills the weight-0 vector");
    }

    #[test]
    fn e_kills_highest_weight_and_climbs() {
        assert_eq!(act(Gen::E, 6, 0), vec![], "E.v_6 = 0 in V(6)");
        assert_eq!(act(Gen::E, 6, 1), vec![(0, 6)], "E.v_4 = 6 v_6 in V(6)");
        assert_eq!(act(Gen::E, 6, 6), vec![(5, 1)], "E sends the lowest weight vector up in V(6)");
    }

    #[test]
    fn f_kills_lowest_weight_and_descends() {
        assert_eq!(act(Gen::F, 4, 4), vec![], "F kills the lowest weight vector in V(4)");
        assert_eq!(act(Gen::F, 4, 0), vec![(1, 1)], "F.v_4 = v_2 in V(4)");
        assert_eq!(act(Gen::F, 4, 3), vec![(4, 4)], "F on the weight -2 vector has coefficient 4");
    }

    #[test]
    fn leibniz_on_quadruple_raises_last_slot() {
        let t = Quadruple::new([6, 4, 2, -6]);
        assert_eq!(
            act_on_quadruple(Gen::E, 6, &t),
            vec![(Quadruple::new([6, 4, 2, -4]), 1)],
            "only the fourth slot of [6,4,2,-6] survives E"
        );
    }

    #[test]
    fn leibniz_f_on_top_quadruple() {
        let t = Quadruple::new([4, 2, 0, -2]);
        assert_eq!(
            act_on_quadruple(Gen::F, 4, &t),
            vec![(Quadruple::new([4, 2, 0, -4]), 4)],
            "F on [4,2,0,-2] moves only the last slot"
        );
    }

    #[test]
    fn h_on_quadruple_scales_by_total_weight() {
        let basis = ExteriorBasis::new(6);
        for q in basis.quads() {
            let img = act_on_quadruple(Gen::H, 6, q);
            if q.weight() == 0 {
                assert!(img.is_empty());
            } else {
                assert_eq!(img, vec![(*q, q.weight() as i64)]);
            }
        }
    }

    #[test]
    fn e_action_matrix_known_slices() {
        let basis = ExteriorBasis::new(6);
        assert_eq!(
            e_action_matrix(&basis, 8),
            RatMatrix::from_i64(&[&[2, 4]]),
            "weight-8 slice of the exterior power of V(6)"
        );
        assert_eq!(
            e_action_matrix(&basis, 0),
            RatMatrix::from_i64(&[
                &[2, 5, 0, 0, 0],
                &[0, 3, 0, 6, 0],
                &[0, 1, 4, 0, 6],
                &[0, 0, 0, 1, 3],
            ]),
            "weight-0 slice of the exterior power of V(6)"
        );
        let basis8 = ExteriorBasis::new(8);
        assert_eq!(
            e_action_matrix(&basis8, 16),
            RatMatrix::from_i64(&[&[4, 6]]),
            "weight-16 slice of the exterior power of V(8)"
        );
    }

    #[test]
    fn commutator_relations_hold_on_exterior_power() {
        // [E, F] = H and [H, E] = 2E as operators on every weight slice.
        let basis = ExteriorBasis::new(6);
        for w in basis.weights() {
            let d = basis.dim_weight(w);
            let e_up = action_matrix(Gen::E, &basis, w);
            let f_down = action_matrix(Gen::F, &basis, w);
            let f_after_e = action_matrix(Gen::F, &basis, w + 2);
            let e_after_f = action_matrix(Gen::E, &basis, w - 2);
            let h = action_matrix(Gen::H, &basis, w);
            let ef = e_after_f.mul(&f_down);
            let fe = f_after_e.mul(&e_up);
            let mut comm = RatMatrix::zero(d, d);
            for i in 0..d {
                for j in 0..d {
                    comm.set(i, j, ef.at(i, j) - fe.at(i, j));
                }
            }
            assert_eq!(comm, h, "EF - FE must equal H on the weight-{w} slice");
        }
    }
}
