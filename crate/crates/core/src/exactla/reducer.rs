//! Incremental row reducers.
//!
//! The identity searches feed rows into a workspace one batch at a time and
//! watch the rank. Maintaining an echelon basis incrementally (forward
//! reduction on insert, one back-elimination pass at the end) produces the
//! same row canonical form as reducing the stacked matrix in one shot, while
//! keeping per-batch cost proportional to the current rank.

use num::Zero;

use super::matrix::{RatMatrix, Rcf};
use super::modular::{mod_inv, ModRcf};
use super::{ModMatrix, Rational};

/// Incremental echelon basis over the rationals.
pub struct RatReducer {
    cols: usize,
    /// Rows with strictly increasing pivot columns; each row is zero left of
    /// its pivot and has pivot value 1. Not back-reduced until `into_rcf`.
    rows: Vec<Vec<Rational>>,
    pivot_cols: Vec<usize>,
}

impl RatReducer {
    pub fn new(cols: usize) -> Self {
        RatReducer {
            cols,
            rows: Vec::new(),
            pivot_cols: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Reduce `row` against the basis; if a nonzero remainder survives,
    /// insert it and return true.
    pub fn add_row(&mut self, row: Vec<Rational>) -> bool {
        assert_eq!(row.len(), self.cols);
        let mut row = row;
        for (k, &pc) in self.pivot_cols.iter().enumerate() {
            let c = row[pc].clone();
            if c.is_zero() {
                continue;
            }
            let prow = &self.rows[k];
            for j in pc..self.cols {
                if !prow[j].is_zero() {
                    let v = std::mem::take(&mut row[j]);
                    row[j] = v - &c * &prow[j];
                }
            }
        }
        let Some(lead) = row.iter().position(|v| !v.is_zero()) else {
            return false;
        };
        let inv = row[lead].clone();
        for v in row[lead..].iter_mut() {
            if !v.is_zero() {
                let t = std::mem::take(v);
                *v = t / &inv;
            }
        }
        let at = self.pivot_cols.partition_point(|&c| c < lead);
        self.pivot_cols.insert(at, lead);
        self.rows.insert(at, row);
        true
    }

    /// True iff `row` lies in the span of the inserted rows.
    pub fn contains(&self, row: &[Rational]) -> bool {
        assert_eq!(row.len(), self.cols);
        let mut row = row.to_vec();
        for (k, &pc) in self.pivot_cols.iter().enumerate() {
            let c = row[pc].clone();
            if c.is_zero() {
                continue;
            }
            let prow = &self.rows[k];
            for j in pc..self.cols {
                if !prow[j].is_zero() {
                    let v = std::mem::take(&mut row[j]);
                    row[j] = v - &c * &prow[j];
                }
            }
        }
        row.iter().all(Zero::is_zero)
    }

    /// Back-eliminate and return the row canonical form of everything
    /// inserted so far.
    pub fn into_rcf(mut self) -> Rcf {
        for k in (0..self.rows.len()).rev() {
            let pc = self.pivot_cols[k];
            let (above, below) = self.rows.split_at_mut(k);
            let prow = &below[0];
            for row in above.iter_mut() {
                let c = row[pc].clone();
                if c.is_zero() {
                    continue;
                }
                for j in pc..self.cols {
                    if !prow[j].is_zero() {
                        let v = std::mem::take(&mut row[j]);
                        row[j] = v - &c * &prow[j];
                    }
                }
            }
        }
        let rank = self.rows.len();
        Rcf {
            matrix: RatMatrix::from_rows(self.rows),
            rank,
            pivot_cols: self.pivot_cols,
        }
    }
}

/// Incremental echelon basis over Z/p (p prime, p < 2^16 so that the lazy
/// u64 accumulator below cannot overflow even after ~2^32 pivot steps).
pub struct ModReducer {
    p: u64,
    cols: usize,
    rows: Vec<Vec<u32>>,
    pivot_cols: Vec<usize>,
}

impl ModReducer {
    pub fn new(p: u64, cols: usize) -> Self {
        assert!(super::modular::is_prime(p) && p < (1 << 16), "modulus must be a small prime");
        ModReducer {
            p,
            cols,
            rows: Vec::new(),
            pivot_cols: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Reduce and insert; returns true if the rank grew.
    ///
    /// Reduction runs on a u64 scratch row with lazy modular reduction:
    /// subtracting c * prow[j] is adding c * (p - prow[j]), which keeps every
    /// accumulator below rank * p^2 and needs no per-entry remainder.
    pub fn add_row(&mut self, row: &[u64]) -> bool {
        let Some(row) = self.reduce(row) else {
            return false;
        };
        let lead = row.iter().position(|&v| v != 0).expect("nonzero by construction");
        let at = self.pivot_cols.partition_point(|&c| c < lead);
        self.pivot_cols.insert(at, lead);
        self.rows.insert(at, row);
        true
    }

    /// True iff `row` lies in the span of the inserted rows.
    pub fn contains(&self, row: &[u64]) -> bool {
        self.reduce(row).is_none()
    }

    /// Forward-reduce to a normalized remainder; None if it vanishes.
    fn reduce(&self, row: &[u64]) -> Option<Vec<u32>> {
        assert_eq!(row.len(), self.cols);
        let p = self.p;
        let mut scratch: Vec<u64> = row.iter().map(|&v| v % p).collect();
        for (k, &pc) in self.pivot_cols.iter().enumerate() {
            let c = scratch[pc] % p;
            if c == 0 {
                continue;
            }
            let prow = &self.rows[k];
            for j in pc..self.cols {
                scratch[j] += c * (p - prow[j] as u64);
            }
        }
        let mut out = vec![0u32; self.cols];
        let mut lead = None;
        for j in 0..self.cols {
            let v = scratch[j] % p;
            out[j] = v as u32;
            if v != 0 && lead.is_none() {
                lead = Some(j);
            }
        }
        let lead = lead?;
        let inv = mod_inv(out[lead] as u64, p);
        for v in out[lead..].iter_mut() {
            *v = (*v as u64 * inv % p) as u32;
        }
        Some(out)
    }

    /// Back-eliminate and return the row canonical form.
    pub fn into_rcf(mut self) -> ModRcf {
        let p = self.p;
        for k in (0..self.rows.len()).rev() {
            let pc = self.pivot_cols[k];
            let (above, below) = self.rows.split_at_mut(k);
            let prow = &below[0];
            for row in above.iter_mut() {
                let c = row[pc] as u64;
                if c == 0 {
                    continue;
                }
                for j in pc..self.cols {
                    let sub = c * prow[j] as u64 % p;
                    row[j] = ((row[j] as u64 + p - sub) % p) as u32;
                }
            }
        }
        let rank = self.rows.len();
        let data: Vec<u64> = self
            .rows
            .iter()
            .flat_map(|r| r.iter().map(|&v| v as u64))
            .collect();
        ModRcf {
            matrix: ModMatrix::from_residues(p, rank, self.cols, data).expect("prime checked at construction"),
            rank,
            pivot_cols: self.pivot_cols,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::{mod_rcf, rat, rcf};
    use super::*;

    #[test]
    fn rat_reducer_matches_one_shot_rcf() {
        let rows: Vec<Vec<Rational>> = vec![
            vec![rat(2), rat(4), rat(1)],
            vec![rat(1), rat(2), rat(0)],
            vec![rat(0), rat(0), rat(1)],
            vec![rat(3), rat(7), rat(2)],
        ];
        let m = RatMatrix::from_rows(rows.clone());
        let mut red = RatReducer::new(3);
        for r in rows {
            red.add_row(r);
        }
        let a = red.into_rcf();
        let b = rcf(&m);
        assert_eq!(a.rank, b.rank);
        assert_eq!(a.pivot_cols, b.pivot_cols);
        for i in 0..a.rank {
            assert_eq!(a.matrix.row(i), b.matrix.row(i));
        }
    }

    #[test]
    fn rat_reducer_membership() {
        let mut red = RatReducer::new(3);
        red.add_row(vec![rat(1), rat(1), rat(0)]);
        red.add_row(vec![rat(0), rat(1), rat(1)]);
        assert!(red.contains(&[rat(2), rat(3), rat(1)]));
        assert!(!red.contains(&[rat(0), rat(0), rat(1)]));
    }

    #[test]
    fn mod_reducer_matches_one_shot_rcf() {
        let p = 101;
        let rows: Vec<Vec<u64>> = vec![
            vec![2, 4, 1, 9],
            vec![1, 2, 0, 100],
            vec![0, 0, 1, 55],
            vec![3, 7, 2, 0],
            vec![5, 11, 3, 9],
        ];
        let mut red = ModReducer::new(p, 4);
        for r in &rows {
            red.add_row(r);
        }
        let a = red.into_rcf();
        let rows_i64: Vec<Vec<i64>> = rows.iter().map(|r| r.iter().map(|&v| v as i64).collect()).collect();
        let refs: Vec<&[i64]> = rows_i64.iter().map(Vec::as_slice).collect();
        let b = mod_rcf(&ModMatrix::from_i64(p, &refs).unwrap());
        assert_eq!(a.rank, b.rank);
        assert_eq!(a.pivot_cols, b.pivot_cols);
        for i in 0..a.rank {
            for j in 0..4 {
                assert_eq!(a.matrix.at(i, j), b.matrix.at(i, j));
            }
        }
    }
}
