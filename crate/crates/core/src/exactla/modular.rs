//! Dense matrices over a prime field Z/p with row canonical form.
//!
//! Entries are stored reduced into [0, p). The modulus must be prime: pivot
//! normalization divides by arbitrary nonzero residues.

use super::ExactLaError;

/// Dense matrix over Z/p, row-major, entries reduced into [0, p).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModMatrix {
    p: u64,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

/// Row canonical form over Z/p with rank and pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModRcf {
    pub matrix: ModMatrix,
    pub rank: usize,
    pub pivot_cols: Vec<usize>,
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// a^-1 mod p for prime p, via Fermat's little theorem.
pub(crate) fn mod_inv(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0, "cannot invert 0 mod {p}");
    mod_pow(a % p, p - 2, p)
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, p);
        }
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

impl ModMatrix {
    /// Build from signed integer rows, reducing mod p. Errors unless p is a
    /// prime greater than 1.
    pub fn from_i64(p: u64, rows: &[&[i64]]) -> Result<Self, ExactLaError> {
        if !is_prime(p) {
            return Err(ExactLaError::BadModulus(p));
        }
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        let data = rows
            .iter()
            .flat_map(|r| r.iter().map(|&v| v.rem_euclid(p as i64) as u64))
            .collect();
        Ok(ModMatrix {
            p,
            rows: nrows,
            cols: ncols,
            data,
        })
    }

    /// Build from already-reduced residues.
    pub fn from_residues(p: u64, rows: usize, cols: usize, data: Vec<u64>) -> Result<Self, ExactLaError> {
        if !is_prime(p) {
            return Err(ExactLaError::BadModulus(p));
        }
        assert_eq!(data.len(), rows * cols, "data length mismatch");
        debug_assert!(data.iter().all(|&v| v < p));
        Ok(ModMatrix {
            p,
            rows,
            cols,
            data,
        })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

/// Reduced row-echelon form over Z/p; same pivot policy as the rational
/// [`super::rcf`].
pub fn mod_rcf(m: &ModMatrix) -> ModRcf {
    let mut a = m.clone();
    let p = a.p;
    let (rows, cols) = (a.rows, a.cols);
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r >= rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| a.at(i, c) != 0) else {
            continue;
        };
        a.swap_rows(r, pr);
        let inv = mod_inv(a.at(r, c), p);
        for j in c..cols {
            let v = a.at(r, j);
            a.data[r * cols + j] = mulmod(v, inv, p);
        }
        for i in 0..rows {
            let f = a.at(i, c);
            if i == r || f == 0 {
                continue;
            }
            for j in c..cols {
                let sub = mulmod(f, a.at(r, j), p);
                let v = a.at(i, j);
                a.data[i * cols + j] = (v + p - sub) % p;
            }
        }
        pivot_cols.push(c);
        r += 1;
    }
    ModRcf {
        matrix: a,
        rank: r,
        pivot_cols,
    }
}

/// Reduced nullspace basis over Z/p: per free column, the free variable is 1
/// and pivot coordinates are the negated column entries.
pub fn mod_nullspace(rcf: &ModRcf) -> Vec<Vec<u64>> {
    let p = rcf.matrix.p;
    let cols = rcf.matrix.cols;
    let mut is_pivot = vec![false; cols];
    for &c in &rcf.pivot_cols {
        is_pivot[c] = true;
    }
    let mut basis = Vec::new();
    for f in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![0u64; cols];
        v[f] = 1;
        for (row, &pc) in rcf.pivot_cols.iter().enumerate() {
            let e = rcf.matrix.at(row, f);
            v[pc] = (p - e) % p;
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mod_rcf_matches_rational_behavior() {
        let m = ModMatrix::from_i64(101, &[&[2, 4]]).unwrap();
        let r = mod_rcf(&m);
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivot_cols, vec![0]);
        assert_eq!(r.matrix.at(0, 0), 1);
        assert_eq!(r.matrix.at(0, 1), 2);
    }

    #[test]
    fn mod_rcf_wraps_negatives() {
        let m = ModMatrix::from_i64(7, &[&[-1, 13]]).unwrap();
        let r = mod_rcf(&m);
        // -1 = 6 mod 7; normalized row is (1, 13 * 6^-1) = (1, 6*6) = (1, 1).
        assert_eq!(r.matrix.at(0, 0), 1);
        assert_eq!(r.matrix.at(0, 1), 1);
    }

    #[test]
    fn composite_modulus_rejected() {
        assert_eq!(
            ModMatrix::from_i64(100, &[&[1]]).unwrap_err(),
            ExactLaError::BadModulus(100)
        );
    }

    #[test]
    fn mod_nullspace_solves() {
        let m = ModMatrix::from_i64(101, &[&[1, 4, 0], &[0, 2, 5]]).unwrap();
        let r = mod_rcf(&m);
        for v in mod_nullspace(&r) {
            for i in 0..m.rows() {
                let dot: u64 = (0..m.cols()).map(|j| m.at(i, j) * v[j] % 101).sum::<u64>() % 101;
                assert_eq!(dot, 0);
            }
        }
    }

    #[test]
    fn primality_check() {
        assert!(is_prime(2) && is_prime(101) && is_prime(11));
        assert!(!is_prime(1) && !is_prime(0) && !is_prime(91));
    }
}
