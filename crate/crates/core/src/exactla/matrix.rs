//! Dense rational matrices: row canonical form, canonical integral
//! nullspace bases, and exact inversion.

use num::{Integer, One, Zero};

use super::{ExactLaError, Int, Rational};

/// Dense matrix over the rationals, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Build from row vectors. All rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(
            rows.iter().all(|r| r.len() == ncols),
            "ragged rows: expected uniform length {ncols}"
        );
        RatMatrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Convenience constructor from integer literals.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| super::rat(v)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Exact matrix product. Skips zero operands, which matters for the
    /// large block-sparse matrices built elsewhere in the crate.
    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in mul");
        let mut out = RatMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.at(i, j).clone();
                    out.set(i, j, cur + a * b);
                }
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        for i in 0..self.rows {
            for j in 0..self.cols {
                let e = self.at(i, j);
                if i == j {
                    if !e.is_one() {
                        return false;
                    }
                } else if !e.is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

/// Row canonical form together with its rank and pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rcf {
    pub matrix: RatMatrix,
    pub rank: usize,
    pub pivot_cols: Vec<usize>,
}

/// Reduced row-echelon form: every pivot is 1 and is the only nonzero entry
/// in its column; zero rows sink to the bottom. Pivot search takes the first
/// nonzero entry in each column scan.
pub fn rcf(m: &RatMatrix) -> Rcf {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r >= rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !a.at(i, c).is_zero()) else {
            continue;
        };
        a.swap_rows(r, pr);
        let inv = a.at(r, c).clone();
        for j in c..cols {
            let v = a.at(r, j).clone();
            a.set(r, j, v / &inv);
        }
        for i in 0..rows {
            if i == r || a.at(i, c).is_zero() {
                continue;
            }
            let f = a.at(i, c).clone();
            for j in c..cols {
                let v = a.at(i, j).clone();
                a.set(i, j, v - &f * a.at(r, j));
            }
        }
        pivot_cols.push(c);
        r += 1;
    }
    Rcf {
        matrix: a,
        rank: r,
        pivot_cols,
    }
}

/// Canonical integral nullspace basis, one vector per free column in
/// ascending free-column order.
///
/// Each vector starts from the rational solution with its own free variable
/// set to +1 and all other free variables 0; denominators are then cleared
/// and the common integer factor cancelled, so the result is a primitive
/// integer vector whose own free coordinate is positive.
pub fn nullspace_cib(m: &RatMatrix) -> Vec<Vec<Int>> {
    cib_from_rcf(&rcf(m), m.cols())
}

/// Extract the canonical integral basis from an already-computed row
/// canonical form, `cols` being the ambient dimension.
pub fn cib_from_rcf(rcf: &Rcf, cols: usize) -> Vec<Vec<Int>> {
    let pivot_set: Vec<bool> = {
        let mut v = vec![false; cols];
        for &c in &rcf.pivot_cols {
            v[c] = true;
        }
        v
    };
    let mut basis = Vec::new();
    for f in (0..cols).filter(|&c| !pivot_set[c]) {
        let mut v = vec![Rational::zero(); cols];
        v[f] = Rational::one();
        for (row, &pc) in rcf.pivot_cols.iter().enumerate() {
            v[pc] = -rcf.matrix.at(row, f).clone();
        }
        basis.push(clear_denominators(&v));
    }
    basis
}

/// Scale a rational vector to a primitive integer vector: multiply by the
/// lcm of denominators, then divide by the gcd of the entries. The scale
/// factor is positive, so signs are preserved.
fn clear_denominators(v: &[Rational]) -> Vec<Int> {
    let mut lcm = Int::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<Int> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let mut g = Int::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if g.is_zero() || g.is_one() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

/// Exact inverse by Gauss-Jordan elimination on the augmented matrix.
pub fn invert(m: &RatMatrix) -> Result<RatMatrix, ExactLaError> {
    if m.rows != m.cols {
        return Err(ExactLaError::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let n = m.rows;
    let mut a = m.clone();
    let mut inv = RatMatrix::identity(n);
    for c in 0..n {
        let Some(pr) = (c..n).find(|&i| !a.at(i, c).is_zero()) else {
            return Err(ExactLaError::Singular);
        };
        a.swap_rows(c, pr);
        inv.swap_rows(c, pr);
        let piv = a.at(c, c).clone();
        for j in 0..n {
            let v = a.at(c, j).clone();
            a.set(c, j, v / &piv);
            let w = inv.at(c, j).clone();
            inv.set(c, j, w / &piv);
        }
        for i in 0..n {
            if i == c || a.at(i, c).is_zero() {
                continue;
            }
            let f = a.at(i, c).clone();
            for j in 0..n {
                if !a.at(c, j).is_zero() {
                    let v = a.at(i, j).clone();
                    a.set(i, j, v - &f * a.at(c, j));
                }
                if !inv.at(c, j).is_zero() {
                    let v = inv.at(i, j).clone();
                    inv.set(i, j, v - &f * inv.at(c, j));
                }
            }
        }
    }
    Ok(inv)
}
