//! Evaluation of the quaternary product defined by a structure table.
//!
//! The product of four coordinate vectors over V(n) expands their wedge in
//! the quadruple basis and projects: for each stored quadruple q the wedge
//! coordinate is the determinant of the 4x4 matrix whose (k, j) entry is
//! the coordinate of argument j at component weight q_k, and the table
//! entry times that determinant lands on the V(n) coordinate of weight
//! equal to the total weight of q. Coefficients come from the integral
//! form; a global scale never changes identities of the product.
//!
//! Preparation compiles the table once for a target coefficient ring, so
//! repeated evaluation (identity searches do millions) avoids re-reading
//! the table. Determinants expand along the first two rows: six 2x2 top
//! minors times their complementary bottom minors with sign
//! (-1)^(1 + c0 + c1) for column pair (c0, c1).

use crate::exactla::Ring;

use super::basis::vn_index;
use super::structure::StructureTable;

/// A structure table compiled for evaluation over a coefficient ring.
pub struct PreparedStructure<R: Ring> {
    ring: R,
    n: u32,
    terms: Vec<Term<R::Elem>>,
}

struct Term<E> {
    coeff: E,
    /// V(n) coordinate index of each quadruple component.
    rows: [usize; 4],
    /// V(n) coordinate index receiving the contribution.
    out: usize,
}

impl<R: Ring> PreparedStructure<R> {
    /// Compile the nonzero integral entries of the table.
    pub fn new(ring: R, st: &StructureTable) -> Self {
        let coeffs: Vec<R::Elem> = st.integral().iter().map(|c| ring.from_int(c)).collect();
        Self::with_coeffs(ring, st, coeffs)
    }

    /// Compile with caller-supplied coefficients, one per table entry in
    /// table order. Used for one-parameter families of tables.
    pub fn with_coeffs(ring: R, st: &StructureTable, coeffs: Vec<R::Elem>) -> Self {
        assert_eq!(coeffs.len(), st.len(), "one coefficient per table entry");
        let n = st.n();
        let terms = st
            .quads()
            .iter()
            .zip(coeffs)
            .filter(|(_, c)| !ring.is_zero(c))
            .map(|(q, coeff)| Term {
                coeff,
                rows: q.0.map(|w| vn_index(n, w)),
                out: vn_index(n, q.weight()),
            })
            .collect();
        PreparedStructure { ring, n, terms }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Dimension of V(n).
    pub fn dim(&self) -> usize {
        self.n as usize + 1
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    /// The product of four coordinate vectors over V(n).
    pub fn bracket(&self, args: [&[R::Elem]; 4]) -> Vec<R::Elem> {
        let d = self.dim();
        for a in args {
            assert_eq!(a.len(), d, "argument length for V({})", self.n);
        }
        let r = &self.ring;
        let mut out = vec![r.zero(); d];
        for t in &self.terms {
            let det = det4(r, &args, &t.rows);
            if r.is_zero(&det) {
                continue;
            }
            let contrib = r.mul(&t.coeff, &det);
            out[t.out] = r.add(&out[t.out], &contrib);
        }
        out
    }
}

/// Determinant of the 4x4 matrix m[k][j] = args[j][rows[k]].
fn det4<R: Ring>(r: &R, args: &[&[R::Elem]; 4], rows: &[usize; 4]) -> R::Elem {
    let m = |k: usize, j: usize| &args[j][rows[k]];
    let minor = |r0: usize, r1: usize, c0: usize, c1: usize| {
        r.sub(&r.mul(m(r0, c0), m(r1, c1)), &r.mul(m(r0, c1), m(r1, c0)))
    };
    let mut acc = r.zero();
    for (c0, c1, d0, d1, neg) in [
        (0usize, 1usize, 2usize, 3usize, false),
        (0, 2, 1, 3, true),
        (0, 3, 1, 2, false),
        (1, 2, 0, 3, false),
        (1, 3, 0, 2, true),
        (2, 3, 0, 1, false),
    ] {
        let t = r.mul(&minor(0, 1, c0, c1), &minor(2, 3, d0, d1));
        acc = if neg { r.sub(&acc, &t) } else { r.add(&acc, &t) };
    }
    acc
}

impl StructureTable {
    /// Compile the integral entries into an evaluator over the given ring.
    pub fn prepare<R: Ring>(&self, ring: R) -> PreparedStructure<R> {
        PreparedStructure::new(ring, self)
    }
}
