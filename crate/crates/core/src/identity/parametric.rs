//! One-parameter pencils of structures and the Smith-form identity scan.
//!
//! When a module carries a two-dimensional space of invariant structures f
//! and g, the family f + x g sweeps every structure up to scale (together
//! with g alone). How the identity space varies with x is read off the
//! Smith normal form over the polynomial ring: fill a tall matrix with
//! monomial evaluations whose entries are polynomials in x, then the values
//! of x where the rank drops are the roots of the nonunit invariant
//! factors.

use crate::exactla::{smith_diagonal, PolyMatrix, PolyRing, Rational, UniPoly};
use crate::sl2rep::bracket::PreparedStructure;
use crate::sl2rep::structure::StructureTable;

use super::evaluate::MonomialEvaluator;
use super::monomial::MonomialBasis;
use super::rng::SplitMix64;
use super::search::{draw_tuple, SearchConfig};

/// The pencil f + x g of two structures on the same module, with x the
/// formal polynomial variable.
pub struct ParametricStructure {
    f: StructureTable,
    g: StructureTable,
}

impl ParametricStructure {
    pub fn new(f: StructureTable, g: StructureTable) -> Self {
        assert_eq!(f.n(), g.n(), "both structures must live on the same module");
        assert_eq!(f.quads(), g.quads(), "structure tables must list the same quadruples");
        ParametricStructure { f, g }
    }

    pub fn n(&self) -> u32 {
        self.f.n()
    }

    pub fn base(&self) -> &StructureTable {
        &self.f
    }

    pub fn direction(&self) -> &StructureTable {
        &self.g
    }

    /// Compile with coefficient polynomials f_i + x g_i built from the
    /// integral entries.
    pub fn prepare(&self) -> PreparedStructure<PolyRing> {
        let coeffs: Vec<UniPoly> = self
            .f
            .integral()
            .iter()
            .zip(self.g.integral())
            .map(|(fi, gi)| {
                UniPoly::from_coeffs(vec![
                    Rational::from_integer(fi.clone()),
                    Rational::from_integer(gi.clone()),
                ])
            })
            .collect();
        PreparedStructure::with_coeffs(PolyRing, &self.f, coeffs)
    }
}

/// Smith diagonal of the scan matrix: `t` blocks of n+1 rows, each block
/// the monomial evaluations on a fresh pseudorandom argument tuple, with
/// entries polynomials in x. Diagonal entries are monic; a nonunit entry
/// vanishing at x = c certifies a rank drop (hence extra identities) at c.
pub fn parametric_scan(
    ps: &ParametricStructure,
    degree: u32,
    t: usize,
    cfg: &SearchConfig,
) -> Vec<UniPoly> {
    parametric_scan_with(ps, degree, t, cfg, |_, _| {})
}

/// As [`parametric_scan`], reporting (blocks filled, blocks total).
pub fn parametric_scan_with(
    ps: &ParametricStructure,
    degree: u32,
    t: usize,
    cfg: &SearchConfig,
    mut progress: impl FnMut(usize, usize),
) -> Vec<UniPoly> {
    let basis = MonomialBasis::new(degree).unwrap_or_else(|e| panic!("{e}"));
    let m = basis.len();
    let dim = ps.n() as usize + 1;
    assert!(
        t * dim > m,
        "need t(n+1) > monomial count to pin the nullspace: {t}x{dim} <= {m}"
    );
    let prepared = ps.prepare();
    let ev = MonomialEvaluator::new(&prepared, &basis);
    let mut rng = SplitMix64::new(cfg.seed);
    let mut rows: Vec<Vec<UniPoly>> = Vec::with_capacity(t * dim);
    for b in 0..t {
        let args = draw_tuple(&PolyRing, &mut rng, degree as usize, dim, cfg.p);
        let vals = ev.evaluate_all(&args);
        for i in 0..dim {
            rows.push((0..m).map(|j| vals[j][i].clone()).collect());
        }
        progress(b + 1, t);
    }
    smith_diagonal(&PolyMatrix::from_rows(rows))
}

/// Count the 1-entries and collect the nonunit nonzero entries of a Smith
/// diagonal; convenience for reporting.
pub fn summarize_diagonal(diag: &[UniPoly]) -> (usize, usize, Vec<UniPoly>) {
    let ones = diag.iter().filter(|p| p.degree() == Some(0)).count();
    let zeros = diag.iter().filter(|p| p.is_zero()).count();
    let nonunit: Vec<UniPoly> = diag
        .iter()
        .filter(|p| !p.is_zero() && p.degree().map_or(false, |d| d > 0))
        .cloned()
        .collect();
    (ones, zeros, nonunit)
}
