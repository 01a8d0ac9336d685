//! Randomized searches for multilinear identities.
//!
//! Fill-and-reduce: keep an echelon workspace with one column per canonical
//! monomial. Each iteration draws one pseudorandom vector per variable
//! (components are integers in [0, p)), evaluates every monomial, and feeds
//! the resulting structure-dimension many rows into the workspace. The rank
//! is non-decreasing; the search stops once it has not grown for `s`
//! consecutive iterations. The nullspace of the workspace then consists of
//! coefficient vectors annihilated by every sampled row: candidates for
//! identities, validated on held-out tuples before being returned.
//!
//! Module generators: the symmetric group acts on identities by variable
//! permutation, so a set of identities generates a module. Processing the
//! identities by increasing Euclidean norm, each one's full permutation
//! orbit is reduced into a persistent workspace; an identity is a generator
//! exactly when its orbit grows the workspace rank.

use itertools::Itertools;
use num::Zero;

use crate::exactla::{cib_from_rcf, mod_nullspace, Int, IntRing, ModReducer, ModRing, RatReducer, Rational, Ring};
use crate::sl2rep::structure::StructureTable;

use super::evaluate::MonomialEvaluator;
use super::monomial::MonomialBasis;
use super::rng::SplitMix64;
use super::vector::{apply_permutation, IdentityVector};

/// Workspace arithmetic for a search.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Arithmetic {
    /// Exact rational elimination; nullspace returned as the canonical
    /// primitive integer basis.
    Rational,
    /// Elimination over the prime field Z/p; nullspace coefficients are
    /// residues in [0, p).
    Modular,
}

/// Parameters of a randomized search.
#[derive(Clone, Copy, Debug)]
pub struct SearchConfig {
    /// Pseudorandom components lie in [0, p); in modular mode p is also the
    /// modulus and must be a prime exceeding the degree.
    pub p: u64,
    /// Number of consecutive rank-stable iterations required to stop.
    pub s: u32,
    /// Seed for the generator stream.
    pub seed: u64,
    pub arithmetic: Arithmetic,
}

impl SearchConfig {
    pub fn rational() -> Self {
        SearchConfig { p: 10, s: 100, seed: 0, arithmetic: Arithmetic::Rational }
    }

    pub fn modular() -> Self {
        SearchConfig { p: 101, s: 100, seed: 0, arithmetic: Arithmetic::Modular }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }
}

/// Result of a fill-and-reduce search.
pub struct SearchOutcome {
    /// Final workspace rank; the nullspace dimension is columns - rank.
    pub rank: usize,
    /// Number of fill iterations performed, including the stable tail.
    pub iterations: u64,
    pub nullspace: Vec<IdentityVector>,
}

/// Draw `count` vectors of length `len` with components in [0, p).
pub(crate) fn draw_tuple<R: Ring>(
    ring: &R,
    rng: &mut SplitMix64,
    count: usize,
    len: usize,
    p: u64,
) -> Vec<Vec<R::Elem>> {
    (0..count)
        .map(|_| (0..len).map(|_| ring.from_u64(rng.next_below(p))).collect())
        .collect()
}

/// Held-out tuples used to validate the computed nullspace.
const HELD_OUT_TUPLES: usize = 20;
/// Direct re-evaluation of every nullspace vector is skipped beyond this
/// many coefficient products per tuple; the row-space membership check
/// below covers validation in every case.
const DIRECT_CHECK_LIMIT: usize = 250_000;

pub fn fill_and_reduce(st: &StructureTable, degree: u32, cfg: &SearchConfig) -> SearchOutcome {
    fill_and_reduce_with(st, degree, cfg, |_, _| {})
}

/// As [`fill_and_reduce`], reporting (iteration, rank) after each iteration.
pub fn fill_and_reduce_with(
    st: &StructureTable,
    degree: u32,
    cfg: &SearchConfig,
    progress: impl FnMut(u64, usize),
) -> SearchOutcome {
    assert!(cfg.s >= 1, "stabilization window must be positive");
    assert!(cfg.p > 1, "component bound must exceed 1");
    let basis = MonomialBasis::new(degree)
        .unwrap_or_else(|e| panic!("{e}"));
    match cfg.arithmetic {
        Arithmetic::Rational => rational_search(st, &basis, cfg, progress),
        Arithmetic::Modular => modular_search(st, &basis, cfg, progress),
    }
}

fn rational_search(
    st: &StructureTable,
    basis: &MonomialBasis,
    cfg: &SearchConfig,
    mut progress: impl FnMut(u64, usize),
) -> SearchOutcome {
    let ps = st.prepare(IntRing);
    let ev = MonomialEvaluator::new(&ps, basis);
    let m = basis.len();
    let dim = ps.dim();
    let mut rng = SplitMix64::new(cfg.seed);
    let mut reducer = RatReducer::new(m);
    let mut stable = 0u32;
    let mut iterations = 0u64;
    while stable < cfg.s {
        let args = draw_tuple(&IntRing, &mut rng, basis.degree() as usize, dim, cfg.p);
        let vals = ev.evaluate_all(&args);
        let mut grew = false;
        for i in 0..dim {
            let row: Vec<Rational> =
                (0..m).map(|j| Rational::from_integer(vals[j][i].clone())).collect();
            grew |= reducer.add_row(row);
        }
        iterations += 1;
        stable = if grew { 0 } else { stable + 1 };
        progress(iterations, reducer.rank());
    }

    // Held-out validation, part one: rows from fresh tuples must already lie
    // in the row space (equivalently, every nullspace vector annihilates
    // them). The monomial values are kept for the direct check below.
    let mut held_out = Vec::with_capacity(HELD_OUT_TUPLES);
    for _ in 0..HELD_OUT_TUPLES {
        let args = draw_tuple(&IntRing, &mut rng, basis.degree() as usize, dim, cfg.p);
        let vals = ev.evaluate_all(&args);
        for i in 0..dim {
            let row: Vec<Rational> =
                (0..m).map(|j| Rational::from_integer(vals[j][i].clone())).collect();
            assert!(
                reducer.contains(&row),
                "held-out row escaped the stabilized row space; rank was not final"
            );
        }
        held_out.push(vals);
    }

    let rank = reducer.rank();
    let rcf = reducer.into_rcf();
    let nullspace: Vec<IdentityVector> = cib_from_rcf(&rcf, m)
        .into_iter()
        .map(|coeffs| IdentityVector::from_coeffs(basis.degree(), coeffs))
        .collect();
    assert_eq!(nullspace.len(), m - rank, "nullspace dimension");

    // Part two: re-evaluate each reported identity on the held-out tuples
    // through the coefficient side, when affordably sized.
    if nullspace.len() * m <= DIRECT_CHECK_LIMIT {
        for vals in &held_out {
            for iv in &nullspace {
                for i in 0..dim {
                    let total: Int = iv.terms().map(|(j, c)| c * &vals[j][i]).sum();
                    assert!(total.is_zero(), "reported identity fails on a held-out tuple");
                }
            }
        }
    }

    SearchOutcome { rank, iterations, nullspace }
}

fn modular_search(
    st: &StructureTable,
    basis: &MonomialBasis,
    cfg: &SearchConfig,
    mut progress: impl FnMut(u64, usize),
) -> SearchOutcome {
    assert!(cfg.p > basis.degree() as u64, "modulus must exceed the degree");
    let ring = ModRing::new(cfg.p);
    let ps = st.prepare(ring);
    let ev = MonomialEvaluator::new(&ps, basis);
    let m = basis.len();
    let dim = ps.dim();
    let mut rng = SplitMix64::new(cfg.seed);
    let mut reducer = ModReducer::new(cfg.p, m);
    let mut stable = 0u32;
    let mut iterations = 0u64;
    let mut row = vec![0u64; m];
    while stable < cfg.s {
        let args = draw_tuple(ps.ring(), &mut rng, basis.degree() as usize, dim, cfg.p);
        let vals = ev.evaluate_all(&args);
        let mut grew = false;
        for i in 0..dim {
            for j in 0..m {
                row[j] = vals[j][i];
            }
            grew |= reducer.add_row(&row);
        }
        iterations += 1;
        stable = if grew { 0 } else { stable + 1 };
        progress(iterations, reducer.rank());
    }

    let mut held_out = Vec::with_capacity(HELD_OUT_TUPLES);
    for _ in 0..HELD_OUT_TUPLES {
        let args = draw_tuple(ps.ring(), &mut rng, basis.degree() as usize, dim, cfg.p);
        let vals = ev.evaluate_all(&args);
        for i in 0..dim {
            for j in 0..m {
                row[j] = vals[j][i];
            }
            assert!(
                reducer.contains(&row),
                "held-out row escaped the stabilized row space; rank was not final"
            );
        }
        held_out.push(vals);
    }

    let rank = reducer.rank();
    let rcf = reducer.into_rcf();
    let nullspace: Vec<IdentityVector> = mod_nullspace(&rcf)
        .into_iter()
        .map(|res| {
            IdentityVector::from_coeffs(basis.degree(), res.into_iter().map(Int::from).collect())
        })
        .collect();
    assert_eq!(nullspace.len(), m - rank, "nullspace dimension");

    if nullspace.len() * m <= DIRECT_CHECK_LIMIT {
        let p = cfg.p;
        for vals in &held_out {
            for iv in &nullspace {
                for i in 0..dim {
                    let mut total: u64 = 0;
                    for (j, c) in iv.terms() {
                        let c = u64::try_from(c).expect("modular coefficients are residues");
                        total = (total + c * vals[j][i]) % p;
                    }
                    assert_eq!(total, 0, "reported identity fails on a held-out tuple");
                }
            }
        }
    }

    SearchOutcome { rank, iterations, nullspace }
}

/// Result of the module generators algorithm.
pub struct ModuleGenerators {
    /// Indices into the input list of the identities whose permutation
    /// orbits grew the workspace, in processing order.
    pub generators: Vec<usize>,
    /// Final workspace rank: the dimension of the module generated by all
    /// the input identities.
    pub dimension: usize,
}

/// Find which identities generate the whole module under variable
/// permutations.
///
/// Identities are processed by increasing Euclidean norm (ties keep input
/// order). For each one, all degree! permutation images are straightened
/// and reduced into a persistent workspace in chunks of `batch` rows; the
/// identity is recorded as a generator iff the workspace rank grew. Pass a
/// prime in `modulus` to work over Z/p instead of the rationals.
pub fn module_generators(
    basis: &MonomialBasis,
    identities: &[IdentityVector],
    batch: usize,
    modulus: Option<u64>,
) -> ModuleGenerators {
    module_generators_with(basis, identities, batch, modulus, |_, _| {})
}

/// As [`module_generators`], reporting (identities processed, rank).
pub fn module_generators_with(
    basis: &MonomialBasis,
    identities: &[IdentityVector],
    batch: usize,
    modulus: Option<u64>,
    mut progress: impl FnMut(usize, usize),
) -> ModuleGenerators {
    assert!(batch >= 1, "batch size must be positive");
    let degree = basis.degree();
    assert!(identities.iter().all(|iv| iv.degree() == degree), "identities of one degree");

    let mut order: Vec<usize> = (0..identities.len()).collect();
    order.sort_by_cached_key(|&i| identities[i].norm_squared());

    enum Workspace {
        Rat(RatReducer),
        Mod(ModReducer, Vec<u64>),
    }
    let mut ws = match modulus {
        None => Workspace::Rat(RatReducer::new(basis.len())),
        Some(p) => Workspace::Mod(ModReducer::new(p, basis.len()), vec![0u64; basis.len()]),
    };

    let mut generators = Vec::new();
    for (done, &k) in order.iter().enumerate() {
        let before = match &ws {
            Workspace::Rat(r) => r.rank(),
            Workspace::Mod(r, _) => r.rank(),
        };
        let perms = (1..=degree as u8).permutations(degree as usize);
        for chunk in &perms.chunks(batch) {
            for perm in chunk {
                let image = apply_permutation(basis, &identities[k], &perm);
                match &mut ws {
                    Workspace::Rat(r) => {
                        let row: Vec<Rational> =
                            image.coeffs().iter().map(|c| Rational::from_integer(c.clone())).collect();
                        r.add_row(row);
                    }
                    Workspace::Mod(r, row) => {
                        let ring = ModRing::new(r.modulus());
                        for (j, c) in image.coeffs().iter().enumerate() {
                            row[j] = ring.from_int(c);
                        }
                        r.add_row(row);
                    }
                }
            }
        }
        let after = match &ws {
            Workspace::Rat(r) => r.rank(),
            Workspace::Mod(r, _) => r.rank(),
        };
        if after > before {
            generators.push(k);
        }
        progress(done + 1, after);
    }
    let dimension = match &ws {
        Workspace::Rat(r) => r.rank(),
        Workspace::Mod(r, _) => r.rank(),
    };
    ModuleGenerators { generators, dimension }
}

/// Reduce the full permutation orbit of each identity into a rational
/// workspace and return it, for rank and membership queries against the
/// generated module.
pub fn permutation_module(basis: &MonomialBasis, identities: &[IdentityVector]) -> RatReducer {
    let degree = basis.degree();
    let mut reducer = RatReducer::new(basis.len());
    for iv in identities {
        assert_eq!(iv.degree(), degree, "identities of one degree");
        for perm in (1..=degree as u8).permutations(degree as usize) {
            let image = apply_permutation(basis, iv, &perm);
            let row: Vec<Rational> =
                image.coeffs().iter().map(|c| Rational::from_integer(c.clone())).collect();
            reducer.add_row(row);
        }
    }
    reducer
}
