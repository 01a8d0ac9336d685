//! Smith normal form over Q[x].
//!
//! Two strategies share the public entry point:
//!
//! - Small matrices go through classical elimination: bring a
//!   minimal-degree entry to the pivot, clear its row and column by
//!   division with remainder, and enforce that each pivot divides the
//!   trailing submatrix. Correct for every input, but intermediate degrees
//!   and coefficients swell quickly with the pivot count.
//! - Larger matrices go through local data. The rank is certified by one
//!   exact evaluation (plus an exact kernel check when it is not full), a
//!   provably nonzero maximal minor is interpolated from constant
//!   determinants, and the candidate points where invariant factors can
//!   vanish are read off that minor modulo small primes. At each verified
//!   point the exponents come from ranks of block Toeplitz matrices built
//!   from the Taylor digits: if the local exponents are e_1 <= ... <= e_r,
//!   the j-th digit matrix has rank sum_i max(j - e_i, 0). A resultant
//!   certificate modulo a prime confirms that no further points exist.
//!
//! The local route only ever emits a certified answer; whenever a
//! certificate cannot be established (irrational rank-drop points, shared
//! junk factors between the witness minors), it hands the matrix to the
//! elimination route, which is slower but unconditional. Diagonal entries
//! are returned monic (zero stays zero), padded with zeros to
//! min(rows, cols), and satisfy d_i | d_{i+1}.

use num::{One, ToPrimitive, Zero};

use super::{cib_from_rcf, rat, rcf, Int, RatMatrix, RatReducer, Rational, UniPoly};

/// Dense matrix over Q[x], row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    data: Vec<UniPoly>,
}

impl PolyMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            data: vec![UniPoly::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<UniPoly>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        PolyMatrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &UniPoly {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: UniPoly) {
        self.data[i * self.cols + j] = v;
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row_i -= q * row_k, columns k.. only (earlier columns are zero).
    fn row_sub_mul(&mut self, i: usize, k: usize, q: &UniPoly, from_col: usize) {
        for j in from_col..self.cols {
            let sub = q.mul(self.at(k, j));
            if !sub.is_zero() {
                let v = self.at(i, j).sub(&sub);
                self.set(i, j, v);
            }
        }
    }

    fn col_sub_mul(&mut self, j: usize, k: usize, q: &UniPoly, from_row: usize) {
        for i in from_row..self.rows {
            let sub = q.mul(self.at(i, k));
            if !sub.is_zero() {
                let v = self.at(i, j).sub(&sub);
                self.set(i, j, v);
            }
        }
    }

    /// Divide a row by its rational content (a unit in Q[x]); keeps
    /// coefficient growth in check without affecting the invariant factors.
    fn normalize_row_content(&mut self, i: usize, from_col: usize) {
        let mut content: Option<Rational> = None;
        for j in from_col..self.cols {
            if !self.at(i, j).is_zero() {
                let c = self.at(i, j).content();
                content = Some(match content {
                    None => c,
                    Some(acc) => gcd_rat(&acc, &c),
                });
            }
        }
        let Some(c) = content else { return };
        if c.is_one() {
            return;
        }
        let inv = Rational::one() / &c;
        for j in from_col..self.cols {
            let v = self.at(i, j).scale(&inv);
            self.set(i, j, v);
        }
    }
}

/// gcd on positive rationals: gcd of numerators over lcm of denominators.
fn gcd_rat(a: &Rational, b: &Rational) -> Rational {
    use num::Integer;
    Rational::new(a.numer().gcd(b.numer()), a.denom().lcm(b.denom()))
}

fn degree_rank(p: &UniPoly) -> usize {
    // Zero sorts above everything so minimal-degree search skips it.
    p.degree().map_or(usize::MAX, |d| d)
}

/// Elimination is unconditional; above this size the local route runs first.
const ELIMINATION_LIMIT: usize = 12;

/// Diagonal of the Smith normal form of `m` over Q[x].
pub fn smith_diagonal(m: &PolyMatrix) -> Vec<UniPoly> {
    let diag = if m.rows.min(m.cols) <= ELIMINATION_LIMIT {
        smith_by_elimination(m)
    } else {
        smith_by_local_data(m).unwrap_or_else(|| smith_by_elimination(m))
    };
    debug_assert!(divisibility_chain_holds(&diag));
    diag
}

fn smith_by_elimination(m: &PolyMatrix) -> Vec<UniPoly> {
    let mut a = m.clone();
    let n = a.rows.min(a.cols);
    let mut diag = Vec::with_capacity(n);
    for k in 0..n {
        'pivot: loop {
            // Minimal-degree nonzero entry in the trailing submatrix.
            let mut best: Option<(usize, usize, usize)> = None;
            for i in k..a.rows {
                for j in k..a.cols {
                    let d = degree_rank(a.at(i, j));
                    if d != usize::MAX && best.map_or(true, |(bd, _, _)| d < bd) {
                        best = Some((d, i, j));
                    }
                }
            }
            let Some((_, pi, pj)) = best else {
                // Trailing submatrix is zero; remaining diagonal entries are 0.
                break 'pivot;
            };
            a.swap_rows(k, pi);
            a.swap_cols(k, pj);
            a.normalize_row_content(k, k);

            // Clear column k by division with remainder. A nonzero remainder
            // has smaller degree than the pivot: restart pivot selection.
            let mut dirty = false;
            for i in k + 1..a.rows {
                if a.at(i, k).is_zero() {
                    continue;
                }
                let (q, r) = a.at(i, k).divmod(a.at(k, k)).expect("pivot nonzero");
                a.row_sub_mul(i, k, &q, k);
                debug_assert_eq!(*a.at(i, k), r);
                if !r.is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                continue 'pivot;
            }
            let mut dirty = false;
            for j in k + 1..a.cols {
                if a.at(k, j).is_zero() {
                    continue;
                }
                let (q, r) = a.at(k, j).divmod(a.at(k, k)).expect("pivot nonzero");
                a.col_sub_mul(j, k, &q, k);
                debug_assert_eq!(*a.at(k, j), r);
                if !r.is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                continue 'pivot;
            }

            // Divisibility: the pivot must divide every remaining entry. If
            // some entry resists, fold its row into row k and restart.
            for i in k + 1..a.rows {
                for j in k + 1..a.cols {
                    if a.at(i, j).is_zero() {
                        continue;
                    }
                    let (_, r) = a.at(i, j).divmod(a.at(k, k)).expect("pivot nonzero");
                    if !r.is_zero() {
                        for c in k..a.cols {
                            let v = a.at(k, c).add(a.at(i, c));
                            a.set(k, c, v);
                        }
                        continue 'pivot;
                    }
                }
            }
            break 'pivot;
        }
        diag.push(a.at(k, k).monic());
    }
    while diag.len() < n {
        diag.push(UniPoly::zero());
    }
    diag
}

fn divisibility_chain_holds(diag: &[UniPoly]) -> bool {
    for w in diag.windows(2) {
        let (a, b) = (&w[0], &w[1]);
        if a.is_zero() {
            if !b.is_zero() {
                return false;
            }
            continue;
        }
        if b.is_zero() {
            continue;
        }
        match b.divmod(a) {
            Ok((_, r)) => {
                if !r.is_zero() {
                    return false;
                }
            }
            Err(_) => return false,
        }
    }
    true
}

// ---------------------------------------------------------------------------
// Local route: rank certificate, witness minors, candidate points, jet ranks.
// ---------------------------------------------------------------------------

/// 16-bit primes for reducing witness minors and for the coprimality
/// certificate. Residues from the first three good ones are CRT-combined.
const PRIMES: [u64; 12] = [
    65521, 65519, 65497, 65479, 65449, 65447, 65437, 65423, 65419, 65413, 65407, 65393,
];

struct RankCertificate {
    rank: usize,
    /// Points of evaluation and pivot row/column sets of two (usually
    /// distinct) nonsingular rank x rank submatrices.
    witnesses: Vec<(Vec<usize>, Vec<usize>)>,
}

fn smith_by_local_data(m: &PolyMatrix) -> Option<Vec<UniPoly>> {
    let nmin = m.rows.min(m.cols);
    let cert = certified_rank(m)?;
    let r = cert.rank;
    if r == 0 {
        return Some(vec![UniPoly::zero(); nmin]);
    }

    // Witness minors: D_r (the gcd of all r x r minors, whose roots carry
    // every nonunit invariant factor) divides each of them.
    let minors: Vec<UniPoly> = cert
        .witnesses
        .iter()
        .map(|(rows, cols)| primitive_part(&minor_polynomial(m, rows, cols)))
        .collect();

    // Candidate rank-drop points: rational roots shared by all witness
    // minors, lifted from their roots modulo three primes. A true drop
    // point is a root of every minor, so it survives every reduction; junk
    // candidates are eliminated by the exact evaluation below.
    let candidates = candidate_points(&minors)?;

    // Exact local data at each candidate. Non-drop candidates come back
    // with all exponents zero and only matter for the certificate.
    let cap = minors[0].degree().unwrap_or(0) + 1;
    let mut locals: Vec<(Rational, Vec<usize>)> = Vec::new();
    for c in candidates {
        let exps = local_exponents(m, &c, r, cap)?;
        locals.push((c, exps));
    }

    // Completeness certificate: strip every candidate's full valuation from
    // two witness minors; if the stripped cofactors are coprime, no further
    // rank-drop points exist. Coprimality is certified by a constant gcd
    // modulo one prime that preserves both degrees.
    let stripped: Vec<UniPoly> = minors
        .iter()
        .map(|g| {
            let mut w = g.clone();
            for (c, _) in &locals {
                w = strip_root(&w, c);
            }
            w
        })
        .collect();
    let mut certified = stripped.iter().any(|w| w.degree() == Some(0));
    'pairs: for (i, a) in stripped.iter().enumerate() {
        if certified {
            break;
        }
        for b in &stripped[i + 1..] {
            if coprime_mod_prime(a, b) {
                certified = true;
                break 'pairs;
            }
        }
    }
    if !certified {
        return None;
    }

    // Assemble: at each point the exponents are ascending, so taking the
    // i-th exponent from every point keeps the divisibility chain.
    let mut diag = Vec::with_capacity(nmin);
    for i in 0..r {
        let mut d = UniPoly::one();
        for (c, exps) in &locals {
            let lin = UniPoly::from_coeffs(vec![-c.clone(), Rational::one()]);
            for _ in 0..exps[i] {
                d = d.mul(&lin);
            }
        }
        diag.push(d);
    }
    diag.resize(nmin, UniPoly::zero());
    Some(diag)
}

/// Exact rank with pivot sets for witness minors, or None when no sample
/// point certifies (the kernel then involves the variable itself).
fn certified_rank(m: &PolyMatrix) -> Option<RankCertificate> {
    let nmin = m.rows.min(m.cols);
    'points: for point in [2i64, 3, 5, 7, 11] {
        let x = rat(point);
        let ev: Vec<Vec<Rational>> = (0..m.rows)
            .map(|i| (0..m.cols).map(|j| m.at(i, j).eval(&x)).collect())
            .collect();
        let mat = RatMatrix::from_rows(ev.clone());
        let form = rcf(&mat);
        let r = form.rank;
        if r < nmin {
            // The pointwise rank is a lower bound for the generic rank; it
            // is exact here iff the pointwise kernel kills the whole
            // polynomial matrix.
            for v in cib_from_rcf(&form, m.cols) {
                for i in 0..m.rows {
                    let mut acc = UniPoly::zero();
                    for (j, vj) in v.iter().enumerate() {
                        if !vj.is_zero() {
                            acc = acc.add(&m.at(i, j).scale(&Rational::from_integer(vj.clone())));
                        }
                    }
                    if !acc.is_zero() {
                        continue 'points;
                    }
                }
            }
        }
        if r == 0 {
            return Some(RankCertificate { rank: 0, witnesses: Vec::new() });
        }
        let forward: Vec<usize> = (0..m.rows).collect();
        let backward: Vec<usize> = (0..m.rows).rev().collect();
        let natural: Vec<usize> = (0..m.cols).collect();
        let mirrored: Vec<usize> = (0..m.cols).rev().collect();
        let mut witnesses: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
        for sets in [
            pivot_sets(&ev, &forward, &natural),
            pivot_sets(&ev, &backward, &mirrored),
            pivot_sets(&ev, &backward, &natural),
            pivot_sets(&ev, &forward, &mirrored),
        ] {
            if !witnesses.contains(&sets) {
                witnesses.push(sets);
            }
        }
        debug_assert!(witnesses.iter().all(|(rows, cols)| rows.len() == r && cols.len() == r));
        return Some(RankCertificate { rank: r, witnesses });
    }
    None
}

/// Pivot rows and columns of the evaluated matrix when rows are fed in
/// `row_order` and columns scanned in `col_order`; indices refer to the
/// original matrix and come back sorted. The returned submatrix is
/// nonsingular at the evaluation point, so its minor is a nonzero
/// polynomial.
fn pivot_sets(ev: &[Vec<Rational>], row_order: &[usize], col_order: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let permuted: Vec<Vec<Rational>> = row_order
        .iter()
        .map(|&i| col_order.iter().map(|&j| ev[i][j].clone()).collect())
        .collect();
    let mut reducer = RatReducer::new(col_order.len());
    let mut pivot_rows = Vec::new();
    for (k, row) in permuted.iter().enumerate() {
        if reducer.add_row(row.clone()) {
            pivot_rows.push(row_order[k]);
        }
    }
    let form = rcf(&RatMatrix::from_rows(permuted));
    let mut pivot_cols: Vec<usize> = form.pivot_cols.iter().map(|&j| col_order[j]).collect();
    pivot_rows.sort_unstable();
    pivot_cols.sort_unstable();
    (pivot_rows, pivot_cols)
}

/// Determinant of the square submatrix on `rows` x `cols`, interpolated
/// from constant determinants at deg+1 integer points.
fn minor_polynomial(m: &PolyMatrix, rows: &[usize], cols: &[usize]) -> UniPoly {
    assert_eq!(rows.len(), cols.len());
    if rows.is_empty() {
        return UniPoly::one();
    }
    let bound: usize = rows
        .iter()
        .map(|&i| cols.iter().filter_map(|&j| m.at(i, j).degree()).max().unwrap_or(0))
        .sum();
    let xs: Vec<i64> = (0..=bound as i64).collect();
    let ys: Vec<Rational> = xs
        .iter()
        .map(|&t| {
            let x = rat(t);
            let sub: Vec<Vec<Rational>> = rows
                .iter()
                .map(|&i| cols.iter().map(|&j| m.at(i, j).eval(&x)).collect())
                .collect();
            rational_det(sub)
        })
        .collect();
    newton_interpolate(&xs, &ys)
}

/// Determinant over Q: clear denominators per row, then fraction-free
/// elimination over Z.
fn rational_det(rows: Vec<Vec<Rational>>) -> Rational {
    use num::Integer;
    let mut scale = Int::one();
    let mut a: Vec<Vec<Int>> = Vec::with_capacity(rows.len());
    for row in rows {
        let mut den = Int::one();
        for v in &row {
            den = den.lcm(v.denom());
        }
        a.push(row.iter().map(|v| v.numer() * (&den / v.denom())).collect());
        scale *= den;
    }
    Rational::new(int_det(a), scale)
}

/// Bareiss fraction-free determinant: every division is exact and the
/// intermediate entries are genuine minors of the input.
fn int_det(mut a: Vec<Vec<Int>>) -> Int {
    let n = a.len();
    if n == 0 {
        return Int::one();
    }
    let mut sign = false;
    let mut prev = Int::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = !sign;
                }
                None => return Int::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = t / &prev;
            }
            a[i][k] = Int::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign {
        -det
    } else {
        det
    }
}

/// Newton interpolation through (xs[i], ys[i]) with distinct xs.
fn newton_interpolate(xs: &[i64], ys: &[Rational]) -> UniPoly {
    let n = xs.len();
    let mut dd = ys.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            let denom = rat(xs[i] - xs[i - level]);
            dd[i] = (&dd[i] - &dd[i - 1]) / denom;
        }
    }
    let mut poly = UniPoly::zero();
    let mut basis = UniPoly::one();
    for (i, c) in dd.iter().enumerate() {
        poly = poly.add(&basis.scale(c));
        basis = basis.mul(&UniPoly::from_coeffs(vec![rat(-xs[i]), Rational::one()]));
    }
    poly
}

fn primitive_part(p: &UniPoly) -> UniPoly {
    if p.is_zero() {
        return UniPoly::zero();
    }
    let c = p.content();
    p.scale(&(Rational::one() / c))
}

/// Rational points that could be roots of every witness minor: per prime,
/// roots of the gcd of the reductions; residues from three primes are
/// CRT-combined and lifted. None when a root set is too large to combine
/// (the caller then falls back).
fn candidate_points(minors: &[UniPoly]) -> Option<Vec<Rational>> {
    let mut per_prime: Vec<(u64, Vec<u64>)> = Vec::new();
    for &p in PRIMES.iter() {
        let mut reduced = Vec::with_capacity(minors.len());
        for g in minors {
            match poly_mod(g, p) {
                Some(f) if f.len() == g.coeffs().len() => reduced.push(f),
                _ => {
                    reduced.clear();
                    break;
                }
            }
        }
        if reduced.is_empty() {
            continue;
        }
        let mut g = reduced.pop().unwrap();
        for f in &reduced {
            g = pm_gcd(&g, f, p);
        }
        if g.len() <= 1 {
            // Witness minors are already coprime modulo this prime, so the
            // determinantal divisor is constant: no candidates at all.
            return Some(Vec::new());
        }
        let roots = pm_roots(&g, p);
        if roots.len() > 16 {
            return None;
        }
        per_prime.push((p, roots));
        if per_prime.len() == 3 {
            break;
        }
    }
    if per_prime.len() < 3 {
        return None;
    }
    let mut out: Vec<Rational> = Vec::new();
    for &a in &per_prime[0].1 {
        for &b in &per_prime[1].1 {
            for &c in &per_prime[2].1 {
                let residues = [
                    (a, per_prime[0].0),
                    (b, per_prime[1].0),
                    (c, per_prime[2].0),
                ];
                if let Some(q) = rational_reconstruct(&residues) {
                    if !out.contains(&q) {
                        out.push(q);
                    }
                }
            }
        }
    }
    Some(out)
}

/// Invariant-factor exponents of the localization at x = c, ascending, one
/// per nonzero invariant factor. The j-th jet matrix stacks the Taylor
/// digits A_0..A_{j-1} in block Toeplitz form; its rank over Q is
/// sum_i max(j - e_i, 0), so consecutive differences count the exponents.
fn local_exponents(m: &PolyMatrix, c: &Rational, rank: usize, cap: usize) -> Option<Vec<usize>> {
    let depth = m.data.iter().map(|p| p.coeffs().len()).max().unwrap_or(0);
    let mut digits = vec![vec![vec![Rational::zero(); m.cols]; m.rows]; depth.max(1)];
    for i in 0..m.rows {
        for j in 0..m.cols {
            for (t, v) in taylor_digits(m.at(i, j), c).into_iter().enumerate() {
                digits[t][i][j] = v;
            }
        }
    }
    let mut counts: Vec<usize> = Vec::new();
    let mut prev_rank = 0usize;
    for j in 1..=cap + 1 {
        let mut reducer = RatReducer::new(j * m.cols);
        for u in 0..j {
            for i in 0..m.rows {
                let mut row = vec![Rational::zero(); j * m.cols];
                for v in 0..=u {
                    let t = u - v;
                    if t < digits.len() {
                        row[v * m.cols..(v + 1) * m.cols].clone_from_slice(&digits[t][i]);
                    }
                }
                reducer.add_row(row);
            }
        }
        let rank_j = reducer.rank();
        let count = rank_j - prev_rank;
        prev_rank = rank_j;
        counts.push(count);
        if count == rank {
            let mut exps = Vec::with_capacity(rank);
            for (e, &upper) in counts.iter().enumerate() {
                let lower = if e == 0 { 0 } else { counts[e - 1] };
                exps.extend(std::iter::repeat(e).take(upper - lower));
            }
            return Some(exps);
        }
    }
    None
}

/// Taylor coefficients of p at c (ascending), by repeated synthetic
/// division in place.
fn taylor_digits(p: &UniPoly, c: &Rational) -> Vec<Rational> {
    let mut coeffs: Vec<Rational> = p.coeffs().to_vec();
    let n = coeffs.len();
    for t in 0..n {
        for k in (t..n - 1).rev() {
            let bump = c * &coeffs[k + 1];
            coeffs[k] += bump;
        }
    }
    coeffs
}

/// Divide out (x - c) as often as it divides exactly.
fn strip_root(p: &UniPoly, c: &Rational) -> UniPoly {
    let lin = UniPoly::from_coeffs(vec![-c.clone(), Rational::one()]);
    let mut w = p.clone();
    loop {
        let Ok((q, r)) = w.divmod(&lin) else { return w };
        if r.is_zero() && !w.is_zero() {
            w = q;
        } else {
            return w;
        }
    }
}

/// True only with a certificate: some prime preserves both degrees and the
/// reductions have constant gcd, so the resultant is nonzero over Q.
fn coprime_mod_prime(a: &UniPoly, b: &UniPoly) -> bool {
    if a.degree() == Some(0) || b.degree() == Some(0) {
        return true;
    }
    if a.is_zero() || b.is_zero() {
        return false;
    }
    for &p in PRIMES.iter() {
        let (Some(fa), Some(fb)) = (poly_mod(a, p), poly_mod(b, p)) else {
            continue;
        };
        if fa.len() != a.coeffs().len() || fb.len() != b.coeffs().len() {
            continue;
        }
        if pm_gcd(&fa, &fb, p).len() <= 1 {
            return true;
        }
    }
    false
}

// --- arithmetic modulo a small prime; polynomials are ascending u64 vectors

/// Reduce modulo p; None if a coefficient denominator vanishes mod p.
fn poly_mod(f: &UniPoly, p: u64) -> Option<Vec<u64>> {
    use num::Integer;
    let pm = Int::from(p);
    let mut out = Vec::with_capacity(f.coeffs().len());
    for c in f.coeffs() {
        let den = c.denom().mod_floor(&pm).to_u64().expect("residue fits");
        if den == 0 {
            return None;
        }
        let num = c.numer().mod_floor(&pm).to_u64().expect("residue fits");
        out.push(num * mod_inv(den, p) % p);
    }
    pm_trim(&mut out);
    Some(out)
}

fn pm_trim(f: &mut Vec<u64>) {
    while f.last() == Some(&0) {
        f.pop();
    }
}

fn pm_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let inv = mod_inv(*b.last().expect("nonzero divisor"), p);
    while r.len() >= b.len() && !r.is_empty() {
        let k = r.len() - b.len();
        let c = r.last().unwrap() * inv % p;
        for (j, &bj) in b.iter().enumerate() {
            r[k + j] = (r[k + j] + p - c * bj % p) % p;
        }
        pm_trim(&mut r);
    }
    r
}

fn pm_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    while !y.is_empty() {
        let r = pm_rem(&x, &y, p);
        x = y;
        y = r;
    }
    if let Some(&lead) = x.last() {
        let inv = mod_inv(lead, p);
        for c in &mut x {
            *c = *c * inv % p;
        }
    }
    x
}

fn pm_roots(f: &[u64], p: u64) -> Vec<u64> {
    let mut roots = Vec::new();
    for c in 0..p {
        let mut acc = 0u64;
        for &a in f.iter().rev() {
            acc = (acc * c + a) % p;
        }
        if acc == 0 {
            roots.push(c);
        }
    }
    roots
}

/// Inverse modulo a prime, via Fermat.
fn mod_inv(a: u64, p: u64) -> u64 {
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// CRT-combine residues, then lift to a rational of height below
/// sqrt(modulus/2) by the half extended Euclidean algorithm. Spurious
/// lifts are harmless: every candidate is verified exactly afterwards.
fn rational_reconstruct(residues: &[(u64, u64)]) -> Option<Rational> {
    let mut modulus: i128 = 1;
    let mut value: i128 = 0;
    for &(r, p) in residues {
        let (r, p) = (r as i128, p as i128);
        let inv = mod_inv(modulus.rem_euclid(p) as u64, p as u64) as i128;
        let t = ((r - value).rem_euclid(p) * inv).rem_euclid(p);
        value += modulus * t;
        modulus *= p;
    }
    let bound = ((modulus / 2) as u128).isqrt() as i128;
    let (mut r0, mut r1) = (modulus, value);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 > bound {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if t1 == 0 || t1.abs() > bound {
        return None;
    }
    Some(Rational::new(Int::from(r1), Int::from(t1)))
}

#[cfg(test)]
mod tests {
    use super::super::frac;
    use super::*;

    fn poly(c: &[i64]) -> UniPoly {
        UniPoly::from_i64_coeffs(c)
    }

    #[test]
    fn unit_pivot_moves_first() {
        // diag(x, 1) -> [1, x]
        let m = PolyMatrix::from_rows(vec![
            vec![UniPoly::x(), UniPoly::zero()],
            vec![UniPoly::zero(), UniPoly::one()],
        ]);
        assert_eq!(smith_diagonal(&m), vec![UniPoly::one(), UniPoly::x()]);
    }

    #[test]
    fn coprime_diagonal_combines() {
        // diag(x, x-1) -> [1, x^2 - x]
        let m = PolyMatrix::from_rows(vec![
            vec![UniPoly::x(), UniPoly::zero()],
            vec![UniPoly::zero(), poly(&[-1, 1])],
        ]);
        assert_eq!(smith_diagonal(&m), vec![UniPoly::one(), poly(&[0, -1, 1])]);
    }

    #[test]
    fn zero_matrix_gives_zero_diagonal() {
        let m = PolyMatrix::zero(2, 3);
        assert_eq!(smith_diagonal(&m), vec![UniPoly::zero(), UniPoly::zero()]);
    }

    #[test]
    fn diagonal_is_monic() {
        let m = PolyMatrix::from_rows(vec![vec![poly(&[-5, 4])]]); // 4x - 5
        assert_eq!(
            smith_diagonal(&m),
            vec![UniPoly::from_coeffs(vec![frac(-5, 4), frac(4, 4)])]
        );
    }

    #[test]
    fn rectangular_pads_with_zeros() {
        let m = PolyMatrix::from_rows(vec![
            vec![UniPoly::one(), UniPoly::zero(), UniPoly::zero()],
            vec![UniPoly::zero(), UniPoly::zero(), UniPoly::zero()],
        ]);
        assert_eq!(smith_diagonal(&m), vec![UniPoly::one(), UniPoly::zero()]);
    }

    #[test]
    fn repeated_eigenvalue_block() {
        // [[x, 1], [0, x]] has det x^2 and gcd of entries 1: [1, x^2].
        let m = PolyMatrix::from_rows(vec![
            vec![UniPoly::x(), UniPoly::one()],
            vec![UniPoly::zero(), UniPoly::x()],
        ]);
        assert_eq!(smith_diagonal(&m), vec![UniPoly::one(), poly(&[0, 0, 1])]);
    }

    /// Start from a diagonal and scramble with unimodular row and column
    /// operations, which leave the Smith form unchanged.
    fn scrambled(n: usize, diag: &[UniPoly]) -> PolyMatrix {
        let mut m = PolyMatrix::zero(n, n);
        for (i, d) in diag.iter().enumerate() {
            m.set(i, i, d.clone());
        }
        scramble(&mut m);
        m
    }

    fn scramble(m: &mut PolyMatrix) {
        let rows = m.rows();
        let cols = m.cols();
        let x_plus = |k: i64| UniPoly::from_i64_coeffs(&[k, 1]);
        // row_i += q * row_j and col_i += q * col_j for a fixed spread of
        // small constant and linear multipliers.
        for i in 0..rows {
            let j = (i + 3) % rows;
            if i == j {
                continue;
            }
            let q = if i % 3 == 0 { x_plus((i % 5) as i64) } else { poly(&[1 + (i % 4) as i64]) };
            for c in 0..cols {
                let v = m.at(i, c).add(&q.mul(m.at(j, c)));
                m.set(i, c, v);
            }
        }
        for c in 0..cols {
            let d = (c + 5) % cols;
            if c == d {
                continue;
            }
            let q = if c % 4 == 0 { x_plus(-((c % 3) as i64)) } else { poly(&[2 - (c % 5) as i64]) };
            if q.is_zero() {
                continue;
            }
            for i in 0..rows {
                let v = m.at(i, c).add(&q.mul(m.at(i, d)));
                m.set(i, c, v);
            }
        }
    }

    #[test]
    fn local_route_recovers_two_linear_factors() {
        let mut diag = vec![UniPoly::one(); 14];
        diag[12] = poly(&[-1, 1]); // x - 1
        diag[13] = poly(&[-1, 1]).mul(&poly(&[-2, 1])); // (x-1)(x-2)
        let m = scrambled(14, &diag);
        let got = smith_diagonal(&m);
        assert_eq!(got[..12], vec![UniPoly::one(); 12][..]);
        assert_eq!(got[12], poly(&[-1, 1]));
        assert_eq!(got[13], poly(&[2, -3, 1]));
    }

    #[test]
    fn local_route_handles_a_repeated_factor() {
        let mut diag = vec![UniPoly::one(); 14];
        diag[12] = poly(&[-1, 1]);
        diag[13] = poly(&[-1, 1]).mul(&poly(&[-1, 1])); // (x-1)^2
        let m = scrambled(14, &diag);
        let got = smith_diagonal(&m);
        assert_eq!(got[12], poly(&[-1, 1]));
        assert_eq!(got[13], poly(&[1, -2, 1]));
    }

    #[test]
    fn local_route_finds_a_rational_drop_point() {
        let mut diag = vec![UniPoly::one(); 14];
        diag[13] = UniPoly::from_coeffs(vec![frac(-5, 4), frac(1, 1)]); // x - 5/4
        let m = scrambled(14, &diag);
        let got = smith_diagonal(&m);
        assert_eq!(got[12], UniPoly::one());
        assert_eq!(got[13], UniPoly::from_coeffs(vec![frac(-5, 4), frac(1, 1)]));
    }

    #[test]
    fn local_route_certifies_a_trailing_zero() {
        // 14 x 13, last column identically zero: rank 12, diagonal
        // [1 x 12, 0].
        let mut m = PolyMatrix::zero(14, 13);
        for i in 0..12 {
            m.set(i, i, UniPoly::one());
        }
        scramble(&mut m);
        let got = smith_diagonal(&m);
        assert_eq!(got[..12], vec![UniPoly::one(); 12][..]);
        assert_eq!(got[12], UniPoly::zero());
    }

    #[test]
    fn distinct_witness_minors_cancel_accidental_factors() {
        // Rows 0..12 carry diag(1 x 12, x - 1); row 13 repeats the last
        // column with x - 2. Individual maximal minors pick up x - 1 or
        // x - 2, but their gcd is constant: the Smith form is all ones.
        let mut m = PolyMatrix::zero(14, 13);
        for i in 0..12 {
            m.set(i, i, UniPoly::one());
        }
        m.set(12, 12, poly(&[-1, 1]));
        m.set(13, 12, poly(&[-2, 1]));
        let got = smith_diagonal(&m);
        assert_eq!(got, vec![UniPoly::one(); 13]);
    }

    #[test]
    fn irrational_drop_points_fall_back_to_elimination() {
        // x^2 - 2 has no rational roots, so the local route cannot certify
        // and the unconditional path must produce the answer.
        let mut diag = vec![UniPoly::one(); 13];
        diag[12] = poly(&[-2, 0, 1]);
        let mut m = PolyMatrix::zero(13, 13);
        for (i, d) in diag.iter().enumerate() {
            m.set(i, i, d.clone());
        }
        // Constant scrambling only, to keep the elimination fallback quick.
        for i in 0..13 {
            let j = (i + 4) % 13;
            if i == j {
                continue;
            }
            for c in 0..13 {
                let v = m.at(i, c).add(&poly(&[1]).mul(m.at(j, c)));
                m.set(i, c, v);
            }
        }
        let got = smith_diagonal(&m);
        assert_eq!(got[..12], vec![UniPoly::one(); 12][..]);
        assert_eq!(got[12], poly(&[-2, 0, 1]));
    }

    #[test]
    fn taylor_digits_expand_around_the_point() {
        let p = poly(&[0, 0, 1]); // x^2 = (x-1)^2 + 2(x-1) + 1
        let d = taylor_digits(&p, &rat(1));
        assert_eq!(d, vec![rat(1), rat(2), rat(1)]);
    }

    #[test]
    fn interpolation_matches_bareiss_determinants() {
        // det [[x, 1], [2, x]] = x^2 - 2 via the interpolation helper.
        let m = PolyMatrix::from_rows(vec![
            vec![UniPoly::x(), UniPoly::one()],
            vec![poly(&[2]), UniPoly::x()],
        ]);
        let det = minor_polynomial(&m, &[0, 1], &[0, 1]);
        assert_eq!(det, poly(&[-2, 0, 1]));
    }

    #[test]
    fn rational_reconstruction_lifts_small_fractions() {
        // 5/4 modulo three primes lifts back to 5/4.
        let residues: Vec<(u64, u64)> = [65521u64, 65519, 65497]
            .iter()
            .map(|&p| {
                let inv4 = mod_inv(4, p);
                (5 * inv4 % p, p)
            })
            .collect();
        assert_eq!(rational_reconstruct(&residues), Some(frac(5, 4)));
    }
}
