//! Counting the occurrences of V(n) inside its fourth exterior power.
//!
//! The weight-w space of the k-th exterior power of V(n) is spanned by
//! wedges of k distinct basis vectors with weights summing to w, so its
//! dimension is a partition count. Polya enumeration packages the count
//! for k = 4 into a generating polynomial: substituting signed power sums
//! of 1, x, ..., x^n into the cycle index of S4 gives the polynomial
//! whose x^l coefficient is the number of partitions of l into four
//! distinct parts in {0..n}. The weight-w dimension is the coefficient
//! at l = (w + 4n)/2.
//!
//! The multiplicity of V(n) as a summand equals the number of highest
//! weight vectors of weight n, which is the dimension gap between the
//! weight-n and weight-(n+2) spaces. Closed cubic forms for the two
//! dimensions (even n) use floor/ceiling helper functions of period 24,
//! so 1152 times each dimension is an integer cubic in n depending only
//! on n mod 24. All evaluation is integer-exact: the 1152-scaled value
//! is computed first, divisibility asserted, then divided.

use num::{One, Zero};

use crate::exactla::{frac, invert, rat, Int, RatMatrix, Rational, UniPoly};

/// A cycle index: rational coefficients keyed by cycle-type exponents
/// (b1, b2, b3, b4) with 1*b1 + 2*b2 + 3*b3 + 4*b4 = 4.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleIndex {
    terms: Vec<([u32; 4], Rational)>,
}

/// Permutation groups on four letters with implemented cycle indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Group {
    S4,
    A4,
}

/// The cycle index Z_G, averaging monomials x1^b1 x2^b2 x3^b3 x4^b4 over
/// the cycle types of the group elements.
pub fn cycle_index(group: Group) -> CycleIndex {
    let s4 = vec![
        ([4, 0, 0, 0], frac(1, 24)),
        ([2, 1, 0, 0], frac(6, 24)),
        ([1, 0, 1, 0], frac(8, 24)),
        ([0, 2, 0, 0], frac(3, 24)),
        ([0, 0, 0, 1], frac(6, 24)),
    ];
    let terms = match group {
        Group::S4 => s4,
        // Z_A4(x1..x4) = Z_S4(x1, x2, x3, x4) + Z_S4(x1, -x2, x3, -x4):
        // terms with an odd number of even-cycle factors cancel.
        Group::A4 => s4
            .into_iter()
            .filter_map(|(b, c)| {
                let sign = if (b[1] + b[3]) % 2 == 0 { 1 } else { -1 };
                let doubled = &c + &c.clone() * rat(sign);
                (!doubled.is_zero()).then_some((b, doubled))
            })
            .collect(),
    };
    for (b, _) in &terms {
        assert_eq!(b[0] + 2 * b[1] + 3 * b[2] + 4 * b[3], 4, "cycle type of S4");
    }
    CycleIndex { terms }
}

impl CycleIndex {
    pub fn terms(&self) -> &[([u32; 4], Rational)] {
        &self.terms
    }

    /// Sum of the coefficients (1 for a cycle index).
    pub fn coefficient_sum(&self) -> Rational {
        let mut s = Rational::zero();
        for (_, c) in &self.terms {
            s += c;
        }
        s
    }

    /// Substitute polynomials for the variables x1..x4.
    pub fn apply(&self, args: &[UniPoly; 4]) -> UniPoly {
        let mut out = UniPoly::zero();
        for (b, c) in &self.terms {
            let mut term = UniPoly::one();
            for (arg, &e) in args.iter().zip(b.iter()) {
                for _ in 0..e {
                    term = term.mul(arg);
                }
            }
            out = out.add(&term.scale(c));
        }
        out
    }
}

/// The generating polynomial whose x^l coefficient counts partitions of l
/// into four distinct parts in {0..n}: the cycle index of S4 applied to
/// the signed power sums sum x^i, -sum x^2i, sum x^3i, -sum x^4i.
pub fn pn_polynomial(n: u32) -> UniPoly {
    let power_sum = |k: usize, sign: i64| {
        let mut coeffs = vec![Rational::zero(); k * n as usize + 1];
        for i in 0..=n as usize {
            coeffs[k * i] = rat(sign);
        }
        UniPoly::from_coeffs(coeffs)
    };
    let p = cycle_index(Group::S4).apply(&[
        power_sum(1, 1),
        power_sum(2, -1),
        power_sum(3, 1),
        power_sum(4, -1),
    ]);
    assert!(
        p.coeffs().iter().all(|c| c.is_integer()),
        "partition generating polynomial must have integer coefficients"
    );
    p
}

/// Number of partitions of w into four distinct parts in {0..n}, read off
/// the generating polynomial.
pub fn count_partitions_4distinct(w: u32, n: u32) -> Int {
    pn_polynomial(n).coeff(w as usize).to_integer()
}

/// The same count by direct enumeration of n >= p > q > r > s >= 0 with
/// p + q + r + s = w.
pub fn count_partitions_4distinct_brute(w: u32, n: u32) -> Int {
    let (w, n) = (w as i64, n as i64);
    let mut count = 0i64;
    for p in 3..=n {
        for q in 2..p {
            for r in 1..q {
                let s = w - p - q - r;
                if s >= 0 && s < r {
                    count += 1;
                }
            }
        }
    }
    Int::from(count)
}

/// Dimension of the weight-w space of the k-th exterior power of V(n):
/// the number of strictly decreasing k-tuples of weights in [-n, n] with
/// the parity of n, summing to w. Weights of the wrong parity give 0.
///
/// For k = 4 and even n the count routes through the generating
/// polynomial at l = (w + 4n)/2; other cases enumerate directly.
pub fn weight_space_dim(n: u32, w: i32, k: u32) -> Int {
    let (ni, ki) = (n as i64, k as i64);
    let wi = w as i64;
    if (ki * ni - wi).rem_euclid(2) != 0 || wi.abs() > ki * ni {
        return Int::zero();
    }
    if k == 4 && n % 2 == 0 {
        let l = (wi + 4 * ni) / 2;
        return count_partitions_4distinct(l as u32, n);
    }
    // Subsets of indices {0..n} of size k with weight sum w have index
    // sum (kn - w)/2; count them by 0/1 subset dynamic programming.
    let target = ((ki * ni - wi) / 2) as usize;
    let k = k as usize;
    let mut ways = vec![vec![Int::zero(); target + 1]; k + 1];
    ways[0][0] = Int::one();
    for i in 0..=n as usize {
        for j in (1..=k).rev() {
            for s in (i..=target).rev() {
                let add = ways[j - 1][s - i].clone();
                if !add.is_zero() {
                    ways[j][s] += add;
                }
            }
        }
    }
    ways[k][target].clone()
}

fn floor_div(a: i128, b: i128) -> i128 {
    a.div_euclid(b)
}

fn ceil_div(a: i128, b: i128) -> i128 {
    -(-a).div_euclid(b)
}

fn alpha(n: i128) -> i128 {
    ceil_div(n, 4)
}

fn beta(n: i128) -> i128 {
    ceil_div(3 * n, 4)
}

fn gamma(n: i128) -> i128 {
    floor_div(3 * n - 2, 4)
}

fn delta(n: i128) -> i128 {
    floor_div(5 * n, 6)
}

fn epsilon(n: i128) -> i128 {
    floor_div(3 * n, 4)
}

fn zeta(n: i128) -> i128 {
    ceil_div(n + 2, 4)
}

fn eta(n: i128) -> i128 {
    ceil_div(3 * n + 2, 4)
}

fn theta(n: i128) -> i128 {
    floor_div(5 * n + 2, 6)
}

/// 1 when n is congruent to s modulo m.
fn ind(n: i128, s: i128, m: i128) -> i128 {
    i128::from(n.rem_euclid(m) == s)
}

/// 1152 times the dimension of the weight-n space of the fourth exterior
/// power of V(n), for even n.
fn scaled_dim_weight_n(n: i128) -> i128 {
    let (a, b, g, d) = (alpha(n), beta(n), gamma(n), delta(n));
    let (d4, d8) = (ind(n, 0, 4), ind(n, 0, 8));
    23 * n * n * n - 348 * n * n + 4 * (-36 * a + 180 * b + 36 * g + 27 * d4 - 167) * n
        + 48 * (6 * a * a - 6 * b * b - 6 * g * g + 12 * b - 12 * g + 8 * d + 3 * d4 - 6 * d8 - 3)
}

/// 1152 times the dimension of the weight-(n+2) space of the fourth
/// exterior power of V(n), for even n.
fn scaled_dim_weight_n_plus_2(n: i128) -> i128 {
    let (e, z, h, t) = (epsilon(n), zeta(n), eta(n), theta(n));
    let (d42, d86) = (ind(n, 2, 4), ind(n, 6, 8));
    23 * n * n * n - 378 * n * n + 4 * (36 * e - 36 * z + 180 * h + 27 * d42 - 254) * n
        + 24 * (-12 * e * e + 12 * z * z - 12 * h * h - 12 * e - 12 * z + 36 * h + 16 * t
            + 3 * d42
            - 12 * d86
            - 24)
}

fn exact_1152(scaled: i128, what: &str) -> Int {
    assert!(
        scaled.rem_euclid(1152) == 0,
        "1152-scaled {what} must be divisible: {scaled}"
    );
    Int::from(scaled.div_euclid(1152))
}

/// Dimension of the weight-n space of the fourth exterior power of V(n)
/// by the closed cubic form. Defined for even n.
pub fn dim_weight_n(n: u32) -> Int {
    assert!(n % 2 == 0, "closed form defined for even n, got {n}");
    exact_1152(scaled_dim_weight_n(n as i128), "weight-n dimension")
}

/// Dimension of the weight-(n+2) space of the fourth exterior power of
/// V(n) by the closed cubic form. Defined for even n.
pub fn dim_weight_n_plus_2(n: u32) -> Int {
    assert!(n % 2 == 0, "closed form defined for even n, got {n}");
    exact_1152(
        scaled_dim_weight_n_plus_2(n as i128),
        "weight-(n+2) dimension",
    )
}

/// Multiplicity of V(n) as a summand of its fourth exterior power: the
/// gap between the weight-n and weight-(n+2) dimensions. Zero for odd n.
pub fn multiplicity(n: u32) -> Int {
    if n % 2 != 0 {
        return Int::zero();
    }
    let scaled = scaled_dim_weight_n(n as i128) - scaled_dim_weight_n_plus_2(n as i128);
    let m = exact_1152(scaled, "multiplicity");
    assert!(m >= Int::zero(), "multiplicity must be non-negative");
    m
}

/// Multiplicity by direct enumeration, the oracle for the closed forms.
pub fn multiplicity_brute(n: u32) -> Int {
    if n % 2 != 0 {
        return Int::zero();
    }
    count_partitions_4distinct_brute(5 * n / 2, n)
        - count_partitions_4distinct_brute((5 * n + 2) / 2, n)
}

/// The cubic polynomials in n giving the 1152-scaled weight-n dimension,
/// weight-(n+2) dimension, and multiplicity on the residue class
/// n = 24q + r, as descending coefficient arrays [n^3, n^2, n, 1].
///
/// The floor/ceiling helpers are linear on each class mod 24, so each
/// scaled dimension collapses to a cubic; it is recovered exactly by
/// fitting four sample points.
pub fn residue_polynomials(r: u32) -> [[Int; 4]; 3] {
    assert!(r % 2 == 0 && r < 24, "even residue class mod 24, got {r}");
    let fit = |f: &dyn Fn(i128) -> i128| -> [Int; 4] {
        let samples: Vec<i128> = (0..4).map(|q| r as i128 + 24 * q).collect();
        let rows: Vec<Vec<i64>> = samples
            .iter()
            .map(|&n| vec![(n * n * n) as i64, (n * n) as i64, n as i64, 1])
            .collect();
        let v = RatMatrix::from_i64(&rows.iter().map(|r| &r[..]).collect::<Vec<_>>());
        let inv = invert(&v).expect("distinct sample points give an invertible system");
        let mut coeffs = [Int::zero(), Int::zero(), Int::zero(), Int::zero()];
        for (i, c) in coeffs.iter_mut().enumerate() {
            let mut acc = Rational::zero();
            for (j, &n) in samples.iter().enumerate() {
                acc += inv.at(i, j) * Rational::from(Int::from(f(n)));
            }
            assert!(acc.is_integer(), "cubic fit must be integral");
            *c = acc.to_integer();
        }
        coeffs
    };
    let top = fit(&scaled_dim_weight_n);
    let next = fit(&scaled_dim_weight_n_plus_2);
    let mut diff = [Int::zero(), Int::zero(), Int::zero(), Int::zero()];
    for i in 0..4 {
        diff[i] = &top[i] - &next[i];
    }
    [top, next, diff]
}

/// Coefficients of (sum_{i=0}^n x^i)^t by inclusion-exclusion:
/// the x^l coefficient is sum_k (-1)^k C(t,k) C(l-(n+1)k+t-1, t-1) over
/// 0 <= k <= min(t, floor(l/(n+1))).
pub fn power_sum_expansion(n: u32, t: u32) -> Vec<Int> {
    assert!(t >= 1, "exponent must be positive");
    let (n, t) = (n as u64, t as u64);
    (0..=n * t)
        .map(|l| {
            let mut acc = Int::zero();
            for k in 0..=t.min(l / (n + 1)) {
                let term = binomial(t, k) * binomial(l - (n + 1) * k + t - 1, t - 1);
                if k % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        })
        .collect()
}

/// Binomial coefficient C(a, b).
fn binomial(a: u64, b: u64) -> Int {
    if b > a {
        return Int::zero();
    }
    let b = b.min(a - b);
    let mut acc = Int::one();
    for i in 0..b {
        acc = acc * Int::from(a - i) / Int::from(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_index_of_s4_lists_the_five_cycle_types() {
        let z = cycle_index(Group::S4);
        assert_eq!(
            z.terms(),
            &[
                ([4, 0, 0, 0], frac(1, 24)),
                ([2, 1, 0, 0], frac(1, 4)),
                ([1, 0, 1, 0], frac(1, 3)),
                ([0, 2, 0, 0], frac(1, 8)),
                ([0, 0, 0, 1], frac(1, 4)),
            ]
        );
        assert_eq!(z.coefficient_sum(), rat(1));
    }

    #[test]
    fn cycle_index_of_a4_keeps_even_permutations() {
        let z = cycle_index(Group::A4);
        assert_eq!(
            z.terms(),
            &[
                ([4, 0, 0, 0], frac(1, 12)),
                ([1, 0, 1, 0], frac(2, 3)),
                ([0, 2, 0, 0], frac(1, 4)),
            ]
        );
        assert_eq!(z.coefficient_sum(), rat(1));
    }

    #[test]
    fn p4_polynomial_is_the_five_term_sum() {
        let p = pn_polynomial(4);
        assert_eq!(p, UniPoly::from_i64_coeffs(&[0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1]));
    }

    #[test]
    fn pn_coefficients_count_distinct_partitions() {
        assert_eq!(count_partitions_4distinct(12, 6), Int::from(5));
        assert_eq!(count_partitions_4distinct(15, 6), Int::from(3));
        assert_eq!(count_partitions_4distinct(20, 10), Int::from(24));
        for n in [3, 5, 8] {
            assert_eq!(
                count_partitions_4distinct(6, n),
                Int::from(1),
                "only 3+2+1+0 sums to 6"
            );
            assert_eq!(count_partitions_4distinct(5, n), Int::zero());
        }
    }

    #[test]
    fn pn_matches_brute_force_enumeration() {
        for n in 0..=12u32 {
            let p = pn_polynomial(n);
            for w in 0..=4 * n {
                assert_eq!(
                    p.coeff(w as usize).to_integer(),
                    count_partitions_4distinct_brute(w, n),
                    "partitions of {w} with parts at most {n}"
                );
            }
        }
    }

    #[test]
    fn pn_is_symmetric_about_2n() {
        for n in [6u32, 8, 10, 11] {
            let p = pn_polynomial(n);
            for w in 6..=(4 * n as usize - 6) {
                assert_eq!(
                    p.coeff(w),
                    p.coeff(4 * n as usize - w),
                    "symmetry of the partition counts for n = {n}"
                );
            }
        }
    }

    #[test]
    fn pn_total_count_is_binomial() {
        for n in [4u32, 6, 8, 10] {
            let total: Rational = pn_polynomial(n)
                .coeffs()
                .iter()
                .fold(Rational::zero(), |a, c| a + c);
            let choose4 = binomial(n as u64 + 1, 4);
            assert_eq!(total, Rational::from(choose4), "4-subset count for n = {n}");
        }
    }

    #[test]
    fn weight_space_dims_match_recorded_counts() {
        assert_eq!(weight_space_dim(6, 0, 4), Int::from(5));
        assert_eq!(weight_space_dim(4, 4, 4), Int::from(1));
        assert_eq!(weight_space_dim(8, 8, 4), Int::from(8));
        assert_eq!(weight_space_dim(6, 1, 4), Int::zero(), "parity mismatch");
        assert_eq!(weight_space_dim(6, 26, 4), Int::zero(), "out of range");
    }

    #[test]
    fn weight_space_dim_agrees_with_exterior_basis_slices() {
        use crate::sl2rep::basis::ExteriorBasis;
        for n in [5u32, 6, 8] {
            let basis = ExteriorBasis::new(n);
            for w in basis.weights() {
                assert_eq!(
                    weight_space_dim(n, w, 4),
                    Int::from(basis.dim_weight(w) as u64),
                    "weight {w} slice of the fourth exterior power, n = {n}"
                );
            }
        }
    }

    #[test]
    fn weight_space_dim_handles_general_k() {
        // k = 1 recovers single weights of V(n).
        assert_eq!(weight_space_dim(4, 2, 1), Int::one());
        assert_eq!(weight_space_dim(4, 3, 1), Int::zero());
        // k = 2 at weight 0 pairs v_w with v_{-w}.
        assert_eq!(weight_space_dim(4, 0, 2), Int::from(2));
        assert_eq!(weight_space_dim(5, 0, 2), Int::from(3));
        // Top wedge is one-dimensional.
        assert_eq!(weight_space_dim(3, 0, 4), Int::one());
    }

    #[test]
    fn power_sum_expansion_matches_direct_multiplication() {
        assert_eq!(
            power_sum_expansion(1, 2),
            vec![Int::from(1), Int::from(2), Int::from(1)]
        );
        for (n, t) in [(4u32, 4u32), (3, 5), (2, 6), (6, 3)] {
            let ones = UniPoly::from_coeffs(vec![rat(1); n as usize + 1]);
            let mut direct = UniPoly::one();
            for _ in 0..t {
                direct = direct.mul(&ones);
            }
            let formula = power_sum_expansion(n, t);
            assert_eq!(formula.len(), (n * t + 1) as usize);
            for (l, c) in formula.iter().enumerate() {
                assert_eq!(
                    &direct.coeff(l).to_integer(),
                    c,
                    "coefficient of x^{l} in the {t}-th power, n = {n}"
                );
            }
            assert_eq!(formula.last().unwrap(), &Int::one(), "top coefficient");
        }
        // The central coefficient for n = 4, t = 4 is 85; two steps off
        // center it is 68.
        let e = power_sum_expansion(4, 4);
        assert_eq!(e[8], Int::from(85));
        assert_eq!(e[10], Int::from(68));
    }

    #[test]
    fn closed_form_dimensions_match_recorded_values() {
        // Partitions into four distinct parts at most 6, by hand:
        // 15 = 6+5+3+1 = 6+5+4+0 = 6+4+3+2 and 16 = 6+5+4+1 = 6+5+3+2.
        assert_eq!(dim_weight_n(6), Int::from(3));
        assert_eq!(dim_weight_n_plus_2(6), Int::from(2));
        assert_eq!(dim_weight_n(8), Int::from(8));
        assert_eq!(dim_weight_n_plus_2(8), Int::from(6));
        assert_eq!(dim_weight_n(0), Int::zero());
    }

    #[test]
    fn closed_form_dimensions_match_brute_force() {
        for n in (0..=60u32).step_by(2) {
            assert_eq!(
                dim_weight_n(n),
                count_partitions_4distinct_brute(5 * n / 2, n),
                "weight-n dimension at n = {n}"
            );
            assert_eq!(
                dim_weight_n_plus_2(n),
                count_partitions_4distinct_brute((5 * n + 2) / 2, n),
                "weight-(n+2) dimension at n = {n}"
            );
        }
    }

    #[test]
    fn multiplicities_match_recorded_values() {
        for (n, m) in [(4u32, 1i64), (6, 1), (8, 2), (10, 2), (24, 17), (46, 51)] {
            assert_eq!(multiplicity(n), Int::from(m), "multiplicity at n = {n}");
        }
        for n in [1u32, 3, 7, 101] {
            assert_eq!(multiplicity(n), Int::zero(), "odd n has multiplicity 0");
        }
    }

    #[test]
    fn multiplicity_routes_agree() {
        for n in 0..=100u32 {
            let closed = multiplicity(n);
            assert_eq!(closed, multiplicity_brute(n), "brute force at n = {n}");
            if n % 2 == 0 {
                assert_eq!(
                    closed,
                    dim_weight_n(n) - dim_weight_n_plus_2(n),
                    "dimension gap at n = {n}"
                );
            }
        }
        // The generating polynomial route is costlier; sample it.
        for n in (0..=60u32).step_by(4) {
            assert_eq!(
                multiplicity(n),
                weight_space_dim(n, n as i32, 4) - weight_space_dim(n, n as i32 + 2, 4),
                "generating polynomial route at n = {n}"
            );
        }
    }

    #[test]
    fn residue_polynomials_collapse_the_closed_forms() {
        let [top, next, diff] = residue_polynomials(0);
        let ints = |v: [i64; 4]| v.map(Int::from);
        assert_eq!(top, ints([23, -42, 48, 0]));
        assert_eq!(next, ints([23, -72, -48, 0]));
        assert_eq!(diff, ints([0, 30, 96, 0]));
        for r in (0..24u32).step_by(2) {
            let [top, next, _] = residue_polynomials(r);
            for q in 0..6i128 {
                let n = r as i128 + 24 * q;
                let eval = |c: &[Int; 4]| {
                    (Int::from(n * n * n) * &c[0]
                        + Int::from(n * n) * &c[1]
                        + Int::from(n) * &c[2])
                        + &c[3]
                };
                assert_eq!(eval(&top), Int::from(scaled_dim_weight_n(n)));
                assert_eq!(eval(&next), Int::from(scaled_dim_weight_n_plus_2(n)));
            }
        }
    }
}
