//! Univariate polynomials over the rationals.
//!
//! Coefficients are stored ascending with no trailing zeros, so the zero
//! polynomial is the empty coefficient vector and `degree()` is `None` for
//! it. Division is exact Euclidean division; gcds are normalized monic.

use std::fmt;

use num::{One, Signed, Zero};

use super::{ExactLaError, Rational};

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn x() -> Self {
        UniPoly {
            coeffs: vec![Rational::zero(), Rational::one()],
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// Ascending coefficients; trailing zeros are trimmed.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        let mut p = UniPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_i64_coeffs(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| super::rat(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + other.coeff(k));
        }
        UniPoly::from_coeffs(out)
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) - other.coeff(k));
        }
        UniPoly::from_coeffs(out)
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(out)
    }

    pub fn scale(&self, c: &Rational) -> UniPoly {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Shift by x^k (multiply by the monomial x^k).
    pub fn shift(&self, k: usize) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs }
    }

    /// Euclidean division: self = q * div + r with deg r < deg div.
    pub fn divmod(&self, div: &UniPoly) -> Result<(UniPoly, UniPoly), ExactLaError> {
        if div.is_zero() {
            return Err(ExactLaError::PolyDivByZero);
        }
        let dd = div.coeffs.len() - 1;
        let lead = div.leading().unwrap().clone();
        let mut rem = self.clone();
        let mut q = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd)];
        while !rem.is_zero() && rem.coeffs.len() - 1 >= dd {
            let k = rem.coeffs.len() - 1 - dd;
            let c = rem.leading().unwrap() / &lead;
            q[k] = c.clone();
            // rem -= c * x^k * div
            for (j, b) in div.coeffs.iter().enumerate() {
                let v = rem.coeff(k + j) - &c * b;
                rem.coeffs[k + j] = v;
            }
            rem.trim();
        }
        Ok((UniPoly::from_coeffs(q), rem))
    }

    /// Monic gcd; gcd(0, 0) = 0.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divmod(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Scale to leading coefficient 1 (zero stays zero).
    pub fn monic(&self) -> UniPoly {
        match self.leading() {
            None => UniPoly::zero(),
            Some(l) => {
                let inv = Rational::one() / l;
                self.scale(&inv)
            }
        }
    }

    /// Positive rational c such that self / c has coprime integer
    /// coefficients; zero polynomial gives 1. Dividing by the content is a
    /// unit operation used to keep elimination coefficients small.
    pub fn content(&self) -> Rational {
        use num::Integer;
        if self.is_zero() {
            return Rational::one();
        }
        let mut den = super::Int::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let mut num = super::Int::zero();
        for c in &self.coeffs {
            num = num.gcd(&(c.numer() * (&den / c.denom())));
        }
        Rational::new(num, den)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}

impl fmt::Display for UniPoly {
    /// Descending powers, e.g. `x^2 - 5/4*x + 1`; zero prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_mag = mag.is_one();
            if k == 0 || !unit_mag {
                write!(f, "{mag}")?;
            }
            if k > 0 {
                if !unit_mag {
                    write!(f, "*")?;
                }
                write!(f, "x")?;
                if k > 1 {
                    write!(f, "^{k}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::super::{frac, rat};
    use super::*;

    #[test]
    fn zero_degree_is_none() {
        assert_eq!(UniPoly::zero().degree(), None);
        assert_eq!(UniPoly::one().degree(), Some(0));
        assert_eq!(UniPoly::x().degree(), Some(1));
    }

    #[test]
    fn mul_expands_difference_of_squares() {
        let a = UniPoly::from_i64_coeffs(&[1, 1]); // x + 1
        let b = UniPoly::from_i64_coeffs(&[-1, 1]); // x - 1
        assert_eq!(a.mul(&b), UniPoly::from_i64_coeffs(&[-1, 0, 1]));
    }

    #[test]
    fn divmod_reconstructs() {
        let a = UniPoly::from_i64_coeffs(&[0, 0, 0, 1]); // x^3
        let b = UniPoly::from_i64_coeffs(&[-2, 1]); // x - 2
        let (q, r) = a.divmod(&b).unwrap();
        assert_eq!(q, UniPoly::from_i64_coeffs(&[4, 2, 1]));
        assert_eq!(r, UniPoly::from_i64_coeffs(&[8]));
        assert_eq!(b.mul(&q).add(&r), a);
    }

    #[test]
    fn divide_by_zero_rejected() {
        assert_eq!(
            UniPoly::one().divmod(&UniPoly::zero()),
            Err(ExactLaError::PolyDivByZero)
        );
    }

    #[test]
    fn gcd_is_monic() {
        let a = UniPoly::from_i64_coeffs(&[-1, 0, 1]); // x^2 - 1
        let b = UniPoly::from_i64_coeffs(&[-2, 2]); // 2x - 2
        assert_eq!(a.gcd(&b), UniPoly::from_i64_coeffs(&[-1, 1]));
        assert_eq!(UniPoly::zero().gcd(&UniPoly::zero()), UniPoly::zero());
    }

    #[test]
    fn content_is_positive_and_primitive() {
        let p = UniPoly::from_coeffs(vec![frac(4, 3), rat(-2)]);
        let c = p.content();
        assert_eq!(c, frac(2, 3));
        let prim = p.scale(&(Rational::one() / &c));
        assert_eq!(prim, UniPoly::from_i64_coeffs(&[2, -3]));
    }

    #[test]
    fn display_formats() {
        let p = UniPoly::from_coeffs(vec![rat(1), frac(-5, 4), rat(1)]);
        assert_eq!(p.to_string(), "x^2 - 5/4*x + 1");
        assert_eq!(UniPoly::zero().to_string(), "0");
        assert_eq!(UniPoly::from_coeffs(vec![frac(-5, 4), rat(1)]).to_string(), "x - 5/4");
    }
}
