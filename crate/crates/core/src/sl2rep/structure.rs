//! Invariant quaternary algebra structures on V(n).
//!
//! Projecting the fourth exterior power onto a summand isomorphic to V(n)
//! defines an alternating four-linear product on V(n): the product of four
//! basis vectors is the projection of their wedge. The table stores one
//! coefficient per quadruple of weight between -n and n; quadruples of
//! larger weight project to zero because V(n) has no such weight.
//!
//! Construction: invert the change of basis matrix C of the weight vector
//! basis and read the row block of C^-1 belonging to the chosen copy of
//! V(n). The column of a quadruple of weight w meets the single row of
//! weight w inside the block; the other rows vanish (asserted).
//!
//! Each table carries a rational and an integral form. Rescaling the V(n)
//! basis by a factor a multiplies the coefficients by a^3, so choosing
//! a^3 = lcm of the denominators clears the table to integers while
//! keeping an isomorphic structure.

use std::collections::HashMap;
use std::fmt::Write as _;

use num::{Integer, One, Zero};

use crate::exactla::{Int, Rational};

use super::basis::{vn_index, ExteriorBasis, Quadruple};
use super::decompose::WeightVectorBasis;

/// Failure to build a structure table.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum StructureError {
    #[error(
        "V({n}) occurs with multiplicity {mult} in its fourth exterior power; \
         copy {copy} does not exist"
    )]
    CopyOutOfRange { n: u32, mult: usize, copy: usize },
}

/// Failure to parse the text form of a structure table.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum StructureParseError {
    #[error("line {line}: cannot parse `{text}`")]
    BadLine { line: usize, text: String },
    #[error("missing `{0} = ...` header line")]
    MissingHeader(&'static str),
    #[error("scale must be nonzero")]
    ZeroScale,
    #[error("quadruple {0} is repeated")]
    DuplicateQuad(Quadruple),
    #[error("quadruple {0} is invalid for n = {1}")]
    BadQuad(Quadruple, u32),
    #[error("expected {expect} entries for n = {n}, found {found}")]
    WrongCount { n: u32, expect: usize, found: usize },
}

/// One alternating quaternary product on V(n), given by the coefficients
/// of the projection of the fourth exterior power onto a copy of V(n).
///
/// Entries are listed for every quadruple of weight in [-n, n], in the
/// standard quadruple order. The integral form equals the rational form
/// times `scale`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureTable {
    n: u32,
    copy: Option<usize>,
    quads: Vec<Quadruple>,
    rational: Vec<Rational>,
    integral: Vec<Int>,
    scale: Int,
}

/// Build the table projecting onto the (copy)-th summand isomorphic to
/// V(n), copies numbered in the order of the canonical integral basis of
/// highest weight vectors.
pub fn structure_table(n: u32, copy: usize) -> Result<StructureTable, StructureError> {
    let wvb = WeightVectorBasis::new(n);
    let copies: Vec<usize> = (0..wvb.summands().len())
        .filter(|&s| wvb.summands()[s].weight == n as i32)
        .collect();
    if copy >= copies.len() {
        return Err(StructureError::CopyOutOfRange {
            n,
            mult: copies.len(),
            copy,
        });
    }
    let c_inv = wvb.inverse_change_of_basis();
    let offset = wvb.block_offset(copies[copy]);
    let basis = wvb.basis();
    let ni = n as i32;

    let mut quads = Vec::new();
    let mut rational = Vec::new();
    for (col, q) in basis.quads().iter().enumerate() {
        let w = q.weight();
        if w.abs() > ni {
            continue;
        }
        let row = vn_index(n, w);
        for k in 0..=n as usize {
            assert!(
                k == row || c_inv.at(offset + k, col).is_zero(),
                "projection block must vanish off the matching weight row"
            );
        }
        quads.push(*q);
        rational.push(c_inv.at(offset + row, col).clone());
    }

    let mut scale = Int::one();
    for x in &rational {
        scale = scale.lcm(x.denom());
    }
    let integral: Vec<Int> = rational
        .iter()
        .map(|x| x.numer() * (&scale / x.denom()))
        .collect();

    Ok(StructureTable {
        n,
        copy: Some(copy),
        quads,
        rational,
        integral,
        scale,
    })
}

impl StructureTable {
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Copy index of the projection target; None for linear combinations.
    pub fn copy(&self) -> Option<usize> {
        self.copy
    }

    /// The lcm of the rational denominators (1 for linear combinations).
    pub fn scale(&self) -> &Int {
        &self.scale
    }

    /// Quadruples of weight in [-n, n], in standard order.
    pub fn quads(&self) -> &[Quadruple] {
        &self.quads
    }

    pub fn rational(&self) -> &[Rational] {
        &self.rational
    }

    pub fn integral(&self) -> &[Int] {
        &self.integral
    }

    pub fn len(&self) -> usize {
        self.quads.len()
    }

    pub fn is_empty(&self) -> bool {
        self.quads.is_empty()
    }

    /// The linear combination f + c g of the integral forms: for c = a/b
    /// in lowest terms the entries are b f + a g, divided by their common
    /// integer factor. This matches specializing the one-parameter family
    /// built from the integral tables at x = c.
    pub fn combine(f: &StructureTable, g: &StructureTable, c: &Rational) -> StructureTable {
        assert_eq!(f.n, g.n, "structures must live on the same V(n)");
        assert_eq!(f.quads, g.quads, "structures must share the quadruple list");
        let mut integral: Vec<Int> = f
            .integral
            .iter()
            .zip(&g.integral)
            .map(|(x, y)| c.denom() * x + c.numer() * y)
            .collect();
        let mut common = Int::zero();
        for x in &integral {
            common = common.gcd(x);
        }
        if !common.is_zero() && !common.is_one() {
            for x in &mut integral {
                *x = &*x / &common;
            }
        }
        let rational = integral.iter().map(|x| Rational::from(x.clone())).collect();
        StructureTable {
            n: f.n,
            copy: None,
            quads: f.quads.clone(),
            rational,
            integral,
            scale: Int::one(),
        }
    }

    /// Line-oriented text form: header lines for n, copy, and scale, then
    /// one `[p,q,r,s] = c` line per entry (integral form, standard order).
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "n = {}", self.n).unwrap();
        if let Some(c) = self.copy {
            writeln!(out, "copy = {c}").unwrap();
        }
        writeln!(out, "scale = {}", self.scale).unwrap();
        for (q, x) in self.quads.iter().zip(&self.integral) {
            writeln!(out, "{q} = {x}").unwrap();
        }
        out
    }

    /// Parse the text form. Entries may come in any order but must cover
    /// every quadruple of weight in [-n, n] exactly once; they are stored
    /// in standard order.
    pub fn parse(text: &str) -> Result<StructureTable, StructureParseError> {
        let mut n: Option<u32> = None;
        let mut copy: Option<usize> = None;
        let mut scale: Option<Int> = None;
        let mut entries: Vec<(Quadruple, Int)> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = || StructureParseError::BadLine {
                line: i + 1,
                text: raw.to_string(),
            };
            let (lhs, rhs) = line.split_once('=').ok_or_else(bad)?;
            let (lhs, rhs) = (lhs.trim(), rhs.trim());
            match lhs {
                "n" => n = Some(rhs.parse().map_err(|_| bad())?),
                "copy" => copy = Some(rhs.parse().map_err(|_| bad())?),
                "scale" => scale = Some(rhs.parse().map_err(|_| bad())?),
                _ => {
                    let q = parse_quad(lhs).ok_or_else(bad)?;
                    entries.push((q, rhs.parse().map_err(|_| bad())?));
                }
            }
        }
        let n = n.ok_or(StructureParseError::MissingHeader("n"))?;
        let scale = scale.ok_or(StructureParseError::MissingHeader("scale"))?;
        if scale.is_zero() {
            return Err(StructureParseError::ZeroScale);
        }

        let basis = ExteriorBasis::new(n);
        let ni = n as i32;
        let mut map = HashMap::new();
        for (q, x) in entries {
            if basis.index_of(&q).is_none() || q.weight().abs() > ni {
                return Err(StructureParseError::BadQuad(q, n));
            }
            if map.insert(q, x).is_some() {
                return Err(StructureParseError::DuplicateQuad(q));
            }
        }
        let quads: Vec<Quadruple> = basis
            .quads()
            .iter()
            .copied()
            .filter(|q| q.weight().abs() <= ni)
            .collect();
        if map.len() != quads.len() {
            return Err(StructureParseError::WrongCount {
                n,
                expect: quads.len(),
                found: map.len(),
            });
        }
        let integral: Vec<Int> = quads.iter().map(|q| map.remove(q).unwrap()).collect();
        let rational: Vec<Rational> = integral
            .iter()
            .map(|x| Rational::new(x.clone(), scale.clone()))
            .collect();
        Ok(StructureTable {
            n,
            copy,
            quads,
            rational,
            integral,
            scale,
        })
    }
}

/// Parse `[p,q,r,s]` with strictly decreasing integer components.
fn parse_quad(s: &str) -> Option<Quadruple> {
    let inner = s.strip_prefix('[')?.strip_suffix(']')?;
    let parts: Vec<i32> = inner
        .split(',')
        .map(|p| p.trim().parse().ok())
        .collect::<Option<_>>()?;
    let arr: [i32; 4] = parts.try_into().ok()?;
    arr.windows(2)
        .all(|w| w[0] > w[1])
        .then_some(Quadruple(arr))
}
