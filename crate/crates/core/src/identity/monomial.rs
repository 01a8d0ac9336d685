//! Multilinear monomials for an alternating quaternary operation.
//!
//! A monomial of degree d places the variables 1..d, each exactly once, into
//! nested applications of a 4-ary bracket. Degree d = 1 + 3k where k is the
//! number of bracket applications, so the degrees with one, two, and three
//! brackets are 4, 7, and 10. Up to the alternating property there is one
//! association type in degrees 4 and 7 and there are two in degree 10:
//!
//! ```text
//! degree 4:   [.,.,.,.]
//! degree 7:   [[.,.,.,.],.,.,.]
//! degree 10:  [[[.,.,.,.],.,.,.],.,.,.]   and   [[.,.,.,.],[.,.,.,.],.,.]
//! ```
//!
//! Because each bracket alternates in its four arguments, permuting the
//! arguments of one application only changes the sign. A monomial therefore
//! has a unique canonical form: every argument group strictly increasing,
//! nested brackets placed in the leftmost slots, and the two inner brackets
//! of the last type ordered so the first contains the smallest variable.
//! Counting canonical monomials gives 1 in degree 4, C(7,4) = 35 in degree
//! 7, and C(10;4,3,3) + C(10;4,4,2)/2 = 4200 + 1575 = 5775 in degree 10.
//!
//! The basis order is part of every serialized coefficient vector and is
//! pinned by [`ORDER_VERSION`]: within one association type, monomials are
//! ordered lexicographically by their argument groups read innermost first;
//! in degree 10 all singly-nested-chain monomials precede all double-bracket
//! monomials. [`straighten`] maps an arbitrary bracketing to its canonical
//! form and sign, which is how permuted and substituted identities are
//! rewritten over the basis.

use std::collections::HashMap;

use thiserror::Error;

/// Version tag for the canonical monomial order; recorded in report headers
/// so serialized coefficient vectors are never read against a different
/// column order.
pub const ORDER_VERSION: &str = "quaternary-monomials-v1";

/// A canonical multilinear monomial. Variables are 1-based. The derived
/// `Ord` (variant order, then field-lexicographic) is exactly the basis
/// order described in the module docs.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Monomial {
    /// `[a,b,c,d]`, degree 4.
    Single { group: [u8; 4] },
    /// `[[a,b,c,d],e,f,g]`, degree 7.
    Nested { inner: [u8; 4], outer: [u8; 3] },
    /// `[[[a,b,c,d],e,f,g],h,i,j]`, degree 10.
    Chain { inner: [u8; 4], middle: [u8; 3], outer: [u8; 3] },
    /// `[[a,b,c,d],[e,f,g,h],i,j]`, degree 10; `left` holds the smallest of
    /// the eight bracketed variables.
    Pair { left: [u8; 4], right: [u8; 4], outer: [u8; 2] },
}

impl Monomial {
    pub fn degree(&self) -> u32 {
        match self {
            Monomial::Single { .. } => 4,
            Monomial::Nested { .. } => 7,
            Monomial::Chain { .. } | Monomial::Pair { .. } => 10,
        }
    }

    /// Rebuild the raw bracketing, relabeling variable v to `perm[v-1]`.
    pub fn permuted_raw(&self, perm: &[u8]) -> RawBracket {
        let v = |x: u8| RawArg::Var(perm[x as usize - 1]);
        match *self {
            Monomial::Single { group: [a, b, c, d] } => RawBracket::new([v(a), v(b), v(c), v(d)]),
            Monomial::Nested { inner: [a, b, c, d], outer: [e, f, g] } => {
                let head = RawBracket::new([v(a), v(b), v(c), v(d)]);
                RawBracket::new([RawArg::nested(head), v(e), v(f), v(g)])
            }
            Monomial::Chain { inner: [a, b, c, d], middle: [e, f, g], outer: [h, i, j] } => {
                let head = RawBracket::new([v(a), v(b), v(c), v(d)]);
                let mid = RawBracket::new([RawArg::nested(head), v(e), v(f), v(g)]);
                RawBracket::new([RawArg::nested(mid), v(h), v(i), v(j)])
            }
            Monomial::Pair { left: [a, b, c, d], right: [e, f, g, h], outer: [i, j] } => {
                let l = RawBracket::new([v(a), v(b), v(c), v(d)]);
                let r = RawBracket::new([v(e), v(f), v(g), v(h)]);
                RawBracket::new([RawArg::nested(l), RawArg::nested(r), v(i), v(j)])
            }
        }
    }

    /// The raw bracketing with variables as stored.
    pub fn to_raw(&self) -> RawBracket {
        let id: Vec<u8> = (1..=self.degree() as u8).collect();
        self.permuted_raw(&id)
    }
}

impl std::fmt::Display for Monomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        fn group(f: &mut std::fmt::Formatter<'_>, vars: &[u8]) -> std::fmt::Result {
            for (k, v) in vars.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "x{v}")?;
            }
            Ok(())
        }
        match self {
            Monomial::Single { group: g } => {
                write!(f, "[")?;
                group(f, g)?;
                write!(f, "]")
            }
            Monomial::Nested { inner, outer } => {
                write!(f, "[[")?;
                group(f, inner)?;
                write!(f, "],")?;
                group(f, outer)?;
                write!(f, "]")
            }
            Monomial::Chain { inner, middle, outer } => {
                write!(f, "[[[")?;
                group(f, inner)?;
                write!(f, "],")?;
                group(f, middle)?;
                write!(f, "],")?;
                group(f, outer)?;
                write!(f, "]")
            }
            Monomial::Pair { left, right, outer } => {
                write!(f, "[[")?;
                group(f, left)?;
                write!(f, "],[")?;
                group(f, right)?;
                write!(f, "],")?;
                group(f, outer)?;
                write!(f, "]")
            }
        }
    }
}

/// Number of canonical monomials in each supported degree.
pub fn basis_len(degree: u32) -> Option<usize> {
    match degree {
        4 => Some(1),
        7 => Some(35),
        10 => Some(5775),
        _ => None,
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
#[error("no monomial basis in degree {0}; supported degrees are 4, 7, 10")]
pub struct UnsupportedDegree(pub u32);

/// The ordered canonical monomial basis of one degree, with index lookup.
pub struct MonomialBasis {
    degree: u32,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl MonomialBasis {
    pub fn new(degree: u32) -> Result<Self, UnsupportedDegree> {
        let expect = basis_len(degree).ok_or(UnsupportedDegree(degree))?;
        let monomials = match degree {
            4 => vec![Monomial::Single { group: [1, 2, 3, 4] }],
            7 => {
                let mut out = Vec::with_capacity(35);
                for inner in combinations4(7) {
                    let outer3 = complement(&inner, 7);
                    out.push(Monomial::Nested { inner, outer: [outer3[0], outer3[1], outer3[2]] });
                }
                out
            }
            10 => {
                let mut out = Vec::with_capacity(5775);
                for inner in combinations4(10) {
                    let rest = complement(&inner, 10);
                    for middle in combinations3(&rest) {
                        let outer3 = without(&rest, &middle);
                        out.push(Monomial::Chain {
                            inner,
                            middle,
                            outer: [outer3[0], outer3[1], outer3[2]],
                        });
                    }
                }
                for left in combinations4(10) {
                    let rest = complement(&left, 10);
                    for right in combinations4_of(&rest) {
                        if left[0] > right[0] {
                            continue;
                        }
                        let outer2 = without(&rest, &right);
                        out.push(Monomial::Pair { left, right, outer: [outer2[0], outer2[1]] });
                    }
                }
                out
            }
            _ => unreachable!("basis_len screened the degree"),
        };
        assert_eq!(monomials.len(), expect, "canonical monomial count in degree {degree}");
        debug_assert!(
            monomials.windows(2).all(|w| w[0] < w[1]),
            "construction order must agree with the derived monomial order"
        );
        let index = monomials.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        Ok(MonomialBasis { degree, monomials, index })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn get(&self, i: usize) -> &Monomial {
        &self.monomials[i]
    }

    /// Position of a canonical monomial in the basis order.
    pub fn index_of(&self, m: &Monomial) -> usize {
        *self.index.get(m).unwrap_or_else(|| panic!("monomial {m} is not canonical for degree {}", self.degree))
    }
}

fn combinations4(n: u8) -> Vec<[u8; 4]> {
    let all: Vec<u8> = (1..=n).collect();
    combinations4_of(&all)
}

fn combinations4_of(set: &[u8]) -> Vec<[u8; 4]> {
    let mut out = Vec::new();
    let n = set.len();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    out.push([set[a], set[b], set[c], set[d]]);
                }
            }
        }
    }
    out
}

fn combinations3(set: &[u8]) -> Vec<[u8; 3]> {
    let mut out = Vec::new();
    let n = set.len();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                out.push([set[a], set[b], set[c]]);
            }
        }
    }
    out
}

fn complement(group: &[u8], n: u8) -> Vec<u8> {
    (1..=n).filter(|v| !group.contains(v)).collect()
}

fn without(set: &[u8], drop: &[u8]) -> Vec<u8> {
    set.iter().copied().filter(|v| !drop.contains(v)).collect()
}

/// One argument slot of a raw bracketing: a plain variable or a nested
/// bracket application.
#[derive(Clone, Debug)]
pub enum RawArg {
    Var(u8),
    Bracket(Box<RawBracket>),
}

impl RawArg {
    pub fn nested(b: RawBracket) -> RawArg {
        RawArg::Bracket(Box::new(b))
    }
}

/// A bracket application whose four arguments are in arbitrary order.
#[derive(Clone, Debug)]
pub struct RawBracket {
    pub args: [RawArg; 4],
}

impl RawBracket {
    pub fn new(args: [RawArg; 4]) -> Self {
        RawBracket { args }
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum MalformedBracketing {
    #[error("bracketing shape is not one of the degree-4, 7, or 10 association types")]
    UnsupportedShape,
    #[error("variables must be exactly 1..=degree, each occurring once")]
    NotMultilinear,
}

/// Result of straightening: the bracketing vanishes by the alternating
/// property, or equals `sign` times a canonical monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Straightened {
    Zero,
    Term { monomial: Monomial, sign: i32 },
}

/// Canonicalized bracket value during straightening. Only these shapes can
/// appear as a (sub)bracket of a supported association type.
#[derive(PartialEq, Eq, PartialOrd, Ord, Clone, Debug)]
enum Shape {
    Leaf([u8; 4]),
    Nested([u8; 4], [u8; 3]),
    Chain([u8; 4], [u8; 3], [u8; 3]),
    Pair([u8; 4], [u8; 4], [u8; 2]),
}

impl Shape {
    fn min_var(&self) -> u8 {
        match self {
            Shape::Leaf(g) => g[0],
            Shape::Nested(inner, outer) => inner[0].min(outer[0]),
            Shape::Chain(inner, middle, outer) => inner[0].min(middle[0]).min(outer[0]),
            Shape::Pair(left, _, outer) => left[0].min(outer[0]),
        }
    }
}

/// Rewrite an arbitrary bracketing as `sign` times the canonical monomial,
/// or as zero when some bracket receives a repeated argument.
///
/// Each bracket's arguments are sorted (nested brackets first, ordered by
/// smallest contained variable, then variables ascending); the sign picks up
/// the parity of every sorting permutation. A repeated argument inside one
/// bracket kills the term. The variables of a nonzero result must be exactly
/// 1..=degree, each once, so the result indexes the multilinear basis.
pub fn straighten(raw: &RawBracket) -> Result<Straightened, MalformedBracketing> {
    match canon(raw)? {
        None => Ok(Straightened::Zero),
        Some((shape, sign)) => {
            let monomial = match shape {
                Shape::Leaf(group) => Monomial::Single { group },
                Shape::Nested(inner, outer) => Monomial::Nested { inner, outer },
                Shape::Chain(inner, middle, outer) => Monomial::Chain { inner, middle, outer },
                Shape::Pair(left, right, outer) => Monomial::Pair { left, right, outer },
            };
            check_multilinear(&monomial)?;
            Ok(Straightened::Term { monomial, sign })
        }
    }
}

fn check_multilinear(m: &Monomial) -> Result<(), MalformedBracketing> {
    let degree = m.degree();
    let mut seen: u16 = 0;
    let mut mark = |vars: &[u8]| -> Result<(), MalformedBracketing> {
        for &v in vars {
            if v == 0 || v as u32 > degree || seen & (1 << v) != 0 {
                return Err(MalformedBracketing::NotMultilinear);
            }
            seen |= 1 << v;
        }
        Ok(())
    };
    match m {
        Monomial::Single { group } => mark(group)?,
        Monomial::Nested { inner, outer } => {
            mark(inner)?;
            mark(outer)?;
        }
        Monomial::Chain { inner, middle, outer } => {
            mark(inner)?;
            mark(middle)?;
            mark(outer)?;
        }
        Monomial::Pair { left, right, outer } => {
            mark(left)?;
            mark(right)?;
            mark(outer)?;
        }
    }
    Ok(())
}

/// Canonicalize one bracket application bottom-up. `None` means the value is
/// zero by the alternating property.
fn canon(raw: &RawBracket) -> Result<Option<(Shape, i32)>, MalformedBracketing> {
    // Canonicalize the arguments. Sort key: brackets before variables,
    // brackets by smallest contained variable, variables by value.
    enum Arg {
        Var(u8),
        Sub(Shape),
    }
    let mut sign = 1i32;
    let mut slots: Vec<Arg> = Vec::with_capacity(4);
    for a in &raw.args {
        match a {
            RawArg::Var(v) => slots.push(Arg::Var(*v)),
            RawArg::Bracket(b) => match canon(b)? {
                None => return Ok(None),
                Some((shape, s)) => {
                    sign *= s;
                    slots.push(Arg::Sub(shape));
                }
            },
        }
    }

    fn key(a: &Arg) -> (u8, u8) {
        match a {
            Arg::Sub(shape) => (0, shape.min_var()),
            Arg::Var(v) => (1, *v),
        }
    }

    // Insertion sort on four slots, tracking parity.
    for i in 1..4 {
        let mut j = i;
        while j > 0 && key(&slots[j]) < key(&slots[j - 1]) {
            slots.swap(j, j - 1);
            sign = -sign;
            j -= 1;
        }
    }
    // Equal arguments make the bracket vanish. Equal keys cannot occur
    // between a variable and a bracket; equal bracket keys are compared
    // structurally (equal structures denote equal values).
    for w in slots.windows(2) {
        match (&w[0], &w[1]) {
            (Arg::Var(a), Arg::Var(b)) if a == b => return Ok(None),
            (Arg::Sub(a), Arg::Sub(b)) if a == b => return Ok(None),
            _ => {}
        }
    }

    // The slot sort above also sorted this bracket's plain variables, so
    // every group read off below is strictly increasing.
    let shape = match &slots[..] {
        [Arg::Var(a), Arg::Var(b), Arg::Var(c), Arg::Var(d)] => Shape::Leaf([*a, *b, *c, *d]),
        [Arg::Sub(Shape::Leaf(g)), Arg::Var(a), Arg::Var(b), Arg::Var(c)] => Shape::Nested(*g, [*a, *b, *c]),
        [Arg::Sub(Shape::Nested(inner, mid)), Arg::Var(a), Arg::Var(b), Arg::Var(c)] => {
            Shape::Chain(*inner, *mid, [*a, *b, *c])
        }
        [Arg::Sub(Shape::Leaf(l)), Arg::Sub(Shape::Leaf(r)), Arg::Var(a), Arg::Var(b)] => {
            Shape::Pair(*l, *r, [*a, *b])
        }
        _ => return Err(MalformedBracketing::UnsupportedShape),
    };
    Ok(Some((shape, sign)))
}
