//! Diagram terms of the Temperley-Lieb category and its oriented-endpoint
//! extension.
//!
//! Terms are syntax trees over the elementary generators: identities, cups,
//! caps, the two crossings, and stub vertices (interior strand endpoints
//! with a horizontal tangent and an arrow). Objects are nonnegative strand
//! counts; a term of grade `n -> m` reads bottom to top.
//!
//! Three evaluation routes are provided and cross-checked against each
//! other:
//!
//! - [`kauffman_normalize`] expands crossings and reduces a vertex-free term
//!   to a linear combination of planar matchings, exchanging each closed
//!   loop for `q + q^-1`;
//! - [`eval_closed`] evaluates a fully closed diagram by literal rewriting:
//!   crossing expansion, then per-strand values from arrow consistency and
//!   the total tangent rotation along the arrow (`sqrt(q)` per half turn);
//! - [`tl_to_matrix`] applies the state functor, sending a term to its
//!   exact sparse matrix over boundary orientation states.

mod functor;
mod normalize;
mod wiring;

pub use functor::{tl_matrix_oracle, tl_to_matrix, TLMatrix};
pub use normalize::{kauffman_normalize, Matching, MatchingSum};
pub use wiring::eval_closed;

use crate::scalar::Scalar;
use crate::{Error, Result};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::fmt;

/// Direction in which a stub's strand leaves its vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Side {
    East,
    West,
}

/// Arrow at a vertex: into the vertex or out of it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Orient {
    In,
    Out,
}

impl Orient {
    pub fn flip(self) -> Orient {
        match self {
            Orient::In => Orient::Out,
            Orient::Out => Orient::In,
        }
    }
}

/// Whether a stub starts a strand (grade `0 -> 1`) or ends one (`1 -> 0`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum StubKind {
    Start,
    End,
}

/// A diagram term. `Stack(bottom, top)` composes vertically; `Tensor` places
/// its left operand to the left.
#[derive(Clone, Debug, PartialEq)]
pub enum TLTerm {
    Id(usize),
    Cup,
    Cap,
    CrossPos,
    CrossNeg,
    Stub {
        side: Side,
        orient: Orient,
        kind: StubKind,
    },
    Tensor(Box<TLTerm>, Box<TLTerm>),
    Stack(Box<TLTerm>, Box<TLTerm>),
    ScalarMul(Scalar, Box<TLTerm>),
    Sum(Box<TLTerm>, Box<TLTerm>),
}

impl TLTerm {
    /// Grade `(n, m)` of a well-formed term; rejects stacking or summing
    /// terms whose grades do not line up.
    pub fn grade(&self) -> Result<(usize, usize)> {
        match self {
            TLTerm::Id(n) => Ok((*n, *n)),
            TLTerm::Cup => Ok((0, 2)),
            TLTerm::Cap => Ok((2, 0)),
            TLTerm::CrossPos | TLTerm::CrossNeg => Ok((2, 2)),
            TLTerm::Stub { kind, .. } => Ok(match kind {
                StubKind::Start => (0, 1),
                StubKind::End => (1, 0),
            }),
            TLTerm::Tensor(a, b) => {
                let (n1, m1) = a.grade()?;
                let (n2, m2) = b.grade()?;
                Ok((n1 + n2, m1 + m2))
            }
            TLTerm::Stack(bottom, top) => {
                let (n1, m1) = bottom.grade()?;
                let (n2, m2) = top.grade()?;
                if m1 != n2 {
                    return Err(Error::grade(format!(
                        "stack joins grade {n1}->{m1} under grade {n2}->{m2}"
                    )));
                }
                Ok((n1, m2))
            }
            TLTerm::ScalarMul(_, t) => t.grade(),
            TLTerm::Sum(a, b) => {
                let ga = a.grade()?;
                let gb = b.grade()?;
                if ga != gb {
                    return Err(Error::grade(format!(
                        "sum of grade {}->{} with grade {}->{}",
                        ga.0, ga.1, gb.0, gb.1
                    )));
                }
                Ok(ga)
            }
        }
    }

    /// Validated vertical composition, `self` at the bottom.
    pub fn stack(self, top: TLTerm) -> Result<TLTerm> {
        let t = TLTerm::Stack(Box::new(self), Box::new(top));
        t.grade()?;
        Ok(t)
    }

    pub fn tensor(self, right: TLTerm) -> TLTerm {
        TLTerm::Tensor(Box::new(self), Box::new(right))
    }

    /// Validated sum; both operands must share a grade.
    pub fn sum(self, other: TLTerm) -> Result<TLTerm> {
        let t = TLTerm::Sum(Box::new(self), Box::new(other));
        t.grade()?;
        Ok(t)
    }

    pub fn scaled(self, c: Scalar) -> TLTerm {
        TLTerm::ScalarMul(c, Box::new(self))
    }

    pub fn stub(side: Side, orient: Orient, kind: StubKind) -> TLTerm {
        TLTerm::Stub { side, orient, kind }
    }

    pub fn contains_stub(&self) -> bool {
        match self {
            TLTerm::Stub { .. } => true,
            TLTerm::Tensor(a, b) | TLTerm::Stack(a, b) | TLTerm::Sum(a, b) => {
                a.contains_stub() || b.contains_stub()
            }
            TLTerm::ScalarMul(_, t) => t.contains_stub(),
            _ => false,
        }
    }

    /// Places `piece` at strand position `pos` inside a row of width
    /// `width` (the grade the row acts on), padding with identities.
    pub fn row(width: usize, pos: usize, piece: TLTerm) -> Result<TLTerm> {
        let (pn, _) = piece.grade()?;
        if pos + pn > width {
            return Err(Error::grade(format!(
                "piece of width {pn} at position {pos} exceeds row width {width}"
            )));
        }
        let right = width - pos - pn;
        let mut t = piece;
        if pos > 0 {
            t = TLTerm::Id(pos).tensor(t);
        }
        if right > 0 {
            t = t.tensor(TLTerm::Id(right));
        }
        Ok(t)
    }
}

/// Decides equality of two vertex-free terms via the matching normal form.
pub fn tl_equal(a: &TLTerm, b: &TLTerm) -> Result<bool> {
    let ga = a.grade()?;
    let gb = b.grade()?;
    if ga != gb {
        return Err(Error::grade(format!(
            "comparing grade {}->{} with grade {}->{}",
            ga.0, ga.1, gb.0, gb.1
        )));
    }
    Ok(kauffman_normalize(a)? == kauffman_normalize(b)?)
}

/// Deterministic pseudo-random vertex-free term of grade `n -> m` with `c`
/// crossings. The same seed always rebuilds the identical tree. Cups and
/// caps are inserted only as needed to reach grade `m` (and to make room
/// for crossings), so `tl_random(n, n, 0, _)` is `Id(n)`.
pub fn tl_random(n: usize, m: usize, c: usize, seed: u64) -> Result<TLTerm> {
    if (n + m) % 2 != 0 {
        return Err(Error::OddBoundary(n, m));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x746c_7261_6e64);
    let gmax = n.max(m).max(2) + 2;
    let mut rows: Vec<TLTerm> = Vec::new();
    let mut g = n;
    let mut left = c;
    while left > 0 {
        if g < 2 {
            let pos = rng.gen_range(0..=g);
            rows.push(TLTerm::row(g, pos, TLTerm::Cup)?);
            g += 2;
            continue;
        }
        // Mostly crossings, with an occasional widening cup.
        if g < gmax && rng.gen_range(0..4u8) == 0 {
            let pos = rng.gen_range(0..=g);
            rows.push(TLTerm::row(g, pos, TLTerm::Cup)?);
            g += 2;
        } else {
            let pos = rng.gen_range(0..=g - 2);
            let x = if rng.gen_range(0..2u8) == 0 {
                TLTerm::CrossPos
            } else {
                TLTerm::CrossNeg
            };
            rows.push(TLTerm::row(g, pos, x)?);
            left -= 1;
        }
    }
    while g > m {
        let pos = rng.gen_range(0..=g - 2);
        rows.push(TLTerm::row(g, pos, TLTerm::Cap)?);
        g -= 2;
    }
    while g < m {
        let pos = rng.gen_range(0..=g);
        rows.push(TLTerm::row(g, pos, TLTerm::Cup)?);
        g += 2;
    }
    let mut term = TLTerm::Id(n);
    for row in rows {
        term = term.stack(row)?;
    }
    Ok(term)
}

/// An orientation state on a diagram boundary of the given width. Bit 0 of
/// a strand means upward flow. Reading relative to the diagram interior:
/// bit 0 at a bottom point is an arrow into the diagram, and the same bit
/// at a matched top point lets the flow continue into whatever is stacked
/// above. The most significant bit is the leftmost strand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct OrientedState {
    pub bits: usize,
    pub width: usize,
}

impl OrientedState {
    pub fn new(bits: usize, width: usize) -> Self {
        debug_assert!(width >= usize::BITS as usize || bits < (1 << width));
        OrientedState { bits, width }
    }

    /// Bit for strand `j`, counted from the left.
    pub fn strand(&self, j: usize) -> usize {
        (self.bits >> (self.width - 1 - j)) & 1
    }

    /// Number of upward-flowing strands.
    pub fn ups(&self) -> usize {
        self.width - self.bits.count_ones() as usize
    }
}

impl fmt::Display for OrientedState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for j in 0..self.width {
            write!(f, "{}", if self.strand(j) == 0 { 'u' } else { 'd' })?;
        }
        Ok(())
    }
}

impl fmt::Display for TLTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TLTerm::Id(n) => write!(f, "id({n})"),
            TLTerm::Cup => write!(f, "cup"),
            TLTerm::Cap => write!(f, "cap"),
            TLTerm::CrossPos => write!(f, "xp"),
            TLTerm::CrossNeg => write!(f, "xn"),
            TLTerm::Stub { side, orient, kind } => write!(
                f,
                "stub({}, {}, {})",
                match side {
                    Side::East => "e",
                    Side::West => "w",
                },
                match orient {
                    Orient::In => "in",
                    Orient::Out => "out",
                },
                match kind {
                    StubKind::Start => "start",
                    StubKind::End => "end",
                }
            ),
            TLTerm::Tensor(a, b) => {
                let wrap = |t: &TLTerm| match t {
                    TLTerm::Stack(..) | TLTerm::Sum(..) => format!("({t})"),
                    _ => t.to_string(),
                };
                write!(f, "{} @ {}", wrap(a), wrap(b))
            }
            TLTerm::Stack(a, b) => {
                let wrap = |t: &TLTerm| match t {
                    TLTerm::Sum(..) => format!("({t})"),
                    _ => t.to_string(),
                };
                write!(f, "{} ; {}", wrap(a), wrap(b))
            }
            TLTerm::ScalarMul(c, t) => {
                let cs = if c.needs_parens_in_product() {
                    format!("({c})")
                } else {
                    c.to_string()
                };
                match &**t {
                    TLTerm::Id(..)
                    | TLTerm::Cup
                    | TLTerm::Cap
                    | TLTerm::CrossPos
                    | TLTerm::CrossNeg
                    | TLTerm::Stub { .. } => write!(f, "{cs} * {t}"),
                    _ => write!(f, "{cs} * ({t})"),
                }
            }
            TLTerm::Sum(a, b) => write!(f, "{a} + {b}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grades_of_generators() {
        assert_eq!(TLTerm::Cup.grade().unwrap(), (0, 2));
        assert_eq!(TLTerm::Cap.grade().unwrap(), (2, 0));
        assert_eq!(
            TLTerm::stub(Side::East, Orient::In, StubKind::End)
                .grade()
                .unwrap(),
            (1, 0)
        );
    }

    #[test]
    fn stack_grade_mismatch_rejected() {
        assert!(TLTerm::Cup.stack(TLTerm::Id(3)).is_err());
        assert!(TLTerm::Cup.sum(TLTerm::Cap).is_err());
    }

    #[test]
    fn random_is_deterministic() {
        let a = tl_random(2, 2, 2, 42).unwrap();
        let b = tl_random(2, 2, 2, 42).unwrap();
        assert_eq!(a, b);
        let c = tl_random(2, 2, 2, 43).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn random_minimal_cases() {
        assert_eq!(tl_random(0, 0, 0, 7).unwrap(), TLTerm::Id(0));
        assert_eq!(tl_random(1, 1, 0, 1).unwrap(), TLTerm::Id(1));
        assert!(tl_random(1, 2, 0, 0).is_err());
    }

    #[test]
    fn random_has_requested_grade() {
        for seed in 0..20 {
            for &(n, m, c) in &[(0usize, 2usize, 1usize), (3, 1, 2), (1, 1, 3), (4, 4, 3)] {
                let t = tl_random(n, m, c, seed).unwrap();
                assert_eq!(t.grade().unwrap(), (n, m));
            }
        }
    }
}
