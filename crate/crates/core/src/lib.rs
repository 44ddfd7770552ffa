//! An exact symbolic engine for planar diagram algebra.
//!
//! The engine implements, over the field of rational functions in `t` with
//! Gaussian-rational coefficients (`q = t^4`):
//!
//! - [`tl`]: the Temperley-Lieb category extended by oriented strand
//!   endpoints, with Kauffman crossing expansion, closed-diagram evaluation
//!   by turning/confetti/cutting rewriting, and a functor to exact sparse
//!   matrices indexed by boundary orientation states;
//! - [`halg`]: a Hopf algebra on words over eight strand-over-pole
//!   generators, its coproduct, counit, antipode and Cartan involution, and
//!   the PBW normal form `f^a k^b e^c` for the quotient algebra;
//! - [`rep`]: the representation obtained by threading `n` parallel strands
//!   in place of the pole, computed both through the coproduct and directly
//!   from diagrams, with cutoff equality testing and intertwiner checks;
//! - [`uq`]: the classical presentation of U_q(sl2) and its embedding into
//!   the quotient algebra, together with the two-dimensional identification;
//! - [`cli`]: expression parsing, JSON report emission, and the named
//!   verification suites behind the `polecat` binary.

pub mod cli;
pub mod halg;
pub mod matrix;
pub mod parse;
pub mod rep;
pub mod rng;
pub mod scalar;
pub mod tl;
pub mod uq;

use thiserror::Error;

/// Errors shared across the engine.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("evaluation at a root of the denominator")]
    EvalAtPole,

    #[error("negative power of a non-invertible element")]
    NotInvertible,

    #[error("grade mismatch: {0}")]
    GradeMismatch(String),

    #[error("diagram has open boundary points (grade {n} -> {m}); a closed diagram is required")]
    OpenBoundary { n: usize, m: usize },

    #[error("crossing-free term required, found a stub vertex")]
    StubNotAllowed,

    #[error("boundary size {0} + {1} is odd; no planar matching exists")]
    OddBoundary(usize, usize),

    #[error("letter {0} is not allowed here; expected one of e, f, k, kp")]
    DisallowedLetter(String),

    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("unknown suite {0:?}")]
    UnknownSuite(String),

    #[error("{0}")]
    Invalid(String),
}

impl Error {
    pub(crate) fn grade(msg: impl Into<String>) -> Self {
        Error::GradeMismatch(msg.into())
    }

    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
