//! Arithmetic of the three two-dimensional unital algebras — the
//! "generalized number planes" `a + b·e` with `e² = κ ∈ {−1, +1, 0}` —
//! over two interchangeable scalar backends (exact rational and `f64`).

mod duplex;
pub(crate) mod scalar;

pub use duplex::Duplex;
pub use scalar::Scalar;

use std::fmt;

/// Which plane algebra a value lives in, identified by the square `κ`
/// of the imaginary unit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AlgebraKind {
    /// κ = −1, the complex numbers; unit quadric is the circle.
    Complex,
    /// κ = +1, the hyperbolic (split-complex) numbers; unit quadrics are
    /// the two conjugate hyperbolas.
    Hyperbolic,
    /// κ = 0, the dual numbers; unit quadric is a pair of parallel lines.
    Dual,
}

impl AlgebraKind {
    pub const ALL: [AlgebraKind; 3] =
        [AlgebraKind::Complex, AlgebraKind::Hyperbolic, AlgebraKind::Dual];

    /// Square of the imaginary unit.
    pub fn kappa(self) -> i64 {
        match self {
            AlgebraKind::Complex => -1,
            AlgebraKind::Hyperbolic => 1,
            AlgebraKind::Dual => 0,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            AlgebraKind::Complex => "complex",
            AlgebraKind::Hyperbolic => "hyperbolic",
            AlgebraKind::Dual => "dual",
        }
    }

    pub fn parse(s: &str) -> Option<AlgebraKind> {
        match s {
            "complex" => Some(AlgebraKind::Complex),
            "hyperbolic" => Some(AlgebraKind::Hyperbolic),
            "dual" => Some(AlgebraKind::Dual),
            _ => None,
        }
    }
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A sign, used both for the quadric branch σ (the quadric is
/// `{z : |z|² = σ}`) and for parameterization sheets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_i64(v: i64) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:+}", self.as_i64())
    }
}

/// Tolerance context threaded through every geometric predicate.
///
/// The float backend compares against `eps` relative to a caller-chosen
/// scale; the exact backend ignores it and compares exactly.
#[derive(Debug, Clone, Copy)]
pub struct Ctx {
    pub eps: f64,
}

impl Ctx {
    pub const DEFAULT_EPS: f64 = 1e-9;

    pub fn new(eps: f64) -> Ctx {
        Ctx { eps }
    }
}

impl Default for Ctx {
    fn default() -> Ctx {
        Ctx { eps: Ctx::DEFAULT_EPS }
    }
}
