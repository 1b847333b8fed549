//! Reversion calculus on the unit quadrics of the three plane algebras.
//!
//! A *reversion* through a point P sends a quadric point A to the second
//! intersection of the line AP with the quadric. Over the complex,
//! hyperbolic (split-complex) and dual numbers these maps are Möbius
//! transformations carried by traceless 2×2 matrices up to scale, and
//! compositions of reversions through collinear points satisfy a
//! closure porism: one inscribed polygon through the points closes iff
//! they all do.
//!
//! The crate verifies that calculus two ways at once:
//!
//! * an **exact rational backend** ([`num::BigRational`]) certifies the
//!   closure identities with zero tolerance, and
//! * a **float64 backend** runs the same generic code for speed and
//!   rendering, with comparisons relative to a configurable epsilon
//!   ([`Ctx`]).
//!
//! Modules follow the construction: [`algebra`] (duplex arithmetic),
//! [`matrix`] (Möbius matrices, projective equality, reversion
//! recognition, pseudo-unitarity), [`quadric`] (branches, lines,
//! chord intersections, circle inversion), [`reversion`] (the map, its
//! chains and the three-to-one reduction), [`porism`] (closure
//! verdicts, axis addition, inverted configurations), and [`json`]
//! (wire formats).

pub mod algebra;
pub mod error;
pub mod json;
pub mod matrix;
pub mod porism;
pub mod quadric;
pub mod reversion;

pub use algebra::{AlgebraKind, Ctx, Duplex, Scalar, Sign};
pub use error::{Error, Result};
pub use matrix::{Mat2, ReversionForm};
pub use porism::{
    axis_add, axis_add_closed_form, chain_reduce, conjugate_by_inversion, fourth_point,
    invert_configuration, porism_check, reduce_word, trace_path, ChainReduction, Configuration,
    InvertedConfiguration, PorismVerdict, SkippedSample, Witness,
};
pub use quadric::{
    collinear, invert_point, line_intersection, second_intersection, Line, QuadricBranch,
};
pub use reversion::{compose_chain, conjugate_pair_residual, reduce_three, Reversion};

/// The exact scalar backend.
pub type Rational = num::BigRational;
