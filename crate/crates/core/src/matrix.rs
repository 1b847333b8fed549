//! 2×2 duplex matrices acting as Möbius transformations: projective
//! equivalence, reversion recognition, and the pseudo-unitarity check.
//!
//! A matrix represents a map up to an invertible scalar multiple;
//! determinants are never normalized.

use std::ops::Mul;

use crate::algebra::{AlgebraKind, Ctx, Duplex, Scalar, Sign};
use crate::error::{Error, Result};

/// 2×2 matrix of duplex entries, all of one kind.
#[derive(Debug, Clone, PartialEq)]
pub struct Mat2<S: Scalar> {
    pub m11: Duplex<S>,
    pub m12: Duplex<S>,
    pub m21: Duplex<S>,
    pub m22: Duplex<S>,
}

/// A matrix recognized as a reversion: the point, and which canonical
/// traceless shape carries it — `[[1, −s], [s̄, −1]]` for σ = +1,
/// `[[−1, s], [s̄, 1]]` for σ = −1.
#[derive(Debug, Clone, PartialEq)]
pub struct ReversionForm<S: Scalar> {
    pub point: Duplex<S>,
    pub sigma: Sign,
}

impl<S: Scalar> Mat2<S> {
    /// Entries must share one kind; panics otherwise (validated input
    /// never reaches this).
    pub fn new(m11: Duplex<S>, m12: Duplex<S>, m21: Duplex<S>, m22: Duplex<S>) -> Self {
        assert!(
            m11.kind == m12.kind && m11.kind == m21.kind && m11.kind == m22.kind,
            "matrix entries must share one algebra kind"
        );
        Mat2 { m11, m12, m21, m22 }
    }

    pub fn identity(kind: AlgebraKind) -> Self {
        Mat2::new(
            Duplex::one(kind),
            Duplex::zero(kind),
            Duplex::zero(kind),
            Duplex::one(kind),
        )
    }

    pub fn kind(&self) -> AlgebraKind {
        self.m11.kind
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        if self.kind() != rhs.kind() {
            return Err(Error::KindMismatch(self.kind(), rhs.kind()));
        }
        Ok(Mat2::new(
            &(&self.m11 * &rhs.m11) + &(&self.m12 * &rhs.m21),
            &(&self.m11 * &rhs.m12) + &(&self.m12 * &rhs.m22),
            &(&self.m21 * &rhs.m11) + &(&self.m22 * &rhs.m21),
            &(&self.m21 * &rhs.m12) + &(&self.m22 * &rhs.m22),
        ))
    }

    /// Entrywise conjugate (no transpose).
    pub fn conj_entrywise(&self) -> Self {
        Mat2::new(
            self.m11.conj(),
            self.m12.conj(),
            self.m21.conj(),
            self.m22.conj(),
        )
    }

    /// Multiply every entry by a duplex factor.
    pub fn scale(&self, lambda: &Duplex<S>) -> Self {
        Mat2::new(
            &self.m11 * lambda,
            &self.m12 * lambda,
            &self.m21 * lambda,
            &self.m22 * lambda,
        )
    }

    pub fn trace(&self) -> Duplex<S> {
        &self.m11 + &self.m22
    }

    fn entries(&self) -> [&Duplex<S>; 4] {
        [&self.m11, &self.m12, &self.m21, &self.m22]
    }

    fn magnitude(&self) -> S {
        let mut m = S::zero();
        for e in self.entries() {
            let l = e.linf();
            if l > m {
                m = l;
            }
        }
        m
    }

    /// Möbius action `z ↦ (m11·z + m12)·(m21·z + m22)⁻¹`.
    ///
    /// Invariant under scaling the matrix by any invertible duplex.
    /// Fails with [`Error::NonInvertibleDenominator`] when the
    /// denominator is zero or a zero divisor.
    pub fn mobius_apply(&self, z: &Duplex<S>, ctx: &Ctx) -> Result<Duplex<S>> {
        if self.kind() != z.kind {
            return Err(Error::KindMismatch(self.kind(), z.kind));
        }
        let den = &(&self.m21 * z) + &self.m22;
        let den_inv = den.invert(ctx).map_err(|_| Error::NonInvertibleDenominator)?;
        let num = &(&self.m11 * z) + &self.m12;
        Ok(&num * &den_inv)
    }

    /// Projective equality: `other = λ·self` for some duplex λ with
    /// invertible norm. Scaling by a zero divisor collapses the Möbius
    /// action over the hyperbolic and dual algebras, so such λ are
    /// excluded. If `self` has no invertible entry the relation is
    /// indeterminate and reported as `false`.
    pub fn proj_equal(&self, other: &Self, ctx: &Ctx) -> bool {
        if self.kind() != other.kind() {
            return false;
        }
        let pivot = self.entries().into_iter().position(|e| e.is_invertible(ctx));
        let Some(idx) = pivot else {
            return false;
        };
        let a = self.entries()[idx];
        let b = other.entries()[idx];
        let lambda = b * &a.invert(ctx).expect("pivot is invertible");
        if !lambda.is_invertible(ctx) {
            return false;
        }
        let scaled = self.scale(&lambda);
        let scale = S::one().add(&crate::algebra::Scalar::add(
            &scaled.magnitude(),
            &other.magnitude(),
        ));
        let equal = scaled
            .entries()
            .into_iter()
            .zip(other.entries())
            .all(|(x, y)| (x - y).vanishes(&scale, ctx.eps));
        equal
    }

    /// Recognize a reversion matrix, recovering its point and canonical
    /// shape. Tries the σ = +1 shape first (the two shapes can only
    /// collide at the antipodal map, where both readings give point 0).
    pub fn as_reversion(&self, ctx: &Ctx) -> Result<ReversionForm<S>> {
        let scale = S::one().add(&self.magnitude());
        let one = Duplex::one(self.kind());

        let mut any_pivot = false;
        for sigma in [Sign::Plus, Sign::Minus] {
            let pivot = match sigma {
                Sign::Plus => &self.m11,
                Sign::Minus => &self.m22,
            };
            let Ok(pivot_inv) = pivot.invert(ctx) else {
                continue;
            };
            any_pivot = true;
            let (point, opposite) = match sigma {
                Sign::Plus => (-&(&self.m12 * &pivot_inv), &self.m22),
                Sign::Minus => (&self.m12 * &pivot_inv, &self.m11),
            };
            // diagonal-ratio check: opposite/pivot must equal −1
            let diag = &(opposite * &pivot_inv) + &one;
            // off-diagonal check: m21/pivot must equal conj(point)
            let off = &(&self.m21 * &pivot_inv) - &point.conj();
            if diag.vanishes(&scale, ctx.eps) && off.vanishes(&scale, ctx.eps) {
                return Ok(ReversionForm { point, sigma });
            }
        }
        if any_pivot {
            Err(Error::NotAReversion)
        } else {
            Err(Error::NonInvertiblePivot)
        }
    }

    /// Compute `M*·J·M` with `J = diag(1, −1)` and `*` the conjugate
    /// transpose. If the result is `c·J` for a real scalar `c`, return
    /// `c`; otherwise the matrix is not pseudo-unitary up to scale.
    pub fn pseudo_unitary_defect(&self, ctx: &Ctx) -> Result<S> {
        // J·M negates the bottom row; M*·(J·M) follows.
        let jm = Mat2::new(
            self.m11.clone(),
            self.m12.clone(),
            -&self.m21,
            -&self.m22,
        );
        let mstar = Mat2::new(
            self.m11.conj(),
            self.m21.conj(),
            self.m12.conj(),
            self.m22.conj(),
        );
        let w = mstar.try_mul(&jm).expect("same kind");
        let scale = S::one().add(&w.magnitude());
        let eps = ctx.eps;
        let diag_sum = &w.m11 + &w.m22; // must vanish: W22 = −W11
        if w.m12.vanishes(&scale, eps)
            && w.m21.vanishes(&scale, eps)
            && w.m11.im.vanishes(&scale, eps)
            && diag_sum.vanishes(&scale, eps)
        {
            Ok(w.m11.re)
        } else {
            Err(Error::NotPseudoUnitary)
        }
    }
}

impl<'a, 'b, S: Scalar> Mul<&'b Mat2<S>> for &'a Mat2<S> {
    type Output = Mat2<S>;
    fn mul(self, rhs: &'b Mat2<S>) -> Mat2<S> {
        self.try_mul(rhs).expect("algebra kind mismatch")
    }
}

impl<S: Scalar> Mul<Mat2<S>> for Mat2<S> {
    type Output = Mat2<S>;
    fn mul(self, rhs: Mat2<S>) -> Mat2<S> {
        &self * &rhs
    }
}
