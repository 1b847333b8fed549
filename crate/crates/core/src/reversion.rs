//! The reversion map, its matrix and geometric realizations, composition
//! chains, and the three-to-one reduction that drives the porism.
//!
//! Composition-order convention, fixed crate-wide: a point list
//! `[p, q, r, s]` denotes the composition applied left to right — `p`
//! first — so its matrix is `M(s)·M(r)·M(q)·M(p)`. `reduce_three(a, b, c)`
//! returns the point of `A∘B∘C` (`c` applied first), matching the ternary
//! word `abc`; for collinear points the mirror law `abc = cba` makes the
//! reading direction immaterial.

use crate::algebra::{Ctx, Duplex, Scalar, Sign};
use crate::error::{Error, Result};
use crate::matrix::Mat2;
use crate::quadric::{collinear, second_intersection, QuadricBranch};

/// A reversion point paired with its quadric branch.
///
/// When the point lies on the quadric the map degenerates to the
/// constant map onto the point.
#[derive(Debug, Clone, PartialEq)]
pub struct Reversion<S: Scalar> {
    pub point: Duplex<S>,
    pub quadric: QuadricBranch,
}

impl<S: Scalar> Reversion<S> {
    pub fn new(point: Duplex<S>, quadric: QuadricBranch) -> Result<Reversion<S>> {
        if point.kind != quadric.kind() {
            return Err(Error::KindMismatch(point.kind, quadric.kind()));
        }
        Ok(Reversion { point, quadric })
    }

    pub fn is_degenerate(&self, ctx: &Ctx) -> bool {
        self.quadric.contains(&self.point, ctx)
    }

    /// The traceless matrix of the reversion: `[[1, −p], [p̄, −1]]` for
    /// σ = +1, `[[−1, p], [p̄, 1]]` for σ = −1. Well formed (merely
    /// singular) even when the reversion is degenerate.
    pub fn matrix(&self) -> Mat2<S> {
        let p = &self.point;
        let one = Duplex::one(p.kind);
        match self.quadric.sigma() {
            Sign::Plus => Mat2::new(one.clone(), -p, p.conj(), -&one),
            Sign::Minus => Mat2::new(-&one, p.clone(), p.conj(), one),
        }
    }

    /// Apply the reversion to an on-quadric point via the Möbius action
    /// of [`Reversion::matrix`]. Degenerate reversions return their
    /// point. The result stays on the quadric and is collinear with `x`
    /// and the reversion point.
    pub fn apply(&self, x: &Duplex<S>, ctx: &Ctx) -> Result<Duplex<S>> {
        if !self.quadric.contains(x, ctx) {
            return Err(Error::OffQuadric);
        }
        if self.is_degenerate(ctx) {
            return Ok(self.point.clone());
        }
        self.matrix().mobius_apply(x, ctx)
    }

    /// Apply the reversion through the geometric oracle instead: the
    /// second intersection of the chord `x → point` with the quadric.
    /// Agrees with [`Reversion::apply`] wherever both are defined.
    pub fn apply_oracle(&self, x: &Duplex<S>, ctx: &Ctx) -> Result<Duplex<S>> {
        if self.is_degenerate(ctx) {
            if !self.quadric.contains(x, ctx) {
                return Err(Error::OffQuadric);
            }
            return Ok(self.point.clone());
        }
        second_intersection(x, &self.point, &self.quadric, ctx)
    }
}

fn ensure_off_quadric<S: Scalar>(
    points: &[Duplex<S>],
    quadric: &QuadricBranch,
    ctx: &Ctx,
) -> Result<()> {
    for p in points {
        if p.kind != quadric.kind() {
            return Err(Error::KindMismatch(p.kind, quadric.kind()));
        }
        if quadric.contains(p, ctx) {
            return Err(Error::DegeneratePoint);
        }
    }
    Ok(())
}

/// Matrix of the composition of the reversions through `points`, first
/// list entry applied first: `[p, q, r, s] ↦ M(s)·M(r)·M(q)·M(p)`.
///
/// On-quadric points are rejected: their constant maps destroy the
/// group structure the porism theorems rely on.
pub fn compose_chain<S: Scalar>(
    points: &[Duplex<S>],
    quadric: &QuadricBranch,
    ctx: &Ctx,
) -> Result<Mat2<S>> {
    if points.is_empty() {
        return Err(Error::EmptyChain);
    }
    ensure_off_quadric(points, quadric, ctx)?;
    let mut acc = Mat2::identity(quadric.kind());
    for p in points {
        let m = Reversion::new(p.clone(), *quadric)?.matrix();
        acc = &m * &acc;
    }
    Ok(acc)
}

/// Reduce three collinear reversions to one: the point `s` with
/// `S = A∘B∘C` (`c` applied first), obtained by multiplying the matrices
/// and recognizing the product as a reversion.
///
/// The product can land on the reversion through the line's ideal point
/// (both diagonal entries zero); this has no affine reversion point and
/// surfaces as [`Error::NonInvertiblePivot`].
pub fn reduce_three<S: Scalar>(
    a: &Duplex<S>,
    b: &Duplex<S>,
    c: &Duplex<S>,
    quadric: &QuadricBranch,
    ctx: &Ctx,
) -> Result<Duplex<S>> {
    if !collinear(a, b, c, ctx) {
        return Err(Error::NotCollinear);
    }
    let m = compose_chain(&[c.clone(), b.clone(), a.clone()], quadric, ctx)?;
    let form = m.as_reversion(ctx)?;
    Ok(form.point)
}

/// Residual of the conjugate-pair identity
/// `(p−q)/(1 − p̄q) = (s−r)/(1 − s̄r)`, which vanishes exactly when
/// `P∘Q = S∘R` as Möbius maps of the unit circle (p, q, r, s collinear).
pub fn conjugate_pair_residual<S: Scalar>(
    p: &Duplex<S>,
    q: &Duplex<S>,
    r: &Duplex<S>,
    s: &Duplex<S>,
    ctx: &Ctx,
) -> Result<Duplex<S>> {
    let one = Duplex::one(p.kind);
    let chord = |x: &Duplex<S>, y: &Duplex<S>| -> Result<Duplex<S>> {
        let den = &one - &x.conj().try_mul(y)?;
        let den_inv = den.invert(ctx)?;
        Ok(&(x - y) * &den_inv)
    };
    Ok(&chord(p, q)? - &chord(s, r)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraKind;
    use num::BigRational;

    type Dq = Duplex<BigRational>;

    fn rat(n: i64, d: i64) -> BigRational {
        <BigRational as Scalar>::from_ratio(n, d)
    }

    fn circle() -> QuadricBranch {
        QuadricBranch::unit_circle()
    }

    #[test]
    fn matrix_shapes_and_trace() {
        let kind = AlgebraKind::Complex;
        let rev: Reversion<BigRational> =
            Reversion::new(Dq::zero(kind), circle()).unwrap();
        let m = rev.matrix();
        assert_eq!(m.m11, Dq::one(kind));
        assert_eq!(m.m12, Dq::zero(kind));
        assert_eq!(m.m21, Dq::zero(kind));
        assert_eq!(m.m22, -&Dq::one(kind));

        let hyp = QuadricBranch::new(AlgebraKind::Hyperbolic, Sign::Minus).unwrap();
        let p = Dq::from_ints(0, 2, AlgebraKind::Hyperbolic);
        let m = Reversion::new(p.clone(), hyp).unwrap().matrix();
        assert_eq!(m.m11, -&Dq::one(AlgebraKind::Hyperbolic));
        assert_eq!(m.m12, p);
        assert_eq!(m.m21, p.conj());
        assert_eq!(m.m22, Dq::one(AlgebraKind::Hyperbolic));
        assert!(m.trace().is_zero());
    }

    #[test]
    fn apply_examples() {
        let ctx = Ctx::default();
        let kind = AlgebraKind::Complex;

        // antipode through the origin
        let rev = Reversion::new(Dq::zero(kind), circle()).unwrap();
        let x = Dq::from_ints(0, 1, kind);
        assert_eq!(rev.apply(&x, &ctx).unwrap(), -&x);

        // p = 2 sends 1 to −1
        let rev = Reversion::new(Dq::from_ints(2, 0, kind), circle()).unwrap();
        assert_eq!(
            rev.apply(&Dq::one(kind), &ctx).unwrap(),
            Dq::from_ints(-1, 0, kind)
        );

        // p = 2 sends i to 4/5 + 3/5·i, agreeing with the oracle
        let got = rev.apply(&x, &ctx).unwrap();
        assert_eq!(got, Dq::new(rat(4, 5), rat(3, 5), kind));
        assert_eq!(rev.apply_oracle(&x, &ctx).unwrap(), got);
    }

    #[test]
    fn degenerate_reversion_is_constant() {
        let ctx = Ctx::default();
        let kind = AlgebraKind::Complex;
        let rev = Reversion::new(Dq::one(kind), circle()).unwrap();
        assert!(rev.is_degenerate(&ctx));
        let x = Dq::from_ints(0, 1, kind);
        assert_eq!(rev.apply(&x, &ctx).unwrap(), Dq::one(kind));
        assert_eq!(rev.apply_oracle(&x, &ctx).unwrap(), Dq::one(kind));
    }

    #[test]
    fn tangent_contact_is_fixed() {
        // From p = 2 the tangent touches the circle at 1/2 ± √3/2·i;
        // use the float backend for the irrational contact point.
        let ctx = Ctx::default();
        let kind = AlgebraKind::Complex;
        let x = Duplex::new(0.5f64, 0.75f64.sqrt(), kind);
        let rev = Reversion::new(Duplex::new(2.0, 0.0, kind), circle()).unwrap();
        let via_oracle = rev.apply_oracle(&x, &ctx).unwrap();
        let via_matrix = rev.apply(&x, &ctx).unwrap();
        assert!(via_oracle.approx_eq(&x, &ctx));
        assert!(via_matrix.approx_eq(&x, &ctx));
    }

    #[test]
    fn involution_on_exact_backend() {
        let ctx = Ctx::default();
        let kind = AlgebraKind::Complex;
        let rev = Reversion::new(Dq::new(rat(7, 5), rat(-2, 3), kind), circle()).unwrap();
        let x: Dq = circle().point(&rat(3, 7), Sign::Plus).unwrap();
        let y = rev.apply(&x, &ctx).unwrap();
        assert_eq!(rev.apply(&y, &ctx).unwrap(), x);
    }

    #[test]
    fn compose_chain_order_and_errors() {
        let ctx = Ctx::default();
        let kind = AlgebraKind::Complex;
        let p = Dq::from_ints(2, 0, kind);
        // [p, p] is proportional to the identity
        let m = compose_chain(&[p.clone(), p.clone()], &circle(), &ctx).unwrap();
        assert!(m.proj_equal(&Mat2::identity(kind), &ctx));

        assert_eq!(
            compose_chain::<BigRational>(&[], &circle(), &ctx),
            Err(Error::EmptyChain)
        );
        assert_eq!(
            compose_chain(&[Dq::one(kind)], &circle(), &ctx),
            Err(Error::DegeneratePoint)
        );
    }

    #[test]
    fn reduce_three_absorption_and_middle_zero() {
        let ctx = Ctx::default();
        let kind = AlgebraKind::Complex;
        let p = Dq::new(rat(-7, 4), rat(0, 1), kind);
        let q = Dq::new(rat(2, 5), rat(0, 1), kind);

        // absorption: p·q·q = p
        assert_eq!(reduce_three(&p, &q, &q, &circle(), &ctx).unwrap(), p);
        assert_eq!(reduce_three(&q, &q, &p, &circle(), &ctx).unwrap(), p);

        // velocity form: a·0·b lands on (a+b)/(1+ab)
        let half = Dq::new(rat(1, 2), rat(0, 1), kind);
        let got = reduce_three(&half, &Dq::zero(kind), &half, &circle(), &ctx).unwrap();
        assert_eq!(got, Dq::new(rat(4, 5), rat(0, 1), kind));
    }

    #[test]
    fn reduce_three_rejects_non_collinear() {
        let ctx = Ctx::default();
        let kind = AlgebraKind::Complex;
        assert_eq!(
            reduce_three(
                &Dq::zero(kind),
                &Dq::from_ints(2, 0, kind),
                &Dq::from_ints(0, 2, kind),
                &circle(),
                &ctx
            ),
            Err(Error::NotCollinear)
        );
    }

    #[test]
    fn conjugate_pair_residual_vanishes_for_constructed_quadruple() {
        let ctx = Ctx::default();
        let kind = AlgebraKind::Complex;
        let p = Dq::zero(kind);
        let q = Dq::new(rat(1, 2), rat(0, 1), kind);
        let r = Dq::new(rat(-3, 10), rat(0, 1), kind);
        let s = reduce_three(&p, &q, &r, &circle(), &ctx).unwrap();
        assert_eq!(s, Dq::new(rat(-16, 23), rat(0, 1), kind));
        let res = conjugate_pair_residual(&p, &q, &r, &s, &ctx).unwrap();
        assert!(res.is_zero());

        // trivial instance: both chords vanish
        let res = conjugate_pair_residual(&p, &p, &q, &q, &ctx).unwrap();
        assert!(res.is_zero());

        // perturbing s breaks the identity measurably
        let s_off = &s + &Dq::new(rat(1, 1000), rat(0, 1), kind);
        let res = conjugate_pair_residual(&p, &q, &r, &s_off, &ctx).unwrap();
        assert!(res.linf() > rat(1, 10_000));
    }
}
