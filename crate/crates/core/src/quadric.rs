//! Unit quadrics `{z : |z|² = σ}` of each algebra, lines, collinearity,
//! the quadratic second-intersection oracle, and circle inversion.

use crate::algebra::scalar::smax;
use crate::algebra::{AlgebraKind, Ctx, Duplex, Scalar, Sign};
use crate::error::{Error, Result};

/// A unit quadric branch: circle (complex, σ=+1), one of the two
/// conjugate hyperbolas (hyperbolic, σ=±1), or the parallel line pair
/// `x = ±1` (dual, σ=+1). The empty branches (complex σ=−1, dual σ=−1)
/// are rejected at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadricBranch {
    kind: AlgebraKind,
    sigma: Sign,
}

impl QuadricBranch {
    pub fn new(kind: AlgebraKind, sigma: Sign) -> Result<QuadricBranch> {
        match (kind, sigma) {
            (AlgebraKind::Complex, Sign::Minus) | (AlgebraKind::Dual, Sign::Minus) => {
                Err(Error::InvalidBranch { kind, sigma: sigma.as_i64() })
            }
            _ => Ok(QuadricBranch { kind, sigma }),
        }
    }

    pub fn unit_circle() -> QuadricBranch {
        QuadricBranch { kind: AlgebraKind::Complex, sigma: Sign::Plus }
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn sigma(&self) -> Sign {
        self.sigma
    }

    /// σ as a scalar of the working backend.
    pub fn sigma_scalar<S: Scalar>(&self) -> S {
        S::from_int(self.sigma.as_i64())
    }

    /// `norm_sq(z) − σ`; zero exactly when `z` lies on the branch.
    pub fn residual<S: Scalar>(&self, z: &Duplex<S>) -> S {
        z.norm_sq().sub(&self.sigma_scalar())
    }

    /// Membership within `eps·(1 + re² + im²)`, exact on rationals.
    pub fn contains<S: Scalar>(&self, z: &Duplex<S>, ctx: &Ctx) -> bool {
        if z.kind != self.kind {
            return false;
        }
        let scale = S::one()
            .add(&z.re.mul(&z.re))
            .add(&z.im.mul(&z.im));
        self.residual(z).vanishes(&scale, ctx.eps)
    }

    /// Parameterized point of the branch. Float backends use the
    /// trigonometric/hyperbolic forms; the exact backend substitutes
    /// rational parameterizations so the result is on-quadric exactly.
    ///
    /// `sheet` selects the hyperbola sheet or which of the parallel
    /// lines; it is ignored where the branch is connected.
    pub fn point<S: Scalar>(&self, t: &S, sheet: Sign) -> Result<Duplex<S>> {
        let sh = S::from_int(sheet.as_i64());
        match (self.kind, self.sigma) {
            (AlgebraKind::Complex, Sign::Plus) => {
                let (c, s) = S::circle_point(t);
                Ok(Duplex::new(c, s, self.kind))
            }
            (AlgebraKind::Hyperbolic, Sign::Plus) => {
                let (c, s) = S::hyperbola_point(t)?;
                Ok(Duplex::new(sh.mul(&c), s, self.kind))
            }
            (AlgebraKind::Hyperbolic, Sign::Minus) => {
                let (c, s) = S::hyperbola_point(t)?;
                Ok(Duplex::new(s, sh.mul(&c), self.kind))
            }
            (AlgebraKind::Dual, Sign::Plus) => {
                Ok(Duplex::new(sh, t.clone(), self.kind))
            }
            _ => Err(Error::InvalidBranch { kind: self.kind, sigma: self.sigma.as_i64() }),
        }
    }
}

/// A line `{base + t·dir : t real}`.
#[derive(Debug, Clone, PartialEq)]
pub struct Line<S: Scalar> {
    pub base: Duplex<S>,
    pub dir: Duplex<S>,
}

impl<S: Scalar> Line<S> {
    pub fn new(base: Duplex<S>, dir: Duplex<S>) -> Result<Line<S>> {
        base.same_kind(&dir)?;
        if dir.is_zero() {
            return Err(Error::InvalidInput("line direction must be nonzero".into()));
        }
        Ok(Line { base, dir })
    }

    /// Line through two points; falls back to the real direction when
    /// the points coincide (any line through the point then works).
    pub fn through(a: &Duplex<S>, b: &Duplex<S>) -> Result<Line<S>> {
        a.same_kind(b)?;
        let dir = b - a;
        if dir.is_zero() {
            Line::new(a.clone(), Duplex::one(a.kind))
        } else {
            Line::new(a.clone(), dir)
        }
    }

    pub fn kind(&self) -> AlgebraKind {
        self.base.kind
    }

    pub fn point_at(&self, t: &S) -> Duplex<S> {
        &self.base + &self.dir.scale(t)
    }

    pub fn contains(&self, z: &Duplex<S>, ctx: &Ctx) -> bool {
        let tip = &self.base + &self.dir;
        collinear(&self.base, &tip, z, ctx)
    }
}

/// Planar cross product `(q − p) × (r − p)`.
fn cross3<S: Scalar>(p: &Duplex<S>, q: &Duplex<S>, r: &Duplex<S>) -> S {
    let qp_re = q.re.sub(&p.re);
    let qp_im = q.im.sub(&p.im);
    let rp_re = r.re.sub(&p.re);
    let rp_im = r.im.sub(&p.im);
    qp_re.mul(&rp_im).sub(&qp_im.mul(&rp_re))
}

fn dist_sq<S: Scalar>(a: &Duplex<S>, b: &Duplex<S>) -> S {
    let dre = a.re.sub(&b.re);
    let dim = a.im.sub(&b.im);
    dre.mul(&dre).add(&dim.mul(&dim))
}

/// Collinearity via the planar cross product (division-free, so zero
/// divisors cannot disturb it). Coincident points count as collinear.
/// Float tolerance is relative to the squared diameter of the triple.
pub fn collinear<S: Scalar>(p: &Duplex<S>, q: &Duplex<S>, r: &Duplex<S>, ctx: &Ctx) -> bool {
    if p.kind != q.kind || p.kind != r.kind {
        return false;
    }
    let scale = smax(&dist_sq(p, q), &smax(&dist_sq(p, r), &dist_sq(q, r)));
    cross3(p, q, r).vanishes(&scale, ctx.eps)
}

/// Second intersection of the line `x → p` with the quadric, given that
/// `x` lies on it.
///
/// Substituting `x + u·d` (with `d = p − x`) into `norm_sq = σ` gives a
/// real quadratic with the known root `u = 0`; the other root is
/// `u₁ = −2·Re(conj(x)·d)/norm_sq(d)`. A tangent contact (`u₁ = 0`)
/// returns `x` itself. Null directions — hyperbolic asymptote-parallel
/// chords and all dual vertical chords — have `norm_sq(d) = 0` and no
/// second root.
pub fn second_intersection<S: Scalar>(
    x: &Duplex<S>,
    p: &Duplex<S>,
    quadric: &QuadricBranch,
    ctx: &Ctx,
) -> Result<Duplex<S>> {
    x.same_kind(p)?;
    if x.kind != quadric.kind() {
        return Err(Error::KindMismatch(x.kind, quadric.kind()));
    }
    if !quadric.contains(x, ctx) {
        return Err(Error::OffQuadric);
    }
    let d = p - x;
    if !d.is_invertible(ctx) {
        return Err(Error::NullDirection);
    }
    let cross_term = x.conj().try_mul(&d)?.re; // Re(conj(x)·d)
    let two = S::from_int(2);
    let u1 = two.mul(&cross_term).neg().div(&d.norm_sq());
    Ok(x + &d.scale(&u1))
}

/// Inversion in the circle of the given center and radius (complex
/// plane only). Involutive; fixes the inversion circle pointwise.
pub fn invert_point<S: Scalar>(
    z: &Duplex<S>,
    center: &Duplex<S>,
    radius: &S,
    ctx: &Ctx,
) -> Result<Duplex<S>> {
    if z.kind != AlgebraKind::Complex || center.kind != AlgebraKind::Complex {
        return Err(Error::KindMismatch(z.kind, center.kind));
    }
    if radius.is_negative() || radius.is_zero() {
        return Err(Error::InvalidInput("inversion radius must be positive".into()));
    }
    let w = (z - center).conj();
    let w_inv = w.invert(ctx).map_err(|_| Error::CenterPole)?;
    let r2 = radius.mul(radius);
    Ok(center + &w_inv.scale(&r2))
}

/// Intersection point of two lines, or `None` when they are parallel
/// (within tolerance) or of different kinds.
pub fn line_intersection<S: Scalar>(a: &Line<S>, b: &Line<S>, ctx: &Ctx) -> Option<Duplex<S>> {
    if a.kind() != b.kind() {
        return None;
    }
    // t solves cross(base_a + t·dir_a − base_b, dir_b) = 0.
    let det = a.dir.re.mul(&b.dir.im).sub(&a.dir.im.mul(&b.dir.re));
    let scale = smax(
        &a.dir.re.mul(&a.dir.re).add(&a.dir.im.mul(&a.dir.im)),
        &b.dir.re.mul(&b.dir.re).add(&b.dir.im.mul(&b.dir.im)),
    );
    if det.vanishes(&scale, ctx.eps) {
        return None;
    }
    let diff = &b.base - &a.base;
    let num = diff.re.mul(&b.dir.im).sub(&diff.im.mul(&b.dir.re));
    let t = num.div(&det);
    Some(a.point_at(&t))
}
