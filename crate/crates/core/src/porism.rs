//! The porism engine: closure verification for quadrilaterals and
//! 2n-gons, the fourth-point construction, axis addition, and
//! configuration inversion.

use crate::algebra::{AlgebraKind, Ctx, Duplex, Scalar, Sign};
use crate::error::{Error, Result};
use crate::matrix::Mat2;
use crate::quadric::{collinear, invert_point, Line, QuadricBranch};
use crate::reversion::{compose_chain, reduce_three, Reversion};

/// Default number of quadric samples for "∀X" verdicts.
pub const DEFAULT_SAMPLE_COUNT: usize = 128;

/// A quadric, a line, the ordered reversion points on it, and the
/// parameter values at which inscribed paths are sampled.
#[derive(Debug, Clone, PartialEq)]
pub struct Configuration<S: Scalar> {
    pub quadric: QuadricBranch,
    pub line: Line<S>,
    pub points: Vec<Duplex<S>>,
    pub samples: Vec<S>,
}

impl<S: Scalar> Configuration<S> {
    pub fn new(
        quadric: QuadricBranch,
        line: Line<S>,
        points: Vec<Duplex<S>>,
        samples: Vec<S>,
    ) -> Result<Configuration<S>> {
        if line.kind() != quadric.kind() {
            return Err(Error::KindMismatch(line.kind(), quadric.kind()));
        }
        for p in &points {
            if p.kind != quadric.kind() {
                return Err(Error::KindMismatch(p.kind, quadric.kind()));
            }
        }
        Ok(Configuration { quadric, line, points, samples })
    }

    /// Build with the line derived from the first pair of distinct
    /// points (any line works when all points coincide).
    pub fn from_points(
        quadric: QuadricBranch,
        points: Vec<Duplex<S>>,
        samples: Vec<S>,
    ) -> Result<Configuration<S>> {
        let first = points.first().ok_or(Error::EmptyChain)?;
        let second = points
            .iter()
            .find(|p| (*p - first).is_zero().eq(&false))
            .unwrap_or(first);
        let line = Line::through(first, second)?;
        Configuration::new(quadric, line, points, samples)
    }

    /// Check the structural invariants: every point lies on the line
    /// and off the quadric.
    pub fn validate(&self, ctx: &Ctx) -> Result<()> {
        for p in &self.points {
            if !self.line.contains(p, ctx) {
                return Err(Error::NotCollinear);
            }
            if self.quadric.contains(p, ctx) {
                return Err(Error::DegeneratePoint);
            }
        }
        Ok(())
    }

    /// The configured samples, or the default grid when none are given.
    pub fn effective_samples(&self) -> Vec<S> {
        if self.samples.is_empty() {
            let circle = self.quadric.kind() == AlgebraKind::Complex;
            S::sample_grid(circle, DEFAULT_SAMPLE_COUNT)
        } else {
            self.samples.clone()
        }
    }
}

/// Worst sample of a porism check.
#[derive(Debug, Clone, PartialEq)]
pub struct Witness<S: Scalar> {
    pub t: S,
    pub residual: S,
}

/// A sample that could not be evaluated, with the failure tag.
#[derive(Debug, Clone, PartialEq)]
pub struct SkippedSample<S: Scalar> {
    pub t: S,
    pub reason: String,
}

/// Outcome of a closure check. On the exact backend `closed` implies
/// `matrix_identity` and a zero residual.
#[derive(Debug, Clone, PartialEq)]
pub struct PorismVerdict<S: Scalar> {
    pub closed: bool,
    pub matrix_identity: bool,
    pub max_residual: S,
    pub witness: Option<Witness<S>>,
    pub skipped: Vec<SkippedSample<S>>,
}

/// The unique fourth point closing every inscribed path that meets the
/// line at `p`, `q`, `r` in this order: the path runs
/// `X → P(X) → QP(X) → RQP(X) → X`, so `s` is the point of the
/// composition `R∘Q∘P`. For collinear points the mirror law makes
/// `fourth_point(p, q, r) = fourth_point(r, q, p)`.
pub fn fourth_point<S: Scalar>(
    p: &Duplex<S>,
    q: &Duplex<S>,
    r: &Duplex<S>,
    quadric: &QuadricBranch,
    ctx: &Ctx,
) -> Result<Duplex<S>> {
    reduce_three(r, q, p, quadric, ctx)
}

/// Verify the porism for an even chain: the composition of the
/// reversions through `cfg.points` (first point applied first) must fix
/// every sampled quadric point and be projectively the identity.
///
/// Samples whose evaluation hits a non-invertible denominator or a
/// parameterization pole are reported in the verdict, never silently
/// dropped. Worst-sample selection is deterministic (lowest index wins
/// ties).
pub fn porism_check<S: Scalar>(cfg: &Configuration<S>, ctx: &Ctx) -> Result<PorismVerdict<S>> {
    if cfg.points.is_empty() {
        return Err(Error::EmptyChain);
    }
    if !cfg.points.len().is_multiple_of(2) {
        return Err(Error::OddChain);
    }
    cfg.validate(ctx)?;
    let z = compose_chain(&cfg.points, &cfg.quadric, ctx)?;
    let matrix_identity = z.proj_equal(&Mat2::identity(cfg.quadric.kind()), ctx);

    let mut max_residual = S::zero();
    let mut witness: Option<Witness<S>> = None;
    let mut skipped = Vec::new();
    let mut all_within = true;

    for t in &cfg.effective_samples() {
        let x = match cfg.quadric.point(t, Sign::Plus) {
            Ok(x) => x,
            Err(e) => {
                skipped.push(SkippedSample { t: t.clone(), reason: e.name().to_string() });
                continue;
            }
        };
        let zx = match z.mobius_apply(&x, ctx) {
            Ok(v) => v,
            Err(e) => {
                skipped.push(SkippedSample { t: t.clone(), reason: e.name().to_string() });
                continue;
            }
        };
        let residual = (&zx - &x).linf();
        let scale = S::one().add(&x.linf());
        if !residual.vanishes(&scale, ctx.eps) {
            all_within = false;
        }
        let worse = witness.is_none() || residual > max_residual;
        if worse {
            max_residual = residual.clone();
            witness = Some(Witness { t: t.clone(), residual });
        }
    }

    Ok(PorismVerdict {
        closed: matrix_identity && all_within,
        matrix_identity,
        max_residual,
        witness,
        skipped,
    })
}

/// Result of reducing an even chain to at most two reversions.
#[derive(Debug, Clone, PartialEq)]
pub enum ChainReduction<S: Scalar> {
    /// The chain composes to the identity (final pair coincides).
    Identity,
    /// A nontrivial two-reversion composition remains.
    Pair(Duplex<S>, Duplex<S>),
}

fn ensure_collinear<S: Scalar>(points: &[Duplex<S>], ctx: &Ctx) -> Result<()> {
    let Some(first) = points.first() else {
        return Ok(());
    };
    let Some(anchor) = points.iter().find(|p| !(*p - first).is_zero()) else {
        return Ok(()); // all coincident
    };
    for p in points {
        if !collinear(first, anchor, p, ctx) {
            return Err(Error::NotCollinear);
        }
    }
    Ok(())
}

/// Reduce an odd chain to the single reversion point of its
/// composition, by repeatedly replacing the three earliest-applied
/// reversions with one.
pub fn reduce_word<S: Scalar>(
    points: &[Duplex<S>],
    quadric: &QuadricBranch,
    ctx: &Ctx,
) -> Result<Duplex<S>> {
    if points.is_empty() {
        return Err(Error::EmptyChain);
    }
    if points.len().is_multiple_of(2) {
        return Err(Error::OddChain);
    }
    ensure_collinear(points, ctx)?;
    let mut work: Vec<Duplex<S>> = points.to_vec();
    while work.len() > 1 {
        let s = reduce_three(&work[2], &work[1], &work[0], quadric, ctx)?;
        work.splice(0..3, [s]);
    }
    Ok(work.pop().expect("nonempty"))
}

/// Reduce an even chain of collinear reversions down to two. A chain
/// that composes to the identity necessarily ends as a repeated pair.
pub fn chain_reduce<S: Scalar>(
    points: &[Duplex<S>],
    quadric: &QuadricBranch,
    ctx: &Ctx,
) -> Result<ChainReduction<S>> {
    if points.is_empty() {
        return Err(Error::EmptyChain);
    }
    if !points.len().is_multiple_of(2) {
        return Err(Error::OddChain);
    }
    ensure_collinear(points, ctx)?;
    let mut work: Vec<Duplex<S>> = points.to_vec();
    // reject degenerate points up front so [p, p] errors consistently
    for p in &work {
        if quadric.contains(p, ctx) {
            return Err(Error::DegeneratePoint);
        }
    }
    while work.len() > 2 {
        let s = reduce_three(&work[2], &work[1], &work[0], quadric, ctx)?;
        work.splice(0..3, [s]);
    }
    let second = work.pop().expect("len 2");
    let first = work.pop().expect("len 2");
    if first.approx_eq(&second, ctx) {
        Ok(ChainReduction::Identity)
    } else {
        Ok(ChainReduction::Pair(first, second))
    }
}

/// Geometric addition along an axis: the coordinate of the fourth point
/// of the path through `a·axis`, the origin, and `b·axis`, inscribed in
/// the σ = +1 quadric. The axis is the real one for the complex algebra
/// and the imaginary one for the hyperbolic and dual algebras, giving
/// the closed forms `(a+b)/(1+ab)`, `(a+b)/(1−ab)` and `a+b`.
pub fn axis_add<S: Scalar>(kind: AlgebraKind, a: &S, b: &S, ctx: &Ctx) -> Result<S> {
    let quadric = QuadricBranch::new(kind, Sign::Plus)?;
    let on_axis = |x: &S| {
        if kind == AlgebraKind::Complex {
            Duplex::real(x.clone(), kind)
        } else {
            Duplex::imaginary(x.clone(), kind)
        }
    };
    let pa = on_axis(a);
    let pb = on_axis(b);
    let origin = Duplex::zero(kind);
    let s = match fourth_point(&pa, &origin, &pb, &quadric, ctx) {
        Ok(s) => s,
        Err(Error::NonInvertiblePivot) => return Err(Error::PoleAtFormulaSingularity),
        Err(e) => return Err(e),
    };
    let (coord, off_axis) = if kind == AlgebraKind::Complex {
        (s.re, s.im)
    } else {
        (s.im, s.re)
    };
    debug_assert!(off_axis.vanishes(&S::one().add(&coord.abs()), ctx.eps));
    Ok(coord)
}

/// The closed forms the geometric construction must reproduce.
pub fn axis_add_closed_form<S: Scalar>(kind: AlgebraKind, a: &S, b: &S, ctx: &Ctx) -> Result<S> {
    let ab = a.mul(b);
    let den = match kind {
        AlgebraKind::Complex => S::one().add(&ab),
        AlgebraKind::Hyperbolic => S::one().sub(&ab),
        AlgebraKind::Dual => S::one(),
    };
    if den.vanishes(&S::one().add(&ab.abs()), ctx.eps) {
        return Err(Error::PoleAtFormulaSingularity);
    }
    Ok(a.add(b).div(&den))
}

/// Image point sets of a configuration under circle inversion, tagged
/// by the object they came from.
#[derive(Debug, Clone, PartialEq)]
pub struct InvertedConfiguration<S: Scalar> {
    /// Images of sampled quadric points.
    pub quadric_images: Vec<Duplex<S>>,
    /// Images of sampled points of the line.
    pub line_images: Vec<Duplex<S>>,
    /// Images of the reversion points.
    pub point_images: Vec<Duplex<S>>,
    /// Per sample X: images of the inscribed path vertices
    /// `X, P₁(X), P₂P₁(X), …`.
    pub vertex_images: Vec<Vec<Duplex<S>>>,
    pub skipped: Vec<InvertSkip>,
}

/// Record of a point that could not be mapped (or a path that could not
/// be traced), with its source object and index.
#[derive(Debug, Clone, PartialEq)]
pub struct InvertSkip {
    pub object: &'static str,
    pub index: usize,
    pub reason: String,
}

/// Map every construction point of the configuration through the
/// inversion of the given center and radius (complex plane only).
/// `samples` drives both the quadric sampling and the traced paths;
/// when empty a 64-point default grid is used.
pub fn invert_configuration<S: Scalar>(
    cfg: &Configuration<S>,
    center: &Duplex<S>,
    radius: &S,
    samples: &[S],
    ctx: &Ctx,
) -> Result<InvertedConfiguration<S>> {
    if cfg.quadric.kind() != AlgebraKind::Complex {
        return Err(Error::KindMismatch(cfg.quadric.kind(), AlgebraKind::Complex));
    }
    let grid: Vec<S> = if samples.is_empty() {
        S::sample_grid(true, 64)
    } else {
        samples.to_vec()
    };
    let mut out = InvertedConfiguration {
        quadric_images: Vec::new(),
        line_images: Vec::new(),
        point_images: Vec::new(),
        vertex_images: Vec::new(),
        skipped: Vec::new(),
    };
    let push = |bucket: &mut Vec<Duplex<S>>,
                    skipped: &mut Vec<InvertSkip>,
                    object: &'static str,
                    index: usize,
                    z: &Duplex<S>| {
        match invert_point(z, center, radius, ctx) {
            Ok(w) => bucket.push(w),
            Err(e) => skipped.push(InvertSkip { object, index, reason: e.name().to_string() }),
        }
    };

    for (i, t) in grid.iter().enumerate() {
        match cfg.quadric.point(t, Sign::Plus) {
            Ok(x) => push(&mut out.quadric_images, &mut out.skipped, "quadric", i, &x),
            Err(e) => out.skipped.push(InvertSkip {
                object: "quadric",
                index: i,
                reason: e.name().to_string(),
            }),
        }
        let l = cfg.line.point_at(t);
        push(&mut out.line_images, &mut out.skipped, "line", i, &l);
    }
    for (i, p) in cfg.points.iter().enumerate() {
        push(&mut out.point_images, &mut out.skipped, "points", i, p);
    }

    for (i, t) in grid.iter().enumerate() {
        match trace_path(cfg, t, ctx) {
            Ok(vertices) => {
                let mut images = Vec::with_capacity(vertices.len());
                let mut ok = true;
                for v in &vertices {
                    match invert_point(v, center, radius, ctx) {
                        Ok(w) => images.push(w),
                        Err(e) => {
                            out.skipped.push(InvertSkip {
                                object: "vertices",
                                index: i,
                                reason: e.name().to_string(),
                            });
                            ok = false;
                            break;
                        }
                    }
                }
                if ok {
                    out.vertex_images.push(images);
                }
            }
            Err(e) => out.skipped.push(InvertSkip {
                object: "vertices",
                index: i,
                reason: e.name().to_string(),
            }),
        }
    }
    Ok(out)
}

/// Vertices of the inscribed path starting at the quadric point of
/// parameter `t`: `X, P₁(X), P₂P₁(X), …` through all but the closing
/// reversion.
pub fn trace_path<S: Scalar>(
    cfg: &Configuration<S>,
    t: &S,
    ctx: &Ctx,
) -> Result<Vec<Duplex<S>>> {
    let x0 = cfg.quadric.point(t, Sign::Plus)?;
    let mut vertices = vec![x0];
    for p in cfg.points.iter().take(cfg.points.len().saturating_sub(1)) {
        let rev = Reversion::new(p.clone(), cfg.quadric)?;
        let next = rev.apply(vertices.last().expect("nonempty"), ctx)?;
        vertices.push(next);
    }
    Ok(vertices)
}

/// Conjugate a Möbius matrix by the (anti-Möbius) inversion map:
/// `inv ∘ Z ∘ inv = A·Z̄·Ā` with `A = [[c, r²−c·c̄], [1, −c̄]]`.
/// Porism verdicts are invariant under this conjugation.
pub fn conjugate_by_inversion<S: Scalar>(
    m: &Mat2<S>,
    center: &Duplex<S>,
    radius: &S,
) -> Result<Mat2<S>> {
    if m.kind() != AlgebraKind::Complex || center.kind != AlgebraKind::Complex {
        return Err(Error::KindMismatch(m.kind(), AlgebraKind::Complex));
    }
    let kind = m.kind();
    let r2 = Duplex::real(radius.mul(radius), kind);
    let a = Mat2::new(
        center.clone(),
        &r2 - &(center * &center.conj()),
        Duplex::one(kind),
        -&center.conj(),
    );
    let a_bar = a.conj_entrywise();
    Ok(&(&a * &m.conj_entrywise()) * &a_bar)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigRational;

    type Dq = Duplex<BigRational>;

    fn rat(n: i64, d: i64) -> BigRational {
        <BigRational as Scalar>::from_ratio(n, d)
    }

    fn circle() -> QuadricBranch {
        QuadricBranch::unit_circle()
    }

    fn real_pt(n: i64, d: i64) -> Dq {
        Duplex::real(rat(n, d), AlgebraKind::Complex)
    }

    #[test]
    fn fourth_point_absorption() {
        let ctx = Ctx::default();
        let q = real_pt(-7, 4);
        let p = real_pt(2, 5);
        let s = fourth_point(&q, &p, &p, &circle(), &ctx).unwrap();
        assert_eq!(s, q);
    }

    #[test]
    fn fourth_point_velocity_instance() {
        // path through 1/2, 0, 1/2 closes at 4/5
        let ctx = Ctx::default();
        let a = real_pt(1, 2);
        let s = fourth_point(&a, &Dq::zero(AlgebraKind::Complex), &a, &circle(), &ctx).unwrap();
        assert_eq!(s, real_pt(4, 5));
    }

    #[test]
    fn fourth_point_tangent_instance() {
        // hyperbolic algebra, imaginary axis: 1/2 ⊕ 1/2 = 4/3
        let ctx = Ctx::default();
        let kind = AlgebraKind::Hyperbolic;
        let quadric = QuadricBranch::new(kind, Sign::Plus).unwrap();
        let a: Dq = Duplex::imaginary(rat(1, 2), kind);
        let s = fourth_point(&a, &Dq::zero(kind), &a, &quadric, &ctx).unwrap();
        assert_eq!(s, Duplex::imaginary(rat(4, 3), kind));
    }

    #[test]
    fn porism_check_involution_pair_closes() {
        let ctx = Ctx::default();
        let p = real_pt(2, 1);
        let cfg = Configuration::from_points(
            circle(),
            vec![p.clone(), p],
            vec![rat(1, 3), rat(-2, 7)],
        )
        .unwrap();
        let verdict = porism_check(&cfg, &ctx).unwrap();
        assert!(verdict.closed);
        assert!(verdict.matrix_identity);
        assert!(verdict.max_residual.is_zero());
        assert!(verdict.skipped.is_empty());
    }

    #[test]
    fn porism_check_constructed_chain_closes_exactly() {
        let ctx = Ctx::default();
        let p = real_pt(1, 4);
        let q = real_pt(-3, 2);
        let r = real_pt(5, 3);
        let s = fourth_point(&p, &q, &r, &circle(), &ctx).unwrap();
        let cfg = Configuration::from_points(
            circle(),
            vec![p, q, r, s],
            vec![rat(0, 1), rat(1, 2), rat(-5, 4)],
        )
        .unwrap();
        let verdict = porism_check(&cfg, &ctx).unwrap();
        assert!(verdict.closed);
        assert!(verdict.max_residual.is_zero());
    }

    #[test]
    fn porism_check_detects_perturbation() {
        let ctx = Ctx::default();
        let p = real_pt(1, 4);
        let q = real_pt(-3, 2);
        let r = real_pt(5, 3);
        let s = fourth_point(&p, &q, &r, &circle(), &ctx).unwrap();
        let s_off = &s + &real_pt(1, 1000);
        let cfg = Configuration::from_points(
            circle(),
            vec![p, q, r, s_off],
            vec![rat(0, 1), rat(1, 2), rat(-5, 4)],
        )
        .unwrap();
        let verdict = porism_check(&cfg, &ctx).unwrap();
        assert!(!verdict.closed);
        assert!(!verdict.matrix_identity);
        assert!(verdict.max_residual > rat(1, 100_000));
        assert!(verdict.witness.is_some());
    }

    #[test]
    fn porism_check_rejects_odd_chains() {
        let ctx = Ctx::default();
        let cfg = Configuration::from_points(
            circle(),
            vec![real_pt(2, 1), real_pt(3, 1), real_pt(4, 1)],
            vec![],
        )
        .unwrap();
        assert_eq!(porism_check(&cfg, &ctx), Err(Error::OddChain));
    }

    #[test]
    fn chain_reduce_examples() {
        let ctx = Ctx::default();
        let p = real_pt(2, 1);
        let q = real_pt(7, 2);

        let got = chain_reduce(
            &[p.clone(), q.clone(), q.clone(), p.clone()],
            &circle(),
            &ctx,
        )
        .unwrap();
        assert_eq!(got, ChainReduction::Identity);

        let got = chain_reduce(&[p.clone(), q.clone()], &circle(), &ctx).unwrap();
        assert_eq!(got, ChainReduction::Pair(p.clone(), q.clone()));

        let got = chain_reduce(&[p.clone(), p.clone()], &circle(), &ctx).unwrap();
        assert_eq!(got, ChainReduction::Identity);
    }

    #[test]
    fn chain_reduce_closes_six_points() {
        let ctx = Ctx::default();
        let pts: Vec<Dq> = [(1, 4), (-3, 2), (5, 3), (9, 5), (-1, 3)]
            .into_iter()
            .map(|(n, d)| real_pt(n, d))
            .collect();
        let closing = reduce_word(&pts, &circle(), &ctx).unwrap();
        let mut chain = pts;
        chain.push(closing);
        assert_eq!(
            chain_reduce(&chain, &circle(), &ctx).unwrap(),
            ChainReduction::Identity
        );
    }

    #[test]
    fn axis_add_examples() {
        let ctx = Ctx::default();
        // identity element
        let a = rat(3, 10);
        assert_eq!(
            axis_add(AlgebraKind::Complex, &a, &rat(0, 1), &ctx).unwrap(),
            a
        );
        // velocity addition
        assert_eq!(
            axis_add(AlgebraKind::Complex, &rat(1, 2), &rat(1, 2), &ctx).unwrap(),
            rat(4, 5)
        );
        // tangent addition
        assert_eq!(
            axis_add(AlgebraKind::Hyperbolic, &rat(1, 2), &rat(1, 2), &ctx).unwrap(),
            rat(4, 3)
        );
        // plain addition
        assert_eq!(
            axis_add(AlgebraKind::Dual, &rat(3, 10), &rat(2, 5), &ctx).unwrap(),
            rat(7, 10)
        );
    }

    #[test]
    fn axis_add_poles_and_degeneracies() {
        let ctx = Ctx::default();
        // 1 + ab = 0 on the complex real axis
        assert_eq!(
            axis_add(AlgebraKind::Complex, &rat(2, 1), &rat(-1, 2), &ctx),
            Err(Error::PoleAtFormulaSingularity)
        );
        // 1 − ab = 0 on the hyperbolic imaginary axis
        assert_eq!(
            axis_add(AlgebraKind::Hyperbolic, &rat(2, 1), &rat(1, 2), &ctx),
            Err(Error::PoleAtFormulaSingularity)
        );
        // a = ±1 lies on the circle
        assert_eq!(
            axis_add(AlgebraKind::Complex, &rat(1, 1), &rat(1, 3), &ctx),
            Err(Error::DegeneratePoint)
        );
        // closed form reports the same pole
        assert_eq!(
            axis_add_closed_form(AlgebraKind::Hyperbolic, &rat(2, 1), &rat(1, 2), &ctx),
            Err(Error::PoleAtFormulaSingularity)
        );
    }

    #[test]
    fn axis_add_matches_closed_form() {
        let ctx = Ctx::default();
        for kind in AlgebraKind::ALL {
            for (a, b) in [(rat(1, 3), rat(2, 7)), (rat(-4, 5), rat(1, 6))] {
                let geo = axis_add(kind, &a, &b, &ctx).unwrap();
                let cf = axis_add_closed_form(kind, &a, &b, &ctx).unwrap();
                assert_eq!(geo, cf, "kind {kind}");
            }
        }
    }

    #[test]
    fn inversion_fixes_its_circle_and_conjugation_preserves_identity() {
        let ctx = Ctx::default();
        let p = real_pt(1, 4);
        let q = real_pt(-3, 2);
        let r = real_pt(5, 3);
        let s = fourth_point(&p, &q, &r, &circle(), &ctx).unwrap();
        let cfg = Configuration::from_points(
            circle(),
            vec![p, q, r, s],
            vec![rat(1, 5), rat(-2, 3)],
        )
        .unwrap();

        let center = Dq::new(rat(6, 5), rat(0, 1), AlgebraKind::Complex);
        let radius = rat(1, 1);

        // points already on the inversion circle stay put
        let on_circle = &center + &Dq::from_ints(0, 1, AlgebraKind::Complex);
        assert_eq!(
            invert_point(&on_circle, &center, &radius, &ctx).unwrap(),
            on_circle
        );

        let inv = invert_configuration(&cfg, &center, &radius, &[], &ctx).unwrap();
        assert_eq!(inv.quadric_images.len() + inv.line_images.len(), 128);
        assert_eq!(inv.point_images.len(), 4);

        // conjugated chain is still projectively the identity
        let z = compose_chain(&cfg.points, &cfg.quadric, &ctx).unwrap();
        let w = conjugate_by_inversion(&z, &center, &radius).unwrap();
        assert!(w.proj_equal(&Mat2::identity(AlgebraKind::Complex), &ctx));
    }
}
