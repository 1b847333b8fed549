use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::scalar::smax;
use super::{AlgebraKind, Ctx, Scalar};
use crate::error::{Error, Result};

/// A number `re + im·e` in one of the three plane algebras, tagged with
/// its kind at runtime. Mixed-kind arithmetic is a hard error: the
/// checked entry points report [`Error::KindMismatch`], the operator
/// sugar panics (library code only ever combines values of one kind,
/// validated at the JSON boundary).
#[derive(Debug, Clone, PartialEq)]
pub struct Duplex<S: Scalar> {
    pub re: S,
    pub im: S,
    pub kind: AlgebraKind,
}

impl<S: Scalar> Duplex<S> {
    pub fn new(re: S, im: S, kind: AlgebraKind) -> Self {
        Duplex { re, im, kind }
    }

    pub fn zero(kind: AlgebraKind) -> Self {
        Duplex::new(S::zero(), S::zero(), kind)
    }

    pub fn one(kind: AlgebraKind) -> Self {
        Duplex::new(S::one(), S::zero(), kind)
    }

    /// The real number `x` embedded in the algebra.
    pub fn real(x: S, kind: AlgebraKind) -> Self {
        Duplex::new(x, S::zero(), kind)
    }

    /// The purely imaginary `x·e`.
    pub fn imaginary(x: S, kind: AlgebraKind) -> Self {
        Duplex::new(S::zero(), x, kind)
    }

    pub fn from_ints(re: i64, im: i64, kind: AlgebraKind) -> Self {
        Duplex::new(S::from_int(re), S::from_int(im), kind)
    }

    pub(crate) fn same_kind(&self, other: &Self) -> Result<()> {
        if self.kind == other.kind {
            Ok(())
        } else {
            Err(Error::KindMismatch(self.kind, other.kind))
        }
    }

    /// Conjugate `re − im·e`; an involutive algebra automorphism.
    pub fn conj(&self) -> Self {
        Duplex::new(self.re.clone(), self.im.neg(), self.kind)
    }

    /// `re² − κ·im²`, the real part of `z·conj(z)`. May be negative
    /// (hyperbolic) or zero for nonzero `z` (hyperbolic, dual).
    pub fn norm_sq(&self) -> S {
        let kappa = S::from_int(self.kind.kappa());
        self.re.mul(&self.re).sub(&kappa.mul(&self.im.mul(&self.im)))
    }

    /// Checked product; see [`Error::KindMismatch`].
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.same_kind(other)?;
        Ok(self.mul_raw(other))
    }

    fn mul_raw(&self, other: &Self) -> Self {
        let kappa = S::from_int(self.kind.kappa());
        let re = self
            .re
            .mul(&other.re)
            .add(&kappa.mul(&self.im.mul(&other.im)));
        let im = self.re.mul(&other.im).add(&self.im.mul(&other.re));
        Duplex::new(re, im, self.kind)
    }

    /// Whether `norm_sq` is invertibly far from zero: exact nonzero on
    /// the rational backend, `|norm| > eps·(re² + im²)` on floats.
    pub fn is_invertible(&self, ctx: &Ctx) -> bool {
        let norm = self.norm_sq();
        let scale = self.re.mul(&self.re).add(&self.im.mul(&self.im));
        !norm.vanishes(&scale, ctx.eps)
    }

    /// Multiplicative inverse `conj(z)/norm_sq(z)`.
    ///
    /// Fails with [`Error::ZeroDivisor`] on the null cones: `a = ±b` in
    /// the hyperbolic algebra, `re = 0` in the dual one, only `z = 0`
    /// over the complex numbers.
    pub fn invert(&self, ctx: &Ctx) -> Result<Self> {
        if !self.is_invertible(ctx) {
            return Err(Error::ZeroDivisor);
        }
        let norm = self.norm_sq();
        let c = self.conj();
        Ok(Duplex::new(c.re.div(&norm), c.im.div(&norm), self.kind))
    }

    /// Scalar multiple.
    pub fn scale(&self, s: &S) -> Self {
        Duplex::new(self.re.mul(s), self.im.mul(s), self.kind)
    }

    /// `max(|re|, |im|)` — the L∞ magnitude used for residuals and
    /// tolerance scales (exact-friendly: no square roots).
    pub fn linf(&self) -> S {
        smax(&self.re.abs(), &self.im.abs())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// Componentwise zero test against `eps·scale`.
    pub fn vanishes(&self, scale: &S, eps: f64) -> bool {
        self.re.vanishes(scale, eps) && self.im.vanishes(scale, eps)
    }

    /// Equality within `eps·(1 + max component)`, exact on rationals.
    pub fn approx_eq(&self, other: &Self, ctx: &Ctx) -> bool {
        if self.kind != other.kind {
            return false;
        }
        let diff = self - other;
        let scale = S::one().add(&smax(&self.linf(), &other.linf()));
        diff.vanishes(&scale, ctx.eps)
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, |$a:ident, $b:ident| $body:expr) => {
        impl<'a, 'b, S: Scalar> $trait<&'b Duplex<S>> for &'a Duplex<S> {
            type Output = Duplex<S>;
            fn $method(self, rhs: &'b Duplex<S>) -> Duplex<S> {
                let $a = self;
                let $b = rhs;
                $a.same_kind($b).expect("algebra kind mismatch");
                $body
            }
        }
        impl<S: Scalar> $trait<Duplex<S>> for Duplex<S> {
            type Output = Duplex<S>;
            fn $method(self, rhs: Duplex<S>) -> Duplex<S> {
                $trait::$method(&self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| Duplex::new(
    a.re.add(&b.re),
    a.im.add(&b.im),
    a.kind
));
forward_binop!(Sub, sub, |a, b| Duplex::new(
    a.re.sub(&b.re),
    a.im.sub(&b.im),
    a.kind
));
forward_binop!(Mul, mul, |a, b| a.mul_raw(b));

impl<S: Scalar> Neg for &Duplex<S> {
    type Output = Duplex<S>;
    fn neg(self) -> Duplex<S> {
        Duplex::new(self.re.neg(), self.im.neg(), self.kind)
    }
}

impl<S: Scalar> Neg for Duplex<S> {
    type Output = Duplex<S>;
    fn neg(self) -> Duplex<S> {
        -&self
    }
}

impl<S: Scalar> fmt::Display for Duplex<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let unit = match self.kind {
            AlgebraKind::Complex => "i",
            _ => "e",
        };
        if self.im.is_negative() {
            write!(f, "{}-{}{}", self.re, self.im.abs(), unit)
        } else {
            write!(f, "{}+{}{}", self.re, self.im, unit)
        }
    }
}
