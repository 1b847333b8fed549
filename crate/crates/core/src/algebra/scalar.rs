//! The scalar contract and its two backends.
//!
//! Everything geometric in this crate is generic over [`Scalar`]. The
//! exact backend ([`num::BigRational`]) makes the porism identities
//! decidable with zero tolerance; the `f64` backend serves rendering and
//! speed and compares through a relative epsilon supplied by [`Ctx`].
//!
//! [`Ctx`]: super::Ctx

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Signed, ToPrimitive, Zero};
use serde_json::Value;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A real scalar usable as a coordinate.
///
/// Implementations must be a field (up to the usual float caveats) with
/// decidable sign. `EXACT` backends promise exact field operations and
/// exact equality; inexact backends implement [`Scalar::vanishes`]
/// relative to a scale chosen at the call site.
pub trait Scalar:
    Clone + PartialEq + PartialOrd + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    /// True when all field operations and comparisons are exact.
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(n: i64) -> Self;
    /// `num / den`; `den` must be nonzero.
    fn from_ratio(num: i64, den: i64) -> Self;
    /// Nearest representable value; exact on the rational backend
    /// (every finite float is a dyadic rational).
    fn from_f64_lossy(x: f64) -> Result<Self>;

    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    /// `rhs` must be nonzero.
    fn div(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn abs(&self) -> Self;

    fn is_zero(&self) -> bool;
    fn is_negative(&self) -> bool;

    /// Zero test against a caller-chosen scale: exact backends test
    /// `self == 0`, the float backend tests `|self| ≤ eps·|scale|`.
    fn vanishes(&self, scale: &Self, eps: f64) -> bool;

    fn to_f64(&self) -> f64;

    /// Point `(c, s)` with `c² + s² = 1`. Trigonometric on floats,
    /// rational `((1−t²)/(1+t²), 2t/(1+t²))` on the exact backend.
    fn circle_point(t: &Self) -> (Self, Self);

    /// Point `(c, s)` with `c² − s² = 1`. Hyperbolic-trigonometric on
    /// floats, rational `((1+t²)/(1−t²), 2t/(1−t²))` on the exact
    /// backend, where `|t| = 1` is a pole.
    fn hyperbola_point(t: &Self) -> Result<(Self, Self)>;

    /// Default sample grid for "∀X on the quadric" verdicts: angles
    /// `2πk/n` for the float circle, the uniform rational grid on
    /// `[−3, 3]` otherwise.
    fn sample_grid(circle: bool, n: usize) -> Vec<Self>;

    /// JSON leaf: a plain number on the float backend, a `"p/q"` string
    /// on the exact backend.
    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self>;

    /// Parse a CLI literal under this backend's rules.
    fn parse_str(s: &str) -> Result<Self>;

    fn backend_name() -> &'static str;
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn zero() -> f64 {
        0.0
    }
    fn one() -> f64 {
        1.0
    }
    fn from_int(n: i64) -> f64 {
        n as f64
    }
    fn from_ratio(num: i64, den: i64) -> f64 {
        assert!(den != 0, "zero denominator");
        num as f64 / den as f64
    }
    fn from_f64_lossy(x: f64) -> Result<f64> {
        if x.is_finite() {
            Ok(x)
        } else {
            Err(Error::InvalidInput("non-finite float".into()))
        }
    }

    fn add(&self, rhs: &f64) -> f64 {
        self + rhs
    }
    fn sub(&self, rhs: &f64) -> f64 {
        self - rhs
    }
    fn mul(&self, rhs: &f64) -> f64 {
        self * rhs
    }
    fn div(&self, rhs: &f64) -> f64 {
        self / rhs
    }
    fn neg(&self) -> f64 {
        -self
    }
    fn abs(&self) -> f64 {
        f64::abs(*self)
    }

    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn is_negative(&self) -> bool {
        *self < 0.0
    }

    fn vanishes(&self, scale: &f64, eps: f64) -> bool {
        f64::abs(*self) <= eps * f64::abs(*scale)
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn circle_point(t: &f64) -> (f64, f64) {
        (t.cos(), t.sin())
    }

    fn hyperbola_point(t: &f64) -> Result<(f64, f64)> {
        Ok((t.cosh(), t.sinh()))
    }

    fn sample_grid(circle: bool, n: usize) -> Vec<f64> {
        if n == 0 {
            return Vec::new();
        }
        if circle {
            (0..n)
                .map(|k| std::f64::consts::TAU * k as f64 / n as f64)
                .collect()
        } else if n == 1 {
            vec![0.0]
        } else {
            (0..n)
                .map(|k| -3.0 + 6.0 * k as f64 / (n - 1) as f64)
                .collect()
        }
    }

    fn to_json(&self) -> Value {
        serde_json::Number::from_f64(*self)
            .map(Value::Number)
            .unwrap_or(Value::Null)
    }

    fn from_json(v: &Value) -> Result<f64> {
        match v {
            Value::Number(n) => {
                let x = n
                    .as_f64()
                    .ok_or_else(|| Error::InvalidInput(format!("unrepresentable number {n}")))?;
                f64::from_f64_lossy(x)
            }
            Value::String(_) => Err(Error::InvalidInput(
                "rational string literal requires the exact backend (pass --exact)".into(),
            )),
            other => Err(Error::InvalidInput(format!("expected a number, got {other}"))),
        }
    }

    fn parse_str(s: &str) -> Result<f64> {
        let x: f64 = s
            .trim()
            .parse()
            .map_err(|_| Error::InvalidInput(format!("cannot parse {s:?} as a float")))?;
        f64::from_f64_lossy(x)
    }

    fn backend_name() -> &'static str {
        "float64"
    }
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn zero() -> BigRational {
        num::zero()
    }
    fn one() -> BigRational {
        num::one()
    }
    fn from_int(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn from_ratio(num: i64, den: i64) -> BigRational {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }
    fn from_f64_lossy(x: f64) -> Result<BigRational> {
        BigRational::from_float(x)
            .ok_or_else(|| Error::InvalidInput("non-finite float".into()))
    }

    fn add(&self, rhs: &BigRational) -> BigRational {
        self + rhs
    }
    fn sub(&self, rhs: &BigRational) -> BigRational {
        self - rhs
    }
    fn mul(&self, rhs: &BigRational) -> BigRational {
        self * rhs
    }
    fn div(&self, rhs: &BigRational) -> BigRational {
        self / rhs
    }
    fn neg(&self) -> BigRational {
        -self
    }
    fn abs(&self) -> BigRational {
        Signed::abs(self)
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }

    fn vanishes(&self, _scale: &BigRational, _eps: f64) -> bool {
        Zero::is_zero(self)
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn circle_point(t: &BigRational) -> (BigRational, BigRational) {
        let one: BigRational = num::one();
        let t2 = t * t;
        let den = &one + &t2;
        ((&one - &t2) / &den, (t + t) / den)
    }

    fn hyperbola_point(t: &BigRational) -> Result<(BigRational, BigRational)> {
        let one: BigRational = num::one();
        let t2 = t * t;
        let den = &one - &t2;
        if Zero::is_zero(&den) {
            return Err(Error::ParamSingular);
        }
        Ok(((&one + &t2) / &den, (t + t) / den))
    }

    fn sample_grid(_circle: bool, n: usize) -> Vec<BigRational> {
        if n == 0 {
            return Vec::new();
        }
        if n == 1 {
            return vec![num::zero()];
        }
        let m = (n - 1) as i64;
        (0..n as i64)
            .map(|k| <BigRational as Scalar>::from_ratio(6 * k - 3 * m, m))
            .collect()
    }

    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }

    fn from_json(v: &Value) -> Result<BigRational> {
        match v {
            Value::String(s) => <BigRational as Scalar>::parse_str(s),
            Value::Number(n) => {
                if let Some(i) = n.as_i64() {
                    Ok(<BigRational as Scalar>::from_int(i))
                } else {
                    Err(Error::InvalidInput(format!(
                        "non-integer number {n} mixes the float backend into an exact input; \
                         write it as a \"p/q\" string"
                    )))
                }
            }
            other => Err(Error::InvalidInput(format!("expected a scalar, got {other}"))),
        }
    }

    fn parse_str(s: &str) -> Result<BigRational> {
        BigRational::from_str(s.trim()).map_err(|_| {
            Error::InvalidInput(format!(
                "cannot parse {s:?} as an exact rational (use \"p/q\" or an integer)"
            ))
        })
    }

    fn backend_name() -> &'static str {
        "exact"
    }
}

/// Max of two scalars by value (ties resolved to the left).
pub(crate) fn smax<S: Scalar>(a: &S, b: &S) -> S {
    if b > a {
        b.clone()
    } else {
        a.clone()
    }
}
