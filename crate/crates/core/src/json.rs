//! JSON interchange for every wire type, over `serde_json::Value`.
//!
//! Scalars are backend-tagged by syntax: plain numbers belong to the
//! float backend, `"p/q"` strings to the exact one (integers parse under
//! both). Each backend rejects the other's leaves, so a document mixing
//! the two syntaxes fails to parse whichever backend is selected.

use serde_json::{json, Map, Value};

use crate::algebra::{AlgebraKind, Duplex, Scalar, Sign};
use crate::error::{Error, Result};
use crate::matrix::Mat2;
use crate::porism::{Configuration, PorismVerdict, SkippedSample, Witness};
use crate::quadric::{Line, QuadricBranch};

fn obj<'a>(v: &'a Value, what: &str) -> Result<&'a Map<String, Value>> {
    v.as_object()
        .ok_or_else(|| Error::InvalidInput(format!("{what} must be a JSON object")))
}

fn field<'a>(m: &'a Map<String, Value>, key: &str, what: &str) -> Result<&'a Value> {
    m.get(key)
        .ok_or_else(|| Error::InvalidInput(format!("{what} is missing field {key:?}")))
}

pub fn duplex_to_value<S: Scalar>(z: &Duplex<S>) -> Value {
    json!({
        "re": z.re.to_json(),
        "im": z.im.to_json(),
        "kind": z.kind.name(),
    })
}

pub fn duplex_from_value<S: Scalar>(v: &Value) -> Result<Duplex<S>> {
    let m = obj(v, "duplex")?;
    let kind_name = field(m, "kind", "duplex")?
        .as_str()
        .ok_or_else(|| Error::InvalidInput("duplex kind must be a string".into()))?;
    let kind = AlgebraKind::parse(kind_name)
        .ok_or_else(|| Error::InvalidInput(format!("unknown algebra kind {kind_name:?}")))?;
    let re = S::from_json(field(m, "re", "duplex")?)?;
    let im = S::from_json(field(m, "im", "duplex")?)?;
    Ok(Duplex::new(re, im, kind))
}

pub fn quadric_to_value(q: &QuadricBranch) -> Value {
    json!({ "kind": q.kind().name(), "sigma": q.sigma().as_i64() })
}

pub fn quadric_from_value(v: &Value) -> Result<QuadricBranch> {
    let m = obj(v, "quadric")?;
    let kind_name = field(m, "kind", "quadric")?
        .as_str()
        .ok_or_else(|| Error::InvalidInput("quadric kind must be a string".into()))?;
    let kind = AlgebraKind::parse(kind_name)
        .ok_or_else(|| Error::InvalidInput(format!("unknown algebra kind {kind_name:?}")))?;
    let sigma_raw = field(m, "sigma", "quadric")?
        .as_i64()
        .ok_or_else(|| Error::InvalidInput("quadric sigma must be an integer".into()))?;
    let sigma = Sign::from_i64(sigma_raw)
        .ok_or_else(|| Error::InvalidInput(format!("sigma must be +1 or -1, got {sigma_raw}")))?;
    QuadricBranch::new(kind, sigma)
}

pub fn line_to_value<S: Scalar>(l: &Line<S>) -> Value {
    json!({ "base": duplex_to_value(&l.base), "dir": duplex_to_value(&l.dir) })
}

pub fn line_from_value<S: Scalar>(v: &Value) -> Result<Line<S>> {
    let m = obj(v, "line")?;
    Line::new(
        duplex_from_value(field(m, "base", "line")?)?,
        duplex_from_value(field(m, "dir", "line")?)?,
    )
}

pub fn mat2_to_value<S: Scalar>(m: &Mat2<S>) -> Value {
    json!({
        "m11": duplex_to_value(&m.m11),
        "m12": duplex_to_value(&m.m12),
        "m21": duplex_to_value(&m.m21),
        "m22": duplex_to_value(&m.m22),
    })
}

pub fn mat2_from_value<S: Scalar>(v: &Value) -> Result<Mat2<S>> {
    let m = obj(v, "matrix")?;
    let m11: Duplex<S> = duplex_from_value(field(m, "m11", "matrix")?)?;
    let m12 = duplex_from_value(field(m, "m12", "matrix")?)?;
    let m21 = duplex_from_value(field(m, "m21", "matrix")?)?;
    let m22 = duplex_from_value(field(m, "m22", "matrix")?)?;
    if m11.kind != m12.kind || m11.kind != m21.kind || m11.kind != m22.kind {
        return Err(Error::InvalidInput("matrix entries must share one kind".into()));
    }
    Ok(Mat2::new(m11, m12, m21, m22))
}

pub fn config_to_value<S: Scalar>(cfg: &Configuration<S>) -> Value {
    json!({
        "quadric": quadric_to_value(&cfg.quadric),
        "line": line_to_value(&cfg.line),
        "points": cfg.points.iter().map(duplex_to_value).collect::<Vec<_>>(),
        "samples": cfg.samples.iter().map(|s| s.to_json()).collect::<Vec<_>>(),
    })
}

/// Parse a configuration. `line` and `samples` are optional: a missing
/// line is derived from the points, missing samples default at check
/// time.
pub fn config_from_value<S: Scalar>(v: &Value) -> Result<Configuration<S>> {
    let m = obj(v, "configuration")?;
    let quadric = quadric_from_value(field(m, "quadric", "configuration")?)?;
    let points_raw = field(m, "points", "configuration")?
        .as_array()
        .ok_or_else(|| Error::InvalidInput("points must be an array".into()))?;
    let points = points_raw
        .iter()
        .map(duplex_from_value)
        .collect::<Result<Vec<Duplex<S>>>>()?;
    let samples = match m.get("samples") {
        None | Some(Value::Null) => Vec::new(),
        Some(Value::Array(ts)) => ts.iter().map(S::from_json).collect::<Result<Vec<S>>>()?,
        Some(other) => {
            return Err(Error::InvalidInput(format!("samples must be an array, got {other}")))
        }
    };
    match m.get("line") {
        None | Some(Value::Null) => Configuration::from_points(quadric, points, samples),
        Some(lv) => Configuration::new(quadric, line_from_value(lv)?, points, samples),
    }
}

pub fn verdict_to_value<S: Scalar>(v: &PorismVerdict<S>) -> Value {
    json!({
        "closed": v.closed,
        "matrix_identity": v.matrix_identity,
        "max_residual": v.max_residual.to_json(),
        "witness": match &v.witness {
            Some(w) => json!({ "t": w.t.to_json(), "residual": w.residual.to_json() }),
            None => Value::Null,
        },
        "skipped_samples": v
            .skipped
            .iter()
            .map(|s| json!({ "t": s.t.to_json(), "reason": s.reason }))
            .collect::<Vec<_>>(),
    })
}

pub fn verdict_from_value<S: Scalar>(v: &Value) -> Result<PorismVerdict<S>> {
    let m = obj(v, "verdict")?;
    let closed = field(m, "closed", "verdict")?
        .as_bool()
        .ok_or_else(|| Error::InvalidInput("closed must be a bool".into()))?;
    let matrix_identity = field(m, "matrix_identity", "verdict")?
        .as_bool()
        .ok_or_else(|| Error::InvalidInput("matrix_identity must be a bool".into()))?;
    let max_residual = S::from_json(field(m, "max_residual", "verdict")?)?;
    let witness = match field(m, "witness", "verdict")? {
        Value::Null => None,
        w => {
            let wm = obj(w, "witness")?;
            Some(Witness {
                t: S::from_json(field(wm, "t", "witness")?)?,
                residual: S::from_json(field(wm, "residual", "witness")?)?,
            })
        }
    };
    let skipped = match field(m, "skipped_samples", "verdict")? {
        Value::Array(items) => items
            .iter()
            .map(|s| -> Result<SkippedSample<S>> {
                let sm = obj(s, "skipped sample")?;
                Ok(SkippedSample {
                    t: S::from_json(field(sm, "t", "skipped sample")?)?,
                    reason: field(sm, "reason", "skipped sample")?
                        .as_str()
                        .ok_or_else(|| Error::InvalidInput("reason must be a string".into()))?
                        .to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?,
        other => {
            return Err(Error::InvalidInput(format!(
                "skipped_samples must be an array, got {other}"
            )))
        }
    };
    Ok(PorismVerdict { closed, matrix_identity, max_residual, witness, skipped })
}

/// True when any scalar-position leaf of the document is a rational
/// string, which routes the whole document to the exact backend.
pub fn uses_exact_scalars(v: &Value) -> bool {
    fn scan(v: &Value, found: &mut bool) {
        match v {
            Value::Object(m) => {
                for (k, val) in m {
                    match k.as_str() {
                        "re" | "im" => {
                            if val.is_string() {
                                *found = true;
                            }
                        }
                        "samples" => {
                            if let Value::Array(ts) = val {
                                if ts.iter().any(Value::is_string) {
                                    *found = true;
                                }
                            }
                        }
                        _ => scan(val, found),
                    }
                }
            }
            Value::Array(items) => items.iter().for_each(|x| scan(x, found)),
            _ => {}
        }
    }
    let mut found = false;
    scan(v, &mut found);
    found
}
