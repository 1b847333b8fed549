//! Subcommand bodies, generic over the scalar backend.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use porism_core::json as wire;
use porism_core::{
    axis_add, axis_add_closed_form, chain_reduce, fourth_point, porism_check, reduce_word,
    AlgebraKind, ChainReduction, Configuration, Ctx, Duplex, Error, Line, QuadricBranch,
    Rational, Scalar, Sign,
};

use crate::render;

/// Result JSON plus process exit code, or a domain error.
pub type Outcome = Result<(String, u8), Error>;

pub enum CmdError {
    Core(Error),
    Io(String),
}

impl From<Error> for CmdError {
    fn from(e: Error) -> CmdError {
        CmdError::Core(e)
    }
}

const ORDER_NOTE: &str =
    "path X -> P(X) -> QP(X) -> RQP(X) closes through s, for points (p, q, r) in input order";

pub fn cmd_fourth_point(v: &Value, ctx: &Ctx, exact: bool) -> Outcome {
    if exact {
        fourth_point_t::<Rational>(v, ctx)
    } else {
        fourth_point_t::<f64>(v, ctx)
    }
}

fn fourth_point_t<S: Scalar>(v: &Value, ctx: &Ctx) -> Outcome {
    let cfg: Configuration<S> = wire::config_from_value(v)?;
    let [p, q, r] = cfg.points.as_slice() else {
        return Err(Error::InvalidInput(format!(
            "fourth-point expects exactly 3 points, got {}",
            cfg.points.len()
        )));
    };
    cfg.validate(ctx)?;
    let s = fourth_point(p, q, r, &cfg.quadric, ctx)?;
    let report = json!({
        "s": wire::duplex_to_value(&s),
        "order": ORDER_NOTE,
        "backend": S::backend_name(),
    });
    Ok((report.to_string(), 0))
}

pub fn cmd_check(v: &Value, ctx: &Ctx, exact: bool) -> Outcome {
    if exact {
        check_t::<Rational>(v, ctx)
    } else {
        check_t::<f64>(v, ctx)
    }
}

fn check_t<S: Scalar>(v: &Value, ctx: &Ctx) -> Outcome {
    let cfg: Configuration<S> = wire::config_from_value(v)?;
    let verdict = porism_check(&cfg, ctx)?;
    let code = if verdict.closed { 0 } else { 4 };
    Ok((wire::verdict_to_value(&verdict).to_string(), code))
}

pub fn cmd_reduce(v: &Value, ctx: &Ctx, exact: bool) -> Outcome {
    if exact {
        reduce_t::<Rational>(v, ctx)
    } else {
        reduce_t::<f64>(v, ctx)
    }
}

fn reduce_t<S: Scalar>(v: &Value, ctx: &Ctx) -> Outcome {
    let cfg: Configuration<S> = wire::config_from_value(v)?;
    cfg.validate(ctx)?;
    if cfg.points.len() % 2 == 1 {
        let point = reduce_word(&cfg.points, &cfg.quadric, ctx)?;
        let report = json!({ "point": wire::duplex_to_value(&point) });
        return Ok((report.to_string(), 0));
    }
    match chain_reduce(&cfg.points, &cfg.quadric, ctx)? {
        ChainReduction::Identity => Ok((json!({ "identity": true }).to_string(), 0)),
        ChainReduction::Pair(a, b) => {
            let report = json!({
                "identity": false,
                "pair": [wire::duplex_to_value(&a), wire::duplex_to_value(&b)],
            });
            Ok((report.to_string(), 4))
        }
    }
}

pub fn cmd_add<S: Scalar>(kind: &str, a: &str, b: &str, ctx: &Ctx) -> Outcome {
    let kind = AlgebraKind::parse(kind)
        .ok_or_else(|| Error::InvalidInput(format!("unknown algebra kind {kind:?}")))?;
    let a = S::parse_str(a)?;
    let b = S::parse_str(b)?;
    let geometric = axis_add(kind, &a, &b, ctx)?;
    let closed_form = axis_add_closed_form(kind, &a, &b, ctx)?;
    let difference = geometric.sub(&closed_form);
    let report = json!({
        "kind": kind.name(),
        "a": a.to_json(),
        "b": b.to_json(),
        "geometric": geometric.to_json(),
        "closed_form": closed_form.to_json(),
        "difference": difference.to_json(),
        "backend": S::backend_name(),
    });
    Ok((report.to_string(), 0))
}

pub fn cmd_render<S: Scalar>(
    v: &Value,
    frames: usize,
    out_dir: &str,
    invert: Option<&str>,
    ctx: &Ctx,
) -> Result<String, CmdError> {
    if frames == 0 {
        return Err(Error::InvalidInput("--frames must be at least 1".into()).into());
    }
    let cfg: Configuration<S> = wire::config_from_value(v)?;
    cfg.validate(ctx)?;
    let inversion = match invert {
        Some(spec) => Some(parse_inversion::<S>(spec)?),
        None => None,
    };
    std::fs::create_dir_all(out_dir)
        .map_err(|e| CmdError::Io(format!("cannot create {out_dir}: {e}")))?;

    let mut files = Vec::with_capacity(frames);
    for k in 0..frames {
        let svg = match &inversion {
            None => render::render_frame(&cfg, k, frames, ctx)?,
            Some((center, radius)) => {
                render::render_inverted_frame(&cfg, center, radius, k, frames, ctx)?
            }
        };
        let name = format!("frame-{k:04}.svg");
        let path = std::path::Path::new(out_dir).join(&name);
        std::fs::write(&path, svg)
            .map_err(|e| CmdError::Io(format!("cannot write {}: {e}", path.display())))?;
        files.push(name);
    }
    Ok(json!({ "frames": frames, "out": out_dir, "files": files }).to_string())
}

/// Parse `"<center>,<radius>"` with a complex literal center such as
/// `1.2+0i`, `-3/2+1/4i` (exact backend) or `2i`.
fn parse_inversion<S: Scalar>(spec: &str) -> Result<(Duplex<S>, S), Error> {
    let (center_raw, radius_raw) = spec.rsplit_once(',').ok_or_else(|| {
        Error::InvalidInput(format!("--invert expects \"<center>,<radius>\", got {spec:?}"))
    })?;
    let (re, im) = parse_complex_literal::<S>(center_raw)?;
    let radius = S::parse_str(radius_raw)?;
    Ok((Duplex::new(re, im, AlgebraKind::Complex), radius))
}

fn parse_complex_literal<S: Scalar>(s: &str) -> Result<(S, S), Error> {
    let t = s.trim();
    let Some(body) = t.strip_suffix('i') else {
        return Ok((S::parse_str(t)?, S::zero()));
    };
    let bytes = body.as_bytes();
    let mut split = None;
    for idx in (1..bytes.len()).rev() {
        let c = bytes[idx] as char;
        if c == '+' || c == '-' {
            let prev = bytes[idx - 1] as char;
            if prev != 'e' && prev != 'E' {
                split = Some(idx);
                break;
            }
        }
    }
    match split {
        Some(idx) => {
            let re = S::parse_str(&body[..idx])?;
            let im = match &body[idx..] {
                "+" => S::one(),
                "-" => S::one().neg(),
                other => S::parse_str(other)?,
            };
            Ok((re, im))
        }
        None => {
            let im = match body {
                "" | "+" => S::one(),
                "-" => S::one().neg(),
                other => S::parse_str(other)?,
            };
            Ok((S::zero(), im))
        }
    }
}

pub fn cmd_demo<S: Scalar>(kind: &str, sigma: i64, n_points: usize, seed: u64, ctx: &Ctx) -> Outcome {
    let kind = AlgebraKind::parse(kind)
        .ok_or_else(|| Error::InvalidInput(format!("unknown algebra kind {kind:?}")))?;
    let sigma = Sign::from_i64(sigma)
        .ok_or_else(|| Error::InvalidInput(format!("--sigma must be +1 or -1, got {sigma}")))?;
    if n_points < 2 || n_points % 2 == 1 {
        return Err(Error::InvalidInput(format!(
            "--points must be an even count >= 2, got {n_points}"
        )));
    }
    let quadric = QuadricBranch::new(kind, sigma)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    // Rejection-sample whole configurations until the closing reduction
    // succeeds and every point is usable.
    'outer: for _ in 0..1000 {
        let small = |rng: &mut ChaCha8Rng| -> S {
            S::from_ratio(rng.gen_range(-24..=24), rng.gen_range(1..=8))
        };
        let base = Duplex::new(small(&mut rng), small(&mut rng), kind);
        let dir = Duplex::new(small(&mut rng), small(&mut rng), kind);
        if dir.is_zero() {
            continue;
        }
        let line = Line::new(base, dir)?;
        let mut points = Vec::with_capacity(n_points);
        for _ in 0..n_points - 1 {
            let mut placed = false;
            for _ in 0..50 {
                let p = line.point_at(&small(&mut rng));
                if !quadric.contains(&p, ctx) {
                    points.push(p);
                    placed = true;
                    break;
                }
            }
            if !placed {
                continue 'outer;
            }
        }
        let Ok(closing) = reduce_word(&points, &quadric, ctx) else {
            continue;
        };
        if quadric.contains(&closing, ctx) || !line.contains(&closing, ctx) {
            continue;
        }
        points.push(closing);
        let cfg = Configuration::new(quadric, line, points, Vec::new())?;
        cfg.validate(ctx)?;
        return Ok((wire::config_to_value(&cfg).to_string(), 0));
    }
    Err(Error::InvalidInput(
        "could not generate a closing configuration (try another --seed)".into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_literal_forms() {
        let (re, im) = parse_complex_literal::<f64>("1.2+0i").unwrap();
        assert_eq!((re, im), (1.2, 0.0));
        let (re, im) = parse_complex_literal::<f64>("-0.5-2i").unwrap();
        assert_eq!((re, im), (-0.5, -2.0));
        let (re, im) = parse_complex_literal::<f64>("3").unwrap();
        assert_eq!((re, im), (3.0, 0.0));
        let (re, im) = parse_complex_literal::<f64>("-i").unwrap();
        assert_eq!((re, im), (0.0, -1.0));
        let (re, im) = parse_complex_literal::<f64>("1e-2+1e-3i").unwrap();
        assert_eq!((re, im), (0.01, 0.001));
        let (re, im) = parse_complex_literal::<Rational>("-3/2+1/4i").unwrap();
        assert_eq!(re, <Rational as Scalar>::from_ratio(-3, 2));
        assert_eq!(im, <Rational as Scalar>::from_ratio(1, 4));
    }
}
