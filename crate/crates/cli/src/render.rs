//! Deterministic SVG emission.
//!
//! Output is byte-identical for identical inputs: coordinates are
//! written with exactly 9 decimal places, negative zero is normalized,
//! and element groups are emitted in a fixed order — quadric, line,
//! path, points, labels.

use std::fmt::Write as _;

use porism_core::{
    invert_configuration, invert_point, trace_path, AlgebraKind, Configuration, Ctx, Duplex,
    Error, Scalar, Sign,
};

const CANVAS: f64 = 800.0;

#[derive(Clone, Copy)]
struct Viewport {
    xmin: f64,
    xmax: f64,
    ymin: f64,
    ymax: f64,
}

const PLAIN_VIEW: Viewport = Viewport { xmin: -3.0, xmax: 3.0, ymin: -3.0, ymax: 3.0 };
const INVERT_VIEW: Viewport = Viewport { xmin: -6.0, xmax: 6.0, ymin: -6.0, ymax: 6.0 };

impl Viewport {
    fn px(&self, x: f64) -> f64 {
        (x - self.xmin) / (self.xmax - self.xmin) * CANVAS
    }

    /// SVG y grows downward; flip at write time.
    fn py(&self, y: f64) -> f64 {
        (self.ymax - y) / (self.ymax - self.ymin) * CANVAS
    }

    fn scale_x(&self) -> f64 {
        CANVAS / (self.xmax - self.xmin)
    }
}

/// Fixed 9-decimal coordinate with `-0` collapsed.
fn fmt(x: f64) -> String {
    let s = format!("{x:.9}");
    if s.starts_with('-') && s[1..].chars().all(|c| c == '0' || c == '.') {
        s[1..].to_string()
    } else {
        s
    }
}

fn sweep_parameter(kind: AlgebraKind, k: usize, frames: usize) -> f64 {
    if kind == AlgebraKind::Complex {
        std::f64::consts::TAU * k as f64 / frames as f64
    } else {
        -1.5 + 3.0 * k as f64 / frames as f64
    }
}

fn header(out: &mut String) {
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    out.push_str(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" viewBox=\"0 0 800 800\">\n",
    );
}

fn dot(out: &mut String, vp: &Viewport, x: f64, y: f64, r: f64, class: &str) {
    let _ = writeln!(
        out,
        "<circle class=\"{class}\" cx=\"{}\" cy=\"{}\" r=\"{}\"/>",
        fmt(vp.px(x)),
        fmt(vp.py(y)),
        fmt(r)
    );
}

fn polyline(out: &mut String, vp: &Viewport, pts: &[(f64, f64)], closed: bool) {
    if pts.is_empty() {
        return;
    }
    let coords: Vec<String> = pts
        .iter()
        .map(|(x, y)| format!("{},{}", fmt(vp.px(*x)), fmt(vp.py(*y))))
        .collect();
    let tag = if closed { "polygon" } else { "polyline" };
    let _ = writeln!(out, "<{tag} points=\"{}\"/>", coords.join(" "));
}

/// Clip the infinite line `base + t·dir` to the viewport.
fn clip_line(vp: &Viewport, base: (f64, f64), dir: (f64, f64)) -> Option<((f64, f64), (f64, f64))> {
    let mut t0 = f64::NEG_INFINITY;
    let mut t1 = f64::INFINITY;
    for (p, lo, hi) in [
        (dir.0, vp.xmin - base.0, vp.xmax - base.0),
        (dir.1, vp.ymin - base.1, vp.ymax - base.1),
    ] {
        if p == 0.0 {
            if lo > 0.0 || hi < 0.0 {
                return None;
            }
        } else {
            let (a, b) = (lo / p, hi / p);
            let (a, b) = if a <= b { (a, b) } else { (b, a) };
            t0 = t0.max(a);
            t1 = t1.min(b);
        }
    }
    if t0 > t1 || !t0.is_finite() || !t1.is_finite() {
        return None;
    }
    Some((
        (base.0 + t0 * dir.0, base.1 + t0 * dir.1),
        (base.0 + t1 * dir.0, base.1 + t1 * dir.1),
    ))
}

fn quadric_outline(out: &mut String, vp: &Viewport, kind: AlgebraKind, sigma: Sign) {
    match (kind, sigma) {
        (AlgebraKind::Complex, _) => {
            let _ = writeln!(
                out,
                "<circle cx=\"{}\" cy=\"{}\" r=\"{}\"/>",
                fmt(vp.px(0.0)),
                fmt(vp.py(0.0)),
                fmt(vp.scale_x())
            );
        }
        (AlgebraKind::Hyperbolic, sigma) => {
            for sheet in [1.0, -1.0] {
                let pts: Vec<(f64, f64)> = (0..=64)
                    .map(|i| {
                        let u = -2.5 + 5.0 * i as f64 / 64.0;
                        match sigma {
                            Sign::Plus => (sheet * u.cosh(), u.sinh()),
                            Sign::Minus => (u.sinh(), sheet * u.cosh()),
                        }
                    })
                    .collect();
                polyline(out, vp, &pts, false);
            }
        }
        (AlgebraKind::Dual, _) => {
            for x in [1.0, -1.0] {
                let _ = writeln!(
                    out,
                    "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
                    fmt(vp.px(x)),
                    fmt(vp.py(vp.ymin)),
                    fmt(vp.px(x)),
                    fmt(vp.py(vp.ymax))
                );
            }
        }
    }
}

fn line_element<S: Scalar>(out: &mut String, vp: &Viewport, cfg: &Configuration<S>) {
    let base = cfg.line.base.to_f64_pair();
    let dir = cfg.line.dir.to_f64_pair();
    if let Some((a, b)) = clip_line(vp, base, dir) {
        let _ = writeln!(
            out,
            "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
            fmt(vp.px(a.0)),
            fmt(vp.py(a.1)),
            fmt(vp.px(b.0)),
            fmt(vp.py(b.1))
        );
    }
}

fn labels<S: Scalar>(out: &mut String, vp: &Viewport, points: &[Duplex<S>]) {
    for (i, p) in points.iter().enumerate() {
        let (x, y) = p.to_f64_pair();
        let _ = writeln!(
            out,
            "<text x=\"{}\" y=\"{}\">P{}</text>",
            fmt(vp.px(x) + 8.0),
            fmt(vp.py(y) - 8.0),
            i + 1
        );
    }
}

/// One frame of the inscribed-path family: the path starting at the
/// quadric point of the frame's sweep parameter.
pub fn render_frame<S: Scalar>(
    cfg: &Configuration<S>,
    k: usize,
    frames: usize,
    ctx: &Ctx,
) -> Result<String, Error> {
    let vp = PLAIN_VIEW;
    let mut out = String::new();
    header(&mut out);

    out.push_str("<g class=\"quadric\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\">\n");
    quadric_outline(&mut out, &vp, cfg.quadric.kind(), cfg.quadric.sigma());
    out.push_str("</g>\n");

    out.push_str("<g class=\"line\" stroke=\"#2ca02c\" stroke-width=\"1\">\n");
    line_element(&mut out, &vp, cfg);
    out.push_str("</g>\n");

    let t = sweep_parameter(cfg.quadric.kind(), k, frames);
    let vertices = S::from_f64_lossy(t)
        .and_then(|ts| trace_path(cfg, &ts, ctx))
        .map(|vs| vs.iter().map(Duplex::to_f64_pair).collect::<Vec<_>>());
    out.push_str("<g class=\"path\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"1.2\">\n");
    if let Ok(vs) = &vertices {
        polyline(&mut out, &vp, vs, true);
    }
    out.push_str("</g>\n");

    out.push_str("<g class=\"points\" fill=\"#333333\" stroke=\"none\">\n");
    for p in &cfg.points {
        let (x, y) = p.to_f64_pair();
        dot(&mut out, &vp, x, y, 4.0, "rev");
    }
    if let Ok(vs) = &vertices {
        for (x, y) in vs {
            dot(&mut out, &vp, *x, *y, 2.5, "vertex");
        }
    }
    out.push_str("</g>\n");

    out.push_str("<g class=\"labels\" font-family=\"monospace\" font-size=\"14\" fill=\"#333333\">\n");
    labels(&mut out, &vp, &cfg.points);
    out.push_str("</g>\n");

    out.push_str("</svg>\n");
    Ok(out)
}

/// One frame of the inverted configuration: image point sets of the
/// quadric, the line and the reversion points, plus the inverted
/// inscribed path for the frame's sweep parameter.
pub fn render_inverted_frame<S: Scalar>(
    cfg: &Configuration<S>,
    center: &Duplex<S>,
    radius: &S,
    k: usize,
    frames: usize,
    ctx: &Ctx,
) -> Result<String, Error> {
    let vp = INVERT_VIEW;
    let grid = S::sample_grid(cfg.quadric.kind() == AlgebraKind::Complex, 64);
    let inverted = invert_configuration(cfg, center, radius, &grid, ctx)?;

    let mut out = String::new();
    header(&mut out);

    out.push_str("<g class=\"quadric\" fill=\"#1f77b4\" stroke=\"none\">\n");
    let (cx, cy) = center.to_f64_pair();
    let _ = writeln!(
        out,
        "<circle class=\"inversion-circle\" cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"none\" stroke=\"#999999\" stroke-width=\"1\" stroke-dasharray=\"4 3\"/>",
        fmt(vp.px(cx)),
        fmt(vp.py(cy)),
        fmt(radius.to_f64() * vp.scale_x())
    );
    for z in &inverted.quadric_images {
        let (x, y) = z.to_f64_pair();
        dot(&mut out, &vp, x, y, 2.0, "image-quadric");
    }
    out.push_str("</g>\n");

    out.push_str("<g class=\"line\" fill=\"#2ca02c\" stroke=\"none\">\n");
    for z in &inverted.line_images {
        let (x, y) = z.to_f64_pair();
        dot(&mut out, &vp, x, y, 2.0, "image-line");
    }
    out.push_str("</g>\n");

    let t = sweep_parameter(cfg.quadric.kind(), k, frames);
    let path_images = S::from_f64_lossy(t)
        .and_then(|ts| trace_path(cfg, &ts, ctx))
        .and_then(|vs| {
            vs.iter()
                .map(|v| invert_point(v, center, radius, ctx).map(|w| w.to_f64_pair()))
                .collect::<Result<Vec<_>, _>>()
        });
    out.push_str("<g class=\"path\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"1.2\">\n");
    if let Ok(vs) = &path_images {
        polyline(&mut out, &vp, vs, true);
    }
    out.push_str("</g>\n");

    out.push_str("<g class=\"points\" fill=\"#333333\" stroke=\"none\">\n");
    for z in &inverted.point_images {
        let (x, y) = z.to_f64_pair();
        dot(&mut out, &vp, x, y, 4.0, "rev");
    }
    out.push_str("</g>\n");

    out.push_str("<g class=\"labels\" font-family=\"monospace\" font-size=\"14\" fill=\"#333333\">\n");
    labels(&mut out, &vp, &inverted.point_images);
    out.push_str("</g>\n");

    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fmt_is_fixed_width_and_signless_zero() {
        assert_eq!(fmt(0.0), "0.000000000");
        assert_eq!(fmt(-0.0), "0.000000000");
        assert_eq!(fmt(-1e-12), "0.000000000");
        assert_eq!(fmt(1.5), "1.500000000");
        assert_eq!(fmt(-2.25), "-2.250000000");
    }

    #[test]
    fn clip_line_inside_and_outside() {
        let vp = PLAIN_VIEW;
        let got = clip_line(&vp, (0.0, 0.25), (1.0, 0.0)).unwrap();
        assert_eq!(got, ((-3.0, 0.25), (3.0, 0.25)));
        assert!(clip_line(&vp, (0.0, 5.0), (1.0, 0.0)).is_none());
    }
}
