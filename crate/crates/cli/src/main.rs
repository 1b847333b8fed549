//! `porism-lab` — command-line front end for the reversion calculus.
//!
//! Subcommands read Configuration JSON (file or stdin), write result
//! JSON to stdout and machine-readable errors to stderr. Exit codes:
//! 0 success/closed, 1 I/O-or-parse, 2 validation, 3 degenerate math,
//! 4 porism-not-closed.

mod commands;
mod render;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use porism_core::{Ctx, Error};

#[derive(Parser)]
#[command(name = "porism-lab", version, about = "Reversion-calculus porism laboratory")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct CommonOpts {
    /// Force the exact rational backend (rejects non-integer decimal
    /// literals; plain numbers otherwise select the float backend).
    #[arg(long)]
    exact: bool,
    /// Relative tolerance for float-backend predicates. Overrides the
    /// PORISM_EPS environment variable; default 1e-9.
    #[arg(long)]
    eps: Option<f64>,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the unique fourth point closing paths through a collinear triple.
    FourthPoint {
        /// Configuration JSON file with exactly three points ("-" for stdin).
        #[arg(default_value = "-")]
        input: String,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Verify porism closure for an even chain of reversion points.
    Check {
        #[arg(default_value = "-")]
        input: String,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Reduce a chain of reversions: even chains to identity-or-pair,
    /// odd chains to a single reversion point.
    Reduce {
        #[arg(default_value = "-")]
        input: String,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Geometric axis addition, with the closed form for audit.
    Add {
        /// Algebra: complex, hyperbolic or dual.
        kind: String,
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Render SVG frames of the inscribed-path family.
    Render {
        #[arg(default_value = "-")]
        input: String,
        /// Number of frames; the path start sweeps the quadric uniformly.
        #[arg(long, default_value_t = 1)]
        frames: usize,
        /// Output directory for frame-NNNN.svg files.
        #[arg(long, default_value = ".")]
        out: String,
        /// Render the configuration inverted in the circle "<center>,<radius>",
        /// e.g. "1.2+0i,1".
        #[arg(long)]
        invert: Option<String>,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Emit a random closed configuration as Configuration JSON.
    Demo {
        /// Algebra: complex, hyperbolic or dual.
        #[arg(long, default_value = "complex")]
        kind: String,
        /// Quadric branch sign (hyperbolic only; +1 or -1).
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        sigma: i64,
        /// Even number of reversion points in the chain.
        #[arg(long, default_value_t = 4)]
        points: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        common: CommonOpts,
    },
}

/// Exit-code taxonomy shared by every subcommand.
fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::InvalidInput(_)
        | Error::KindMismatch(..)
        | Error::InvalidBranch { .. }
        | Error::NotCollinear
        | Error::OddChain
        | Error::EmptyChain => 2,
        Error::ZeroDivisor
        | Error::NonInvertibleDenominator
        | Error::NotAReversion
        | Error::NonInvertiblePivot
        | Error::NotPseudoUnitary
        | Error::OffQuadric
        | Error::NullDirection
        | Error::CenterPole
        | Error::DegeneratePoint
        | Error::PoleAtFormulaSingularity
        | Error::ParamSingular => 3,
    }
}

fn fail(err: Error) -> ExitCode {
    let code = exit_code_for(&err);
    let report = serde_json::json!({
        "error": { "exit": code, "kind": err.name(), "message": err.to_string() }
    });
    eprintln!("{report}");
    ExitCode::from(code)
}

fn fail_io(message: String) -> ExitCode {
    let report = serde_json::json!({
        "error": { "exit": 1, "kind": "Io", "message": message }
    });
    eprintln!("{report}");
    ExitCode::from(1)
}

fn resolve_ctx(common: &CommonOpts) -> Result<Ctx, Error> {
    if let Some(eps) = common.eps {
        if !(eps.is_finite() && eps >= 0.0) {
            return Err(Error::InvalidInput(format!("--eps must be a finite nonnegative float, got {eps}")));
        }
        return Ok(Ctx::new(eps));
    }
    if let Ok(raw) = std::env::var("PORISM_EPS") {
        let eps: f64 = raw
            .parse()
            .map_err(|_| Error::InvalidInput(format!("PORISM_EPS is not a float: {raw:?}")))?;
        if !(eps.is_finite() && eps >= 0.0) {
            return Err(Error::InvalidInput(format!("PORISM_EPS must be nonnegative, got {eps}")));
        }
        return Ok(Ctx::new(eps));
    }
    Ok(Ctx::default())
}

fn read_input(path: &str) -> Result<String, ExitCode> {
    let data = if path == "-" {
        use std::io::Read;
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map(|_| buf)
            .map_err(|e| fail_io(format!("cannot read stdin: {e}")))?
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| fail_io(format!("cannot read {path}: {e}")))?
    };
    Ok(data)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::FourthPoint { input, common } => dispatch_json(&input, &common, commands::cmd_fourth_point),
        Command::Check { input, common } => dispatch_json(&input, &common, commands::cmd_check),
        Command::Reduce { input, common } => dispatch_json(&input, &common, commands::cmd_reduce),
        Command::Add { kind, a, b, common } => {
            let ctx = match resolve_ctx(&common) {
                Ok(c) => c,
                Err(e) => return fail(e),
            };
            let exact = common.exact || a.contains('/') || b.contains('/');
            let outcome = if exact {
                commands::cmd_add::<porism_core::Rational>(&kind, &a, &b, &ctx)
            } else {
                commands::cmd_add::<f64>(&kind, &a, &b, &ctx)
            };
            finish(outcome)
        }
        Command::Render { input, frames, out, invert, common } => {
            let ctx = match resolve_ctx(&common) {
                Ok(c) => c,
                Err(e) => return fail(e),
            };
            let data = match read_input(&input) {
                Ok(d) => d,
                Err(code) => return code,
            };
            let value: serde_json::Value = match serde_json::from_str(&data) {
                Ok(v) => v,
                Err(e) => return fail_io(format!("JSON parse error: {e}")),
            };
            let exact = common.exact || porism_core::json::uses_exact_scalars(&value);
            let outcome = if exact {
                commands::cmd_render::<porism_core::Rational>(&value, frames, &out, invert.as_deref(), &ctx)
            } else {
                commands::cmd_render::<f64>(&value, frames, &out, invert.as_deref(), &ctx)
            };
            match outcome {
                Ok(report) => {
                    println!("{report}");
                    ExitCode::SUCCESS
                }
                Err(commands::CmdError::Core(e)) => fail(e),
                Err(commands::CmdError::Io(msg)) => fail_io(msg),
            }
        }
        Command::Demo { kind, sigma, points, seed, common } => {
            let ctx = match resolve_ctx(&common) {
                Ok(c) => c,
                Err(e) => return fail(e),
            };
            let outcome = if common.exact {
                commands::cmd_demo::<porism_core::Rational>(&kind, sigma, points, seed, &ctx)
            } else {
                commands::cmd_demo::<f64>(&kind, sigma, points, seed, &ctx)
            };
            finish(outcome)
        }
    }
}

/// Read + parse + backend-dispatch for subcommands taking Configuration JSON.
fn dispatch_json(
    input: &str,
    common: &CommonOpts,
    run: impl Fn(&serde_json::Value, &Ctx, bool) -> commands::Outcome,
) -> ExitCode {
    let ctx = match resolve_ctx(common) {
        Ok(c) => c,
        Err(e) => return fail(e),
    };
    let data = match read_input(input) {
        Ok(d) => d,
        Err(code) => return code,
    };
    let value: serde_json::Value = match serde_json::from_str(&data) {
        Ok(v) => v,
        Err(e) => return fail_io(format!("JSON parse error: {e}")),
    };
    let exact = common.exact || porism_core::json::uses_exact_scalars(&value);
    finish(run(&value, &ctx, exact))
}

fn finish(outcome: commands::Outcome) -> ExitCode {
    match outcome {
        Ok((report, code)) => {
            println!("{report}");
            ExitCode::from(code)
        }
        Err(e) => fail(e),
    }
}
