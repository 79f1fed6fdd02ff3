//! Command-line front end. Every subcommand prints JSON (or CSV for
//! `sample`) on stdout or to `--out`; failures print an error object on
//! stderr and exit with 2 for domain errors, 1 for internal ones.

use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};

use crate::approx::{approximate_parametrize, ApproxRequest, ApproxResult, Interpolation};
use crate::arith::{parse_rational, Rational};
use crate::divisor::{DivisorJson, EffectiveDivisor};
use crate::error::{Error, Result};
use crate::linsys::{compute_system, is_irreducible_system, IrreducibilityReport, LinsysJson, DEFAULT_TRIALS};
use crate::numeric::{hausdorff_estimate, sample_curve, BoundingBox, DEFAULT_GRID};
use crate::param::{parametrize_by_adjoints, parametrize_by_lines, verify_parametrization, AdjointOptions, Pencil};
use crate::poly::{parse_poly, MPoly, Var};

#[derive(Parser, Debug)]
#[command(name = "hausdiv", version, about = "Linear systems of plane curves, rational parametrization and Hausdorff-curve approximation")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute H(n, D) for a divisor file.
    Linsys(LinsysArgs),
    /// Parametrize a form with an (n-1)-fold point by lines.
    ParamLines(ParamLinesArgs),
    /// Parametrize the curve of H(n, D) by a pencil of adjoints.
    ParamAdjoint(ParamAdjointArgs),
    /// Approximate a Hausdorff curve by a rational one.
    Approx(ApproxArgs),
    /// Estimate the Hausdorff distance between two curves in a box.
    Hausdorff(HausdorffArgs),
    /// Sample a real curve in a box (CSV).
    Sample(SampleArgs),
}

#[derive(Args, Debug)]
pub struct CurveArg {
    /// Polynomial expression.
    #[arg(long, conflicts_with = "curve_file")]
    pub curve: Option<String>,
    /// File holding a polynomial expression.
    #[arg(long)]
    pub curve_file: Option<PathBuf>,
}

impl CurveArg {
    fn load(&self) -> Result<MPoly<Rational>> {
        match (&self.curve, &self.curve_file) {
            (Some(s), _) => parse_poly(s),
            (None, Some(p)) => parse_poly(&read(p)?),
            (None, None) => Err(Error::InvalidInput("one of --curve or --curve-file is required".into())),
        }
    }
}

#[derive(Args, Debug)]
pub struct LinsysArgs {
    #[arg(long)]
    pub degree: u32,
    /// Divisor JSON: {"families": [{"m": "...", "p": [...], "mult": s}]}.
    #[arg(long)]
    pub divisor: PathBuf,
    /// Also run the irreducibility test.
    #[arg(long)]
    pub irreducibility: bool,
    #[arg(long, default_value_t = DEFAULT_TRIALS)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum PencilArg {
    Slope,
    Intercept,
    Auto,
}

#[derive(Args, Debug)]
pub struct ParamLinesArgs {
    #[command(flatten)]
    pub curve: CurveArg,
    /// Affine singular point "a,b".
    #[arg(long, allow_hyphen_values = true)]
    pub point: String,
    #[arg(long, value_enum, default_value_t = PencilArg::Slope)]
    pub pencil: PencilArg,
}

#[derive(Args, Debug)]
pub struct ParamAdjointArgs {
    #[arg(long)]
    pub degree: u32,
    #[arg(long)]
    pub divisor: PathBuf,
    #[arg(long)]
    pub adjoint_degree: u32,
    /// Extra simple points "a:b:c;a:b:c".
    #[arg(long, allow_hyphen_values = true)]
    pub extra: Option<String>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Args, Debug)]
pub struct ApproxArgs {
    #[command(flatten)]
    pub curve: CurveArg,
    /// Singular point "a,b"; picked automatically when omitted.
    #[arg(long, allow_hyphen_values = true)]
    pub point: Option<String>,
    /// Sweep lines y = c, "c1,c2,...".
    #[arg(long, allow_hyphen_values = true)]
    pub sweep: Option<String>,
    /// Explicit interpolation points "a,b;a,b".
    #[arg(long, allow_hyphen_values = true, conflicts_with = "sweep")]
    pub points: Option<String>,
    /// Rounding denominator, a power of two ("32" or "2^5").
    #[arg(long, default_value = "32")]
    pub denom: String,
    /// Box for a distance estimate "x0,x1,y0,y1".
    #[arg(long = "box", allow_hyphen_values = true)]
    pub bbox: Option<String>,
    #[arg(long, default_value_t = DEFAULT_GRID)]
    pub grid: usize,
    #[arg(long, default_value_t = DEFAULT_TRIALS)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Skip the determinant condition on the singular point.
    #[arg(long)]
    pub override_check: bool,
    /// Warn when the input curve is not absolutely irreducible.
    #[arg(long)]
    pub check_input: bool,
}

#[derive(Args, Debug)]
pub struct HausdorffArgs {
    #[arg(long)]
    pub curve: String,
    #[arg(long)]
    pub curve2: String,
    #[arg(long = "box", allow_hyphen_values = true)]
    pub bbox: String,
    #[arg(long, default_value_t = DEFAULT_GRID)]
    pub grid: usize,
}

#[derive(Args, Debug)]
pub struct SampleArgs {
    #[command(flatten)]
    pub curve: CurveArg,
    #[arg(long = "box", allow_hyphen_values = true)]
    pub bbox: String,
    #[arg(long, default_value_t = DEFAULT_GRID)]
    pub grid: usize,
}

fn read(p: &PathBuf) -> Result<String> {
    fs::read_to_string(p).map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", p.display())))
}

fn rational(s: &str) -> Result<Rational> {
    parse_rational(s.trim()).ok_or_else(|| Error::InvalidInput(format!("not a rational number: `{s}`")))
}

fn pair(s: &str) -> Result<(Rational, Rational)> {
    match s.split(',').collect::<Vec<_>>().as_slice() {
        [a, b] => Ok((rational(a)?, rational(b)?)),
        _ => Err(Error::InvalidInput(format!("expected \"a,b\", got `{s}`"))),
    }
}

fn projective_points(s: &str) -> Result<Vec<[Rational; 3]>> {
    s.split(';')
        .filter(|x| !x.trim().is_empty())
        .map(|pt| match pt.split(':').collect::<Vec<_>>().as_slice() {
            [a, b, c] => Ok([rational(a)?, rational(b)?, rational(c)?]),
            _ => Err(Error::InvalidInput(format!("expected \"a:b:c\", got `{pt}`"))),
        })
        .collect()
}

/// Parses `"32"` or `"2^5"`; must be a power of two, at least 2.
pub fn parse_denominator(s: &str) -> Result<BigInt> {
    let s = s.trim();
    let v: u64 = match s.split_once('^') {
        Some((base, k)) if base.trim() == "2" => {
            let k: u32 = k.trim().parse().map_err(|_| Error::InvalidInput(format!("bad exponent in `{s}`")))?;
            if !(1..=62).contains(&k) {
                return Err(Error::InvalidInput(format!("exponent out of range in `{s}`")));
            }
            1u64 << k
        }
        _ => s.parse().map_err(|_| Error::InvalidInput(format!("bad denominator `{s}`")))?,
    };
    if v < 2 || !v.is_power_of_two() {
        return Err(Error::InvalidInput(format!("denominator {v} is not a power of two >= 2")));
    }
    Ok(BigInt::from(v))
}

fn load_divisor(p: &PathBuf) -> Result<EffectiveDivisor> {
    EffectiveDivisor::from_json(&read(p)?)
}

fn parameter_names(f: &MPoly<Rational>) -> Vec<String> {
    let mut vs: Vec<Var> = f.vars().into_iter().filter(|v| v.is_parameter()).collect();
    vs.sort();
    vs.iter().map(|v| v.name()).collect()
}

fn report_json(r: &IrreducibilityReport) -> Value {
    json!({
        "verdict": r.verdict,
        "heuristic": r.heuristic,
        "content": r.content.to_string(),
        "fixed_component": r.fixed_component.to_string(),
        "reason": r.reason,
        "evidence": r.evidence.iter().map(|e| json!({
            "values": e.values.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "degree_preserved": e.degree_preserved,
            "factor_count": e.factor_count,
        })).collect::<Vec<_>>(),
    })
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

/// JSON object describing an approximation result.
pub fn approx_json(r: &ApproxResult) -> Value {
    let pts: Vec<[String; 2]> = r.interpolation_points.iter().map(|(a, b)| [a.to_string(), b.to_string()]).collect();
    json!({
        "divisor": to_value(&DivisorJson::from(&r.divisor)),
        "singular_point": [r.singular_point.0.to_string(), r.singular_point.1.to_string()],
        "interpolation_points": pts,
        "base_dim": r.base_dim,
        "dim": r.system.dim(),
        "G": r.curve.as_ref().map(ToString::to_string),
        "system": to_value(&LinsysJson::from(&r.system)),
        "parameters": parameter_names(r.system.defining_polynomial()),
        "irreducibility": report_json(&r.irreducibility),
        "parametrization": to_value(&r.parametrization.to_json(r.verified)),
        "distance": r.distance.as_ref().map(to_value),
        "warnings": r.warnings,
    })
}

/// Runs one subcommand and returns its textual output.
pub fn execute(cli: &Cli) -> Result<String> {
    let value = match &cli.command {
        Command::Linsys(a) => {
            let d = load_divisor(&a.divisor)?;
            let l = compute_system(a.degree, &d)?;
            let mut v = to_value(&LinsysJson::from(&l));
            v["parameters"] = json!(parameter_names(l.defining_polynomial()));
            if a.irreducibility {
                v["irreducibility"] = report_json(&is_irreducible_system(&l, a.trials, a.seed)?);
            }
            v
        }
        Command::ParamLines(a) => {
            let f = a.curve.load()?;
            let form = if f.is_homogeneous() && f.contains_var(Var::Z) { f } else { f.homogenize()? };
            let (x, y) = pair(&a.point)?;
            let pencil = match a.pencil {
                PencilArg::Slope => Pencil::Slope,
                PencilArg::Intercept => Pencil::Intercept,
                PencilArg::Auto => Pencil::Auto,
            };
            let p = parametrize_by_lines(&form, &x, &y, pencil)?;
            to_value(&p.to_json(verify_parametrization(&form, &p)))
        }
        Command::ParamAdjoint(a) => {
            let d = load_divisor(&a.divisor)?;
            let l = compute_system(a.degree, &d)?;
            let extra = a.extra.as_deref().map(projective_points).transpose()?.unwrap_or_default();
            let opts = AdjointOptions { adjoint_degree: a.adjoint_degree, extra_points: extra, seed: a.seed };
            let p = parametrize_by_adjoints(&l, &d, &opts)?;
            let mut v = to_value(&p.to_json(verify_parametrization(l.defining_polynomial(), &p)));
            v["defining_poly"] = json!(l.defining_polynomial().to_string());
            v
        }
        Command::Approx(a) => {
            let mut req = ApproxRequest::new(a.curve.load()?);
            req.singular_point = a.point.as_deref().map(pair).transpose()?;
            let denom = parse_denominator(&a.denom)?;
            req.interpolation = match (&a.sweep, &a.points) {
                (Some(s), _) => Interpolation::Sweep {
                    lines: s.split(',').map(rational).collect::<Result<_>>()?,
                    denom,
                },
                (None, Some(p)) => Interpolation::Points(
                    p.split(';').filter(|x| !x.trim().is_empty()).map(pair).collect::<Result<_>>()?,
                ),
                (None, None) => Interpolation::None,
            };
            req.seed = a.seed;
            req.trials = a.trials;
            req.override_check = a.override_check;
            req.check_input_irreducible = a.check_input;
            req.distance = a.bbox.as_deref().map(BoundingBox::parse).transpose()?.map(|b| (b, a.grid));
            approx_json(&approximate_parametrize(&req)?)
        }
        Command::Hausdorff(a) => {
            let bbox = BoundingBox::parse(&a.bbox)?;
            let r = hausdorff_estimate(&parse_poly(&a.curve)?, &parse_poly(&a.curve2)?, &bbox, a.grid)?;
            to_value(&r)
        }
        Command::Sample(a) => {
            let bbox = BoundingBox::parse(&a.bbox)?;
            return Ok(sample_curve(&a.curve.load()?, &bbox, a.grid)?.to_csv("0"));
        }
    };
    Ok(serde_json::to_string_pretty(&value).expect("serializable") + "\n")
}

/// Exit status for an error: 1 for internal errors, 2 otherwise.
pub fn exit_code(e: &Error) -> i32 {
    if e.is_internal() {
        1
    } else {
        2
    }
}

/// Machine-readable error report.
pub fn error_json(e: &Error) -> String {
    json!({ "error": e.kind(), "message": e.to_string() }).to_string()
}

/// Parses arguments, runs, writes output; returns the exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(text) => match &cli.out {
            Some(p) => match fs::write(p, text) {
                Ok(()) => 0,
                Err(e) => {
                    eprintln!("{}", error_json(&Error::InvalidInput(format!("cannot write {}: {e}", p.display()))));
                    2
                }
            },
            None => {
                print!("{text}");
                0
            }
        },
        Err(e) => {
            eprintln!("{}", error_json(&e));
            exit_code(&e)
        }
    }
}
