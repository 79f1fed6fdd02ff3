//! Approximate parametrization of Hausdorff curves: replace a curve by a
//! rational curve with the same points at infinity, an `(n-1)`-fold point
//! `P` and optional interpolation points taken from the original curve.

use num_bigint::BigInt;
use rand::{seq::SliceRandom, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::roots::{isolate_all_real_roots, root_bound};
use crate::arith::{isolate_real_roots, q, round_to_denominator, Rational};
use crate::divisor::{build_monomial_divisor, divisor_from_curve, is_hausdorff_curve, ConjugateFamily, EffectiveDivisor};
use crate::error::{Error, Result};
use crate::linsys::{absolute_factor_count, compute_system, is_irreducible_system, IrreducibilityReport, LinearSystem, Verdict};
use crate::numeric::{hausdorff_estimate, BoundingBox, HausdorffRecord};
use crate::param::{parametrize_by_lines, verify_parametrization, Pencil, ProjectiveParametrization};
use crate::poly::{MPoly, Var};

pub use crate::divisor::validate_singular_point;

type P = MPoly<Rational>;

/// Outcome of [`check_hausdorff_curve`].
#[derive(Clone, Debug, PartialEq)]
pub struct HausdorffCheck {
    pub is_hausdorff: bool,
    pub degree: u32,
    /// The degree-`n` part of `f`.
    pub leading_form: P,
    pub reason: String,
}

/// A curve is Hausdorff when its leading form is squarefree of full degree,
/// i.e. it has `deg f` distinct points at infinity.
pub fn check_hausdorff_curve(f: &P) -> Result<HausdorffCheck> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let degree = f.degree_in_set(Var::is_geometric);
    let leading_form = f.homogeneous_part(degree);
    let is_hausdorff = is_hausdorff_curve(f)?;
    let reason = if is_hausdorff {
        format!("{degree} distinct points at infinity")
    } else if degree == 0 {
        "constant polynomial".to_string()
    } else {
        format!("leading form {leading_form} has a repeated factor")
    };
    Ok(HausdorffCheck { is_hausdorff, degree, leading_form, reason })
}

/// Default rounding denominator for interpolation points.
pub const DEFAULT_DENOMINATOR: u64 = 32;
/// Attempts at picking a singular point automatically.
pub const AUTO_POINT_ATTEMPTS: usize = 10;

fn nearest_on_grid(iv: &crate::arith::IsolatingInterval, den: &BigInt) -> Rational {
    let mut iv = iv.clone();
    for _ in 0..64 {
        let (a, b) = (round_to_denominator(&iv.lo, den), round_to_denominator(&iv.hi, den));
        if a == b {
            return a;
        }
        iv = iv.bisect(4);
    }
    // a root on a rounding tie
    round_to_denominator(&iv.hi, den)
}

/// Intersects the affine curve `f` with the lines `y = c` and rounds each
/// real intersection's `x` to the nearest multiple of `1/denom`.
pub fn pick_interpolation_points(f: &P, sweep: &[Rational], denom: &BigInt) -> Result<Vec<(Rational, Rational)>> {
    if denom < &BigInt::from(2) {
        return Err(Error::InvalidInput("rounding denominator must be at least 2".into()));
    }
    let mut out: Vec<(Rational, Rational)> = Vec::new();
    for c in sweep {
        let Some(u) = f.eval_var(Var::Y, c).to_upoly(Var::X) else {
            return Err(Error::InvalidInput("sweep needs a polynomial in x and y".into()));
        };
        if u.is_zero() {
            return Err(Error::InvalidInput(format!("the line y = {c} is a component of the curve")));
        }
        for iv in isolate_all_real_roots(&u, &q(1, 1))? {
            let pt = (nearest_on_grid(&iv, denom), c.clone());
            if !out.contains(&pt) {
                out.push(pt);
            }
        }
    }
    if out.is_empty() {
        return Err(Error::NoRealIntersections);
    }
    Ok(out)
}

/// Candidate singular points near the real locus: rounded midpoints of
/// isolating intervals over the real critical fibers of the projection to
/// `x`, falling back to points of the fibers `x = 0, +-1, ...`.
fn auto_point_candidates(f: &P, denom: &BigInt, seed: u64) -> Result<Vec<(Rational, Rational)>> {
    let fy = f.derivative(Var::Y, 1);
    let mut xs: Vec<Rational> = Vec::new();
    if f.contains_var(Var::Y) && !fy.is_zero() && fy.contains_var(Var::Y) {
        if let Some(disc) = crate::poly::resultant(f, &fy, Var::Y)?.to_upoly(Var::X) {
            if !disc.is_zero() && !disc.is_constant() {
                for iv in isolate_all_real_roots(&disc, &q(1, 1))? {
                    xs.push(nearest_on_grid(&iv, denom));
                }
            }
        }
    }
    for k in 0..6i64 {
        xs.push(Rational::from_integer(((k + 1) / 2 * if k % 2 == 0 { 1 } else { -1 }).into()));
    }
    let mut out = Vec::new();
    for x0 in xs {
        let Some(u) = f.eval_var(Var::X, &x0).to_upoly(Var::Y) else { continue };
        if u.is_zero() || u.is_constant() {
            continue;
        }
        let b = root_bound(&u);
        for iv in isolate_real_roots(&u, &(-b.clone() - q(1, 1)), &b, &q(1, 4))? {
            let pt = (x0.clone(), round_to_denominator(&iv.midpoint(), denom));
            if !out.contains(&pt) {
                out.push(pt);
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    out.shuffle(&mut rng);
    Ok(out)
}

/// How interpolation points are supplied.
#[derive(Clone, Debug, PartialEq)]
pub enum Interpolation {
    None,
    Points(Vec<(Rational, Rational)>),
    Sweep { lines: Vec<Rational>, denom: BigInt },
}

#[derive(Clone, Debug)]
pub struct ApproxRequest {
    /// Affine curve in `x, y`.
    pub curve: P,
    /// The `(n-1)`-fold point; picked automatically when absent.
    pub singular_point: Option<(Rational, Rational)>,
    pub interpolation: Interpolation,
    pub seed: u64,
    pub trials: usize,
    /// Skip the determinant condition on the singular point.
    pub override_check: bool,
    /// Run an absolute factor count on the input and warn if reducible.
    pub check_input_irreducible: bool,
    /// Box and grid for a distance estimate between input and output.
    pub distance: Option<(BoundingBox, usize)>,
}

impl ApproxRequest {
    pub fn new(curve: P) -> Self {
        ApproxRequest {
            curve,
            singular_point: None,
            interpolation: Interpolation::None,
            seed: 0,
            trials: crate::linsys::DEFAULT_TRIALS,
            override_check: false,
            check_input_irreducible: false,
            distance: None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct ApproxResult {
    /// `D + (n-1) P`.
    pub divisor: EffectiveDivisor,
    pub singular_point: (Rational, Rational),
    /// Interpolation points actually imposed (after any perturbation).
    pub interpolation_points: Vec<(Rational, Rational)>,
    /// Dimension of `H(n, D + (n-1) P)` before interpolation.
    pub base_dim: usize,
    /// The final system; dimension 0 when the interpolation fixes a curve.
    pub system: LinearSystem,
    /// The unique curve of a dimension-0 system.
    pub curve: Option<P>,
    pub irreducibility: IrreducibilityReport,
    pub parametrization: ProjectiveParametrization,
    pub verified: bool,
    pub distance: Option<HausdorffRecord>,
    pub warnings: Vec<String>,
}

fn restrict_to_points(l: &LinearSystem, pts: &[(Rational, Rational)]) -> Result<LinearSystem> {
    if pts.is_empty() {
        return Ok(l.clone());
    }
    let fams = pts
        .iter()
        .map(|(a, b)| ConjugateFamily::affine_point(a.clone(), b.clone(), 1))
        .collect::<Result<Vec<_>>>()?;
    l.restrict(&EffectiveDivisor::new(fams)?)
}

/// Restricted system, its report, the imposed points and notes.
type Restricted = (LinearSystem, IrreducibilityReport, Vec<(Rational, Rational)>, Vec<String>);

fn irreducible_subsystem(
    l: &LinearSystem,
    pts: &[(Rational, Rational)],
    step: &Rational,
    trials: usize,
    seed: u64,
) -> Result<Restricted> {
    let attempt = |pts: &[(Rational, Rational)]| -> Result<(LinearSystem, IrreducibilityReport)> {
        let sub = restrict_to_points(l, pts)?;
        let rep = is_irreducible_system(&sub, trials, seed)?;
        Ok((sub, rep))
    };
    let (sub, rep) = attempt(pts)?;
    if rep.verdict == Verdict::Irreducible {
        return Ok((sub, rep, pts.to_vec(), Vec::new()));
    }
    let describe = |r: &IrreducibilityReport| {
        if !r.fixed_component.is_constant() {
            format!("fixed component {}", r.fixed_component)
        } else {
            r.reason.clone()
        }
    };
    let first = describe(&rep);
    for i in 0..pts.len() {
        for delta in [step.clone(), -step.clone()] {
            let mut moved = pts.to_vec();
            moved[i].0 = &moved[i].0 + &delta;
            let Ok((sub, rep)) = attempt(&moved) else { continue };
            if rep.verdict == Verdict::Irreducible {
                let note = format!(
                    "interpolation point ({}, {}) moved to ({}, {}) to avoid a reducible system",
                    pts[i].0, pts[i].1, moved[i].0, moved[i].1
                );
                return Ok((sub, rep, moved, vec![note]));
            }
        }
    }
    Err(Error::SystemBecameReducible(first))
}

/// Runs the pipeline: Hausdorff divisor of `f`, the monomial system
/// `H(n, D + (n-1) P)`, interpolation conditions, irreducibility, and a
/// parametrization by lines through `P`.
pub fn approximate_parametrize(req: &ApproxRequest) -> Result<ApproxResult> {
    let f = &req.curve;
    if f.vars().iter().any(|v| *v != Var::X && *v != Var::Y) {
        return Err(Error::InvalidInput("the input curve must be a polynomial in x and y".into()));
    }
    let check = check_hausdorff_curve(f)?;
    if !check.is_hausdorff {
        return Err(Error::NotHausdorffCurve(check.reason));
    }
    let n = check.degree;
    if n < 2 {
        return Err(Error::InvalidInput("the input curve must have degree at least 2".into()));
    }
    let d = divisor_from_curve(f)?;
    let mut warnings = Vec::new();
    if req.check_input_irreducible {
        match absolute_factor_count(f) {
            Ok(1) => {}
            Ok(k) => warnings.push(format!("input curve has {k} absolutely irreducible factors")),
            Err(e) => warnings.push(format!("input irreducibility not checked: {e}")),
        }
    }
    let (step, points) = match &req.interpolation {
        Interpolation::None => (q(1, DEFAULT_DENOMINATOR as i64), Vec::new()),
        Interpolation::Points(p) => (q(1, DEFAULT_DENOMINATOR as i64), p.clone()),
        Interpolation::Sweep { lines, denom } => {
            (Rational::new(1.into(), denom.clone()), pick_interpolation_points(f, lines, denom)?)
        }
    };

    let candidates = match &req.singular_point {
        Some(p) => vec![p.clone()],
        None => auto_point_candidates(f, &BigInt::from(64), req.seed)?,
    };
    let mut last_err = Error::InvalidSingularPoint("no candidate point near the curve".into());
    for (a, b) in candidates.into_iter().take(AUTO_POINT_ATTEMPTS) {
        let explicit = req.singular_point.is_some();
        let dbar = match build_monomial_divisor(&d, &a, &b, n, req.override_check) {
            Ok(dbar) => dbar,
            Err(e) if explicit => return Err(e),
            Err(e) => {
                last_err = e;
                continue;
            }
        };
        let base = compute_system(n, &dbar)?;
        if base.dim() < n as usize {
            return Err(Error::Internal(format!("monomial system has dimension {} < {n}", base.dim())));
        }
        if points.len() > base.dim() {
            return Err(Error::TooManyInterpolationPoints { points: points.len(), dim: base.dim() as i64 });
        }
        if points.iter().any(|p| p == &(a.clone(), b.clone())) {
            let e = Error::InvalidSingularPoint(format!("({a}, {b}) is also an interpolation point"));
            if explicit {
                return Err(e);
            }
            last_err = e;
            continue;
        }
        let (system, report, used, notes) = match irreducible_subsystem(&base, &points, &step, req.trials, req.seed) {
            Ok(v) => v,
            Err(e) if explicit => return Err(e),
            Err(e) => {
                last_err = e;
                continue;
            }
        };
        warnings.extend(notes);
        let curve = (system.dim() == 0).then(|| system.basis()[0].clone());
        let target = curve.clone().unwrap_or_else(|| system.defining_polynomial().clone());
        let parametrization = parametrize_by_lines(&target, &a, &b, Pencil::Auto)?;
        let verified = verify_parametrization(&target, &parametrization);
        if !verified {
            return Err(Error::VerificationFailed);
        }
        let distance = match (&req.distance, &curve) {
            (Some((bbox, grid)), Some(g)) => Some(hausdorff_estimate(f, g, bbox, *grid)?),
            _ => None,
        };
        return Ok(ApproxResult {
            divisor: dbar,
            singular_point: (a, b),
            interpolation_points: used,
            base_dim: base.dim(),
            system,
            curve,
            irreducibility: report,
            parametrization,
            verified,
            distance,
            warnings,
        });
    }
    Err(last_err)
}
