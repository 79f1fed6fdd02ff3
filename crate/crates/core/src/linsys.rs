//! Linear systems of plane curves through a divisor, and their
//! irreducibility.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::arith::linalg::{nullspace_q, rank_mod_p, solve_in_span};
use crate::arith::{Rational, Ring, UPoly};
use crate::divisor::{validate_singular_point, ConjugateFamily, EffectiveDivisor};
use crate::error::{Error, Result};
use crate::poly::{content_in_parameters, Monomial, MPoly, Var};

/// The monomials of degree `n` in `x, y, z`, ordered by the graded lex
/// order of their affine part `x^i y^j` (so `z^n, y z^(n-1), x z^(n-1),
/// y^2 z^(n-2), ...`). Columns of condition matrices use this order.
pub fn form_monomials(n: u32) -> Vec<Monomial> {
    let mut out = Vec::with_capacity(((n + 1) * (n + 2) / 2) as usize);
    for d in 0..=n {
        for i in 0..=d {
            out.push(Monomial::from_pairs(&[(Var::X, i), (Var::Y, d - i), (Var::Z, n - d)]));
        }
    }
    out
}

/// Coefficient vector of a degree-`n` form in the [`form_monomials`] order.
pub fn form_coefficients(f: &MPoly<Rational>, n: u32) -> Result<Vec<Rational>> {
    let cols = form_monomials(n);
    let mut v = vec![<Rational as Ring>::zero(); cols.len()];
    for (m, c) in f.terms() {
        let idx = cols.iter().position(|x| x == m).ok_or(Error::NotHomogeneous)?;
        v[idx] = c.clone();
    }
    Ok(v)
}

/// The form with the given coefficient vector.
pub fn form_from_coefficients(v: &[Rational], n: u32) -> MPoly<Rational> {
    MPoly::from_terms(form_monomials(n).into_iter().zip(v.iter().cloned()))
}

fn falling(e: u32, k: u32) -> i64 {
    (0..k).map(|i| (e - i) as i64).product()
}

/// Rows of linear conditions on the coefficients of a degree-`n` form
/// expressing that the form passes through each family with its
/// multiplicity.
///
/// By Euler's identity, vanishing of all partials of order exactly
/// `min(s - 1, n)` implies vanishing of the lower orders, so only those are
/// used: one row per multi-index and per power of `t` below `deg m`.
pub fn condition_matrix(n: u32, d: &EffectiveDivisor) -> Vec<Vec<Rational>> {
    let cols = form_monomials(n);
    let mut rows = Vec::new();
    for fam in d.families() {
        rows.extend(family_conditions(n, fam, &cols));
    }
    rows
}

fn family_conditions(n: u32, fam: &ConjugateFamily, cols: &[Monomial]) -> Vec<Vec<Rational>> {
    let m = fam.modulus();
    let dm = fam.size();
    let k = (fam.mult() - 1).min(n);
    let mut pows: Vec<Vec<UPoly<Rational>>> = Vec::new();
    for c in fam.coords() {
        let mut v = vec![UPoly::one()];
        for _ in 0..n {
            let next = (v.last().unwrap() * c).rem(m);
            v.push(next);
        }
        pows.push(v);
    }
    let mut rows = Vec::new();
    for a in 0..=k {
        for b in 0..=(k - a) {
            let c = k - a - b;
            let mut block = vec![vec![<Rational as Ring>::zero(); cols.len()]; dm];
            for (col, mono) in cols.iter().enumerate() {
                let (i, j, l) = (mono.exp(Var::X), mono.exp(Var::Y), mono.exp(Var::Z));
                if i < a || j < b || l < c {
                    continue;
                }
                let coef = falling(i, a) * falling(j, b) * falling(l, c);
                let val = (&(&pows[0][(i - a) as usize] * &pows[1][(j - b) as usize]) * &pows[2][(l - c) as usize])
                    .rem(m)
                    .scale(&Rational::from_integer(coef.into()));
                for (r, x) in val.coeffs().iter().enumerate() {
                    block[r][col] = x.clone();
                }
            }
            rows.extend(block);
        }
    }
    rows
}

/// A linear system of degree-`n` forms given by an exact basis.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearSystem {
    degree: u32,
    basis: Vec<MPoly<Rational>>,
    defining: MPoly<Rational>,
    divisor: Option<EffectiveDivisor>,
}

impl LinearSystem {
    /// Wraps a basis of linearly independent degree-`n` forms.
    pub fn from_basis(n: u32, basis: Vec<MPoly<Rational>>) -> Result<Self> {
        if basis.is_empty() {
            return Err(Error::EmptySystem);
        }
        let rows = basis.iter().map(|b| form_coefficients(b, n)).collect::<Result<Vec<_>>>()?;
        let ncols = rows[0].len();
        if crate::arith::linalg::rank_q(&rows, ncols) != basis.len() {
            return Err(Error::InvalidInput("basis forms are linearly dependent".into()));
        }
        let defining = basis
            .iter()
            .enumerate()
            .fold(MPoly::zero(), |acc, (j, b)| acc + b * &MPoly::lambda(j as u32 + 1));
        Ok(LinearSystem { degree: n, basis, defining, divisor: None })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn basis(&self) -> &[MPoly<Rational>] {
        &self.basis
    }

    /// `H = sum_j lambda_j B_j`.
    pub fn defining_polynomial(&self) -> &MPoly<Rational> {
        &self.defining
    }

    /// Projective dimension: number of basis forms minus one.
    pub fn dim(&self) -> usize {
        self.basis.len() - 1
    }

    /// The divisor the system was computed from, if any.
    pub fn divisor(&self) -> Option<&EffectiveDivisor> {
        self.divisor.as_ref()
    }

    /// Coordinates of `f` in the basis, if `f` belongs to the span.
    pub fn coordinates(&self, f: &MPoly<Rational>) -> Option<Vec<Rational>> {
        let target = form_coefficients(f, self.degree).ok()?;
        let rows: Vec<Vec<Rational>> =
            self.basis.iter().map(|b| form_coefficients(b, self.degree).expect("basis forms")).collect();
        solve_in_span(&rows, &target)
    }

    pub fn contains(&self, f: &MPoly<Rational>) -> bool {
        self.coordinates(f).is_some()
    }

    /// The member with the given parameter values.
    pub fn specialize(&self, values: &[Rational]) -> MPoly<Rational> {
        self.basis
            .iter()
            .zip(values)
            .fold(MPoly::zero(), |acc, (b, v)| acc + b.scale(v))
    }

    /// The subsystem of members that also pass through `extra`.
    pub fn restrict(&self, extra: &EffectiveDivisor) -> Result<Self> {
        let cond = condition_matrix(self.degree, extra);
        let coeffs: Vec<Vec<Rational>> =
            self.basis.iter().map(|b| form_coefficients(b, self.degree).expect("basis forms")).collect();
        // conditions expressed in basis coordinates
        let rows: Vec<Vec<Rational>> = cond
            .iter()
            .map(|r| {
                coeffs
                    .iter()
                    .map(|b| r.iter().zip(b).fold(<Rational as Ring>::zero(), |acc, (x, y)| acc + x.clone() * y))
                    .collect()
            })
            .collect();
        let ns = nullspace_q(&rows, self.basis.len());
        if ns.is_empty() {
            return Err(Error::EmptySystem);
        }
        let basis = ns.iter().map(|v| primitive_form(&self.specialize(v))).collect();
        let mut out = Self::from_basis(self.degree, basis)?;
        out.divisor = match &self.divisor {
            Some(d) => Some(d.union(extra)?),
            None => Some(extra.clone()),
        };
        Ok(out)
    }
}

fn primitive_form(f: &MPoly<Rational>) -> MPoly<Rational> {
    if f.is_zero() {
        return f.clone();
    }
    f.primitive_integer().1
}

/// The linear system `H(n, D)`: an exact nullspace basis of the condition
/// matrix, each form scaled to primitive integer coefficients.
pub fn compute_system(n: u32, d: &EffectiveDivisor) -> Result<LinearSystem> {
    if n == 0 {
        return Err(Error::InvalidInput("degree must be at least 1".into()));
    }
    let rows = condition_matrix(n, d);
    let ncols = ((n + 1) * (n + 2) / 2) as usize;
    let ns = nullspace_q(&rows, ncols);
    if ns.is_empty() {
        return Err(Error::EmptySystem);
    }
    let basis = ns.iter().map(|v| form_from_coefficients(v, n)).collect();
    let mut sys = LinearSystem::from_basis(n, basis)?;
    sys.divisor = Some(d.clone());
    Ok(sys)
}

/// JSON form of a linear system.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct LinsysJson {
    pub degree: u32,
    pub dim: usize,
    pub basis: Vec<String>,
    pub defining_poly: String,
}

impl From<&LinearSystem> for LinsysJson {
    fn from(l: &LinearSystem) -> Self {
        LinsysJson {
            degree: l.degree,
            dim: l.dim(),
            basis: l.basis.iter().map(ToString::to_string).collect(),
            defining_poly: l.defining.to_string(),
        }
    }
}

/// The form `z (b x - a y)^(n-1) - prod (b_i x - a_i y)` over the points
/// `(a_i : b_i : 0)` of the Hausdorff divisor `d`: an absolutely irreducible
/// member of `H(n, d)` whenever `(a : b : 0)` is not a point of `d`.
pub fn witness_irreducible_member(d: &EffectiveDivisor, a: &Rational, b: &Rational) -> Result<MPoly<Rational>> {
    if !d.is_hausdorff() || d.is_empty() {
        return Err(Error::InvalidDivisor(format!("{d} is not a Hausdorff divisor")));
    }
    if a.is_zero() && b.is_zero() {
        return Err(Error::InvalidInput("direction (0:0) is not a point".into()));
    }
    if !validate_singular_point(a, b, d) {
        return Err(Error::DirectionCollidesWithDivisor);
    }
    let n = d.degree() as u32;
    let (x, y) = (MPoly::<Rational>::x(), MPoly::<Rational>::y());
    let mut prod = MPoly::one();
    for fam in d.families() {
        let [p1, p2, _] = fam.coords();
        let len = p1.coeffs().len().max(p2.coeffs().len());
        let g = UPoly::new(
            (0..len)
                .map(|k| x.scale(&p2.coeff(k)) - y.scale(&p1.coeff(k)))
                .collect(),
        );
        let m = fam.modulus().map(|c| MPoly::constant(c.clone()));
        // m is monic, so the resultant is the product of g over its roots
        prod = &prod * &crate::arith::resultant(&m, &g);
    }
    let line = x.scale(b) - y.scale(a);
    Ok(&MPoly::z() * &line.pow(n - 1) - prod)
}

const FACTOR_COUNT_PRIME: u64 = 2_147_483_647;

/// Number of absolutely irreducible factors of a squarefree polynomial in
/// `x, y` with rational coefficients.
///
/// Uses the linear differential criterion: with `m = deg_x f`,
/// `n = deg_y f` and `gcd(f, f_x) = 1`, the solutions `(g, h)` of
/// `(g/f)_y = (h/f)_x` with `deg g <= (m-1, n)`, `deg h <= (m, n-1)` form a
/// space whose dimension is the factor count. A shear `y -> y + c x` makes
/// `gcd(f, f_x) = 1` when some factor is free of `x`.
pub fn absolute_factor_count(f: &MPoly<Rational>) -> Result<usize> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if let Some(v) = f.vars().into_iter().find(|v| *v != Var::X && *v != Var::Y) {
        return Err(Error::InvalidInput(format!("expected a polynomial in x and y, found {v}")));
    }
    if f.is_constant() {
        return Ok(0);
    }
    if !f.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let mut g = f.clone();
    let mut c = 0i64;
    while !g.gcd(&g.derivative(Var::X, 1)).is_constant() {
        c += 1;
        let shift = MPoly::y() + MPoly::x().scale(&Rational::from_integer(c.into()));
        g = f.substitute(&[(Var::Y, shift)]);
    }
    Ok(differential_nullity(&g.primitive_integer().1))
}

fn differential_nullity(f: &MPoly<Rational>) -> usize {
    let m = f.degree_in(Var::X) as usize;
    let n = f.degree_in(Var::Y) as usize;
    let terms: Vec<(usize, usize, Rational)> = f
        .terms()
        .map(|(mono, c)| (mono.exp(Var::X) as usize, mono.exp(Var::Y) as usize, c.clone()))
        .collect();
    // unknowns: g_{a,b} (a < m, b <= n) then h_{a,b} (a <= m, b < n)
    let g_count = m * (n + 1);
    let ncols = g_count + (m + 1) * n;
    let (rw, rh) = (2 * m, 2 * n);
    let row_of = |u: usize, v: usize| u * rh + v;
    let zero = <Rational as Ring>::zero();
    let mut rows = vec![vec![zero; ncols]; rw * rh];
    for a in 0..m {
        for b in 0..=n {
            let col = a * (n + 1) + b;
            for (i, j, c) in &terms {
                let k = b as i64 - *j as i64;
                if k == 0 || b + j == 0 {
                    continue;
                }
                let r = row_of(a + i, b + j - 1);
                rows[r][col] += c * Rational::from_integer(k.into());
            }
        }
    }
    for a in 0..=m {
        for b in 0..n {
            let col = g_count + a * n + b;
            for (i, j, c) in &terms {
                let k = *i as i64 - a as i64;
                if k == 0 || a + i == 0 {
                    continue;
                }
                let r = row_of(a + i - 1, b + j);
                rows[r][col] += c * Rational::from_integer(k.into());
            }
        }
    }
    rows.retain(|r| r.iter().any(|x| !x.is_zero()));
    // rank mod p never exceeds the rank over Q, and the nullity is at least
    // one, so a modular nullity of one is conclusive
    if let Some(r) = rank_mod_p(&rows, ncols, FACTOR_COUNT_PRIME) {
        if ncols - r == 1 {
            return 1;
        }
    }
    nullspace_q(&rows, ncols).len()
}

/// Outcome of an irreducibility test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Irreducible,
    Reducible,
    Undetermined,
}

/// One random specialization of the parameters.
#[derive(Clone, Debug, PartialEq)]
pub struct TrialEvidence {
    pub values: Vec<Rational>,
    /// The member is not divisible by `z`, so its affine part keeps degree `n`.
    pub degree_preserved: bool,
    /// Absolute factor count of the affine member; `None` when it is not
    /// squarefree.
    pub factor_count: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct IrreducibilityReport {
    pub verdict: Verdict,
    /// The verdict rests on random specializations only.
    pub heuristic: bool,
    /// Content of `H` in the parameters.
    pub content: MPoly<Rational>,
    /// Gcd of all basis forms: a factor shared by every member.
    pub fixed_component: MPoly<Rational>,
    pub evidence: Vec<TrialEvidence>,
    pub reason: String,
}

/// Default number of specializations.
pub const DEFAULT_TRIALS: usize = 7;
/// Fewest reducible specializations needed for a `Reducible` verdict.
pub const MIN_REDUCIBLE_TRIALS: usize = 5;

fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    let num: i64 = rng.gen_range(-997..=997);
    let den: i64 = rng.gen_range(1..=997);
    Rational::new(num.into(), den.into())
}

fn trial_rng(seed: u64, trial: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ (trial as u64 + 1).wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

fn member_evidence(member: &MPoly<Rational>, values: Vec<Rational>) -> Result<TrialEvidence> {
    let at_infinity = member.eval_var(Var::Z, &<Rational as Ring>::zero());
    if member.is_zero() || at_infinity.is_zero() {
        return Ok(TrialEvidence { values, degree_preserved: false, factor_count: None });
    }
    let affine = member.dehomogenize()?;
    let factor_count = match absolute_factor_count(&affine) {
        Ok(c) => Some(c),
        Err(Error::NotSquarefree) => None,
        Err(e) => return Err(e),
    };
    Ok(TrialEvidence { values, degree_preserved: true, factor_count })
}

/// Decides whether `H(Lambda, x, y, z)` is irreducible over the algebraic
/// closure of `C(Lambda)`.
///
/// Nontrivial parameter content or a fixed component shared by all members
/// proves reducibility. Otherwise random specializations are tried: one
/// absolutely irreducible member of full degree proves irreducibility, and
/// at least [`MIN_REDUCIBLE_TRIALS`] reducible full-degree members give a
/// heuristic `Reducible`.
pub fn is_irreducible_system(l: &LinearSystem, trials: usize, seed: u64) -> Result<IrreducibilityReport> {
    let one = MPoly::one();
    if l.basis.len() == 1 {
        let ev = member_evidence(&l.basis[0], vec![<Rational as Ring>::one()])?;
        let verdict = if ev.factor_count == Some(1) { Verdict::Irreducible } else { Verdict::Reducible };
        let reason = match ev.factor_count {
            _ if !ev.degree_preserved => "the only member contains the line at infinity".to_string(),
            Some(c) => format!("the only member has {c} absolutely irreducible factor(s)"),
            None => "the only member has a repeated factor".to_string(),
        };
        return Ok(IrreducibilityReport {
            verdict,
            heuristic: false,
            content: one.clone(),
            fixed_component: one,
            evidence: vec![ev],
            reason,
        });
    }
    let content = content_in_parameters(&l.defining);
    let fixed = l.basis.iter().fold(MPoly::zero(), |g, b| g.gcd(b));
    let mut report = IrreducibilityReport {
        verdict: Verdict::Undetermined,
        heuristic: false,
        content: content.clone(),
        fixed_component: fixed.clone(),
        evidence: Vec::new(),
        reason: String::new(),
    };
    if !content.is_constant() {
        report.verdict = Verdict::Reducible;
        report.reason = format!("parameter content {content}");
        return Ok(report);
    }
    if !fixed.is_constant() {
        report.verdict = Verdict::Reducible;
        report.reason = format!("every member contains {fixed}");
        return Ok(report);
    }
    for k in 0..trials {
        let mut rng = trial_rng(seed, k);
        let values: Vec<Rational> = (0..l.basis.len()).map(|_| small_rational(&mut rng)).collect();
        let ev = member_evidence(&l.specialize(&values), values)?;
        let done = ev.degree_preserved && ev.factor_count == Some(1);
        report.evidence.push(ev);
        if done {
            report.verdict = Verdict::Irreducible;
            report.reason = format!("specialization {} is absolutely irreducible of full degree", k + 1);
            return Ok(report);
        }
    }
    let reducible = report.evidence.iter().filter(|e| e.degree_preserved).count();
    report.heuristic = true;
    if reducible >= MIN_REDUCIBLE_TRIALS {
        report.verdict = Verdict::Reducible;
        report.reason = format!("{reducible} full-degree specializations were all reducible");
    } else {
        report.reason = format!("only {reducible} full-degree specializations; no irreducible one found");
    }
    Ok(report)
}
