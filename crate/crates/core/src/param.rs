//! Rational parametrization of the curve of a linear system: by lines
//! through an `(n-1)`-fold point, or by a pencil of adjoint curves.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::arith::{resultant, Rational, Ring, UPoly};
use crate::divisor::{ConjugateFamily, EffectiveDivisor};
use crate::error::{Error, Result};
use crate::linsys::{compute_system, LinearSystem};
use crate::poly::{substitute_parametrization, MPoly, RatFunc, Var};

type P = MPoly<Rational>;

/// A projective parametrization `(P1 : P2 : P3)` with components in
/// `Q[Lambda][t]`.
#[derive(Clone, Debug, PartialEq)]
pub struct ProjectiveParametrization {
    components: [P; 3],
}

impl ProjectiveParametrization {
    /// Normalizes: divides out the common gcd, scales to jointly primitive
    /// integer coefficients and makes the third component's leading
    /// coefficient positive (the first nonzero component if the third is 0).
    pub fn new(components: [P; 3]) -> Result<Self> {
        if components.iter().all(MPoly::is_zero) {
            return Err(Error::InvalidInput("all components are zero".into()));
        }
        let g = components.iter().fold(MPoly::zero(), |g, c| g.gcd(c));
        let mut comps = components.map(|c| c.div_exact(&g).expect("gcd divides"));
        let scale = joint_primitive_scale(&comps);
        let pivot = comps.iter().rev().find(|c| !c.is_zero()).expect("nonzero");
        let sign = if pivot.lc() * &scale < <Rational as Ring>::zero() { -scale } else { scale };
        for c in comps.iter_mut() {
            *c = c.scale(&sign);
        }
        Ok(ProjectiveParametrization { components: comps })
    }

    /// From affine rational functions `(x(t), y(t))`.
    pub fn from_affine(x: &RatFunc<Rational>, y: &RatFunc<Rational>) -> Result<Self> {
        Self::new([
            x.num() * y.den(),
            y.num() * x.den(),
            x.den() * y.den(),
        ])
    }

    pub fn components(&self) -> &[P; 3] {
        &self.components
    }

    /// `P1 / P3` in lowest terms.
    pub fn affine_x(&self) -> Result<RatFunc<Rational>> {
        RatFunc::new(self.components[0].clone(), self.components[2].clone())
    }

    /// `P2 / P3` in lowest terms.
    pub fn affine_y(&self) -> Result<RatFunc<Rational>> {
        RatFunc::new(self.components[1].clone(), self.components[2].clone())
    }

    /// Maximum degree in `t` over the components.
    pub fn t_degree(&self) -> u32 {
        self.components.iter().map(|c| c.degree_in(Var::T)).max().unwrap_or(0)
    }

    /// Substitutes values for parameters `lambda_k`.
    pub fn specialize(&self, values: &[(Var, Rational)]) -> Result<Self> {
        let subs: Vec<(Var, P)> = values.iter().map(|(v, c)| (*v, MPoly::constant(c.clone()))).collect();
        Self::new(self.components.clone().map(|c| c.substitute(&subs)))
    }

    pub fn to_json(&self, verified: bool) -> ParamJson {
        let show = |r: Result<RatFunc<Rational>>| match r {
            Ok(r) => format!("({})/({})", r.num(), r.den()),
            Err(_) => "infinity".to_string(),
        };
        ParamJson {
            x: show(self.affine_x()),
            y: show(self.affine_y()),
            z: "1".into(),
            field: "Q".into(),
            verified,
        }
    }
}

impl fmt::Display for ProjectiveParametrization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = &self.components;
        write!(f, "({a} : {b} : {c})")
    }
}

/// JSON form of a parametrization.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct ParamJson {
    pub x: String,
    pub y: String,
    pub z: String,
    pub field: String,
    pub verified: bool,
}

fn joint_primitive_scale(comps: &[P; 3]) -> Rational {
    use num_integer::Integer;
    use num_traits::{One, Zero};
    let mut den = num_bigint::BigInt::one();
    let mut num = num_bigint::BigInt::zero();
    for c in comps {
        for (_, x) in c.terms() {
            den = den.lcm(x.denom());
            num = num.gcd(x.numer());
        }
    }
    Rational::new(den, num)
}

/// True iff `F(P1, P2, P3)` is the zero polynomial. A polynomial that is
/// not homogeneous in `x, y, z` is homogenized first.
pub fn verify_parametrization(f: &P, p: &ProjectiveParametrization) -> bool {
    let form = if f.is_homogeneous() {
        f.clone()
    } else {
        match f.homogenize() {
            Ok(h) => h,
            Err(_) => return false,
        }
    };
    substitute_parametrization(&form, &p.components).is_zero()
}

fn checked(f: &P, comps: [P; 3]) -> Result<ProjectiveParametrization> {
    let p = ProjectiveParametrization::new(comps)?;
    if !verify_parametrization(f, &p) {
        return Err(Error::VerificationFailed);
    }
    Ok(p)
}

/// Pencil of lines through the singular point `P = (a, b)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Pencil {
    /// Lines `x - a = -t (y - b)`.
    Slope,
    /// Lines through `P` and `(-t, 0)`.
    Intercept,
    /// `Slope` when `b = 0`, `Intercept` otherwise.
    Auto,
}

impl Pencil {
    fn resolve(self, b: &Rational) -> Pencil {
        match self {
            Pencil::Auto if b.is_zero() => Pencil::Slope,
            Pencil::Auto => Pencil::Intercept,
            p => p,
        }
    }
}

/// Parametrizes a form `H` of degree `n` having an `(n-1)`-fold point at
/// `(a : b : 1)`, by intersecting with a pencil of lines through it.
///
/// With `g(X, Y) = H(X + a, Y + b, 1) = f_(n-1) + f_n` and pencil direction
/// `d(t)`, the residual point is `P - (f_(n-1)(d) / f_n(d)) d`.
pub fn parametrize_by_lines(h: &P, a: &Rational, b: &Rational, pencil: Pencil) -> Result<ProjectiveParametrization> {
    if h.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !h.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let n = h.degree_in_set(Var::is_geometric);
    if n < 1 {
        return Err(Error::SystemNotMonomial("form has degree 0".into()));
    }
    let (x, y) = (MPoly::x(), MPoly::y());
    let g = h.substitute(&[
        (Var::X, &x + &MPoly::constant(a.clone())),
        (Var::Y, &y + &MPoly::constant(b.clone())),
        (Var::Z, MPoly::one()),
    ]);
    let low = (0..n - 1).find(|&d| !g.homogeneous_part(d).is_zero());
    if let Some(d) = low {
        return Err(Error::SystemNotMonomial(format!(
            "({a} : {b} : 1) is not a point of multiplicity {} (order {d} term present)",
            n - 1
        )));
    }
    let f_low = g.homogeneous_part(n - 1);
    let f_top = g.homogeneous_part(n);
    let t = MPoly::t();
    let (d1, d2) = match pencil.resolve(b) {
        Pencil::Slope => (-t, MPoly::one()),
        _ => (&t + &MPoly::constant(a.clone()), MPoly::constant(b.clone())),
    };
    let at_d = |f: &P| f.substitute(&[(Var::X, d1.clone()), (Var::Y, d2.clone())]);
    let top = at_d(&f_top);
    let lowv = at_d(&f_low);
    if top.is_zero() {
        return Err(Error::SystemNotMonomial("leading form vanishes along the pencil".into()));
    }
    let comps = [
        top.scale(a) - &d1 * &lowv,
        top.scale(b) - &d2 * &lowv,
        top,
    ];
    checked(h, comps)
}

/// Options for adjoint-pencil parametrization.
#[derive(Clone, Debug)]
pub struct AdjointOptions {
    /// Degree of the adjoint curves.
    pub adjoint_degree: u32,
    /// Simple points of the curve imposed on the adjoints; rational points.
    pub extra_points: Vec<[Rational; 3]>,
    /// Seeds the coordinate shears used on degenerate configurations.
    pub seed: u64,
}

/// Shears tried after the unsheared attempt fails.
pub const ADJOINT_RETRIES: usize = 3;

/// Parametrizes the curve of a system whose singular points are the
/// families of `d` with multiplicity at least 2, by the pencil of
/// `adjoint_degree` adjoints through those families (with multiplicity
/// `s - 1`) and through the extra simple points.
///
/// The pencil parameter is normalized so that, when the system's divisor
/// has at least three rational points at infinity not among the extra
/// points, the pencil members through the first three of them sit at
/// `t = 1`, `t = -1` and `t = infinity`.
pub fn parametrize_by_adjoints(l: &LinearSystem, d: &EffectiveDivisor, opts: &AdjointOptions) -> Result<ProjectiveParametrization> {
    let h = l.defining_polynomial();
    let n = l.degree();
    let singular: Vec<&ConjugateFamily> = d.families().iter().filter(|f| f.mult() >= 2).collect();
    let budget: usize = singular.iter().map(|f| f.size() * (f.mult() * (f.mult() - 1)) as usize).sum();
    let residual = (n * opts.adjoint_degree) as i64 - budget as i64 - opts.extra_points.len() as i64;
    if residual != 1 {
        return Err(Error::BezoutMismatch(format!(
            "{n}*{} - {budget} - {} = {residual}, expected 1",
            opts.adjoint_degree,
            opts.extra_points.len()
        )));
    }
    let mut adj = Vec::new();
    for f in &singular {
        adj.push(f.with_mult(f.mult() - 1)?);
    }
    for pt in &opts.extra_points {
        adj.push(ConjugateFamily::point(pt.clone(), 1)?);
    }
    let adj_div = EffectiveDivisor::new(adj)?;
    let pencil = compute_system(opts.adjoint_degree, &adj_div)?;
    if pencil.dim() != 1 {
        return Err(Error::BezoutMismatch(format!("adjoint system has dimension {}, expected 1", pencil.dim())));
    }
    let h_star = normalized_pencil(&pencil, l.divisor(), &opts.extra_points);

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut last = None;
    for attempt in 0..=ADJOINT_RETRIES {
        let k = if attempt == 0 {
            <Rational as Ring>::zero()
        } else {
            let v: i64 = rng.gen_range(1..=3);
            Rational::from_integer((if rng.gen_bool(0.5) { v } else { -v }).into())
        };
        match residual_point(h, &h_star, &singular, &opts.extra_points, &k) {
            Ok(comps) => return checked(h, comps),
            Err(e @ Error::ResidualNotLinear(_)) => last = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(last.expect("at least one attempt"))
}

fn normalized_pencil(pencil: &LinearSystem, d: Option<&EffectiveDivisor>, extra: &[[Rational; 3]]) -> P {
    let (b0, b1) = (&pencil.basis()[0], &pencil.basis()[1]);
    let fallback = || b0 + &(b1 * &MPoly::t());
    let Some(d) = d else { return fallback() };
    let proportional = |p: &[Rational; 3], q: &[Rational; 3]| {
        (0..3).all(|i| (0..3).all(|j| &p[i] * &q[j] == &p[j] * &q[i]))
    };
    let eval = |f: &P, p: &[Rational; 3]| {
        f.eval_all(&[(Var::X, p[0].clone()), (Var::Y, p[1].clone()), (Var::Z, p[2].clone())])
    };
    // each point R picks the member (b1(R), -b0(R)) in basis coordinates
    let members: Vec<[Rational; 2]> = d
        .families()
        .iter()
        .filter(|f| f.is_at_infinity())
        .filter_map(|f| f.rational_point())
        .filter(|p| !extra.iter().any(|e| proportional(e, p)))
        .map(|p| [eval(b1, &p), -eval(b0, &p)])
        .filter(|m| !m[0].is_zero() || !m[1].is_zero())
        .take(3)
        .collect();
    if members.len() < 3 {
        return fallback();
    }
    let [m1, m2, m3] = [&members[0], &members[1], &members[2]];
    let det = &m1[0] * &m2[1] - &m1[1] * &m2[0];
    if det.is_zero() {
        return fallback();
    }
    // m3 = e1 m1 + e2 m2
    let e1 = (&m3[0] * &m2[1] - &m3[1] * &m2[0]) / &det;
    let e2 = (&m1[0] * &m3[1] - &m1[1] * &m3[0]) / &det;
    if e1.is_zero() || e2.is_zero() {
        return fallback();
    }
    let form = |c: [Rational; 2]| b0.scale(&c[0]) + b1.scale(&c[1]);
    let a = form([m3[0].clone(), m3[1].clone()]);
    let b = form([
        &e1 * &m1[0] - &e2 * &m2[0],
        &e1 * &m1[1] - &e2 * &m2[1],
    ]);
    &(&a * &MPoly::t()) + &b
}

/// `Res_tau(m, p3(tau) v - p(tau))`: up to a constant, the product of
/// `v - p/p3` over the family.
fn family_coordinate_poly(m: &UPoly<Rational>, p: &UPoly<Rational>, p3: &UPoly<Rational>, v: Var) -> P {
    let var = MPoly::var(v);
    let len = p.coeffs().len().max(p3.coeffs().len());
    let g = UPoly::new((0..len).map(|k| var.scale(&p3.coeff(k)) - MPoly::constant(p.coeff(k))).collect());
    resultant(&m.map(|c| MPoly::constant(c.clone())), &g)
}

/// One coordinate of the residual intersection point, as `-c0 / c1`.
fn residual_coordinate(h: &P, h_star: &P, known: &[P], v: Var) -> Result<(P, P)> {
    let other = if v == Var::X { Var::Y } else { Var::X };
    let mut s = crate::poly::resultant(h, h_star, other)?;
    if s.is_zero() {
        return Err(Error::ResidualNotLinear(format!("resultant in {other} vanishes")));
    }
    for f in known {
        s = s
            .div_exact(f)
            .ok_or_else(|| Error::ResidualNotLinear(format!("known factor {f} does not divide")))?;
    }
    if s.degree_in(v) != 1 {
        return Err(Error::ResidualNotLinear(format!("residual has degree {} in {v}", s.degree_in(v))));
    }
    let u = s.to_univariate(v);
    Ok((-u.coeff(0), u.coeff(1)))
}

/// Residual point of `h = 0` and the pencil `h_star` after the shear
/// `x -> x + k y`, returned in the original coordinates.
fn residual_point(h: &P, h_star: &P, singular: &[&ConjugateFamily], extra: &[[Rational; 3]], k: &Rational) -> Result<[P; 3]> {
    let shear = |f: &P| {
        f.substitute(&[(Var::X, MPoly::x() + MPoly::y().scale(k)), (Var::Z, MPoly::one())])
    };
    let (hs, ss) = (shear(h), shear(h_star));
    let mut known_x = Vec::new();
    let mut known_y = Vec::new();
    for f in singular {
        if !f.is_affine() {
            return Err(Error::InvalidDivisor(format!("singular family {f} meets the line at infinity")));
        }
        let [p1, p2, p3] = f.coords();
        let p1s = p1 - &p2.scale(k);
        let e = f.mult() * (f.mult() - 1);
        let nx = family_coordinate_poly(f.modulus(), &p1s, p3, Var::X).pow(e);
        let ny = family_coordinate_poly(f.modulus(), p2, p3, Var::Y).pow(e);
        known_x.push(nx);
        known_y.push(ny);
    }
    for p in extra {
        if p[2].is_zero() {
            continue;
        }
        let xs = (&p[0] - k * &p[1]) / &p[2];
        known_x.push(MPoly::x() - MPoly::constant(xs));
        known_y.push(MPoly::y() - MPoly::constant(&p[1] / &p[2]));
    }
    let (xn, xd) = residual_coordinate(&hs, &ss, &known_x, Var::X)?;
    let (yn, yd) = residual_coordinate(&hs, &ss, &known_y, Var::Y)?;
    let x = RatFunc::new(xn, xd)?;
    let y = RatFunc::new(yn, yd)?;
    let (x1, y1, z1) = (x.num() * y.den(), y.num() * x.den(), x.den() * y.den());
    Ok([&x1 + &y1.scale(k), y1, z1])
}

/// Outcome of [`properness_heuristic`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Properness {
    ProperLikely,
    ImproperLikely,
}

/// Default number of sampled parameter values.
pub const DEFAULT_PROPERNESS_SAMPLES: usize = 16;

/// Heuristic properness test for a parametrization of a degree-`n` curve.
///
/// Requires the maximal `t`-degree to equal `n`; then, for random `t1`, the
/// fiber `{t : P(t) = P(t1)}` is computed exactly as the gcd of the
/// cross-products, and must be `{t1}` alone. Parameters are specialized to
/// random small rationals first.
pub fn properness_heuristic(p: &ProjectiveParametrization, n: u32, samples: usize, seed: u64) -> Properness {
    if p.t_degree() != n {
        return Properness::ImproperLikely;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let small = |rng: &mut ChaCha8Rng| {
        let num: i64 = rng.gen_range(-97..=97);
        let den: i64 = rng.gen_range(1..=97);
        Rational::new(num.into(), den.into())
    };
    let mut params: Vec<Var> = p.components.iter().flat_map(|c| c.vars()).filter(|v| v.is_parameter()).collect();
    params.sort();
    params.dedup();
    let mut spec = None;
    for _ in 0..8 {
        let values: Vec<(Var, Rational)> = params.iter().map(|v| (*v, small(&mut rng))).collect();
        if let Ok(s) = p.specialize(&values) {
            if s.t_degree() == n {
                spec = Some(s);
                break;
            }
        }
    }
    let Some(s) = spec else { return Properness::ImproperLikely };
    let comps: Vec<UPoly<Rational>> = s.components.iter().map(|c| c.to_upoly(Var::T).expect("only t remains")).collect();
    let mut checked_samples = 0;
    let mut tries = 0;
    while checked_samples < samples && tries < samples * 4 {
        tries += 1;
        let t1 = small(&mut rng);
        let v: Vec<Rational> = comps.iter().map(|c| c.eval(&t1)).collect();
        if v.iter().all(Ring::is_zero) {
            continue;
        }
        let cross = |i: usize, j: usize| &comps[i].scale(&v[j]) - &comps[j].scale(&v[i]);
        let g = cross(0, 1).gcd(&cross(0, 2)).gcd(&cross(1, 2));
        if g.deg() > 1 {
            return Properness::ImproperLikely;
        }
        checked_samples += 1;
    }
    Properness::ProperLikely
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{q, qi};
    use crate::poly::parse_poly;

    fn p(s: &str) -> P {
        parse_poly(s).unwrap()
    }

    fn par(a: &str, b: &str, c: &str) -> ProjectiveParametrization {
        ProjectiveParametrization::new([p(a), p(b), p(c)]).unwrap()
    }

    #[test]
    fn circle_verification() {
        let circle = p("x^2 + y^2 - z^2");
        assert!(verify_parametrization(&circle, &par("1 - t^2", "2*t", "1 + t^2")));
        assert!(!verify_parametrization(&circle, &par("t", "t", "1")));
    }

    #[test]
    fn circle_by_lines() {
        let circle = p("x^2 + y^2 - z^2");
        for pencil in [Pencil::Slope, Pencil::Intercept, Pencil::Auto] {
            let r = parametrize_by_lines(&circle, &qi(0), &qi(-1), pencil).unwrap();
            assert!(verify_parametrization(&circle, &r));
            assert!(r.t_degree() <= 2);
            assert_eq!(properness_heuristic(&r, 2, 16, 3), Properness::ProperLikely);
        }
        assert!(matches!(
            parametrize_by_lines(&circle, &qi(0), &qi(0), Pencil::Slope),
            Err(Error::SystemNotMonomial(_))
        ));
    }

    #[test]
    fn normalization() {
        let r = par("-2*t", "4*t^2", "-2*t - 2*t^3");
        assert_eq!(r.components()[2], p("t^2 + 1"));
        assert_eq!(r.components()[0], p("1"));
        assert_eq!(r.components()[1], p("-2*t"));
        let h = par("1/2*t", "1/3", "1");
        assert_eq!(h.components()[0], p("3*t"));
    }

    #[test]
    fn properness() {
        assert_eq!(properness_heuristic(&par("1 - t^2", "2*t", "1 + t^2"), 2, 16, 1), Properness::ProperLikely);
        assert_eq!(properness_heuristic(&par("1 - t^4", "2*t^2", "1 + t^4"), 2, 16, 1), Properness::ImproperLikely);
        // degree matches but t -> -t folds the image
        assert_eq!(properness_heuristic(&par("t^2", "t^4", "1"), 4, 16, 1), Properness::ImproperLikely);
    }

    #[test]
    fn cubic_node_by_lines_and_adjoints() {
        // nodal cubic y^2 z = x^2 (x + z), node at the origin
        let cubic = p("y^2*z - x^3 - x^2*z");
        let r = parametrize_by_lines(&cubic, &qi(0), &qi(0), Pencil::Slope).unwrap();
        assert!(verify_parametrization(&cubic, &r));
        let node = ConjugateFamily::point([qi(0), qi(0), qi(1)], 2).unwrap();
        let sys = LinearSystem::from_basis(3, vec![cubic.clone()]).unwrap();
        let d = EffectiveDivisor::new(vec![node]).unwrap();
        // lines through the node plus one extra point on the curve
        let opts = AdjointOptions { adjoint_degree: 1, extra_points: vec![], seed: 0 };
        let r = parametrize_by_adjoints(&sys, &d, &opts).unwrap();
        assert!(verify_parametrization(&cubic, &r));
        let bad = AdjointOptions { adjoint_degree: 1, extra_points: vec![[qi(0), qi(1), qi(0)]], seed: 0 };
        assert!(matches!(parametrize_by_adjoints(&sys, &d, &bad), Err(Error::BezoutMismatch(_))));
        let conics = AdjointOptions {
            adjoint_degree: 2,
            extra_points: vec![[qi(0), qi(1), qi(0)], [qi(-1), qi(0), qi(1)], [qi(3), q(6, 1), qi(1)]],
            seed: 0,
        };
        let r = parametrize_by_adjoints(&sys, &d, &conics).unwrap();
        assert!(verify_parametrization(&cubic, &r));
    }
}
