//! Acceptance suite: one PASS/FAIL line per criterion, with wall-clock
//! limits. Runs without the libtest harness so the report is always shown.
//!
//! A criterion may be listed in `KNOWN_BLOCKED` when a reference value
//! cannot be reproduced; it still prints FAIL, and the run only succeeds if
//! the set of failures is exactly that list.

mod common;

use std::time::{Duration, Instant};

use common::*;
use hausdiv::approx::{approximate_parametrize, check_hausdorff_curve, ApproxRequest, Interpolation};
use hausdiv::arith::{q, qi, Rational};
use hausdiv::divisor::{decompose_rational_hausdorff, divisor_from_curve, ConjugateFamily, EffectiveDivisor};
use hausdiv::linsys::{absolute_factor_count, compute_system, is_irreducible_system, LinearSystem, Verdict};
use hausdiv::numeric::{hausdorff_estimate, BoundingBox};
use hausdiv::param::{parametrize_by_adjoints, parametrize_by_lines, verify_parametrization, AdjointOptions, Pencil, ProjectiveParametrization};
use hausdiv::poly::{substitute_parametrization, MPoly, Monomial, Var};
use hausdiv::Error;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type P = MPoly<Rational>;

/// Criteria expected to fail, with the reason shown alongside.
const KNOWN_BLOCKED: &[(u32, &str)] = &[(
    7,
    "reference Q2 = -101/32 is not the nearest 1/32 to the root -3.17425 (nearest is -102/32)",
)];

#[derive(Default)]
struct Checks {
    items: Vec<(String, bool)>,
}

impl Checks {
    fn check(&mut self, name: impl Into<String>, ok: bool) {
        self.items.push((name.into(), ok));
    }

    fn failed(&self) -> Vec<&str> {
        self.items.iter().filter(|(_, ok)| !ok).map(|(n, _)| n.as_str()).collect()
    }
}

/// Same point of projective space over Q(params): `a = c * b` for a nonzero rational `c`.
fn proportional(a: &P, b: &P) -> bool {
    !a.is_zero() && !b.is_zero() && a.scale(&b.lc()) == b.scale(&a.lc())
}

fn spans_equal(l: &LinearSystem, expected: &[P]) -> bool {
    let Ok(e) = LinearSystem::from_basis(l.degree(), expected.to_vec()) else { return false };
    l.dim() == e.dim() && l.basis().iter().all(|b| e.contains(b))
}

/// Specializations of a parametric form at the unit vectors of its parameters.
fn unit_specializations(h: &P) -> Vec<P> {
    let mut params: Vec<Var> = h.vars().into_iter().filter(|v| v.is_parameter()).collect();
    params.sort();
    params
        .iter()
        .map(|&v| {
            let vals: Vec<(Var, Rational)> =
                params.iter().map(|&w| (w, if w == v { qi(1) } else { qi(0) })).collect();
            vals.iter().fold(h.clone(), |f, (w, c)| f.eval_var(*w, c))
        })
        .collect()
}

fn geometric_support(h: &P) -> Vec<Monomial> {
    h.coefficients_in(Var::is_geometric).into_keys().collect()
}

fn dim_of(n: u32, d: &EffectiveDivisor) -> i64 {
    match compute_system(n, d) {
        Ok(l) => l.dim() as i64,
        Err(Error::EmptySystem) => -1,
        Err(e) => panic!("compute_system failed: {e}"),
    }
}

fn c1(c: &mut Checks) {
    let two_points = div(vec![pt(1, 0, 0, 1), pt(0, 1, 0, 1)]);
    let l = compute_system(2, &two_points).unwrap();
    c.check("dim 3 through (1:0:0)+(0:1:0)", l.dim() == 3);
    c.check("span {xy, xz, yz, z^2}", spans_equal(&l, &[p("x*y"), p("x*z"), p("y*z"), p("z^2")]));

    let circular = div(vec![family("t^2 + 1", "t", "1", "0", 1)]);
    let l = compute_system(2, &circular).unwrap();
    c.check("circular points: dim 3", l.dim() == 3);
    c.check(
        "circular points: span {x^2+y^2, xz, yz, z^2}",
        spans_equal(&l, &[p("x^2 + y^2"), p("x*z"), p("y*z"), p("z^2")]),
    );
}

fn c2(c: &mut Checks) {
    c.check("four-point Hausdorff divisor: dim 10", dim_of(4, &four_point_hausdorff()) == 10);
    c.check("rational quartic divisor: dim 1", dim_of(4, &rational_quartic_divisor()) == 1);

    let conj = compute_system(4, &conjugate_quartic_divisor()).unwrap();
    c.check("conjugate quartic divisor: dim 1", conj.dim() == 1);
    c.check("conjugate quartic: reference 10-monomial support", {
        let s = geometric_support(conj.defining_polynomial());
        s.len() == 10 && s == geometric_support(&reference_conjugate_system())
    });
    // The reference system matches the divisor with (t:1:0) at infinity.
    let swapped = compute_system(4, &conjugate_quartic_divisor_swapped()).unwrap();
    c.check("(t:1:0) variant: dim 1", swapped.dim() == 1);
    c.check(
        "(t:1:0) variant: reference system spans the computed one",
        spans_equal(&swapped, &unit_specializations(&reference_conjugate_system())),
    );

    c.check("monomial quartic divisor: dim 4", dim_of(4, &monomial_quartic_divisor()) == 4);

    let f = p(PIPELINE_CURVE);
    let (a, b) = pipeline_point();
    let d = divisor_from_curve(&f).unwrap().with_family(ConjugateFamily::affine_point(a, b, 3).unwrap()).unwrap();
    let l = compute_system(4, &d).unwrap();
    c.check("D + 3P of the pipeline curve: dim 4", l.dim() == 4);
    let reference = p("lambda_4*x^3*z + 2825745/524288*y*z^3*lambda_4 + 1024*x*y^2*z*lambda_2 + 1312*x*y^2*z*lambda_3 \
        + 1681/4*y^2*z^2*lambda_3 - lambda_4*y^4 + 13448*y^3*z*lambda_3 + 7236657/512*y^3*z*lambda_4 + lambda_4*x^4 \
        + 32*x^2*y*z*lambda_3 - 68921/2048*x*y*z^2*lambda_4 + lambda_3*x^2*z^2 + 1312*y^2*z^2*lambda_2 \
        + lambda_2*x*z^3 + 41*x*y*z^2*lambda_3 + 32768*y^3*z*lambda_1 + 96*y*z^3*lambda_1 + 3072*y^2*z^2*lambda_1 \
        + 64*x*y*z^2*lambda_2 + 8979/64*x^2*y*z*lambda_4 + lambda_1*z^4 - 2825809/16384*y^2*z^2*lambda_4 \
        + 41/2*y*z^3*lambda_2 + 149609/64*x*y^2*z*lambda_4 + 20992*y^3*z*lambda_2");
    // Only four of the five announced parameters appear in the reference form.
    c.check(
        "D + 3P: every reference specialization is a member",
        unit_specializations(&reference).iter().all(|s| l.contains(s)),
    );
}

fn c3(c: &mut Checks) {
    let l = compute_system(4, &rational_quartic_divisor()).unwrap();
    let specs = unit_specializations(&reference_quartic_system());
    c.check("(lambda_1, lambda_2) = (1, 0) is a member", l.contains(&specs[0]));
    c.check("(lambda_1, lambda_2) = (0, 1) is a member", l.contains(&specs[1]));

    let lines = compute_system(1, &div(vec![pt(0, 0, 1, 1)])).unwrap();
    c.check("lines through (0:0:1): dim 1", lines.dim() == 1);
    c.check("x and y are members", lines.contains(&p("x")) && lines.contains(&p("y")));
    c.check("lambda_1 x + lambda_2 y spans", spans_equal(&lines, &unit_specializations(&p("lambda_1*x + lambda_2*y"))));
}

fn c4(c: &mut Checks) {
    let l = compute_system(4, &rational_quartic_divisor()).unwrap();
    let r = is_irreducible_system(&l, 7, 0).unwrap();
    c.check("rational quartic system: Irreducible", r.verdict == Verdict::Irreducible);

    let l = compute_system(4, &modified_quartic_divisor()).unwrap();
    let r = is_irreducible_system(&l, 7, 0).unwrap();
    c.check("modified divisor: Reducible", r.verdict == Verdict::Reducible);
    let fixed = &r.fixed_component;
    c.check(
        "modified divisor: fixed component contains (x - 2z)(x - y)",
        fixed.div_exact(&p("(x - 2*z)*(x - y)")).is_some(),
    );

    let l = compute_system(2, &div(vec![pt(1, 0, 0, 2)])).unwrap();
    let r = is_irreducible_system(&l, 7, 0).unwrap();
    c.check("conics singular at (1:0:0): Reducible", r.verdict == Verdict::Reducible);
}

fn c5(c: &mut Checks) {
    let l = compute_system(4, &monomial_quartic_divisor()).unwrap();
    // `a_{2,1}` in the reference system is the fifth parameter.
    let reference = p("lambda_1*y^3*z + lambda_2*y^4 + lambda_3*x*y^2*z + lambda_5*x^2*y*z + lambda_4*x^3*z + lambda_2*x^4");
    c.check("reference system spans the computed one", spans_equal(&l, &unit_specializations(&reference)));

    let r = parametrize_by_lines(&reference, &qi(0), &qi(0), Pencil::Slope).unwrap();
    let n = p("t*lambda_3 - lambda_1 + t^3*lambda_4 - t^2*lambda_5");
    let expected = ProjectiveParametrization::new([-(p("t") * &n), n, p("lambda_2*(t^4 + 1)")]).unwrap();
    c.check("pencil t*y + x = 0 reproduces P(t)", r.components() == expected.components());
    c.check("H(P(t)) = 0", substitute_parametrization(&reference, r.components()).is_zero());
    c.check("verify_parametrization", verify_parametrization(&reference, &r));

    let own = parametrize_by_lines(l.defining_polynomial(), &qi(0), &qi(0), Pencil::Slope).unwrap();
    c.check("computed system verifies too", verify_parametrization(l.defining_polynomial(), &own));
}

fn c6(c: &mut Checks) {
    let d = rational_quartic_divisor();
    // The adjoint example labels the parameters in the opposite order from
    // the reference system of the same divisor.
    let specs = unit_specializations(&reference_quartic_system());
    let l = LinearSystem::from_basis(4, vec![specs[1].clone(), specs[0].clone()]).unwrap();
    c.check("relabelled reference system spans the computed one", spans_equal(&compute_system(4, &d).unwrap(), l.basis()));
    let opts = AdjointOptions { adjoint_degree: 2, extra_points: vec![[qi(1), qi(0), qi(0)]], seed: 0 };
    match parametrize_by_adjoints(&l, &d, &opts) {
        Ok(r) => {
            c.check("adjoint parametrization verifies", verify_parametrization(l.defining_polynomial(), &r));
            let (x, y) = (r.affine_x().unwrap(), r.affine_y().unwrap());
            c.check("y-denominator associate to 14 lambda_2 (t^2 - 1)", proportional(y.den(), &p("14*lambda_2*(t^2 - 1)")));
            // `a_{3,1}` and `a_{0,3}` in the reference output stand for lambda_2 and lambda_1.
            let a1 = p("-238*lambda_1*t^3*lambda_2 + 2240*lambda_2*t^2*lambda_1 + 98*lambda_1^2*t^3 - 2787*lambda_2^2*t^2 \
                        + 1470*lambda_1^2 - 6986*lambda_1*lambda_2 - 539*lambda_1^2*t + 8328*lambda_2^2 \
                        + 1792*lambda_1*lambda_2*t - 441*lambda_1^2*t^2 - 1209*lambda_2^2*t");
            let a2 = p("14*lambda_2*(2*lambda_2 - 2*lambda_2*t^2 - 17*lambda_2*t^3 + 17*lambda_2*t - 7*lambda_1*t + 7*lambda_1*t^3)");
            let a3 = p("486*lambda_2 + 77*lambda_1*t + 34*lambda_2*t^3 + 63*lambda_1*t^2 - 145*lambda_2*t - 147*lambda_2*t^2 \
                        - 14*lambda_1*t^3 - 210*lambda_1");
            let a4 = p("14*lambda_2*(t^2 - 1)");
            c.check("x = A1/A2 exactly", x.num().clone() * &a2 == x.den().clone() * &a1);
            c.check("y = A3/A4 exactly", y.num().clone() * &a4 == y.den().clone() * &a3);
        }
        Err(e) => c.check(format!("adjoint parametrization: {e}"), false),
    }

    let sys = compute_system(4, &conjugate_quartic_divisor_swapped()).unwrap();
    let at = |a, b| sys.restrict(&div(vec![pt(a, b, 1, 1)])).unwrap();
    let sub = at(0, 1);
    c.check("restriction at (0:1:1): dim 0", sub.dim() == 0);
    let den = p("(-t^2 - 6*t + 9)*(3*t^2 + 2*t + 1)");
    let reference = ProjectiveParametrization::new([
        -p("18 - 15*t + 6*t^2 + 74*t^3 + 21*t^4"),
        p("-3*t - 6*t^4 + 75*t^2 + 23*t^3"),
        p("2") * &den,
    ])
    .unwrap();
    c.check("reference P = (0:1:1) parametrization verifies", verify_parametrization(sub.defining_polynomial(), &reference));
    let den = p("4*(16 - 16*t - 4*t^2)*(16 + 16*t + 12*t^2)");
    let reference = ProjectiveParametrization::new([
        -p("1024 + 1024*t + 960*t^4 + 4096*t^2 + 4352*t^3"),
        p("1024 + 2048*t - 192*t^4 + 3584*t^2 + 512*t^3"),
        den,
    ])
    .unwrap();
    c.check("reference P = (1:1:1) parametrization verifies", verify_parametrization(at(1, 1).defining_polynomial(), &reference));
}

fn c7(c: &mut Checks) {
    let f = p(PIPELINE_CURVE);
    let reference_points = vec![(q(89, 32), qi(-3)), (q(-101, 32), qi(-3)), (q(65, 32), qi(3)), (q(-103, 32), qi(3))];

    let mut req = ApproxRequest::new(f.clone());
    req.singular_point = Some(pipeline_point());
    req.interpolation = Interpolation::Sweep { lines: vec![qi(-3), qi(3)], denom: BigInt::from(32) };
    match approximate_parametrize(&req) {
        Ok(r) => {
            let mut got = r.interpolation_points.clone();
            let mut want = reference_points.clone();
            got.sort();
            want.sort();
            let shown: Vec<String> = got.iter().map(|(a, b)| format!("({a}, {b})")).collect();
            c.check(format!("sweep y = +-3, 1/32 rounding gives the reference Q points [got {}]", shown.join(" ")), got == want);
            c.check("sweep result verifies", r.verified);
        }
        Err(e) => c.check(format!("sweep pipeline: {e}"), false),
    }

    req.interpolation = Interpolation::Points(reference_points);
    match approximate_parametrize(&req) {
        Ok(r) => {
            let reference_g = p("-11189780504385617373808*y*z^3 - 64177446384507906894080*y^2*z^2 \
                + 25328929045126690271232*y^3*z - 68315663351181964574720*x^3*z \
                + 69446473202369720695808*x^2*z^2 - 30949472647714110913696*x*z^3 \
                - 24897211394328530780160*y^4 + 24897211394328530780160*x^4 \
                + 28677478743593794827264*x*y*z^2 + 104113819442735106875392*x*y^2*z \
                - 17303699534378810261504*x^2*y*z + 5094649843686955824985*z^4");
            c.check("dim 0 after interpolation", r.system.dim() == 0);
            let g = r.curve.clone().unwrap_or_else(P::zero);
            c.check("G is a rational multiple of the reference G", proportional(&g, &reference_g));
            c.check("G irreducible", r.irreducibility.verdict == Verdict::Irreducible);
            c.check("parametrization verifies G", r.verified && verify_parametrization(&g, &r.parametrization));
            let b = p("16777216*t^4 + 42991616*t^3 + 41312256*t^2 + 17643776*t + 2825745");
            let comps = r.parametrization.components();
            c.check("denominator associate to B(t)", proportional(&comps[2], &b));
            let a1 = p("208880643591165188824385 + 1309845452973236446822400*t^4 + 3152348304551138336556032*t^2 \
                        + 1326609920992631925943776*t + 3321871574175160774459392*t^3");
            c.check("x-numerator associate to A1(t)", proportional(&comps[0], &a1));
        }
        Err(e) => c.check(format!("pipeline with reference points: {e}"), false),
    }
}

fn random_squarefree(rng: &mut ChaCha8Rng, deg: usize) -> String {
    // Distinct rational roots plus, for odd leftovers, an irreducible quadratic.
    let mut roots: Vec<i64> = Vec::new();
    let mut parts = Vec::new();
    let mut left = deg;
    if left >= 2 && rng.gen_bool(0.5) {
        parts.push(format!("(t^2 + {})", rng.gen_range(1..6)));
        left -= 2;
    }
    while roots.len() < left {
        let r = rng.gen_range(-9..=9);
        if !roots.contains(&r) {
            roots.push(r);
        }
    }
    parts.extend(roots.iter().map(|r| format!("(t - ({r}))")));
    parts.join("*")
}

fn random_hausdorff(rng: &mut ChaCha8Rng, n: usize) -> EffectiveDivisor {
    loop {
        let mut fams = Vec::new();
        let mut left = n;
        while left > 0 {
            let k = rng.gen_range(1..=left.min(5));
            let m = random_squarefree(rng, k);
            let fam = if rng.gen_bool(0.5) { family(&m, "1", "t", "0", 1) } else { family(&m, "t", "1", "0", 1) };
            fams.push(fam);
            left -= k;
        }
        if let Ok(d) = EffectiveDivisor::new(fams) {
            return d;
        }
    }
}

fn random_affine_points(rng: &mut ChaCha8Rng, d: &EffectiveDivisor, k: usize, s: u32) -> EffectiveDivisor {
    let mut d = d.clone();
    let mut added = 0;
    while added < k {
        let fam = ConjugateFamily::affine_point(q(rng.gen_range(-20..=20), rng.gen_range(1..=4)), qi(rng.gen_range(-9..=9)), s).unwrap();
        if let Ok(e) = d.with_family(fam) {
            d = e;
            added += 1;
        }
    }
    d
}

fn eq1_bound(n: u32, d: &EffectiveDivisor) -> i64 {
    let n = n as i64;
    let conds: i64 = d.families().iter().map(|f| f.size() as i64 * (f.mult() as i64 * (f.mult() as i64 + 1) / 2)).sum();
    n * (n + 3) / 2 - conds
}

fn c8(c: &mut Checks) {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let (mut cases, mut equalities) = (0, 0);
    let mut bad = Vec::new();
    for i in 0..60 {
        let n = rng.gen_range(2..=5u32);
        let dh = random_hausdorff(&mut rng, n as usize);
        let (d, kind) = match i % 4 {
            0 => (dh.clone(), "hausdorff"),
            1 => (random_affine_points(&mut rng, &dh, ((n - 1) * (n - 2) / 2) as usize, 2), "rational"),
            2 => (random_affine_points(&mut rng, &dh, 1, n - 1), "monomial"),
            _ => {
                let k = rng.gen_range(0..=4);
                (random_affine_points(&mut rng, &dh, k, 2), "general")
            }
        };
        let dim = dim_of(n, &d);
        let mut bounds = vec![("Eq1", eq1_bound(n, &d))];
        match kind {
            "hausdorff" => bounds.push(("hausdorff", (n * (n + 1) / 2) as i64)),
            "rational" | "monomial" => {
                let cls = decompose_rational_hausdorff(&d, n).unwrap();
                let ds = cls.singular_part.degree() as i64;
                bounds.push(("3n-1-deg D", 3 * n as i64 - 1 - d.degree() as i64));
                bounds.push(("2n-1-deg D_S", 2 * n as i64 - 1 - ds));
                if cls.is_monomial {
                    bounds.push(("monomial", n as i64));
                }
            }
            _ => {}
        }
        cases += 1;
        let best = bounds.iter().map(|b| b.1).max().unwrap();
        if dim == best {
            equalities += 1;
        }
        for (name, b) in bounds {
            if dim < b {
                bad.push(format!("case {i} ({kind}, n={n}): dim {dim} < {name} bound {b}"));
            }
        }
    }
    c.check(format!("{cases} random divisors, {equalities} meet their best bound with equality"), cases >= 50);
    for b in &bad {
        println!("    {b}");
    }
    c.check("every dimension satisfies every applicable bound", bad.is_empty());
}

fn c9(c: &mut Checks) {
    let est = |f: &str, g: &str, r: f64, grid: usize| {
        hausdorff_estimate(&p(f), &p(g), &BoundingBox::square(r).unwrap(), grid).unwrap().estimate
    };
    let circles = est("x^2 + y^2 - 1", "x^2 + y^2 - 4", 3.0, 400);
    c.check(format!("circles r = 1, 2: {circles:.5}"), (circles - 1.0).abs() <= 0.02);
    let lines = est("y", "y - 2", 3.0, 200);
    c.check(format!("lines y = 0, 2: {lines:.5}"), (lines - 2.0).abs() <= 0.01);
    let h10 = est("x*y - 1", "x*y - 2", 10.0, 200);
    let h100 = est("x*y - 1", "x*y - 2", 100.0, 200);
    c.check(format!("hyperbolas: R=10 {h10:.5}, R=100 {h100:.5}"), (h10 - h100).abs() < 0.05);
}

fn random_quartic(rng: &mut ChaCha8Rng) -> P {
    loop {
        let mut terms = Vec::new();
        for i in 0..=4u32 {
            for j in 0..=(4 - i) {
                let c: i64 = rng.gen_range(-9..=9);
                if c != 0 {
                    terms.push(format!("({c})*x^{i}*y^{j}"));
                }
            }
        }
        let Ok(f) = hausdiv::poly::parse_poly(&terms.join(" + ")) else { continue };
        if f.total_degree() != Some(4) || !check_hausdorff_curve(&f).is_ok_and(|h| h.is_hausdorff) {
            continue;
        }
        if absolute_factor_count(&f).ok() == Some(1) {
            return f;
        }
    }
}

fn c10(c: &mut Checks) {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut ok = 0;
    for i in 0..10 {
        let f = random_quartic(&mut rng);
        let mut req = ApproxRequest::new(f.clone());
        req.seed = i;
        match approximate_parametrize(&req) {
            Ok(r) => {
                let h = r.curve.clone().unwrap_or_else(|| r.system.defining_polynomial().clone());
                let verified = r.verified && verify_parametrization(&h, &r.parametrization);
                let retries = r.warnings.iter().filter(|w| w.contains("moved")).count();
                let good = verified && r.irreducibility.verdict == Verdict::Irreducible && retries <= 2;
                if good {
                    ok += 1;
                } else {
                    println!("    quartic {i}: verified={verified} verdict={:?} retries={retries} f={f}", r.irreducibility.verdict);
                }
            }
            Err(e) => println!("    quartic {i}: {e} f={f}"),
        }
    }
    c.check(format!("{ok}/10 random Hausdorff quartics: verified and Irreducible"), ok == 10);
}

type Criterion = (u32, &'static str, fn(&mut Checks), Duration);

fn main() {
    let criteria: Vec<Criterion> = vec![
        (1, "conic systems", c1, Duration::from_secs(1)),
        (2, "dimension fixtures", c2, Duration::from_secs(10)),
        (3, "membership", c3, Duration::from_secs(10)),
        (4, "irreducibility", c4, Duration::from_secs(30)),
        (5, "parametrization by lines", c5, Duration::from_secs(10)),
        (6, "adjoint parametrization", c6, Duration::from_secs(60)),
        (7, "approximation pipeline", c7, Duration::from_secs(60)),
        (8, "dimension bounds on random divisors", c8, Duration::from_secs(120)),
        (9, "Hausdorff estimator", c9, Duration::from_secs(30)),
        (10, "random quartic pipeline", c10, Duration::from_secs(120)),
    ];
    let mut failures = Vec::new();
    let mut over_time = Vec::new();
    for (id, name, run, limit) in criteria {
        let mut checks = Checks::default();
        let start = Instant::now();
        run(&mut checks);
        let elapsed = start.elapsed();
        let failed = checks.failed();
        let timely = elapsed <= limit;
        let pass = failed.is_empty() && timely;
        println!(
            "criterion {id:>2} {}: {name} ({:.2} s, limit {} s)",
            if pass { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            limit.as_secs()
        );
        for (n, ok) in &checks.items {
            println!("    [{}] {n}", if *ok { "ok" } else { "FAILED" });
        }
        if let Some((_, why)) = KNOWN_BLOCKED.iter().find(|(k, _)| *k == id) {
            if !pass {
                println!("    known blocker: {why}");
            }
        }
        if !timely {
            over_time.push(id);
        }
        if !pass {
            failures.push(id);
        }
    }
    let expected: Vec<u32> = KNOWN_BLOCKED.iter().map(|(k, _)| *k).collect();
    println!("failed criteria: {failures:?}; known blocked: {expected:?}");
    assert!(over_time.is_empty(), "time limits exceeded: {over_time:?}");
    assert_eq!(failures, expected, "unexpected acceptance outcome");
}
