//! Exact arithmetic and multivariate polynomials.

mod common;

use common::p;
use hausdiv::arith::{
    factor_over_q, isolate_real_roots, q, qi, rational_to_f64, resultant, squarefree_decomposition, squarefree_part,
    Field, NumberField, Rational, UPoly,
};
use hausdiv::poly::{
    content_in_parameters, parse_poly, parse_upoly, partial_derivative, resultant as mresultant, substitute_parametrization,
    MPoly, Var,
};
use hausdiv::Error;
use proptest::prelude::*;

fn u(s: &str) -> UPoly<Rational> {
    parse_upoly(s).unwrap()
}

#[test]
fn univariate_gcd() {
    assert_eq!(u("t^2 - 1").gcd(&u("t - 1")), u("t - 1"));
    assert_eq!(u("t^4 + 1").gcd(&u("t^2 + 1")), u("1"));
    assert_eq!(u("0").gcd(&u("t^2 - 2")), u("t^2 - 2"));
}

#[test]
fn squarefree_parts() {
    assert_eq!(squarefree_part(&u("t^2 - 2*t + 1")).unwrap(), u("t - 1"));
    for s in ["t^4 + 1", "t^4 - 1"] {
        let f = u(s);
        // oracle: gcd(f, f') = 1
        assert!(f.gcd(&f.derivative()).is_constant());
        assert_eq!(squarefree_part(&f).unwrap(), f);
    }
    let d = squarefree_decomposition(&u("(t - 1)^2*(t + 3)")).unwrap();
    assert!(d.contains(&(u("t - 1"), 2)) && d.contains(&(u("t + 3"), 1)));
}

#[test]
fn factorization_over_q() {
    let (_, mut fs) = factor_over_q(&u("t^4 - 4")).unwrap();
    fs.sort_by_key(|(f, _)| f.to_string());
    let want = [(u("t^2 + 2"), 1), (u("t^2 - 2"), 1)];
    assert_eq!(fs.len(), 2);
    assert!(want.iter().all(|w| fs.contains(w)));
    let (_, fs) = factor_over_q(&u("t^4 + 1")).unwrap();
    assert_eq!(fs, vec![(u("t^4 + 1"), 1)]);
}

#[test]
fn real_root_isolation() {
    let r = isolate_real_roots(&u("t^2 - 2"), &qi(-2), &qi(2), &q(1, 64)).unwrap();
    assert_eq!(r.len(), 2);
    for (iv, s) in r.iter().zip([-1.0f64, 1.0]) {
        let lo = rational_to_f64(&iv.lo);
        let hi = rational_to_f64(&iv.hi);
        assert!(lo <= s * 2f64.sqrt() && s * 2f64.sqrt() <= hi && hi - lo <= 1.0 / 64.0);
    }
    assert!(isolate_real_roots(&u("t^2 + 1"), &qi(-10), &qi(10), &q(1, 64)).unwrap().is_empty());
}

#[test]
fn pipeline_curve_fiber_roots() {
    let f = p(common::PIPELINE_CURVE).eval_var(Var::Y, &qi(-3)).to_upoly(Var::X).unwrap();
    let r = isolate_real_roots(&f, &qi(-10), &qi(10), &q(1, 1 << 20)).unwrap();
    let mids: Vec<f64> = r.iter().map(|i| rational_to_f64(&i.midpoint())).collect();
    assert_eq!(mids.len(), 2);
    // f64 sign-change oracle
    let g = |x: f64| {
        let y = -3.0f64;
        4.0 + 2.0 * y - 5.0 * y * y - 9.0 * y.powi(3) + 6.0 * y.powi(4) + x - 7.0 * x * y - 5.0 * x * y * y - 6.0 * x * x
            + 6.0 * x * x * y
            - 3.0 * x.powi(3)
            - 6.0 * x.powi(4)
    };
    for m in &mids {
        assert!(g(m - 1e-5) * g(m + 1e-5) < 0.0);
    }
    assert!((mids[0] + 3.17).abs() < 0.02 && (mids[1] - 2.78).abs() < 0.02, "{mids:?}");
}

#[test]
fn number_field_inverses() {
    let k = NumberField::new(u("t^2 - 2")).unwrap();
    let t = k.generator();
    assert_eq!(t.inv().unwrap().poly(), &u("1/2*t"));
    let g = NumberField::new(u("t^2 + 1")).unwrap();
    let one_plus_i = g.generator() + &hausdiv::arith::AlgNum::rational(qi(1));
    assert_eq!(one_plus_i.inv().unwrap().poly(), &u("1/2 - 1/2*t"));
    assert!(NumberField::new(u("t^2 - 1")).is_err());
}

#[test]
fn resultants() {
    // Res(a, b) = lc(a)^deg(b) * prod b(roots of a)
    assert_eq!(resultant(&u("t - 3"), &u("t - 5")), qi(-2));
    let r = mresultant(&p("x^2 + y^2 - 1"), &p("y - x"), Var::Y).unwrap();
    assert_eq!(r, p("2*x^2 - 1"));
    let r = resultant(&u("t^2 + 1"), &u("41/64*t + 1/32"));
    assert_ne!(r, qi(0));
}

#[test]
fn derivatives_and_homogenization() {
    assert_eq!(partial_derivative(&p("x^3*y"), "x", 1).unwrap(), p("3*x^2*y"));
    assert_eq!(partial_derivative(&p("x^2 + y^2 - z^2"), "z", 2).unwrap(), p("-2"));
    let h = p("lambda_1*z^2 + lambda_2*y*z + lambda_3*x*z + lambda_4*x*y");
    assert_eq!(partial_derivative(&h, "y", 1).unwrap(), p("lambda_2*z + lambda_4*x"));
    assert!(matches!(partial_derivative(&h, "w", 1), Err(Error::UnknownVariable(_))));

    assert_eq!(p("y - x^2").homogenize().unwrap(), p("y*z - x^2"));
    assert_eq!(p("x^2 + y^2 - z^2").dehomogenize().unwrap(), p("x^2 + y^2 - 1"));
    let f = p(common::PIPELINE_CURVE).homogenize().unwrap();
    assert_eq!(f.leading_form().unwrap(), p("6*y^4 - 6*x^4"));
    assert_eq!(p("y*z - x^2").leading_form().unwrap(), p("-x^2"));
}

#[test]
fn parametrization_substitution() {
    let t = p("t");
    assert!(substitute_parametrization(&p("z*y - x^2"), &[t.clone(), p("t^2"), p("1")]).is_zero());
    assert!(substitute_parametrization(&p("x^2 + y^2 - z^2"), &[p("1 - t^2"), p("2*t"), p("1 + t^2")]).is_zero());
}

#[test]
fn parameter_content() {
    assert_eq!(content_in_parameters(&p("lambda_1^2*x + lambda_1^2*y")), p("lambda_1^2"));
    assert_eq!(content_in_parameters(&p("lambda_1*z^2 + lambda_2*y*z + lambda_3*x*z + lambda_4*x*y")), p("1"));
    assert_eq!(content_in_parameters(&p("(lambda_1 + lambda_2)*(x^2 + y^2)")), p("lambda_1 + lambda_2"));
}

#[test]
fn parse_errors_carry_positions() {
    match parse_poly("x^^2") {
        Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (1, 3)),
        other => panic!("{other:?}"),
    }
    assert!(parse_poly("2x").is_err());
    assert_eq!(parse_poly("-x^2").unwrap(), p("-(x^2)"));
}

fn small_poly() -> impl Strategy<Value = MPoly<Rational>> {
    let term = (-5i64..=5, 1i64..=3, 0u32..3, 0u32..3, 0u32..2, 0u32..2);
    prop::collection::vec(term, 0..6).prop_map(|ts| {
        ts.into_iter().fold(MPoly::zero(), |acc, (c, d, i, j, k, l)| {
            let m = MPoly::constant(q(c, d))
                * MPoly::x().pow(i)
                * MPoly::y().pow(j)
                * MPoly::z().pow(k)
                * MPoly::lambda(1).pow(l);
            acc + m
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn print_parse_round_trip(f in small_poly()) {
        prop_assert_eq!(parse_poly(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn exact_division_inverts_multiplication(f in small_poly(), g in small_poly()) {
        prop_assume!(!g.is_zero());
        let h = f.clone() * &g;
        prop_assert_eq!(h.div_exact(&g), Some(f));
    }

    #[test]
    fn gcd_divides_both(f in small_poly(), g in small_poly(), h in small_poly()) {
        prop_assume!(!h.is_zero() && !(f.is_zero() && g.is_zero()));
        let a = f * &h;
        let b = g * &h;
        let d = a.gcd(&b);
        prop_assert!(d.div_exact(&h).is_some() || h.is_constant());
        prop_assert!(a.div_exact(&d).is_some() && b.div_exact(&d).is_some());
    }

    #[test]
    fn resultant_vanishes_on_common_factor(a in -6i64..6, b in -6i64..6, c in -6i64..6) {
        let common = u(&format!("t - ({a})"));
        let f = common.clone() * u(&format!("t^2 + {}", b * b + 1));
        let g = common * u(&format!("t - ({c}) - 1/2"));
        prop_assert_eq!(resultant(&f, &g), qi(0));
    }
}
