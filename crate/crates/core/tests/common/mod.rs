//! Fixture divisors and curves shared by the integration tests.
#![allow(dead_code)]

use hausdiv::arith::{q, qi, Rational};
use hausdiv::divisor::{ConjugateFamily, EffectiveDivisor};
use hausdiv::poly::{parse_poly, parse_upoly, MPoly};

pub fn p(s: &str) -> MPoly<Rational> {
    parse_poly(s).unwrap()
}

pub fn pt(a: i64, b: i64, c: i64, s: u32) -> ConjugateFamily {
    ConjugateFamily::point([qi(a), qi(b), qi(c)], s).unwrap()
}

pub fn family(m: &str, p1: &str, p2: &str, p3: &str, s: u32) -> ConjugateFamily {
    let u = |x: &str| parse_upoly(x).unwrap();
    ConjugateFamily::new(u(m), [u(p1), u(p2), u(p3)], s).unwrap()
}

pub fn div(f: Vec<ConjugateFamily>) -> EffectiveDivisor {
    EffectiveDivisor::new(f).unwrap()
}

/// (1:1:0) + (-1:1:0) + (0:1:0) + (1:0:0).
pub fn four_point_hausdorff() -> EffectiveDivisor {
    div(vec![pt(1, 1, 0, 1), pt(-1, 1, 0, 1), pt(0, 1, 0, 1), pt(1, 0, 0, 1)])
}

/// Four points at infinity plus double points at (3,-2), (1,1), (2,3).
pub fn rational_quartic_divisor() -> EffectiveDivisor {
    four_point_hausdorff()
        .union(&div(vec![pt(3, -2, 1, 2), pt(1, 1, 1, 2), pt(2, 3, 1, 2)]))
        .unwrap()
}

/// Same infinity part; the double point (3,-2) moved to (2,2), making
/// (2,2), (1,1) and (2,3) collinear in pairs with infinity points.
pub fn modified_quartic_divisor() -> EffectiveDivisor {
    four_point_hausdorff()
        .union(&div(vec![pt(2, 2, 1, 2), pt(1, 1, 1, 2), pt(2, 3, 1, 2)]))
        .unwrap()
}

/// The reference defining polynomial of the rational quartic system.
pub fn reference_quartic_system() -> MPoly<Rational> {
    p("(65/2*lambda_2 - 8175/98*lambda_1)*z^4 + (17*lambda_2 - 1518/49*lambda_1)*y*z^3 \
       + (-29/2*lambda_2 + 2787/98*lambda_1)*y^2*z^2 + lambda_2*y^3*z \
       + (-97*lambda_2 + 11618/49*lambda_1)*x*z^3 + (11/2*lambda_2 - 1789/98*lambda_1)*x*y*z^2 \
       + (9/2*lambda_2 - 121/14*lambda_1)*x*y^2*z - lambda_1*x*y^3 \
       + (143/2*lambda_2 - 16873/98*lambda_1)*x^2*z^2 + (-11/2*lambda_2 + 163/14*lambda_1)*x^2*y*z \
       + (-15*lambda_2 + 254/7*lambda_1)*x^3*z + lambda_1*x^3*y")
}

/// Sum over t^4 - 4 of (1:t:0) plus twice the sum over t^3 + 1 of (t:t^2:1).
pub fn conjugate_quartic_divisor() -> EffectiveDivisor {
    div(vec![
        family("t^4 - 4", "1", "t", "0", 1),
        family("t^3 + 1", "t", "t^2", "1", 2),
    ])
}

/// The same double points with the infinity part written as (t:1:0); the
/// reference system and both reference specializations belong to this divisor.
pub fn conjugate_quartic_divisor_swapped() -> EffectiveDivisor {
    div(vec![
        family("t^4 - 4", "t", "1", "0", 1),
        family("t^3 + 1", "t", "t^2", "1", 2),
    ])
}

/// Sum over t^4 + 1 of (t:1:0) plus 3(0:0:1).
pub fn monomial_quartic_divisor() -> EffectiveDivisor {
    div(vec![family("t^4 + 1", "t", "1", "0", 1), pt(0, 0, 1, 3)])
}

/// The quartic curve used in the approximate-parametrization pipeline.
pub const PIPELINE_CURVE: &str = "4+2*y-5*y^2-9*y^3+6*y^4+x-7*x*y-5*x*y^2-6*x^2+6*x^2*y-3*x^3-6*x^4";

pub fn pipeline_point() -> (Rational, Rational) {
    (q(41, 64), q(-1, 32))
}

/// Reference system of the conjugate quartic; its stray `a_{4,0}` is `lambda_2`.
pub fn reference_conjugate_system() -> MPoly<Rational> {
    p("-lambda_1*z^4 + lambda_2*y^2*z^2 - lambda_1*y^3*z - 4*lambda_2*y^4 - 3*lambda_1*x*y*z^2 \
       - 8*lambda_2*x*y^2*z - 4*lambda_2*x^2*z^2 - 2*lambda_2*x^2*y*z + lambda_1*x^3*z + lambda_2*x^4")
}
