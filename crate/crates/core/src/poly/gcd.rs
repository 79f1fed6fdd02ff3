//! Multivariate gcd (recursive primitive remainder sequences), content and
//! reduced rational functions.

use std::fmt;

use super::{MPoly, Var};
use crate::arith::{Field, UPoly};
use crate::error::{Error, Result};

impl<F: Field> MPoly<F> {
    /// Greatest common divisor with leading coefficient 1; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        gcd_rec(self, other).monic()
    }

    /// Content with respect to `v`: gcd of the coefficients of `self` viewed
    /// as a polynomial in `v`.
    pub fn content_in(&self, v: Var) -> Self {
        upoly_content(&self.to_univariate(v)).monic()
    }

    /// Squarefree test: no nonconstant factor divides `self` twice.
    pub fn is_squarefree(&self) -> bool {
        if self.is_constant() {
            return !self.is_zero();
        }
        let mut g = self.clone();
        for v in self.vars() {
            g = g.gcd(&self.derivative(v, 1));
            if g.is_constant() {
                return true;
            }
        }
        g.is_constant()
    }
}

fn gcd_rec<F: Field>(a: &MPoly<F>, b: &MPoly<F>) -> MPoly<F> {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    if a.is_constant() || b.is_constant() {
        return MPoly::one();
    }
    let mut vars = a.vars();
    vars.extend(b.vars());
    vars.sort();
    vars.dedup();
    // A variable missing from one side only enters through the content.
    if let Some(&v) = vars.iter().find(|&&v| a.contains_var(v) != b.contains_var(v)) {
        return if a.contains_var(v) {
            gcd_rec(&upoly_content(&a.to_univariate(v)), b)
        } else {
            gcd_rec(a, &upoly_content(&b.to_univariate(v)))
        };
    }
    // Lowest degree first keeps remainder sequences short.
    let v = *vars.iter().min_by_key(|&&v| (a.degree_in(v).max(b.degree_in(v)), v)).expect("nonconstant");
    let ua = a.to_univariate(v);
    let ub = b.to_univariate(v);
    let ca = upoly_content(&ua);
    let cb = upoly_content(&ub);
    let pa = ua.div_exact_scalar(&ca).expect("content divides");
    let pb = ub.div_exact_scalar(&cb).expect("content divides");
    let c = gcd_rec(&ca, &cb);
    let g = primitive_gcd(pa, pb);
    &c * &MPoly::from_univariate(&g, v)
}

/// Gcd of two primitive polynomials. A specialization of the coefficient
/// variables that keeps both leading coefficients nonzero can only raise
/// the gcd degree, so a trivial specialized gcd proves coprimality.
fn primitive_gcd<F: Field>(a: UPoly<MPoly<F>>, b: UPoly<MPoly<F>>) -> UPoly<MPoly<F>> {
    let (a, b) = if a.deg() >= b.deg() { (a, b) } else { (b, a) };
    if let Some(d) = specialized_gcd_degree(&a, &b) {
        if d == 0 {
            return UPoly::one();
        }
        if d == b.deg() && a.div_exact(&b).is_some() {
            return b;
        }
    }
    primitive_prs(a, b)
}

fn specialized_gcd_degree<F: Field>(a: &UPoly<MPoly<F>>, b: &UPoly<MPoly<F>>) -> Option<isize> {
    let mut vars: Vec<Var> = a.coeffs().iter().chain(b.coeffs()).flat_map(|c| c.vars()).collect();
    vars.sort();
    vars.dedup();
    for attempt in 0..4i64 {
        let point: Vec<(Var, F)> =
            vars.iter().enumerate().map(|(i, &v)| (v, F::from_i64((7 * i as i64 + 13 * attempt + 3) % 23 - 11))).collect();
        let ev = |p: &UPoly<MPoly<F>>| UPoly::new(p.coeffs().iter().map(|c| c.eval_all(&point)).collect());
        let (ea, eb) = (ev(a), ev(b));
        if ea.deg() == a.deg() && eb.deg() == b.deg() {
            return Some(ea.gcd(&eb).deg());
        }
    }
    None
}

fn upoly_content<F: Field>(p: &UPoly<MPoly<F>>) -> MPoly<F> {
    let mut g = MPoly::zero();
    for c in p.coeffs() {
        g = gcd_rec(&g, c);
        if g.is_constant() && !g.is_zero() {
            return MPoly::one();
        }
    }
    g.monic()
}

fn primitive_part<F: Field>(p: &UPoly<MPoly<F>>) -> UPoly<MPoly<F>> {
    let c = upoly_content(p);
    p.div_exact_scalar(&c).expect("content divides")
}

fn primitive_prs<F: Field>(a: UPoly<MPoly<F>>, b: UPoly<MPoly<F>>) -> UPoly<MPoly<F>> {
    let (mut a, mut b) = if a.deg() >= b.deg() { (a, b) } else { (b, a) };
    loop {
        if b.deg() == 0 {
            return UPoly::one();
        }
        let r = a.pseudo_rem(&b);
        if r.is_zero() {
            return b;
        }
        a = b;
        b = primitive_part(&r);
    }
}

/// Gcd of the coefficients of `h` viewed as a polynomial in x, y, z over
/// the ring of the remaining variables; leading coefficient 1.
pub fn content_in_parameters<F: Field>(h: &MPoly<F>) -> MPoly<F> {
    let mut g = MPoly::zero();
    for c in h.coefficients_in(Var::is_geometric).values() {
        g = gcd_rec(&g, c);
        if g.is_constant() && !g.is_zero() {
            return MPoly::one();
        }
    }
    g.monic()
}

/// Reduced quotient of two polynomials with monic denominator.
#[derive(Clone, PartialEq, Debug)]
pub struct RatFunc<F> {
    num: MPoly<F>,
    den: MPoly<F>,
}

impl<F: Field> RatFunc<F> {
    pub fn new(num: MPoly<F>, den: MPoly<F>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFunc { num, den: MPoly::one() });
        }
        let g = num.gcd(&den);
        let num = num.div_exact(&g).expect("gcd divides");
        let den = den.div_exact(&g).expect("gcd divides");
        let l = den.lc().inv().expect("nonzero");
        Ok(RatFunc { num: num.scale(&l), den: den.scale(&l) })
    }

    pub fn from_poly(p: MPoly<F>) -> Self {
        RatFunc { num: p, den: MPoly::one() }
    }

    pub fn num(&self) -> &MPoly<F> {
        &self.num
    }

    pub fn den(&self) -> &MPoly<F> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(&self.num * &o.den + &(&o.num * &self.den), &self.den * &o.den).expect("nonzero")
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::new(&self.num * &o.den - &(&o.num * &self.den), &self.den * &o.den).expect("nonzero")
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(&self.num * &o.num, &self.den * &o.den).expect("nonzero")
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Self::new(&self.num * &o.den, &self.den * &o.num)
    }
}

impl<F: Field> fmt::Display for RatFunc<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.num, self.den)
    }
}
