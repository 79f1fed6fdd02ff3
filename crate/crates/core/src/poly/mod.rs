//! Sparse multivariate polynomials in the geometric variables x, y, z,
//! parameters lambda_1, lambda_2, ..., an auxiliary parameter t and the
//! extension generator alpha.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use smallvec::SmallVec;

use crate::arith::{Field, Rational, Ring, UPoly};
use crate::error::{Error, Result};

mod gcd;
pub mod parse;

pub use gcd::{content_in_parameters, RatFunc};
pub use parse::{parse_poly, parse_upoly};

/// A variable. Lower index means more significant in the term order:
/// x > y > z > lambda_1 > lambda_2 > ... > t > alpha.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Var(pub u32);

impl Var {
    pub const X: Var = Var(0);
    pub const Y: Var = Var(1);
    pub const Z: Var = Var(2);
    pub const T: Var = Var(1_000_000);
    pub const ALPHA: Var = Var(1_000_001);

    /// The parameter lambda_k, `k >= 1`.
    pub fn lambda(k: u32) -> Var {
        assert!((1..999_000).contains(&k), "parameter index out of range");
        Var(2 + k)
    }

    pub fn is_geometric(self) -> bool {
        self.0 <= 2
    }

    pub fn lambda_index(self) -> Option<u32> {
        (self.0 > 2 && self.0 < Var::T.0).then(|| self.0 - 2)
    }

    pub fn is_parameter(self) -> bool {
        self.lambda_index().is_some()
    }

    pub fn name(self) -> String {
        match self {
            Var::X => "x".into(),
            Var::Y => "y".into(),
            Var::Z => "z".into(),
            Var::T => "t".into(),
            Var::ALPHA => "alpha".into(),
            v => format!("lambda_{}", v.0 - 2),
        }
    }

    pub fn from_name(name: &str) -> Option<Var> {
        match name {
            "x" => Some(Var::X),
            "y" => Some(Var::Y),
            "z" => Some(Var::Z),
            "t" => Some(Var::T),
            "alpha" => Some(Var::ALPHA),
            _ => {
                let k: u32 = name.strip_prefix("lambda_")?.parse().ok()?;
                (1..999_000).contains(&k).then(|| Var::lambda(k))
            }
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// A monomial: sorted `(variable, exponent)` pairs with positive exponents.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial {
    exps: SmallVec<[(Var, u32); 4]>,
    degree: u32,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: Var, e: u32) -> Self {
        let mut m = Monomial::one();
        if e > 0 {
            m.exps.push((v, e));
            m.degree = e;
        }
        m
    }

    pub fn from_pairs(pairs: &[(Var, u32)]) -> Self {
        let mut m = Monomial::one();
        for &(v, e) in pairs {
            m = m.mul(&Monomial::var(v, e));
        }
        m
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.exps.iter().find(|(w, _)| *w == v).map_or(0, |p| p.1)
    }

    pub fn pairs(&self) -> &[(Var, u32)] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    /// Total degree in the given variables.
    pub fn degree_in(&self, pred: impl Fn(Var) -> bool) -> u32 {
        self.exps.iter().filter(|(v, _)| pred(*v)).map(|p| p.1).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = SmallVec::new();
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.exps, &other.exps);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                exps.push(a[i]);
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                exps.push(b[j]);
                j += 1;
            } else {
                exps.push((a[i].0, a[i].1 + b[j].1));
                i += 1;
                j += 1;
            }
        }
        Monomial { exps, degree: self.degree + other.degree }
    }

    /// `self / other` if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut exps: SmallVec<[(Var, u32); 4]> = SmallVec::new();
        let mut j = 0;
        for &(v, e) in &self.exps {
            let mut e = e;
            if j < other.exps.len() && other.exps[j].0 == v {
                if other.exps[j].1 > e {
                    return None;
                }
                e -= other.exps[j].1;
                j += 1;
            } else if j < other.exps.len() && other.exps[j].0 < v {
                return None;
            }
            if e > 0 {
                exps.push((v, e));
            }
        }
        if j < other.exps.len() {
            return None;
        }
        Some(Monomial { exps, degree: self.degree - other.degree })
    }

    /// Removes variable `v`, returning its exponent.
    pub fn split_off(&self, v: Var) -> (u32, Monomial) {
        let e = self.exp(v);
        let exps: SmallVec<[(Var, u32); 4]> = self.exps.iter().copied().filter(|p| p.0 != v).collect();
        (e, Monomial { exps, degree: self.degree - e })
    }

    /// Keeps only the variables satisfying `pred`.
    pub fn restrict(&self, pred: impl Fn(Var) -> bool) -> Monomial {
        let exps: SmallVec<[(Var, u32); 4]> = self.exps.iter().copied().filter(|p| pred(p.0)).collect();
        let degree = exps.iter().map(|p| p.1).sum();
        Monomial { exps, degree }
    }

    fn lex_cmp(&self, other: &Monomial) -> Ordering {
        for (a, b) in self.exps.iter().zip(other.exps.iter()) {
            if a.0 != b.0 {
                // the one carrying the more significant variable is larger
                return if a.0 < b.0 { Ordering::Greater } else { Ordering::Less };
            }
            if a.1 != b.1 {
                return a.1.cmp(&b.1);
            }
        }
        self.exps.len().cmp(&other.exps.len())
    }
}

impl Ord for Monomial {
    /// Graded lexicographic order.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| self.lex_cmp(other))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return write!(f, "1");
        }
        for (i, (v, e)) in self.exps.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse multivariate polynomial with terms kept in graded lex order.
#[derive(Clone, PartialEq, Debug, Default)]
pub struct MPoly<F> {
    terms: BTreeMap<Monomial, F>,
}

impl<F: Ring> MPoly<F> {
    pub fn zero() -> Self {
        MPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn from_i64(n: i64) -> Self {
        Self::constant(F::from_i64(n))
    }

    pub fn var(v: Var) -> Self {
        Self::term(F::one(), Monomial::var(v, 1))
    }

    pub fn x() -> Self {
        Self::var(Var::X)
    }
    pub fn y() -> Self {
        Self::var(Var::Y)
    }
    pub fn z() -> Self {
        Self::var(Var::Z)
    }
    pub fn t() -> Self {
        Self::var(Var::T)
    }
    pub fn lambda(k: u32) -> Self {
        Self::var(Var::lambda(k))
    }

    pub fn term(c: F, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MPoly { terms }
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Monomial, F)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().clone() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    /// Terms in increasing order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &F)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().is_one())
    }

    pub fn constant_term(&self) -> F {
        self.terms.get(&Monomial::one()).cloned().unwrap_or_else(F::zero)
    }

    pub fn coeff(&self, m: &Monomial) -> F {
        self.terms.get(m).cloned().unwrap_or_else(F::zero)
    }

    /// Leading term in graded lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &F)> {
        self.terms.iter().next_back()
    }

    pub fn lc(&self) -> F {
        self.leading_term().map_or_else(F::zero, |t| t.1.clone())
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }

    /// Total degree in the variables satisfying `pred`.
    pub fn degree_in_set(&self, pred: impl Fn(Var) -> bool + Copy) -> u32 {
        self.terms.keys().map(|m| m.degree_in(pred)).max().unwrap_or(0)
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exp(v) > 0)
    }

    /// Variables occurring, in increasing index order.
    pub fn vars(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = self.terms.keys().flat_map(|m| m.pairs().iter().map(|p| p.0)).collect();
        vs.sort();
        vs.dedup();
        vs
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MPoly {
            terms: self
                .terms
                .iter()
                .filter_map(|(m, a)| {
                    let v = a.clone() * c;
                    (!v.is_zero()).then(|| (m.clone(), v))
                })
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        MPoly { terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect() }
    }

    pub fn map_coeffs<G: Ring>(&self, f: impl Fn(&F) -> G) -> MPoly<G> {
        MPoly::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Iterated partial derivative.
    pub fn derivative(&self, v: Var, order: u32) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let (e, rest) = m.split_off(v);
            if e < order {
                continue;
            }
            let falling: i64 = (0..order).map(|i| (e - i) as i64).product();
            out.add_term(rest.mul(&Monomial::var(v, e - order)), c.clone() * &F::from_i64(falling));
        }
        out
    }

    /// Partial derivative with the exponents given per variable, e.g.
    /// `[(X, 1), (Z, 2)]` for d^3/dx dz^2.
    pub fn partial(&self, orders: &[(Var, u32)]) -> Self {
        orders.iter().fold(self.clone(), |acc, &(v, k)| acc.derivative(v, k))
    }

    /// Substitutes each listed variable by a polynomial simultaneously.
    pub fn substitute(&self, subs: &[(Var, MPoly<F>)]) -> Self {
        // cache powers of each substituted polynomial
        let mut powers: Vec<Vec<MPoly<F>>> = subs.iter().map(|_| vec![Self::one()]).collect();
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut rest = Monomial::one();
            let mut factor = Self::constant(c.clone());
            for &(v, e) in m.pairs() {
                match subs.iter().position(|(w, _)| *w == v) {
                    Some(i) => {
                        while powers[i].len() <= e as usize {
                            let next = powers[i].last().unwrap() * &subs[i].1;
                            powers[i].push(next);
                        }
                        factor = &factor * &powers[i][e as usize];
                    }
                    None => rest = rest.mul(&Monomial::var(v, e)),
                }
            }
            out = out + factor.mul_monomial(&rest);
        }
        out
    }

    /// Replaces `v` by the constant `value`.
    pub fn eval_var(&self, v: Var, value: &F) -> Self {
        let mut out = Self::zero();
        let mut powers = vec![F::one()];
        for (m, c) in &self.terms {
            let (e, rest) = m.split_off(v);
            while powers.len() <= e as usize {
                let next = powers.last().unwrap().clone() * value;
                powers.push(next);
            }
            out.add_term(rest, c.clone() * &powers[e as usize]);
        }
        out
    }

    /// Evaluates all variables; missing variables count as zero.
    pub fn eval_all(&self, values: &[(Var, F)]) -> F {
        let mut acc = F::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for &(v, e) in m.pairs() {
                let x = values.iter().find(|p| p.0 == v).map_or_else(F::zero, |p| p.1.clone());
                term = term * &x.pow(e);
            }
            acc = acc + term;
        }
        acc
    }

    pub fn is_homogeneous_in(&self, pred: impl Fn(Var) -> bool + Copy) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree_in(pred));
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Homogeneous in x, y, z (parameters are ignored).
    pub fn is_homogeneous(&self) -> bool {
        self.is_homogeneous_in(Var::is_geometric)
    }

    /// Homogenizes a polynomial in x, y with respect to z.
    pub fn homogenize(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let n = self.degree_in_set(|v| v == Var::X || v == Var::Y);
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let d = m.degree_in(|v| v == Var::X || v == Var::Y);
            out.add_term(m.mul(&Monomial::var(Var::Z, n - d)), c.clone());
        }
        Ok(out)
    }

    /// `F(x, y, 1)` for a form `F` homogeneous in x, y, z.
    pub fn dehomogenize(&self) -> Result<Self> {
        if !self.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        Ok(self.eval_var(Var::Z, &F::one()))
    }

    /// `F(x, y, 0)`; errors if `z` divides `F`.
    pub fn leading_form(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !self.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        let lf = self.eval_var(Var::Z, &F::zero());
        if lf.is_zero() {
            return Err(Error::CurveContainsLineAtInfinity);
        }
        Ok(lf)
    }

    /// Homogeneous part of degree `d` in the geometric variables.
    pub fn homogeneous_part(&self, d: u32) -> Self {
        MPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree_in(Var::is_geometric) == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// View as a univariate polynomial in `v` with polynomial coefficients.
    pub fn to_univariate(&self, v: Var) -> UPoly<MPoly<F>> {
        let n = self.degree_in(v) as usize;
        let mut cs = vec![Self::zero(); n + 1];
        for (m, c) in &self.terms {
            let (e, rest) = m.split_off(v);
            cs[e as usize].add_term(rest, c.clone());
        }
        UPoly::new(cs)
    }

    pub fn from_univariate(p: &UPoly<MPoly<F>>, v: Var) -> Self {
        let mut out = Self::zero();
        for (i, c) in p.coeffs().iter().enumerate() {
            let mono = Monomial::var(v, i as u32);
            for (m, a) in c.terms() {
                out.add_term(m.mul(&mono), a.clone());
            }
        }
        out
    }

    /// Converts a polynomial in `v` alone into a dense univariate one.
    pub fn to_upoly(&self, v: Var) -> Option<UPoly<F>> {
        let n = self.degree_in(v) as usize;
        let mut cs = vec![F::zero(); n + 1];
        for (m, c) in &self.terms {
            let (e, rest) = m.split_off(v);
            if !rest.is_one() {
                return None;
            }
            cs[e as usize] = c.clone();
        }
        Some(UPoly::new(cs))
    }

    pub fn from_upoly(p: &UPoly<F>, v: Var) -> Self {
        Self::from_terms(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| (Monomial::var(v, i as u32), c.clone())),
        )
    }

    /// Exact division; `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (dm, dc) = d.leading_term()?;
        let (dm, dc) = (dm.clone(), dc.clone());
        let mut r = self.clone();
        let mut quo = Self::zero();
        while let Some((m, c)) = r.leading_term() {
            let qm = m.div(&dm)?;
            let qc = c.div_exact(&dc)?;
            r = r - &(d.mul_monomial(&qm).scale(&qc));
            quo.add_term(qm, qc);
        }
        Some(quo)
    }

    /// Coefficients with respect to the variables satisfying `pred`:
    /// groups terms by their restriction to those variables.
    pub fn coefficients_in(&self, pred: impl Fn(Var) -> bool + Copy) -> BTreeMap<Monomial, MPoly<F>> {
        let mut out: BTreeMap<Monomial, MPoly<F>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let key = m.restrict(pred);
            let rest = m.restrict(|v| !pred(v));
            out.entry(key).or_insert_with(Self::zero).add_term(rest, c.clone());
        }
        out
    }
}

impl<F: Field> MPoly<F> {
    /// Scales so the leading coefficient is 1.
    pub fn monic(&self) -> Self {
        match self.leading_term() {
            None => Self::zero(),
            Some((_, c)) => self.scale(&c.inv().expect("nonzero")),
        }
    }
}

impl MPoly<Rational> {
    /// Scales to integer coefficients with gcd 1 and positive leading
    /// coefficient; returns the scale factor used.
    pub fn primitive_integer(&self) -> (Rational, Self) {
        use num_integer::Integer;
        use num_traits::{One, Signed, Zero};
        if self.is_zero() {
            return (<Rational as Ring>::one(), Self::zero());
        }
        let mut den = num_bigint::BigInt::one();
        let mut num = num_bigint::BigInt::zero();
        for c in self.terms.values() {
            den = den.lcm(c.denom());
            num = num.gcd(c.numer());
        }
        let mut s = Rational::new(den, num);
        if self.lc().is_negative() {
            s = -s;
        }
        (s.clone(), self.scale(&s))
    }
}

impl<F: Ring> MPoly<F> {
    fn add_ref(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    fn sub_ref(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    fn mul_ref(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        if self.is_zero() || other.is_zero() {
            return out;
        }
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1.clone() * c2);
            }
        }
        out
    }
}

macro_rules! mpoly_binop {
    ($tr:ident, $m:ident, $imp:ident) => {
        impl<'a, F: Ring> $tr<&'a MPoly<F>> for &'a MPoly<F> {
            type Output = MPoly<F>;
            fn $m(self, rhs: &'a MPoly<F>) -> MPoly<F> {
                self.$imp(rhs)
            }
        }
        impl<'a, F: Ring> $tr<&'a MPoly<F>> for MPoly<F> {
            type Output = MPoly<F>;
            fn $m(self, rhs: &'a MPoly<F>) -> MPoly<F> {
                self.$imp(rhs)
            }
        }
        impl<F: Ring> $tr<MPoly<F>> for MPoly<F> {
            type Output = MPoly<F>;
            fn $m(self, rhs: MPoly<F>) -> MPoly<F> {
                self.$imp(&rhs)
            }
        }
    };
}
mpoly_binop!(Add, add, add_ref);
mpoly_binop!(Sub, sub, sub_ref);
mpoly_binop!(Mul, mul, mul_ref);

impl<F: Ring> Neg for MPoly<F> {
    type Output = MPoly<F>;
    fn neg(self) -> MPoly<F> {
        MPoly { terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect() }
    }
}

impl<F: Ring> Neg for &MPoly<F> {
    type Output = MPoly<F>;
    fn neg(self) -> MPoly<F> {
        -self.clone()
    }
}

impl<F: Ring> Ring for MPoly<F> {
    fn zero() -> Self {
        MPoly::zero()
    }
    fn one() -> Self {
        MPoly::one()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.is_constant() && self.constant_term().is_one()
    }
    fn from_rational(q: &Rational) -> Self {
        MPoly::constant(F::from_rational(q))
    }
    fn div_exact(&self, other: &Self) -> Option<Self> {
        MPoly::div_exact(self, other)
    }
    fn as_rational(&self) -> Option<Rational> {
        if self.is_constant() {
            self.constant_term().as_rational()
        } else {
            None
        }
    }
}

impl<F: Ring> fmt::Display for MPoly<F> {
    /// Terms in decreasing graded lex order, e.g. `x^2 - 1/2*y*z + 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let (neg, abs) = match c.as_rational() {
                Some(r) if r < <Rational as Ring>::zero() => (true, F::from_rational(&-r)),
                _ => (false, c.clone()),
            };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

/// Resultant of `f` and `g` eliminating `v`.
pub fn resultant<F: Ring>(f: &MPoly<F>, g: &MPoly<F>, v: Var) -> Result<MPoly<F>> {
    if !f.contains_var(v) || !g.contains_var(v) {
        return Err(Error::VariableAbsent(v.name()));
    }
    Ok(crate::arith::resultant(&f.to_univariate(v), &g.to_univariate(v)))
}

/// Sylvester-determinant resultant (cross-check).
pub fn sylvester_resultant<F: Ring>(f: &MPoly<F>, g: &MPoly<F>, v: Var) -> Result<MPoly<F>> {
    if !f.contains_var(v) || !g.contains_var(v) {
        return Err(Error::VariableAbsent(v.name()));
    }
    Ok(crate::arith::sylvester_resultant(&f.to_univariate(v), &g.to_univariate(v)))
}

/// `F(p1, p2, p3)` for a parametrization given by polynomials in t (and
/// possibly parameters).
pub fn substitute_parametrization<F: Ring>(form: &MPoly<F>, p: &[MPoly<F>; 3]) -> MPoly<F> {
    form.substitute(&[(Var::X, p[0].clone()), (Var::Y, p[1].clone()), (Var::Z, p[2].clone())])
}

/// Partial derivative with error on variables outside the known set.
pub fn partial_derivative<F: Ring>(f: &MPoly<F>, v: &str, order: u32) -> Result<MPoly<F>> {
    let var = Var::from_name(v).ok_or_else(|| Error::UnknownVariable(v.to_string()))?;
    Ok(f.derivative(var, order))
}
