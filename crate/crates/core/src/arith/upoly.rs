//! Dense univariate polynomials over a [`Ring`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Field, Rational, Ring};

/// Dense univariate polynomial, coefficients stored lowest degree first with
/// no trailing zeros. The zero polynomial has an empty coefficient vector.
#[derive(Clone, PartialEq, Debug, Default)]
pub struct UPoly<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> UPoly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(R::one())
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `c * t^k`.
    pub fn monomial(c: R, k: usize) -> Self {
        let mut v = vec![R::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    /// The polynomial `t`.
    pub fn var() -> Self {
        Self::monomial(R::one(), 1)
    }

    /// `t - a`
    pub fn linear_root(a: R) -> Self {
        Self::new(vec![-a, R::one()])
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| R::from_i64(c)).collect())
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to -1.
    pub fn deg(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    pub fn lc(&self) -> R {
        self.coeffs.last().cloned().unwrap_or_else(R::zero)
    }

    pub fn tc(&self) -> R {
        self.coeff(0)
    }

    pub fn scale(&self, c: &R) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|a| a.clone() * c).collect())
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> UPoly<S> {
        UPoly::new(self.coeffs.iter().map(f).collect())
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![R::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        UPoly { coeffs: v }
    }

    pub fn eval(&self, x: &R) -> R {
        let mut acc = R::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Evaluation at an element of a ring containing the coefficients.
    pub fn eval_in<S: Ring>(&self, x: &S, embed: impl Fn(&R) -> S) -> S {
        let mut acc = S::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + &embed(c);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * &R::from_i64(i as i64))
                .collect(),
        )
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

    /// `self(g(t))`
    pub fn compose(&self, g: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * g) + &Self::constant(c.clone());
        }
        acc
    }

    /// `t^deg * self(1/t)`, with `deg` at least the degree.
    pub fn reverse(&self, deg: usize) -> Self {
        let mut v = self.coeffs.clone();
        v.resize(deg + 1, R::zero());
        v.reverse();
        Self::new(v)
    }

    /// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b`.
    pub fn pseudo_rem(&self, b: &Self) -> Self {
        assert!(!b.is_zero(), "pseudo-remainder by zero");
        let db = b.deg();
        if self.deg() < db {
            return self.clone();
        }
        let l = b.lc();
        let mut e = self.deg() - db + 1;
        let mut r = self.clone();
        while !r.is_zero() && r.deg() >= db {
            let shift = (r.deg() - db) as usize;
            let c = r.lc();
            let n = r.coeffs.len();
            let mut v: Vec<R> = r.coeffs.iter().map(|a| a.clone() * &l).collect();
            for (i, bc) in b.coeffs.iter().enumerate() {
                v[i + shift] = v[i + shift].clone() - &(c.clone() * bc);
            }
            v.truncate(n - 1);
            r = Self::new(v);
            e -= 1;
        }
        r.scale(&l.pow(e as u32))
    }

    /// Exact division over an integral domain; `None` if `other` does not
    /// divide `self`.
    pub fn div_exact(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.deg() < other.deg() {
            return None;
        }
        let db = other.deg() as usize;
        let lb = other.lc();
        let mut r = self.coeffs.clone();
        let mut quo = vec![R::zero(); r.len() - db];
        for k in (0..quo.len()).rev() {
            let c = &r[k + db];
            if c.is_zero() {
                continue;
            }
            let qk = c.div_exact(&lb)?;
            for (i, bc) in other.coeffs.iter().enumerate() {
                r[k + i] = r[k + i].clone() - &(qk.clone() * bc);
            }
            quo[k] = qk;
        }
        if r.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::new(quo))
    }

    /// Divides every coefficient exactly by `c`.
    pub fn div_exact_scalar(&self, c: &R) -> Option<Self> {
        let v: Option<Vec<R>> = self.coeffs.iter().map(|a| a.div_exact(c)).collect();
        v.map(Self::new)
    }
}

impl<F: Field> UPoly<F> {
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let inv = self.lc().inv().expect("nonzero leading coefficient");
        self.scale(&inv)
    }

    pub fn is_monic(&self) -> bool {
        !self.is_zero() && self.lc().is_one()
    }

    /// Euclidean division; panics on division by zero.
    pub fn divrem(&self, b: &Self) -> (Self, Self) {
        assert!(!b.is_zero(), "polynomial division by zero");
        if self.deg() < b.deg() {
            return (Self::zero(), self.clone());
        }
        let db = b.deg() as usize;
        let inv = b.lc().inv().expect("nonzero leading coefficient");
        let mut r = self.coeffs.clone();
        let mut quo = vec![F::zero(); r.len() - db];
        for k in (0..quo.len()).rev() {
            let c = r[k + db].clone();
            if c.is_zero() {
                continue;
            }
            let qk = c * &inv;
            for (i, bc) in b.coeffs.iter().enumerate() {
                r[k + i] = r[k + i].clone() - &(qk.clone() * bc);
            }
            quo[k] = qk;
        }
        r.truncate(db);
        (Self::new(quo), Self::new(r))
    }

    pub fn rem(&self, b: &Self) -> Self {
        self.divrem(b).1
    }

    /// Monic greatest common divisor (zero if both are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: returns `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (qq, r) = r0.divrem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = &s0 - &(&qq * &s1);
            s0 = std::mem::replace(&mut s1, s);
            let t = &t0 - &(&qq * &t1);
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = r0.lc().inv().expect("nonzero");
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    /// Inverse of `self` modulo `m`, if it exists.
    pub fn inv_mod(&self, m: &Self) -> Option<Self> {
        let (g, s, _) = self.rem(m).ext_gcd(m);
        if g.is_one() {
            Some(s.rem(m))
        } else {
            None
        }
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_squarefree(&self) -> bool {
        if self.is_constant() {
            return !self.is_zero();
        }
        self.gcd(&self.derivative()).is_constant()
    }

    /// Monic squarefree part.
    pub fn squarefree_part(&self) -> Self {
        if self.is_constant() {
            return Self::one();
        }
        let g = self.gcd(&self.derivative());
        self.divrem(&g).0.monic()
    }

    /// Yun's squarefree decomposition: monic `(a_i, i)` with
    /// `self = lc * prod a_i^i`, the `a_i` pairwise coprime and squarefree.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, u32)> {
        let mut out = Vec::new();
        if self.is_constant() {
            return out;
        }
        let f = self.monic();
        let fp = f.derivative();
        let a0 = f.gcd(&fp);
        let mut b = f.divrem(&a0).0;
        let mut c = fp.divrem(&a0).0;
        let mut d = &c - &b.derivative();
        let mut i = 1u32;
        loop {
            let a = b.gcd(&d);
            if !a.is_constant() {
                out.push((a.clone(), i));
            }
            b = b.divrem(&a).0;
            if b.is_constant() {
                break;
            }
            c = d.divrem(&a).0;
            d = &c - &b.derivative();
            i += 1;
        }
        out
    }
}

impl UPoly<Rational> {
    /// Clears denominators and content: returns `(c, p)` with `self = c * p`,
    /// `p` primitive with integer coefficients and positive leading coefficient.
    pub fn primitive_integer(&self) -> (Rational, Vec<num_bigint::BigInt>) {
        use num_integer::Integer;
        use num_traits::{One, Signed, Zero};
        if self.is_zero() {
            return (<Rational as Ring>::zero(), Vec::new());
        }
        let mut den = num_bigint::BigInt::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let ints: Vec<num_bigint::BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
            .collect();
        let mut g = num_bigint::BigInt::zero();
        for c in &ints {
            g = g.gcd(c);
        }
        if ints.last().unwrap().is_negative() {
            g = -g;
        }
        let prim = ints.into_iter().map(|c| c / &g).collect();
        (Rational::new(g, den), prim)
    }

    pub fn from_integers(cs: &[num_bigint::BigInt]) -> Self {
        Self::new(cs.iter().map(|c| Rational::from_integer(c.clone())).collect())
    }
}

impl<R: Ring> UPoly<R> {
    fn add_ref(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => a.clone() + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Self::new(v)
    }

    fn sub_ref(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => a.clone() - b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => -b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Self::new(v)
    }

    fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut v = vec![R::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                v[i + j] = v[i + j].clone() + &(a.clone() * b);
            }
        }
        Self::new(v)
    }
}

macro_rules! upoly_binop {
    ($tr:ident, $m:ident, $imp:ident) => {
        impl<'a, R: Ring> $tr<&'a UPoly<R>> for &'a UPoly<R> {
            type Output = UPoly<R>;
            fn $m(self, rhs: &'a UPoly<R>) -> UPoly<R> {
                self.$imp(rhs)
            }
        }
        impl<'a, R: Ring> $tr<&'a UPoly<R>> for UPoly<R> {
            type Output = UPoly<R>;
            fn $m(self, rhs: &'a UPoly<R>) -> UPoly<R> {
                self.$imp(rhs)
            }
        }
        impl<R: Ring> $tr<UPoly<R>> for UPoly<R> {
            type Output = UPoly<R>;
            fn $m(self, rhs: UPoly<R>) -> UPoly<R> {
                self.$imp(&rhs)
            }
        }
    };
}
upoly_binop!(Add, add, add_ref);
upoly_binop!(Sub, sub, sub_ref);
upoly_binop!(Mul, mul, mul_ref);

impl<R: Ring> Neg for UPoly<R> {
    type Output = UPoly<R>;
    fn neg(self) -> UPoly<R> {
        UPoly { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl<R: Ring> Neg for &UPoly<R> {
    type Output = UPoly<R>;
    fn neg(self) -> UPoly<R> {
        -self.clone()
    }
}

impl<R: Ring> fmt::Display for UPoly<R> {
    /// Human-readable form in the variable `t`, highest degree first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*t")?,
                _ => write!(f, "({c})*t^{i}")?,
            }
        }
        Ok(())
    }
}

/// Resultant of `a` and `b` via the subresultant algorithm.
///
/// Uses the standard convention `Res(a, b) = lc(a)^deg b * prod b(alpha_i)`
/// over the roots `alpha_i` of `a`, so `Res(t - a, t - b) = b(a) = a - b`.
/// Only exact divisions in `R` are performed, so `R` can be any integral
/// domain with a working `div_exact` (e.g. multivariate polynomials).
pub fn resultant<R: Ring>(a: &UPoly<R>, b: &UPoly<R>) -> R {
    if a.is_zero() || b.is_zero() {
        return R::zero();
    }
    let (da, db) = (a.deg() as u32, b.deg() as u32);
    if da == 0 {
        return a.lc().pow(db);
    }
    if db == 0 {
        return b.lc().pow(da);
    }
    let (mut a, mut b) = (a.clone(), b.clone());
    let mut negate = false;
    if a.deg() < b.deg() {
        std::mem::swap(&mut a, &mut b);
        if da % 2 == 1 && db % 2 == 1 {
            negate = true;
        }
    }
    let mut g = R::one();
    let mut h = R::one();
    loop {
        let delta = (a.deg() - b.deg()) as u32;
        if a.deg() % 2 == 1 && b.deg() % 2 == 1 {
            negate = !negate;
        }
        let r = a.pseudo_rem(&b);
        a = b;
        let divisor = g.clone() * &h.pow(delta);
        b = r
            .div_exact_scalar(&divisor)
            .expect("subresultant division is exact");
        g = a.lc();
        h = if delta == 0 {
            h
        } else {
            g.pow(delta)
                .div_exact(&h.pow(delta - 1))
                .expect("subresultant division is exact")
        };
        if b.deg() <= 0 {
            break;
        }
    }
    if b.is_zero() {
        return R::zero();
    }
    let da = a.deg() as u32;
    let res = if da == 0 {
        h
    } else {
        b.lc()
            .pow(da)
            .div_exact(&h.pow(da - 1))
            .expect("subresultant division is exact")
    };
    if negate {
        -res
    } else {
        res
    }
}

/// Resultant as the determinant of the Sylvester matrix (fraction-free
/// elimination). Slow; kept as an independent cross-check.
pub fn sylvester_resultant<R: Ring>(a: &UPoly<R>, b: &UPoly<R>) -> R {
    if a.is_zero() || b.is_zero() {
        return R::zero();
    }
    let (m, n) = (a.deg() as usize, b.deg() as usize);
    let size = m + n;
    if size == 0 {
        return R::one();
    }
    let mut mat = vec![vec![R::zero(); size]; size];
    // rows 0..n: shifts of a; rows n..n+m: shifts of b; columns by descending power
    for i in 0..n {
        for (k, c) in a.coeffs().iter().enumerate() {
            mat[i][i + m - k] = c.clone();
        }
    }
    for i in 0..m {
        for (k, c) in b.coeffs().iter().enumerate() {
            mat[n + i][i + n - k] = c.clone();
        }
    }
    bareiss_det(mat)
}

/// Determinant over an integral domain by Bareiss elimination.
pub fn bareiss_det<R: Ring>(mut mat: Vec<Vec<R>>) -> R {
    let n = mat.len();
    let mut sign = false;
    let mut prev = R::one();
    for k in 0..n {
        if mat[k][k].is_zero() {
            match (k + 1..n).find(|&i| !mat[i][k].is_zero()) {
                Some(i) => {
                    mat.swap(i, k);
                    sign = !sign;
                }
                None => return R::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = mat[i][j].clone() * &mat[k][k] - &(mat[i][k].clone() * &mat[k][j]);
                mat[i][j] = v.div_exact(&prev).expect("Bareiss division is exact");
            }
            mat[i][k] = R::zero();
        }
        prev = mat[k][k].clone();
    }
    let d = mat[n - 1][n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{q, qi};

    fn p(cs: &[i64]) -> UPoly<Rational> {
        UPoly::from_i64s(cs)
    }

    #[test]
    fn resultant_of_linear_factors() {
        let a = UPoly::linear_root(qi(3));
        let b = UPoly::linear_root(qi(7));
        assert_eq!(resultant(&a, &b), qi(3 - 7));
        assert_eq!(sylvester_resultant(&a, &b), qi(3 - 7));
    }

    #[test]
    fn resultant_matches_sylvester() {
        let a = p(&[1, -2, 0, 3, 1]);
        let b = p(&[-4, 0, 5, 2]);
        assert_eq!(resultant(&a, &b), sylvester_resultant(&a, &b));
        assert_eq!(resultant(&b, &a), sylvester_resultant(&b, &a));
        // common root t = 1
        let c = &p(&[-1, 1]) * &p(&[2, 0, 1]);
        let d = &p(&[-1, 1]) * &p(&[5, 1]);
        assert_eq!(resultant(&c, &d), qi(0));
    }

    #[test]
    fn gcd_and_sqfree() {
        let a = &p(&[-1, 1]).pow(3) * &p(&[1, 0, 1]);
        let sq = a.squarefree_decomposition();
        assert_eq!(sq, vec![(p(&[1, 0, 1]), 1), (p(&[-1, 1]), 3)]);
        assert_eq!(a.squarefree_part(), &p(&[-1, 1]) * &p(&[1, 0, 1]));
        let g = a.gcd(&p(&[-1, 1]).pow(2));
        assert_eq!(g, p(&[-1, 1]).pow(2));
    }

    #[test]
    fn divrem_roundtrip() {
        let a = p(&[3, 1, 4, 1, 5, 9]);
        let b = UPoly::new(vec![q(1, 2), qi(0), qi(3)]);
        let (qq, r) = a.divrem(&b);
        assert_eq!(&(&qq * &b) + &r, a);
        assert!(r.deg() < b.deg());
    }

    #[test]
    fn pseudo_rem_identity() {
        let a = p(&[3, 1, 4, 1, 5, 9]);
        let b = p(&[1, 0, 3]);
        let r = a.pseudo_rem(&b);
        let l = b.lc().pow(4);
        assert_eq!(r, a.scale(&l).rem(&b));
    }
}
