//! Exact arithmetic: rationals, dense univariate polynomials, simple
//! algebraic extensions of Q, factorization over Q, real-root isolation and
//! exact linear algebra.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;

pub mod ext;
pub mod factor;
pub mod linalg;
pub mod roots;
pub mod upoly;

pub use ext::{AlgNum, NumberField};
pub use factor::{factor_over_q, squarefree_decomposition, squarefree_part, Factors};
pub use roots::{isolate_real_roots, IsolatingInterval};
pub use upoly::{resultant, sylvester_resultant, UPoly};

/// Arbitrary-precision integer.
pub type Integer = BigInt;
/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// A commutative ring of characteristic zero containing Q.
///
/// Operations by value and by right-hand reference are required so that
/// generic code can avoid needless clones.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool {
        *self == Self::one()
    }
    fn from_rational(q: &Rational) -> Self;
    fn from_i64(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(BigInt::from(n)))
    }
    /// Exact quotient `self / other`, or `None` when `other` does not divide.
    fn div_exact(&self, other: &Self) -> Option<Self>;
    /// The element as a rational number, if it is one.
    fn as_rational(&self) -> Option<Rational>;

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * &base;
            }
        }
        acc
    }
}

/// A field of characteristic zero.
pub trait Field: Ring {
    fn inv(&self) -> Option<Self>;

    /// Coefficients of the element in the power basis of its extension
    /// generator; rationals have a single coefficient.
    fn power_basis(&self) -> Vec<Rational>;
}

impl Ring for Rational {
    fn zero() -> Self {
        num_traits::Zero::zero()
    }
    fn one() -> Self {
        num_traits::One::one()
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        num_traits::One::is_one(self)
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
    fn div_exact(&self, other: &Self) -> Option<Self> {
        if Ring::is_zero(other) {
            None
        } else {
            Some(self / other)
        }
    }
    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
}

impl Field for Rational {
    fn inv(&self) -> Option<Self> {
        if Ring::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn power_basis(&self) -> Vec<Rational> {
        vec![self.clone()]
    }
}

/// Shorthand constructor for rationals in code and tests.
pub fn q(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Integer as a rational.
pub fn qi(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `a`, `-a` or `a/b` into a rational.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if num_traits::Zero::is_zero(&den) {
        return None;
    }
    Some(Rational::new(num, den))
}

/// Nearest f64 to a rational (exact conversion up to rounding).
pub fn rational_to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    match r.to_f64() {
        Some(v) if v.is_finite() => v,
        _ => {
            // Very large numerators/denominators: scale down by bit length.
            let nb = r.numer().bits() as i64;
            let db = r.denom().bits() as i64;
            let shift = (nb.max(db) - 60).max(0) as usize;
            let n = (r.numer() >> shift).to_f64().unwrap_or(0.0);
            let d = (r.denom() >> shift).to_f64().unwrap_or(1.0);
            if d == 0.0 {
                if n >= 0.0 { f64::INFINITY } else { f64::NEG_INFINITY }
            } else {
                n / d
            }
        }
    }
}

/// Exact rational value of a finite f64.
pub fn f64_to_rational(v: f64) -> Rational {
    Rational::from_float(v).unwrap_or_else(Ring::zero)
}

/// Rounds `r` to the nearest multiple of `1/den`, ties toward +infinity.
pub fn round_to_denominator(r: &Rational, den: &BigInt) -> Rational {
    let scaled = r * Rational::from_integer(den.clone());
    let half = q(1, 2);
    let n = (scaled + half).floor().to_integer();
    Rational::new(n, den.clone())
}
