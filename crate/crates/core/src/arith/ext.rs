//! Simple algebraic extensions Q[α]/(m(α)).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::{factor_over_q, Field, Rational, Ring, UPoly};
use crate::error::{Error, Result};

/// The number field Q[α]/(m) for a monic irreducible `m`.
#[derive(Clone, PartialEq, Debug)]
pub struct NumberField {
    modulus: UPoly<Rational>,
}

impl NumberField {
    /// Builds the field, checking that `modulus` is monic and irreducible.
    pub fn new(modulus: UPoly<Rational>) -> Result<Arc<Self>> {
        if modulus.deg() < 1 {
            return Err(Error::InvalidModulus(format!("degree of {modulus} is below 1")));
        }
        if !modulus.is_monic() {
            return Err(Error::InvalidModulus(format!("{modulus} is not monic")));
        }
        let (_, factors) = factor_over_q(&modulus)?;
        if factors.len() != 1 || factors[0].1 != 1 {
            return Err(Error::InvalidModulus(format!("{modulus} is reducible")));
        }
        Ok(Arc::new(NumberField { modulus }))
    }

    /// Skips the irreducibility check; for moduli known to be irreducible
    /// (e.g. factors just produced by `factor_over_q`).
    pub(crate) fn new_unchecked(modulus: UPoly<Rational>) -> Arc<Self> {
        Arc::new(NumberField { modulus })
    }

    pub fn modulus(&self) -> &UPoly<Rational> {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.deg() as usize
    }

    /// The generator α.
    pub fn generator(self: &Arc<Self>) -> AlgNum {
        AlgNum::from_poly(self, UPoly::var())
    }
}

/// Element of a number field, or a rational that embeds into any field.
///
/// `field == None` marks a rational constant, which lets `Ring::zero()` and
/// friends exist without knowing the field.
#[derive(Clone, Debug)]
pub struct AlgNum {
    field: Option<Arc<NumberField>>,
    poly: UPoly<Rational>,
}

impl AlgNum {
    pub fn from_poly(field: &Arc<NumberField>, p: UPoly<Rational>) -> Self {
        let poly = p.rem(field.modulus());
        AlgNum { field: Some(field.clone()), poly }
    }

    pub fn rational(q: Rational) -> Self {
        AlgNum { field: None, poly: UPoly::constant(q) }
    }

    pub fn field(&self) -> Option<&Arc<NumberField>> {
        self.field.as_ref()
    }

    /// Representative polynomial in α of degree below the field degree.
    pub fn poly(&self) -> &UPoly<Rational> {
        &self.poly
    }

    fn join(a: &Option<Arc<NumberField>>, b: &Option<Arc<NumberField>>) -> Option<Arc<NumberField>> {
        match (a, b) {
            (None, None) => None,
            (Some(f), None) | (None, Some(f)) => Some(f.clone()),
            (Some(f), Some(g)) => {
                assert!(
                    Arc::ptr_eq(f, g) || f == g,
                    "arithmetic between elements of different number fields"
                );
                Some(f.clone())
            }
        }
    }

    fn reduce(field: Option<Arc<NumberField>>, p: UPoly<Rational>) -> Self {
        match field {
            Some(f) => {
                let poly = if p.deg() >= f.modulus().deg() { p.rem(f.modulus()) } else { p };
                AlgNum { field: Some(f), poly }
            }
            None => AlgNum { field: None, poly: p },
        }
    }
}

impl PartialEq for AlgNum {
    fn eq(&self, other: &Self) -> bool {
        self.poly == other.poly
    }
}

impl<'a> Add<&'a AlgNum> for AlgNum {
    type Output = AlgNum;
    fn add(self, rhs: &'a AlgNum) -> AlgNum {
        let f = AlgNum::join(&self.field, &rhs.field);
        AlgNum { field: f, poly: &self.poly + &rhs.poly }
    }
}

impl<'a> Sub<&'a AlgNum> for AlgNum {
    type Output = AlgNum;
    fn sub(self, rhs: &'a AlgNum) -> AlgNum {
        let f = AlgNum::join(&self.field, &rhs.field);
        AlgNum { field: f, poly: &self.poly - &rhs.poly }
    }
}

impl<'a> Mul<&'a AlgNum> for AlgNum {
    type Output = AlgNum;
    fn mul(self, rhs: &'a AlgNum) -> AlgNum {
        let f = AlgNum::join(&self.field, &rhs.field);
        AlgNum::reduce(f, &self.poly * &rhs.poly)
    }
}

impl Add for AlgNum {
    type Output = AlgNum;
    fn add(self, rhs: AlgNum) -> AlgNum {
        self + &rhs
    }
}

impl Sub for AlgNum {
    type Output = AlgNum;
    fn sub(self, rhs: AlgNum) -> AlgNum {
        self - &rhs
    }
}

impl Mul for AlgNum {
    type Output = AlgNum;
    fn mul(self, rhs: AlgNum) -> AlgNum {
        self * &rhs
    }
}

impl Neg for AlgNum {
    type Output = AlgNum;
    fn neg(self) -> AlgNum {
        AlgNum { field: self.field, poly: -self.poly }
    }
}

impl Ring for AlgNum {
    fn zero() -> Self {
        AlgNum { field: None, poly: UPoly::zero() }
    }
    fn one() -> Self {
        AlgNum::rational(<Rational as Ring>::one())
    }
    fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }
    fn is_one(&self) -> bool {
        self.poly.is_one()
    }
    fn from_rational(q: &Rational) -> Self {
        AlgNum::rational(q.clone())
    }
    fn div_exact(&self, other: &Self) -> Option<Self> {
        Some(self.clone() * &other.inv()?)
    }
    fn as_rational(&self) -> Option<Rational> {
        if self.poly.is_constant() {
            Some(self.poly.coeff(0))
        } else {
            None
        }
    }
}

impl Field for AlgNum {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        match &self.field {
            None => Some(AlgNum::rational(self.poly.coeff(0).recip())),
            Some(f) => {
                let inv = self.poly.inv_mod(f.modulus())?;
                Some(AlgNum { field: Some(f.clone()), poly: inv })
            }
        }
    }
    fn power_basis(&self) -> Vec<Rational> {
        if self.poly.is_zero() {
            vec![<Rational as Ring>::zero()]
        } else {
            self.poly.coeffs().to_vec()
        }
    }
}

impl fmt::Display for AlgNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{r}");
        }
        write!(f, "(")?;
        let mut first = true;
        for (i, c) in self.poly.coeffs().iter().enumerate().rev() {
            if Ring::is_zero(c) {
                continue;
            }
            let neg = c < &<Rational as Ring>::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            match i {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !Ring::is_one(&abs) {
                        write!(f, "{abs}*")?;
                    }
                    if i == 1 {
                        write!(f, "alpha")?;
                    } else {
                        write!(f, "alpha^{i}")?;
                    }
                }
            }
        }
        write!(f, ")")
    }
}
