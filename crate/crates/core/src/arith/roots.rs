//! Real-root isolation by Sturm sequences with exact rational endpoints.

use std::cmp::Ordering;
use std::sync::Arc;

use num_traits::Signed;

use super::{q, Rational, Ring, UPoly};
use crate::error::{Error, Result};

/// Half-open interval `(lo, hi]` containing exactly one real root of `poly`.
#[derive(Clone, Debug, PartialEq)]
pub struct IsolatingInterval {
    pub lo: Rational,
    pub hi: Rational,
    pub poly: Arc<UPoly<Rational>>,
}

impl IsolatingInterval {
    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / super::qi(2)
    }

    /// Shrinks the interval by `steps` exact bisections.
    pub fn bisect(&self, steps: usize) -> IsolatingInterval {
        let mut lo = self.lo.clone();
        let mut hi = self.hi.clone();
        let p = &*self.poly;
        if p.eval(&hi).is_zero() {
            // the root is the right endpoint; collapse toward it
            for _ in 0..steps {
                lo = (&lo + &hi) / super::qi(2);
            }
            return IsolatingInterval { lo, hi, poly: self.poly.clone() };
        }
        let sign_hi = sign(&p.eval(&hi));
        for _ in 0..steps {
            let mid = (&lo + &hi) / super::qi(2);
            let v = p.eval(&mid);
            if v.is_zero() {
                return IsolatingInterval { lo, hi: mid, poly: self.poly.clone() };
            }
            if sign(&v) == sign_hi {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        IsolatingInterval { lo, hi, poly: self.poly.clone() }
    }

    /// True when the root is exactly the right endpoint.
    pub fn is_exact(&self) -> bool {
        self.poly.eval(&self.hi).is_zero()
    }
}

fn sign(r: &Rational) -> Ordering {
    if r.is_positive() {
        Ordering::Greater
    } else if r.is_negative() {
        Ordering::Less
    } else {
        Ordering::Equal
    }
}

/// Sturm sequence of a squarefree polynomial.
pub struct Sturm {
    seq: Vec<UPoly<Rational>>,
}

impl Sturm {
    pub fn new(p: &UPoly<Rational>) -> Self {
        let mut seq = vec![p.clone(), p.derivative()];
        while !seq.last().unwrap().is_zero() && seq.last().unwrap().deg() > 0 {
            let n = seq.len();
            let r = -seq[n - 2].rem(&seq[n - 1]);
            if r.is_zero() {
                break;
            }
            seq.push(r);
        }
        if seq.last().unwrap().is_zero() {
            seq.pop();
        }
        Sturm { seq }
    }

    pub fn variations(&self, x: &Rational) -> usize {
        let mut count = 0;
        let mut last = Ordering::Equal;
        for s in &self.seq {
            let v = sign(&s.eval(x));
            if v == Ordering::Equal {
                continue;
            }
            if last != Ordering::Equal && v != last {
                count += 1;
            }
            last = v;
        }
        count
    }

    /// Number of distinct real roots in `(a, b]`.
    pub fn count(&self, a: &Rational, b: &Rational) -> usize {
        self.variations(a).saturating_sub(self.variations(b))
    }
}

/// Cauchy bound: all real roots lie in `[-B, B]`.
pub fn root_bound(p: &UPoly<Rational>) -> Rational {
    let lc = p.lc().abs();
    let m = p.coeffs()[..p.coeffs().len() - 1]
        .iter()
        .map(|c| c.abs() / &lc)
        .max()
        .unwrap_or_else(Rational::zero);
    m + super::qi(1)
}

/// Isolates the distinct real roots of `p` in `(lo, hi]` into disjoint
/// intervals of width at most `width`, in increasing order.
pub fn isolate_real_roots(
    p: &UPoly<Rational>,
    lo: &Rational,
    hi: &Rational,
    width: &Rational,
) -> Result<Vec<IsolatingInterval>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !width.is_positive() {
        return Err(Error::InvalidInput("isolation width must be positive".into()));
    }
    if p.is_constant() || lo >= hi {
        return Ok(Vec::new());
    }
    let sq = Arc::new(p.squarefree_part());
    let sturm = Sturm::new(&sq);
    let mut out = Vec::new();
    let mut stack = vec![(lo.clone(), hi.clone(), sturm.count(lo, hi))];
    while let Some((a, b, n)) = stack.pop() {
        if n == 0 {
            continue;
        }
        if n == 1 && &(&b - &a) <= width {
            out.push(IsolatingInterval { lo: a, hi: b, poly: sq.clone() });
            continue;
        }
        let mid = (&a + &b) * q(1, 2);
        let left = sturm.count(&a, &mid);
        // push right first so the left half is processed first
        stack.push((mid.clone(), b, n - left));
        stack.push((a, mid, left));
    }
    out.sort_by(|x, y| x.lo.cmp(&y.lo));
    Ok(out)
}

/// Isolates all real roots of `p`.
pub fn isolate_all_real_roots(p: &UPoly<Rational>, width: &Rational) -> Result<Vec<IsolatingInterval>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.is_constant() {
        return Ok(Vec::new());
    }
    let b = root_bound(p);
    isolate_real_roots(p, &(-b.clone() - super::qi(1)), &b, width)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::qi;

    #[test]
    fn sqrt2() {
        let p = UPoly::from_i64s(&[-2, 0, 1]);
        let iv = isolate_real_roots(&p, &qi(-2), &qi(2), &q(1, 64)).unwrap();
        assert_eq!(iv.len(), 2);
        let s = 2f64.sqrt();
        let lo0 = crate::arith::rational_to_f64(&iv[0].lo);
        let hi0 = crate::arith::rational_to_f64(&iv[0].hi);
        assert!(lo0 < -s && -s <= hi0);
        assert!(iv.iter().all(|i| i.width() <= q(1, 64)));
    }

    #[test]
    fn no_real_roots() {
        let p = UPoly::from_i64s(&[1, 0, 1]);
        assert!(isolate_real_roots(&p, &qi(-10), &qi(10), &q(1, 2)).unwrap().is_empty());
    }

    #[test]
    fn root_at_right_endpoint_counts() {
        let p = UPoly::from_i64s(&[-1, 1]);
        assert_eq!(isolate_real_roots(&p, &qi(0), &qi(1), &qi(1)).unwrap().len(), 1);
        assert_eq!(isolate_real_roots(&p, &qi(1), &qi(2), &qi(1)).unwrap().len(), 0);
    }

    #[test]
    fn bisect_narrows() {
        let p = UPoly::from_i64s(&[-2, 0, 1]);
        let iv = isolate_real_roots(&p, &qi(0), &qi(2), &qi(1)).unwrap();
        let fine = iv[0].bisect(40);
        let m = crate::arith::rational_to_f64(&fine.midpoint());
        assert!((m - 2f64.sqrt()).abs() < 1e-11);
    }
}
