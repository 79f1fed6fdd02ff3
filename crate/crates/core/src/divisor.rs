//! Conjugate point families, effective divisors and their classification.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::arith::{factor_over_q, AlgNum, NumberField, Rational, Ring, UPoly};
use crate::error::{Error, Result};
use crate::poly::{parse_upoly, MPoly, Var};

/// Largest multiplicity accepted for a family.
pub const MAX_MULTIPLICITY: u32 = 64;

/// The points `{(p1(t) : p2(t) : p3(t)) | m(t) = 0}`, each with the same
/// multiplicity. `m` is monic and squarefree; the `p_i` are reduced mod `m`.
#[derive(Clone, Debug, PartialEq)]
pub struct ConjugateFamily {
    m: UPoly<Rational>,
    p: [UPoly<Rational>; 3],
    mult: u32,
}

impl ConjugateFamily {
    pub fn new(m: UPoly<Rational>, p: [UPoly<Rational>; 3], mult: u32) -> Result<Self> {
        if m.deg() < 1 {
            return Err(Error::InvalidDivisor(format!("family modulus {} must have positive degree", show(&m))));
        }
        if mult == 0 || mult > MAX_MULTIPLICITY {
            return Err(Error::InvalidDivisor(format!(
                "multiplicity {mult} outside 1..={MAX_MULTIPLICITY}"
            )));
        }
        let m = m.monic();
        if !m.is_squarefree() {
            return Err(Error::InvalidDivisor(format!("family modulus {} is not squarefree", show(&m))));
        }
        let p = p.map(|c| c.rem(&m));
        let g = p.iter().fold(m.clone(), |g, c| g.gcd(c));
        if g.deg() > 0 {
            return Err(Error::InvalidDivisor(format!(
                "coordinates vanish simultaneously at the roots of {}",
                show(&g)
            )));
        }
        let fam = ConjugateFamily { m, p, mult };
        for part in fam.parts()? {
            if part.coincidences(&fam).deg() != 1 {
                return Err(Error::InvalidDivisor(format!(
                    "distinct roots of {} give the same point",
                    show(&fam.m)
                )));
            }
        }
        Ok(fam)
    }

    /// A single point with rational coordinates.
    pub fn point(coords: [Rational; 3], mult: u32) -> Result<Self> {
        Self::new(UPoly::var(), coords.map(UPoly::constant), mult)
    }

    /// The affine point `(a : b : 1)`.
    pub fn affine_point(a: Rational, b: Rational, mult: u32) -> Result<Self> {
        Self::point([a, b, <Rational as Ring>::one()], mult)
    }

    pub fn modulus(&self) -> &UPoly<Rational> {
        &self.m
    }

    pub fn coords(&self) -> &[UPoly<Rational>; 3] {
        &self.p
    }

    pub fn mult(&self) -> u32 {
        self.mult
    }

    pub fn with_mult(&self, mult: u32) -> Result<Self> {
        if mult == 0 || mult > MAX_MULTIPLICITY {
            return Err(Error::InvalidDivisor(format!("multiplicity {mult} outside 1..={MAX_MULTIPLICITY}")));
        }
        Ok(ConjugateFamily { mult, ..self.clone() })
    }

    /// Number of points in the family.
    pub fn size(&self) -> usize {
        self.m.deg() as usize
    }

    /// Contribution `mult * size` to the divisor degree.
    pub fn degree(&self) -> usize {
        self.mult as usize * self.size()
    }

    /// All points lie on the line z = 0.
    pub fn is_at_infinity(&self) -> bool {
        self.p[2].is_zero()
    }

    /// No point lies on the line z = 0.
    pub fn is_affine(&self) -> bool {
        self.m.gcd(&self.p[2]).deg() == 0
    }

    /// Coordinates of a single rational point.
    pub fn rational_point(&self) -> Option<[Rational; 3]> {
        if self.m.deg() != 1 {
            return None;
        }
        let root = -self.m.coeff(0);
        Some([0, 1, 2].map(|i| self.p[i].eval(&root)))
    }

    /// Affine coordinates `(p1/p3, p2/p3)` as polynomials mod `m`.
    pub fn affine_coords(&self) -> Option<[UPoly<Rational>; 2]> {
        let inv = self.p[2].inv_mod(&self.m)?;
        Some([(&self.p[0] * &inv).rem(&self.m), (&self.p[1] * &inv).rem(&self.m)])
    }

    /// One representative point per irreducible factor of `m`, with
    /// coordinates in the corresponding number field.
    pub fn parts(&self) -> Result<Vec<FamilyPart>> {
        let (_, factors) = factor_over_q(&self.m)?;
        Ok(factors
            .into_iter()
            .map(|(f, _)| {
                let field = NumberField::new_unchecked(f);
                let coords = self.p.clone().map(|c| AlgNum::from_poly(&field, c));
                FamilyPart { field, coords }
            })
            .collect())
    }

    /// True when no point of `self` is a point of `other`.
    pub fn is_disjoint_from(&self, other: &ConjugateFamily) -> Result<bool> {
        Ok(self.parts()?.iter().all(|part| part.coincidences(other).deg() == 0))
    }

    /// Evaluates a polynomial in `x, y, z` at the family: returns
    /// `f(p1, p2, p3) mod m` as a polynomial in `t`.
    pub fn eval_form(&self, f: &MPoly<Rational>) -> UPoly<Rational> {
        let mut acc = UPoly::zero();
        let mut pows: [Vec<UPoly<Rational>>; 3] = [vec![UPoly::one()], vec![UPoly::one()], vec![UPoly::one()]];
        for (mono, c) in f.terms() {
            let mut term = UPoly::constant(c.clone());
            for (i, v) in [Var::X, Var::Y, Var::Z].into_iter().enumerate() {
                let e = mono.exp(v) as usize;
                while pows[i].len() <= e {
                    let next = (pows[i].last().unwrap() * &self.p[i]).rem(&self.m);
                    pows[i].push(next);
                }
                term = (&term * &pows[i][e]).rem(&self.m);
            }
            acc = acc + term;
        }
        acc.rem(&self.m)
    }
}

impl fmt::Display for ConjugateFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mult = if self.mult == 1 { String::new() } else { format!("{}*", self.mult) };
        match self.rational_point() {
            Some([a, b, c]) => write!(f, "{mult}({a}:{b}:{c})"),
            None => write!(
                f,
                "{mult}{{({}:{}:{}) | {} = 0}}",
                show(&self.p[0]),
                show(&self.p[1]),
                show(&self.p[2]),
                show(&self.m)
            ),
        }
    }
}

/// A representative point of one irreducible component of a family.
#[derive(Clone, Debug)]
pub struct FamilyPart {
    pub field: Arc<NumberField>,
    pub coords: [AlgNum; 3],
}

impl FamilyPart {
    /// Gcd over the part's field of `m_other(s)` and the cross product of
    /// this point with `(p(s))`; its roots are the parameters `s` of
    /// `other` giving this same point.
    fn coincidences(&self, other: &ConjugateFamily) -> UPoly<AlgNum> {
        let lift = |p: &UPoly<Rational>| p.map(|c| AlgNum::rational(c.clone()));
        let q = other.p.clone().map(|c| lift(&c));
        let a = &self.coords;
        let cross = |i: usize, j: usize| &q[j].scale(&a[i]) - &q[i].scale(&a[j]);
        [cross(0, 1), cross(0, 2), cross(1, 2)]
            .iter()
            .fold(lift(&other.m), |g, c| g.gcd(c))
    }
}

/// A finite sum of conjugate families with pairwise disjoint supports.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct EffectiveDivisor {
    families: Vec<ConjugateFamily>,
}

impl EffectiveDivisor {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn new(families: Vec<ConjugateFamily>) -> Result<Self> {
        let mut d = Self::empty();
        for f in families {
            d = d.with_family(f)?;
        }
        Ok(d)
    }

    /// Adds a family, checking it is disjoint from those already present.
    pub fn with_family(&self, f: ConjugateFamily) -> Result<Self> {
        for g in &self.families {
            if !f.is_disjoint_from(g)? {
                return Err(Error::InvalidDivisor(format!("families {f} and {g} share a point")));
            }
        }
        let mut families = self.families.clone();
        families.push(f);
        Ok(EffectiveDivisor { families })
    }

    /// Union of two divisors with disjoint supports.
    pub fn union(&self, other: &EffectiveDivisor) -> Result<Self> {
        other.families.iter().try_fold(self.clone(), |d, f| d.with_family(f.clone()))
    }

    pub fn families(&self) -> &[ConjugateFamily] {
        &self.families
    }

    pub fn is_empty(&self) -> bool {
        self.families.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.families.iter().map(ConjugateFamily::degree).sum()
    }

    /// `sum s_i (s_i - 1)` over all points.
    pub fn singularity_budget(&self) -> usize {
        self.families
            .iter()
            .map(|f| f.size() * (f.mult as usize) * (f.mult as usize - 1))
            .sum()
    }

    /// Every point is simple and on the line at infinity.
    pub fn is_hausdorff(&self) -> bool {
        self.families.iter().all(|f| f.mult == 1 && f.is_at_infinity())
    }

    pub fn is_n_rational(&self, n: u32) -> bool {
        if n == 0 {
            return false;
        }
        if n <= 2 {
            return self.degree() == 1;
        }
        let n = n as usize;
        self.families.iter().all(|f| f.mult > 1) && (n - 1) * (n - 2) == self.singularity_budget()
    }

    /// A single point of multiplicity `n - 1` (and `n`-rational).
    pub fn is_n_monomial(&self, n: u32) -> bool {
        self.is_n_rational(n)
            && self.families.len() == 1
            && self.families[0].size() == 1
            && self.families[0].mult + 1 == n
    }
}

impl fmt::Display for EffectiveDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.families.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.families.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Result of splitting a divisor into its part at infinity and its affine
/// singular part.
#[derive(Clone, Debug)]
pub struct DivisorClassification {
    pub is_hausdorff: bool,
    pub n_rational_for: Option<u32>,
    pub is_monomial: bool,
    pub hausdorff_part: EffectiveDivisor,
    pub singular_part: EffectiveDivisor,
}

/// Splits `d` as `D_H + D_S` with `D_H` an `n`-degree Hausdorff divisor and
/// `D_S` an affine `n`-rational divisor; the split is unique when it exists.
pub fn decompose_rational_hausdorff(d: &EffectiveDivisor, n: u32) -> Result<DivisorClassification> {
    let mut at_inf = Vec::new();
    let mut affine = Vec::new();
    for f in d.families() {
        if f.is_at_infinity() {
            at_inf.push(f.clone());
        } else if f.is_affine() {
            affine.push(f.clone());
        } else {
            return Err(Error::NotRationalHausdorff(format!(
                "family {f} mixes affine points with points at infinity"
            )));
        }
    }
    let dh = EffectiveDivisor { families: at_inf };
    let ds = EffectiveDivisor { families: affine };
    if !dh.is_hausdorff() {
        return Err(Error::NotRationalHausdorff("a point at infinity has multiplicity above 1".into()));
    }
    if dh.degree() != n as usize {
        return Err(Error::NotRationalHausdorff(format!(
            "part at infinity has degree {} instead of {n}",
            dh.degree()
        )));
    }
    if !ds.is_n_rational(n) {
        return Err(Error::NotRationalHausdorff(format!(
            "affine part is not {n}-rational (sum of s(s-1) is {}, need {})",
            ds.singularity_budget(),
            (n as usize).saturating_sub(1) * (n as usize).saturating_sub(2)
        )));
    }
    Ok(DivisorClassification {
        is_hausdorff: d.is_hausdorff(),
        n_rational_for: Some(n),
        is_monomial: ds.is_n_monomial(n),
        hausdorff_part: dh,
        singular_part: ds,
    })
}

/// Binary leading form of an affine polynomial in `x, y`, as `L(1, t)`
/// together with the power of `x` dividing `L`.
fn leading_form_profile(f: &MPoly<Rational>) -> Result<(u32, UPoly<Rational>, u32)> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if let Some(v) = f.vars().into_iter().find(|v| *v != Var::X && *v != Var::Y) {
        return Err(Error::InvalidInput(format!("curve must be a polynomial in x and y, found {v}")));
    }
    let n = f.total_degree().unwrap_or(0);
    let lf = f.homogeneous_part(n);
    let mut cs = vec![<Rational as Ring>::zero(); n as usize + 1];
    for (m, c) in lf.terms() {
        cs[m.exp(Var::Y) as usize] = c.clone();
    }
    let g = UPoly::new(cs);
    let x_power = n - g.deg().max(0) as u32;
    Ok((n, g, x_power))
}

/// True when the affine curve `f` has `deg f` distinct points at infinity.
pub fn is_hausdorff_curve(f: &MPoly<Rational>) -> Result<bool> {
    let (n, g, x_power) = leading_form_profile(f)?;
    Ok(n > 0 && x_power <= 1 && g.is_squarefree())
}

/// The Hausdorff divisor of the affine curve `f`: its points at infinity as
/// families `(1 : t : 0)` per irreducible factor of `L(1, t)`, plus
/// `(0 : 1 : 0)` when `x` divides the leading form `L`.
pub fn divisor_from_curve(f: &MPoly<Rational>) -> Result<EffectiveDivisor> {
    let (n, g, x_power) = leading_form_profile(f)?;
    if n == 0 {
        return Err(Error::NotHausdorffCurve("constant polynomial".into()));
    }
    if x_power > 1 || !g.is_squarefree() {
        return Err(Error::NotHausdorffCurve(format!(
            "leading form {} has a repeated factor",
            f.homogeneous_part(n)
        )));
    }
    let mut fams = Vec::new();
    if g.deg() > 0 {
        let (_, factors) = factor_over_q(&g)?;
        for (h, _) in factors {
            fams.push(ConjugateFamily::new(h, [UPoly::one(), UPoly::var(), UPoly::zero()], 1)?);
        }
    }
    if x_power == 1 {
        let (zero, one) = (<Rational as Ring>::zero(), <Rational as Ring>::one());
        fams.push(ConjugateFamily::point([zero.clone(), one, zero], 1)?);
    }
    EffectiveDivisor::new(fams)
}

/// Checks `a * b_i - b * a_i != 0` for every point `(a_i : b_i : 0)` of the
/// Hausdorff divisor `d`, i.e. `Res_t(m, a p2 - b p1) != 0` per family.
pub fn validate_singular_point(a: &Rational, b: &Rational, d: &EffectiveDivisor) -> bool {
    d.families().iter().all(|f| {
        let [p1, p2, _] = f.coords();
        let g = &p2.scale(a) - &p1.scale(b);
        !crate::arith::resultant(f.modulus(), &g).is_zero()
    })
}

/// `D + (n - 1) P` for the Hausdorff divisor `d` and the affine point
/// `P = (a : b : 1)`. With `override_check`, the determinant condition
/// `a b_i - b a_i != 0` is skipped (it rejects the origin identically, and
/// any point on a line through the origin towards a divisor point).
pub fn build_monomial_divisor(
    d: &EffectiveDivisor,
    a: &Rational,
    b: &Rational,
    n: u32,
    override_check: bool,
) -> Result<EffectiveDivisor> {
    if !d.is_hausdorff() || d.degree() != n as usize {
        return Err(Error::InvalidDivisor(format!("{d} is not an {n}-degree Hausdorff divisor")));
    }
    if n < 2 {
        return Err(Error::InvalidInput("monomial divisors need degree at least 2".into()));
    }
    if !override_check && !validate_singular_point(a, b, d) {
        return Err(Error::InvalidSingularPoint(format!(
            "({a}:{b}:1) is aligned with a point of {d} through the origin"
        )));
    }
    d.with_family(ConjugateFamily::affine_point(a.clone(), b.clone(), n - 1)?)
}

fn show(p: &UPoly<Rational>) -> String {
    MPoly::from_upoly(p, Var::T).to_string()
}

/// JSON form of one family.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct FamilyJson {
    pub m: String,
    pub p: [String; 3],
    pub mult: u32,
}

/// JSON form of a divisor: `{"families": [...]}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct DivisorJson {
    pub families: Vec<FamilyJson>,
}

impl From<&EffectiveDivisor> for DivisorJson {
    fn from(d: &EffectiveDivisor) -> Self {
        DivisorJson {
            families: d
                .families()
                .iter()
                .map(|f| FamilyJson { m: show(&f.m), p: f.p.clone().map(|c| show(&c)), mult: f.mult })
                .collect(),
        }
    }
}

impl TryFrom<&DivisorJson> for EffectiveDivisor {
    type Error = Error;
    fn try_from(j: &DivisorJson) -> Result<Self> {
        let mut fams = Vec::new();
        for f in &j.families {
            let m = parse_upoly(&f.m)?;
            let p = [parse_upoly(&f.p[0])?, parse_upoly(&f.p[1])?, parse_upoly(&f.p[2])?];
            fams.push(ConjugateFamily::new(m, p, f.mult)?);
        }
        EffectiveDivisor::new(fams)
    }
}

impl EffectiveDivisor {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&DivisorJson::from(self)).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let j: DivisorJson =
            serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("divisor JSON: {e}")))?;
        EffectiveDivisor::try_from(&j)
    }
}
