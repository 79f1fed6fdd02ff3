//! Sampling of real plane curves and a box-restricted Hausdorff-distance
//! estimator. This is the only floating-point part of the crate: roots are
//! isolated exactly, then refined in double precision.

use serde::{Deserialize, Serialize};

use crate::arith::{f64_to_rational, isolate_real_roots, rational_to_f64, Rational, UPoly};
use crate::error::{Error, Result};
use crate::poly::{MPoly, Var};

/// Axis-parallel sampling window.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundingBox {
    pub xmin: f64,
    pub xmax: f64,
    pub ymin: f64,
    pub ymax: f64,
}

impl BoundingBox {
    pub fn new(xmin: f64, xmax: f64, ymin: f64, ymax: f64) -> Result<Self> {
        let finite = [xmin, xmax, ymin, ymax].iter().all(|v| v.is_finite());
        if !finite || xmin >= xmax || ymin >= ymax {
            return Err(Error::InvalidInput(format!("degenerate box [{xmin},{xmax}]x[{ymin},{ymax}]")));
        }
        Ok(BoundingBox { xmin, xmax, ymin, ymax })
    }

    /// The square `[-r, r]^2`.
    pub fn square(r: f64) -> Result<Self> {
        Self::new(-r, r, -r, r)
    }

    /// Parses `"x0,x1,y0,y1"`.
    pub fn parse(text: &str) -> Result<Self> {
        let v: Vec<f64> = text
            .split(',')
            .map(|s| s.trim().parse::<f64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| Error::InvalidInput(format!("bad box `{text}`: {e}")))?;
        match v.as_slice() {
            [a, b, c, d] => Self::new(*a, *b, *c, *d),
            _ => Err(Error::InvalidInput(format!("box needs four numbers, got `{text}`"))),
        }
    }

    pub fn contains(&self, p: [f64; 2]) -> bool {
        p[0] >= self.xmin && p[0] <= self.xmax && p[1] >= self.ymin && p[1] <= self.ymax
    }

    fn diagonal(&self) -> f64 {
        (self.xmax - self.xmin).hypot(self.ymax - self.ymin)
    }
}

/// Points on a real curve, with the largest `|f|` observed on them.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SampleSet {
    pub points: Vec<[f64; 2]>,
    pub residual: f64,
    /// Largest absolute coefficient of the sampled polynomial.
    pub scale: f64,
    pub curve: String,
}

impl SampleSet {
    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    /// `x,y,curve_id` rows with a header.
    pub fn to_csv(&self, curve_id: &str) -> String {
        let mut out = String::from("x,y,curve_id\n");
        for p in &self.points {
            out.push_str(&format!("{},{},{}\n", p[0], p[1], curve_id));
        }
        out
    }
}

/// A bivariate polynomial with double-precision coefficients.
#[derive(Clone, Debug)]
struct FloatPoly {
    terms: Vec<(i32, i32, f64)>,
}

impl FloatPoly {
    fn new(f: &MPoly<Rational>) -> Self {
        FloatPoly {
            terms: f
                .terms()
                .map(|(m, c)| (m.exp(Var::X) as i32, m.exp(Var::Y) as i32, rational_to_f64(c)))
                .collect(),
        }
    }

    fn eval(&self, x: f64, y: f64) -> f64 {
        self.terms.iter().map(|&(i, j, c)| c * x.powi(i) * y.powi(j)).sum()
    }

    fn grad(&self, x: f64, y: f64) -> [f64; 2] {
        let mut g = [0.0; 2];
        for &(i, j, c) in &self.terms {
            if i > 0 {
                g[0] += c * i as f64 * x.powi(i - 1) * y.powi(j);
            }
            if j > 0 {
                g[1] += c * j as f64 * x.powi(i) * y.powi(j - 1);
            }
        }
        g
    }

    /// Moves `p` onto the curve along the gradient.
    fn project(&self, mut p: [f64; 2]) -> Option<[f64; 2]> {
        for _ in 0..30 {
            let v = self.eval(p[0], p[1]);
            let g = self.grad(p[0], p[1]);
            let n2 = g[0] * g[0] + g[1] * g[1];
            if n2 == 0.0 || !n2.is_finite() {
                return None;
            }
            let step = [v * g[0] / n2, v * g[1] / n2];
            p = [p[0] - step[0], p[1] - step[1]];
            if step[0].hypot(step[1]) < 1e-15 * (1.0 + p[0].hypot(p[1])) {
                break;
            }
        }
        p.iter().all(|v| v.is_finite()).then_some(p)
    }

    /// Foot point of `a` on the curve, starting from the curve point `b`:
    /// alternate tangent slides toward `a` and projections back.
    fn foot_point(&self, a: [f64; 2], mut b: [f64; 2]) -> Option<[f64; 2]> {
        for _ in 0..60 {
            let g = self.grad(b[0], b[1]);
            let n = g[0].hypot(g[1]);
            if n == 0.0 || !n.is_finite() {
                return None;
            }
            let tau = [-g[1] / n, g[0] / n];
            let s = (a[0] - b[0]) * tau[0] + (a[1] - b[1]) * tau[1];
            let next = self.project([b[0] + s * tau[0], b[1] + s * tau[1]])?;
            let moved = (next[0] - b[0]).hypot(next[1] - b[1]);
            b = next;
            if moved < 1e-14 * (1.0 + b[0].hypot(b[1])) {
                break;
            }
        }
        Some(b)
    }
}

/// Bisection steps applied to each exact isolating interval.
pub const BISECTION_STEPS: usize = 40;
/// Newton steps after bisection.
pub const NEWTON_STEPS: usize = 5;
/// Default number of fibers per direction.
pub const DEFAULT_GRID: usize = 200;

fn affine_part(f: &MPoly<Rational>) -> Result<MPoly<Rational>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let f = if f.contains_var(Var::Z) { f.dehomogenize()? } else { f.clone() };
    if let Some(v) = f.vars().into_iter().find(|v| *v != Var::X && *v != Var::Y) {
        return Err(Error::InvalidInput(format!("cannot sample a curve involving {v}")));
    }
    Ok(f)
}

fn fiber_roots(u: &UPoly<Rational>, lo: &Rational, hi: &Rational) -> Vec<f64> {
    if u.is_zero() || u.is_constant() {
        return Vec::new();
    }
    let width = hi - lo;
    let Ok(ivs) = isolate_real_roots(u, lo, hi, &width) else { return Vec::new() };
    let fu: Vec<f64> = u.coeffs().iter().map(rational_to_f64).collect();
    let du: Vec<f64> = fu.iter().enumerate().skip(1).map(|(i, c)| c * i as f64).collect();
    let horner = |cs: &[f64], x: f64| cs.iter().rev().fold(0.0, |acc, c| acc * x + c);
    ivs.iter()
        .map(|iv| {
            let iv = iv.bisect(BISECTION_STEPS);
            let (a, b) = (rational_to_f64(&iv.lo), rational_to_f64(&iv.hi));
            let mid = 0.5 * (a + b);
            let mut x = mid;
            for _ in 0..NEWTON_STEPS {
                let d = horner(&du, x);
                if d == 0.0 {
                    break;
                }
                x -= horner(&fu, x) / d;
            }
            // Newton may wander off near clustered roots
            if x.is_finite() && (a - (b - a)..=b + (b - a)).contains(&x) {
                x
            } else {
                mid
            }
        })
        .collect()
}

fn grid_values(lo: f64, hi: f64, grid: usize) -> Vec<Rational> {
    let (lo, hi) = (f64_to_rational(lo), f64_to_rational(hi));
    let steps = Rational::from_integer(((grid - 1) as i64).into());
    (0..grid)
        .map(|i| &lo + (&hi - &lo) * Rational::from_integer((i as i64).into()) / &steps)
        .collect()
}

/// Samples the real curve `f = 0` inside `bbox` on `grid` vertical and
/// `grid` horizontal fibers. Each fiber's roots are isolated exactly and
/// refined by [`BISECTION_STEPS`] bisections and [`NEWTON_STEPS`] Newton
/// steps. Fibers are processed in parallel; the result is sorted.
pub fn sample_curve(f: &MPoly<Rational>, bbox: &BoundingBox, grid: usize) -> Result<SampleSet> {
    if grid < 2 {
        return Err(Error::InvalidInput("grid must be at least 2".into()));
    }
    let f = affine_part(f)?;
    let (ylo, yhi) = (f64_to_rational(bbox.ymin), f64_to_rational(bbox.ymax));
    let (xlo, xhi) = (f64_to_rational(bbox.xmin), f64_to_rational(bbox.xmax));
    let mut jobs: Vec<(Var, Rational)> = grid_values(bbox.xmin, bbox.xmax, grid).into_iter().map(|v| (Var::X, v)).collect();
    jobs.extend(grid_values(bbox.ymin, bbox.ymax, grid).into_iter().map(|v| (Var::Y, v)));

    let run = |(v, c): &(Var, Rational)| -> Vec<[f64; 2]> {
        let other = if *v == Var::X { Var::Y } else { Var::X };
        let Some(u) = f.eval_var(*v, c).to_upoly(other) else { return Vec::new() };
        let (lo, hi) = if *v == Var::X { (&ylo, &yhi) } else { (&xlo, &xhi) };
        let c = rational_to_f64(c);
        fiber_roots(&u, lo, hi)
            .into_iter()
            .map(|r| if *v == Var::X { [c, r] } else { [r, c] })
            .collect()
    };
    let threads = std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1).min(16);
    let chunk = jobs.len().div_ceil(threads).max(1);
    let mut points: Vec<[f64; 2]> = std::thread::scope(|s| {
        let handles: Vec<_> = jobs.chunks(chunk).map(|c| s.spawn(move || c.iter().flat_map(run).collect::<Vec<_>>())).collect();
        handles.into_iter().flat_map(|h| h.join().expect("sampling thread")).collect()
    });
    points.retain(|p| bbox.contains(*p));
    points.sort_by(|a, b| a.partial_cmp(b).expect("finite samples"));
    points.dedup();
    let fp = FloatPoly::new(&f);
    let residual = points.iter().map(|p| fp.eval(p[0], p[1]).abs()).fold(0.0, f64::max);
    let scale = fp.terms.iter().map(|t| t.2.abs()).fold(0.0, f64::max);
    Ok(SampleSet { points, residual, scale, curve: f.to_string() })
}

/// `max_{a in A} min_{b in B} |a - b|`.
pub fn directed_distance(a: &SampleSet, b: &SampleSet) -> Result<f64> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptySampleSet);
    }
    Ok(a.points.iter().map(|p| nearest(p, &b.points).1).fold(0.0, f64::max))
}

fn nearest(p: &[f64; 2], set: &[[f64; 2]]) -> (usize, f64) {
    set.iter()
        .enumerate()
        .map(|(i, q)| (i, (p[0] - q[0]).hypot(p[1] - q[1])))
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .expect("nonempty")
}

/// Result of [`hausdorff_estimate`]. The value is an estimate on the box,
/// not a certified bound.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HausdorffRecord {
    pub estimate: f64,
    pub directed_fg: f64,
    pub directed_gf: f64,
    pub grid: usize,
    #[serde(rename = "box")]
    pub bbox: BoundingBox,
    pub samples_f: usize,
    pub samples_g: usize,
    pub residual_f: f64,
    pub residual_g: f64,
    pub kind: String,
}

/// How many of the worst samples are refined by climbing along the curve.
const CLIMB_CANDIDATES: usize = 8;

/// Distance from `p` to the curve `g`, from the nearest sample refined to
/// the foot point; never larger than the sample distance.
fn refined_distance(p: [f64; 2], g: &FloatPoly, samples: &[[f64; 2]], bbox: &BoundingBox) -> f64 {
    let (i, d) = nearest(&p, samples);
    if d == 0.0 {
        return 0.0;
    }
    match g.foot_point(p, samples[i]) {
        Some(q) if bbox.contains(q) => d.min((p[0] - q[0]).hypot(p[1] - q[1])),
        _ => d,
    }
}

/// Directed distance with foot-point refinement, then hill-climbing along
/// `f` from the worst samples.
fn refined_directed(a: &SampleSet, fa: &FloatPoly, b: &SampleSet, fb: &FloatPoly, bbox: &BoundingBox) -> f64 {
    let mut dists: Vec<(f64, [f64; 2])> =
        a.points.iter().map(|p| (refined_distance(*p, fb, &b.points, bbox), *p)).collect();
    dists.sort_by(|x, y| y.0.total_cmp(&x.0));
    let mut best = dists.first().map(|d| d.0).unwrap_or(0.0);
    if best == 0.0 {
        return 0.0;
    }
    for &(d0, p0) in dists.iter().take(CLIMB_CANDIDATES) {
        let (mut d, mut p) = (d0, p0);
        let mut h = bbox.diagonal() / 200.0;
        while h > 1e-10 * bbox.diagonal() {
            let g = fa.grad(p[0], p[1]);
            let n = g[0].hypot(g[1]);
            if n == 0.0 || !n.is_finite() {
                break;
            }
            let tau = [-g[1] / n, g[0] / n];
            let mut improved = false;
            for s in [h, -h] {
                if let Some(q) = fa.project([p[0] + s * tau[0], p[1] + s * tau[1]]) {
                    if bbox.contains(q) && (q[0] - p[0]).hypot(q[1] - p[1]) < 2.0 * h {
                        let dq = refined_distance(q, fb, &b.points, bbox);
                        if dq > d {
                            (d, p) = (dq, q);
                            improved = true;
                            break;
                        }
                    }
                }
            }
            if !improved {
                h /= 2.0;
            }
        }
        best = best.max(d);
    }
    best
}

/// Estimates the Hausdorff distance between the real curves `f = 0` and
/// `g = 0` restricted to `bbox`. Both empty gives 0; exactly one empty
/// gives infinity.
pub fn hausdorff_estimate(f: &MPoly<Rational>, g: &MPoly<Rational>, bbox: &BoundingBox, grid: usize) -> Result<HausdorffRecord> {
    let (fa, ga) = (affine_part(f)?, affine_part(g)?);
    let a = sample_curve(&fa, bbox, grid)?;
    let b = sample_curve(&ga, bbox, grid)?;
    let same = fa.monic() == ga.monic();
    let (dfg, dgf) = match (a.is_empty(), b.is_empty()) {
        (true, true) => (0.0, 0.0),
        (true, false) | (false, true) => (f64::INFINITY, f64::INFINITY),
        _ if same => (0.0, 0.0),
        _ => {
            let (pf, pg) = (FloatPoly::new(&fa), FloatPoly::new(&ga));
            (refined_directed(&a, &pf, &b, &pg, bbox), refined_directed(&b, &pg, &a, &pf, bbox))
        }
    };
    Ok(HausdorffRecord {
        estimate: dfg.max(dgf),
        directed_fg: dfg,
        directed_gf: dgf,
        grid,
        bbox: *bbox,
        samples_f: a.len(),
        samples_g: b.len(),
        residual_f: a.residual,
        residual_g: b.residual,
        kind: "estimate".into(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn p(s: &str) -> MPoly<Rational> {
        parse_poly(s).unwrap()
    }

    fn set(points: Vec<[f64; 2]>) -> SampleSet {
        SampleSet { points, residual: 0.0, scale: 1.0, curve: String::new() }
    }

    #[test]
    fn directed_basics() {
        assert_eq!(directed_distance(&set(vec![[0.0, 0.0]]), &set(vec![[3.0, 4.0]])).unwrap(), 5.0);
        let b = set(vec![[0.0, 0.0], [1.0, 1.0]]);
        assert_eq!(directed_distance(&set(vec![[1.0, 1.0]]), &b).unwrap(), 0.0);
        assert_eq!(directed_distance(&set(vec![]), &b), Err(Error::EmptySampleSet));
    }

    #[test]
    fn circle_samples() {
        let s = sample_curve(&p("x^2 + y^2 - 1"), &BoundingBox::square(2.0).unwrap(), 100).unwrap();
        assert!(!s.is_empty());
        assert!(s.residual < 1e-9);
        assert!(sample_curve(&p("x^2 + y^2 + 1"), &BoundingBox::square(2.0).unwrap(), 100).unwrap().is_empty());
    }

    #[test]
    fn lines() {
        let b = BoundingBox::square(5.0).unwrap();
        let r = hausdorff_estimate(&p("y"), &p("y - 2"), &b, 50).unwrap();
        assert!((r.estimate - 2.0).abs() < 0.01, "{r:?}");
        let r = hausdorff_estimate(&p("y"), &p("y"), &b, 50).unwrap();
        assert_eq!(r.estimate, 0.0);
        let r = hausdorff_estimate(&p("y"), &p("x^2 + y^2 + 1"), &b, 50).unwrap();
        assert!(r.estimate.is_infinite());
    }

    #[test]
    fn box_parsing() {
        assert_eq!(BoundingBox::parse("-1, 1, -2, 2").unwrap(), BoundingBox::new(-1.0, 1.0, -2.0, 2.0).unwrap());
        assert!(BoundingBox::parse("1,0,0,1").is_err());
        assert!(BoundingBox::parse("1,2,3").is_err());
    }
}
