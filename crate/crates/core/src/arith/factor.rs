//! Factorization over Q: squarefree decomposition, then Zassenhaus
//! (factor modulo a small prime, multifactor Hensel lifting, exhaustive
//! recombination).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Rational, UPoly};
use crate::error::{Error, Result};

/// Largest degree accepted by [`factor_over_q`].
pub const MAX_FACTOR_DEGREE: usize = 24;

/// Monic squarefree part (product of the distinct irreducible factors).
pub fn squarefree_part(p: &UPoly<Rational>) -> Result<UPoly<Rational>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(p.squarefree_part())
}

/// Squarefree decomposition `p = lc * prod a_i^i` with monic pairwise coprime
/// squarefree `a_i`.
pub fn squarefree_decomposition(p: &UPoly<Rational>) -> Result<Vec<(UPoly<Rational>, u32)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(p.squarefree_decomposition())
}

/// `(factor, multiplicity)` pairs.
pub type Factors = Vec<(UPoly<Rational>, u32)>;

/// Factors `p` into monic irreducibles over Q.
///
/// Returns the leading coefficient and `(factor, multiplicity)` pairs sorted
/// by degree, then by coefficients, so that
/// `lc * prod factor^multiplicity == p`.
pub fn factor_over_q(p: &UPoly<Rational>) -> Result<(Rational, Factors)> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let degree = p.deg() as usize;
    if degree > MAX_FACTOR_DEGREE {
        return Err(Error::DegreeOutOfScope { degree, limit: MAX_FACTOR_DEGREE });
    }
    let mut out = Vec::new();
    for (a, mult) in p.squarefree_decomposition() {
        let (_, ints) = a.primitive_integer();
        for g in zassenhaus(&ints) {
            out.push((UPoly::from_integers(&g).monic(), mult));
        }
    }
    out.sort_by(|(a, ma), (b, mb)| {
        a.deg()
            .cmp(&b.deg())
            .then_with(|| a.coeffs().iter().rev().cmp(b.coeffs().iter().rev()))
            .then(ma.cmp(mb))
    });
    Ok((p.lc(), out))
}

/// True when `p` (nonconstant) is irreducible over Q.
pub fn is_irreducible(p: &UPoly<Rational>) -> Result<bool> {
    if p.deg() < 1 {
        return Ok(false);
    }
    let (_, f) = factor_over_q(p)?;
    Ok(f.len() == 1 && f[0].1 == 1)
}

type ZPoly = Vec<BigInt>;
type PPoly = Vec<u64>;

fn trim_z(v: &mut ZPoly) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn trim_p(v: &mut PPoly) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// Factors a squarefree primitive integer polynomial into primitive
/// irreducibles with positive leading coefficients.
fn zassenhaus(f: &ZPoly) -> Vec<ZPoly> {
    let n = f.len() - 1;
    if n <= 1 {
        return vec![normalize_sign(f.clone())];
    }
    let lc = f[n].clone();
    let (p, modular) = choose_prime(f, &lc);
    if modular.len() == 1 {
        return vec![normalize_sign(f.clone())];
    }
    // coefficient bound for lc * (any factor)
    let maxc = f.iter().map(|c| c.abs()).max().unwrap();
    let bound = lc.abs() * (BigInt::one() << n) * BigInt::from(n + 1) * maxc;
    let target = bound * 2u32;
    let pb = BigInt::from(p);
    let mut steps = 0u32;
    let mut modulus = pb.clone();
    while modulus <= target {
        modulus = &modulus * &modulus;
        steps += 1;
    }
    let fp = reduce_to_p(f, p);
    let lcp = fp.last().copied().unwrap();
    let lifted = lift_tree(f, &modular, lcp, p, steps);
    recombine(f, lifted, &modulus)
}

fn normalize_sign(mut f: ZPoly) -> ZPoly {
    if f.last().is_some_and(|c| c.is_negative()) {
        for c in f.iter_mut() {
            *c = -c.clone();
        }
    }
    f
}

const PRIMES: [u64; 40] = [
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
    101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179,
];

/// Picks, among the first few good primes, the one giving the fewest
/// modular factors.
fn choose_prime(f: &ZPoly, lc: &BigInt) -> (u64, Vec<PPoly>) {
    let mut best: Option<(u64, Vec<PPoly>)> = None;
    let mut good = 0;
    let mut candidates: Vec<u64> = PRIMES.to_vec();
    let mut next = 181u64;
    let mut idx = 0;
    loop {
        if idx == candidates.len() {
            while !is_prime(next) {
                next += 2;
            }
            candidates.push(next);
            next += 2;
        }
        let p = candidates[idx];
        idx += 1;
        if (lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = reduce_to_p(f, p);
        let fld = Fp::new(p);
        let d = fld.derivative(&fp);
        if fld.gcd(&fp, &d).len() != 1 {
            continue;
        }
        let factors = fld.factor_squarefree(&fp);
        let better = best.as_ref().is_none_or(|(_, b)| factors.len() < b.len());
        if better {
            best = Some((p, factors));
        }
        good += 1;
        if good >= 5 || best.as_ref().unwrap().1.len() == 1 {
            break;
        }
    }
    best.unwrap()
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn reduce_to_p(f: &ZPoly, p: u64) -> PPoly {
    let pb = BigInt::from(p);
    let mut v: PPoly = f.iter().map(|c| c.mod_floor(&pb).to_u64().unwrap()).collect();
    trim_p(&mut v);
    v
}

/// Arithmetic in F_p[x] for a small odd prime p.
struct Fp {
    p: u64,
}

impl Fp {
    fn new(p: u64) -> Self {
        Fp { p }
    }

    fn inv(&self, a: u64) -> u64 {
        self.pow_scalar(a, self.p - 2)
    }

    fn pow_scalar(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * a % self.p;
            }
            a = a * a % self.p;
            e >>= 1;
        }
        acc
    }

    fn sub(&self, a: &PPoly, b: &PPoly) -> PPoly {
        let n = a.len().max(b.len());
        let mut v: PPoly = (0..n)
            .map(|i| (a.get(i).unwrap_or(&0) + self.p - b.get(i).unwrap_or(&0)) % self.p)
            .collect();
        trim_p(&mut v);
        v
    }

    fn mul(&self, a: &PPoly, b: &PPoly) -> PPoly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut v = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                v[i + j] = (v[i + j] + x * y) % self.p;
            }
        }
        trim_p(&mut v);
        v
    }

    fn scale(&self, a: &PPoly, c: u64) -> PPoly {
        let mut v: PPoly = a.iter().map(|x| x * c % self.p).collect();
        trim_p(&mut v);
        v
    }

    fn monic(&self, a: &PPoly) -> PPoly {
        match a.last() {
            None => Vec::new(),
            Some(&l) => self.scale(a, self.inv(l)),
        }
    }

    fn divrem(&self, a: &PPoly, b: &PPoly) -> (PPoly, PPoly) {
        assert!(!b.is_empty());
        if a.len() < b.len() {
            return (Vec::new(), a.clone());
        }
        let db = b.len() - 1;
        let inv = self.inv(*b.last().unwrap());
        let mut r = a.clone();
        let mut quo = vec![0u64; a.len() - db];
        for k in (0..quo.len()).rev() {
            let c = r[k + db] * inv % self.p;
            if c == 0 {
                continue;
            }
            for (i, &bc) in b.iter().enumerate() {
                r[k + i] = (r[k + i] + self.p - c * bc % self.p) % self.p;
            }
            quo[k] = c;
        }
        r.truncate(db);
        trim_p(&mut r);
        trim_p(&mut quo);
        (quo, r)
    }

    fn rem(&self, a: &PPoly, b: &PPoly) -> PPoly {
        self.divrem(a, b).1
    }

    fn gcd(&self, a: &PPoly, b: &PPoly) -> PPoly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_empty() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    /// `(g, s, t)` with `s*a + t*b = g` monic.
    fn ext_gcd(&self, a: &PPoly, b: &PPoly) -> (PPoly, PPoly, PPoly) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (vec![1u64], Vec::new());
        let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
        while !r1.is_empty() {
            let (q, r) = self.divrem(&r0, &r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = self.sub(&s0, &self.mul(&q, &s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = self.sub(&t0, &self.mul(&q, &t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        let inv = self.inv(*r0.last().unwrap());
        (self.scale(&r0, inv), self.scale(&s0, inv), self.scale(&t0, inv))
    }

    fn derivative(&self, a: &PPoly) -> PPoly {
        let mut v: PPoly = a
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| (i as u64 % self.p) * c % self.p)
            .collect();
        trim_p(&mut v);
        v
    }

    fn powmod(&self, a: &PPoly, mut e: u64, m: &PPoly) -> PPoly {
        let mut base = self.rem(a, m);
        let mut acc = vec![1u64];
        while e > 0 {
            if e & 1 == 1 {
                acc = self.rem(&self.mul(&acc, &base), m);
            }
            e >>= 1;
            if e > 0 {
                base = self.rem(&self.mul(&base, &base), m);
            }
        }
        acc
    }

    /// Monic irreducible factors of a squarefree polynomial, sorted.
    fn factor_squarefree(&self, f: &PPoly) -> Vec<PPoly> {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ self.p);
        let mut out = Vec::new();
        for (g, d) in self.distinct_degree(&self.monic(f)) {
            self.equal_degree(&g, d, &mut rng, &mut out);
        }
        out.sort();
        out
    }

    fn distinct_degree(&self, f: &PPoly) -> Vec<(PPoly, usize)> {
        let mut out = Vec::new();
        let mut f = f.clone();
        let x = vec![0u64, 1];
        let mut h = x.clone();
        let mut i = 1;
        while f.len() > 1 && 2 * i < f.len() {
            h = self.powmod(&h, self.p, &f);
            let g = self.gcd(&self.sub(&h, &x), &f);
            if g.len() > 1 {
                f = self.divrem(&f, &g).0;
                h = self.rem(&h, &f);
                out.push((g, i));
            }
            i += 1;
        }
        if f.len() > 1 {
            let d = f.len() - 1;
            out.push((self.monic(&f), d));
        }
        out
    }

    fn equal_degree(&self, g: &PPoly, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<PPoly>) {
        let n = g.len() - 1;
        if n == d {
            out.push(g.clone());
            return;
        }
        loop {
            let mut a: PPoly = (0..n).map(|_| rng.gen_range(0..self.p)).collect();
            trim_p(&mut a);
            if a.len() < 2 {
                continue;
            }
            // a^((p^d - 1)/2) = (a^(1 + p + ... + p^(d-1)))^((p-1)/2)
            let mut c = a.clone();
            let mut acc = a.clone();
            for _ in 1..d {
                c = self.powmod(&c, self.p, g);
                acc = self.rem(&self.mul(&acc, &c), g);
            }
            let b = self.powmod(&acc, (self.p - 1) / 2, g);
            let b = self.sub(&b, &vec![1u64]);
            let h = self.gcd(&b, g);
            if h.len() > 1 && h.len() < g.len() {
                let other = self.divrem(g, &h).0;
                self.equal_degree(&h, d, rng, out);
                self.equal_degree(&self.monic(&other), d, rng, out);
                return;
            }
        }
    }
}

// --- polynomials over Z/mZ with big m, in the symmetric or positive range ---

fn zmod(v: &ZPoly, m: &BigInt) -> ZPoly {
    let mut out: ZPoly = v.iter().map(|c| c.mod_floor(m)).collect();
    trim_z(&mut out);
    out
}

fn zadd(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let n = a.len().max(b.len());
    let zero = BigInt::zero();
    let mut v: ZPoly = (0..n)
        .map(|i| a.get(i).unwrap_or(&zero) + b.get(i).unwrap_or(&zero))
        .collect();
    trim_z(&mut v);
    v
}

fn zsub(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let n = a.len().max(b.len());
    let zero = BigInt::zero();
    let mut v: ZPoly = (0..n)
        .map(|i| a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero))
        .collect();
    trim_z(&mut v);
    v
}

fn zmul(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut v = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            v[i + j] += x * y;
        }
    }
    trim_z(&mut v);
    v
}

/// Division by a monic polynomial modulo m.
fn zdivrem_monic(a: &ZPoly, b: &ZPoly, m: &BigInt) -> (ZPoly, ZPoly) {
    let a = zmod(a, m);
    if a.len() < b.len() {
        return (Vec::new(), a);
    }
    let db = b.len() - 1;
    let mut r = a;
    let mut quo = vec![BigInt::zero(); r.len() - db];
    for k in (0..quo.len()).rev() {
        let c = r[k + db].mod_floor(m);
        if c.is_zero() {
            continue;
        }
        for (i, bc) in b.iter().enumerate() {
            r[k + i] = (&r[k + i] - &c * bc).mod_floor(m);
        }
        quo[k] = c;
    }
    r.truncate(db);
    trim_z(&mut r);
    trim_z(&mut quo);
    (quo, r)
}

fn from_p(v: &PPoly) -> ZPoly {
    v.iter().map(|&c| BigInt::from(c)).collect()
}

/// One quadratic Hensel step: from `f = g h`, `s g + t h = 1` modulo `m`
/// to the same identities modulo `m^2`. `h` is monic.
fn hensel_step(
    f: &ZPoly,
    g: &ZPoly,
    h: &ZPoly,
    s: &ZPoly,
    t: &ZPoly,
    m: &BigInt,
) -> (ZPoly, ZPoly, ZPoly, ZPoly) {
    let m2 = m * m;
    let e = zmod(&zsub(f, &zmul(g, h)), &m2);
    let (q, r) = zdivrem_monic(&zmul(s, &e), h, &m2);
    let g2 = zmod(&zadd(&zadd(g, &zmul(t, &e)), &zmul(&q, g)), &m2);
    let h2 = zmod(&zadd(h, &r), &m2);
    let b = zmod(&zsub(&zadd(&zmul(s, &g2), &zmul(t, &h2)), &vec![BigInt::one()]), &m2);
    let (c, d) = zdivrem_monic(&zmul(s, &b), &h2, &m2);
    let s2 = zmod(&zsub(s, &d), &m2);
    let t2 = zmod(&zsub(&zsub(t, &zmul(t, &b)), &zmul(&c, &g2)), &m2);
    (g2, h2, s2, t2)
}

/// Lifts the monic modular factors `us` of `f` (mod p) to monic factors
/// modulo `p^(2^steps)`; `lcp` is `lc(f) mod p`.
fn lift_tree(f: &ZPoly, us: &[PPoly], lcp: u64, p: u64, steps: u32) -> Vec<ZPoly> {
    let pb = BigInt::from(p);
    let modulus = (0..steps).fold(pb.clone(), |m, _| &m * &m);
    if us.len() == 1 {
        let lc = f.last().unwrap().mod_floor(&modulus);
        let inv = lc.modinv(&modulus).expect("leading coefficient invertible mod p");
        let v: ZPoly = f.iter().map(|c| c * &inv).collect();
        return vec![zmod(&v, &modulus)];
    }
    let fld = Fp::new(p);
    let k = us.len() / 2;
    let g0 = us[..k].iter().fold(vec![lcp], |acc, u| fld.mul(&acc, u));
    let h0 = us[k..].iter().fold(vec![1u64], |acc, u| fld.mul(&acc, u));
    let (one, s0, t0) = fld.ext_gcd(&g0, &h0);
    debug_assert_eq!(one, vec![1u64]);
    let (mut g, mut h, mut s, mut t) = (from_p(&g0), from_p(&h0), from_p(&s0), from_p(&t0));
    let mut m = pb;
    for _ in 0..steps {
        let next = hensel_step(f, &g, &h, &s, &t, &m);
        g = next.0;
        h = next.1;
        s = next.2;
        t = next.3;
        m = &m * &m;
    }
    let mut out = lift_tree(&g, &us[..k], lcp, p, steps);
    out.extend(lift_tree(&h, &us[k..], 1, p, steps));
    out
}

fn symmetric(v: &ZPoly, m: &BigInt) -> ZPoly {
    let half = m / 2u32;
    let mut out: ZPoly = v
        .iter()
        .map(|c| {
            let c = c.mod_floor(m);
            if c > half {
                c - m
            } else {
                c
            }
        })
        .collect();
    trim_z(&mut out);
    out
}

fn primitive(v: ZPoly) -> ZPoly {
    let mut g = BigInt::zero();
    for c in &v {
        g = g.gcd(c);
    }
    if g.is_zero() {
        return v;
    }
    normalize_sign(v.into_iter().map(|c| c / &g).collect())
}

/// Exact division in Z[x].
fn zdiv_exact(a: &ZPoly, b: &ZPoly) -> Option<ZPoly> {
    if a.len() < b.len() {
        return None;
    }
    let db = b.len() - 1;
    let lb = b.last().unwrap();
    let mut r = a.clone();
    let mut quo = vec![BigInt::zero(); a.len() - db];
    for k in (0..quo.len()).rev() {
        let c = &r[k + db];
        if c.is_zero() {
            continue;
        }
        let (qk, rem) = c.div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        for (i, bc) in b.iter().enumerate() {
            r[k + i] -= &qk * bc;
        }
        quo[k] = qk;
    }
    if r.iter().any(|c| !c.is_zero()) {
        return None;
    }
    trim_z(&mut quo);
    Some(quo)
}

/// Zassenhaus recombination of the lifted factors.
fn recombine(f: &ZPoly, lifted: Vec<ZPoly>, modulus: &BigInt) -> Vec<ZPoly> {
    let mut f = f.clone();
    let mut remaining = lifted;
    let mut result = Vec::new();
    let mut size = 1;
    'outer: while 2 * size <= remaining.len() {
        let r = remaining.len();
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let lc = f.last().unwrap().clone();
            // constant-term pruning before the full product
            let ct = idx
                .iter()
                .fold(lc.clone(), |acc, &i| (acc * remaining[i].first().cloned().unwrap_or_default()).mod_floor(modulus));
            let ct = symmetric(&vec![ct], modulus).first().cloned().unwrap_or_default();
            let f0 = f.first().cloned().unwrap_or_default();
            let plausible = ct.is_zero() || (&lc * &f0 % &ct).is_zero();
            if plausible {
                let prod = idx
                    .iter()
                    .fold(vec![lc.clone()], |acc, &i| zmod(&zmul(&acc, &remaining[i]), modulus));
                let g = primitive(symmetric(&prod, modulus));
                if g.len() > 1 {
                    if let Some(quo) = zdiv_exact(&f, &g) {
                        result.push(g);
                        f = quo;
                        let mut keep = Vec::new();
                        for (i, u) in remaining.into_iter().enumerate() {
                            if !idx.contains(&i) {
                                keep.push(u);
                            }
                        }
                        remaining = keep;
                        continue 'outer;
                    }
                }
            }
            // next combination
            let mut i = size;
            loop {
                if i == 0 {
                    size += 1;
                    continue 'outer;
                }
                i -= 1;
                if idx[i] < r - size + i {
                    idx[i] += 1;
                    for j in i + 1..size {
                        idx[j] = idx[j - 1] + 1;
                    }
                    break;
                }
            }
        }
    }
    if f.len() > 1 {
        result.push(normalize_sign(f));
    }
    result
}
