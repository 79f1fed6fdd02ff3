//! Exact linear algebra: reduced row echelon form over any field, and a
//! fraction-free integer route for rational matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Field, Rational};

/// Reduces `m` (rows of equal length `ncols`) to reduced row echelon form in
/// place, dropping zero rows. Returns the pivot columns.
pub fn rref<F: Field>(m: &mut Vec<Vec<F>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(pr) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        let inv = m[r][c].inv().expect("nonzero pivot");
        for x in m[r].iter_mut() {
            *x = x.clone() * &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x = x.clone() - &(f.clone() * p);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    pivots
}

pub fn rank<F: Field>(rows: &[Vec<F>], ncols: usize) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m, ncols).len()
}

/// Nullspace basis: one vector per free column `j` (increasing), with entry
/// 1 at `j`, zero at the other free columns.
pub fn nullspace<F: Field>(rows: &[Vec<F>], ncols: usize) -> Vec<Vec<F>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m, ncols);
    let mut out = Vec::new();
    for j in (0..ncols).filter(|j| !pivots.contains(j)) {
        let mut v = vec![F::zero(); ncols];
        v[j] = F::one();
        for (i, &pc) in pivots.iter().enumerate() {
            v[pc] = -m[i][j].clone();
        }
        out.push(v);
    }
    out
}

/// Solves `x * basis = target` for row vectors; `None` if `target` is not in
/// the row space.
pub fn solve_in_span<F: Field>(basis: &[Vec<F>], target: &[F]) -> Option<Vec<F>> {
    let ncols = target.len();
    let k = basis.len();
    // columns of the system are basis vectors: rows indexed by coordinates
    let mut aug: Vec<Vec<F>> = (0..ncols)
        .map(|c| {
            let mut row: Vec<F> = basis.iter().map(|b| b[c].clone()).collect();
            row.push(target[c].clone());
            row
        })
        .collect();
    let pivots = rref(&mut aug, k + 1);
    if pivots.contains(&k) {
        return None;
    }
    let mut x = vec![F::zero(); k];
    for (i, &pc) in pivots.iter().enumerate() {
        x[pc] = aug[i][k].clone();
    }
    Some(x)
}

/// Nullspace of a rational matrix by fraction-free Gauss-Jordan elimination
/// over Z with row-content removal.
///
/// Each vector is the [`nullspace`] vector for its free column scaled to a
/// primitive integer vector with positive entry at the free column.
pub fn nullspace_q(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let mut m: Vec<Vec<BigInt>> = rows.iter().map(|r| integer_row(r)).collect();
    m.retain(|r| r.iter().any(|x| !x.is_zero()));
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        // smallest nonzero entry as pivot keeps growth down
        let Some(pr) = (r..m.len())
            .filter(|&i| !m[i][c].is_zero())
            .min_by(|&a, &b| m[a][c].abs().cmp(&m[b][c].abs()))
        else {
            continue;
        };
        m.swap(r, pr);
        let pivot_row = m[r].clone();
        let p = pivot_row[c].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let g = p.gcd(&row[c]);
            let a = &p / &g;
            let b = &row[c] / &g;
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x = &*x * &a - &b * y;
            }
            make_primitive(row);
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    let mut out = Vec::new();
    for j in (0..ncols).filter(|j| !pivots.contains(j)) {
        let l = pivots
            .iter()
            .enumerate()
            .fold(BigInt::one(), |acc, (i, &pc)| acc.lcm(&m[i][pc]));
        let mut v = vec![BigInt::zero(); ncols];
        v[j] = l.clone();
        for (i, &pc) in pivots.iter().enumerate() {
            v[pc] = -(&m[i][j] * (&l / &m[i][pc]));
        }
        make_primitive(&mut v);
        if v[j].is_negative() {
            v.iter_mut().for_each(|x| *x = -x.clone());
        }
        out.push(v.into_iter().map(Rational::from_integer).collect());
    }
    out
}

/// Rank of a rational matrix.
pub fn rank_q(rows: &[Vec<Rational>], ncols: usize) -> usize {
    ncols - nullspace_q(rows, ncols).len()
}

/// Rank modulo a prime, `None` if some denominator is divisible by `p`.
/// Never exceeds the rank over Q.
pub fn rank_mod_p(rows: &[Vec<Rational>], ncols: usize, p: u64) -> Option<usize> {
    let pb = BigInt::from(p);
    let mut m: Vec<Vec<u64>> = Vec::with_capacity(rows.len());
    for row in rows {
        let mut out = Vec::with_capacity(ncols);
        for x in row {
            let d = x.denom().mod_floor(&pb).to_u64().unwrap();
            if d == 0 {
                return None;
            }
            let n = x.numer().mod_floor(&pb).to_u64().unwrap();
            out.push(n * pow_mod(d, p - 2, p) % p);
        }
        m.push(out);
    }
    let mut r = 0;
    for c in 0..ncols {
        let Some(pr) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, pr);
        let inv = pow_mod(m[r][c], p - 2, p);
        let pivot_row: Vec<u64> = m[r].iter().map(|x| x * inv % p).collect();
        for row in m.iter_mut().skip(r + 1) {
            let f = row[c];
            if f == 0 {
                continue;
            }
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x = (*x + p - f * y % p) % p;
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    Some(r)
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    acc
}

fn integer_row(r: &[Rational]) -> Vec<BigInt> {
    let l = r.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut v: Vec<BigInt> = r.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    make_primitive(&mut v);
    v
}

fn make_primitive(v: &mut [BigInt]) {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        v.iter_mut().for_each(|x| *x = &*x / &g);
    }
}
