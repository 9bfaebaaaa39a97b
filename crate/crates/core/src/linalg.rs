//! Exact dense linear algebra over rational functions, plus a modular rank
//! used only as a fast screen.

use crate::coeffs::{LaurentBi, RatFn};
use crate::scalar::Scalar;

/// Row-reduces in place; returns pivot columns.
pub fn row_reduce<T: Scalar>(m: &mut Vec<Vec<RatFn<T>>>) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        // Prefer the pivot with the smallest numerator to limit growth.
        let Some(p) = (r..rows).filter(|&i| !m[i][c].is_zero()).min_by_key(|&i| m[i][c].num().len() + m[i][c].den().len())
        else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("nonzero pivot");
        for x in m[r].iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let k = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x = &*x - &(&k * y);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<T: Scalar>(m: &[Vec<RatFn<T>>]) -> usize {
    let mut m = m.to_vec();
    row_reduce(&mut m).len()
}

/// Solves `G c = v` for square nonsingular `G`; `None` if singular.
pub fn solve<T: Scalar>(g: &[Vec<RatFn<T>>], v: &[RatFn<T>]) -> Option<Vec<RatFn<T>>> {
    let n = g.len();
    let mut aug: Vec<Vec<RatFn<T>>> = g
        .iter()
        .zip(v)
        .map(|(row, x)| {
            let mut r = row.clone();
            r.push(x.clone());
            r
        })
        .collect();
    let pivots = row_reduce(&mut aug);
    if pivots.len() < n || pivots.iter().any(|&c| c >= n) {
        return None;
    }
    Some(aug.into_iter().map(|mut r| r.pop().unwrap()).collect())
}

pub const PRIME: u64 = 0x1fff_ffff_ffff_ffff; // 2^61 - 1

pub fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % PRIME as u128) as u64
}

fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    acc
}

pub fn invmod(a: u64) -> u64 {
    powmod(a, PRIME - 2)
}

/// `x^a y^b` modulo the prime, for nonzero `x`, `y`.
pub fn monomial_mod(x: u64, y: u64, a: i32, b: i32) -> u64 {
    let ra = if a >= 0 { powmod(x, a as u64) } else { powmod(invmod(x), (-a) as u64) };
    let sb = if b >= 0 { powmod(y, b as u64) } else { powmod(invmod(y), (-b) as u64) };
    mulmod(ra, sb)
}

/// Row echelon form grown one row at a time, modulo the prime.
pub struct IncrementalRank {
    pivots: Vec<(usize, Vec<u64>)>,
}

impl IncrementalRank {
    pub fn new() -> Self {
        IncrementalRank { pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `row` against the stored pivots; keeps it if something survives.
    pub fn push(&mut self, mut row: Vec<u64>) -> bool {
        for (c, p) in &self.pivots {
            let k = row[*c];
            if k != 0 {
                for (x, y) in row.iter_mut().zip(p) {
                    if *y != 0 {
                        *x = (*x + PRIME - mulmod(k, *y)) % PRIME;
                    }
                }
            }
        }
        let Some(c) = row.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = invmod(row[c]);
        for x in row.iter_mut() {
            *x = mulmod(*x, inv);
        }
        self.pivots.push((c, row));
        true
    }
}

impl Default for IncrementalRank {
    fn default() -> Self {
        Self::new()
    }
}

/// Value of a Laurent polynomial at `r = x`, `s = y` modulo a fixed prime;
/// `None` when a coefficient denominator vanishes there.
pub fn eval_mod<T: Scalar>(p: &LaurentBi<T>, x: u64, y: u64) -> Option<u64> {
    let (xi, yi) = (invmod(x), invmod(y));
    let big_p = num_bigint::BigInt::from(PRIME);
    let mut acc = 0u64;
    for ((a, b), c) in p.terms() {
        let n = c.numer_big().mod_floor_u64(&big_p);
        let d = c.denom_big().mod_floor_u64(&big_p);
        if d == 0 {
            return None;
        }
        let ra = if *a >= 0 { powmod(x, *a as u64) } else { powmod(xi, (-*a) as u64) };
        let sb = if *b >= 0 { powmod(y, *b as u64) } else { powmod(yi, (-*b) as u64) };
        let term = mulmod(mulmod(n, invmod(d)), mulmod(ra, sb));
        acc = (acc + term) % PRIME;
    }
    Some(acc)
}

trait ModFloorU64 {
    fn mod_floor_u64(&self, p: &num_bigint::BigInt) -> u64;
}

impl ModFloorU64 for num_bigint::BigInt {
    fn mod_floor_u64(&self, p: &num_bigint::BigInt) -> u64 {
        use num_integer::Integer;
        use num_traits::ToPrimitive;
        self.mod_floor(p).to_u64().expect("reduced residue fits")
    }
}

/// Rank of a matrix of values modulo the fixed prime.
pub fn rank_mod(mut m: Vec<Vec<u64>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        let inv = invmod(m[r][c]);
        for x in m[r].iter_mut() {
            *x = mulmod(*x, inv);
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c] == 0 {
                continue;
            }
            let k = row[c];
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if *y != 0 {
                    *x = (*x + PRIME - mulmod(k, *y)) % PRIME;
                }
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}
