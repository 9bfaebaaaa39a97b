//! Heuristic gcd for integer polynomials by evaluation at large integers
//! and balanced-digit reconstruction. Returns `None` when the heuristic
//! gives up; callers then fall back to a PRS computation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense univariate polynomial with integer coefficients, index = degree.
pub type IntPoly = Vec<BigInt>;

/// Dense bivariate polynomial: `rows[a][b]` is the coefficient of `r^a s^b`.
pub type IntPoly2 = Vec<IntPoly>;

const ATTEMPTS: usize = 6;

fn trim(p: &mut IntPoly) {
    while p.last().is_some_and(|x| x.is_zero()) {
        p.pop();
    }
}

fn trim2(p: &mut IntPoly2) {
    for row in p.iter_mut() {
        trim(row);
    }
    while p.last().is_some_and(|x| x.is_empty()) {
        p.pop();
    }
}

fn content(p: &IntPoly) -> BigInt {
    p.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

fn content2(p: &IntPoly2) -> BigInt {
    p.iter().flatten().fold(BigInt::zero(), |g, x| g.gcd(x))
}

fn max_norm(p: &IntPoly) -> BigInt {
    p.iter().map(|x| x.abs()).max().unwrap_or_default()
}

fn max_norm2(p: &IntPoly2) -> BigInt {
    p.iter().flatten().map(|x| x.abs()).max().unwrap_or_default()
}

fn eval(p: &IntPoly, x: &BigInt) -> BigInt {
    p.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

/// Evaluates the `r` variable, leaving a polynomial in `s`.
fn eval_r(p: &IntPoly2, x: &BigInt) -> IntPoly {
    let width = p.iter().map(|r| r.len()).max().unwrap_or(0);
    let mut out = vec![BigInt::zero(); width];
    for row in p.iter().rev() {
        for v in out.iter_mut() {
            *v *= x;
        }
        for (j, c) in row.iter().enumerate() {
            out[j] += c;
        }
    }
    trim(&mut out);
    out
}

/// Balanced base-`x` digits of `h`, lowest first.
fn digits(mut h: BigInt, x: &BigInt) -> IntPoly {
    let half = x / 2;
    let mut out = Vec::new();
    while !h.is_zero() {
        let mut d = h.mod_floor(x);
        if d > half {
            d -= x;
        }
        h = (h - &d) / x;
        out.push(d);
    }
    out
}

fn next_point(x: &BigInt) -> BigInt {
    let root = x.sqrt().sqrt().max(BigInt::one());
    x * BigInt::from(73794) * root / BigInt::from(27011)
}

/// Exact division test in `Z[s]`.
fn divides(d: &IntPoly, p: &IntPoly) -> bool {
    if p.is_empty() {
        return true;
    }
    let dd = d.len() - 1;
    let lc = &d[dd];
    let mut rem = p.clone();
    while rem.len() > dd {
        let top = rem.last().unwrap().clone();
        let (q, r) = top.div_rem(lc);
        if !r.is_zero() {
            return false;
        }
        let shift = rem.len() - 1 - dd;
        for (j, c) in d.iter().enumerate() {
            rem[shift + j] -= &q * c;
        }
        trim(&mut rem);
    }
    rem.is_empty()
}

/// Exact division test in `Z[r, s]`, dividing on the leading `r` coefficient.
fn divides2(d: &IntPoly2, p: &IntPoly2) -> bool {
    if p.is_empty() {
        return true;
    }
    let dd = d.len() - 1;
    let lc = &d[dd];
    let mut rem = p.clone();
    while rem.len() > dd {
        let top = rem.last().unwrap().clone();
        let Some(q) = div_exact(&top, lc) else {
            return false;
        };
        let shift = rem.len() - 1 - dd;
        for (j, row) in d.iter().enumerate() {
            let prod = mul(&q, row);
            let target = &mut rem[shift + j];
            if target.len() < prod.len() {
                target.resize(prod.len(), BigInt::zero());
            }
            for (k, c) in prod.into_iter().enumerate() {
                target[k] -= c;
            }
        }
        trim2(&mut rem);
    }
    rem.is_empty()
}

fn mul(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn div_exact(p: &IntPoly, d: &IntPoly) -> Option<IntPoly> {
    if p.is_empty() {
        return Some(Vec::new());
    }
    if d.len() > p.len() {
        return None;
    }
    let dd = d.len() - 1;
    let lc = &d[dd];
    let mut rem = p.clone();
    let mut q = vec![BigInt::zero(); p.len() - dd];
    while rem.len() > dd {
        let top = rem.last().unwrap().clone();
        let (c, r) = top.div_rem(lc);
        if !r.is_zero() {
            return None;
        }
        let shift = rem.len() - 1 - dd;
        for (j, x) in d.iter().enumerate() {
            rem[shift + j] -= &c * x;
        }
        q[shift] = c;
        trim(&mut rem);
    }
    if rem.is_empty() {
        trim(&mut q);
        Some(q)
    } else {
        None
    }
}

fn normalize_sign(p: &mut IntPoly) {
    if p.last().is_some_and(|x| x.is_negative()) {
        for c in p.iter_mut() {
            *c = -&*c;
        }
    }
}

/// Gcd in `Z[s]`, primitive with positive leading coefficient, times the content gcd.
pub fn gcd1(a: &IntPoly, b: &IntPoly) -> Option<IntPoly> {
    let (mut a, mut b) = (a.clone(), b.clone());
    trim(&mut a);
    trim(&mut b);
    if a.is_empty() || b.is_empty() {
        let mut g = if a.is_empty() { b } else { a };
        normalize_sign(&mut g);
        return Some(g);
    }
    let (ca, cb) = (content(&a), content(&b));
    let c = ca.gcd(&cb);
    let a: IntPoly = a.iter().map(|x| x / &ca).collect();
    let b: IntPoly = b.iter().map(|x| x / &cb).collect();
    if a.len() == 1 || b.len() == 1 {
        return Some(vec![c]);
    }
    let mut xi = max_norm(&a).min(max_norm(&b)) * 2 + BigInt::from(29);
    for _ in 0..ATTEMPTS {
        let h = eval(&a, &xi).gcd(&eval(&b, &xi));
        let mut g = digits(h, &xi);
        if !g.is_empty() {
            let k = content(&g);
            g.iter_mut().for_each(|x| *x /= &k);
            normalize_sign(&mut g);
            if divides(&g, &a) && divides(&g, &b) {
                return Some(g.into_iter().map(|x| x * &c).collect());
            }
        }
        xi = next_point(&xi);
    }
    None
}

/// Gcd in `Z[r, s]` up to sign.
pub fn gcd2(a: &IntPoly2, b: &IntPoly2) -> Option<IntPoly2> {
    let (mut a, mut b) = (a.clone(), b.clone());
    trim2(&mut a);
    trim2(&mut b);
    if a.is_empty() {
        return Some(b);
    }
    if b.is_empty() {
        return Some(a);
    }
    if a.len() == 1 && b.len() == 1 {
        return gcd1(&a[0], &b[0]).map(|g| vec![g]);
    }
    let (ca, cb) = (content2(&a), content2(&b));
    let c = ca.gcd(&cb);
    let scale = |p: &IntPoly2, k: &BigInt| -> IntPoly2 {
        p.iter().map(|row| row.iter().map(|x| x / k).collect()).collect()
    };
    let a = scale(&a, &ca);
    let b = scale(&b, &cb);
    let mut xi = max_norm2(&a).min(max_norm2(&b)) * 2 + BigInt::from(29);
    for _ in 0..ATTEMPTS {
        let (ea, eb) = (eval_r(&a, &xi), eval_r(&b, &xi));
        if let Some(h) = gcd1(&ea, &eb) {
            // Each s-coefficient of h is expanded in balanced base xi to recover r.
            let mut g: IntPoly2 = Vec::new();
            for (j, hj) in h.into_iter().enumerate() {
                for (i, d) in digits(hj, &xi).into_iter().enumerate() {
                    if g.len() <= i {
                        g.resize(i + 1, Vec::new());
                    }
                    if g[i].len() <= j {
                        g[i].resize(j + 1, BigInt::zero());
                    }
                    g[i][j] = d;
                }
            }
            trim2(&mut g);
            if !g.is_empty() {
                let k = content2(&g);
                let g = scale(&g, &k);
                if divides2(&g, &a) && divides2(&g, &b) {
                    return Some(g.into_iter().map(|row| row.into_iter().map(|x| x * &c).collect()).collect());
                }
            }
        }
        xi = next_point(&xi);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> IntPoly {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn univariate() {
        // (s - 1)(s + 2) and (s - 1)(s - 3)
        let a = p(&[-2, 1, 1]);
        let b = p(&[3, -4, 1]);
        assert_eq!(gcd1(&a, &b).unwrap(), p(&[-1, 1]));
    }

    #[test]
    fn bivariate() {
        // (r - s)(r + 1) and (r - s)(s + 2)
        let a: IntPoly2 = vec![p(&[0, -1]), p(&[1, -1]), p(&[1])];
        let b: IntPoly2 = vec![p(&[0, -2, -1]), p(&[2, 1])];
        let g = gcd2(&a, &b).unwrap();
        assert!(g == vec![p(&[0, -1]), p(&[1])] || g == vec![p(&[0, 1]), p(&[-1])]);
    }
}
