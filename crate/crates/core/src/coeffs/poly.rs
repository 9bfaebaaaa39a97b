//! Dense polynomial helpers for gcd computations: univariate polynomials
//! over the scalar field and bivariate ones viewed as `Q[s][r]`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::heugcd::{self, IntPoly2};
use super::laurent::LaurentBi;
use crate::scalar::Scalar;

/// Dense univariate polynomial, index = degree, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly<T> {
    pub(crate) c: Vec<T>,
}

impl<T: Scalar> UniPoly<T> {
    pub fn new(mut c: Vec<T>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        UniPoly { c }
    }

    pub fn zero() -> Self {
        UniPoly { c: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lc(&self) -> T {
        self.c.last().cloned().unwrap_or_else(T::zero)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let v = (0..n)
            .map(|i| {
                let a = self.c.get(i).cloned().unwrap_or_else(T::zero);
                let b = o.c.get(i).cloned().unwrap_or_else(T::zero);
                a + b
            })
            .collect();
        Self::new(v)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        UniPoly { c: self.c.iter().map(|x| -x.clone()).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut v = vec![T::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                v[i + j] = v[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(v)
    }

    pub fn scale(&self, k: &T) -> Self {
        Self::new(self.c.iter().map(|x| x.clone() * k.clone()).collect())
    }

    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let lc = d.lc();
        let mut rem = self.c.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![T::zero(); rem.len() - dd];
        for k in (0..q.len()).rev() {
            let t = rem[k + dd].clone() / lc.clone();
            if t.is_zero() {
                continue;
            }
            for (j, dj) in d.c.iter().enumerate() {
                rem[k + j] = rem[k + j].clone() - t.clone() * dj.clone();
            }
            q[k] = t;
        }
        rem.truncate(dd);
        (Self::new(q), Self::new(rem))
    }

    /// Exact quotient; panics if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Self {
        let (q, r) = self.divrem(d);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let lc = self.lc();
        Self::new(self.c.iter().map(|x| x.clone() / lc.clone()).collect())
    }

    /// Monic gcd (zero if both are zero).
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }
}

/// Bivariate polynomial as a polynomial in `r` with coefficients in `Q[s]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiPoly<T> {
    c: Vec<UniPoly<T>>,
}

impl<T: Scalar> BiPoly<T> {
    fn new(mut c: Vec<UniPoly<T>>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        BiPoly { c }
    }

    /// From a Laurent polynomial whose exponents are all nonnegative.
    pub fn from_laurent(p: &LaurentBi<T>) -> Self {
        let Some((ma, mb)) = p.max_exps() else {
            return BiPoly { c: Vec::new() };
        };
        let mut rows: Vec<Vec<T>> = vec![vec![T::zero(); mb as usize + 1]; ma as usize + 1];
        for ((a, b), c) in p.terms() {
            assert!(*a >= 0 && *b >= 0, "negative exponent in polynomial conversion");
            rows[*a as usize][*b as usize] = c.clone();
        }
        Self::new(rows.into_iter().map(UniPoly::new).collect())
    }

    pub fn to_laurent(&self) -> LaurentBi<T> {
        let mut v = Vec::new();
        for (a, row) in self.c.iter().enumerate() {
            for (b, x) in row.c.iter().enumerate() {
                if !x.is_zero() {
                    v.push(((a as i32, b as i32), x.clone()));
                }
            }
        }
        LaurentBi::from_terms(v)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    fn degree(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    fn lc(&self) -> &UniPoly<T> {
        self.c.last().expect("leading coefficient of zero")
    }

    fn content(&self) -> UniPoly<T> {
        let mut g = UniPoly::zero();
        for x in &self.c {
            g = g.gcd(x);
            if g.is_constant() && !g.is_zero() {
                break;
            }
        }
        g
    }

    fn div_uni(&self, d: &UniPoly<T>) -> Self {
        Self::new(self.c.iter().map(|x| x.div_exact(d)).collect())
    }

    fn mul_uni(&self, d: &UniPoly<T>) -> Self {
        Self::new(self.c.iter().map(|x| x.mul(d)).collect())
    }

    /// Removes the `Q[s]` content and scales to coprime integer coefficients.
    fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let g = self.content();
        let p = if g.is_constant() { self.clone() } else { self.div_uni(&g) };
        p.integer_normalized()
    }

    fn integer_normalized(&self) -> Self {
        let mut lcm = BigInt::one();
        for x in self.c.iter().flat_map(|u| u.c.iter()) {
            lcm = lcm.lcm(&x.denom_big());
        }
        let mut g = BigInt::zero();
        for x in self.c.iter().flat_map(|u| u.c.iter()) {
            g = g.gcd(&(x.numer_big() * (&lcm / x.denom_big())));
        }
        if lcm.is_one() && g.is_one() {
            return self.clone();
        }
        let k = T::from_big(lcm, g).expect("coefficient overflow");
        Self::new(self.c.iter().map(|u| u.scale(&k)).collect())
    }

    /// Pseudo-remainder of `self` by `d` in `Q[s][r]`.
    fn prem(&self, d: &Self) -> Self {
        let dd = d.degree();
        let lcd = d.lc().clone();
        let mut r = self.clone();
        while !r.is_zero() && r.degree() >= dd {
            let shift = r.degree() - dd;
            let lr = r.lc().clone();
            let mut v: Vec<UniPoly<T>> = r.c.iter().map(|x| x.mul(&lcd)).collect();
            for (j, dj) in d.c.iter().enumerate() {
                v[j + shift] = v[j + shift].sub(&dj.mul(&lr));
            }
            r = Self::new(v);
        }
        r
    }

    /// Gcd up to a nonzero constant factor.
    pub fn gcd(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let cont = self.content().gcd(&o.content());
        let (mut a, mut b) = (self.primitive(), o.primitive());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let rem = a.prem(&b);
            a = b;
            b = rem.primitive();
        }
        a.primitive().mul_uni(&cont)
    }

    /// Exact quotient; panics if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Self {
        let dd = d.degree();
        let lcd = d.lc();
        let mut rem = self.clone();
        let mut q: Vec<UniPoly<T>> = vec![UniPoly::zero(); self.c.len().saturating_sub(dd).max(1)];
        while !rem.is_zero() {
            assert!(rem.degree() >= dd, "inexact bivariate division");
            let shift = rem.degree() - dd;
            let t = rem.lc().div_exact(lcd);
            let mut v = rem.c.clone();
            for (j, dj) in d.c.iter().enumerate() {
                v[j + shift] = v[j + shift].sub(&dj.mul(&t));
            }
            q[shift] = q[shift].add(&t);
            rem = Self::new(v);
        }
        Self::new(q)
    }
}

/// Gcd of two Laurent polynomials with nonnegative exponents.
pub fn poly_gcd<T: Scalar>(a: &LaurentBi<T>, b: &LaurentBi<T>) -> LaurentBi<T> {
    if let Some(g) = heugcd::gcd2(&to_int_rows(a), &to_int_rows(b)) {
        if let Some(g) = from_int_rows::<T>(&g) {
            return g;
        }
    }
    BiPoly::from_laurent(a).gcd(&BiPoly::from_laurent(b)).to_laurent()
}

/// Integer multiple of `p` as dense rows indexed by the `r` exponent.
fn to_int_rows<T: Scalar>(p: &LaurentBi<T>) -> IntPoly2 {
    let Some((ma, mb)) = p.max_exps() else {
        return Vec::new();
    };
    let mut lcm = BigInt::one();
    for (_, c) in p.terms() {
        lcm = lcm.lcm(&c.denom_big());
    }
    let mut rows = vec![vec![BigInt::zero(); mb as usize + 1]; ma as usize + 1];
    for ((a, b), c) in p.terms() {
        assert!(*a >= 0 && *b >= 0, "negative exponent in polynomial conversion");
        rows[*a as usize][*b as usize] = c.numer_big() * (&lcm / c.denom_big());
    }
    rows
}

/// `None` if a coefficient does not fit the scalar type.
fn from_int_rows<T: Scalar>(rows: &IntPoly2) -> Option<LaurentBi<T>> {
    let mut v = Vec::new();
    for (a, row) in rows.iter().enumerate() {
        for (b, x) in row.iter().enumerate() {
            if !x.is_zero() {
                v.push(((a as i32, b as i32), T::from_big(x.clone(), BigInt::one())?));
            }
        }
    }
    Some(LaurentBi::from_terms(v))
}

pub fn poly_div_exact<T: Scalar>(a: &LaurentBi<T>, d: &LaurentBi<T>) -> LaurentBi<T> {
    if a.is_zero() {
        return LaurentBi::zero();
    }
    BiPoly::from_laurent(a).div_exact(&BiPoly::from_laurent(d)).to_laurent()
}
