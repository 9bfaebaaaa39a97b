use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use crate::scalar::Scalar;

/// Exponent pair `(a, b)` of the monomial `r^a s^b`.
pub type Exp = (i32, i32);

/// Sparse Laurent polynomial in `r` and `s`.
///
/// Terms are kept sorted by exponent pair (lexicographically) with no zero
/// coefficients, so structural equality is value equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentBi<T> {
    terms: Vec<(Exp, T)>,
}

impl<T: Scalar> LaurentBi<T> {
    pub fn zero() -> Self {
        LaurentBi { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::term(c, 0, 0)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(T::from_i64(n))
    }

    pub fn monomial(a: i32, b: i32) -> Self {
        Self::term(T::one(), a, b)
    }

    pub fn term(c: T, a: i32, b: i32) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentBi { terms: vec![((a, b), c)] }
        }
    }

    pub fn r() -> Self {
        Self::monomial(1, 0)
    }

    pub fn s() -> Self {
        Self::monomial(0, 1)
    }

    /// Collects arbitrary (possibly repeated, possibly zero) terms.
    pub fn from_terms<I: IntoIterator<Item = (Exp, T)>>(it: I) -> Self {
        let mut v: Vec<(Exp, T)> = it.into_iter().collect();
        v.sort_by_key(|x| x.0);
        Self::merge_sorted(v)
    }

    fn merge_sorted(v: Vec<(Exp, T)>) -> Self {
        let mut out: Vec<(Exp, T)> = Vec::with_capacity(v.len());
        for (e, c) in v {
            match out.last_mut() {
                Some((le, lc)) if *le == e => {
                    *lc = lc.clone() + c;
                }
                _ => {
                    if let Some((_, lc)) = out.last() {
                        if lc.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((e, c));
                }
            }
        }
        if let Some((_, lc)) = out.last() {
            if lc.is_zero() {
                out.pop();
            }
        }
        LaurentBi { terms: out }
    }

    pub fn terms(&self) -> &[(Exp, T)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Exp, T)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == (0, 0) && self.terms[0].1.is_one()
    }

    /// Single term `c r^a s^b`, if that is what this is.
    pub fn as_monomial(&self) -> Option<(&T, Exp)> {
        match self.terms.as_slice() {
            [(e, c)] => Some((c, *e)),
            _ => None,
        }
    }

    pub fn as_constant(&self) -> Option<T> {
        match self.terms.as_slice() {
            [] => Some(T::zero()),
            [((0, 0), c)] => Some(c.clone()),
            _ => None,
        }
    }

    pub fn coeff(&self, e: Exp) -> T {
        match self.terms.binary_search_by(|t| t.0.cmp(&e)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => T::zero(),
        }
    }

    /// Componentwise minimum of exponents; `None` for zero.
    pub fn min_exps(&self) -> Option<Exp> {
        let mut it = self.terms.iter();
        let first = it.next()?.0;
        Some(it.fold(first, |(a, b), t| (a.min(t.0 .0), b.min(t.0 .1))))
    }

    pub fn max_exps(&self) -> Option<Exp> {
        let mut it = self.terms.iter();
        let first = it.next()?.0;
        Some(it.fold(first, |(a, b), t| (a.max(t.0 .0), b.max(t.0 .1))))
    }

    /// Coefficient of the lexicographically greatest exponent pair.
    pub fn leading(&self) -> Option<(&Exp, &T)> {
        self.terms.last().map(|(e, c)| (e, c))
    }

    /// Multiplies by `r^a s^b`.
    pub fn shift(&self, a: i32, b: i32) -> Self {
        if a == 0 && b == 0 {
            return self.clone();
        }
        LaurentBi {
            terms: self.terms.iter().map(|((x, y), c)| ((x + a, y + b), c.clone())).collect(),
        }
    }

    pub fn scale(&self, k: &T) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        LaurentBi {
            terms: self.terms.iter().map(|(e, c)| (*e, c.clone() * k.clone())).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Substitutes `r -> r^k, s -> s^k`.
    pub fn inflate(&self, k: i32) -> Self {
        if k == 1 {
            return self.clone();
        }
        Self::from_terms(self.terms.iter().map(|((a, b), c)| ((a * k, b * k), c.clone())))
    }

    /// Substitutes `r -> r^-1, s -> s^-1`.
    pub fn invert_vars(&self) -> Self {
        self.inflate(-1)
    }

    /// Applies an arbitrary exponent map (must be injective on the support to be meaningful).
    pub fn map_exps(&self, f: impl Fn(Exp) -> Exp) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| (f(*e), c.clone())))
    }

    /// Converts between scalar types through big integers.
    pub fn convert<U: Scalar>(&self) -> Option<LaurentBi<U>> {
        let mut v = Vec::with_capacity(self.terms.len());
        for (e, c) in &self.terms {
            v.push((*e, U::from_big(c.numer_big(), c.denom_big())?));
        }
        Some(LaurentBi { terms: v })
    }
}

impl<T: Scalar> Zero for LaurentBi<T> {
    fn zero() -> Self {
        LaurentBi::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<T: Scalar> One for LaurentBi<T> {
    fn one() -> Self {
        LaurentBi::one()
    }
}

impl<T: Scalar> Default for LaurentBi<T> {
    fn default() -> Self {
        Self::zero()
    }
}

fn add_terms<T: Scalar>(x: &[(Exp, T)], y: &[(Exp, T)], negate_y: bool) -> Vec<(Exp, T)> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j >= y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i >= x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push(x[i].clone());
            i += 1;
        } else if take_y {
            let c = if negate_y { -y[j].1.clone() } else { y[j].1.clone() };
            out.push((y[j].0, c));
            j += 1;
        } else {
            let c = if negate_y {
                x[i].1.clone() - y[j].1.clone()
            } else {
                x[i].1.clone() + y[j].1.clone()
            };
            if !c.is_zero() {
                out.push((x[i].0, c));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

impl<'a, T: Scalar> Add<&'a LaurentBi<T>> for &'a LaurentBi<T> {
    type Output = LaurentBi<T>;
    fn add(self, rhs: &LaurentBi<T>) -> LaurentBi<T> {
        LaurentBi { terms: add_terms(&self.terms, &rhs.terms, false) }
    }
}

impl<'a, T: Scalar> Sub<&'a LaurentBi<T>> for &'a LaurentBi<T> {
    type Output = LaurentBi<T>;
    fn sub(self, rhs: &LaurentBi<T>) -> LaurentBi<T> {
        LaurentBi { terms: add_terms(&self.terms, &rhs.terms, true) }
    }
}

impl<'a, T: Scalar> Mul<&'a LaurentBi<T>> for &'a LaurentBi<T> {
    type Output = LaurentBi<T>;
    fn mul(self, rhs: &LaurentBi<T>) -> LaurentBi<T> {
        if self.is_zero() || rhs.is_zero() {
            return LaurentBi::zero();
        }
        if let Some((c, (a, b))) = rhs.as_monomial() {
            return self.shift(a, b).scale(c);
        }
        if let Some((c, (a, b))) = self.as_monomial() {
            return rhs.shift(a, b).scale(c);
        }
        let mut v = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for ((a, b), c) in &self.terms {
            for ((x, y), d) in &rhs.terms {
                v.push(((a + x, b + y), c.clone() * d.clone()));
            }
        }
        LaurentBi::from_terms(v)
    }
}

impl<T: Scalar> Neg for &LaurentBi<T> {
    type Output = LaurentBi<T>;
    fn neg(self) -> LaurentBi<T> {
        LaurentBi { terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect() }
    }
}

macro_rules! owned_ops {
    ($ty:ident) => {
        impl<T: Scalar> Add for $ty<T> {
            type Output = $ty<T>;
            fn add(self, rhs: $ty<T>) -> $ty<T> {
                &self + &rhs
            }
        }
        impl<'a, T: Scalar> Add<&'a $ty<T>> for $ty<T> {
            type Output = $ty<T>;
            fn add(self, rhs: &$ty<T>) -> $ty<T> {
                &self + rhs
            }
        }
        impl<T: Scalar> Sub for $ty<T> {
            type Output = $ty<T>;
            fn sub(self, rhs: $ty<T>) -> $ty<T> {
                &self - &rhs
            }
        }
        impl<'a, T: Scalar> Sub<&'a $ty<T>> for $ty<T> {
            type Output = $ty<T>;
            fn sub(self, rhs: &$ty<T>) -> $ty<T> {
                &self - rhs
            }
        }
        impl<T: Scalar> Mul for $ty<T> {
            type Output = $ty<T>;
            fn mul(self, rhs: $ty<T>) -> $ty<T> {
                &self * &rhs
            }
        }
        impl<'a, T: Scalar> Mul<&'a $ty<T>> for $ty<T> {
            type Output = $ty<T>;
            fn mul(self, rhs: &$ty<T>) -> $ty<T> {
                &self * rhs
            }
        }
        impl<T: Scalar> Neg for $ty<T> {
            type Output = $ty<T>;
            fn neg(self) -> $ty<T> {
                -&self
            }
        }
        impl<'a, T: Scalar> AddAssign<&'a $ty<T>> for $ty<T> {
            fn add_assign(&mut self, rhs: &$ty<T>) {
                *self = &*self + rhs;
            }
        }
        impl<'a, T: Scalar> SubAssign<&'a $ty<T>> for $ty<T> {
            fn sub_assign(&mut self, rhs: &$ty<T>) {
                *self = &*self - rhs;
            }
        }
        impl<T: Scalar> AddAssign for $ty<T> {
            fn add_assign(&mut self, rhs: $ty<T>) {
                *self = &*self + &rhs;
            }
        }
    };
}

pub(crate) use owned_ops;

owned_ops!(LaurentBi);

fn write_var(f: &mut fmt::Formatter<'_>, name: &str, e: i32, first: &mut bool) -> fmt::Result {
    if e == 0 {
        return Ok(());
    }
    if !*first {
        write!(f, "*")?;
    }
    *first = false;
    if e == 1 {
        write!(f, "{name}")
    } else {
        write!(f, "{name}^{e}")
    }
}

impl<T: Scalar> fmt::Display for LaurentBi<T> {
    /// Highest exponent first, e.g. `r^2*s^-1 - 2*r + 1/3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, ((a, b), c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let unit = mag.is_one();
            let mut first = true;
            if !unit || (*a == 0 && *b == 0) {
                write!(f, "{mag}")?;
                first = false;
            }
            write_var(f, "r", *a, &mut first)?;
            write_var(f, "s", *b, &mut first)?;
        }
        Ok(())
    }
}

impl<T: Scalar> fmt::Debug for LaurentBi<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentBi({self})")
    }
}

/// `Ψ_n(rs⁻¹) = Π_{k=1..n} (1 − (rs⁻¹)^k)`.
pub fn psi<T: Scalar>(n: u32) -> LaurentBi<T> {
    let mut acc = LaurentBi::one();
    for k in 1..=n as i32 {
        let factor = &LaurentBi::one() - &LaurentBi::monomial(k, -k);
        acc = &acc * &factor;
    }
    acc
}
