use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::laurent::{owned_ops, LaurentBi};
use super::poly::{poly_div_exact, poly_gcd};
use crate::scalar::Scalar;

/// Reduced quotient of two Laurent polynomials in canonical form.
///
/// Canonical form: `den` has no monomial factor and nonnegative exponents
/// with minimum zero in each variable, `num/den` is reduced, all
/// coefficients are integers with overall gcd one, and the coefficient of
/// the lexicographically greatest exponent pair of `den` is positive.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFn<T> {
    num: LaurentBi<T>,
    den: LaurentBi<T>,
}

impl<T: Scalar> RatFn<T> {
    /// Builds and canonicalizes `num/den`. Panics if `den` is zero.
    pub fn new(num: LaurentBi<T>, den: LaurentBi<T>) -> Self {
        Self::try_new(num, den).expect("rational function with zero denominator")
    }

    pub fn try_new(num: LaurentBi<T>, den: LaurentBi<T>) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        Some(canonicalize(num, den))
    }

    pub fn from_laurent(p: LaurentBi<T>) -> Self {
        canonicalize(p, LaurentBi::one())
    }

    pub fn zero() -> Self {
        RatFn { num: LaurentBi::zero(), den: LaurentBi::one() }
    }

    pub fn one() -> Self {
        RatFn { num: LaurentBi::one(), den: LaurentBi::one() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_laurent(LaurentBi::from_int(n))
    }

    pub fn monomial(a: i32, b: i32) -> Self {
        RatFn { num: LaurentBi::monomial(a, b), den: LaurentBi::one() }
    }

    pub fn num(&self) -> &LaurentBi<T> {
        &self.num
    }

    pub fn den(&self) -> &LaurentBi<T> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The value as a Laurent polynomial when the denominator is a constant.
    pub fn as_laurent(&self) -> Option<LaurentBi<T>> {
        let d = self.den.as_constant()?;
        Some(self.num.scale(&(T::one() / d)))
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(canonicalize(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, o: &Self) -> Option<Self> {
        Some(self * &o.inv()?)
    }

    pub fn pow(&self, n: i32) -> Self {
        if n < 0 {
            return self.inv().expect("negative power of zero").pow(-n);
        }
        RatFn::new(self.num.pow(n as u32), self.den.pow(n as u32))
    }

    pub fn inflate(&self, k: i32) -> Self {
        RatFn::new(self.num.inflate(k), self.den.inflate(k))
    }

    pub fn convert<U: Scalar>(&self) -> Option<RatFn<U>> {
        Some(RatFn::new(self.num.convert()?, self.den.convert()?))
    }
}

fn canonicalize<T: Scalar>(num: LaurentBi<T>, den: LaurentBi<T>) -> RatFn<T> {
    if num.is_zero() {
        return RatFn::zero();
    }
    let (na, nb) = num.min_exps().unwrap();
    let (da, db) = den.min_exps().unwrap();
    let mut p = num.shift(-na, -nb);
    let mut q = den.shift(-da, -db);
    let (ma, mb) = (na - da, nb - db);

    if q.len() > 1 && p.len() > 1 {
        let g = poly_gcd(&p, &q);
        if g.as_constant().is_none() {
            p = poly_div_exact(&p, &g);
            q = poly_div_exact(&q, &g);
        }
    }

    // Integer content normalization over both parts together.
    let mut lcm = BigInt::one();
    for (_, c) in p.terms().iter().chain(q.terms()) {
        lcm = lcm.lcm(&c.denom_big());
    }
    let mut g = BigInt::zero();
    for (_, c) in p.terms().iter().chain(q.terms()) {
        let n = c.numer_big() * (&lcm / c.denom_big());
        g = g.gcd(&n);
    }
    let negate = q.leading().map(|(_, c)| c.is_negative()).unwrap_or(false);
    let fix = |x: &LaurentBi<T>| {
        LaurentBi::from_terms(x.terms().iter().map(|(e, c)| {
            let mut n = c.numer_big() * (&lcm / c.denom_big()) / &g;
            if negate {
                n = -n;
            }
            (*e, T::from_big(n, BigInt::one()).expect("coefficient overflow"))
        }))
    };
    let need_fix = lcm != BigInt::one() || g != BigInt::one() || negate;
    if need_fix {
        p = fix(&p);
        q = fix(&q);
    }
    RatFn { num: p.shift(ma, mb), den: q }
}

impl<T: Scalar> From<LaurentBi<T>> for RatFn<T> {
    fn from(p: LaurentBi<T>) -> Self {
        RatFn::from_laurent(p)
    }
}

impl<T: Scalar> Zero for RatFn<T> {
    fn zero() -> Self {
        RatFn::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl<T: Scalar> One for RatFn<T> {
    fn one() -> Self {
        RatFn::one()
    }
}

impl<T: Scalar> Default for RatFn<T> {
    fn default() -> Self {
        RatFn::zero()
    }
}

impl<'a, T: Scalar> Add<&'a RatFn<T>> for &'a RatFn<T> {
    type Output = RatFn<T>;
    fn add(self, o: &RatFn<T>) -> RatFn<T> {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return canonicalize(&self.num + &o.num, self.den.clone());
        }
        canonicalize(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den)
    }
}

impl<'a, T: Scalar> Sub<&'a RatFn<T>> for &'a RatFn<T> {
    type Output = RatFn<T>;
    fn sub(self, o: &RatFn<T>) -> RatFn<T> {
        self + &(-o)
    }
}

impl<'a, T: Scalar> Mul<&'a RatFn<T>> for &'a RatFn<T> {
    type Output = RatFn<T>;
    fn mul(self, o: &RatFn<T>) -> RatFn<T> {
        if self.is_zero() || o.is_zero() {
            return RatFn::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            // Product of integer Laurent polynomials is already canonical.
            return RatFn { num: &self.num * &o.num, den: LaurentBi::one() };
        }
        canonicalize(&self.num * &o.num, &self.den * &o.den)
    }
}

impl<'a, T: Scalar> Div<&'a RatFn<T>> for &'a RatFn<T> {
    type Output = RatFn<T>;
    fn div(self, o: &RatFn<T>) -> RatFn<T> {
        self.checked_div(o).expect("division by zero rational function")
    }
}

impl<T: Scalar> Neg for &RatFn<T> {
    type Output = RatFn<T>;
    fn neg(self) -> RatFn<T> {
        RatFn { num: -&self.num, den: self.den.clone() }
    }
}

impl<T: Scalar> Div for RatFn<T> {
    type Output = RatFn<T>;
    fn div(self, o: RatFn<T>) -> RatFn<T> {
        &self / &o
    }
}

owned_ops!(RatFn);

impl<T: Scalar> fmt::Display for RatFn<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl<T: Scalar> fmt::Debug for RatFn<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFn({self})")
    }
}
