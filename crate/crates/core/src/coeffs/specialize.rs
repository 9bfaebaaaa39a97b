//! The one-parameter specialization `r -> q, s -> q^-1`.

use std::collections::BTreeMap;
use std::fmt;

use super::laurent::LaurentBi;
use super::poly::UniPoly;
use super::ratfn::RatFn;
use crate::error::Error;
use crate::scalar::Scalar;

/// Laurent polynomial in a single variable `q`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentQ<T> {
    terms: BTreeMap<i32, T>,
}

impl<T: Scalar> LaurentQ<T> {
    pub fn from_terms<I: IntoIterator<Item = (i32, T)>>(it: I) -> Self {
        let mut terms: BTreeMap<i32, T> = BTreeMap::new();
        for (e, c) in it {
            let slot = terms.entry(e).or_insert_with(T::zero);
            *slot = slot.clone() + c;
        }
        terms.retain(|_, c| !c.is_zero());
        LaurentQ { terms }
    }

    pub fn monomial(e: i32) -> Self {
        Self::from_terms([(e, T::one())])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &T)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .flat_map(|(a, x)| o.terms.iter().map(move |(b, y)| (a + b, x.clone() * y.clone()))),
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|(e, c)| (*e, c.clone()))
                .chain(o.terms.iter().map(|(e, c)| (*e, -c.clone()))),
        )
    }

    fn min_exp(&self) -> i32 {
        self.terms.keys().next().copied().unwrap_or(0)
    }

    fn to_poly(&self) -> (i32, UniPoly<T>) {
        let m = self.min_exp();
        let deg = self.terms.keys().last().map(|e| e - m).unwrap_or(0);
        let mut c = vec![T::zero(); deg as usize + 1];
        for (e, x) in &self.terms {
            c[(e - m) as usize] = x.clone();
        }
        (m, UniPoly::new(c))
    }

    fn from_poly(shift: i32, p: &UniPoly<T>) -> Self {
        Self::from_terms(p.c.iter().enumerate().map(|(i, x)| (i as i32 + shift, x.clone())))
    }
}

impl<T: Scalar> fmt::Display for LaurentQ<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let mag = c.abs();
            match (mag.is_one(), *e) {
                (_, 0) => write!(f, "{mag}")?,
                (true, 1) => write!(f, "q")?,
                (true, e) => write!(f, "q^{e}")?,
                (false, 1) => write!(f, "{mag}*q")?,
                (false, e) => write!(f, "{mag}*q^{e}")?,
            }
        }
        Ok(())
    }
}

impl<T: Scalar> fmt::Debug for LaurentQ<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Reduced ratio of univariate Laurent polynomials; the denominator is a
/// monic polynomial with nonzero constant term.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatQ<T> {
    pub num: LaurentQ<T>,
    pub den: LaurentQ<T>,
}

impl<T: Scalar> RatQ<T> {
    pub fn new(num: LaurentQ<T>, den: LaurentQ<T>) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(RatQ { num, den: LaurentQ::monomial(0) });
        }
        let (sn, pn) = num.to_poly();
        let (sd, pd) = den.to_poly();
        let g = pn.gcd(&pd);
        let (pn, pd) = (pn.div_exact(&g), pd.div_exact(&g));
        let lc = pd.lc();
        let inv = T::one() / lc;
        Some(RatQ {
            num: LaurentQ::from_poly(sn - sd, &pn.scale(&inv)),
            den: LaurentQ::from_poly(0, &pd.scale(&inv)),
        })
    }

    pub fn from_laurent(p: LaurentQ<T>) -> Self {
        Self::new(p, LaurentQ::monomial(0)).unwrap()
    }

    /// The numerator when the value is a Laurent polynomial.
    pub fn as_laurent(&self) -> Option<&LaurentQ<T>> {
        (self.den == LaurentQ::monomial(0)).then_some(&self.num)
    }
}

impl<T: Scalar> fmt::Display for RatQ<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_laurent() {
            Some(p) => write!(f, "{p}"),
            None => write!(f, "({})/({})", self.num, self.den),
        }
    }
}

impl<T: Scalar> fmt::Debug for RatQ<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Image of a Laurent polynomial under `r -> q, s -> q^-1`.
pub fn specialize_laurent<T: Scalar>(p: &LaurentBi<T>) -> LaurentQ<T> {
    LaurentQ::from_terms(p.terms().iter().map(|((a, b), c)| (a - b, c.clone())))
}

/// Image of a rational function under `r -> q, s -> q^-1`.
pub fn specialize<T: Scalar>(x: &RatFn<T>) -> Result<RatQ<T>, Error> {
    let den = specialize_laurent(x.den());
    if den.is_zero() {
        return Err(Error::SpecializationPole(x.to_string()));
    }
    Ok(RatQ::new(specialize_laurent(x.num()), den).expect("nonzero denominator"))
}
