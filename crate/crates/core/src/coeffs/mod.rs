//! Exact coefficient arithmetic: bivariate Laurent polynomials in `r`, `s`
//! and reduced rational functions, with the specialization `r -> q, s -> q^-1`.

mod heugcd;
mod laurent;
mod poly;
mod ratfn;
mod specialize;

use std::fmt::{Debug, Display};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub use laurent::{psi, Exp, LaurentBi};
pub use poly::{poly_div_exact, poly_gcd};
pub use ratfn::RatFn;
pub use specialize::{specialize, specialize_laurent, LaurentQ, RatQ};

use crate::scalar::{parse_scalar, Scalar};

/// Coefficient ring of the algebra layers.
///
/// Implemented by [`LaurentBi`] (enough for everything that never divides)
/// and [`RatFn`] (pairings, Gram solves, normal forms).
pub trait Coefficient: Clone + Debug + Display + PartialEq + Send + Sync + 'static {
    type Field: Scalar;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_int(n: i64) -> Self;
    /// `r^a s^b`
    fn monomial(a: i32, b: i32) -> Self;
    fn add_ref(&self, o: &Self) -> Self;
    fn sub_ref(&self, o: &Self) -> Self;
    fn mul_ref(&self, o: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn mul_monomial(&self, a: i32, b: i32) -> Self;
    fn from_laurent(p: LaurentBi<Self::Field>) -> Self;
    fn to_ratfn(&self) -> RatFn<Self::Field>;
}

impl<T: Scalar> Coefficient for LaurentBi<T> {
    type Field = T;

    fn zero() -> Self {
        LaurentBi::zero()
    }
    fn one() -> Self {
        LaurentBi::one()
    }
    fn is_zero(&self) -> bool {
        LaurentBi::is_zero(self)
    }
    fn from_int(n: i64) -> Self {
        LaurentBi::from_int(n)
    }
    fn monomial(a: i32, b: i32) -> Self {
        LaurentBi::monomial(a, b)
    }
    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn mul_monomial(&self, a: i32, b: i32) -> Self {
        self.shift(a, b)
    }
    fn from_laurent(p: LaurentBi<T>) -> Self {
        p
    }
    fn to_ratfn(&self) -> RatFn<T> {
        RatFn::from_laurent(self.clone())
    }
}

impl<T: Scalar> Coefficient for RatFn<T> {
    type Field = T;

    fn zero() -> Self {
        RatFn::zero()
    }
    fn one() -> Self {
        RatFn::one()
    }
    fn is_zero(&self) -> bool {
        RatFn::is_zero(self)
    }
    fn from_int(n: i64) -> Self {
        RatFn::from_int(n)
    }
    fn monomial(a: i32, b: i32) -> Self {
        RatFn::monomial(a, b)
    }
    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn mul_monomial(&self, a: i32, b: i32) -> Self {
        RatFn::new(self.num().shift(a, b), self.den().clone())
    }
    fn from_laurent(p: LaurentBi<T>) -> Self {
        RatFn::from_laurent(p)
    }
    fn to_ratfn(&self) -> RatFn<T> {
        self.clone()
    }
}

/// `s - r`, the inverse of the generator pairing `<f_i, e_i>`.
pub fn s_minus_r<T: Scalar>() -> LaurentBi<T> {
    &LaurentBi::s() - &LaurentBi::r()
}

impl<T: Scalar> Serialize for LaurentBi<T> {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        let v: Vec<(String, String, i32, i32)> = self
            .terms()
            .iter()
            .map(|((a, b), c)| (c.numer_big().to_string(), c.denom_big().to_string(), *a, *b))
            .collect();
        v.serialize(ser)
    }
}

impl<'de, T: Scalar> Deserialize<'de> for LaurentBi<T> {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let v: Vec<(String, String, i32, i32)> = Vec::deserialize(de)?;
        let mut terms = Vec::with_capacity(v.len());
        for (n, d, a, b) in v {
            let c: T = parse_scalar(&n, &d)
                .ok_or_else(|| D::Error::custom(format!("bad coefficient {n}/{d}")))?;
            terms.push(((a, b), c));
        }
        Ok(LaurentBi::from_terms(terms))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(bound = "")]
struct RatFnJson<T: Scalar> {
    den: LaurentBi<T>,
    num: LaurentBi<T>,
}

impl<T: Scalar> Serialize for RatFn<T> {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        RatFnJson { den: self.den().clone(), num: self.num().clone() }.serialize(ser)
    }
}

impl<'de, T: Scalar> Deserialize<'de> for RatFn<T> {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let j = RatFnJson::<T>::deserialize(de)?;
        RatFn::try_new(j.num, j.den).ok_or_else(|| D::Error::custom("zero denominator"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::Ratio;
    use proptest::prelude::*;

    type Q = Ratio<BigInt>;
    type L = LaurentBi<Q>;
    type R = RatFn<Q>;

    fn q(n: i64) -> Q {
        Q::from_integer(n.into())
    }

    fn lp(terms: &[(i64, i32, i32)]) -> L {
        L::from_terms(terms.iter().map(|&(c, a, b)| ((a, b), q(c))))
    }

    #[test]
    fn ring_identities() {
        let r_minus_s = lp(&[(1, 1, 0), (-1, 0, 1)]);
        let r_plus_s = lp(&[(1, 1, 0), (1, 0, 1)]);
        assert_eq!(&r_minus_s * &r_plus_s, lp(&[(1, 2, 0), (-1, 0, 2)]));
        assert_eq!(&r_minus_s + &L::zero(), r_minus_s);
        let rs = L::monomial(1, -1);
        assert_eq!(&rs * &rs, L::monomial(2, -2));
    }

    #[test]
    fn psi_values() {
        assert_eq!(psi::<Q>(0), L::one());
        assert_eq!(psi::<Q>(1), lp(&[(1, 0, 0), (-1, 1, -1)]));
        assert_eq!(psi::<Q>(2), lp(&[(1, 0, 0), (-1, 1, -1), (-1, 2, -2), (1, 3, -3)]));
    }

    #[test]
    fn specialization_examples() {
        let rs = R::monomial(1, -1);
        assert_eq!(specialize(&rs).unwrap().as_laurent().unwrap(), &LaurentQ::monomial(2));
        let rms: R = lp(&[(1, 1, 0), (-1, 0, 1)]).into();
        let expect = LaurentQ::from_terms([(1, q(1)), (-1, q(-1))]);
        assert_eq!(specialize(&rms).unwrap().as_laurent().unwrap(), &expect);
        let inv = R::one() / R::from(s_minus_r::<Q>());
        let sp = specialize(&inv).unwrap();
        let expect = RatQ::new(LaurentQ::monomial(0), LaurentQ::from_terms([(-1, q(1)), (1, q(-1))]));
        assert_eq!(Some(sp), expect);
    }

    #[test]
    fn specialization_pole() {
        // r s - 1 vanishes identically at r = q, s = q^-1
        let d = lp(&[(1, 1, 1), (-1, 0, 0)]);
        let x = R::new(L::one(), d);
        assert!(matches!(specialize(&x), Err(crate::Error::SpecializationPole(_))));
    }

    #[test]
    fn psi_specializes_to_q_product() {
        for n in 0..5u32 {
            let mut expect = LaurentQ::monomial(0);
            for k in 1..=n as i32 {
                let f = LaurentQ::from_terms([(0, q(1)), (2 * k, q(-1))]);
                expect = expect.mul(&f);
            }
            assert_eq!(specialize_laurent(&psi::<Q>(n)), expect);
        }
    }

    #[test]
    fn canonical_form_examples() {
        // (2r - 2s) / (4 s^2 r - 4 r^2 s) = -1/(2 r s)
        let x = R::new(lp(&[(2, 1, 0), (-2, 0, 1)]), lp(&[(4, 1, 2), (-4, 2, 1)]));
        assert_eq!(x.num(), &lp(&[(-1, -1, -1)]));
        assert_eq!(x.den(), &lp(&[(2, 0, 0)]));
        let y = R::new(lp(&[(-3, 0, 0)]), lp(&[(-6, 1, 0), (3, 0, 0)]));
        assert_eq!(y.den().leading().unwrap().1, &q(2));
    }

    #[test]
    fn json_roundtrip() {
        let x = R::new(lp(&[(3, 1, -2), (1, 0, 0)]), lp(&[(1, 0, 1), (-1, 1, 0)]));
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"den":[["-1","1",0,1],["1","1",1,0]],"num":[["-1","1",0,0],["-3","1",1,-2]]}"#);
        let back: R = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn machine_scalar_agrees() {
        type L64 = LaurentBi<Ratio<i64>>;
        let a = L64::from_terms([((1, 0), Ratio::new(1, 2)), ((0, 1), Ratio::from_integer(-3))]);
        let b = L64::from_terms([((2, -1), Ratio::from_integer(5))]);
        let big: L = (&a * &b).convert().unwrap();
        assert_eq!(big, &a.convert::<Q>().unwrap() * &b.convert::<Q>().unwrap());
    }

    fn arb_laurent() -> impl Strategy<Value = L> {
        prop::collection::vec((-3i64..=3, -2i32..=2, -2i32..=2), 0..4).prop_map(|v| lp(&v))
    }

    fn arb_ratfn() -> impl Strategy<Value = R> {
        (arb_laurent(), arb_laurent())
            .prop_filter("nonzero den", |(_, d)| !d.is_zero())
            .prop_map(|(n, d)| R::new(n, d))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn laurent_ring_axioms(a in arb_laurent(), b in arb_laurent(), c in arb_laurent()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn field_axioms(x in arb_ratfn(), y in arb_ratfn(), z in arb_ratfn()) {
            prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            if !x.is_zero() {
                prop_assert!((&x * &x.inv().unwrap()).is_one());
            }
        }

        #[test]
        fn canonical_under_common_factor(a in arb_laurent(), b in arb_laurent(), c in arb_laurent()) {
            prop_assume!(!b.is_zero() && !c.is_zero());
            let lhs = R::new(&a * &c, &b * &c);
            let rhs = R::new(a, b);
            prop_assert_eq!(lhs.num(), rhs.num());
            prop_assert_eq!(lhs.den(), rhs.den());
        }
    }
}
