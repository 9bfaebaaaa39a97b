//! Exact scalar fields the coefficient layer is generic over.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{Num, Signed, ToPrimitive};

/// An exact field of characteristic zero with a lossless route through
/// arbitrary-precision integers.
///
/// The polynomial gcd and the canonical normalization of rational
/// functions need field division plus access to numerators and
/// denominators; everything else only uses the `Num` operations.
pub trait Scalar:
    Clone + Debug + Display + Eq + Ord + Hash + Num + Signed + Send + Sync + 'static
{
    fn from_i64(n: i64) -> Self;

    fn numer_big(&self) -> BigInt;

    fn denom_big(&self) -> BigInt;

    /// Builds `num/den`; `None` when the value does not fit the backing integer type.
    fn from_big(num: BigInt, den: BigInt) -> Option<Self>;

    fn is_integer(&self) -> bool {
        self.denom_big() == BigInt::from(1)
    }
}

impl Scalar for Ratio<BigInt> {
    fn from_i64(n: i64) -> Self {
        Ratio::from_integer(BigInt::from(n))
    }

    fn numer_big(&self) -> BigInt {
        self.numer().clone()
    }

    fn denom_big(&self) -> BigInt {
        self.denom().clone()
    }

    fn from_big(num: BigInt, den: BigInt) -> Option<Self> {
        Some(Ratio::new(num, den))
    }

    fn is_integer(&self) -> bool {
        Ratio::is_integer(self)
    }
}

macro_rules! machine_ratio {
    ($($t:ty),*) => {$(
        impl Scalar for Ratio<$t> {
            fn from_i64(n: i64) -> Self {
                Ratio::from_integer(<$t>::try_from(n).expect("integer out of range"))
            }

            fn numer_big(&self) -> BigInt {
                BigInt::from(*self.numer())
            }

            fn denom_big(&self) -> BigInt {
                BigInt::from(*self.denom())
            }

            fn from_big(num: BigInt, den: BigInt) -> Option<Self> {
                let n = <$t>::try_from(num).ok()?;
                let d = <$t>::try_from(den).ok()?;
                Some(Ratio::new(n, d))
            }

            fn is_integer(&self) -> bool {
                Ratio::is_integer(self)
            }
        }
    )*};
}

machine_ratio!(i64, i128);

/// Parses `"n"` or `"n/d"` decimal strings.
pub fn parse_scalar<T: Scalar>(num: &str, den: &str) -> Option<T> {
    let n: BigInt = num.trim().parse().ok()?;
    let d: BigInt = den.trim().parse().ok()?;
    if d == BigInt::from(0) {
        return None;
    }
    T::from_big(n, d)
}

/// Small helper for exponent arithmetic on scalars that are known to be integers.
pub fn to_i64<T: Scalar>(x: &T) -> Option<i64> {
    if !x.is_integer() {
        return None;
    }
    x.numer_big().to_i64()
}
