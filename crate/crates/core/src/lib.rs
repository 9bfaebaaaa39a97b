pub mod balgebra;
pub mod coeffs;
pub mod double;
pub mod error;
pub mod linalg;
pub mod pairing;
pub mod pbw;
pub mod rootsystem;
pub mod scalar;
pub mod verma;
pub mod words;

pub use error::{Error, Result};

/// Arbitrary-precision rationals, the default scalar field.
pub type Rational = num_rational::Ratio<num_bigint::BigInt>;
/// Laurent polynomials in `r`, `s` over [`Rational`].
pub type Laurent = coeffs::LaurentBi<Rational>;
/// Reduced rational functions in `r`, `s` over [`Rational`].
pub type RatFunc = coeffs::RatFn<Rational>;
