//! The Borel halves as free algebras of torus-decorated words, with their
//! Hopf structure. Serre relations are not imposed here; the quotient is
//! detected through the pairing.

mod element;
mod hopf;
mod tensor;

pub use element::{BElement, Side, Term};
pub use hopf::{
    ad_left, adjoint_serre, antipode, antipode_term, bracket, coproduct, coproduct_at, coproduct_n, coproduct_term,
    counit, counit_at,
};
pub use tensor::TensorElement;

#[cfg(test)]
mod tests;
