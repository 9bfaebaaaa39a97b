//! The multiplication rule of the double on `B ⊗ B'`:
//! `(a⊗f)(a'⊗f') = Σ <S(f_(1)), a'_(1)> <f_(3), a'_(3)> a a'_(2) ⊗ f_(2) f'`.

use serde::Serialize;

use crate::balgebra::{antipode_term, coproduct_n, BElement, Side, TensorElement};
use crate::coeffs::{s_minus_r, RatFn};
use crate::error::Result;
use crate::pairing::Pairing;
use crate::rootsystem::LatticeVec;
use crate::scalar::Scalar;

/// Product of two elements of the double, each a sum of `a ⊗ f` with `a` on
/// the E side and `f` on the F side.
pub fn double_product<T: Scalar>(
    pairing: &Pairing<T>,
    x: &TensorElement<RatFn<T>>,
    y: &TensorElement<RatFn<T>>,
) -> Result<TensorElement<RatFn<T>>> {
    let rd = pairing.root_datum();
    let n = rd.rank();
    let mut out = TensorElement::zero(vec![Side::E, Side::F], n);
    for (kx, cx) in x.terms() {
        let a = BElement::from_term(Side::E, n, kx[0].clone(), RatFn::one());
        let f = BElement::from_term(Side::F, n, kx[1].clone(), RatFn::one());
        let df = coproduct_n(rd, &f, 3);
        for (ky, cy) in y.terms() {
            let a2 = BElement::from_term(Side::E, n, ky[0].clone(), RatFn::one());
            let f2 = BElement::from_term(Side::F, n, ky[1].clone(), RatFn::one());
            let da = coproduct_n(rd, &a2, 3);
            let c = cx * cy;
            for (fk, fc) in df.terms() {
                let s1 = antipode_term::<RatFn<T>>(rd, Side::F, &fk[0]);
                let f3 = BElement::from_term(Side::F, n, fk[2].clone(), RatFn::one());
                let mid_f = BElement::from_term(Side::F, n, fk[1].clone(), fc.clone()).mul(rd, &f2)?;
                for (ak, ac) in da.terms() {
                    let a1 = BElement::from_term(Side::E, n, ak[0].clone(), RatFn::one());
                    let left = pairing.pair(&s1, &a1)?;
                    if left.is_zero() {
                        continue;
                    }
                    let a3 = BElement::from_term(Side::E, n, ak[2].clone(), RatFn::one());
                    let right = pairing.pair(&f3, &a3)?;
                    if right.is_zero() {
                        continue;
                    }
                    let mid_a = a.mul(rd, &BElement::from_term(Side::E, n, ak[1].clone(), ac.clone()))?;
                    let k = &(&c * &left) * &right;
                    out.add_scaled(&TensorElement::pure(&[&mid_a, &mid_f]), &k);
                }
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct MixedCheck {
    pub i: usize,
    pub j: usize,
    pub pass: bool,
    pub witness: Option<String>,
}

/// `η̌_j ě_i = δ_ij (ω̌_i - γ̌_i) + ě_i η̌_j` with `η_j = (s-r) f_j`, for all pairs.
pub fn double_mixed_check<T: Scalar>(pairing: &Pairing<T>) -> Result<Vec<MixedCheck>> {
    let rd = pairing.root_datum();
    let n = rd.rank();
    let one_e = BElement::<RatFn<T>>::one(Side::E, n);
    let one_f = BElement::<RatFn<T>>::one(Side::F, n);
    let smr = RatFn::from_laurent(s_minus_r::<T>());
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            let ei = BElement::generator(Side::E, n, i);
            let eta = BElement::generator(Side::F, n, j).scale(&smr);
            let x = TensorElement::pure(&[&one_e, &eta]);
            let y = TensorElement::pure(&[&ei, &one_f]);
            let got = double_product(pairing, &x, &y)?;
            let mut want = TensorElement::pure(&[&ei, &eta]);
            if i == j {
                let w = BElement::torus(Side::E, LatticeVec::simple(n, i));
                let g = BElement::torus(Side::F, LatticeVec::simple(n, i));
                want.add_scaled(&TensorElement::pure(&[&w, &one_f]), &RatFn::one());
                want.add_scaled(&TensorElement::pure(&[&one_e, &g]), &RatFn::from_int(-1));
            }
            let diff = got.sub(&want);
            out.push(MixedCheck {
                i,
                j,
                pass: diff.is_zero(),
                witness: if diff.is_zero() { None } else { Some(format!("{:?}", diff.terms())) },
            });
        }
    }
    Ok(out)
}
