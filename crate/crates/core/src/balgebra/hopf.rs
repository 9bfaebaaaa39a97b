//! Coproduct, counit, antipode, adjoint action and the two skew brackets.

use super::element::{BElement, Side, Term};
use super::tensor::TensorElement;
use crate::coeffs::Coefficient;
use crate::error::{Error, Result};
use crate::rootsystem::{LatticeVec, RootDatum};
use crate::words::Word;

fn letter_term(rank: usize, i: u8) -> Term {
    Term::new(Word::from_letters(&[i]), LatticeVec::zero(rank))
}

fn torus_term(rank: usize, mu: LatticeVec) -> Term {
    debug_assert_eq!(mu.rank(), rank);
    Term::new(Word::empty(), mu)
}

/// `Δ` of one generator letter.
fn delta_letter<C: Coefficient>(side: Side, rank: usize, i: u8) -> TensorElement<C> {
    let mut d = TensorElement::zero(vec![side, side], rank);
    let g = letter_term(rank, i);
    let w = torus_term(rank, LatticeVec::simple(rank, i as usize));
    let one = Term::unit(rank);
    match side {
        // e_i ⊗ 1 + ω_i ⊗ e_i
        Side::E => {
            d.add_term(vec![g.clone(), one.clone()], C::one());
            d.add_term(vec![w, g], C::one());
        }
        // 1 ⊗ f_i + f_i ⊗ ω'_i
        Side::F => {
            d.add_term(vec![one, g.clone()], C::one());
            d.add_term(vec![g, w], C::one());
        }
    }
    d
}

/// Coproduct of a single term, as a two-fold tensor.
pub fn coproduct_term<C: Coefficient>(rd: &RootDatum, side: Side, t: &Term) -> TensorElement<C> {
    let rank = rd.rank();
    let mut acc = TensorElement::one(vec![side, side], rank);
    for &l in t.word.letters() {
        acc = acc.mul(rd, &delta_letter(side, rank, l));
    }
    if !t.torus.is_zero() {
        let mut g = TensorElement::zero(vec![side, side], rank);
        g.add_term(vec![torus_term(rank, t.torus.clone()), torus_term(rank, t.torus.clone())], C::one());
        acc = acc.mul(rd, &g);
    }
    acc
}

pub fn coproduct<C: Coefficient>(rd: &RootDatum, x: &BElement<C>) -> TensorElement<C> {
    let side = x.side();
    let mut out = TensorElement::zero(vec![side, side], x.rank());
    for (t, c) in x.terms() {
        out.add_scaled(&coproduct_term(rd, side, t), c);
    }
    out
}

/// Applies `Δ` to factor `k` of a tensor.
pub fn coproduct_at<C: Coefficient>(rd: &RootDatum, x: &TensorElement<C>, k: usize) -> TensorElement<C> {
    let side = x.sides()[k];
    x.map_factor(k, &[side, side], |t| coproduct_term(rd, side, t))
}

/// Iterated coproduct into `n` factors.
pub fn coproduct_n<C: Coefficient>(rd: &RootDatum, x: &BElement<C>, n: usize) -> TensorElement<C> {
    assert!(n >= 1);
    let mut t = TensorElement::pure(&[x]);
    for k in 1..n {
        t = coproduct_at(rd, &t, k - 1);
    }
    t
}

pub fn counit<C: Coefficient>(x: &BElement<C>) -> C {
    let mut acc = C::zero();
    for (t, c) in x.terms() {
        if t.word.is_empty() {
            acc = acc.add_ref(c);
        }
    }
    acc
}

/// Applies `ε` to factor `k`, removing it.
pub fn counit_at<C: Coefficient>(x: &TensorElement<C>, k: usize) -> TensorElement<C> {
    x.map_factor(k, &[], |t| {
        let mut one = TensorElement::zero(Vec::new(), x.rank());
        if t.word.is_empty() {
            one.add_term(Vec::new(), C::one());
        }
        one
    })
}

/// Antipode of a single term, anti-multiplicative on letters.
pub fn antipode_term<C: Coefficient>(rd: &RootDatum, side: Side, t: &Term) -> BElement<C> {
    let rank = rd.rank();
    let mut acc = BElement::torus(side, -&t.torus);
    for &l in t.word.letters().iter().rev() {
        let inv = BElement::torus(side, -&LatticeVec::simple(rank, l as usize));
        let g = BElement::generator(side, rank, l as usize);
        // S(e_i) = -ω_i^{-1} e_i,  S(f_i) = -f_i ω'_i^{-1}
        let s = match side {
            Side::E => inv.mul(rd, &g),
            Side::F => g.mul(rd, &inv),
        }
        .expect("same side")
        .neg();
        acc = acc.mul(rd, &s).expect("same side");
    }
    acc
}

pub fn antipode<C: Coefficient>(rd: &RootDatum, x: &BElement<C>) -> BElement<C> {
    let mut out = BElement::zero(x.side(), x.rank());
    for (t, c) in x.terms() {
        out.add_scaled(&antipode_term(rd, x.side(), t), c);
    }
    out
}

/// Left adjoint action `ad a (b) = Σ a_(1) b S(a_(2))`.
pub fn ad_left<C: Coefficient>(rd: &RootDatum, a: &BElement<C>, b: &BElement<C>) -> Result<BElement<C>> {
    if a.side() != b.side() {
        return Err(Error::MixedSides);
    }
    let side = a.side();
    let rank = a.rank();
    let mut out = BElement::zero(side, rank);
    for (k, c) in coproduct(rd, a).terms() {
        let left = BElement::from_term(side, rank, k[0].clone(), c.clone());
        let right = antipode_term::<C>(rd, side, &k[1]);
        out = out.add(&left.mul(rd, b)?.mul(rd, &right)?)?;
    }
    Ok(out)
}

/// `(ad e_i)^{1 - a_ij} (e_j)` in the free algebra.
pub fn adjoint_serre<C: Coefficient>(rd: &RootDatum, i: usize, j: usize) -> BElement<C> {
    assert!(i != j, "adjoint Serre element needs i != j");
    let rank = rd.rank();
    let n = 1 - rd.cartan[i - 1][j - 1];
    let ei = BElement::generator(Side::E, rank, i);
    let mut x = BElement::generator(Side::E, rank, j);
    for _ in 0..n {
        x = ad_left(rd, &ei, &x).expect("same side");
    }
    x
}

/// Skew bracket of homogeneous elements.
///
/// E-side: `uv - <ω'_η, ω_ζ> vu`; F-side: `vu - <ω'_ζ, ω_η>^{-1} uv`,
/// where `ζ`, `η` are the weights of `u`, `v`.
pub fn bracket<C: Coefficient>(rd: &RootDatum, u: &BElement<C>, v: &BElement<C>) -> Result<BElement<C>> {
    if u.side() != v.side() {
        return Err(Error::MixedSides);
    }
    let (Some(zeta), Some(eta)) = (u.weight()?, v.weight()?) else {
        return Ok(BElement::zero(u.side(), u.rank()));
    };
    bracket_with_weights(rd, u, v, &zeta, &eta)
}

pub(crate) fn bracket_with_weights<C: Coefficient>(
    rd: &RootDatum,
    u: &BElement<C>,
    v: &BElement<C>,
    zeta: &LatticeVec,
    eta: &LatticeVec,
) -> Result<BElement<C>> {
    let uv = u.mul(rd, v)?;
    let vu = v.mul(rd, u)?;
    Ok(match u.side() {
        Side::E => {
            let (a, b) = rd.torus_exp(eta, zeta);
            let mut x = uv;
            x.add_scaled(&vu, &C::from_int(-1).mul_monomial(a, b));
            x
        }
        Side::F => {
            let (a, b) = rd.torus_exp(zeta, eta);
            let mut x = vu;
            x.add_scaled(&uv, &C::from_int(-1).mul_monomial(-a, -b));
            x
        }
    })
}
