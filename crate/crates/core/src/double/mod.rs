//! Drinfeld-double layer: the constants `c_β` with `η_β = c_β F_β`, the
//! relations among the `η`, the mixed product rule of the double, the
//! canonical element and the dual-basis check.

mod mixed;

use rayon::prelude::*;
use serde::Serialize;

use crate::balgebra::{coproduct, BElement, Side, TensorElement};
use crate::coeffs::{psi, s_minus_r, LaurentBi, RatFn};
use crate::error::{Error, Result};
use crate::pbw::{Pbw, PbwMonomial};
use crate::rootsystem::LatticeVec;
use crate::scalar::Scalar;
use crate::words::Word;

pub use mixed::{double_mixed_check, double_product, MixedCheck};

/// `c_β` for every root in convex order.
#[derive(Clone, Debug, Serialize)]
#[serde(bound = "")]
pub struct CBetaTable<T: Scalar> {
    pub values: Vec<RatFn<T>>,
}

/// `c_β = -<ω'_{β1}, ω_{β2}> (1 - <ω'_{β2}, ω_{β1}><ω'_{β1}, ω_{β2}>)^{-1} c_{β1} c_{β2}`
/// along the standard factorization, with `c = s - r` on simple roots.
pub fn c_beta<T: Scalar>(pbw: &Pbw<T>) -> Result<CBetaTable<T>> {
    let rd = pbw.root_datum();
    let roots = pbw.roots();
    let mut values: Vec<Option<RatFn<T>>> = vec![None; roots.len()];
    let mut order: Vec<usize> = (0..roots.len()).collect();
    order.sort_by_key(|&i| (roots[i].word.len(), i));
    for i in order {
        let v = match roots[i].factors {
            None => RatFn::from_laurent(s_minus_r()),
            Some((a, b)) => {
                let (b1, b2) = (&roots[a].root, &roots[b].root);
                let p12 = rd.torus_exp(b1, b2);
                let p21 = rd.torus_exp(b2, b1);
                let den = &LaurentBi::<T>::one() - &LaurentBi::monomial(p12.0 + p21.0, p12.1 + p21.1);
                if den.is_zero() {
                    return Err(Error::CBetaPole(roots[i].root.to_vec()));
                }
                let c1 = values[a].as_ref().expect("factor computed first");
                let c2 = values[b].as_ref().expect("factor computed first");
                let num = LaurentBi::monomial(p12.0, p12.1).scale(&T::from_i64(-1));
                &RatFn::new(num, den) * &(c1 * c2)
            }
        };
        values[i] = Some(v);
    }
    Ok(CBetaTable { values: values.into_iter().map(|v| v.unwrap()).collect() })
}

/// One named identity with its outcome.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    /// Nonzero difference, rendered, when the check fails.
    pub witness: Option<String>,
}

impl Check {
    fn new(name: String, diff: Option<String>) -> Self {
        Check { name, pass: diff.is_none(), witness: diff }
    }
}

fn eta<T: Scalar>(pbw: &Pbw<T>, c: &CBetaTable<T>, i: usize) -> BElement<RatFn<T>> {
    pbw.roots()[i].f_expansion.map_coeffs(|x| &RatFn::from_laurent(x.clone()) * &c.values[i])
}

fn diff_or_none<T: Scalar>(x: &BElement<RatFn<T>>) -> Option<String> {
    if x.is_zero() {
        None
    } else {
        Some(x.to_string())
    }
}

/// Relations among the `η_i = (s-r) f_i` and `η_β = c_β F_β`.
pub fn verify_eta_relations<T: Scalar>(pbw: &Pbw<T>, c: &CBetaTable<T>) -> Result<Vec<Check>> {
    let rd = pbw.root_datum();
    let n = rd.rank();
    let simple = |i: usize| pbw.index_of_word(&Word::letter(i)).expect("simple root");
    let r = |a: i32, b: i32| RatFn::<T>::monomial(a, b);
    let mut out = Vec::new();
    for i in 1..=n {
        // γ_i η_j γ_i^{-1} = <ω'_i, ω_j> η_j
        for j in 1..=n {
            let gi = BElement::<RatFn<T>>::torus(Side::F, LatticeVec::simple(n, i));
            let gi_inv = BElement::torus(Side::F, -&LatticeVec::simple(n, i));
            let ej = eta(pbw, c, simple(j));
            let lhs = gi.mul(rd, &ej)?.mul(rd, &gi_inv)?;
            let (a, b) = rd.simple_pair_exp(i, j);
            let diff = lhs.sub(&ej.scale(&r(a, b)))?;
            out.push(Check::new(format!("torus-conjugation({i},{j})"), diff_or_none(&diff)));
        }
        // flip(Δ(η_i)) = η_i ⊗ 1 + γ_i ⊗ η_i
        let ei = eta(pbw, c, simple(i));
        let d = coproduct(rd, &ei).flip();
        let one = BElement::one(Side::F, n);
        let gi = BElement::torus(Side::F, LatticeVec::simple(n, i));
        let mut want = TensorElement::pure(&[&ei, &one]);
        want.add_scaled(&TensorElement::pure(&[&gi, &ei]), &RatFn::one());
        let diff = d.sub(&want);
        out.push(Check::new(
            format!("coproduct-shape({i})"),
            if diff.is_zero() { None } else { Some(format!("{} terms", diff.len())) },
        ));
    }
    let one_minus = &RatFn::<T>::one() - &r(-1, 1);
    for i in 1..=n {
        for j in i + 1..=n {
            let (ei, ej) = (eta(pbw, c, simple(i)), eta(pbw, c, simple(j)));
            let ij = ei.mul(rd, &ej)?;
            let ji = ej.mul(rd, &ei)?;
            match rd.cartan[i - 1][j - 1] {
                0 => {
                    let diff = ij.sub(&ji)?;
                    let zero = pbw.zero_in_quotient(&diff);
                    out.push(Check::new(
                        format!("commute({i},{j})"),
                        if zero { None } else { Some(diff.to_string()) },
                    ));
                }
                -1 => {
                    let root = &LatticeVec::simple(n, i) + &LatticeVec::simple(n, j);
                    let k = pbw.index_of_root(&root).expect("sum of adjacent simple roots");
                    let lhs = ij.sub(&ji.scale(&r(-1, 0)))?;
                    let diff = lhs.sub(&eta(pbw, c, k).scale(&one_minus))?;
                    out.push(Check::new(format!("eta-bracket({i},{j})"), diff_or_none(&diff)));
                    for (x, y, sum, prod) in [
                        (i, j, &r(-1, 0) + &r(0, -1), r(-1, -1)),
                        (j, i, &r(1, 0) + &r(0, 1), r(1, 1)),
                    ] {
                        let (fx, fy) = (eta(pbw, c, simple(x)), eta(pbw, c, simple(y)));
                        let xxy = fx.mul(rd, &fx)?.mul(rd, &fy)?;
                        let xyx = fx.mul(rd, &fy)?.mul(rd, &fx)?;
                        let yxx = fy.mul(rd, &fx)?.mul(rd, &fx)?;
                        let mut s = xxy;
                        s.add_scaled(&xyx, &-&sum);
                        s.add_scaled(&yxx, &prod);
                        let zero = pbw.zero_in_quotient(&s);
                        out.push(Check::new(
                            format!("eta-serre({x},{y})"),
                            if zero { None } else { Some(s.to_string()) },
                        ));
                    }
                }
                _ => {}
            }
        }
    }
    Ok(out)
}

/// Truncation of the canonical element to total height `≤ max_degree`.
#[derive(Clone, Debug, Serialize)]
#[serde(bound = "")]
pub struct ThetaTruncation<T: Scalar> {
    pub max_degree: u32,
    /// `(monomial, coefficient)`: the term `coefficient · F_M ⊗ E_M`.
    pub monomials: Vec<(PbwMonomial, RatFn<T>)>,
}

impl<T: Scalar> ThetaTruncation<T> {
    /// Word-level expansion with F-side left factors and E-side right factors.
    pub fn expand(&self, pbw: &Pbw<T>) -> TensorElement<RatFn<T>> {
        let n = pbw.root_datum().rank();
        let parts: Vec<TensorElement<RatFn<T>>> = self
            .monomials
            .par_iter()
            .map(|(m, c)| {
                let f = pbw.expand(Side::F, m).map_coeffs(|x| RatFn::from_laurent(x.clone()));
                let e = pbw.expand(Side::E, m).map_coeffs(|x| RatFn::from_laurent(x.clone()));
                TensorElement::pure(&[&f, &e]).scale(c)
            })
            .collect();
        let mut out = TensorElement::zero(vec![Side::F, Side::E], n);
        for p in parts {
            out.add_scaled(&p, &RatFn::one());
        }
        out
    }
}

/// `Θ = Σ_M (1-rs^{-1})^{Σn} Π c_β^{n} / Π Ψ_n(rs^{-1}) · F_M ⊗ E_M`.
pub fn theta<T: Scalar>(pbw: &Pbw<T>, c: &CBetaTable<T>, max_degree: u32) -> ThetaTruncation<T> {
    let rd = pbw.root_datum();
    let one_minus = &LaurentBi::<T>::one() - &LaurentBi::monomial(1, -1);
    let mut monomials = Vec::new();
    for h in 0..=max_degree as i32 {
        for mu in rd.weights_of_height(h) {
            for m in pbw.monomials(&mu) {
                let mut coeff = RatFn::one();
                for &(i, k) in &m.0 {
                    let x = RatFn::new(one_minus.pow(k), psi::<T>(k));
                    coeff = &coeff * &(&x * &c.values[i].pow(k as i32));
                }
                monomials.push((m, coeff));
            }
        }
    }
    ThetaTruncation { max_degree, monomials }
}

/// Outcome of the dual-basis check at one weight.
#[derive(Clone, Debug, Serialize)]
pub struct DualBasisReport {
    pub weight: Vec<i32>,
    pub size: usize,
    pub off_diagonal_nonzero: usize,
    pub wrong_diagonal: usize,
}

impl DualBasisReport {
    pub fn pass(&self) -> bool {
        self.off_diagonal_nonzero == 0 && self.wrong_diagonal == 0
    }
}

/// Gram matrix of `η_M = Π c^n F_M` against `E_M` must be diagonal with
/// entries `Π Ψ_n(rs^{-1}) / (1-rs^{-1})^n`.
pub fn dual_basis_check<T: Scalar>(pbw: &Pbw<T>, c: &CBetaTable<T>, weight: &LatticeVec) -> DualBasisReport {
    let (basis, g) = pbw.gram_matrix(Side::E, weight);
    let one_minus = &LaurentBi::<T>::one() - &LaurentBi::monomial(1, -1);
    let mut off = 0;
    let mut wrong = 0;
    for (i, m) in basis.iter().enumerate() {
        let mut scale = RatFn::one();
        let mut want = RatFn::one();
        for &(k, n) in &m.0 {
            scale = &scale * &c.values[k].pow(n as i32);
            want = &want * &RatFn::new(psi::<T>(n), one_minus.pow(n));
        }
        for (j, v) in g[i].iter().enumerate() {
            let v = &scale * v;
            if i == j {
                if v != want {
                    wrong += 1;
                }
            } else if !v.is_zero() {
                off += 1;
            }
        }
    }
    DualBasisReport { weight: weight.to_vec(), size: basis.len(), off_diagonal_nonzero: off, wrong_diagonal: wrong }
}

/// Checks every positive weight of height `≤ max_height`.
pub fn dual_basis_suite<T: Scalar>(pbw: &Pbw<T>, c: &CBetaTable<T>, max_height: i32) -> Vec<DualBasisReport> {
    let rd = pbw.root_datum();
    let weights: Vec<LatticeVec> = (0..=max_height)
        .flat_map(|h| rd.weights_of_height(h))
        .filter(|mu| rd.kostant(mu) > 0)
        .collect();
    weights.par_iter().map(|mu| dual_basis_check(pbw, c, mu)).collect()
}

#[cfg(test)]
mod tests;
