//! `R(m'⊗m) = f(wt m, wt m') Σ_M θ_M F_M m ⊗ E_M m'` and the checks built on it.
//!
//! Both checks are linear in each `R`, so every `R` is divided by the
//! constant `f(λ, λ')` of the two highest weights. What remains of `f` only
//! involves exponents linear in the highest weights, which keeps the
//! inflation at the common denominator instead of its square.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use super::{add_into, pair_exp_rat, scaled_exp, Generator, ModVec, TensorVec, TruncatedVerma};
use crate::balgebra::{coproduct_n, BElement, Side};
use crate::coeffs::{LaurentBi, RatFn};
use crate::double::{c_beta, theta};
use crate::error::Result;
use crate::pbw::{Pbw, PbwMonomial};
use crate::scalar::Scalar;

fn unit<T: Scalar>(key: Vec<PbwMonomial>) -> TensorVec<T> {
    TensorVec::from([(key, RatFn::one())])
}

/// Tensor product of per-factor vectors, scaled by `c`, added into `out`.
fn add_product<T: Scalar>(out: &mut TensorVec<T>, parts: &[ModVec<T>], c: &RatFn<T>) {
    fn rec<T: Scalar>(
        out: &mut TensorVec<T>,
        parts: &[ModVec<T>],
        key: &mut Vec<PbwMonomial>,
        c: &RatFn<T>,
    ) {
        let Some((first, rest)) = parts.split_first() else {
            add_into(out, key.clone(), c.clone());
            return;
        };
        for (m, x) in first {
            key.push(m.clone());
            rec(out, rest, key, &(c * x));
            key.pop();
        }
    }
    rec(out, parts, &mut Vec::new(), c);
}

/// Action of an algebra element on a tensor product through the iterated coproduct.
pub fn act_tensor<T: Scalar>(
    modules: &[&TruncatedVerma<T>],
    u: &BElement<LaurentBi<T>>,
    x: &TensorVec<T>,
) -> (TensorVec<T>, bool) {
    let rd = modules[0].pbw().root_datum();
    let k = modules[0].inflation();
    let d = coproduct_n(rd, u, modules.len());
    let mut out = TensorVec::new();
    let mut loss = false;
    for (key, c) in x {
        for (terms, dc) in d.terms() {
            let mut parts = Vec::with_capacity(modules.len());
            for (j, t) in terms.iter().enumerate() {
                let v = ModVec::from([(key[j].clone(), RatFn::one())]);
                let (img, l) = modules[j].act_term(u.side(), t, &v);
                loss |= l;
                parts.push(img);
            }
            add_product(&mut out, &parts, &(c * &RatFn::from_laurent(dc.inflate(k))));
        }
    }
    (out, loss)
}

/// Truncated `Θ` with its root-vector expansions, ready to act.
pub struct RMatrix<T: Scalar> {
    terms: Vec<(RatFn<T>, BElement<LaurentBi<T>>, BElement<LaurentBi<T>>)>,
}

/// `R` on every pair of basis vectors of `first ⊗ second`, landing in `second ⊗ first`.
pub struct RTable<T: Scalar> {
    map: HashMap<(PbwMonomial, PbwMonomial), (TensorVec<T>, bool)>,
}

impl<T: Scalar> RMatrix<T> {
    pub fn new(pbw: &Pbw<T>, max_degree: u32, inflation: i32) -> Result<Self> {
        let c = c_beta(pbw)?;
        let th = theta(pbw, &c, max_degree);
        let terms = th
            .monomials
            .iter()
            .map(|(m, k)| (k.inflate(inflation), pbw.expand(Side::F, m), pbw.expand(Side::E, m)))
            .collect();
        Ok(RMatrix { terms })
    }

    /// `R(m'⊗m) / f(λ, λ')` with `m'` in `first` (highest weight `λ'`) and `m` in `second` (`λ`).
    pub fn apply_basis(
        &self,
        first: &TruncatedVerma<T>,
        second: &TruncatedVerma<T>,
        mp: &PbwMonomial,
        m: &PbwMonomial,
    ) -> (TensorVec<T>, bool) {
        let rd = first.pbw().root_datum();
        // f(wt m, wt m') / f(λ, λ') = <ω'_{wt m'}, ω_{wt m}>^{-1} <ω'_λ', ω_λ>
        let (a0, b0) = pair_exp_rat(rd, &first.character.lambda, &second.character.lambda);
        let (a, b) = pair_exp_rat(rd, first.weight(mp), second.weight(m));
        let k = first.inflation();
        let f = RatFn::monomial(scaled_exp(&(a0 - a), k), scaled_exp(&(b0 - b), k));
        let mut out = TensorVec::new();
        let mut loss = false;
        for (k, fm, em) in &self.terms {
            let (ev, l1) = first.act_element(em, &ModVec::from([(mp.clone(), RatFn::one())]));
            if ev.is_empty() {
                continue;
            }
            let (fv, l2) = second.act_element(fm, &ModVec::from([(m.clone(), RatFn::one())]));
            loss |= l1 | l2;
            add_product(&mut out, &[fv, ev], &(&f * k));
        }
        (out, loss)
    }

    pub fn table(&self, first: &TruncatedVerma<T>, second: &TruncatedVerma<T>) -> RTable<T> {
        let pairs: Vec<(PbwMonomial, PbwMonomial)> = first
            .basis()
            .iter()
            .flat_map(|a| second.basis().iter().map(move |b| (a.clone(), b.clone())))
            .collect();
        let map = pairs
            .into_par_iter()
            .map(|(a, b)| {
                let v = self.apply_basis(first, second, &a, &b);
                ((a, b), v)
            })
            .collect();
        RTable { map }
    }
}

impl<T: Scalar> RTable<T> {
    /// Applies `R` to factors `pos, pos+1` of `x`.
    pub fn apply_at(&self, x: &TensorVec<T>, pos: usize) -> (TensorVec<T>, bool) {
        let mut out = TensorVec::new();
        let mut loss = false;
        for (key, c) in x {
            let (img, l) = &self.map[&(key[pos].clone(), key[pos + 1].clone())];
            loss |= *l;
            for (k2, y) in img {
                let mut nk = key.clone();
                nk[pos] = k2[0].clone();
                nk[pos + 1] = k2[1].clone();
                add_into(&mut out, nk, c * y);
            }
        }
        (out, loss)
    }
}

fn render<T: Scalar>(x: &TensorVec<T>) -> String {
    let parts: Vec<String> = x
        .iter()
        .map(|(k, c)| {
            let names: Vec<String> = k.iter().map(|m| format!("{:?}", m.0)).collect();
            format!("({c}) [{}]", names.join(" ⊗ "))
        })
        .collect();
    parts.join(" + ")
}

fn diff<T: Scalar>(a: &TensorVec<T>, b: &TensorVec<T>) -> TensorVec<T> {
    let mut d = a.clone();
    for (k, v) in b {
        add_into(&mut d, k.clone(), -v);
    }
    d
}

#[derive(Clone, Debug, Serialize)]
pub struct RmatrixReport {
    pub lambda_a: Vec<String>,
    pub lambda_b: Vec<String>,
    pub depth: u32,
    /// Pairs `(generator, basis tensor)` compared exactly.
    pub checked: usize,
    /// Pairs skipped because some step crossed the truncation boundary.
    pub excluded: usize,
    pub failures: Vec<String>,
    pub pass: bool,
}

/// `R(u·x) = u·R(x)` on `M(λB) ⊗ M(λA)` for every generator and basis tensor.
pub fn rmatrix_check<T: Scalar>(pbw: &Pbw<T>, lambda_a: &[T], lambda_b: &[T], depth: u32) -> Result<RmatrixReport> {
    let n = pbw.root_datum().rank();
    let k = super::inflation_for(&[lambda_a, lambda_b]);
    let ma = TruncatedVerma::new(pbw, lambda_a, k, depth)?;
    let mb = TruncatedVerma::new(pbw, lambda_b, k, depth)?;
    let r = RMatrix::new(pbw, depth, k)?;
    let table = r.table(&mb, &ma);
    let gens = Generator::all(n);
    let elements: Vec<BElement<LaurentBi<T>>> = gens.iter().map(|g| g.element(n)).collect();
    let xs: Vec<Vec<PbwMonomial>> =
        mb.basis().iter().flat_map(|b| ma.basis().iter().map(move |a| vec![b.clone(), a.clone()])).collect();
    let results: Vec<(usize, usize, Vec<String>)> = xs
        .par_iter()
        .map(|key| {
            let x = unit::<T>(key.clone());
            let (rx, l_rx) = table.apply_at(&x, 0);
            let (mut checked, mut excluded, mut fails) = (0, 0, Vec::new());
            for (g, u) in gens.iter().zip(&elements) {
                let (ux, l1) = act_tensor(&[&mb, &ma], u, &x);
                let (lhs, l2) = table.apply_at(&ux, 0);
                let (rhs, l3) = act_tensor(&[&ma, &mb], u, &rx);
                if !g.is_torus() && (l1 || l2 || l3 || l_rx) {
                    excluded += 1;
                    continue;
                }
                checked += 1;
                let d = diff(&lhs, &rhs);
                if !d.is_empty() {
                    fails.push(format!("u={g} x={:?}: {}", key.iter().map(|m| &m.0).collect::<Vec<_>>(), render(&d)));
                }
            }
            (checked, excluded, fails)
        })
        .collect();
    let mut report = RmatrixReport {
        lambda_a: lambda_a.iter().map(|x| x.to_string()).collect(),
        lambda_b: lambda_b.iter().map(|x| x.to_string()).collect(),
        depth,
        checked: 0,
        excluded: 0,
        failures: Vec::new(),
        pass: false,
    };
    for (c, e, f) in results {
        report.checked += c;
        report.excluded += e;
        report.failures.extend(f);
    }
    report.pass = report.failures.is_empty() && report.checked > 0;
    Ok(report)
}

#[derive(Clone, Debug, Serialize)]
pub struct YangBaxterReport {
    pub lambdas: Vec<Vec<String>>,
    pub depth: u32,
    pub checked: usize,
    pub excluded: usize,
    pub failures: Vec<String>,
    pub pass: bool,
}

/// Braid form of the Yang–Baxter equation on `V1 ⊗ V2 ⊗ V3 -> V3 ⊗ V2 ⊗ V1`:
/// `R_{12} R_{23} R_{12} = R_{23} R_{12} R_{23}` with the modules permuted accordingly.
pub fn yang_baxter_check<T: Scalar>(pbw: &Pbw<T>, lambdas: [&[T]; 3], depth: u32) -> Result<YangBaxterReport> {
    let k = super::inflation_for(&lambdas);
    let v: Vec<TruncatedVerma<T>> =
        lambdas.iter().map(|l| TruncatedVerma::new(pbw, l, k, depth)).collect::<Result<_>>()?;
    let r = RMatrix::new(pbw, depth, k)?;
    let (t12, t13, t23) = (r.table(&v[0], &v[1]), r.table(&v[0], &v[2]), r.table(&v[1], &v[2]));
    let mut xs = Vec::new();
    for a in v[0].basis() {
        for b in v[1].basis() {
            for c in v[2].basis() {
                xs.push(vec![a.clone(), b.clone(), c.clone()]);
            }
        }
    }
    let results: Vec<(bool, Option<String>)> = xs
        .par_iter()
        .map(|key| {
            let x = unit::<T>(key.clone());
            let (y1, a1) = t12.apply_at(&x, 0);
            let (y2, a2) = t13.apply_at(&y1, 1);
            let (lhs, a3) = t23.apply_at(&y2, 0);
            let (z1, b1) = t23.apply_at(&x, 1);
            let (z2, b2) = t13.apply_at(&z1, 0);
            let (rhs, b3) = t12.apply_at(&z2, 1);
            if a1 || a2 || a3 || b1 || b2 || b3 {
                return (false, None);
            }
            let d = diff(&lhs, &rhs);
            let fail = (!d.is_empty()).then(|| format!("x={:?}: {}", key.iter().map(|m| &m.0).collect::<Vec<_>>(), render(&d)));
            (true, fail)
        })
        .collect();
    let checked = results.iter().filter(|r| r.0).count();
    let failures: Vec<String> = results.into_iter().filter_map(|r| r.1).collect();
    Ok(YangBaxterReport {
        lambdas: lambdas.iter().map(|l| l.iter().map(|x| x.to_string()).collect()).collect(),
        depth,
        checked,
        excluded: xs.len() - checked,
        pass: failures.is_empty() && checked > 0,
        failures,
    })
}
