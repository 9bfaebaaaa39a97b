//! PBW normal forms through the shuffle images.
//!
//! For an E-side `x`, `<F_M, x> = (s-r)^{-h} Σ_w F_M[w] Ω(x)_w`, and the
//! coefficient of `w` in `F_M` is a sum over cuttings of `w` into pieces of
//! the root-vector expansions taken in the order of `M`. Enumerating the
//! cuttings of each word of `Ω(x)` yields all functionals at once. Dividing
//! by the diagonal values gives the expansion, which is then certified by
//! re-expanding: `Ω(x - Σ c_M E_M) = 0` means the difference pairs to zero
//! with every word, i.e. lies in the Serre ideal.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use super::{Pbw, PbwMonomial};
use crate::balgebra::{BElement, Side, Term, TensorElement};
use crate::coeffs::{poly_div_exact, poly_gcd, s_minus_r, Coefficient, LaurentBi, RatFn};
use crate::error::{Error, Result};
use crate::linalg;
use crate::pairing::{omega, ShuffleVec};
use crate::rootsystem::LatticeVec;
use crate::scalar::Scalar;
use crate::words::Word;

pub type NormalForm<T> = BTreeMap<PbwMonomial, RatFn<T>>;

/// `(M, μ, N, ν)` for the tensor `E_M ω_μ ⊗ E_N ω_ν`.
pub type TensorKey = (PbwMonomial, LatticeVec, PbwMonomial, LatticeVec);

/// Pieces indexed by word: `(root index, coefficient)`.
pub(super) type PieceIndex<T> = HashMap<Word, Vec<(usize, LaurentBi<T>)>>;

pub(super) fn piece_index<T: Scalar>(pieces: &[HashMap<Word, LaurentBi<T>>]) -> PieceIndex<T> {
    let mut out: PieceIndex<T> = HashMap::new();
    for (i, p) in pieces.iter().enumerate() {
        for (w, c) in p {
            out.entry(w.clone()).or_default().push((i, c.clone()));
        }
    }
    out
}

fn monomial_of(seq: &[usize]) -> PbwMonomial {
    let mut v: Vec<(usize, u32)> = Vec::new();
    for &i in seq {
        match v.last_mut() {
            Some((j, n)) if *j == i => *n += 1,
            _ => v.push((i, 1)),
        }
    }
    PbwMonomial(v)
}

/// All cuttings of `w` into pieces with non-increasing root index.
fn cuttings<T: Scalar>(
    w: &[u8],
    index: &PieceIndex<T>,
    heights: &[usize],
    out: &mut Vec<(PbwMonomial, LaurentBi<T>)>,
) {
    fn rec<T: Scalar>(
        w: &[u8],
        pos: usize,
        bound: usize,
        coef: &LaurentBi<T>,
        seq: &mut Vec<usize>,
        index: &PieceIndex<T>,
        heights: &[usize],
        out: &mut Vec<(PbwMonomial, LaurentBi<T>)>,
    ) {
        if pos == w.len() {
            out.push((monomial_of(seq), coef.clone()));
            return;
        }
        for &h in heights {
            if pos + h > w.len() {
                break;
            }
            let Some(list) = index.get(&Word::from_letters(&w[pos..pos + h])) else {
                continue;
            };
            for (i, c) in list {
                if *i > bound {
                    continue;
                }
                seq.push(*i);
                rec(w, pos + h, *i, &(coef * c), seq, index, heights, out);
                seq.pop();
            }
        }
    }
    let mut seq = Vec::new();
    rec(w, 0, usize::MAX, &LaurentBi::one(), &mut seq, index, heights, out);
}

fn lcm<T: Scalar>(a: &LaurentBi<T>, b: &LaurentBi<T>) -> LaurentBi<T> {
    if a.is_one() {
        return b.clone();
    }
    if b.is_one() {
        return a.clone();
    }
    let g = poly_gcd(a, b);
    poly_div_exact(&(a * b), &g)
}

/// Checks `Σ_w target_w w == Σ_M c_M image(M)` exactly, clearing denominators first.
fn residual_vanishes<T: Scalar>(
    target: &ShuffleVec<RatFn<T>>,
    expansion: &NormalForm<T>,
    image: impl Fn(&PbwMonomial) -> ShuffleVec<LaurentBi<T>> + Sync,
) -> bool {
    let mut d = LaurentBi::one();
    for c in target.terms().values().chain(expansion.values()) {
        d = lcm(&d, c.den());
    }
    let clear = |c: &RatFn<T>| -> LaurentBi<T> { &poly_div_exact(&d, c.den()) * c.num() };
    let parts: Vec<ShuffleVec<LaurentBi<T>>> = expansion
        .par_iter()
        .map(|(m, c)| {
            let mut x = image(m);
            x = x.map_coeffs(|v| v * &clear(c));
            x
        })
        .collect();
    let mut acc = target.map_coeffs(|c| clear(c));
    for p in parts {
        acc.add_scaled(&p, &LaurentBi::from_int(-1));
    }
    acc.is_zero()
}

impl<T: Scalar> Pbw<T> {
    pub(super) fn heights(&self) -> Vec<usize> {
        let mut h: Vec<usize> = self.roots.iter().map(|r| r.word.len()).collect();
        h.sort();
        h.dedup();
        h
    }

    /// Scaled functionals `(s-r)^h <F_M, x>` (E side) or `(s-r)^h <x, E_M>`
    /// (F side) for every monomial `M` that occurs, from a shuffle image of `x`.
    pub fn functionals<C: Coefficient<Field = T>>(&self, image: &ShuffleVec<C>) -> BTreeMap<PbwMonomial, C> {
        let index = piece_index(match image.side() {
            Side::E => &self.f_pieces,
            Side::F => &self.e_pieces,
        });
        let heights = self.heights();
        let words: Vec<(&Word, &C)> = image.terms().iter().collect();
        words
            .par_iter()
            .fold(BTreeMap::new, |mut acc: BTreeMap<PbwMonomial, C>, (w, c)| {
                let mut cuts = Vec::new();
                cuttings(w.letters(), &index, &heights, &mut cuts);
                for (m, k) in cuts {
                    let v = C::from_laurent(k).mul_ref(c);
                    let e = acc.entry(m).or_insert_with(C::zero);
                    *e = e.add_ref(&v);
                }
                acc
            })
            .reduce(BTreeMap::new, |mut a, b| {
                for (m, v) in b {
                    let e = a.entry(m).or_insert_with(C::zero);
                    *e = e.add_ref(&v);
                }
                a
            })
            .into_iter()
            .filter(|(_, v)| !v.is_zero())
            .collect()
    }

    /// Expansion of a torus-free element in the PBW basis of its side.
    pub fn normal_form<C: Coefficient<Field = T>>(&self, x: &BElement<C>) -> Result<NormalForm<T>> {
        if x.terms().keys().any(|t| !t.torus.is_zero()) {
            return Err(Error::Parse("normal_form expects a torus-free element; use normal_form_blocks".into()));
        }
        let image = omega(&self.rd, x);
        self.normal_form_image(&image, x.weight().ok().flatten())
    }

    /// Normal form of each torus block: `x = Σ_μ (Σ_M c_M E_M) ω_μ`.
    pub fn normal_form_blocks<C: Coefficient<Field = T>>(
        &self,
        x: &BElement<C>,
    ) -> Result<BTreeMap<LatticeVec, NormalForm<T>>> {
        let mut out = BTreeMap::new();
        for (mu, b) in x.torus_blocks() {
            let nf = self.normal_form(&b)?;
            if !nf.is_empty() {
                out.insert(mu, nf);
            }
        }
        Ok(out)
    }

    /// Normal form from a shuffle image (E side for E-side elements, F side for F-side ones).
    pub fn normal_form_image<C: Coefficient<Field = T>>(
        &self,
        image: &ShuffleVec<C>,
        weight: Option<LatticeVec>,
    ) -> Result<NormalForm<T>> {
        self.normal_form_traced(image, weight).map(|x| x.0)
    }

    /// As [`Pbw::normal_form_image`], also reporting whether the full Gram solve was needed.
    pub fn normal_form_traced<C: Coefficient<Field = T>>(
        &self,
        image: &ShuffleVec<C>,
        weight: Option<LatticeVec>,
    ) -> Result<(NormalForm<T>, bool)> {
        let side = image.side();
        let target = image.map_coeffs(|c| c.to_ratfn());
        if target.is_zero() {
            return Ok((NormalForm::new(), false));
        }
        let smr = s_minus_r::<T>();
        let mut nf = NormalForm::new();
        for (m, v) in self.functionals(image) {
            let h = self.height_of(&m);
            let val = &v.to_ratfn() * &RatFn::new(LaurentBi::one(), smr.pow(h));
            let c = val.checked_div(&self.diagonal(&m)).expect("diagonal pairing is nonzero");
            if !c.is_zero() {
                nf.insert(m, c);
            }
        }
        if residual_vanishes(&target, &nf, |m| self.image(side, m)) {
            return Ok((nf, false));
        }
        // The basis is not dual-orthogonal here: solve the full system.
        let weight = match weight {
            Some(w) => w,
            None => return Err(Error::Inhomogeneous),
        };
        let nf = self.gram_solve(image, &weight)?;
        if residual_vanishes(&target, &nf, |m| self.image(side, m)) {
            Ok((nf, true))
        } else {
            Err(Error::Residual(weight.to_vec()))
        }
    }

    /// `G[M'][M]` = scaled pairing of the opposite-side monomial `M'` with `M`.
    pub fn gram_matrix(&self, side: Side, weight: &LatticeVec) -> (Vec<PbwMonomial>, Vec<Vec<RatFn<T>>>) {
        let basis = self.monomials(weight);
        let pos: HashMap<&PbwMonomial, usize> = basis.iter().enumerate().map(|(k, m)| (m, k)).collect();
        let smr = s_minus_r::<T>();
        let cols: Vec<BTreeMap<PbwMonomial, LaurentBi<T>>> =
            basis.par_iter().map(|m| self.functionals(&self.image(side, m))).collect();
        let n = basis.len();
        let mut g = vec![vec![RatFn::zero(); n]; n];
        for (j, col) in cols.into_iter().enumerate() {
            for (m, v) in col {
                if let Some(&i) = pos.get(&m) {
                    let h = self.height_of(&m);
                    g[i][j] = RatFn::new(v, smr.pow(h));
                }
            }
        }
        (basis, g)
    }

    fn gram_solve<C: Coefficient<Field = T>>(
        &self,
        image: &ShuffleVec<C>,
        weight: &LatticeVec,
    ) -> Result<NormalForm<T>> {
        let side = image.side();
        let (basis, g) = self.gram_matrix(side, weight);
        let smr = s_minus_r::<T>();
        let f = self.functionals(image);
        let v: Vec<RatFn<T>> = basis
            .iter()
            .map(|m| match f.get(m) {
                Some(x) => &x.to_ratfn() * &RatFn::new(LaurentBi::one(), smr.pow(self.height_of(m))),
                None => RatFn::zero(),
            })
            .collect();
        let c = linalg::solve(&g, &v).ok_or_else(|| Error::SingularGram(weight.to_vec()))?;
        Ok(basis.into_iter().zip(c).filter(|(_, c)| !c.is_zero()).collect())
    }

    /// Normal form of a two-fold tensor on one side, factor by factor and torus block by torus block.
    pub fn tensor_normal_form<C: Coefficient<Field = T>>(
        &self,
        x: &TensorElement<C>,
    ) -> Result<BTreeMap<TensorKey, RatFn<T>>> {
        let side = x.sides()[0];
        let n = self.rd.rank();
        // Σ_v X_v ⊗ t_v with X_v collected per (left torus, right term)
        let mut groups: BTreeMap<(LatticeVec, Term), BElement<C>> = BTreeMap::new();
        for (k, c) in x.terms() {
            let left = Term::new(k[0].word.clone(), LatticeVec::zero(n));
            groups
                .entry((k[0].torus.clone(), k[1].clone()))
                .or_insert_with(|| BElement::zero(side, n))
                .add_term(left, c.clone());
        }
        let mut right_nf: HashMap<Word, NormalForm<T>> = HashMap::new();
        let mut out: BTreeMap<TensorKey, RatFn<T>> = BTreeMap::new();
        for ((mu, t), left) in groups {
            let lnf = self.normal_form(&left)?;
            if !right_nf.contains_key(&t.word) {
                let w = BElement::<LaurentBi<T>>::word(side, n, t.word.clone());
                right_nf.insert(t.word.clone(), self.normal_form(&w)?);
            }
            for (lm, lc) in &lnf {
                for (rm, rc) in &right_nf[&t.word] {
                    let key = (lm.clone(), mu.clone(), rm.clone(), t.torus.clone());
                    let v = out.remove(&key).unwrap_or_else(RatFn::zero);
                    let v = &v + &(lc * rc);
                    if !v.is_zero() {
                        out.insert(key, v);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Whether `x` vanishes modulo the Serre ideal.
    pub fn zero_in_quotient<C: Coefficient<Field = T>>(&self, x: &BElement<C>) -> bool {
        x.torus_blocks().values().all(|b| omega(&self.rd, b).is_zero())
    }
}
