//! The skew-dual pairing between the F-side and E-side halves, Gram
//! matrices, and the zero test that realizes the Serre quotient.

mod cache;
mod dimcheck;
mod shuffle;

use dashmap::DashMap;
use rayon::prelude::*;
use serde::Serialize;

use crate::balgebra::{BElement, Side, Term};
use crate::coeffs::{s_minus_r, Coefficient, LaurentBi, RatFn};
use crate::error::{Error, Result};
use crate::rootsystem::{LatticeVec, RootDatum};
use crate::scalar::Scalar;
use crate::words::Word;

pub use cache::CACHE_VERSION;
pub use dimcheck::{gram_rank_suite, word_gram_rank, GramRank};
pub use shuffle::{omega, omega_word, shuffle_words, ShuffleVec};

/// Memo key for the word-level pairing.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PairKey {
    pub fword: Word,
    pub eword: Word,
}

/// Pairing engine with a shared memo of word-level values.
///
/// The memo stores `(s-r)^{|w|} <f_w, e_u>`, a Laurent polynomial; torus
/// decorations only contribute a monomial and are applied outside the memo.
pub struct Pairing<T: Scalar> {
    rd: RootDatum,
    memo: DashMap<PairKey, LaurentBi<T>>,
}

/// Pairing values of one E-side element against an ordered F-side basis.
#[derive(Clone, Debug, Serialize)]
#[serde(bound = "")]
pub struct FunctionalVector<T: Scalar> {
    pub weight: LatticeVec,
    pub basis_tags: Vec<String>,
    pub values: Vec<RatFn<T>>,
}

impl<T: Scalar> FunctionalVector<T> {
    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }
}

fn check_weight<C: Coefficient>(x: &BElement<C>, mu: &LatticeVec) -> Result<()> {
    match x.weight()? {
        Some(w) if &w != mu => Err(Error::WeightMismatch { expected: mu.to_vec(), found: w.to_vec() }),
        _ => Ok(()),
    }
}

impl<T: Scalar> Pairing<T> {
    pub fn new(rd: &RootDatum) -> Self {
        Pairing { rd: rd.clone(), memo: DashMap::new() }
    }

    pub fn root_datum(&self) -> &RootDatum {
        &self.rd
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    /// `(s-r)^{|w|} <f_w, e_u>` by peeling the leftmost f-letter.
    ///
    /// `<f_i y', e_u> = Σ_p <f_i, ω_{u_<p} e_{u_p}> <y', e_{u without p}>`, and
    /// commuting the torus past `e_{u_p}` gives `<ω'_i, ω_{u_<p}>`.
    pub fn word_value(&self, w: &Word, u: &Word) -> LaurentBi<T> {
        if w.len() != u.len() {
            return LaurentBi::zero();
        }
        if w.is_empty() {
            return LaurentBi::one();
        }
        let key = PairKey { fword: w.clone(), eword: u.clone() };
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let rank = self.rd.rank();
        if w.content(rank) != u.content(rank) {
            return LaurentBi::zero();
        }
        let first = w.letters()[0];
        let rest = w.slice(1, w.len());
        let mut acc = LaurentBi::zero();
        let (mut a, mut b) = (0, 0);
        for (p, &l) in u.letters().iter().enumerate() {
            if l == first {
                let mut sub = u.letters().to_vec();
                sub.remove(p);
                let v = self.word_value(&rest, &Word::from_letters(&sub));
                if !v.is_zero() {
                    acc += &v.shift(a, b);
                }
            }
            let (x, y) = self.rd.simple_pair_exp(first as usize, l as usize);
            a += x;
            b += y;
        }
        self.memo.insert(key, acc.clone());
        acc
    }

    /// `<f_w ω'_ν, e_u ω_μ>`
    pub fn pair_terms(&self, f: &Term, e: &Term) -> RatFn<T> {
        let v = self.word_value(&f.word, &e.word);
        if v.is_zero() {
            return RatFn::zero();
        }
        let (a, b) = self.rd.torus_exp(&f.torus, &e.torus);
        RatFn::new(v.shift(a, b), s_minus_r::<T>().pow(f.word.len() as u32))
    }

    /// Bilinear pairing of an F-side element with an E-side element.
    pub fn pair<C: Coefficient<Field = T>>(&self, y: &BElement<C>, x: &BElement<C>) -> Result<RatFn<T>> {
        if y.side() != Side::F || x.side() != Side::E {
            return Err(Error::MixedSides);
        }
        // Group by word length so each group shares one power of (s-r).
        let mut by_len: Vec<LaurentBi<T>> = Vec::new();
        let mut rat = RatFn::zero();
        for (ft, fc) in y.terms() {
            for (et, ec) in x.terms() {
                let v = self.word_value(&ft.word, &et.word);
                if v.is_zero() {
                    continue;
                }
                let (a, b) = self.rd.torus_exp(&ft.torus, &et.torus);
                let coeff = fc.mul_ref(ec).mul_monomial(a, b);
                let k = ft.word.len();
                let rf = coeff.to_ratfn();
                match rf.as_laurent() {
                    Some(p) => {
                        if by_len.len() <= k {
                            by_len.resize(k + 1, LaurentBi::zero());
                        }
                        by_len[k] += &(&p * &v);
                    }
                    None => {
                        let den = s_minus_r::<T>().pow(k as u32);
                        rat = &rat + &(&rf * &RatFn::new(v, den));
                    }
                }
            }
        }
        for (k, p) in by_len.into_iter().enumerate() {
            if !p.is_zero() {
                rat = &rat + &RatFn::new(p, s_minus_r::<T>().pow(k as u32));
            }
        }
        Ok(rat)
    }

    /// `G[m][n] = pair(fbasis[m], ebasis[n])`, filled in parallel.
    pub fn gram<C: Coefficient<Field = T>>(
        &self,
        weight: &LatticeVec,
        fbasis: &[BElement<C>],
        ebasis: &[BElement<C>],
    ) -> Result<Vec<Vec<RatFn<T>>>> {
        for x in fbasis.iter().chain(ebasis) {
            check_weight(x, weight)?;
        }
        fbasis
            .par_iter()
            .map(|y| ebasis.iter().map(|x| self.pair(y, x)).collect::<Result<Vec<_>>>())
            .collect()
    }

    /// Pairings of `x` against a tagged F-side basis of its weight.
    pub fn functional_vector<C: Coefficient<Field = T>>(
        &self,
        x: &BElement<C>,
        weight: &LatticeVec,
        basis: &[(String, BElement<C>)],
    ) -> Result<FunctionalVector<T>> {
        check_weight(x, weight)?;
        for (_, y) in basis {
            check_weight(y, weight)?;
        }
        let values = basis.par_iter().map(|(_, y)| self.pair(y, x)).collect::<Result<Vec<_>>>()?;
        Ok(FunctionalVector {
            weight: weight.clone(),
            basis_tags: basis.iter().map(|(t, _)| t.clone()).collect(),
            values,
        })
    }

    /// Whether `x` vanishes in the quotient by the Serre ideal.
    ///
    /// Equivalent to pairing every torus block against all f-words of its
    /// content, done through the shuffle image so no sampling is needed.
    pub fn is_zero_in_quotient<C: Coefficient<Field = T>>(&self, x: &BElement<C>) -> bool {
        x.torus_blocks().values().all(|b| omega(&self.rd, b).is_zero())
    }
}

#[cfg(test)]
mod tests;
