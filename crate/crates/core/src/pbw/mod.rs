//! Good Lyndon words, quantum root vectors and the convex PBW basis.

mod ls;
mod normal;
mod serre;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::Serialize;

use crate::balgebra::{bracket, BElement, Side};
use crate::coeffs::{psi, s_minus_r, Coefficient, LaurentBi, RatFn};
use crate::error::{Error, Result};
use crate::pairing::ShuffleVec;
use crate::rootsystem::{LatticeVec, RootDatum};
use crate::scalar::Scalar;
use crate::words::{std_factorize, Word};

pub use ls::{LsRelation, LsTable};
pub use normal::{NormalForm, TensorKey};
pub use serre::{serre_quotient_dims, DegreeCount};

/// A quantum root vector with its expansions and shuffle images.
#[derive(Clone, Debug)]
pub struct RootVector<T: Scalar> {
    /// Position in the convex order, 0-based.
    pub index: usize,
    pub root: LatticeVec,
    pub word: Word,
    /// Convex positions of the standard factors.
    pub factors: Option<(usize, usize)>,
    pub e_expansion: BElement<LaurentBi<T>>,
    pub f_expansion: BElement<LaurentBi<T>>,
    /// Shuffle image of `E_β`.
    pub e_image: ShuffleVec<LaurentBi<T>>,
    /// Shuffle image of `F_β`.
    pub f_image: ShuffleVec<LaurentBi<T>>,
    /// `<F_β, E_β>`
    pub diagonal: RatFn<T>,
}

/// `E_{β_a}^{n_a} ... E_{β_b}^{n_b}` with strictly decreasing convex positions.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct PbwMonomial(pub Vec<(usize, u32)>);

impl PbwMonomial {
    pub fn one() -> Self {
        PbwMonomial(Vec::new())
    }

    pub fn single(i: usize, n: u32) -> Self {
        PbwMonomial(vec![(i, n)])
    }

    /// Builds from arbitrary `(index, exponent)` pairs; merges and sorts.
    pub fn from_exponents(it: impl IntoIterator<Item = (usize, u32)>) -> Self {
        let mut m: BTreeMap<usize, u32> = BTreeMap::new();
        for (i, n) in it {
            if n > 0 {
                *m.entry(i).or_default() += n;
            }
        }
        PbwMonomial(m.into_iter().rev().collect())
    }

    /// Factor indices left to right, repeated by exponent.
    pub fn factor_sequence(&self) -> Vec<usize> {
        self.0.iter().flat_map(|&(i, n)| std::iter::repeat_n(i, n as usize)).collect()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|x| x.1).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }
}

/// The basis data for one root datum.
pub struct Pbw<T: Scalar> {
    rd: RootDatum,
    roots: Vec<RootVector<T>>,
    by_root: HashMap<LatticeVec, usize>,
    by_word: HashMap<Word, usize>,
    e_pieces: Vec<HashMap<Word, LaurentBi<T>>>,
    f_pieces: Vec<HashMap<Word, LaurentBi<T>>>,
    /// Candidates whose certificate failed before the selected one, by root.
    pub rejected: BTreeMap<usize, Vec<Word>>,
}

/// Intermediate record while searching.
struct Found<T: Scalar> {
    root: LatticeVec,
    word: Word,
    factors: Option<(Word, Word)>,
    e: BElement<LaurentBi<T>>,
    f: BElement<LaurentBi<T>>,
    e_image: ShuffleVec<LaurentBi<T>>,
    f_image: ShuffleVec<LaurentBi<T>>,
}

fn sub_shuffles<T: Scalar>(
    rd: &RootDatum,
    x: &ShuffleVec<LaurentBi<T>>,
    y: &ShuffleVec<LaurentBi<T>>,
    k: &LaurentBi<T>,
) -> ShuffleVec<LaurentBi<T>> {
    let mut out = x.shuffle(rd, y);
    out.add_scaled(&y.shuffle(rd, x), &k.neg_ref());
    out
}

impl<T: Scalar> Pbw<T> {
    /// Finds the good Lyndon words by increasing height and builds the root vectors.
    ///
    /// For a root `β`, the candidates are the concatenations `l(β1) l(β2)` with
    /// `β1 + β2 = β` and `l(β1) < l(β2)`, tried from the lexicographically
    /// largest down. A candidate `w` is accepted when the largest word in the
    /// support of the shuffle image of `F_w` is `w` itself: then `F_w` pairs to
    /// zero with every larger word and not with `e_w`, so `e_w` is not a
    /// combination of larger words modulo the Serre ideal.
    pub fn build(rd: &RootDatum) -> Result<Self> {
        let n = rd.rank();
        let mut found: HashMap<LatticeVec, Found<T>> = HashMap::new();
        let mut by_word: HashMap<Word, LatticeVec> = HashMap::new();
        let mut rejected_by_root: BTreeMap<LatticeVec, Vec<Word>> = BTreeMap::new();
        for beta in &rd.positive_roots {
            if beta.height() == 1 {
                let i = beta.coords().iter().position(|&x| x == 1).unwrap() + 1;
                let word = Word::letter(i);
                let e = BElement::generator(Side::E, n, i);
                let f = BElement::generator(Side::F, n, i);
                found.insert(
                    beta.clone(),
                    Found {
                        root: beta.clone(),
                        word: word.clone(),
                        factors: None,
                        e_image: ShuffleVec::word(Side::E, word.clone()),
                        f_image: ShuffleVec::word(Side::F, word.clone()),
                        e,
                        f,
                    },
                );
                by_word.insert(word, beta.clone());
                continue;
            }
            let mut cands: Vec<Word> = Vec::new();
            for (g1, f1) in &found {
                let rest = beta - g1;
                if let Some(f2) = found.get(&rest) {
                    if f1.word < f2.word {
                        cands.push(f1.word.concat(&f2.word));
                    }
                }
            }
            cands.sort();
            cands.dedup();
            let mut chosen = None;
            for cand in cands.into_iter().rev() {
                let (u, v) = std_factorize(&cand)?;
                let (Some(ru), Some(rv)) = (by_word.get(&u), by_word.get(&v)) else {
                    rejected_by_root.entry(beta.clone()).or_default().push(cand);
                    continue;
                };
                let (fu, fv) = (&found[ru], &found[rv]);
                // F-side: F_v F_u - <ω'_ζ, ω_η>^{-1} F_u F_v
                let (a, b) = rd.torus_exp(&fu.root, &fv.root);
                let f_image = sub_shuffles(rd, &fv.f_image, &fu.f_image, &LaurentBi::monomial(-a, -b));
                if f_image.terms().keys().next_back() != Some(&cand) {
                    rejected_by_root.entry(beta.clone()).or_default().push(cand);
                    continue;
                }
                // E-side: E_u E_v - <ω'_η, ω_ζ> E_v E_u
                let (a, b) = rd.torus_exp(&fv.root, &fu.root);
                let e_image = sub_shuffles(rd, &fu.e_image, &fv.e_image, &LaurentBi::monomial(a, b));
                let e = bracket(rd, &fu.e, &fv.e)?;
                let f = bracket(rd, &fu.f, &fv.f)?;
                chosen = Some(Found {
                    root: beta.clone(),
                    word: cand,
                    factors: Some((u, v)),
                    e,
                    f,
                    e_image,
                    f_image,
                });
                break;
            }
            let Some(c) = chosen else {
                return Err(Error::NoGoodWord(beta.to_vec()));
            };
            by_word.insert(c.word.clone(), beta.clone());
            found.insert(beta.clone(), c);
        }
        let mut list: Vec<Found<T>> = found.into_values().collect();
        list.sort_by(|a, b| a.word.cmp(&b.word));
        let word_index: HashMap<Word, usize> = list.iter().enumerate().map(|(k, f)| (f.word.clone(), k)).collect();
        let mut roots = Vec::with_capacity(list.len());
        for (index, f) in list.into_iter().enumerate() {
            let factors = f.factors.as_ref().map(|(u, v)| (word_index[u], word_index[v]));
            let h = f.word.len() as u32;
            let mut acc = LaurentBi::zero();
            for (w, c) in f.f_expansion_terms() {
                acc += &(&c * &f.e_image.coeff(&w));
            }
            let diagonal = RatFn::new(acc, s_minus_r::<T>().pow(h));
            roots.push(RootVector {
                index,
                root: f.root,
                word: f.word,
                factors,
                e_expansion: f.e,
                f_expansion: f.f,
                e_image: f.e_image,
                f_image: f.f_image,
                diagonal,
            });
        }
        let by_root = roots.iter().map(|r| (r.root.clone(), r.index)).collect();
        let pieces = |side: Side| -> Vec<HashMap<Word, LaurentBi<T>>> {
            roots
                .iter()
                .map(|r| {
                    let x = if side == Side::E { &r.e_expansion } else { &r.f_expansion };
                    x.terms().iter().map(|(t, c)| (t.word.clone(), c.clone())).collect()
                })
                .collect()
        };
        let e_pieces = pieces(Side::E);
        let f_pieces = pieces(Side::F);
        let rejected = rejected_by_root
            .into_iter()
            .map(|(beta, ws)| (roots.iter().position(|r| r.root == beta).unwrap(), ws))
            .collect();
        Ok(Pbw { rd: rd.clone(), roots, by_root, by_word: word_index, e_pieces, f_pieces, rejected })
    }

    pub fn root_datum(&self) -> &RootDatum {
        &self.rd
    }

    /// Root vectors in convex order.
    pub fn roots(&self) -> &[RootVector<T>] {
        &self.roots
    }

    pub fn index_of_root(&self, beta: &LatticeVec) -> Option<usize> {
        self.by_root.get(beta).copied()
    }

    pub fn index_of_word(&self, w: &Word) -> Option<usize> {
        self.by_word.get(w).copied()
    }

    /// Good words in convex order, paired with their roots.
    pub fn good_words(&self) -> Vec<(LatticeVec, Word)> {
        self.roots.iter().map(|r| (r.root.clone(), r.word.clone())).collect()
    }

    pub fn weight_of(&self, m: &PbwMonomial) -> LatticeVec {
        let mut w = self.rd.zero();
        for &(i, n) in &m.0 {
            w = &w + &self.roots[i].root.scaled(n as i32);
        }
        w
    }

    pub fn height_of(&self, m: &PbwMonomial) -> u32 {
        m.0.iter().map(|&(i, n)| n * self.roots[i].word.len() as u32).sum()
    }

    /// All PBW monomials of weight `mu`, in a fixed order.
    pub fn monomials(&self, mu: &LatticeVec) -> Vec<PbwMonomial> {
        let mut out = Vec::new();
        if !mu.is_nonnegative() {
            return out;
        }
        fn rec<T: Scalar>(
            pbw: &Pbw<T>,
            k: usize,
            left: &LatticeVec,
            cur: &mut Vec<(usize, u32)>,
            out: &mut Vec<PbwMonomial>,
        ) {
            if left.is_zero() {
                out.push(PbwMonomial(cur.clone()));
                return;
            }
            for i in (0..k).rev() {
                let beta = &pbw.roots[i].root;
                let mut rem = left.clone();
                let mut n = 0;
                while beta.le(&rem) {
                    rem = &rem - beta;
                    n += 1;
                    cur.push((i, n));
                    rec(pbw, i, &rem, cur, out);
                    cur.pop();
                }
            }
        }
        rec(self, self.roots.len(), mu, &mut Vec::new(), &mut out);
        out
    }

    /// `E_M` or `F_M` expanded into words.
    pub fn expand(&self, side: Side, m: &PbwMonomial) -> BElement<LaurentBi<T>> {
        let mut acc = BElement::one(side, self.rd.rank());
        for i in m.factor_sequence() {
            let r = &self.roots[i];
            let x = if side == Side::E { &r.e_expansion } else { &r.f_expansion };
            acc = acc.mul(&self.rd, x).expect("same side");
        }
        acc
    }

    /// Shuffle image of `E_M` (or `F_M`).
    pub fn image(&self, side: Side, m: &PbwMonomial) -> ShuffleVec<LaurentBi<T>> {
        let mut acc = ShuffleVec::one(side);
        for i in m.factor_sequence() {
            let r = &self.roots[i];
            acc = acc.shuffle(&self.rd, if side == Side::E { &r.e_image } else { &r.f_image });
        }
        acc
    }

    /// `<F_M, E_M>` from the single-root values: `Π <F_β,E_β>^n Ψ_n / (1 - rs^{-1})^n`.
    pub fn diagonal(&self, m: &PbwMonomial) -> RatFn<T> {
        let one_minus = &LaurentBi::<T>::one() - &LaurentBi::monomial(1, -1);
        let mut acc = RatFn::one();
        for &(i, n) in &m.0 {
            let p = RatFn::new(psi::<T>(n), one_minus.pow(n));
            acc = &acc * &(&self.roots[i].diagonal.pow(n as i32) * &p);
        }
        acc
    }

    pub fn label(&self, m: &PbwMonomial) -> String {
        if m.is_one() {
            return "1".to_string();
        }
        let parts: Vec<String> = m
            .0
            .iter()
            .map(|&(i, n)| {
                let w = &self.roots[i].word;
                if n == 1 {
                    format!("E_{w}")
                } else {
                    format!("E_{w}^{n}")
                }
            })
            .collect();
        parts.join(" ")
    }
}

impl<T: Scalar> Found<T> {
    fn f_expansion_terms(&self) -> Vec<(Word, LaurentBi<T>)> {
        self.f.terms().iter().map(|(t, c)| (t.word.clone(), c.clone())).collect()
    }
}

/// Serialized view of a root vector for reports.
#[derive(Serialize)]
pub struct RootVectorJson {
    pub index: usize,
    pub root: Vec<i32>,
    pub word: String,
    pub bracketing: String,
}

impl<T: Scalar> RootVector<T> {
    pub fn to_json(&self) -> RootVectorJson {
        RootVectorJson {
            index: self.index + 1,
            root: self.root.to_vec(),
            word: self.word.to_string(),
            bracketing: crate::words::LyndonTree::build(&self.word).map(|t| t.bracketed()).unwrap_or_default(),
        }
    }
}

impl fmt::Display for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(|(i, n)| format!("{}^{}", i + 1, n)).collect();
        write!(f, "{}", parts.join("."))
    }
}

#[cfg(test)]
mod tests;
