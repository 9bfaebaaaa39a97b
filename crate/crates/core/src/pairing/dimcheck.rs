//! Rank of the word-level Gram matrix against the Kostant count.
//!
//! Row `w` of the Gram matrix in weight `μ` is `Ω'(f_w)` up to the scalar
//! `(s-r)^{|μ|}`, so rows are built letter by letter along a prefix tree,
//! evaluated at a point `(r, s) = (x, y)` modulo a prime. A specialized rank
//! never exceeds the generic one, and the generic rank is at most the
//! dimension of the quotient; reaching `kostant(μ)` at one point therefore
//! certifies equality.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use super::shuffle::shuffle_words;
use crate::balgebra::Side;
use crate::linalg::{monomial_mod, mulmod, IncrementalRank, PRIME};
use crate::rootsystem::{LatticeVec, RootDatum};
use crate::words::{enumerate_words, Word};

/// Evaluation points tried in turn.
const POINTS: [(u64, u64); 3] = [(1_234_567_891, 987_654_321), (271_828_183, 314_159_265), (17, 23)];

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct GramRank {
    pub weight: Vec<i32>,
    pub words: usize,
    pub rank: usize,
    pub kostant: u128,
}

impl GramRank {
    pub fn pass(&self) -> bool {
        self.rank as u128 == self.kostant
    }
}

type ModVec = HashMap<Word, u64>;

fn extend(rd: &RootDatum, v: &ModVec, letter: u8, point: (u64, u64)) -> ModVec {
    let l = Word::letter(letter as usize);
    let mut out = ModVec::new();
    for (u, c) in v {
        for (w, (a, b)) in shuffle_words(rd, Side::F, u, &l) {
            let e = out.entry(w).or_insert(0);
            *e = (*e + mulmod(*c, monomial_mod(point.0, point.1, a, b))) % PRIME;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn rank_at(rd: &RootDatum, mu: &LatticeVec, words: &[Word], point: (u64, u64)) -> usize {
    let col: HashMap<&Word, usize> = words.iter().enumerate().map(|(k, w)| (w, k)).collect();
    let mut ech = IncrementalRank::new();
    // depth-first over prefixes; `left` is the content still to place
    fn rec(
        rd: &RootDatum,
        v: &ModVec,
        left: &mut LatticeVec,
        point: (u64, u64),
        col: &HashMap<&Word, usize>,
        ech: &mut IncrementalRank,
    ) {
        if left.is_zero() {
            let mut row = vec![0u64; col.len()];
            for (w, c) in v {
                row[col[w]] = *c;
            }
            ech.push(row);
            return;
        }
        for i in 0..left.rank() {
            if left[i] == 0 {
                continue;
            }
            left.add_simple(i + 1, -1);
            let next = extend(rd, v, (i + 1) as u8, point);
            rec(rd, &next, left, point, col, ech);
            left.add_simple(i + 1, 1);
        }
    }
    let start = ModVec::from([(Word::empty(), 1)]);
    rec(rd, &start, &mut mu.clone(), point, &col, &mut ech);
    ech.rank()
}

/// Specialized Gram rank in weight `mu`, maximized over a few points.
pub fn word_gram_rank(rd: &RootDatum, mu: &LatticeVec) -> GramRank {
    let words = enumerate_words(mu);
    let kostant = rd.kostant(mu);
    let mut rank = 0;
    for p in POINTS {
        rank = rank.max(rank_at(rd, mu, &words, p));
        if rank as u128 >= kostant {
            break;
        }
    }
    GramRank { weight: mu.to_vec(), words: words.len(), rank, kostant }
}

/// Every nonnegative weight of height `1..=max_height`.
pub fn gram_rank_suite(rd: &RootDatum, max_height: i32) -> Vec<GramRank> {
    let weights: Vec<LatticeVec> = (1..=max_height).flat_map(|h| rd.weights_of_height(h)).collect();
    weights.par_iter().map(|mu| word_gram_rank(rd, mu)).collect()
}
