//! Brute-force graded dimensions of the free algebra modulo the Serre ideal.

use serde::Serialize;

use super::Pbw;
use crate::balgebra::{adjoint_serre, BElement, Side};
use crate::coeffs::{LaurentBi, RatFn};
use crate::linalg;
use crate::rootsystem::{LatticeVec, RootDatum};
use crate::scalar::Scalar;
use crate::words::{enumerate_words, Word};

/// Per-degree comparison of three independent dimension counts.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct DegreeCount {
    pub degree: i32,
    pub words: usize,
    pub ideal_rank: usize,
    pub quotient_dim: usize,
    pub pbw_monomials: usize,
    pub kostant: u128,
}

/// Rank of the span of `a S b` in each weight, `S` running over the Serre
/// elements and `a`, `b` over all words, for degrees `1..=max_degree`.
pub fn serre_quotient_dims<T: Scalar>(pbw: &Pbw<T>, max_degree: i32) -> Vec<DegreeCount> {
    let rd = pbw.root_datum();
    let n = rd.rank();
    let mut relators: Vec<BElement<LaurentBi<T>>> = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i != j && (i < j || rd.cartan[i - 1][j - 1] != 0) {
                relators.push(adjoint_serre(rd, i, j));
            }
        }
    }
    (1..=max_degree)
        .map(|d| {
            let mut count = DegreeCount {
                degree: d,
                words: 0,
                ideal_rank: 0,
                quotient_dim: 0,
                pbw_monomials: 0,
                kostant: 0,
            };
            for mu in rd.weights_of_height(d) {
                let words = enumerate_words(&mu);
                let rank = ideal_rank(rd, &relators, &mu, &words);
                count.words += words.len();
                count.ideal_rank += rank;
                count.quotient_dim += words.len() - rank;
                count.pbw_monomials += pbw.monomials(&mu).len();
                count.kostant += rd.kostant(&mu);
            }
            count
        })
        .collect()
}

fn ideal_rank<T: Scalar>(
    rd: &RootDatum,
    relators: &[BElement<LaurentBi<T>>],
    mu: &LatticeVec,
    words: &[Word],
) -> usize {
    let col: std::collections::HashMap<&Word, usize> = words.iter().enumerate().map(|(k, w)| (w, k)).collect();
    let mut rows: Vec<Vec<RatFn<T>>> = Vec::new();
    for s in relators {
        let Ok(Some(ws)) = s.weight() else { continue };
        let rest = mu - &ws;
        if !rest.is_nonnegative() {
            continue;
        }
        for (a_content, b_content) in splits(&rest) {
            for a in enumerate_words(&a_content) {
                for b in enumerate_words(&b_content) {
                    let x = BElement::word(Side::E, rd.rank(), a.clone())
                        .mul(rd, s)
                        .and_then(|y| y.mul(rd, &BElement::word(Side::E, rd.rank(), b.clone())))
                        .expect("same side");
                    let mut row = vec![RatFn::zero(); words.len()];
                    for (t, c) in x.terms() {
                        row[col[&t.word]] = RatFn::from_laurent(c.clone());
                    }
                    rows.push(row);
                }
            }
        }
    }
    if rows.is_empty() {
        return 0;
    }
    linalg::rank(&rows)
}

/// All ways to write `v = a + b` with nonnegative parts.
fn splits(v: &LatticeVec) -> Vec<(LatticeVec, LatticeVec)> {
    let mut out = vec![(Vec::new(), Vec::new())];
    for &x in v.coords() {
        let mut next = Vec::new();
        for (a, b) in &out {
            for k in 0..=x {
                let mut a2: Vec<i32> = a.clone();
                let mut b2: Vec<i32> = b.clone();
                a2.push(k);
                b2.push(x - k);
                next.push((a2, b2));
            }
        }
        out = next;
    }
    out.into_iter().map(|(a, b)| (LatticeVec::from_slice(&a), LatticeVec::from_slice(&b))).collect()
}
