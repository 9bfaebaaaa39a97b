//! Straightening relations between root vectors.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::Pbw;
use crate::coeffs::{LaurentBi, RatFn};
use crate::error::Result;
use crate::scalar::Scalar;

/// Normal form of `E_a E_b - <ω'_{β_b}, ω_{β_a}> E_b E_a` for convex positions `a < b`.
#[derive(Clone, Debug, Serialize)]
#[serde(bound = "")]
pub struct LsRelation<T: Scalar> {
    /// 1-based convex positions.
    pub a: usize,
    pub b: usize,
    pub left_word: String,
    pub right_word: String,
    pub scalar: RatFn<T>,
    pub expansion: BTreeMap<String, RatFn<T>>,
    /// Number of PBW monomials of the weight, the size of the full Gram system.
    pub gram_size: u128,
    /// Whether the diagonal shortcut failed and the full system was solved.
    pub full_solve: bool,
    /// Monomials with a root outside the open interval `(a, b)`.
    pub violations: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(bound = "")]
pub struct LsTable<T: Scalar> {
    pub max_height: i32,
    pub nonroot_cap: i32,
    pub relations: Vec<LsRelation<T>>,
    pub largest_gram: u128,
    pub full_solves: usize,
    pub violations: usize,
}

impl<T: Scalar> Pbw<T> {
    /// All pairs `a < b` whose weight sum has height at most `max_height`
    /// (root sums) or `nonroot_cap` (other sums).
    pub fn ls_table(&self, max_height: i32, nonroot_cap: i32) -> Result<LsTable<T>> {
        let n = self.roots.len();
        let mut pairs = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                let sum = &self.roots[a].root + &self.roots[b].root;
                let cap = if self.rd.is_root(&sum) { max_height } else { nonroot_cap };
                if sum.height() <= cap {
                    pairs.push((a, b));
                }
            }
        }
        let relations = pairs
            .par_iter()
            .map(|&(a, b)| self.ls_relation(a, b))
            .collect::<Result<Vec<_>>>()?;
        Ok(LsTable {
            max_height,
            nonroot_cap,
            largest_gram: relations.iter().map(|r| r.gram_size).max().unwrap_or(0),
            full_solves: relations.iter().filter(|r| r.full_solve).count(),
            violations: relations.iter().map(|r| r.violations.len()).sum(),
            relations,
        })
    }

    pub fn ls_relation(&self, a: usize, b: usize) -> Result<LsRelation<T>> {
        let (ra, rb) = (&self.roots[a], &self.roots[b]);
        let (x, y) = self.rd.torus_exp(&rb.root, &ra.root);
        let mut image = ra.e_image.shuffle(&self.rd, &rb.e_image);
        image.add_scaled(&rb.e_image.shuffle(&self.rd, &ra.e_image), &LaurentBi::monomial(x, y).scale(&T::from_i64(-1)));
        let weight = &ra.root + &rb.root;
        let (nf, full_solve) = self.normal_form_traced(&image, Some(weight.clone()))?;
        let violations = nf
            .keys()
            .filter(|m| m.0.iter().any(|&(i, _)| i <= a || i >= b))
            .map(|m| self.label(m))
            .collect();
        Ok(LsRelation {
            a: a + 1,
            b: b + 1,
            left_word: ra.word.to_string(),
            right_word: rb.word.to_string(),
            scalar: RatFn::monomial(x, y),
            expansion: nf.iter().map(|(m, c)| (self.label(m), c.clone())).collect(),
            gram_size: self.rd.kostant(&weight),
            full_solve,
            violations,
        })
    }
}
