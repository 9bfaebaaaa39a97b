//! Shipped reference tables and the term-by-term comparison against them.

use std::collections::BTreeMap;
use std::fmt::Display;

use anyhow::{anyhow, bail, Context, Result};
use serde::{Deserialize, Serialize};
use twoparam::balgebra::coproduct;
use twoparam::pbw::{Pbw, PbwMonomial};
use twoparam::rootsystem::{LatticeVec, RootDatum};
use twoparam::words::Word;
use twoparam::{Laurent, RatFunc, Rational};

const MATRIX_A: &str = include_str!("../golden/e6_matrix_a.json");
const GOOD_WORDS: &str = include_str!("../golden/e6_good_words.json");
const COPRODUCT_2453: &str = include_str!("../golden/e6_coproduct_2453.json");

#[derive(Deserialize)]
struct MatrixFile {
    entries: Vec<Vec<[i32; 2]>>,
}

#[derive(Deserialize)]
struct WordsFile {
    groups: Vec<Vec<String>>,
}

#[derive(Deserialize)]
pub struct CoproductFile {
    pub root_word: String,
    pub terms: Vec<CoproductTerm>,
}

#[derive(Clone, Deserialize)]
pub struct CoproductTerm {
    /// `[c, a, b]` for `c r^a s^b`.
    pub coefficient: Vec<[i64; 3]>,
    pub left: Factor,
    pub right: Factor,
}

#[derive(Clone, Deserialize)]
pub struct Factor {
    pub root_vectors: Vec<String>,
    pub torus: Vec<i32>,
}

#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq)]
pub struct Mismatch {
    pub key: String,
    pub computed: String,
    pub golden: String,
}

#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq)]
pub struct GoldenDiff {
    pub missing: Vec<String>,
    pub extra: Vec<String>,
    pub mismatched: Vec<Mismatch>,
}

impl GoldenDiff {
    pub fn is_empty(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty() && self.mismatched.is_empty()
    }
}

/// Keys only in the golden table are missing, keys only in the computed one are extra.
pub fn golden_diff<V: PartialEq + Display>(computed: &BTreeMap<String, V>, golden: &BTreeMap<String, V>) -> GoldenDiff {
    let mut d = GoldenDiff::default();
    for (k, g) in golden {
        match computed.get(k) {
            None => d.missing.push(k.clone()),
            Some(c) if c != g => {
                d.mismatched.push(Mismatch { key: k.clone(), computed: c.to_string(), golden: g.to_string() })
            }
            Some(_) => {}
        }
    }
    d.extra = computed.keys().filter(|k| !golden.contains_key(*k)).cloned().collect();
    d
}

fn entry_key(i: usize, j: usize) -> String {
    format!("A[{i}][{j}]")
}

pub fn matrix_table(rd: &RootDatum) -> BTreeMap<String, Laurent> {
    let m = rd.pairing_matrix::<Rational>();
    let mut out = BTreeMap::new();
    for (i, row) in m.into_iter().enumerate() {
        for (j, x) in row.into_iter().enumerate() {
            out.insert(entry_key(i + 1, j + 1), x);
        }
    }
    out
}

pub fn golden_matrix() -> Result<BTreeMap<String, Laurent>> {
    let f: MatrixFile = serde_json::from_str(MATRIX_A).context("matrix golden file")?;
    let mut out = BTreeMap::new();
    for (i, row) in f.entries.iter().enumerate() {
        for (j, [a, b]) in row.iter().enumerate() {
            out.insert(entry_key(i + 1, j + 1), Laurent::monomial(*a, *b));
        }
    }
    Ok(out)
}

fn position_key(k: usize) -> String {
    format!("beta_{k:02}")
}

/// Position in convex order (1-based) to `first letter: word`, so the grouping is compared too.
pub fn good_word_table(pbw: &Pbw<Rational>) -> BTreeMap<String, String> {
    pbw.roots()
        .iter()
        .enumerate()
        .map(|(k, r)| (position_key(k + 1), format!("{}: {}", r.word.letters()[0], r.word)))
        .collect()
}

pub fn golden_good_words() -> Result<BTreeMap<String, String>> {
    let f: WordsFile = serde_json::from_str(GOOD_WORDS).context("good-word golden file")?;
    let mut out = BTreeMap::new();
    let mut k = 0;
    for (g, group) in f.groups.iter().enumerate() {
        for w in group {
            k += 1;
            out.insert(position_key(k), format!("{}: {w}", g + 1));
        }
    }
    Ok(out)
}

pub fn coproduct_golden() -> Result<CoproductFile> {
    serde_json::from_str(COPRODUCT_2453).context("coproduct golden file")
}

fn torus_label(v: &[i32]) -> String {
    if v.iter().all(|&x| x == 0) {
        return String::new();
    }
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!(" w[{}]", parts.join(","))
}

fn term_key(pbw: &Pbw<Rational>, m: &PbwMonomial, mu: &[i32], n: &PbwMonomial, nu: &[i32]) -> String {
    format!("{}{} ⊗ {}{}", pbw.label(m), torus_label(mu), pbw.label(n), torus_label(nu))
}

fn monomial(pbw: &Pbw<Rational>, words: &[String]) -> Result<PbwMonomial> {
    let mut seq = Vec::new();
    for w in words {
        let word: Word = w.parse().map_err(|_| anyhow!("bad word {w}"))?;
        seq.push(pbw.index_of_word(&word).ok_or_else(|| anyhow!("{w} is not a good word"))?);
    }
    if seq.windows(2).any(|p| p[0] < p[1]) {
        bail!("root vectors {words:?} are not in decreasing convex order");
    }
    Ok(PbwMonomial::from_exponents(seq.into_iter().map(|i| (i, 1))))
}

/// Normal form of `Δ(E_w)` keyed by the rendered tensor term.
pub fn coproduct_table(pbw: &Pbw<Rational>, word: &str) -> Result<BTreeMap<String, RatFunc>> {
    let w: Word = word.parse().map_err(|_| anyhow!("bad word {word}"))?;
    let idx = pbw.index_of_word(&w).ok_or_else(|| anyhow!("{word} is not a good word"))?;
    let d = coproduct(pbw.root_datum(), &pbw.roots()[idx].e_expansion);
    let nf = pbw.tensor_normal_form(&d)?;
    Ok(nf
        .into_iter()
        .map(|((m, mu, n, nu), c)| (term_key(pbw, &m, mu.coords(), &n, nu.coords()), c))
        .collect())
}

pub fn coproduct_golden_table(pbw: &Pbw<Rational>, terms: &[CoproductTerm]) -> Result<BTreeMap<String, RatFunc>> {
    let rank = pbw.root_datum().rank();
    let mut out = BTreeMap::new();
    for t in terms {
        for f in [&t.left, &t.right] {
            if f.torus.len() != rank {
                bail!("torus vector {:?} has the wrong length", f.torus);
            }
        }
        let c = Laurent::from_terms(t.coefficient.iter().map(|&[c, a, b]| {
            ((a as i32, b as i32), Rational::from_integer(c.into()))
        }));
        let key = term_key(
            pbw,
            &monomial(pbw, &t.left.root_vectors)?,
            LatticeVec::from_slice(&t.left.torus).coords(),
            &monomial(pbw, &t.right.root_vectors)?,
            LatticeVec::from_slice(&t.right.torus).coords(),
        );
        out.insert(key, RatFunc::from_laurent(c));
    }
    Ok(out)
}
