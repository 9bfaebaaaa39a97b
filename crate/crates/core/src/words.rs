//! Words over the generator alphabet, Lyndon words and their standard factorization.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::rootsystem::LatticeVec;

/// A word in generator indices `1..=rank`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(pub SmallVec<[u8; 16]>);

impl Word {
    pub fn empty() -> Self {
        Word(SmallVec::new())
    }

    pub fn letter(i: usize) -> Self {
        Word(SmallVec::from_slice(&[i as u8]))
    }

    pub fn from_letters(l: &[u8]) -> Self {
        Word(SmallVec::from_slice(l))
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, o: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&o.0);
        Word(v)
    }

    pub fn content(&self, rank: usize) -> LatticeVec {
        let mut c = LatticeVec::zero(rank);
        for &l in self.0.iter() {
            c.0[l as usize - 1] += 1;
        }
        c
    }

    pub fn slice(&self, from: usize, to: usize) -> Word {
        Word::from_letters(&self.0[from..to])
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&l| l < 10) {
            for l in self.0.iter() {
                write!(f, "{l}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
            write!(f, "{}", parts.join("."))
        }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Digit strings (`"2453"`) or dot-separated indices (`"1.10.2"`).
    fn from_str(s: &str) -> Result<Word> {
        let bad = || Error::Parse(format!("word {s:?}"));
        let letters: Vec<u8> = if s.contains('.') {
            s.split('.').map(|p| p.parse::<u8>().map_err(|_| bad())).collect::<Result<_>>()?
        } else {
            s.chars().map(|c| c.to_digit(10).map(|d| d as u8).ok_or_else(bad)).collect::<Result<_>>()?
        };
        if letters.contains(&0) {
            return Err(bad());
        }
        Ok(Word::from_letters(&letters))
    }
}

/// Shorthand for tests and tables: `w("2453")`.
pub fn w(s: &str) -> Word {
    s.parse().expect("invalid word literal")
}

/// True iff `w` is strictly smaller than each of its proper right factors.
pub fn is_lyndon(w: &[u8]) -> bool {
    !w.is_empty() && (1..w.len()).all(|i| w < &w[i..])
}

/// Standard factorization `w = uv` with `v` the longest proper Lyndon right factor.
pub fn std_factorize(w: &Word) -> Result<(Word, Word)> {
    if w.len() < 2 || !is_lyndon(&w.0) {
        return Err(Error::NotLyndon(w.to_string()));
    }
    let k = (1..w.len()).find(|&i| is_lyndon(&w.0[i..])).expect("a single letter is Lyndon");
    Ok((w.slice(0, k), w.slice(k, w.len())))
}

/// All Lyndon words with the given content, in lexicographic order.
pub fn enumerate_lyndon(content: &LatticeVec) -> Vec<Word> {
    let mut left: Vec<i32> = content.0.to_vec();
    let n: i32 = left.iter().sum();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n as usize);
    fn rec(left: &mut [i32], remaining: i32, cur: &mut Vec<u8>, out: &mut Vec<Word>) {
        if remaining == 0 {
            if is_lyndon(cur) {
                out.push(Word::from_letters(cur));
            }
            return;
        }
        for i in 0..left.len() {
            if left[i] == 0 {
                continue;
            }
            // A Lyndon word starts with its smallest letter.
            if let Some(&first) = cur.first() {
                if (i as u8 + 1) < first {
                    continue;
                }
            }
            left[i] -= 1;
            cur.push(i as u8 + 1);
            rec(left, remaining - 1, cur, out);
            cur.pop();
            left[i] += 1;
        }
    }
    if n > 0 {
        // the first letter must be the smallest letter present
        rec(&mut left, n, &mut cur, &mut out);
    }
    out
}

/// All words with the given content, in lexicographic order.
pub fn enumerate_words(content: &LatticeVec) -> Vec<Word> {
    fn rec(left: &mut [i32], cur: &mut Vec<u8>, out: &mut Vec<Word>) {
        if left.iter().all(|&x| x == 0) {
            out.push(Word::from_letters(cur));
            return;
        }
        for i in 0..left.len() {
            if left[i] > 0 {
                left[i] -= 1;
                cur.push(i as u8 + 1);
                rec(left, cur, out);
                cur.pop();
                left[i] += 1;
            }
        }
    }
    let mut out = Vec::new();
    if content.is_nonnegative() {
        rec(&mut content.0.to_vec(), &mut Vec::new(), &mut out);
    }
    out
}

/// Strict order `u ≺ w`: shorter, or equally long and lexicographically greater.
pub fn precede(u: &Word, w: &Word) -> bool {
    match u.len().cmp(&w.len()) {
        Ordering::Less => true,
        Ordering::Greater => false,
        Ordering::Equal => u > w,
    }
}

/// Binary bracketing tree of a Lyndon word along standard factorizations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LyndonTree {
    pub word: Word,
    pub children: Option<Box<(LyndonTree, LyndonTree)>>,
}

impl LyndonTree {
    pub fn build(w: &Word) -> Result<Self> {
        if w.len() == 1 {
            return Ok(LyndonTree { word: w.clone(), children: None });
        }
        let (u, v) = std_factorize(w)?;
        Ok(LyndonTree {
            word: w.clone(),
            children: Some(Box::new((LyndonTree::build(&u)?, LyndonTree::build(&v)?))),
        })
    }

    /// Bracketed rendering such as `[[2,[4,5]],3]`.
    pub fn bracketed(&self) -> String {
        match &self.children {
            None => self.word.to_string(),
            Some(c) => format!("[{},{}]", c.0.bracketed(), c.1.bracketed()),
        }
    }
}
