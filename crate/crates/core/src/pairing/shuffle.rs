//! Twisted shuffle images of the two halves.
//!
//! `Ω(x)_w = (s-r)^{|w|} <f_w, x>` for torus-free E-side `x`, and
//! `Ω'(y)_u = (s-r)^{|u|} <y, e_u>` for torus-free F-side `y`. Both are
//! algebra maps into a shuffle algebra whose product picks up one matrix
//! entry each time a letter of the right factor overtakes a letter of the
//! left factor. Their kernels are exactly the Serre ideals.

use std::collections::BTreeMap;

use crate::balgebra::{BElement, Side};
use crate::coeffs::{Coefficient, Exp};
use crate::rootsystem::RootDatum;
use crate::words::Word;

/// Sparse linear combination of words in the shuffle algebra.
#[derive(Clone, PartialEq, Debug)]
pub struct ShuffleVec<C> {
    side: Side,
    terms: BTreeMap<Word, C>,
}

impl<C: Coefficient> ShuffleVec<C> {
    pub fn zero(side: Side) -> Self {
        ShuffleVec { side, terms: BTreeMap::new() }
    }

    pub fn word(side: Side, w: Word) -> Self {
        let mut x = Self::zero(side);
        x.add_term(w, C::one());
        x
    }

    pub fn one(side: Side) -> Self {
        Self::word(side, Word::empty())
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn terms(&self) -> &BTreeMap<Word, C> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> C {
        self.terms.get(w).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, w: Word, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(v) => {
                *v = v.add_ref(&c);
                if v.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn add_scaled(&mut self, o: &Self, k: &C) {
        for (w, c) in &o.terms {
            self.add_term(w.clone(), c.mul_ref(k));
        }
    }

    pub fn map_coeffs<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> ShuffleVec<D> {
        let mut out = ShuffleVec::zero(self.side);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c));
        }
        out
    }

    /// Twisted shuffle product.
    pub fn shuffle(&self, rd: &RootDatum, o: &Self) -> Self {
        let mut out = Self::zero(self.side);
        for (u, cu) in &self.terms {
            for (v, cv) in &o.terms {
                let c = cu.mul_ref(cv);
                for (w, (a, b)) in shuffle_words(rd, self.side, u, v) {
                    out.add_term(w, c.mul_monomial(a, b));
                }
            }
        }
        out
    }
}

/// All interleavings of `u` and `v` with their twist exponents (repeats not merged).
pub fn shuffle_words(rd: &RootDatum, side: Side, u: &Word, v: &Word) -> Vec<(Word, Exp)> {
    let (u, v) = (u.letters(), v.letters());
    // twist[j][i]: exponent when v_j overtakes u_i
    let twist = |b: u8, a: u8| -> Exp {
        match side {
            Side::E => rd.simple_pair_exp(b as usize, a as usize),
            Side::F => rd.simple_pair_exp(a as usize, b as usize),
        }
    };
    // suffix sums: cost of v_j overtaking u_i..
    let mut over = vec![vec![(0, 0); u.len() + 1]; v.len()];
    for (j, &b) in v.iter().enumerate() {
        for i in (0..u.len()).rev() {
            let (x, y) = twist(b, u[i]);
            let (px, py) = over[j][i + 1];
            over[j][i] = (px + x, py + y);
        }
    }
    let mut out = Vec::new();
    let mut buf = Vec::with_capacity(u.len() + v.len());
    fn rec(
        u: &[u8],
        v: &[u8],
        i: usize,
        j: usize,
        acc: Exp,
        over: &[Vec<Exp>],
        buf: &mut Vec<u8>,
        out: &mut Vec<(Word, Exp)>,
    ) {
        if i == u.len() && j == v.len() {
            out.push((Word::from_letters(buf), acc));
            return;
        }
        if i < u.len() {
            buf.push(u[i]);
            rec(u, v, i + 1, j, acc, over, buf, out);
            buf.pop();
        }
        if j < v.len() {
            let (x, y) = over[j][i];
            buf.push(v[j]);
            rec(u, v, i, j + 1, (acc.0 + x, acc.1 + y), over, buf, out);
            buf.pop();
        }
    }
    rec(u, v, 0, 0, (0, 0), &over, &mut buf, &mut out);
    out
}

/// Image of a single word: the iterated shuffle of its letters.
pub fn omega_word<C: Coefficient>(rd: &RootDatum, side: Side, u: &Word) -> ShuffleVec<C> {
    let mut acc = ShuffleVec::one(side);
    for &l in u.letters() {
        acc = acc.shuffle(rd, &ShuffleVec::word(side, Word::from_letters(&[l])));
    }
    acc
}

/// Image of the torus-free part of `x`; torus factors are ignored, so call per torus block.
pub fn omega<C: Coefficient>(rd: &RootDatum, x: &BElement<C>) -> ShuffleVec<C> {
    let mut out = ShuffleVec::zero(x.side());
    for (t, c) in x.terms() {
        out.add_scaled(&omega_word(rd, x.side(), &t.word), c);
    }
    out
}
