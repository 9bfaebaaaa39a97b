use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::coeffs::Coefficient;
use crate::error::{Error, Result};
use crate::rootsystem::{LatticeVec, RootDatum};
use crate::words::Word;

/// Which Borel half an element lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Side {
    /// Words in `e_i`, torus `ω`.
    E,
    /// Words in `f_i`, torus `ω'`.
    F,
}

/// A word followed by a torus factor: `e_word ω_torus` or `f_word ω'_torus`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Term {
    pub word: Word,
    pub torus: LatticeVec,
}

impl Term {
    pub fn new(word: Word, torus: LatticeVec) -> Self {
        Term { word, torus }
    }

    pub fn unit(rank: usize) -> Self {
        Term { word: Word::empty(), torus: LatticeVec::zero(rank) }
    }

    pub fn weight(&self, rank: usize) -> LatticeVec {
        self.word.content(rank)
    }
}

/// Product of two terms with the torus pushed right: returns the scalar exponent and the term.
pub(crate) fn term_product(rd: &RootDatum, side: Side, x: &Term, y: &Term) -> ((i32, i32), Term) {
    let rank = rd.rank();
    let e = if y.word.is_empty() || x.torus.is_zero() {
        (0, 0)
    } else {
        let c = y.word.content(rank);
        match side {
            Side::E => rd.torus_exp(&c, &x.torus),
            Side::F => rd.torus_exp(&x.torus, &c),
        }
    };
    (e, Term { word: x.word.concat(&y.word), torus: &x.torus + &y.torus })
}

/// Sparse linear combination of terms on one side.
#[derive(Clone, PartialEq)]
pub struct BElement<C> {
    side: Side,
    rank: usize,
    terms: BTreeMap<Term, C>,
}

impl<C: Coefficient> BElement<C> {
    pub fn zero(side: Side, rank: usize) -> Self {
        BElement { side, rank, terms: BTreeMap::new() }
    }

    pub fn one(side: Side, rank: usize) -> Self {
        Self::from_term(side, rank, Term::unit(rank), C::one())
    }

    pub fn from_term(side: Side, rank: usize, t: Term, c: C) -> Self {
        let mut x = Self::zero(side, rank);
        x.add_term(t, c);
        x
    }

    /// `e_i` or `f_i` (1-based).
    pub fn generator(side: Side, rank: usize, i: usize) -> Self {
        Self::word(side, rank, Word::letter(i))
    }

    pub fn word(side: Side, rank: usize, w: Word) -> Self {
        Self::from_term(side, rank, Term::new(w, LatticeVec::zero(rank)), C::one())
    }

    /// The group-like `ω_μ` or `ω'_μ`.
    pub fn torus(side: Side, mu: LatticeVec) -> Self {
        let rank = mu.rank();
        Self::from_term(side, rank, Term::new(Word::empty(), mu), C::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (Term, C)>>(side: Side, rank: usize, it: I) -> Self {
        let mut x = Self::zero(side, rank);
        for (t, c) in it {
            x.add_term(t, c);
        }
        x
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> &BTreeMap<Term, C> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Term, C> {
        self.terms
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

    pub fn coeff(&self, t: &Term) -> C {
        self.terms.get(t).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, t: Term, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&t) {
            Some(v) => {
                *v = v.add_ref(&c);
                if v.is_zero() {
                    self.terms.remove(&t);
                }
            }
            None => {
                self.terms.insert(t, c);
            }
        }
    }

    fn check_side(&self, o: &Self) -> Result<()> {
        if self.side != o.side {
            return Err(Error::MixedSides);
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.check_side(o)?;
        let mut x = self.clone();
        for (t, c) in &o.terms {
            x.add_term(t.clone(), c.clone());
        }
        Ok(x)
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.neg())
    }

    /// `self + k * o`
    pub fn add_scaled(&mut self, o: &Self, k: &C) {
        debug_assert_eq!(self.side, o.side);
        for (t, c) in &o.terms {
            self.add_term(t.clone(), c.mul_ref(k));
        }
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| c.neg_ref())
    }

    pub fn scale(&self, k: &C) -> Self {
        if k.is_zero() {
            return Self::zero(self.side, self.rank);
        }
        self.map_coeffs(|c| c.mul_ref(k))
    }

    pub fn map_coeffs<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> BElement<D> {
        BElement::from_terms(self.side, self.rank, self.terms.iter().map(|(t, c)| (t.clone(), f(c))))
    }

    /// Product with every torus factor commuted to the right.
    pub fn mul(&self, rd: &RootDatum, o: &Self) -> Result<Self> {
        self.check_side(o)?;
        let mut out = Self::zero(self.side, self.rank);
        for (x, cx) in &self.terms {
            for (y, cy) in &o.terms {
                let ((a, b), t) = term_product(rd, self.side, x, y);
                out.add_term(t, cx.mul_ref(cy).mul_monomial(a, b));
            }
        }
        Ok(out)
    }

    pub fn pow(&self, rd: &RootDatum, n: u32) -> Self {
        let mut acc = Self::one(self.side, self.rank);
        for _ in 0..n {
            acc = acc.mul(rd, self).expect("same side");
        }
        acc
    }

    /// Weight of a homogeneous element; the zero element has no weight.
    pub fn weight(&self) -> Result<Option<LatticeVec>> {
        let mut it = self.terms.keys().map(|t| t.weight(self.rank));
        let Some(w) = it.next() else {
            return Ok(None);
        };
        if it.any(|v| v != w) {
            return Err(Error::Inhomogeneous);
        }
        Ok(Some(w))
    }

    /// Splits by torus factor: `x = Σ_μ x_μ ω_μ` with torus-free `x_μ`.
    pub fn torus_blocks(&self) -> BTreeMap<LatticeVec, BElement<C>> {
        let mut out: BTreeMap<LatticeVec, BElement<C>> = BTreeMap::new();
        for (t, c) in &self.terms {
            out.entry(t.torus.clone())
                .or_insert_with(|| Self::zero(self.side, self.rank))
                .add_term(Term::new(t.word.clone(), LatticeVec::zero(self.rank)), c.clone());
        }
        out
    }

    /// Right multiplication by `ω_μ` (or `ω'_μ`), which needs no reordering.
    pub fn times_torus(&self, mu: &LatticeVec) -> Self {
        Self::from_terms(
            self.side,
            self.rank,
            self.terms.iter().map(|(t, c)| (Term::new(t.word.clone(), &t.torus + mu), c.clone())),
        )
    }
}

impl<C: Coefficient> fmt::Display for BElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let (g, w) = match self.side {
            Side::E => ("e", "w"),
            Side::F => ("f", "w'"),
        };
        let mut first = true;
        for (t, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            if !t.word.is_empty() {
                write!(f, "*{g}{}", t.word)?;
            }
            if !t.torus.is_zero() {
                write!(f, "*{w}{:?}", t.torus)?;
            }
        }
        Ok(())
    }
}

impl<C: Coefficient> fmt::Debug for BElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}[{}]", self.side, self)
    }
}

#[derive(Serialize)]
struct TermJson<'a, C> {
    coeff: &'a C,
    torus: &'a LatticeVec,
    word: String,
}

impl<C: Coefficient + Serialize> Serialize for BElement<C> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (t, c) in &self.terms {
            seq.serialize_element(&TermJson { coeff: c, torus: &t.torus, word: t.word.to_string() })?;
        }
        seq.end()
    }
}
