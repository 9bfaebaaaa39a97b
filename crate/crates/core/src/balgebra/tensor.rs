use std::collections::BTreeMap;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use super::element::{term_product, BElement, Side, Term};
use crate::coeffs::Coefficient;
use crate::rootsystem::{LatticeVec, RootDatum};

/// Sparse sum of pure tensors `t_1 ⊗ ... ⊗ t_n`, each factor a torus-decorated word.
#[derive(Clone, PartialEq, Debug)]
pub struct TensorElement<C> {
    sides: Vec<Side>,
    rank: usize,
    terms: BTreeMap<Vec<Term>, C>,
}

impl<C: Coefficient> TensorElement<C> {
    pub fn zero(sides: Vec<Side>, rank: usize) -> Self {
        TensorElement { sides, rank, terms: BTreeMap::new() }
    }

    pub fn one(sides: Vec<Side>, rank: usize) -> Self {
        let n = sides.len();
        let mut x = Self::zero(sides, rank);
        x.add_term(vec![Term::unit(rank); n], C::one());
        x
    }

    /// `x_1 ⊗ ... ⊗ x_n`
    pub fn pure(factors: &[&BElement<C>]) -> Self {
        let rank = factors[0].rank();
        let sides = factors.iter().map(|f| f.side()).collect();
        let mut acc: Vec<(Vec<Term>, C)> = vec![(Vec::new(), C::one())];
        for f in factors {
            let mut next = Vec::with_capacity(acc.len() * f.len());
            for (k, c) in &acc {
                for (t, d) in f.terms() {
                    let mut key = k.clone();
                    key.push(t.clone());
                    next.push((key, c.mul_ref(d)));
                }
            }
            acc = next;
        }
        let mut x = Self::zero(sides, rank);
        for (k, c) in acc {
            x.add_term(k, c);
        }
        x
    }

    pub fn sides(&self) -> &[Side] {
        &self.sides
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn arity(&self) -> usize {
        self.sides.len()
    }

    pub fn terms(&self) -> &BTreeMap<Vec<Term>, C> {
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

    pub fn add_term(&mut self, k: Vec<Term>, c: C) {
        debug_assert_eq!(k.len(), self.sides.len());
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(v) => {
                *v = v.add_ref(&c);
                if v.is_zero() {
                    self.terms.remove(&k);
                }
            }
            None => {
                self.terms.insert(k, c);
            }
        }
    }

    pub fn add_scaled(&mut self, o: &Self, k: &C) {
        debug_assert_eq!(self.sides, o.sides);
        for (t, c) in &o.terms {
            self.add_term(t.clone(), c.mul_ref(k));
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut x = self.clone();
        x.add_scaled(o, &C::from_int(-1));
        x
    }

    pub fn scale(&self, k: &C) -> Self {
        let mut x = Self::zero(self.sides.clone(), self.rank);
        x.add_scaled(self, k);
        x
    }

    /// Factorwise product.
    pub fn mul(&self, rd: &RootDatum, o: &Self) -> Self {
        assert_eq!(self.sides, o.sides, "tensor product of different shapes");
        let mut out = Self::zero(self.sides.clone(), self.rank);
        for (x, cx) in &self.terms {
            for (y, cy) in &o.terms {
                let (mut a, mut b) = (0, 0);
                let mut key = Vec::with_capacity(x.len());
                for ((tx, ty), side) in x.iter().zip(y).zip(&self.sides) {
                    let ((da, db), t) = term_product(rd, *side, tx, ty);
                    a += da;
                    b += db;
                    key.push(t);
                }
                out.add_term(key, cx.mul_ref(cy).mul_monomial(a, b));
            }
        }
        out
    }

    /// Applies a linear map given on terms to factor `k`, possibly changing its arity.
    pub fn map_factor(&self, k: usize, new_sides: &[Side], f: impl Fn(&Term) -> TensorElement<C>) -> Self {
        let mut sides = self.sides[..k].to_vec();
        sides.extend_from_slice(new_sides);
        sides.extend_from_slice(&self.sides[k + 1..]);
        let mut out = Self::zero(sides, self.rank);
        for (key, c) in &self.terms {
            let img = f(&key[k]);
            for (ik, ic) in img.terms() {
                let mut nk = key[..k].to_vec();
                nk.extend(ik.iter().cloned());
                nk.extend(key[k + 1..].iter().cloned());
                out.add_term(nk, c.mul_ref(ic));
            }
        }
        out
    }

    /// Reverses the tensor factors.
    pub fn flip(&self) -> Self {
        let mut sides = self.sides.clone();
        sides.reverse();
        let mut out = Self::zero(sides, self.rank);
        for (k, c) in &self.terms {
            let mut nk = k.clone();
            nk.reverse();
            out.add_term(nk, c.clone());
        }
        out
    }

    /// Multiplies all factors together (all on one side).
    pub fn multiply_out(&self, rd: &RootDatum) -> BElement<C> {
        let side = self.sides[0];
        assert!(self.sides.iter().all(|s| *s == side), "multiplying factors of different sides");
        let mut out = BElement::zero(side, self.rank);
        for (k, c) in &self.terms {
            let mut t = Term::unit(self.rank);
            let (mut a, mut b) = (0, 0);
            for f in k {
                let ((da, db), nt) = term_product(rd, side, &t, f);
                a += da;
                b += db;
                t = nt;
            }
            out.add_term(t, c.mul_monomial(a, b));
        }
        out
    }

    /// Groups terms by the torus factors of all components.
    pub fn torus_signature(k: &[Term]) -> Vec<LatticeVec> {
        k.iter().map(|t| t.torus.clone()).collect()
    }
}

#[derive(Serialize)]
struct FactorJson<'a> {
    torus: &'a LatticeVec,
    word: String,
}

#[derive(Serialize)]
struct TensorTermJson<'a, C> {
    coeff: &'a C,
    factors: Vec<FactorJson<'a>>,
}

impl<C: Coefficient + Serialize> Serialize for TensorElement<C> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (k, c) in &self.terms {
            let factors = k.iter().map(|t| FactorJson { torus: &t.torus, word: t.word.to_string() }).collect();
            seq.serialize_element(&TensorTermJson { coeff: c, factors })?;
        }
        seq.end()
    }
}
