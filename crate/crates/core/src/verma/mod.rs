//! Truncated Verma modules over the F-side PBW basis and the R-matrix
//! `R = Θ ∘ f̃ ∘ P` acting between two of them.
//!
//! Highest weights may have rational coordinates. All module coefficients
//! then live in `Q(r^{1/K}, s^{1/K})`; they are stored as rational
//! functions in `R = r^{1/K}`, `S = s^{1/K}`, and every coefficient coming
//! from the algebra itself is inflated by `r -> R^K`, `s -> S^K`.

mod rmatrix;

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::balgebra::{BElement, Side, Term};
use crate::coeffs::{LaurentBi, RatFn};
use crate::error::{Error, Result};
use crate::pbw::{NormalForm, Pbw, PbwMonomial};
use crate::rootsystem::{LatticeVec, RootDatum};
use crate::scalar::Scalar;
use crate::words::Word;

pub use rmatrix::{act_tensor, rmatrix_check, yang_baxter_check, RMatrix, RmatrixReport, YangBaxterReport};

/// A module vector in the PBW basis `F_M v_λ`.
pub type ModVec<T> = BTreeMap<PbwMonomial, RatFn<T>>;
/// A vector in a tensor product of modules, keyed by one basis monomial per factor.
pub type TensorVec<T> = BTreeMap<Vec<PbwMonomial>, RatFn<T>>;

pub(crate) fn add_into<K: Ord, T: Scalar>(acc: &mut BTreeMap<K, RatFn<T>>, k: K, v: RatFn<T>) {
    if v.is_zero() {
        return;
    }
    match acc.entry(k) {
        Entry::Vacant(e) => {
            e.insert(v);
        }
        Entry::Occupied(mut e) => {
            let s = e.get() + &v;
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

/// Exponents of `<ω'_x, ω_y>` for rational coordinate vectors.
pub(crate) fn pair_exp_rat<T: Scalar>(rd: &RootDatum, x: &[T], y: &[T]) -> (T, T) {
    let (mut a, mut b) = (T::zero(), T::zero());
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            if yj.is_zero() {
                continue;
            }
            let (p, q) = rd.simple_pair_exp(i + 1, j + 1);
            let w = xi.clone() * yj.clone();
            a = a + w.clone() * T::from_i64(p as i64);
            b = b + w * T::from_i64(q as i64);
        }
    }
    (a, b)
}

pub(crate) fn scaled_exp<T: Scalar>(x: &T, k: i32) -> i32 {
    let y = x.clone() * T::from_i64(k as i64);
    assert!(y.is_integer(), "inflation {k} does not clear exponent {x}");
    y.numer_big().to_i32().expect("exponent fits in i32")
}

fn lattice_to<T: Scalar>(v: &LatticeVec) -> Vec<T> {
    v.coords().iter().map(|&c| T::from_i64(c as i64)).collect()
}

/// The inflation `K`: the common denominator of all coordinates.
pub fn inflation_for<T: Scalar>(lambdas: &[&[T]]) -> i32 {
    let mut n = num_bigint::BigInt::from(1);
    for l in lambdas {
        for x in l.iter() {
            n = n.lcm(&x.denom_big());
        }
    }
    n.to_i32().expect("denominator fits in i32")
}

/// `<ω'_x, ω_y>` as a monomial in the inflated variables.
pub fn pair_value<T: Scalar>(rd: &RootDatum, x: &[T], y: &[T], inflation: i32) -> RatFn<T> {
    let (a, b) = pair_exp_rat(rd, x, y);
    RatFn::monomial(scaled_exp(&a, inflation), scaled_exp(&b, inflation))
}

/// Action of the torus element of `side` with exponent `nu` on a vector of weight `mu`:
/// `ω_ν -> <ω'_μ, ω_ν>`, `ω'_ν -> <ω'_ν, ω_μ>^{-1}`.
fn torus_scalar<T: Scalar>(rd: &RootDatum, side: Side, mu: &[T], nu: &LatticeVec, k: i32) -> RatFn<T> {
    let nu = lattice_to::<T>(nu);
    match side {
        Side::E => pair_value(rd, mu, &nu, k),
        Side::F => pair_value(rd, &nu, mu, k).inv().expect("monomial"),
    }
}

/// The character `λ̂` on the torus generators.
#[derive(Clone, Debug)]
pub struct Character<T: Scalar> {
    pub lambda: Vec<T>,
    pub inflation: i32,
    /// `λ̂(ω_i) = <ω'_λ, ω_i>`
    pub omega: Vec<RatFn<T>>,
    /// `λ̂(ω'_i) = <ω'_i, ω_λ>^{-1}`
    pub omega_prime: Vec<RatFn<T>>,
}

pub fn hat_lambda<T: Scalar>(rd: &RootDatum, lambda: &[T], inflation: i32) -> Character<T> {
    let n = rd.rank();
    let omega = (1..=n).map(|i| torus_scalar(rd, Side::E, lambda, &LatticeVec::simple(n, i), inflation)).collect();
    let omega_prime =
        (1..=n).map(|i| torus_scalar(rd, Side::F, lambda, &LatticeVec::simple(n, i), inflation)).collect();
    Character { lambda: lambda.to_vec(), inflation, omega, omega_prime }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    E(usize),
    F(usize),
    Omega(usize),
    OmegaPrime(usize),
}

impl Generator {
    /// Every `e_i, f_i, ω_i, ω'_i`.
    pub fn all(rank: usize) -> Vec<Generator> {
        (1..=rank)
            .flat_map(|i| [Generator::E(i), Generator::F(i), Generator::Omega(i), Generator::OmegaPrime(i)])
            .collect()
    }

    pub fn is_torus(self) -> bool {
        matches!(self, Generator::Omega(_) | Generator::OmegaPrime(_))
    }

    pub fn element<T: Scalar>(self, rank: usize) -> BElement<LaurentBi<T>> {
        match self {
            Generator::E(i) => BElement::generator(Side::E, rank, i),
            Generator::F(i) => BElement::generator(Side::F, rank, i),
            Generator::Omega(i) => BElement::torus(Side::E, LatticeVec::simple(rank, i)),
            Generator::OmegaPrime(i) => BElement::torus(Side::F, LatticeVec::simple(rank, i)),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::E(i) => write!(f, "e{i}"),
            Generator::F(i) => write!(f, "f{i}"),
            Generator::Omega(i) => write!(f, "w{i}"),
            Generator::OmegaPrime(i) => write!(f, "w'{i}"),
        }
    }
}

/// Letter actions on one basis vector, with the truncation-loss flag.
type ActionTable<T> = Vec<Vec<(ModVec<T>, bool)>>;

/// `M(λ)` cut off above height `depth`.
pub struct TruncatedVerma<'a, T: Scalar> {
    pbw: &'a Pbw<T>,
    pub character: Character<T>,
    pub depth: u32,
    basis: Vec<PbwMonomial>,
    index: HashMap<PbwMonomial, usize>,
    weights: Vec<Vec<T>>,
    e_table: ActionTable<T>,
    f_table: ActionTable<T>,
}

fn inflate_nf<T: Scalar>(nf: NormalForm<T>, k: i32) -> ModVec<T> {
    nf.into_iter().map(|(m, c)| (m, c.inflate(k))).collect()
}

impl<'a, T: Scalar> TruncatedVerma<'a, T> {
    pub fn new(pbw: &'a Pbw<T>, lambda: &[T], inflation: i32, depth: u32) -> Result<Self> {
        let rd = pbw.root_datum();
        let n = rd.rank();
        if lambda.len() != n {
            return Err(Error::Parse(format!("highest weight needs {n} coordinates, got {}", lambda.len())));
        }
        let character = hat_lambda(rd, lambda, inflation);
        let mut basis = Vec::new();
        for h in 0..=depth as i32 {
            for mu in rd.weights_of_height(h) {
                basis.extend(pbw.monomials(&mu));
            }
        }
        let index = basis.iter().enumerate().map(|(k, m)| (m.clone(), k)).collect();
        let weights: Vec<Vec<T>> = basis
            .iter()
            .map(|m| {
                let w = lattice_to::<T>(&pbw.weight_of(m));
                lambda.iter().zip(w).map(|(a, b)| a.clone() - b).collect()
            })
            .collect();
        let r_minus_s = RatFn::from_laurent(&LaurentBi::monomial(inflation, 0) - &LaurentBi::monomial(0, inflation));
        let mut word_nf: HashMap<Word, ModVec<T>> = HashMap::new();
        let mut e_table = vec![Vec::with_capacity(basis.len()); n];
        let mut f_table = vec![Vec::with_capacity(basis.len()); n];
        for m in &basis {
            let expansion = pbw.expand(Side::F, m);
            let full = pbw.height_of(m) >= depth;
            for i in 1..=n {
                if full {
                    f_table[i - 1].push((ModVec::new(), true));
                } else {
                    let x = BElement::generator(Side::F, n, i).mul(rd, &expansion)?;
                    f_table[i - 1].push((inflate_nf(pbw.normal_form(&x)?, inflation), false));
                }
                // e_i f_w v = Σ_{w_p = i} f_{w without p} (ω_i - ω'_i)/(r-s) f_{tail} v
                let mut by_word: BTreeMap<Word, RatFn<T>> = BTreeMap::new();
                for (t, c) in expansion.terms() {
                    let l = t.word.letters();
                    for p in 0..l.len() {
                        if l[p] as usize != i {
                            continue;
                        }
                        let tail = lattice_to::<T>(&Word::from_letters(&l[p + 1..]).content(n));
                        let mu: Vec<T> = lambda.iter().zip(tail).map(|(a, b)| a.clone() - b).collect();
                        let simple = LatticeVec::simple(n, i);
                        let k = &torus_scalar(rd, Side::E, &mu, &simple, inflation)
                            - &torus_scalar(rd, Side::F, &mu, &simple, inflation);
                        let k = &(&k / &r_minus_s) * &RatFn::from_laurent(c.inflate(inflation));
                        let mut rest = l[..p].to_vec();
                        rest.extend_from_slice(&l[p + 1..]);
                        add_into(&mut by_word, Word::from_letters(&rest), k);
                    }
                }
                let mut out = ModVec::new();
                for (w, k) in by_word {
                    if !word_nf.contains_key(&w) {
                        let nf = if w.is_empty() {
                            ModVec::from([(PbwMonomial::one(), RatFn::one())])
                        } else {
                            inflate_nf(pbw.normal_form(&BElement::<LaurentBi<T>>::word(Side::F, n, w.clone()))?, inflation)
                        };
                        word_nf.insert(w.clone(), nf);
                    }
                    for (b, v) in &word_nf[&w] {
                        add_into(&mut out, b.clone(), &k * v);
                    }
                }
                e_table[i - 1].push((out, false));
            }
        }
        Ok(TruncatedVerma { pbw, character, depth, basis, index, weights, e_table, f_table })
    }

    pub fn pbw(&self) -> &'a Pbw<T> {
        self.pbw
    }

    pub fn inflation(&self) -> i32 {
        self.character.inflation
    }

    pub fn basis(&self) -> &[PbwMonomial] {
        &self.basis
    }

    /// Weight of the basis vector `F_M v_λ`, i.e. `λ - wt(M)`.
    pub fn weight(&self, m: &PbwMonomial) -> &[T] {
        &self.weights[self.index[m]]
    }

    pub fn highest(&self) -> ModVec<T> {
        ModVec::from([(PbwMonomial::one(), RatFn::one())])
    }

    fn letter(&self, side: Side, i: usize, v: &ModVec<T>) -> (ModVec<T>, bool) {
        let table = if side == Side::E { &self.e_table } else { &self.f_table };
        let mut out = ModVec::new();
        let mut loss = false;
        for (m, c) in v {
            let (img, l) = &table[i - 1][self.index[m]];
            loss |= *l;
            for (b, x) in img {
                add_into(&mut out, b.clone(), c * x);
            }
        }
        (out, loss)
    }

    /// Action of `word · torus` on `side`; the torus part acts first.
    pub fn act_term(&self, side: Side, t: &Term, v: &ModVec<T>) -> (ModVec<T>, bool) {
        let rd = self.pbw.root_datum();
        let k = self.inflation();
        let mut cur: ModVec<T> = if t.torus.is_zero() {
            v.clone()
        } else {
            v.iter()
                .map(|(m, c)| (m.clone(), c * &torus_scalar(rd, side, self.weight(m), &t.torus, k)))
                .collect()
        };
        let mut loss = false;
        for &l in t.word.letters().iter().rev() {
            let (next, lost) = self.letter(side, l as usize, &cur);
            loss |= lost;
            cur = next;
        }
        (cur, loss)
    }

    pub fn act_element(&self, x: &BElement<LaurentBi<T>>, v: &ModVec<T>) -> (ModVec<T>, bool) {
        let mut out = ModVec::new();
        let mut loss = false;
        for (t, c) in x.terms() {
            let (img, l) = self.act_term(x.side(), t, v);
            loss |= l;
            let c = RatFn::from_laurent(c.inflate(self.inflation()));
            for (b, y) in img {
                add_into(&mut out, b, &c * &y);
            }
        }
        (out, loss)
    }

    pub fn act(&self, g: Generator, v: &ModVec<T>) -> (ModVec<T>, bool) {
        self.act_element(&g.element(self.pbw.root_datum().rank()), v)
    }
}
