//! Simply-laced root data and the two-parameter structure constants.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Index, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::coeffs::{Exp, LaurentBi};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Integer vector over the simple-root basis.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LatticeVec(pub SmallVec<[i32; 8]>);

impl LatticeVec {
    pub fn zero(rank: usize) -> Self {
        LatticeVec(SmallVec::from_elem(0, rank))
    }

    /// The simple root `α_i` for a 1-based index `i`.
    pub fn simple(rank: usize, i: usize) -> Self {
        let mut v = Self::zero(rank);
        v.0[i - 1] = 1;
        v
    }

    pub fn from_slice(c: &[i32]) -> Self {
        LatticeVec(SmallVec::from_slice(c))
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn height(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    /// Componentwise `self <= other`.
    pub fn le(&self, other: &Self) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    pub fn scaled(&self, k: i32) -> Self {
        LatticeVec(self.0.iter().map(|x| x * k).collect())
    }

    pub fn add_simple(&mut self, i: usize, k: i32) {
        self.0[i - 1] += k;
    }

    pub fn coords(&self) -> &[i32] {
        &self.0
    }

    pub fn to_vec(&self) -> Vec<i32> {
        self.0.to_vec()
    }
}

impl Index<usize> for LatticeVec {
    type Output = i32;
    fn index(&self, i: usize) -> &i32 {
        &self.0[i]
    }
}

impl Add for &LatticeVec {
    type Output = LatticeVec;
    fn add(self, o: &LatticeVec) -> LatticeVec {
        LatticeVec(self.0.iter().zip(o.0.iter()).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &LatticeVec {
    type Output = LatticeVec;
    fn sub(self, o: &LatticeVec) -> LatticeVec {
        LatticeVec(self.0.iter().zip(o.0.iter()).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &LatticeVec {
    type Output = LatticeVec;
    fn neg(self) -> LatticeVec {
        LatticeVec(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Debug for LatticeVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RootKind {
    A,
    D,
    E,
}

/// A Cartan type such as `E6` or `A2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CartanType {
    pub kind: RootKind,
    pub rank: usize,
}

impl CartanType {
    pub fn new(kind: RootKind, rank: usize) -> Result<Self> {
        let ok = match kind {
            RootKind::A => rank >= 1,
            RootKind::D => rank >= 4,
            RootKind::E => (6..=8).contains(&rank),
        };
        if !ok {
            return Err(Error::UnsupportedType(format!("{kind:?}{rank}")));
        }
        Ok(CartanType { kind, rank })
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.kind, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::UnsupportedType(s.to_string());
        let mut chars = s.chars();
        let kind = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => RootKind::A,
            Some('D') => RootKind::D,
            Some('E') => RootKind::E,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        CartanType::new(kind, rank).map_err(|_| bad())
    }
}

/// Dynkin edges with Bourbaki labeling (1-based).
fn dynkin_edges(t: CartanType) -> Vec<(usize, usize)> {
    let n = t.rank;
    match t.kind {
        RootKind::A => (1..n).map(|i| (i, i + 1)).collect(),
        RootKind::D => {
            let mut e: Vec<_> = (1..n - 1).map(|i| (i, i + 1)).collect();
            e.push((n - 2, n));
            e
        }
        RootKind::E => {
            let mut e = vec![(1, 3), (2, 4)];
            e.extend((3..n).map(|i| (i, i + 1)));
            e
        }
    }
}

/// Root datum together with the exponent data of `<ω'_i, ω_j>`.
#[derive(Clone, Debug)]
pub struct RootDatum {
    pub cartan_type: CartanType,
    pub cartan: Vec<Vec<i32>>,
    /// Sorted by (height, coordinates).
    pub positive_roots: Vec<LatticeVec>,
    pub p: Vec<Vec<i32>>,
    pub q: Vec<Vec<i32>>,
    /// `pair_exp[i][j]` is the exponent pair of `<ω'_{i+1}, ω_{j+1}> = r^{p_ji} s^{-q_ji}`.
    pair_exp: Vec<Vec<Exp>>,
    root_index: HashMap<LatticeVec, usize>,
}

impl RootDatum {
    pub fn build(t: CartanType) -> Self {
        let n = t.rank;
        let mut cartan = vec![vec![0; n]; n];
        for (i, row) in cartan.iter_mut().enumerate() {
            row[i] = 2;
        }
        for (a, b) in dynkin_edges(t) {
            cartan[a - 1][b - 1] = -1;
            cartan[b - 1][a - 1] = -1;
        }
        let (p, q) = structural_constants(&cartan);
        let pair_exp = (0..n)
            .map(|i| (0..n).map(|j| (p[j][i], -q[j][i])).collect())
            .collect();
        let mut rd = RootDatum {
            cartan_type: t,
            cartan,
            positive_roots: Vec::new(),
            p,
            q,
            pair_exp,
            root_index: HashMap::new(),
        };
        rd.positive_roots = rd.close_roots();
        rd.root_index = rd.positive_roots.iter().cloned().enumerate().map(|(k, r)| (r, k)).collect();
        rd
    }

    pub fn from_name(name: &str) -> Result<Self> {
        Ok(Self::build(name.parse()?))
    }

    fn close_roots(&self) -> Vec<LatticeVec> {
        let n = self.rank();
        let mut all: Vec<LatticeVec> = (1..=n).map(|i| LatticeVec::simple(n, i)).collect();
        let mut seen: std::collections::HashSet<LatticeVec> = all.iter().cloned().collect();
        let mut frontier = all.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for r in &frontier {
                for i in 1..=n {
                    let si = LatticeVec::simple(n, i);
                    if self.inner(r, &si) == -1 {
                        let t = r + &si;
                        if seen.insert(t.clone()) {
                            next.push(t);
                        }
                    }
                }
            }
            all.extend(next.iter().cloned());
            frontier = next;
        }
        all.sort_by(|a, b| (a.height(), a).cmp(&(b.height(), b)));
        all
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank
    }

    pub fn simple(&self, i: usize) -> LatticeVec {
        LatticeVec::simple(self.rank(), i)
    }

    pub fn zero(&self) -> LatticeVec {
        LatticeVec::zero(self.rank())
    }

    /// Symmetric form `(μ, ν) = μᵀ C ν`.
    pub fn inner(&self, mu: &LatticeVec, nu: &LatticeVec) -> i32 {
        let mut acc = 0;
        for (i, mi) in mu.0.iter().enumerate() {
            if *mi == 0 {
                continue;
            }
            for (j, nj) in nu.0.iter().enumerate() {
                acc += mi * self.cartan[i][j] * nj;
            }
        }
        acc
    }

    pub fn is_root(&self, v: &LatticeVec) -> bool {
        self.root_index.contains_key(v)
    }

    /// Position in `positive_roots`.
    pub fn root_position(&self, v: &LatticeVec) -> Option<usize> {
        self.root_index.get(v).copied()
    }

    pub fn highest_root(&self) -> &LatticeVec {
        self.positive_roots.last().unwrap()
    }

    /// Exponents of `<ω'_i, ω_j>` for 1-based simple indices.
    pub fn simple_pair_exp(&self, i: usize, j: usize) -> Exp {
        self.pair_exp[i - 1][j - 1]
    }

    /// Exponents of `<ω'_μ, ω_ν>`.
    pub fn torus_exp(&self, mu: &LatticeVec, nu: &LatticeVec) -> Exp {
        let (mut a, mut b) = (0, 0);
        for (i, mi) in mu.0.iter().enumerate() {
            if *mi == 0 {
                continue;
            }
            for (j, nj) in nu.0.iter().enumerate() {
                if *nj == 0 {
                    continue;
                }
                let (x, y) = self.pair_exp[i][j];
                a += mi * nj * x;
                b += mi * nj * y;
            }
        }
        (a, b)
    }

    /// `<ω'_μ, ω_ν>` as a Laurent monomial.
    pub fn torus_pair<T: Scalar>(&self, mu: &LatticeVec, nu: &LatticeVec) -> LaurentBi<T> {
        let (a, b) = self.torus_exp(mu, nu);
        LaurentBi::monomial(a, b)
    }

    /// The pairing matrix, row `i`, column `j` holding `<ω'_i, ω_j>`.
    pub fn pairing_matrix<T: Scalar>(&self) -> Vec<Vec<LaurentBi<T>>> {
        self.pair_exp
            .iter()
            .map(|row| row.iter().map(|&(a, b)| LaurentBi::monomial(a, b)).collect())
            .collect()
    }

    /// Number of multisets of positive roots summing to `mu`.
    pub fn kostant(&self, mu: &LatticeVec) -> u128 {
        if !mu.is_nonnegative() {
            return 0;
        }
        let dims: Vec<usize> = mu.0.iter().map(|&x| x as usize + 1).collect();
        let size: usize = dims.iter().product();
        let index = |v: &[i32]| v.iter().zip(&dims).fold(0usize, |acc, (x, d)| acc * d + *x as usize);
        let mut dp = vec![0u128; size];
        dp[0] = 1;
        let mut cur = vec![0i32; mu.rank()];
        for beta in &self.positive_roots {
            if !beta.le(mu) {
                continue;
            }
            let shift = index(&beta.0);
            // Mixed-radix order visits v - beta before v.
            for k in 0..size {
                let mut rem = k;
                for i in (0..cur.len()).rev() {
                    cur[i] = (rem % dims[i]) as i32;
                    rem /= dims[i];
                }
                if cur.iter().zip(beta.0.iter()).all(|(a, b)| a >= b) {
                    dp[k] += dp[k - shift];
                }
            }
        }
        dp[size - 1]
    }

    /// All nonnegative lattice vectors of the given height, in coordinate order.
    pub fn weights_of_height(&self, h: i32) -> Vec<LatticeVec> {
        fn rec(rank: usize, left: i32, cur: &mut Vec<i32>, out: &mut Vec<LatticeVec>) {
            if cur.len() == rank - 1 {
                cur.push(left);
                out.push(LatticeVec::from_slice(cur));
                cur.pop();
                return;
            }
            for x in (0..=left).rev() {
                cur.push(x);
                rec(rank, left - x, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(self.rank(), h, &mut Vec::new(), &mut out);
        out
    }
}

/// `p`, `q` exponent matrices from a simply-laced Cartan matrix: diagonal
/// `p = q = 1`; adjacent `i < j` gives `p = 0, q = -1`; adjacent `i > j`
/// gives `p = -1, q = 0`; orthogonal pairs are zero.
pub fn structural_constants(cartan: &[Vec<i32>]) -> (Vec<Vec<i32>>, Vec<Vec<i32>>) {
    let n = cartan.len();
    let mut p = vec![vec![0; n]; n];
    let mut q = vec![vec![0; n]; n];
    for i in 0..n {
        for j in 0..n {
            if i == j {
                p[i][j] = 1;
                q[i][j] = 1;
            } else if cartan[i][j] == -1 {
                if i < j {
                    q[i][j] = -1;
                } else {
                    p[i][j] = -1;
                }
            }
        }
    }
    (p, q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::Ratio;

    type Q = Ratio<BigInt>;

    fn e6() -> RootDatum {
        RootDatum::from_name("E6").unwrap()
    }

    fn v(c: &[i32]) -> LatticeVec {
        LatticeVec::from_slice(c)
    }

    #[test]
    fn root_counts() {
        let rd = e6();
        assert_eq!(rd.positive_roots.len(), 36);
        assert_eq!(rd.highest_root().height(), 11);
        assert_eq!(rd.highest_root(), &v(&[1, 2, 2, 3, 2, 1]));
        let a2 = RootDatum::from_name("A2").unwrap();
        assert_eq!(a2.positive_roots, vec![v(&[0, 1]), v(&[1, 0]), v(&[1, 1])]);
        for n in 1..6 {
            let rd = RootDatum::from_name(&format!("A{n}")).unwrap();
            assert_eq!(rd.positive_roots.len(), n * (n + 1) / 2);
        }
        assert_eq!(RootDatum::from_name("D4").unwrap().positive_roots.len(), 12);
        assert_eq!(RootDatum::from_name("E7").unwrap().positive_roots.len(), 63);
        assert_eq!(RootDatum::from_name("E8").unwrap().positive_roots.len(), 120);
    }

    #[test]
    fn unsupported() {
        assert!("D3".parse::<CartanType>().is_err());
        assert!("E9".parse::<CartanType>().is_err());
        assert!("B2".parse::<CartanType>().is_err());
    }

    #[test]
    fn e6_cartan_and_constants() {
        let rd = e6();
        assert_eq!(rd.cartan[0][2], -1);
        assert_eq!(rd.cartan[0][1], 0);
        // (i, j) = (3, 1)
        assert_eq!((rd.p[2][0], rd.q[2][0]), (-1, 0));
        assert_eq!((rd.p[0][2], rd.q[0][2]), (0, -1));
        let a1 = rd.simple(1);
        let a3 = rd.simple(3);
        assert_eq!(rd.torus_pair::<Q>(&a1, &a3), LaurentBi::monomial(-1, 0));
        assert_eq!(rd.torus_pair::<Q>(&a3, &a1), LaurentBi::monomial(0, 1));
        assert_eq!(rd.torus_pair::<Q>(&a1, &a1), LaurentBi::monomial(1, -1));
        assert_eq!(rd.torus_pair::<Q>(&rd.zero(), &a1), LaurentBi::one());
        assert_eq!(rd.torus_pair::<Q>(&(&a1 + &a3), &a1), LaurentBi::monomial(1, 0));
    }

    #[test]
    fn structural_constants_sum_to_cartan() {
        for name in ["A2", "A3", "D4", "E6", "E8"] {
            let rd = RootDatum::from_name(name).unwrap();
            let n = rd.rank();
            for i in 0..n {
                for j in 0..n {
                    assert_eq!(rd.p[i][j] + rd.q[i][j], rd.cartan[i][j]);
                    assert_eq!(rd.p[i][j], rd.q[j][i]);
                    if i != j && rd.cartan[i][j] != 0 {
                        assert_eq!((rd.p[i][j] - rd.q[i][j]).signum(), (j as i32 - i as i32).signum());
                    }
                }
            }
        }
    }

    #[test]
    fn torus_pair_bilinear() {
        let rd = e6();
        let roots = &rd.positive_roots;
        for a in roots.iter().step_by(5) {
            for b in roots.iter().step_by(7) {
                for c in roots.iter().step_by(11) {
                    let ab = rd.torus_pair::<Q>(&(a + b), c);
                    assert_eq!(ab, &rd.torus_pair::<Q>(a, c) * &rd.torus_pair::<Q>(b, c));
                    let bc = rd.torus_pair::<Q>(a, &(b + c));
                    assert_eq!(bc, &rd.torus_pair::<Q>(a, b) * &rd.torus_pair::<Q>(a, c));
                }
            }
        }
    }

    fn brute_kostant(roots: &[LatticeVec], mu: &LatticeVec, from: usize) -> u128 {
        if mu.is_zero() {
            return 1;
        }
        let mut total = 0;
        for k in from..roots.len() {
            if roots[k].le(mu) {
                total += brute_kostant(roots, &(mu - &roots[k]), k);
            }
        }
        total
    }

    #[test]
    fn kostant_examples() {
        let a2 = RootDatum::from_name("A2").unwrap();
        assert_eq!(a2.kostant(&v(&[1, 1])), 2);
        assert_eq!(a2.kostant(&v(&[0, 0])), 1);
        let rd = e6();
        assert_eq!(rd.kostant(&rd.simple(4)), 1);
        assert_eq!(rd.kostant(rd.highest_root()), 622);
    }

    #[test]
    fn kostant_matches_enumeration() {
        for name in ["A3", "D4", "E6"] {
            let rd = RootDatum::from_name(name).unwrap();
            for h in 0..=6 {
                for mu in rd.weights_of_height(h) {
                    assert_eq!(rd.kostant(&mu), brute_kostant(&rd.positive_roots, &mu, 0), "{name} {mu:?}");
                }
            }
        }
    }
}
