use super::*;
use crate::balgebra::{adjoint_serre, antipode, bracket};
use crate::words::w;
use crate::{Laurent, RatFunc, Rational};

type B = BElement<Laurent>;

fn e6() -> RootDatum {
    RootDatum::from_name("E6").unwrap()
}

fn lp(terms: &[(i64, i32, i32)]) -> Laurent {
    Laurent::from_terms(terms.iter().map(|&(c, a, b)| ((a, b), Rational::from_integer(c.into()))))
}

fn smr() -> Laurent {
    lp(&[(1, 0, 1), (-1, 1, 0)])
}

fn ew(s: &str) -> B {
    B::word(Side::E, 6, w(s))
}

fn fw(s: &str) -> B {
    B::word(Side::F, 6, w(s))
}

/// Independent oracle: sum over letter-matching bijections, each pair of
/// e-positions q < p with p matched before q contributing <ω'_{u_p}, ω_{u_q}>.
fn bijection_value(rd: &RootDatum, fword: &[u8], eword: &[u8]) -> Laurent {
    fn go(rd: &RootDatum, fword: &[u8], eword: &[u8], k: usize, order: &mut Vec<usize>, acc: &mut Laurent) {
        if k == fword.len() {
            let (mut a, mut b) = (0, 0);
            for (x, &p) in order.iter().enumerate() {
                for &q in &order[x + 1..] {
                    if q < p {
                        let (da, db) = rd.simple_pair_exp(eword[p] as usize, eword[q] as usize);
                        a += da;
                        b += db;
                    }
                }
            }
            *acc += &Laurent::monomial(a, b);
            return;
        }
        for p in 0..eword.len() {
            if eword[p] == fword[k] && !order.contains(&p) {
                order.push(p);
                go(rd, fword, eword, k + 1, order, acc);
                order.pop();
            }
        }
    }
    let mut acc = Laurent::zero();
    if fword.len() == eword.len() {
        go(rd, fword, eword, 0, &mut Vec::new(), &mut acc);
    }
    acc
}

fn all_words(letters: &[u8], n: usize) -> Vec<Vec<u8>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for v in all_words(letters, n - 1) {
        for &l in letters {
            let mut x = v.clone();
            x.push(l);
            out.push(x);
        }
    }
    out
}

#[test]
fn base_values() {
    let rd = e6();
    let p = Pairing::<Rational>::new(&rd);
    let one = RatFunc::one();
    assert_eq!(p.pair(&fw("1"), &ew("1")).unwrap(), one.checked_div(&RatFunc::from_laurent(smr())).unwrap());
    assert_eq!(p.pair(&fw("1"), &ew("3")).unwrap(), RatFunc::zero());
    let g1 = B::torus(Side::F, LatticeVec::simple(6, 1));
    let g3 = B::torus(Side::E, LatticeVec::simple(6, 3));
    assert_eq!(p.pair(&g1, &g3).unwrap(), RatFunc::monomial(-1, 0));
    let want = RatFunc::new(lp(&[(1, 0, 0), (1, 1, -1)]), smr().pow(2));
    assert_eq!(p.pair(&fw("11"), &ew("11")).unwrap(), want);
    assert!(p.pair(&ew("1"), &ew("1")).is_err());
}

#[test]
fn peeling_matches_bijections() {
    let rd = e6();
    let p = Pairing::<Rational>::new(&rd);
    for n in 0..=4 {
        for u in all_words(&[1, 3, 4], n) {
            for f in all_words(&[1, 3, 4], n) {
                let got = p.word_value(&Word::from_letters(&f), &Word::from_letters(&u));
                assert_eq!(got, bijection_value(&rd, &f, &u), "{f:?} {u:?}");
            }
        }
    }
    let u = w("2453");
    for f in ["2453", "3542", "4325", "5243"] {
        assert_eq!(p.word_value(&w(f), &u), bijection_value(&rd, w(f).letters(), u.letters()));
    }
}

#[test]
fn shuffle_images_match_pairing() {
    let rd = e6();
    let p = Pairing::<Rational>::new(&rd);
    for u in ["1", "13", "31", "113", "1343", "24534", "13245"] {
        let u = w(u);
        let om: ShuffleVec<Laurent> = omega_word(&rd, Side::E, &u);
        let omp: ShuffleVec<Laurent> = omega_word(&rd, Side::F, &u);
        for f in all_words(&[1, 2, 3, 4, 5], u.len()) {
            let f = Word::from_letters(&f);
            assert_eq!(om.coeff(&f), p.word_value(&f, &u));
            assert_eq!(omp.coeff(&f), p.word_value(&u, &f));
        }
    }
}

#[test]
fn group_likes() {
    let rd = e6();
    let p = Pairing::<Rational>::new(&rd);
    let vs: Vec<LatticeVec> = (0..40)
        .map(|k: i32| LatticeVec::from_slice(&[(k % 7) - 3, (k * 3 % 7) - 3, (k * 5 % 7) - 3, k % 3, -(k % 4), 1 - k % 2]))
        .collect();
    for mu in &vs {
        for nu in vs.iter().step_by(7) {
            let got = p.pair(&B::torus(Side::F, mu.clone()), &B::torus(Side::E, nu.clone())).unwrap();
            assert_eq!(got, RatFunc::from_laurent(rd.torus_pair(mu, nu)));
        }
    }
}

#[test]
fn weight_orthogonality() {
    let rd = e6();
    let p = Pairing::<Rational>::new(&rd);
    assert!(p.pair(&fw("12"), &ew("13")).unwrap().is_zero());
    assert!(p.pair(&fw("245"), &ew("2453")).unwrap().is_zero());
}

#[test]
fn antipode_compatibility() {
    let rd = e6();
    let p = Pairing::<Rational>::new(&rd);
    let words = ["1", "3", "4", "13", "31", "11", "34", "12", "43"];
    for f in words {
        for e in words {
            let (y, x) = (fw(f), ew(e));
            let lhs = p.pair(&antipode(&rd, &y), &antipode(&rd, &x)).unwrap();
            assert_eq!(lhs, p.pair(&y, &x).unwrap(), "{f} {e}");
        }
    }
}

#[test]
fn gram_examples() {
    let rd = e6();
    let p = Pairing::<Rational>::new(&rd);
    let a1 = LatticeVec::simple(6, 1);
    let g = p.gram(&a1, &[fw("1")], &[ew("1")]).unwrap();
    assert_eq!(g, vec![vec![RatFunc::new(Laurent::one(), smr())]]);
    let a12 = LatticeVec::from_slice(&[1, 1, 0, 0, 0, 0]);
    let g = p.gram(&a12, &[fw("12"), fw("21")], &[ew("12"), ew("21")]).unwrap();
    let v = RatFunc::new(Laurent::one(), smr().pow(2));
    assert!(g.iter().flatten().all(|x| *x == v));
    let a13 = LatticeVec::from_slice(&[1, 0, 1, 0, 0, 0]);
    let e13 = bracket(&rd, &ew("1"), &ew("3")).unwrap();
    let f13 = bracket(&rd, &fw("1"), &fw("3")).unwrap();
    let g = p.gram(&a13, &[f13], &[e13]).unwrap();
    assert!(!g[0][0].is_zero());
    assert!(matches!(p.gram(&a13, &[fw("1")], &[ew("13")]), Err(Error::WeightMismatch { .. })));
}

#[test]
fn quotient_zero_test() {
    let rd = e6();
    let p = Pairing::<Rational>::new(&rd);
    for (i, j) in [(1, 3), (3, 1), (2, 4), (4, 2), (4, 5), (6, 5)] {
        assert!(p.is_zero_in_quotient(&adjoint_serre::<Laurent>(&rd, i, j)), "({i},{j})");
    }
    assert!(p.is_zero_in_quotient(&ew("12").sub(&ew("21")).unwrap()));
    let e13 = bracket(&rd, &ew("1"), &ew("3")).unwrap();
    assert!(!p.is_zero_in_quotient(&e13));
    // functional vector of e1e2 - e2e1 against all f-words of its weight
    let a12 = LatticeVec::from_slice(&[1, 1, 0, 0, 0, 0]);
    let basis = vec![("12".to_string(), fw("12")), ("21".to_string(), fw("21"))];
    let fv = p.functional_vector(&ew("12").sub(&ew("21")).unwrap(), &a12, &basis).unwrap();
    assert!(fv.is_zero());
    let fv = p.functional_vector(&ew("12"), &a12, &basis).unwrap();
    assert!(!fv.is_zero());
}

#[test]
fn cache_roundtrip() {
    let rd = e6();
    let p = Pairing::<Rational>::new(&rd);
    let v = p.word_value(&w("24534"), &w("45324"));
    let dir = std::env::temp_dir().join(format!("twoparam-cache-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("pair.json");
    p.save_cache(&path).unwrap();
    let q = Pairing::<Rational>::new(&rd);
    assert!(q.load_cache(&path).unwrap() > 0);
    assert_eq!(q.memo_len(), p.memo_len());
    assert_eq!(q.word_value(&w("24534"), &w("45324")), v);
    let other = Pairing::<Rational>::new(&RootDatum::from_name("A2").unwrap());
    assert_eq!(other.load_cache(&path).unwrap(), 0);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn gram_rank_matches_kostant() {
    for (name, h) in [("A2", 5), ("A3", 5), ("D4", 4)] {
        let rd = RootDatum::from_name(name).unwrap();
        for g in gram_rank_suite(&rd, h) {
            assert!(g.pass(), "{name} {g:?}");
        }
    }
    // A2 weight α1+α2: words 12 and 21 span a 2-dimensional quotient
    let rd = RootDatum::from_name("A2").unwrap();
    let g = word_gram_rank(&rd, &LatticeVec::from_slice(&[1, 1]));
    assert_eq!((g.words, g.rank, g.kostant), (2, 2, 2));
    // 2α1+α2: three words, one Serre relation
    let g = word_gram_rank(&rd, &LatticeVec::from_slice(&[2, 1]));
    assert_eq!((g.words, g.rank, g.kostant), (3, 2, 2));
}
