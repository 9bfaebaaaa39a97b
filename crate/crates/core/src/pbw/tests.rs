use super::*;
use crate::pairing::omega;
use crate::balgebra::{adjoint_serre, coproduct};
use crate::words::w;
use crate::{Laurent, RatFunc, Rational};

type P = Pbw<Rational>;

const E6_WORDS: [&str; 36] = [
    "1", "13", "134", "1342", "1345", "13452", "134524", "1345243", "13456", "134562", "1345624", "13456243",
    "13456245", "134562453", "1345624534", "13456245342", "2", "24", "243", "245", "2453", "24534", "2456",
    "24563", "245634", "2456345", "3", "34", "345", "3456", "4", "45", "456", "5", "56", "6",
];

fn build(name: &str) -> P {
    P::build(&RootDatum::from_name(name).unwrap()).unwrap()
}

fn ew(n: usize, s: &str) -> BElement<Laurent> {
    BElement::word(Side::E, n, w(s))
}

#[test]
fn e6_good_words() {
    let p = build("E6");
    let got: Vec<String> = p.roots().iter().map(|r| r.word.to_string()).collect();
    assert_eq!(got, E6_WORDS);
    assert!(p.rejected.is_empty(), "{:?}", p.rejected);
    for r in p.roots() {
        assert_eq!(r.word.content(6), r.root);
    }
}

#[test]
fn small_types_good_words() {
    let a2: Vec<String> = build("A2").roots().iter().map(|r| r.word.to_string()).collect();
    assert_eq!(a2, ["1", "12", "2"]);
    let a3: Vec<String> = build("A3").roots().iter().map(|r| r.word.to_string()).collect();
    assert_eq!(a3, ["1", "12", "123", "2", "23", "3"]);
    assert_eq!(build("D4").roots().len(), 12);
}

#[test]
fn leading_word_property() {
    let p = build("E6");
    for r in p.roots() {
        let (t, c) = r.e_expansion.terms().iter().next().unwrap();
        assert_eq!(t.word, r.word);
        assert_eq!(*c, Laurent::one());
        assert!(!r.diagonal.is_zero());
    }
}

#[test]
fn root_vector_examples() {
    let p = build("E6");
    let i13 = p.index_of_word(&w("13")).unwrap();
    let e13 = ew(6, "13").sub(&ew(6, "31").scale(&Laurent::s())).unwrap();
    assert_eq!(p.roots()[i13].e_expansion, e13);
    let f = |s: &str| BElement::<Laurent>::word(Side::F, 6, w(s));
    assert_eq!(p.roots()[i13].f_expansion, f("31").sub(&f("13").scale(&Laurent::r())).unwrap());
    assert_eq!(p.roots()[0].e_expansion, ew(6, "1"));
    // shuffle images agree with the expansions
    for r in p.roots().iter().filter(|r| r.word.len() <= 5) {
        assert_eq!(omega(p.root_datum(), &r.e_expansion), r.e_image);
        assert_eq!(omega(p.root_datum(), &r.f_expansion), r.f_image);
    }
}

#[test]
fn monomial_counts() {
    let p = build("E6");
    let rd = p.root_datum().clone();
    for h in 0..=5 {
        for mu in rd.weights_of_height(h) {
            let ms = p.monomials(&mu);
            assert_eq!(ms.len() as u128, rd.kostant(&mu), "{mu:?}");
            for m in &ms {
                assert_eq!(p.weight_of(m), mu);
            }
        }
    }
    assert_eq!(p.monomials(&rd.zero()), vec![PbwMonomial::one()]);
    let a2 = build("A2");
    let ms = a2.monomials(&LatticeVec::from_slice(&[1, 1]));
    let labels: Vec<String> = ms.iter().map(|m| a2.label(m)).collect();
    assert_eq!(labels.len(), 2);
    assert!(labels.contains(&"E_12".to_string()) && labels.contains(&"E_2 E_1".to_string()));
}

#[test]
fn normal_form_examples() {
    let p = build("E6");
    let rd = p.root_datum().clone();
    for (i, j) in [(1, 3), (3, 1), (2, 4), (4, 2)] {
        assert!(p.normal_form(&adjoint_serre::<Laurent>(&rd, i, j)).unwrap().is_empty());
    }
    let i13 = p.index_of_word(&w("13")).unwrap();
    let nf = p.normal_form(&p.roots()[i13].e_expansion).unwrap();
    assert_eq!(nf, [(PbwMonomial::single(i13, 1), RatFunc::one())].into_iter().collect());
    let a2 = build("A2");
    let nf = a2.normal_form(&ew(2, "12")).unwrap();
    let want: NormalForm<Rational> = [
        (PbwMonomial::single(1, 1), RatFunc::one()),
        (PbwMonomial(vec![(2, 1), (0, 1)]), RatFunc::monomial(0, 1)),
    ]
    .into_iter()
    .collect();
    assert_eq!(nf, want);
}

#[test]
fn f_side_normal_form() {
    let a2 = build("A2");
    let f = |s: &str| BElement::<Laurent>::word(Side::F, 2, w(s));
    // F_12 = f2 f1 - r f1 f2, so f1 f2 = r^{-1} (F_2 F_1 - F_12)
    let nf = a2.normal_form(&f("12")).unwrap();
    let want: NormalForm<Rational> = [
        (PbwMonomial::single(1, 1), RatFunc::monomial(-1, 0).neg_ref()),
        (PbwMonomial(vec![(2, 1), (0, 1)]), RatFunc::monomial(-1, 0)),
    ]
    .into_iter()
    .collect();
    assert_eq!(nf, want);
}

#[test]
fn ls_a2() {
    let a2 = build("A2");
    let t = a2.ls_table(11, 12).unwrap();
    assert_eq!(t.violations, 0);
    let r = t.relations.iter().find(|r| r.left_word == "1" && r.right_word == "2").unwrap();
    assert_eq!(r.expansion, [("E_12".to_string(), RatFunc::one())].into_iter().collect());
    let r = t.relations.iter().find(|r| r.left_word == "1" && r.right_word == "12").unwrap();
    assert!(r.expansion.is_empty());
}

#[test]
fn serre_dims_a2() {
    let a2 = build("A2");
    for c in serre_quotient_dims(&a2, 4) {
        assert_eq!(c.quotient_dim, c.pbw_monomials, "{c:?}");
        assert_eq!(c.pbw_monomials as u128, c.kostant);
    }
}

#[test]
fn coproduct_of_e2453_in_normal_form() {
    let p = build("E6");
    let rd = p.root_datum().clone();
    let idx = |s: &str| p.index_of_word(&w(s)).unwrap();
    let mono = |ws: &[&str]| PbwMonomial(ws.iter().map(|s| (idx(s), 1)).collect());
    let tor = |ks: &[usize]| {
        let mut v = LatticeVec::zero(6);
        for &k in ks {
            v.add_simple(k, 1);
        }
        v
    };
    let one_minus = &Laurent::one() - &Laurent::monomial(-1, 1);
    let c1 = RatFunc::from_laurent(one_minus.clone());
    let c2 = RatFunc::from_laurent(one_minus.pow(2));
    let c3 = RatFunc::from_laurent(&one_minus * &Laurent::monomial(-1, 0)).neg_ref();
    let want: std::collections::BTreeMap<TensorKey, RatFunc> = [
        ((mono(&["2453"]), tor(&[]), mono(&[]), tor(&[])), RatFunc::one()),
        ((mono(&["245"]), tor(&[3]), mono(&["3"]), tor(&[])), c1.clone()),
        ((mono(&["243"]), tor(&[5]), mono(&["5"]), tor(&[])), c1),
        ((mono(&["24"]), tor(&[3, 5]), mono(&["5", "3"]), tor(&[])), c2.clone()),
        ((mono(&["2"]), tor(&[3, 4, 5]), mono(&["45", "3"]), tor(&[])), c2),
        ((mono(&["2"]), tor(&[3, 4, 5]), mono(&["345"]), tor(&[])), c3),
        ((mono(&[]), tor(&[2, 3, 4, 5]), mono(&["2453"]), tor(&[])), RatFunc::one()),
    ]
    .into_iter()
    .collect();
    let d = coproduct(&rd, &p.roots()[idx("2453")].e_expansion);
    assert_eq!(p.tensor_normal_form(&d).unwrap(), want);
}
