use super::*;
use crate::rootsystem::RootDatum;
use crate::{Laurent, RatFunc, Rational};

fn build(name: &str) -> Pbw<Rational> {
    Pbw::build(&RootDatum::from_name(name).unwrap()).unwrap()
}

fn smr() -> RatFunc {
    RatFunc::from_laurent(s_minus_r())
}

#[test]
fn c_beta_values() {
    let p = build("E6");
    let c = c_beta(&p).unwrap();
    for (r, v) in p.roots().iter().zip(&c.values) {
        assert!(!v.is_zero());
        if r.word.len() <= 2 {
            assert_eq!(*v, smr(), "{}", r.word);
        }
        // η_β = c_β F_β pairs to one with E_β
        assert_eq!(&r.diagonal * v, RatFunc::one(), "{}", r.word);
    }
}

#[test]
fn eta_relations_e6() {
    let p = build("E6");
    let c = c_beta(&p).unwrap();
    let checks = verify_eta_relations(&p, &c).unwrap();
    for ch in &checks {
        assert!(ch.pass, "{ch:?}");
    }
    assert!(checks.iter().any(|c| c.name == "eta-bracket(3,4)"));
    assert!(checks.iter().any(|c| c.name == "commute(1,2)"));
}

#[test]
fn mixed_relation_e6() {
    let rd = RootDatum::from_name("E6").unwrap();
    let checks = double_mixed_check(&crate::pairing::Pairing::<Rational>::new(&rd)).unwrap();
    assert_eq!(checks.len(), 36);
    for ch in &checks {
        assert!(ch.pass, "{ch:?}");
    }
}

#[test]
fn theta_low_degrees() {
    let p = build("E6");
    let c = c_beta(&p).unwrap();
    let t0 = theta(&p, &c, 0);
    assert_eq!(t0.monomials, vec![(PbwMonomial::one(), RatFunc::one())]);
    let t1 = theta(&p, &c, 1);
    let ex = t1.expand(&p);
    let mut want = TensorElement::zero(vec![Side::F, Side::E], 6);
    want.add_scaled(&TensorElement::pure(&[&BElement::one(Side::F, 6), &BElement::one(Side::E, 6)]), &RatFunc::one());
    for i in 1..=6 {
        let f = BElement::<RatFunc>::generator(Side::F, 6, i);
        let e = BElement::generator(Side::E, 6, i);
        want.add_scaled(&TensorElement::pure(&[&f, &e]), &smr());
    }
    assert_eq!(ex, want);
    // truncation coherence
    let t3 = theta(&p, &c, 3);
    let t2 = theta(&p, &c, 2);
    let low: Vec<_> = t3.monomials.iter().filter(|(m, _)| p.height_of(m) <= 2).cloned().collect();
    assert_eq!(low, t2.monomials);
    // diagonal single-root coefficient
    let one_minus = &Laurent::one() - &Laurent::monomial(1, -1);
    let (m, k) = t3.monomials.iter().find(|(m, _)| *m == PbwMonomial::single(0, 2)).unwrap();
    assert_eq!(p.height_of(m), 2);
    let want = &RatFunc::new(one_minus.pow(2), psi(2)) * &smr().pow(2);
    assert_eq!(*k, want);
}

#[test]
fn dual_basis_small() {
    let a2 = build("A2");
    let c = c_beta(&a2).unwrap();
    for r in dual_basis_suite(&a2, &c, 6) {
        assert!(r.pass(), "{r:?}");
    }
    let p = build("E6");
    let c = c_beta(&p).unwrap();
    let r = dual_basis_check(&p, &c, &LatticeVec::simple(6, 1).scaled(2));
    assert!(r.pass() && r.size == 1);
    let r = dual_basis_check(&p, &c, &p.root_datum().zero());
    assert!(r.pass() && r.size == 1);
}
