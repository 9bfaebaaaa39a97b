use super::*;
use crate::coeffs::Coefficient;
use crate::rootsystem::{LatticeVec, RootDatum};
use crate::words::w;
use crate::{Laurent, Rational};

type L = Laurent;
type B = BElement<L>;

fn e6() -> RootDatum {
    RootDatum::from_name("E6").unwrap()
}

fn lp(terms: &[(i64, i32, i32)]) -> L {
    L::from_terms(terms.iter().map(|&(c, a, b)| ((a, b), Rational::from_integer(c.into()))))
}

fn simple(i: usize) -> LatticeVec {
    LatticeVec::simple(6, i)
}

fn ew(s: &str) -> B {
    B::word(Side::E, 6, w(s))
}

fn fw(s: &str) -> B {
    B::word(Side::F, 6, w(s))
}

fn term(side: Side, word: &str, torus: LatticeVec, c: L) -> B {
    B::from_term(side, 6, Term::new(w(word), torus), c)
}

fn sum(parts: &[B]) -> B {
    let mut acc = B::zero(parts[0].side(), 6);
    for p in parts {
        acc = acc.add(p).unwrap();
    }
    acc
}

#[test]
fn multiply_examples() {
    let rd = e6();
    let x = B::torus(Side::E, simple(3)).mul(&rd, &ew("1")).unwrap();
    assert_eq!(x, term(Side::E, "1", simple(3), L::monomial(-1, 0)));
    let y = term(Side::E, "1", simple(1), L::one()).mul(&rd, &ew("1")).unwrap();
    assert_eq!(y, term(Side::E, "11", simple(1), L::monomial(1, -1)));
    let z = ew("25") .mul(&rd, &B::one(Side::E, 6)).unwrap();
    assert_eq!(z, ew("25"));
    assert!(ew("1").mul(&rd, &fw("1")).is_err());
}

#[test]
fn coproduct_generators() {
    let rd = e6();
    let d = coproduct(&rd, &ew("4"));
    let want = TensorElement::pure(&[&ew("4"), &B::one(Side::E, 6)])
        .sub(&TensorElement::pure(&[&B::torus(Side::E, simple(4)), &ew("4")]).scale(&L::from_int(-1)));
    assert_eq!(d, want);
    let mu = LatticeVec::from_slice(&[1, -2, 0, 3, 0, 1]);
    let g = B::torus(Side::E, mu);
    assert_eq!(coproduct(&rd, &g), TensorElement::pure(&[&g, &g]));
    let f = coproduct(&rd, &fw("2"));
    let want = TensorElement::pure(&[&B::one(Side::F, 6), &fw("2")])
        .sub(&TensorElement::pure(&[&fw("2"), &B::torus(Side::F, simple(2))]).scale(&L::from_int(-1)));
    assert_eq!(f, want);
}

fn sample_elements() -> Vec<B> {
    let mut v = Vec::new();
    for side in [Side::E, Side::F] {
        for s in ["1", "3", "13", "31", "245", "2453", "11334"] {
            v.push(B::word(side, 6, w(s)));
        }
        v.push(term(side, "34", LatticeVec::from_slice(&[0, 1, -1, 0, 2, 0]), lp(&[(2, 1, 0), (-1, 0, 3)])));
    }
    v
}

#[test]
fn coassociativity() {
    let rd = e6();
    for x in sample_elements() {
        let d = coproduct(&rd, &x);
        assert_eq!(coproduct_at(&rd, &d, 0), coproduct_at(&rd, &d, 1), "{x:?}");
        assert_eq!(coproduct_n(&rd, &x, 3), coproduct_at(&rd, &d, 0));
    }
}

#[test]
fn counit_axioms() {
    let rd = e6();
    for x in sample_elements() {
        let d = coproduct(&rd, &x);
        assert_eq!(counit_at(&d, 0), TensorElement::pure(&[&x]));
        assert_eq!(counit_at(&d, 1), TensorElement::pure(&[&x]));
    }
    assert_eq!(counit(&ew("1")), L::zero());
    assert_eq!(counit(&B::torus(Side::E, simple(2))), L::one());
}

#[test]
fn antipode_axiom() {
    let rd = e6();
    for x in sample_elements() {
        let d = coproduct(&rd, &x);
        let unit = B::one(x.side(), 6).scale(&counit(&x));
        let left = d.map_factor(0, &[x.side()], |t| TensorElement::pure(&[&antipode_term(&rd, x.side(), t)]));
        assert_eq!(left.multiply_out(&rd), unit, "{x:?}");
        let right = d.map_factor(1, &[x.side()], |t| TensorElement::pure(&[&antipode_term(&rd, x.side(), t)]));
        assert_eq!(right.multiply_out(&rd), unit, "{x:?}");
    }
}

#[test]
fn antipode_examples() {
    let rd = e6();
    assert_eq!(antipode(&rd, &ew("2")), B::torus(Side::E, -&simple(2)).mul(&rd, &ew("2")).unwrap().neg());
    assert_eq!(antipode(&rd, &B::one(Side::E, 6)), B::one(Side::E, 6));
    // S(e_1e_3) = ω_3⁻¹e_3ω_1⁻¹e_1, oracle built by hand:
    // ω_1⁻¹ e_1 = (rs⁻¹)⁻¹ e_1 ω_1⁻¹, then ω_3⁻¹ passes e_3e_1 with
    // (rs⁻¹)⁻¹ · ⟨ω'_1, ω_3⟩⁻¹ = r⁻¹s · r = s.
    let tor = -&(&simple(1) + &simple(3));
    let want = term(Side::E, "31", tor, L::monomial(-1, 2));
    assert_eq!(antipode(&rd, &ew("13")), want);
}

#[test]
fn antipode_is_antimultiplicative() {
    let rd = e6();
    let xs = sample_elements();
    for a in &xs {
        for b in &xs {
            if a.side() != b.side() || a.len() + b.len() > 8 {
                continue;
            }
            let lhs = antipode(&rd, &a.mul(&rd, b).unwrap());
            let rhs = antipode(&rd, b).mul(&rd, &antipode(&rd, a)).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn serre_elements() {
    let rd = e6();
    let r_plus_s = lp(&[(1, 1, 0), (1, 0, 1)]);
    let want = sum(&[ew("113"), ew("131").scale(&r_plus_s.neg_ref()), ew("311").scale(&L::monomial(1, 1))]);
    assert_eq!(adjoint_serre::<L>(&rd, 1, 3), want);
    let inv = lp(&[(1, -1, 0), (1, 0, -1)]);
    let want = sum(&[ew("331"), ew("313").scale(&inv.neg_ref()), ew("133").scale(&L::monomial(-1, -1))]);
    assert_eq!(adjoint_serre::<L>(&rd, 3, 1), want);
    assert_eq!(adjoint_serre::<L>(&rd, 1, 2), ew("12").sub(&ew("21")).unwrap());
    // all adjacent pairs, both orientations
    for i in 1..=6usize {
        for j in 1..=6usize {
            if i == j || rd.cartan[i - 1][j - 1] != -1 {
                continue;
            }
            let (x, y) = (i.to_string(), j.to_string());
            let c = if i < j { r_plus_s.clone() } else { inv.clone() };
            let k = if i < j { L::monomial(1, 1) } else { L::monomial(-1, -1) };
            let want = sum(&[
                ew(&format!("{x}{x}{y}")),
                ew(&format!("{x}{y}{x}")).scale(&c.neg_ref()),
                ew(&format!("{y}{x}{x}")).scale(&k),
            ]);
            assert_eq!(adjoint_serre::<L>(&rd, i, j), want, "({i},{j})");
        }
    }
}

#[test]
fn bracket_examples() {
    let rd = e6();
    let e13 = bracket(&rd, &ew("1"), &ew("3")).unwrap();
    assert_eq!(e13, ew("13").sub(&ew("31").scale(&L::s())).unwrap());
    assert_eq!(bracket(&rd, &ew("1"), &ew("2")).unwrap(), ew("12").sub(&ew("21")).unwrap());
    let d = bracket(&rd, &ew("1"), &ew("1")).unwrap();
    assert_eq!(d, ew("11").scale(&lp(&[(1, 0, 0), (-1, 1, -1)])));
    let f13 = bracket(&rd, &fw("1"), &fw("3")).unwrap();
    assert_eq!(f13, fw("31").sub(&fw("13").scale(&L::r())).unwrap());
    let mixed = ew("1").add(&ew("13"));
    assert!(bracket(&rd, &mixed.unwrap(), &ew("3")).is_err());
}

/// Δ(E_245) in the free algebra: the displayed four-term formula plus one
/// term whose right factor is the commutator e_2e_5 - e_5e_2, zero in the quotient.
#[test]
fn coproduct_e245() {
    let rd = e6();
    let e45 = bracket(&rd, &ew("4"), &ew("5")).unwrap();
    let e24 = bracket(&rd, &ew("2"), &ew("4")).unwrap();
    let e245 = bracket(&rd, &ew("2"), &e45).unwrap();
    let k = lp(&[(1, 0, 0), (-1, -1, 1)]);
    let one = B::one(Side::E, 6);
    let t45 = &simple(4) + &simple(5);
    let mut want = TensorElement::pure(&[&e245, &one]);
    want.add_scaled(&TensorElement::pure(&[&ew("2").times_torus(&t45), &e45]), &k);
    want.add_scaled(&TensorElement::pure(&[&e24.times_torus(&simple(5)), &ew("5")]), &k);
    want.add_scaled(&TensorElement::pure(&[&B::torus(Side::E, &simple(2) + &t45), &e245]), &L::one());
    let e4 = ew("4").times_torus(&(&simple(2) + &simple(5)));
    let comm = ew("25").sub(&ew("52")).unwrap();
    want.add_scaled(&TensorElement::pure(&[&e4, &comm]), &k.mul_ref(&L::s()));
    assert_eq!(coproduct(&rd, &e245), want);
}
