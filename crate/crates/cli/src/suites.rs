//! The verification suites behind `verify --suite`.

use std::sync::OnceLock;

use anyhow::{bail, Result};
use serde_json::{json, Value};
use twoparam::balgebra::{adjoint_serre, BElement, Side};
use twoparam::coeffs::{s_minus_r, specialize, specialize_laurent, LaurentQ, RatQ};
use twoparam::double::{c_beta, dual_basis_check, dual_basis_suite, double_mixed_check, theta, verify_eta_relations};
use twoparam::pairing::{gram_rank_suite, Pairing};
use twoparam::pbw::{serre_quotient_dims, Pbw, PbwMonomial};
use twoparam::rootsystem::{structural_constants, LatticeVec, RootDatum};
use twoparam::verma::{rmatrix_check, yang_baxter_check};
use twoparam::words::Word;
use twoparam::{Laurent, RatFunc, Rational};

use crate::golden;
use crate::report::SuiteReport;

pub const SUITES: &[&str] = &[
    "matrix",
    "good-words",
    "appendix",
    "structural",
    "serre",
    "dualbasis",
    "eta",
    "double",
    "ls",
    "oracle",
    "rmatrix",
    "yang-baxter",
    "specialization",
    "dimcheck",
];

#[derive(Clone, Debug, Default)]
pub struct SuiteOptions {
    pub max_height: Option<i32>,
    pub max_degree: Option<u32>,
    pub depth: Option<u32>,
    pub lambda_a: Option<Vec<Rational>>,
    pub lambda_b: Option<Vec<Rational>>,
    pub nonroot_cap: Option<i32>,
    pub timings: bool,
}

/// Shared state for one invocation: the root datum, a lazily built PBW basis and the pairing memo.
pub struct Context {
    pub rd: RootDatum,
    pub pairing: Pairing<Rational>,
    pub opts: SuiteOptions,
    pbw: OnceLock<Pbw<Rational>>,
}

impl Context {
    pub fn new(cartan_type: &str, opts: SuiteOptions) -> Result<Self> {
        let rd = RootDatum::from_name(cartan_type)?;
        let pairing = Pairing::new(&rd);
        Ok(Context { rd, pairing, opts, pbw: OnceLock::new() })
    }

    pub fn type_name(&self) -> String {
        self.rd.cartan_type.to_string()
    }

    pub fn pbw(&self) -> Result<&Pbw<Rational>> {
        if self.pbw.get().is_none() {
            let p = Pbw::build(&self.rd)?;
            let _ = self.pbw.set(p);
        }
        Ok(self.pbw.get().unwrap())
    }

    fn is_e6(&self) -> bool {
        self.type_name() == "E6"
    }
}

/// Default highest weights: half-integral and pairwise distinct, so no
/// coordinate pattern is special.
pub fn default_lambdas(rank: usize) -> [Vec<Rational>; 3] {
    let half = |n: i64| Rational::new(n.into(), 2.into());
    let a = (1..=rank as i64).map(|i| half(if i % 2 == 1 { 2 * i - 1 } else { 1 - 2 * i })).collect();
    let b = (1..=rank as i64).map(|i| half(5 - 2 * i)).collect();
    let c = (1..=rank as i64).map(|i| half(2 * i + 1)).collect();
    [a, b, c]
}

fn witness<T: serde::Serialize>(pass: bool, x: T) -> Result<Option<Value>> {
    Ok(if pass { None } else { Some(serde_json::to_value(x)?) })
}

pub fn run_suite(ctx: &Context, name: &str) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new(name, &ctx.type_name(), ctx.opts.timings);
    match name {
        "matrix" => matrix(ctx, &mut rep)?,
        "good-words" => good_words(ctx, &mut rep)?,
        "appendix" => appendix(ctx, &mut rep)?,
        "structural" => structural(ctx, &mut rep)?,
        "serre" => serre(ctx, &mut rep)?,
        "dualbasis" => dualbasis(ctx, &mut rep)?,
        "eta" => eta(ctx, &mut rep)?,
        "double" => double(ctx, &mut rep)?,
        "ls" => ls(ctx, &mut rep)?,
        "oracle" => oracle(ctx, &mut rep)?,
        "rmatrix" => rmatrix(ctx, &mut rep)?,
        "yang-baxter" => yang_baxter(ctx, &mut rep)?,
        "specialization" => specialization(ctx, &mut rep)?,
        "dimcheck" => dimcheck(ctx, &mut rep)?,
        other => bail!("unknown suite {other}; expected one of {} or all", SUITES.join(", ")),
    }
    Ok(rep.finish())
}

fn matrix(ctx: &Context, rep: &mut SuiteReport) -> Result<()> {
    let rd = &ctx.rd;
    rep.timed("shape", || {
        let m = rd.pairing_matrix::<Rational>();
        let mut bad = Vec::new();
        for i in 0..rd.rank() {
            for j in 0..rd.rank() {
                let want = match (i == j, rd.cartan[i][j] == -1, i < j) {
                    (true, _, _) => Laurent::monomial(1, -1),
                    (false, true, true) => Laurent::monomial(-1, 0),
                    (false, true, false) => Laurent::monomial(0, 1),
                    _ => Laurent::one(),
                };
                if m[i][j] != want {
                    bad.push(format!("A[{}][{}] = {}", i + 1, j + 1, m[i][j]));
                }
            }
        }
        Ok((bad.is_empty(), witness(bad.is_empty(), bad)?))
    })?;
    if ctx.is_e6() {
        rep.timed("golden", || {
            let d = golden::golden_diff(&golden::matrix_table(rd), &golden::golden_matrix()?);
            Ok((d.is_empty(), witness(d.is_empty(), d)?))
        })?;
    } else {
        rep.skip("golden", "reference table exists for E6 only");
    }
    Ok(())
}

fn good_words(ctx: &Context, rep: &mut SuiteReport) -> Result<()> {
    let pbw = ctx.pbw()?;
    rep.timed("bijection", || {
        let ok = pbw.roots().len() == ctx.rd.positive_roots.len()
            && pbw.roots().iter().all(|r| r.word.content(ctx.rd.rank()) == r.root);
        Ok((ok, None))
    })?;
    if ctx.is_e6() {
        rep.timed("golden", || {
            let d = golden::golden_diff(&golden::good_word_table(pbw), &golden::golden_good_words()?);
            Ok((d.is_empty(), witness(d.is_empty(), d)?))
        })?;
    } else {
        rep.skip("golden", "reference table exists for E6 only");
    }
    Ok(())
}

fn appendix(ctx: &Context, rep: &mut SuiteReport) -> Result<()> {
    if !ctx.is_e6() {
        rep.skip("coproduct-2453", "reference display exists for E6 only");
        return Ok(());
    }
    let pbw = ctx.pbw()?;
    let g = golden::coproduct_golden()?;
    rep.timed(format!("coproduct-{}", g.root_word), || {
        let d = golden::golden_diff(
            &golden::coproduct_table(pbw, &g.root_word)?,
            &golden::coproduct_golden_table(pbw, &g.terms)?,
        );
        Ok((d.is_empty(), witness(d.is_empty(), d)?))
    })
}

fn structural(ctx: &Context, rep: &mut SuiteReport) -> Result<()> {
    let rd = &ctx.rd;
    let n = rd.rank();
    let (p, q) = structural_constants(&rd.cartan);
    rep.timed("transpose-p-equals-q", || {
        let ok = (0..n).all(|i| (0..n).all(|j| p[j][i] == q[i][j]));
        Ok((ok, None))
    })?;
    rep.timed("p-plus-q-equals-cartan", || {
        let ok = (0..n).all(|i| (0..n).all(|j| p[i][j] + q[i][j] == rd.cartan[i][j]));
        Ok((ok, None))
    })?;
    // <ω'_j, ω_i> = r^{p_ij} s^{-q_ij}
    rep.timed("pairing-from-p-q", || {
        let ok = (0..n).all(|i| (0..n).all(|j| rd.simple_pair_exp(j + 1, i + 1) == (p[i][j], -q[i][j])));
        Ok((ok, None))
    })
}

fn serre(ctx: &Context, rep: &mut SuiteReport) -> Result<()> {
    let pbw = ctx.pbw()?;
    let rd = &ctx.rd;
    let n = rd.rank();
    let zero = |x: &BElement<Laurent>| -> Result<(bool, Option<Value>)> {
        let nf = pbw.normal_form(x)?;
        let ok = nf.is_empty();
        let w: Vec<String> = nf.iter().map(|(m, c)| format!("({c}) {}", pbw.label(m))).collect();
        Ok((ok, witness(ok, w)?))
    };
    for i in 1..=n {
        for j in 1..=n {
            if i == j {
                continue;
            }
            if rd.cartan[i - 1][j - 1] == -1 {
                rep.timed(format!("adjoint-serre({i},{j})"), || zero(&adjoint_serre(rd, i, j)))?;
            } else if i < j {
                rep.timed(format!("commute({i},{j})"), || {
                    let ei = BElement::<Laurent>::generator(Side::E, n, i);
                    let ej = BElement::generator(Side::E, n, j);
                    zero(&ei.mul(rd, &ej)?.sub(&ej.mul(rd, &ei)?)?)
                })?;
            }
        }
    }
    Ok(())
}

fn dualbasis(ctx: &Context, rep: &mut SuiteReport) -> Result<()> {
    let pbw = ctx.pbw()?;
    let c = c_beta(pbw)?;
    let n = ctx.rd.rank();
    let max_h = ctx.opts.max_height.unwrap_or(if ctx.is_e6() { 5 } else { 6 });
    let all = dual_basis_suite(pbw, &c, max_h);
    for h in 0..=max_h {
        let at: Vec<_> = all.iter().filter(|r| r.weight.iter().sum::<i32>() == h).collect();
        let bad: Vec<_> = at.iter().filter(|r| !r.pass()).collect();
        rep.record(format!("height-{h} ({} weights)", at.len()), bad.is_empty(), witness(bad.is_empty(), &bad)?);
    }
    for i in 1..=n {
        rep.timed(format!("square-simple({i})"), || {
            let r = dual_basis_check(pbw, &c, &LatticeVec::simple(n, i).scaled(2));
            Ok((r.pass() && r.size == 1, witness(r.pass(), &r)?))
        })?;
    }
    Ok(())
}

fn eta(ctx: &Context, rep: &mut SuiteReport) -> Result<()> {
    let pbw = ctx.pbw()?;
    let c = c_beta(pbw)?;
    for ch in verify_eta_relations(pbw, &c)? {
        rep.record(ch.name, ch.pass, ch.witness.map(Value::String));
    }
    Ok(())
}

fn double(ctx: &Context, rep: &mut SuiteReport) -> Result<()> {
    for ch in double_mixed_check(&ctx.pairing)? {
        rep.record(format!("mixed({},{})", ch.i, ch.j), ch.pass, ch.witness.map(Value::String));
    }
    Ok(())
}

fn ls(ctx: &Context, rep: &mut SuiteReport) -> Result<()> {
    let pbw = ctx.pbw()?;
    let max_h = ctx.opts.max_height.unwrap_or_else(|| ctx.rd.highest_root().height());
    let cap = ctx.opts.nonroot_cap.unwrap_or(max_h + 1);
    let t = pbw.ls_table(max_h, cap)?;
    for r in &t.relations {
        let ok = r.violations.is_empty();
        rep.record(format!("ls({},{})", r.a, r.b), ok, witness(ok, &r.violations)?);
    }
    rep.summary = json!({
        "max_height": max_h,
        "nonroot_cap": cap,
        "relations": t.relations.len(),
        "largest_gram": t.largest_gram.to_string(),
        "full_solves": t.full_solves,
        "violations": t.violations,
    });
    Ok(())
}

fn oracle(ctx: &Context, rep: &mut SuiteReport) -> Result<()> {
    let pbw = ctx.pbw()?;
    let d = ctx.opts.max_degree.unwrap_or(if ctx.rd.rank() <= 3 { 6 } else { 4 });
    for c in serre_quotient_dims(pbw, d as i32) {
        let ok = c.quotient_dim == c.pbw_monomials && c.pbw_monomials as u128 == c.kostant;
        rep.record(format!("degree-{}", c.degree), ok, Some(serde_json::to_value(&c)?));
    }
    Ok(())
}

fn lambdas(ctx: &Context) -> Result<[Vec<Rational>; 3]> {
    let [a, b, c] = default_lambdas(ctx.rd.rank());
    let a = ctx.opts.lambda_a.clone().unwrap_or(a);
    let b = ctx.opts.lambda_b.clone().unwrap_or(b);
    for l in [&a, &b] {
        if l.len() != ctx.rd.rank() {
            bail!("highest weight needs {} coordinates, got {}", ctx.rd.rank(), l.len());
        }
    }
    Ok([a, b, c])
}

pub fn default_depth(ctx: &Context) -> u32 {
    ctx.opts.depth.unwrap_or(if ctx.rd.rank() <= 2 { 3 } else { 2 })
}

fn rmatrix(ctx: &Context, rep: &mut SuiteReport) -> Result<()> {
    let pbw = ctx.pbw()?;
    let [a, b, _] = lambdas(ctx)?;
    let depth = default_depth(ctx);
    let r = rmatrix_check(pbw, &a, &b, depth)?;
    rep.record(format!("intertwining(depth {depth})"), r.pass, witness(r.pass, &r.failures[..r.failures.len().min(10)])?);
    rep.truncation_loss = r.excluded as u64;
    rep.summary = serde_json::to_value(&r)?;
    Ok(())
}

fn yang_baxter(ctx: &Context, rep: &mut SuiteReport) -> Result<()> {
    let pbw = ctx.pbw()?;
    let [a, b, c] = lambdas(ctx)?;
    let depth = ctx.opts.depth.unwrap_or(2);
    let r = yang_baxter_check(pbw, [&a, &b, &c], depth)?;
    rep.record(format!("braid-relation(depth {depth})"), r.pass, witness(r.pass, &r.failures[..r.failures.len().min(10)])?);
    rep.truncation_loss = r.excluded as u64;
    rep.summary = serde_json::to_value(&r)?;
    Ok(())
}

fn q_monomial(e: i32) -> RatQ<Rational> {
    RatQ::from_laurent(LaurentQ::monomial(e))
}

fn specialization(ctx: &Context, rep: &mut SuiteReport) -> Result<()> {
    let rd = &ctx.rd;
    let n = rd.rank();
    rep.timed("pairing-matrix", || {
        let m = rd.pairing_matrix::<Rational>();
        let mut bad = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let got = RatQ::from_laurent(specialize_laurent(&m[i][j]));
                if got != q_monomial(rd.cartan[i][j]) {
                    bad.push(format!("A[{}][{}] -> {got}", i + 1, j + 1));
                }
            }
        }
        Ok((bad.is_empty(), witness(bad.is_empty(), bad)?))
    })?;
    let q_inv_minus_q = RatQ::from_laurent(LaurentQ::monomial(-1).sub(&LaurentQ::monomial(1)));
    rep.timed("s-minus-r", || {
        let got = specialize(&RatFunc::from_laurent(s_minus_r()))?;
        Ok((got == q_inv_minus_q, Some(Value::String(got.to_string()))))
    })?;
    let pbw = ctx.pbw()?;
    rep.timed("theta-degree-1", || {
        let c = c_beta(pbw)?;
        let t = theta(pbw, &c, 1);
        let mut bad = Vec::new();
        for i in 1..=n {
            let k = pbw.index_of_word(&Word::letter(i)).expect("simple root");
            let coeff = t.monomials.iter().find(|(m, _)| *m == PbwMonomial::single(k, 1)).map(|x| x.1.clone());
            match coeff.map(|x| specialize(&x)) {
                Some(Ok(v)) if v == q_inv_minus_q => {}
                other => bad.push(format!("f{i}⊗e{i}: {other:?}")),
            }
        }
        Ok((bad.is_empty(), witness(bad.is_empty(), bad)?))
    })
}

fn dimcheck(ctx: &Context, rep: &mut SuiteReport) -> Result<()> {
    let max_h = ctx.opts.max_height.unwrap_or(5);
    let all = gram_rank_suite(&ctx.rd, max_h);
    for h in 1..=max_h {
        let at: Vec<_> = all.iter().filter(|g| g.weight.iter().sum::<i32>() == h).collect();
        let bad: Vec<_> = at.iter().filter(|g| !g.pass()).collect();
        rep.record(format!("height-{h} ({} weights)", at.len()), bad.is_empty(), witness(bad.is_empty(), &bad)?);
    }
    Ok(())
}
