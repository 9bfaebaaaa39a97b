use std::collections::BTreeMap;

use serde_json::Value;
use twoparam::pbw::Pbw;
use twoparam::rootsystem::RootDatum;
use twoparam_cli::golden::{coproduct_golden, coproduct_golden_table, coproduct_table, golden_diff};
use twoparam_cli::report::{SuiteReport, Status};
use twoparam_cli::run;

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("twoparam").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = invoke(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn identical_tables_have_empty_diff() {
    let t: BTreeMap<String, String> = [("a".into(), "1".into()), ("b".into(), "r".into())].into();
    assert!(golden_diff(&t, &t).is_empty());
}

#[test]
fn diff_reports_missing_and_extra_keys() {
    let a: BTreeMap<String, i32> = [("x".into(), 1), ("y".into(), 2)].into();
    let b: BTreeMap<String, i32> = [("y".into(), 2), ("z".into(), 3)].into();
    let d = golden_diff(&a, &b);
    assert_eq!(d.missing, vec!["z".to_string()]);
    assert_eq!(d.extra, vec!["x".to_string()]);
    assert!(d.mismatched.is_empty());
}

#[test]
fn corrupted_coproduct_coefficient_is_one_mismatch() {
    let pbw = Pbw::build(&RootDatum::from_name("E6").unwrap()).unwrap();
    let g = coproduct_golden().unwrap();
    let computed = coproduct_table(&pbw, &g.root_word).unwrap();
    assert!(golden_diff(&computed, &coproduct_golden_table(&pbw, &g.terms).unwrap()).is_empty());

    let mut bad = g.terms.clone();
    bad[2].coefficient[0][0] += 1;
    let d = golden_diff(&computed, &coproduct_golden_table(&pbw, &bad).unwrap());
    assert_eq!(d.mismatched.len(), 1);
    assert!(d.missing.is_empty() && d.extra.is_empty());
}

#[test]
fn pairing_matrix_e6_json() {
    let v = json(&["pairing-matrix", "--type", "E6"]);
    let m = v["matrix"].as_array().unwrap();
    assert_eq!(m.len(), 6);
    assert_eq!(m[0][0], "r*s^-1");
    assert_eq!(m[0][2], "r^-1");
    assert_eq!(m[2][0], "s");
    assert_eq!(m[0][1], "1");
}

#[test]
fn good_words_count() {
    assert_eq!(json(&["good-words", "--type", "E6"])["count"], 36);
    assert_eq!(json(&["good-words", "--type", "A3"])["count"], 6);
}

#[test]
fn roots_csv_has_header_and_rows() {
    let (code, out, _) = invoke(&["roots", "--type", "A3", "--format", "csv"]);
    assert_eq!(code, 0);
    let mut r = csv::Reader::from_reader(out.as_bytes());
    assert_eq!(r.headers().unwrap().iter().collect::<Vec<_>>(), ["index", "coords", "height"]);
    assert_eq!(r.records().count(), 6);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(invoke(&["roots", "--bogus"]).0, 2);
    assert_eq!(invoke(&["frobnicate"]).0, 2);
    assert_eq!(invoke(&["verify", "--type", "A2", "--suite", "nope"]).0, 2);
    assert_eq!(invoke(&["roots", "--type", "Q7"]).0, 2);
    assert_eq!(invoke(&["rmatrix-check", "--type", "A2", "--lambdaA", "1/2,x"]).0, 2);
    assert_eq!(invoke(&["rmatrix-check", "--type", "A2", "--lambdaA", "1/2"]).0, 2);
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = invoke(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("verify"));
}

#[test]
fn suite_status_rules() {
    let mut r = SuiteReport::new("x", "A2", false);
    r.record("a", true, None);
    r.skip("b", "not applicable");
    let r = r.finish();
    assert!(r.pass);
    assert_eq!(r.checks[1].status, Status::Skipped);

    let mut r = SuiteReport::new("x", "A2", false);
    r.record("a", true, None);
    r.record("b", false, None);
    assert!(!r.finish().pass);
}

#[test]
fn rmatrix_check_with_negative_weights() {
    let v = json(&["rmatrix-check", "--type", "A2", "--lambdaA", "1/2,-3/2", "--lambdaB", "-2/3,5", "--depth", "2"]);
    assert_eq!(v["pass"], true);
    assert_eq!(v["lambda_b"][0], "-2/3");
}

#[test]
fn skipped_golden_outside_e6() {
    let v = json(&["verify", "--type", "A2", "--suite", "matrix"]);
    assert_eq!(v["pass"], true);
    assert_eq!(v["checks"][1]["status"], "skipped");
}

#[test]
fn reports_are_thread_count_independent() {
    for suite in ["serre", "dualbasis", "rmatrix"] {
        let one = invoke(&["verify", "--type", "A3", "--suite", suite, "--threads", "1"]);
        let many = invoke(&["verify", "--type", "A3", "--suite", suite, "--threads", "4"]);
        assert_eq!(one.0, 0);
        assert_eq!(one.1, many.1, "{suite}");
    }
}

#[test]
fn timings_are_opt_in() {
    let plain = json(&["verify", "--type", "A2", "--suite", "structural"]);
    assert!(plain["checks"][0].get("wall_ms").is_none());
    let timed = json(&["verify", "--type", "A2", "--suite", "structural", "--timings"]);
    assert!(timed["checks"][0]["wall_ms"].is_u64());
}

#[test]
fn out_and_cache_files() {
    let dir = std::env::temp_dir().join(format!("twoparam-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("double.json");
    let cache = dir.join("pairing.cache");
    let args = |o: &str| {
        vec!["verify", "--type", "A3", "--suite", "double", "--cache", cache.to_str().unwrap(), "--out"]
            .into_iter()
            .map(String::from)
            .chain([o.to_string()])
            .collect::<Vec<_>>()
    };
    let first = args(out.to_str().unwrap());
    let (code, stdout, err) = invoke(&first.iter().map(|s| s.as_str()).collect::<Vec<_>>());
    assert_eq!(code, 0, "{err}");
    assert!(stdout.is_empty());
    assert!(cache.exists());
    let warm = dir.join("double-warm.json");
    let second = args(warm.to_str().unwrap());
    assert_eq!(invoke(&second.iter().map(|s| s.as_str()).collect::<Vec<_>>()).0, 0);
    assert_eq!(std::fs::read(&out).unwrap(), std::fs::read(&warm).unwrap());
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn binary_exit_code() {
    let st = std::process::Command::new(env!("CARGO_BIN_EXE_twoparam"))
        .args(["verify", "--type", "E6", "--suite", "appendix"])
        .output()
        .unwrap();
    assert_eq!(st.status.code(), Some(0));
    let st = std::process::Command::new(env!("CARGO_BIN_EXE_twoparam")).arg("--nope").output().unwrap();
    assert_eq!(st.status.code(), Some(2));
}

#[test]
fn theta_terms_pair_f_and_e_monomials() {
    let v = json(&["theta", "--type", "A2", "--max-degree", "2"]);
    let terms = v["terms"].as_array().unwrap();
    // 1, f1, f2 and four degree-2 monomials
    assert_eq!(terms.len(), 7);
    for t in terms {
        let (l, r) = (t["left"].as_str().unwrap(), t["right"].as_str().unwrap());
        assert!(!l.contains('E'), "{l}");
        assert_eq!(l.replace('F', "E"), r);
    }
    assert_eq!(terms[1]["coefficient"], "-r + s");
}
