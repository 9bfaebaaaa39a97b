//! One pass/fail line per acceptance criterion, each timed against its budget.

use std::time::{Duration, Instant};

use serde_json::Value;
use twoparam_cli::run;

struct Criterion {
    id: u32,
    title: &'static str,
    budget: Duration,
    invocations: Vec<Vec<&'static str>>,
    /// Extra content check over the parsed outputs, in invocation order.
    inspect: fn(&[Value]) -> Result<String, String>,
}

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("twoparam").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn none(_: &[Value]) -> Result<String, String> {
    Ok(String::new())
}

fn matrix_entries(v: &[Value]) -> Result<String, String> {
    let m = &v[0]["matrix"];
    let upper = [(1, 3), (2, 4), (3, 4), (4, 5), (5, 6)];
    for i in 1..=6usize {
        for j in 1..=6usize {
            let want = if i == j {
                "r*s^-1"
            } else if upper.contains(&(i, j)) {
                "r^-1"
            } else if upper.contains(&(j, i)) {
                "s"
            } else {
                "1"
            };
            if m[i - 1][j - 1] != want {
                return Err(format!("A[{i}][{j}] = {}", m[i - 1][j - 1]));
            }
        }
    }
    Ok("36 entries".into())
}

fn word_count(v: &[Value]) -> Result<String, String> {
    match v[0]["count"].as_u64() {
        Some(36) => Ok("36 words".into()),
        other => Err(format!("count {other:?}")),
    }
}

fn checks_at_least(v: &[Value], n: usize) -> Result<String, String> {
    let total: usize = v.iter().map(|r| r["checks"].as_array().map_or(0, |c| c.len())).sum();
    if total >= n {
        Ok(format!("{total} checks"))
    } else {
        Err(format!("only {total} checks"))
    }
}

fn dual_basis(v: &[Value]) -> Result<String, String> {
    let squares = v[0]["checks"].as_array().unwrap().iter().filter(|c| c["name"].as_str().unwrap().starts_with("square")).count();
    if squares != 6 {
        return Err(format!("{squares} square checks for E6"));
    }
    checks_at_least(v, 1)
}

fn ls_summary(v: &[Value]) -> Result<String, String> {
    let s = &v[0]["summary"];
    if s["violations"] != 0 {
        return Err(format!("{} violations", s["violations"]));
    }
    Ok(format!(
        "{} relations, largest Gram solve {}, full solves {}",
        s["relations"],
        s["largest_gram"].as_str().unwrap_or("?"),
        s["full_solves"]
    ))
}

fn rmatrix_counts(v: &[Value]) -> Result<String, String> {
    let parts: Vec<String> = v
        .iter()
        .map(|r| {
            let s = &r["summary"];
            format!(
                "{} depth {}: {} checked, {} excluded",
                r["cartan_type"].as_str().unwrap_or("?"),
                s["depth"],
                s["checked"],
                s["excluded"]
            )
        })
        .collect();
    if v.iter().any(|r| r["summary"]["checked"].as_u64().unwrap_or(0) == 0) {
        return Err("a check ran on no interior vectors".into());
    }
    Ok(parts.join("; "))
}

fn criteria() -> Vec<Criterion> {
    let secs = Duration::from_secs;
    vec![
        Criterion {
            id: 1,
            title: "pairing matrix of E6",
            budget: secs(1),
            invocations: vec![vec!["pairing-matrix", "--type", "E6"], vec!["verify", "--type", "E6", "--suite", "matrix"]],
            inspect: matrix_entries,
        },
        Criterion {
            id: 2,
            title: "good-word table of E6",
            budget: secs(600),
            invocations: vec![vec!["good-words", "--type", "E6"], vec!["verify", "--type", "E6", "--suite", "good-words"]],
            inspect: word_count,
        },
        Criterion {
            id: 3,
            title: "coproduct of E_2453",
            budget: secs(5),
            invocations: vec![vec!["verify", "--type", "E6", "--suite", "appendix"]],
            inspect: none,
        },
        Criterion {
            id: 4,
            title: "structural constants",
            budget: secs(1),
            invocations: ["A2", "A3", "D4", "E6"].iter().map(|t| vec!["verify", "--type", t, "--suite", "structural"]).collect(),
            inspect: |v| checks_at_least(v, 12),
        },
        Criterion {
            id: 5,
            title: "Serre elements vanish in E6",
            budget: secs(60),
            invocations: vec![vec!["verify", "--type", "E6", "--suite", "serre"]],
            // 2 per edge (5 edges) plus 10 orthogonal pairs
            inspect: |v| checks_at_least(v, 20),
        },
        Criterion {
            id: 6,
            title: "dual basis is diagonal",
            budget: secs(600),
            invocations: vec![
                vec!["verify", "--type", "E6", "--suite", "dualbasis", "--max-height", "5"],
                vec!["verify", "--type", "A2", "--suite", "dualbasis", "--max-height", "6"],
                vec!["verify", "--type", "A3", "--suite", "dualbasis", "--max-height", "6"],
            ],
            inspect: dual_basis,
        },
        Criterion {
            id: 7,
            title: "eta relations in E6",
            budget: secs(60),
            invocations: vec![vec!["verify", "--type", "E6", "--suite", "eta"]],
            inspect: |v| checks_at_least(v, 36),
        },
        Criterion {
            id: 8,
            title: "mixed relation of the double",
            budget: secs(60),
            invocations: vec![vec!["verify", "--type", "E6", "--suite", "double"]],
            inspect: |v| checks_at_least(v, 36),
        },
        Criterion {
            id: 9,
            title: "convexity of commutation relations",
            budget: secs(3600),
            invocations: vec![vec!["verify", "--type", "E6", "--suite", "ls", "--max-height", "11"]],
            inspect: ls_summary,
        },
        Criterion {
            id: 10,
            title: "Serre quotient dimensions",
            budget: secs(300),
            invocations: vec![
                vec!["verify", "--type", "A2", "--suite", "oracle", "--max-degree", "6"],
                vec!["verify", "--type", "A3", "--suite", "oracle", "--max-degree", "6"],
            ],
            inspect: |v| checks_at_least(v, 12),
        },
        Criterion {
            id: 11,
            title: "R-matrix intertwining and braid relation",
            budget: secs(1800),
            invocations: vec![
                vec!["verify", "--type", "A2", "--suite", "rmatrix", "--depth", "3"],
                vec!["verify", "--type", "E6", "--suite", "rmatrix", "--depth", "2"],
                vec!["verify", "--type", "A2", "--suite", "yang-baxter", "--depth", "2"],
            ],
            inspect: rmatrix_counts,
        },
        Criterion {
            id: 12,
            title: "one-parameter specialization",
            budget: secs(1),
            invocations: vec![vec!["verify", "--type", "E6", "--suite", "specialization"]],
            inspect: |v| checks_at_least(v, 3),
        },
    ]
}

fn line(id: u32, pass: bool, title: &str, elapsed: Duration, budget: Duration, note: &str) {
    println!(
        "criterion {id:>2} {}  {title} ({:.2} s, budget {} s) {note}",
        if pass { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64(),
        budget.as_secs()
    );
}

fn main() {
    let list = criteria();
    let mut outputs = Vec::new();
    let mut failed = 0;
    for c in &list {
        let start = Instant::now();
        let mut values = Vec::new();
        let mut problem = None;
        for args in &c.invocations {
            let (code, out, err) = invoke(args);
            if code != 0 {
                problem.get_or_insert(format!("{} exited {code}: {}", args.join(" "), err.trim()));
            }
            outputs.push((args.clone(), out.clone()));
            values.push(serde_json::from_str(&out).unwrap_or(Value::Null));
        }
        let elapsed = start.elapsed();
        let note = match (problem, (c.inspect)(&values)) {
            (Some(p), _) => Err(p),
            (None, r) => r,
        };
        let pass = note.is_ok() && elapsed < c.budget;
        let note = match note {
            Ok(n) if elapsed >= c.budget => format!("{n}; over budget"),
            Ok(n) => n,
            Err(e) => e,
        };
        failed += usize::from(!pass);
        line(c.id, pass, c.title, elapsed, c.budget, &note);
    }

    let start = Instant::now();
    let mut differing = Vec::new();
    for (args, reference) in &outputs {
        for threads in ["1", "3"] {
            let mut a = args.clone();
            a.extend(["--threads", threads]);
            if &invoke(&a).1 != reference {
                differing.push(format!("{} with {threads} threads", args.join(" ")));
            }
        }
    }
    let pass = differing.is_empty();
    failed += usize::from(!pass);
    let note = if pass { format!("{} reports identical across 1, 3 and default threads", outputs.len()) } else { differing.join("; ") };
    line(13, pass, "determinism across thread counts", start.elapsed(), Duration::from_secs(7200), &note);

    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
