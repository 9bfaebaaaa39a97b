//! Argument parsing and dispatch.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use anyhow::{anyhow, bail, Context as _, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use twoparam::double::{c_beta, theta};
use twoparam::verma::rmatrix_check;
use twoparam::Rational;

use crate::report::{reports_csv, to_sorted_json, SuiteReport};
use crate::suites::{default_depth, default_lambdas, run_suite, Context, SuiteOptions, SUITES};

#[derive(Parser)]
#[command(name = "twoparam", version, about = "Exact computations in two-parameter quantum groups of simply-laced type")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args, Clone)]
struct Common {
    /// Cartan type such as A2, A3, D4, E6.
    #[arg(long = "type", default_value = "E6")]
    cartan_type: String,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// File holding memoized word pairings, read before and written after the run.
    #[arg(long)]
    cache: Option<PathBuf>,
    /// Size of the worker pool. Output does not depend on it.
    #[arg(long)]
    threads: Option<usize>,
    /// Record per-check wall time in reports.
    #[arg(long)]
    timings: bool,
}

#[derive(Args, Clone, Default)]
struct Limits {
    #[arg(long)]
    max_height: Option<i32>,
    #[arg(long)]
    max_degree: Option<u32>,
    /// Truncation depth of the Verma modules.
    #[arg(long)]
    depth: Option<u32>,
    /// Highest weight as comma-separated rationals, e.g. 1/2,-3/2.
    #[arg(long = "lambdaA", allow_hyphen_values = true)]
    lambda_a: Option<String>,
    #[arg(long = "lambdaB", allow_hyphen_values = true)]
    lambda_b: Option<String>,
    /// Height cap for pairs whose weight sum is not a root; defaults to max height + 1.
    #[arg(long)]
    nonroot_cap: Option<i32>,
}

#[derive(Subcommand)]
enum Command {
    /// Positive roots in simple-root coordinates.
    Roots(Common),
    /// The matrix of pairings between simple torus generators.
    PairingMatrix(Common),
    /// Good Lyndon words in convex order.
    GoodWords(Common),
    /// Commutation relations between root vectors.
    Relations {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        max_height: Option<i32>,
        /// Height cap for pairs whose weight sum is not a root; defaults to max height + 1.
        #[arg(long)]
        nonroot_cap: Option<i32>,
    },
    /// Truncated canonical element of the pairing.
    Theta {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 2)]
        max_degree: u32,
    },
    /// Checks that the R-matrix intertwines two truncated Verma modules.
    RmatrixCheck {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        limits: Limits,
    },
    /// Runs a verification suite.
    Verify {
        #[command(flatten)]
        common: Common,
        /// One of the suite names, or `all`.
        #[arg(long)]
        suite: String,
        #[command(flatten)]
        limits: Limits,
    },
}

pub fn parse_weight(s: &str) -> Result<Vec<Rational>> {
    s.split(',')
        .map(|x| x.trim().parse::<Rational>().map_err(|_| anyhow!("bad rational {x:?} in weight {s:?}")))
        .collect()
}

impl Limits {
    fn options(&self, timings: bool) -> Result<SuiteOptions> {
        Ok(SuiteOptions {
            max_height: self.max_height,
            max_degree: self.max_degree,
            depth: self.depth,
            lambda_a: self.lambda_a.as_deref().map(parse_weight).transpose()?,
            lambda_b: self.lambda_b.as_deref().map(parse_weight).transpose()?,
            nonroot_cap: self.nonroot_cap,
            timings,
        })
    }
}

/// Output text and whether every check passed.
struct Outcome {
    text: String,
    pass: bool,
}

fn csv_rows(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for r in rows {
        w.write_record(&r)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

fn coords(v: &[i32]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn with_context(common: &Common, opts: SuiteOptions, f: impl FnOnce(&Context) -> Result<Outcome>) -> Result<Outcome> {
    let ctx = Context::new(&common.cartan_type, opts)?;
    if let Some(p) = common.cache.as_ref().filter(|p| p.exists()) {
        ctx.pairing.load_cache(p).with_context(|| format!("reading cache {}", p.display()))?;
    }
    let out = f(&ctx)?;
    if let Some(p) = &common.cache {
        ctx.pairing.save_cache(p).with_context(|| format!("writing cache {}", p.display()))?;
    }
    Ok(out)
}

fn execute(cmd: &Command) -> Result<Outcome> {
    match cmd {
        Command::Roots(c) => with_context(c, SuiteOptions::default(), |ctx| {
            let roots = &ctx.rd.positive_roots;
            let text = match c.format {
                Format::Json => to_sorted_json(&json!({
                    "cartan_type": ctx.type_name(),
                    "roots": roots.iter().enumerate().map(|(k, r)| json!({
                        "index": k + 1, "coords": r.to_vec(), "height": r.height()
                    })).collect::<Vec<_>>(),
                }))?,
                Format::Csv => csv_rows(
                    &["index", "coords", "height"],
                    roots.iter().enumerate().map(|(k, r)| vec![(k + 1).to_string(), coords(r.coords()), r.height().to_string()]),
                )?,
            };
            Ok(Outcome { text, pass: true })
        }),
        Command::PairingMatrix(c) => with_context(c, SuiteOptions::default(), |ctx| {
            let m: Vec<Vec<String>> = ctx
                .rd
                .pairing_matrix::<Rational>()
                .iter()
                .map(|row| row.iter().map(|x| x.to_string()).collect())
                .collect();
            let text = match c.format {
                Format::Json => to_sorted_json(&json!({ "cartan_type": ctx.type_name(), "matrix": m }))?,
                Format::Csv => {
                    let header: Vec<String> = (1..=m.len()).map(|j| format!("w{j}")).collect();
                    let header: Vec<&str> = std::iter::once("row").chain(header.iter().map(|s| s.as_str())).collect();
                    csv_rows(
                        &header,
                        m.iter().enumerate().map(|(i, row)| std::iter::once(format!("w'{}", i + 1)).chain(row.iter().cloned()).collect()),
                    )?
                }
            };
            Ok(Outcome { text, pass: true })
        }),
        Command::GoodWords(c) => with_context(c, SuiteOptions::default(), |ctx| {
            let pbw = ctx.pbw()?;
            let rows: Vec<(usize, String, Vec<i32>)> =
                pbw.roots().iter().map(|r| (r.index + 1, r.word.to_string(), r.root.to_vec())).collect();
            let text = match c.format {
                Format::Json => to_sorted_json(&json!({
                    "cartan_type": ctx.type_name(),
                    "count": rows.len(),
                    "words": rows.iter().map(|(k, w, r)| json!({"index": k, "word": w, "root": r})).collect::<Vec<_>>(),
                }))?,
                Format::Csv => csv_rows(&["index", "word", "root"], rows.iter().map(|(k, w, r)| vec![k.to_string(), w.clone(), coords(r)]))?,
            };
            Ok(Outcome { text, pass: true })
        }),
        Command::Relations { common: c, max_height, nonroot_cap } => with_context(c, SuiteOptions::default(), |ctx| {
            let pbw = ctx.pbw()?;
            let max_h = max_height.unwrap_or_else(|| ctx.rd.highest_root().height());
            let t = pbw.ls_table(max_h, nonroot_cap.unwrap_or(max_h + 1))?;
            let text = match c.format {
                Format::Json => to_sorted_json(&t)?,
                Format::Csv => csv_rows(
                    &["a", "b", "left", "right", "scalar", "expansion", "gram_size", "full_solve", "violations"],
                    t.relations.iter().map(|r| {
                        let exp: Vec<String> = r.expansion.iter().map(|(m, c)| format!("({c}) {m}")).collect();
                        vec![
                            r.a.to_string(),
                            r.b.to_string(),
                            r.left_word.clone(),
                            r.right_word.clone(),
                            r.scalar.to_string(),
                            exp.join(" + "),
                            r.gram_size.to_string(),
                            r.full_solve.to_string(),
                            r.violations.join(" "),
                        ]
                    }),
                )?,
            };
            Ok(Outcome { text, pass: t.violations == 0 })
        }),
        Command::Theta { common: c, max_degree } => with_context(c, SuiteOptions::default(), |ctx| {
            let pbw = ctx.pbw()?;
            let t = theta(pbw, &c_beta(pbw)?, *max_degree);
            let rows: Vec<(String, String, String)> = t
                .monomials
                .iter()
                .map(|(m, k)| (pbw.label(m).replace("E_", "F_"), pbw.label(m), k.to_string()))
                .collect();
            let text = match c.format {
                Format::Json => to_sorted_json(&json!({
                    "cartan_type": ctx.type_name(),
                    "max_degree": max_degree,
                    "terms": rows.iter().map(|(l, r, k)| json!({"left": l, "right": r, "coefficient": k})).collect::<Vec<_>>(),
                }))?,
                Format::Csv => csv_rows(&["left", "right", "coefficient"], rows.iter().map(|(l, r, k)| vec![l.clone(), r.clone(), k.clone()]))?,
            };
            Ok(Outcome { text, pass: true })
        }),
        Command::RmatrixCheck { common: c, limits } => with_context(c, limits.options(c.timings)?, |ctx| {
            let [a, b, _] = default_lambdas(ctx.rd.rank());
            let a = ctx.opts.lambda_a.clone().unwrap_or(a);
            let b = ctx.opts.lambda_b.clone().unwrap_or(b);
            let r = rmatrix_check(ctx.pbw()?, &a, &b, default_depth(ctx))?;
            let text = match c.format {
                Format::Json => to_sorted_json(&r)?,
                Format::Csv => {
                    let v = serde_json::to_value(&r)?;
                    let obj = v.as_object().expect("report is an object");
                    csv_rows(&["field", "value"], obj.iter().map(|(k, v)| vec![k.clone(), v.to_string()]))?
                }
            };
            Ok(Outcome { text, pass: r.pass })
        }),
        Command::Verify { common: c, suite, limits } => with_context(c, limits.options(c.timings)?, |ctx| {
            let names: Vec<&str> = if suite == "all" { SUITES.to_vec() } else { vec![suite.as_str()] };
            if let Some(bad) = names.iter().find(|n| !SUITES.contains(n)) {
                bail!("unknown suite {bad}; expected one of {} or all", SUITES.join(", "));
            }
            let reports: Vec<SuiteReport> = names.iter().map(|n| run_suite(ctx, n)).collect::<Result<_>>()?;
            let pass = reports.iter().all(|r| r.pass);
            let text = match c.format {
                Format::Json if reports.len() == 1 => to_sorted_json(&reports[0])?,
                Format::Json => to_sorted_json(&reports)?,
                Format::Csv => reports_csv(&reports)?,
            };
            Ok(Outcome { text, pass })
        }),
    }
}

fn common(cmd: &Command) -> &Common {
    match cmd {
        Command::Roots(c) | Command::PairingMatrix(c) | Command::GoodWords(c) => c,
        Command::Relations { common, .. }
        | Command::Theta { common, .. }
        | Command::RmatrixCheck { common, .. }
        | Command::Verify { common, .. } => common,
    }
}

/// Exit status: 0 when every check passes, 1 when one fails, 2 on bad usage or errors.
pub fn run<I, A>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = A>,
    A: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    let c = common(&cli.command);
    let result = match c.threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(anyhow::Error::from)
            .and_then(|pool| pool.install(|| execute(&cli.command))),
        None => execute(&cli.command),
    };
    let outcome = match result {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            return 2;
        }
    };
    let written = match &c.out {
        Some(p) => std::fs::write(p, &outcome.text).with_context(|| format!("writing {}", p.display())),
        None => out.write_all(outcome.text.as_bytes()).map_err(Into::into),
    };
    if let Err(e) = written {
        let _ = writeln!(err, "error: {e:#}");
        return 2;
    }
    if outcome.pass {
        0
    } else {
        1
    }
}
