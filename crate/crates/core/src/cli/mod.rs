//! The `qdeform` command line.
//!
//! [`run`] parses arguments, dispatches to the library and writes text or
//! JSON. Exit status: 0 on success, 1 on a computation error or a
//! mismatching `repro` table, 2 on a usage error, 3 when a scan finds a
//! theorem violation.

pub mod repro;

use std::ffi::OsString;
use std::io::Write;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::lab::{
    cohn_matrix, divisibility_report, parse_checks, scan_traces, Hypothesis, ScanSpec, DEFAULT_CAP,
};
use crate::poly::LaurentPoly;
use crate::qarith::{
    eval_cf_q, negative_cf, q_int, q_rational, q_series_from_cf, regular_cf, CFWord, CanonicalQRational, Flavor,
    StreamOptions,
};
use crate::qmodular::MatSpec;
use crate::qquadratic::{cf_stream, periodic_negative_cf, q_quadratic, Surd};
use crate::series::QSeries;

pub const EXIT_OK: i32 = 0;
pub const EXIT_COMPUTE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_VIOLATION: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "qdeform", version, about = "q-deformed rationals, quadratic irrationals and the modular group")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Canonical form of [r/s]_q.
    Qrat {
        #[arg(allow_hyphen_values = true)]
        value: Fraction,
    },
    /// Continued fraction of r/s.
    Cf {
        #[arg(allow_hyphen_values = true)]
        value: Fraction,
        #[arg(long, default_value = "reg")]
        flavor: Flavor,
    },
    /// q-evaluation of a word "[a1,...]" (regular) or "[[c1,...]]" (negative).
    Qcf { word: CFWord },
    /// The matrix "M[c1,...]" or "M+[a1,...]".
    Mat { spec: MatSpec },
    /// Trace of "M[c1,...]" or "M+[a1,...]" with its coefficient checks.
    Trace { spec: MatSpec },
    /// Closed form of [x]_q for a quadratic irrational such as "(1+sqrt(5))/2".
    Quad {
        #[arg(allow_hyphen_values = true)]
        surd: Surd,
    },
    /// Taylor series of [x]_q for a rational "r/s" or a quadratic irrational.
    Series {
        #[arg(allow_hyphen_values = true)]
        number: Number,
        #[arg(long, default_value_t = 10)]
        order: i64,
        /// Stream a continued fraction of this flavor instead of using the
        /// closed form.
        #[arg(long)]
        flavor: Option<Flavor>,
    },
    /// Scan traces of M_q(c) over a range of words.
    Scan(ScanArgs),
    /// Cohn matrix of a word in A and B, such as "AAB" or "A^2B".
    Cohn { word: String },
    /// Exact divisibility of polynomials by candidate factors.
    Divcheck {
        #[arg(long = "target", required = true, allow_hyphen_values = true)]
        targets: Vec<LaurentPoly>,
        #[arg(long = "by", required = true, allow_hyphen_values = true)]
        candidates: Vec<LaurentPoly>,
    },
    /// Recompute a golden table and diff it; "list" shows the tables, "all"
    /// runs every one.
    Repro { table: String },
}

#[derive(Args, Debug)]
struct ScanArgs {
    /// Word lengths, "max" or "min..max".
    #[arg(long, default_value = "1..4")]
    k: Span,
    /// Coefficient range "min..max".
    #[arg(long, default_value = "2..4", allow_hyphen_values = true)]
    range: Span,
    /// "all" or a comma-separated subset of palindrome,positive,reversal,unimodal.
    #[arg(long, default_value = "all")]
    checks: String,
    /// "all" or "interior" (c_1..c_{k-1} >= 2, c_k >= 1).
    #[arg(long, default_value = "all")]
    hypothesis: Hypothesis,
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: u64,
    /// Sample words with this seed instead of enumerating.
    #[arg(long)]
    seed: Option<u64>,
    /// Number of sampled words.
    #[arg(long, default_value_t = 10_000)]
    samples: u64,
    /// Include the elapsed time in the report.
    #[arg(long)]
    timing: bool,
}

/// `r/s` or an integer, reduced to lowest terms.
#[derive(Clone, Copy, Debug)]
struct Fraction(i64, i64);

impl FromStr for Fraction {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || format!("expected r/s or an integer, got {s:?}");
        let (r, d) = match s.split_once('/') {
            Some((r, d)) => (r.trim().parse::<i64>().map_err(|_| bad())?, d.trim().parse::<i64>().map_err(|_| bad())?),
            None => (s.trim().parse::<i64>().map_err(|_| bad())?, 1),
        };
        if d == 0 {
            return Err("zero denominator".into());
        }
        let g = num_integer::gcd(r, d) * d.signum();
        Ok(Fraction(r / g, d / g))
    }
}

#[derive(Clone, Debug)]
enum Number {
    Rational(Fraction),
    Quadratic(Surd),
}

impl FromStr for Number {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.contains("sqrt") {
            s.parse::<Surd>().map(Number::Quadratic).map_err(|e| e.to_string())
        } else {
            s.parse().map(Number::Rational)
        }
    }
}

/// `a..b` or a single bound `b` (meaning `1..b`).
#[derive(Clone, Copy, Debug)]
struct Span(i64, i64);

impl FromStr for Span {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || format!("expected min..max, got {s:?}");
        match s.split_once("..") {
            Some((a, b)) => Ok(Span(a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?)),
            None => Ok(Span(1, s.trim().parse().map_err(|_| bad())?)),
        }
    }
}

/// What a verb produced: text, JSON and an exit status.
struct Output {
    text: String,
    json: Value,
    status: i32,
}

impl Output {
    fn ok(text: impl Into<String>, json: Value) -> Output {
        Output {
            text: text.into(),
            json,
            status: EXIT_OK,
        }
    }
}

/// Runs the command line `args` (including the program name) and returns
/// the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let status = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return status;
        }
    };
    match dispatch(cli.verb) {
        Ok(o) => {
            let written = if cli.json {
                writeln!(out, "{}", serde_json::to_string_pretty(&o.json).expect("serializable"))
            } else {
                write!(out, "{}", o.text).and_then(|_| if o.text.ends_with('\n') { Ok(()) } else { writeln!(out) })
            };
            if written.is_err() {
                return EXIT_COMPUTE;
            }
            o.status
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Compute(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_COMPUTE
        }
    }
}

enum Failure {
    Usage(String),
    Compute(String),
}

fn compute<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Compute(e.to_string())
}

fn dispatch(verb: Verb) -> Result<Output, Failure> {
    match verb {
        Verb::Qrat { value: Fraction(r, s) } => {
            let x = q_rational(r, s).map_err(compute)?;
            Ok(Output::ok(x.to_string(), x.to_json()))
        }
        Verb::Cf { value: Fraction(r, s), flavor } => {
            let w = match flavor {
                Flavor::Regular => regular_cf(r, s),
                Flavor::Negative => negative_cf(r, s),
            }
            .map_err(compute)?;
            Ok(Output::ok(w.to_string(), cf_json(&w)))
        }
        Verb::Qcf { word } => {
            let (u, f) = eval_cf_q(&word).map_err(compute)?;
            let x = CanonicalQRational::from_parts(u, f);
            let mut j = x.to_json();
            j["word"] = cf_json(&word);
            Ok(Output::ok(x.to_string(), j))
        }
        Verb::Mat { spec } => {
            let m = spec.matrix().map_err(|e| Failure::Usage(e.to_string()))?;
            Ok(Output::ok(m.to_string(), m.to_json()))
        }
        Verb::Trace { spec } => {
            let m = spec.matrix().map_err(|e| Failure::Usage(e.to_string()))?;
            Ok(trace_output(&m.trace()))
        }
        Verb::Quad { surd } => {
            let cf = periodic_negative_cf(&surd).map_err(compute)?;
            let y = q_quadratic(&surd).map_err(compute)?;
            let text = format!("[{surd}]_q = {y}\nnegative continued fraction: {cf}");
            let mut j = y.to_json();
            j["x"] = json!(surd.to_string());
            j["negative_cf"] = json!({ "preperiod": cf.preperiod, "period": cf.period });
            Ok(Output::ok(text, j))
        }
        Verb::Series { number, order, flavor } => {
            let (name, f) = series(&number, order, flavor)?;
            let text = format!("[{name}]_q = {f:#}");
            Ok(Output::ok(text, json!({ "x": name, "order": order, "series": f.to_json() })))
        }
        Verb::Scan(a) => scan(a),
        Verb::Cohn { word } => {
            let m = cohn_matrix(&word).map_err(|e| Failure::Usage(e.to_string()))?;
            let tr = m.trace();
            let q = tr.exact_divide(&q_int(3)).expect("nonzero divisor");
            let mut text = format!("[{word}]_q =\n{m}\ntrace: {tr:#}\n");
            match &q {
                Some(q) => text += &format!("trace / [3]_q: {q:#}"),
                None => text += "trace not divisible by [3]_q",
            }
            let j = json!({
                "word": word,
                "matrix": m.to_json(),
                "trace": tr.to_json(),
                "trace_over_q3": q.as_ref().map(LaurentPoly::to_json),
            });
            Ok(Output::ok(text, j))
        }
        Verb::Divcheck { targets, candidates } => {
            let rows = divisibility_report(&targets, &candidates).map_err(compute)?;
            let mut text = String::new();
            for r in &rows {
                let t = &targets[r.target];
                let c = &candidates[r.candidate];
                match &r.quotient {
                    Some(q) => {
                        let pos = if r.quotient_nonneg() { "nonnegative" } else { "has negative coefficients" };
                        text += &format!("{t:#} / ({c:#}) = {q:#}  [{pos}]\n");
                    }
                    None => text += &format!("{t:#} / ({c:#}): not divisible\n"),
                }
            }
            let j = json!({ "rows": rows.iter().map(|r| r.to_json()).collect::<Vec<_>>() });
            Ok(Output::ok(text, j))
        }
        Verb::Repro { table } => repro_verb(&table),
    }
}

fn cf_json(w: &CFWord) -> Value {
    json!({
        "flavor": match w.flavor {
            Flavor::Regular => "reg",
            Flavor::Negative => "neg",
        },
        "coeffs": w.coeffs,
    })
}

fn trace_output(tr: &LaurentPoly) -> Output {
    let (_, _, norm) = tr.split_unit();
    let palindrome = norm.is_palindrome();
    let positive = norm.has_nonneg_coeffs();
    let unimodal = norm.is_unimodal();
    let text = format!(
        "{tr:#}\npalindrome: {palindrome}\nnonnegative up to a unit: {positive}\nunimodal: {unimodal}"
    );
    let j = json!({
        "trace": tr.to_json(),
        "palindrome": palindrome,
        "nonnegative": positive,
        "unimodal": unimodal,
    });
    Output::ok(text, j)
}

fn series(number: &Number, order: i64, flavor: Option<Flavor>) -> Result<(String, QSeries), Failure> {
    match (number, flavor) {
        (Number::Rational(Fraction(r, s)), None) => {
            let x = q_rational(*r, *s).map_err(compute)?;
            let name = if *s == 1 { r.to_string() } else { format!("{r}/{s}") };
            Ok((name, x.series(order).map_err(compute)?))
        }
        (Number::Rational(Fraction(r, s)), Some(fl)) => {
            let w = match fl {
                Flavor::Regular => regular_cf(*r, *s),
                Flavor::Negative => negative_cf(*r, *s),
            }
            .map_err(compute)?;
            let opts = StreamOptions {
                finite: true,
                ..StreamOptions::default()
            };
            let f = q_series_from_cf(w.coeffs, fl, order, opts).map_err(compute)?;
            Ok((format!("{r}/{s}"), f))
        }
        (Number::Quadratic(x), None) => {
            let y = q_quadratic(x).map_err(compute)?;
            Ok((x.to_string(), y.series(order).map_err(compute)?))
        }
        (Number::Quadratic(x), Some(fl)) => {
            let f = q_series_from_cf(cf_stream(x, fl), fl, order, StreamOptions::default()).map_err(compute)?;
            Ok((x.to_string(), f))
        }
    }
}

fn scan(a: ScanArgs) -> Result<Output, Failure> {
    let checks = parse_checks(&a.checks).map_err(Failure::Usage)?;
    if a.k.0 < 1 || a.k.1 < a.k.0 {
        return Err(Failure::Usage(format!("empty length range {}..{}", a.k.0, a.k.1)));
    }
    let spec = ScanSpec {
        k_min: a.k.0 as usize,
        k_max: a.k.1 as usize,
        c_min: a.range.0,
        c_max: a.range.1,
        hypothesis: a.hypothesis,
        checks,
        cap: a.cap,
        sample: a.seed.map(|s| (s, a.samples)),
    };
    let report = scan_traces(&spec).map_err(compute)?;
    let mut j = report.to_json(&spec);
    let mut text = report.to_string();
    if a.timing {
        let ms = report.elapsed.as_secs_f64() * 1e3;
        j["timing"] = json!({ "elapsed_ms": ms });
        text += &format!("elapsed {ms:.1} ms\n");
    }
    let failed = report.theorem_violations().next().is_some();
    Ok(Output {
        text,
        json: j,
        status: if failed { EXIT_VIOLATION } else { EXIT_OK },
    })
}

fn repro_verb(id: &str) -> Result<Output, Failure> {
    if id == "list" {
        let text = repro::TABLES.iter().map(|(id, t)| format!("{id:<12} {t}\n")).collect::<String>();
        let j = json!(repro::TABLES.iter().map(|(id, t)| json!({ "table": id, "title": t })).collect::<Vec<_>>());
        return Ok(Output::ok(text, j));
    }
    let ids: Vec<&str> = if id == "all" {
        repro::TABLES.iter().map(|(id, _)| *id).collect()
    } else {
        vec![id]
    };
    let mut tables = Vec::new();
    for id in ids {
        let t = repro::reproduce(id).ok_or_else(|| {
            let known: Vec<&str> = repro::TABLES.iter().map(|(id, _)| *id).collect();
            Failure::Usage(format!("unknown table {id:?}; known: {}, all, list", known.join(", ")))
        })?;
        tables.push(t);
    }
    let ok = tables.iter().all(repro::Table::all_match);
    let text = tables.iter().map(|t| t.to_string()).collect::<Vec<_>>().join("\n");
    let j = if tables.len() == 1 {
        tables[0].to_json()
    } else {
        json!({ "tables": tables.iter().map(repro::Table::to_json).collect::<Vec<_>>(), "match": ok })
    };
    Ok(Output {
        text,
        json: j,
        status: if ok { EXIT_OK } else { EXIT_COMPUTE },
    })
}
