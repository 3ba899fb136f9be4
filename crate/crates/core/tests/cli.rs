//! Drives the command line front end in process.

use qdeform::cli::{run, EXIT_COMPUTE, EXIT_OK, EXIT_USAGE};
use serde_json::Value;

fn exec(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("qdeform").chain(args.iter().copied());
    let status = run(argv, &mut out, &mut err);
    (status, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let (status, out, err) = exec(&full);
    assert_eq!(status, EXIT_OK, "{args:?}: {err}");
    serde_json::from_str(&out).unwrap_or_else(|e| panic!("{args:?}: {e}\n{out}"))
}

#[test]
fn qrat_prints_the_canonical_form() {
    let (status, out, _) = exec(&["qrat", "5/12"]);
    assert_eq!(status, EXIT_OK);
    assert_eq!(out.trim(), "q^2 * (1+2q+q^2+q^3)/(1+2q+3q^2+3q^3+2q^4+q^5)");
    let v = json(&["qrat", "5/12"]);
    assert_eq!(v["N"], -2);
}

#[test]
fn continued_fractions() {
    assert_eq!(exec(&["cf", "5/12", "--flavor", "neg"]).1.trim(), "[[1,2,4,2]]");
    assert_eq!(exec(&["cf", "5/12"]).1.trim(), "[0,2,2,2]");
    let (status, out, _) = exec(&["qcf", "[[1,2,4,2]]"]);
    assert_eq!(status, EXIT_OK);
    assert_eq!(out, exec(&["qrat", "5/12"]).1);
}

#[test]
fn trace_reports_shape() {
    let (status, out, _) = exec(&["trace", "M[3,3]"]);
    assert_eq!(status, EXIT_OK);
    assert!(out.starts_with("1+2q+q^2+2q^3+q^4"));
    assert!(out.contains("unimodal: false"));
}

#[test]
fn every_verb_emits_valid_json() {
    let cases: &[&[&str]] = &[
        &["qrat", "-1/4"],
        &["cf", "3/5", "--flavor", "neg"],
        &["qcf", "[0,1,1,2]"],
        &["mat", "M[2,2,1,1]"],
        &["trace", "M[2,3]"],
        &["quad", "(1+sqrt(5))/2"],
        &["series", "1+sqrt(2)", "--order", "12"],
        &["series", "408/169", "--order", "16"],
        &["scan", "--k", "1..3", "--range", "2..3"],
        &["cohn", "AB"],
        &["divcheck", "--target", "1+q^3", "--by", "1+q"],
        &["repro", "cohn"],
    ];
    for args in cases {
        json(args);
    }
}

#[test]
fn series_of_one_plus_sqrt_two() {
    let v = json(&["series", "1+sqrt(2)", "--order", "16"]);
    let text = v.to_string();
    assert!(text.contains("146") && text.contains("-155"), "{text}");
}

#[test]
fn scan_json_is_deterministic() {
    let args = ["--json", "scan", "--k", "1..4", "--range", "2..4"];
    assert_eq!(exec(&args).1, exec(&args).1);
    let v = json(&args[1..]);
    assert_eq!(v["counts"]["violations"]["palindrome"], 0);
    assert_eq!(v["counts"]["violations"]["positive"], 0);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["qrat", "1/0"][..],
        &["qrat", "abc"],
        &["bogus"],
        &["cf", "1/2", "--flavor", "sideways"],
        &["mat", "[1,2]"],
        &["repro", "nonexistent"],
    ] {
        let (status, _, err) = exec(args);
        assert_eq!(status, EXIT_USAGE, "{args:?}");
        assert!(!err.is_empty());
    }
}

#[test]
fn computation_errors_exit_1() {
    let (status, _, err) = exec(&["scan", "--k", "1..9", "--range", "1..9", "--cap", "10"]);
    assert_eq!(status, EXIT_COMPUTE);
    assert!(err.contains("cap"), "{err}");
    let (status, _, _) = exec(&["divcheck", "--target", "1+q", "--by", "0"]);
    assert_eq!(status, EXIT_COMPUTE);
}

#[test]
fn repro_all_matches() {
    let (status, out, _) = exec(&["repro", "all"]);
    assert_eq!(status, EXIT_OK, "{out}");
    assert!(!out.contains("FAIL"));
}

#[test]
fn negative_arguments() {
    let (status, out, err) = exec(&["qrat", "-1/4"]);
    assert_eq!(status, EXIT_OK, "{err}");
    assert_eq!(out.trim(), "-q^-1 * 1/(1+q+q^2+q^3)");
    assert_eq!(exec(&["cf", "-5/3"]).1.trim(), "[-2,3]");
    assert_eq!(exec(&["scan", "--k", "2", "--range", "-2..2"]).0, EXIT_OK);
    assert_eq!(exec(&["series", "-3-sqrt(7)", "--order", "5"]).0, EXIT_OK);
}

#[test]
fn help_is_not_an_error() {
    assert_eq!(exec(&["--help"]).0, EXIT_OK);
}
