use std::path::PathBuf;

use charone::corpus::CORPUS;
use charone::report::Report;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("charone").chain(args.iter().copied());
    let code = charone::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn temp_file(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("charone-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn validate_b_z2() {
    let (code, out, _) = run(&["validate", "b_z2.sr"]);
    assert_eq!(code, 0);
    assert_eq!(out, "ok: idempotent semiring, 4 elements, simple, unitgenerated\n");
}

#[test]
fn every_corpus_table_validates() {
    for (name, _) in CORPUS {
        let (code, out, err) = run(&["validate", name]);
        assert_eq!(code, 0, "{name}: {err}");
        assert!(out.starts_with("ok: idempotent semiring"), "{name}: {out}");
    }
}

#[test]
fn orders_on_bool() {
    let (code, out, _) = run(&["orders", "bool.sr"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("2 valuation orders (1 nondegenerate)"), "{out}");
}

#[test]
fn extend_gaussian_at_five() {
    let (code, out, _) = run(&["extend", "--p", "5", "--d", "-1"]);
    assert_eq!(code, 0);
    assert!(out.contains("split, 2 extensions"), "{out}");
    assert_eq!(out.matches("e=1 f=1").count(), 2, "{out}");
    assert!(out.trim_end().ends_with("verification: PASS"), "{out}");
}

#[test]
fn input_errors_exit_two() {
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["validate", "/nonexistent/none.sr"]).0, 2);
    let bad = temp_file("bad.sr", "semiring X\nelements: 0 1\nzero: 0\none: 2\n");
    let (code, _, err) = run(&["validate", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("line 4"), "{err}");
    assert_eq!(run(&["extend", "--p", "4", "--d", "-1"]).0, 2);
    assert_eq!(run(&["closure", "b_z2.sr", "--sub", "0,h"]).0, 2);
}

#[test]
fn corrupted_table_exits_one() {
    let text = CORPUS.iter().find(|(n, _)| *n == "c3.sr").unwrap().1.replace("0 a a\n0 a 1", "0 1 a\n0 a 1");
    let path = temp_file("broken.sr", &text);
    let (code, out, _) = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(out.contains("distributivity fails at (a, a, 1)"), "{out}");
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("validate"));
}

#[test]
fn json_reports_round_trip() {
    for args in [
        &["--json", "validate", "c3.sr"][..],
        &["--json", "reduce", "b_z2.sr"],
        &["--json", "extend", "--p", "3", "--d", "-1"],
        &["--json", "admissible", "c3.sr", "--pairs", "1>a"],
    ] {
        let (code, out, _) = run(args);
        assert_eq!(code, 0, "{args:?}");
        let report: Report = serde_json::from_str(&out).unwrap();
        assert_eq!(report.to_json().trim_end(), out.trim_end(), "{args:?}");
    }
}

#[test]
fn admissibility_outputs() {
    let (code, out, _) = run(&["admissible", "c3.sr", "--pairs", "1>a"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("admissible"), "{out}");
    let (code, out, _) = run(&["admissible", "c3.sr", "--pairs", "1>a,a>0"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("not admissible"), "{out}");
}

#[test]
fn suite_is_deterministic() {
    let (code, a, _) = run(&["suite", "--seed", "7"]);
    assert_eq!(code, 0);
    assert_eq!(a, run(&["suite", "--seed", "7"]).1);
}
