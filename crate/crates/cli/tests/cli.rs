use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (u8, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("giantval").chain(args.iter().copied());
    let code = giantval::run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn stdout_of(args: &[&str]) -> String {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "stderr: {err}");
    out
}

const FINDINGS_CASES: &str =
    "printed-23,catalan-printed-lower,decastro-printed-lower,binomial-printed-minus-one";

#[test]
fn val_plain() {
    assert_eq!(
        stdout_of(&["val", "--family", "hyperfactorial", "-n", "4", "-p", "2"]),
        "10\n"
    );
    assert_eq!(
        stdout_of(&["val", "--family", "factorial", "-n", "100", "-p", "5"]),
        "24\n"
    );
    assert_eq!(
        stdout_of(&["val", "--family", "stirling", "-n", "6", "-k", "2", "-p", "2"]),
        "1\n"
    );
    assert_eq!(
        stdout_of(&["val", "--family", "catalan", "-n", "20", "-p", "2"]),
        "2\n"
    );
}

#[test]
fn val_berezin_zero_tower() {
    let out = stdout_of(&["val", "--family", "berezin", "-n", "3", "-p", "5"]);
    assert!(out.contains("multiplier: 0"), "{out}");
}

#[test]
fn val_berezin_json_residue() {
    let out = stdout_of(&[
        "val", "--family", "berezin", "-n", "3", "-p", "3", "--mod", "10", "--format", "json",
    ]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["residue"], "6");
    assert_eq!(v["tower"]["base"], "6");
    assert_eq!(v["tower"]["height"], "5");
    assert_eq!(v["tower"]["multiplier"], "1");
}

#[test]
fn val_json_schema() {
    let out = stdout_of(&[
        "val",
        "--family",
        "hyperfactorial",
        "-n",
        "4",
        "-p",
        "2",
        "--format",
        "json",
    ]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["family"], "hyperfactorial");
    assert_eq!(v["valuation"], "10");
    assert!(v.get("residue").is_none());
}

#[test]
fn val_rejects_composite_prime() {
    let (code, out, err) = run(&["val", "--family", "factorial", "-n", "10", "-p", "4"]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("prime"), "{err}");
}

#[test]
fn val_missing_k_is_usage_error() {
    let (code, _, _) = run(&["val", "--family", "stirling", "-n", "6", "-p", "2"]);
    assert_eq!(code, 2);
}

#[test]
fn bounds_factorial() {
    let out = stdout_of(&["bounds", "--family", "factorial", "-n", "10", "-p", "2"]);
    assert_eq!(out, "lower 6\nupper 9\nexact 8\ninside true\n");
}

#[test]
fn bounds_printed_catalan_outside() {
    let out = stdout_of(&[
        "bounds",
        "--family",
        "catalan",
        "-n",
        "20",
        "-p",
        "2",
        "--variant",
        "printed",
    ]);
    assert!(out.contains("exact 2\n"), "{out}");
    assert!(out.ends_with("inside false\n"), "{out}");
}

#[test]
fn bounds_superfactorial_one() {
    let out = stdout_of(&[
        "bounds",
        "--family",
        "superfactorial",
        "-n",
        "1",
        "-p",
        "2",
        "--format",
        "json",
    ]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["lower"], "0");
    assert_eq!(v["upper"], "0");
    assert_eq!(v["exact"], "0");
    assert_eq!(v["inside"], true);
}

#[test]
fn audit_printed_23_finding() {
    let (code, out, err) = run(&[
        "audit",
        "--cases",
        "printed-23",
        "--n-max",
        "50",
        "--primes",
        "2,3",
    ]);
    assert_eq!(code, 0);
    assert!(out.starts_with("case_id,p,n,k,r,m,lhs,rhs,verdict\n"));
    assert!(
        out.lines().any(|l| l == "printed-23,2,6,,,,16,58,violated"),
        "{out}"
    );
    assert!(err.contains("findings (as-printed violations):"), "{err}");
    assert!(err.contains("proved-sound violations: 0"), "{err}");
}

#[test]
fn audit_mainineq_clean() {
    let (code, out, err) = run(&["audit", "--cases", "mainineq", "--n-max", "2000"]);
    assert_eq!(code, 0, "{err}");
    assert_eq!(out.lines().count(), 1 + 2 * 2000 * 10);
    assert!(!out.contains("violated"));
}

#[test]
fn audit_unknown_case() {
    let (code, out, err) = run(&["audit", "--cases", "bogus"]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("printed-23"), "{err}");
}

#[test]
fn audit_over_cap_is_resource_error() {
    let (code, _, err) = run(&["audit", "--cases", "f3-lower", "--n-max", "100000"]);
    assert_eq!(code, 2, "{err}");
}

#[test]
fn audit_json_matches_csv() {
    let args = [
        "audit",
        "--cases",
        "decastro-printed-lower",
        "--n-max",
        "12",
        "--primes",
        "2,3",
    ];
    let csv_out = stdout_of(&args);
    let json_out = stdout_of(&[&args[..], &["--format", "json"]].concat());
    let records: Vec<Value> = serde_json::from_str(&json_out).unwrap();
    let rows: Vec<&str> = csv_out.lines().skip(1).collect();
    assert_eq!(records.len(), rows.len());
    for (rec, row) in records.iter().zip(rows) {
        let field = |k: &str| match &rec[k] {
            Value::Null => String::new(),
            Value::String(s) => s.clone(),
            other => other.to_string(),
        };
        let rebuilt = ["case_id", "p", "n", "k", "r", "m", "lhs", "rhs", "verdict"]
            .map(field)
            .join(",");
        assert_eq!(rebuilt, row);
        assert_eq!(rec["soundness"], "as-printed");
        assert!(rec["anchor"].as_str().is_some_and(|s| !s.is_empty()));
    }
}

#[test]
fn audit_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.csv");
    let path_str = path.to_str().unwrap();
    let (code, out, _) = run(&[
        "audit",
        "--cases",
        "wilson-congruence",
        "--n-max",
        "30",
        "--out",
        path_str,
    ]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.starts_with("case_id,"));
    assert!(
        written.lines().skip(1).all(|l| l.ends_with(",holds")),
        "{written}"
    );
}

#[test]
fn audit_thread_count_does_not_change_output() {
    let base = [
        "audit", "--cases", "all", "--n-max", "40", "--primes", "2,3,5",
    ];
    let one = run(&[&["--threads", "1"], &base[..]].concat());
    let four = run(&[&["--threads", "4"], &base[..]].concat());
    assert_eq!(one.0, 0, "{}", one.2);
    assert_eq!(one, four);
}

#[test]
fn golden_findings() {
    let (code, out, err) = run(&[
        "audit",
        "--cases",
        FINDINGS_CASES,
        "--n-max",
        "24",
        "--primes",
        "2,3",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out, include_str!("golden/findings.csv"));
    assert_eq!(err, include_str!("golden/findings.txt"));
}

#[test]
fn berezin_digits() {
    assert_eq!(
        stdout_of(&["berezin-digits", "-n", "3", "--base", "10", "--digits", "1"]),
        "6\n"
    );
    assert_eq!(stdout_of(&["berezin-digits", "-n", "2"]), "4\n");
    assert_eq!(
        stdout_of(&["berezin-digits", "-n", "3", "--base", "2", "--digits", "3"]),
        "000\n"
    );
    assert_eq!(
        stdout_of(&["berezin-digits", "-n", "2", "--digits", "3"]),
        "004\n"
    );
}

#[test]
fn berezin_digits_bad_base() {
    let (code, _, _) = run(&["berezin-digits", "-n", "3", "--base", "1"]);
    assert_eq!(code, 2);
}

#[test]
fn oracle_small_clean() {
    let out = stdout_of(&[
        "oracle",
        "--families",
        "factorial,hyperfactorial",
        "--n-max",
        "60",
        "--primes",
        "2,3",
    ]);
    assert!(out.lines().all(|l| l.ends_with(" 0 mismatches")), "{out}");
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("audit"));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_giantval");
    let ok = Command::new(bin)
        .args(["berezin-digits", "-n", "3"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(ok.stdout, b"6\n");
    let bad = Command::new(bin)
        .args(["val", "--family", "factorial", "-n", "5", "-p", "1"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
    let threads = Command::new(bin)
        .env("GIANTVAL_THREADS", "2")
        .args([
            "audit",
            "--cases",
            "printed-23",
            "--n-max",
            "6",
            "--primes",
            "2",
        ])
        .output()
        .unwrap();
    assert_eq!(threads.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&threads.stdout).contains("printed-23,2,6,,,,16,58,violated"));
}
