use std::process::Command;

use num_rational::BigRational;
use repseries::cli::run;
use repseries::series::rep_series;
use repseries::weylcore::{class_table, parse_group, DEFAULT_ENUM_CAP};
use serde_json::Value;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(
        std::iter::once("repseries").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = call(args);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

fn rationals(v: &Value) -> Vec<BigRational> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_str().unwrap().parse().unwrap())
        .collect()
}

#[test]
fn rep_json_round_trips() {
    for spec in [
        "SU(2)", "U(3)", "G2", "Sp(3)", "SO(8)", "U(2)xG2", "T^2", "F4",
    ] {
        let table = class_table(&parse_group(spec).unwrap(), DEFAULT_ENUM_CAP).unwrap();
        for n in 0..=5u32 {
            let doc = json(&[
                "rep",
                "--group",
                spec,
                "--n",
                &n.to_string(),
                "--format",
                "json",
            ]);
            assert_eq!(doc["formula"], "rep");
            assert_eq!(doc["parameter"], n);
            assert_eq!(doc["variable"], "s");
            assert_eq!(doc["weyl_order"], table.weyl_order().to_string());
            assert_eq!(
                rationals(&doc["coefficients"]),
                rep_series(&table, n).coeffs(),
                "{spec} n={n}"
            );
        }
    }
}

#[test]
fn json_is_byte_stable() {
    let args = ["classes", "--group", "F4", "--format", "json"];
    assert_eq!(call(&args), call(&args));
}

#[test]
fn u4_classes_json() {
    let doc = json(&["classes", "--group", "U(4)", "--format", "json"]);
    let records = doc["records"].as_array().unwrap();
    let mut sizes: Vec<u64> = records
        .iter()
        .map(|r| r["size"].as_str().unwrap().parse().unwrap())
        .collect();
    sizes.sort();
    assert_eq!(sizes, vec![1, 3, 6, 6, 8]);
    assert_eq!(doc["weyl_order"], "24");
    assert_eq!(records[0]["det_one_plus_sw"].as_array().unwrap().len(), 5);
}

#[test]
fn bigraded_json_has_t_parts() {
    let doc = json(&[
        "hilbert", "--group", "SU(2)", "--n", "2", "--format", "json",
    ]);
    assert_eq!(doc["formula"], "rep_hilbert");
    let parts = doc["t_parts"].as_array().unwrap();
    assert_eq!(parts.len(), 2);
    assert_eq!(parts[1]["t_degree"], 2);
    assert_eq!(
        rationals(&parts[1]["coefficients"]),
        rationals(&Value::from(vec!["0", "0", "1"]))
    );

    let doc = json(&[
        "comm",
        "--group",
        "U(3)",
        "--trunc",
        "4",
        "--bigraded",
        "--format",
        "json",
    ]);
    assert_eq!(doc["formula"], "comm_hilbert");
    assert_eq!(doc["order"], 4);
}

#[test]
fn other_commands() {
    assert_eq!(
        call(&["degrees", "--group", "E6"]).1,
        "E6: rank 6, |W| = 51840, dim 78\ndegrees: 2 5 6 8 9 12\n"
    );
    assert_eq!(
        call(&["hom", "--group", "SU(2)", "--n", "2"]).1,
        "1 + q^2 + 2q^3\n"
    );
    assert_eq!(call(&["euler", "--group", "G2", "--n", "1"]).1, "1\n");
    assert_eq!(call(&["smash", "--group", "U(3)", "--k", "1"]).1, "s\n");
    assert_eq!(
        call(&["xq", "--group", "U(3)", "--q", "3", "--trunc", "2"]).1,
        "1 + s + 2s^2 + O(s^3)\n"
    );
    let doc = json(&["euler", "--group", "SU(2)", "--n", "2", "--format", "json"]);
    assert_eq!(doc["value"], "2");
    let (code, out, _) = call(&["check", "--group", "U(3)", "--n", "2", "--k", "2"]);
    assert_eq!(code, 0);
    assert!(out.contains("checks passed"));
}

/// `(coefficient, s-degree, t-degree)` for each term of a text or LaTeX
/// rendering, with the truncation tail dropped.
fn terms(rendered: &str) -> Vec<(i64, u32, u32)> {
    let cleaned: String = rendered
        .chars()
        .filter(|c| !matches!(c, '$' | '{' | '}' | ' ' | '\n'))
        .collect();
    let body = cleaned.split("+O(").next().unwrap();
    let mut out = Vec::new();
    let mut rest = body;
    while !rest.is_empty() {
        let (sign, tail) = match rest.as_bytes()[0] {
            b'-' => (-1, &rest[1..]),
            b'+' => (1, &rest[1..]),
            _ => (1, rest),
        };
        let end = tail[1..].find(['+', '-']).map_or(tail.len(), |i| i + 1);
        let term = &tail[..end];
        rest = &tail[end..];
        let digits = term.chars().take_while(char::is_ascii_digit).count();
        let coeff: i64 = if digits == 0 {
            1
        } else {
            term[..digits].parse().unwrap()
        };
        let mut degrees = [0u32; 2];
        let mut vars = &term[digits..];
        while let Some(v) = vars.chars().next() {
            let slot = if v == 't' { 1 } else { 0 };
            vars = &vars[1..];
            let e = if let Some(stripped) = vars.strip_prefix('^') {
                let len = stripped.chars().take_while(char::is_ascii_digit).count();
                vars = &stripped[len..];
                stripped[..len].parse().unwrap()
            } else {
                1
            };
            degrees[slot] = e;
        }
        out.push((sign * coeff, degrees[0], degrees[1]));
    }
    out
}

#[test]
fn latex_matches_text() {
    let cases: [&[&str]; 6] = [
        &["rep", "--group", "U(4)", "--n", "3"],
        &["rep", "--group", "G2", "--n", "2"],
        &["hilbert", "--group", "U(3)", "--n", "3"],
        &["comm", "--group", "U(3)", "--trunc", "8"],
        &["comm", "--group", "SU(3)", "--trunc", "6", "--bigraded"],
        &["hom", "--group", "SU(3)", "--n", "2"],
    ];
    for args in cases {
        let (_, text, _) = call(args);
        let latex_args: Vec<&str> = args.iter().copied().chain(["--format", "latex"]).collect();
        let (code, latex, _) = call(&latex_args);
        assert_eq!(code, 0);
        assert!(
            latex.starts_with('$') && latex.trim_end().ends_with('$'),
            "{latex}"
        );
        let mut depth = 0i32;
        for c in latex.chars() {
            depth += match c {
                '{' => 1,
                '}' => -1,
                _ => 0,
            };
            assert!(depth >= 0, "{latex}");
        }
        assert_eq!(depth, 0, "{latex}");
        assert!(!latex.contains("^{}"), "{latex}");
        assert_eq!(terms(&latex), terms(&text), "{args:?}");
        assert!(!terms(&text).is_empty());
    }
}

#[test]
fn classes_latex_is_a_table() {
    let (code, out, _) = call(&["classes", "--group", "U(3)", "--format", "latex"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("\\begin{tabular}") && out.ends_with("\\end{tabular}\n"));
    assert_eq!(out.matches("\\\\").count(), 4);
}

fn binary() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_repseries"));
    cmd.env_remove("WEYL_ENUM_CAP");
    cmd
}

#[test]
fn binary_exit_codes() {
    let out = binary()
        .args(["rep", "--group", "U(2)", "--n", "1", "--format", "text"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "1 + s\n");

    let out = binary()
        .args(["rep", "--group", "E8", "--n", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("WEYL_ENUM_CAP"));

    let out = binary()
        .args(["rep", "--group", "SU(2)x", "--n", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}

#[test]
fn enum_cap_from_environment() {
    let out = binary()
        .env("WEYL_ENUM_CAP", "100")
        .args(["classes", "--group", "F4"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap of 100"));

    let out = binary()
        .env("WEYL_ENUM_CAP", "2000")
        .args(["classes", "--group", "F4"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));

    let out = binary()
        .env("WEYL_ENUM_CAP", "lots")
        .args(["classes", "--group", "G2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    // classical groups never enumerate
    let out = binary()
        .env("WEYL_ENUM_CAP", "1")
        .args(["rep", "--group", "SU(6)", "--n", "1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}
