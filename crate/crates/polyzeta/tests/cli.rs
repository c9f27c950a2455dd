//! End-to-end checks of the command-line interface: output formats, the
//! documented exit codes, and deterministic printing.

use std::process::{Command, Output};

fn polyzeta(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polyzeta"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn product_stuffle_matches_documented_output() {
    let out = polyzeta(&["product", "--op", "stuffle", "y1", "y2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "y1 y2 + y2 y1 + y3");
}

#[test]
fn product_shuffle_and_conc() {
    let out = polyzeta(&["product", "--op", "shuffle", "x0 x1", "x1"]);
    assert_eq!(stdout(&out).trim(), "2*x0 x1 x1 + x1 x0 x1");
    let out = polyzeta(&["product", "--op", "conc", "y1 + y2", "y1"]);
    assert_eq!(stdout(&out).trim(), "y1 y1 + y2 y1");
}

#[test]
fn constants_adopt_the_other_operands_alphabet() {
    let out = polyzeta(&["product", "--op", "conc", "1", "x0"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "x0");
    let out = polyzeta(&["product", "--op", "stuffle", "2*1", "y1"]);
    assert_eq!(stdout(&out).trim(), "2*y1");
}

#[test]
fn hsum_json_value() {
    let out = polyzeta(&["hsum", "y2 y1", "--upper", "4", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["value"], "17/32");
}

#[test]
fn hsum_csv_table() {
    let out = polyzeta(&["hsum", "y1", "--upper", "3", "--format", "csv"]);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("N,value"));
    assert_eq!(lines.next(), Some("0,0"));
    assert_eq!(lines.next(), Some("1,1"));
    assert_eq!(lines.next(), Some("2,3/2"));
    assert_eq!(lines.next(), Some("3,11/6"));
}

#[test]
fn li_csv_coefficients() {
    let out = polyzeta(&["li", "x0 x1", "--order", "3", "--format", "csv"]);
    let text = stdout(&out);
    assert!(text.contains("order,coefficient"));
    assert!(text.contains("2,1/4"));
    assert!(text.contains("3,1/9"));
}

#[test]
fn parse_error_exits_2() {
    let out = polyzeta(&["hsum", "y0 y1", "--upper", "4"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(err.contains("parse error"), "{err}");
}

#[test]
fn domain_error_exits_3() {
    // pi_Y is undefined on words ending in x0.
    let out = polyzeta(&["li", "x1 x0", "--order", "3"]);
    assert_eq!(out.status.code(), Some(3));
    // mzv of a divergent word.
    let out = polyzeta(&["mzv", "y1 y2"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn unreachable_tolerance_exits_4() {
    let out = polyzeta(&["mzv", "y2 y1", "--tol", "1e-14"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn zeta_json_schema() {
    let out = polyzeta(&["zeta", "3", "--prec", "30", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["operation"], "zeta");
    assert_eq!(v["precision_digits"], 30);
    assert!(v["value"]["re"].as_str().unwrap().starts_with("1.2020569"));
    assert!(v["error_bound"].as_f64().unwrap() < 1e-20);
}

#[test]
fn regularize_output() {
    let out = polyzeta(&["regularize", "y1 y1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("g^2"), "{text}");
    assert!(text.contains("y2"), "{text}");
}

#[test]
fn verify_unknown_suite_fails_cleanly() {
    let out = polyzeta(&["verify", "does-not-exist"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verify_single_suite_passes() {
    let out = polyzeta(&["verify", "dom-witness"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("[PASS]"));
}

#[test]
fn reflect_holds_at_a_point() {
    let out = polyzeta(&["reflect", "1", "0.3+0.1i", "--prec", "40"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn star_of_letter() {
    let out = polyzeta(&["star", "1/2*x0", "--trunc", "3"]);
    let text = stdout(&out);
    assert!(text.contains("1 + 1/2*x0 + 1/4*x0 x0 + 1/8*x0 x0 x0"), "{text}");
}

#[test]
fn deterministic_output_across_runs() {
    let a = stdout(&polyzeta(&["product", "--op", "stuffle", "y1 y1", "y2 y1"]));
    let b = stdout(&polyzeta(&["product", "--op", "stuffle", "y1 y1", "y2 y1"]));
    assert_eq!(a, b);
    // Printed output reparses to an equal polynomial (round trip).
    let reparsed = stdout(&polyzeta(&["product", "--op", "conc", a.trim(), "1"]));
    assert_eq!(a.trim(), reparsed.trim());
}
