use std::process::{Command, Output};

use serde_json::Value;

fn nilops(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nilops"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn first_line(args: &[&str]) -> String {
    let out = nilops(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    stdout(&out).lines().next().unwrap_or("").to_string()
}

const Y1: &str = "P1^4+P0^3+P0^2+P1^2+P0^1+P0^1";
const X1: &str = "P0^4+P1^4+P1^3";

#[test]
fn golden_products() {
    let cases = [
        (
            Y1,
            X1,
            "[7,7,5,2,2,1]/[7,6,4,1,1,1]",
            "P0^7+P1^7+P1^5+P1^2+P1^2+P0^1",
        ),
        (
            X1,
            Y1,
            "[8,6,4,2,1,1,1,1]/[7,6,4,1,1,1]",
            "P1^8+P0^6+P0^4+P1^2+P0^1+P0^1+P1^1+P1^1",
        ),
        (
            "P1^2",
            "P0^1+P0^1+P1^1",
            "[2,1,1,1]/[2,1]",
            "P0^2+P0^1+P1^1+P1^1",
        ),
        ("P0^1+P0^1+P1^1", "P1^2", "[3,1,1]/[2,1]", "P1^3+P0^1+P1^1"),
        (
            "P1^2",
            "P1^2+P0^1+P0^1+P1^1",
            "[3,1,1,1,1]/[2,1,1]",
            "P1^3+P0^1+P0^1+P1^1+P1^1",
        ),
        (
            "P1^2+P0^1+P0^1+P1^1",
            "P1^2",
            "[3,2,1,1]/[2,1,1]",
            "P1^3+P1^2+P0^1+P1^1",
        ),
        ("", "P1^2", "[2]/[1]", "P1^2"),
    ];
    for (y, x, pair, pickets) in cases {
        let out = nilops(&["mul", y, x]);
        assert_eq!(out.status.code(), Some(0));
        let text = stdout(&out);
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some(pair), "{y} * {x}");
        assert_eq!(lines.next(), Some(format!("pickets: {pickets}").as_str()));
        assert!(text.contains("Z = Y*X"));
    }
}

#[test]
fn mul_accepts_pair_form_and_whitespace() {
    assert_eq!(first_line(&["mul", "[2] / [1]", " 0 "]), "[2]/[1]");
    assert_eq!(first_line(&["mul", "P1^1", "P1^1"]), "[1,1]/[]");
}

#[test]
fn json_output() {
    let out = nilops(&["--json", "mul", "P1^2", "P1^2+P0^1+P0^1+P1^1"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["product"]["beta"], serde_json::json!([3, 1, 1, 1, 1]));
    assert_eq!(v["product"]["gamma"], serde_json::json!([2, 1, 1]));
    assert_eq!(v["product"]["pickets"], "P1^3+P0^1+P0^1+P1^1+P1^1");

    let out = nilops(&[
        "--json",
        "order",
        "[3,1,1]/[2,1]",
        "[2,1,1,1]/[2,1]",
        "--via",
        "hom",
    ]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["leq"], true);
    assert_eq!(v["witness"], Value::Null);

    let out = nilops(&["--json", "verify", "--suite", "assoc", "--max-b", "1"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v[0]["checked"], 27);
}

#[test]
fn exit_codes() {
    // strip violation is a domain error and names the offending part
    let out = nilops(&["mul", "[3]/[1]", "0"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("part 1"));
    // objects from different S_a^b cannot be compared
    assert_eq!(nilops(&["order", "P1^2", "P0^2"]).status.code(), Some(1));
    // parse errors carry a grammar hint
    let out = nilops(&["mul", "Q3", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("hint:"));
    assert_eq!(nilops(&["render", "P2^1"]).status.code(), Some(2));
    assert_eq!(
        nilops(&["oracle", "ext", "P1^1", "P1^1", "--p", "4"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(nilops(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(nilops(&["pow", "P1^1"]).status.code(), Some(2));
}

#[test]
fn size_guard_is_a_domain_error() {
    let out = Command::new(env!("CARGO_BIN_EXE_nilops"))
        .args(["oracle", "ext", "P1^2+P0^1", "P1^2"])
        .env("NILOPS_MAX_ORACLE_BITS", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn other_commands() {
    assert_eq!(first_line(&["pow", "P1^1", "3"]), "[1,1,1]/[]");
    assert_eq!(first_line(&["pow", "P1^2", "2"]), "[3,1]/[2]");
    assert_eq!(first_line(&["pow", "P0^2", "0"]), "[]/[]");
    assert_eq!(first_line(&["hom", "P1^2", "P0^2"]), "1");
    assert_eq!(first_line(&["hom", "P0^2", "P1^2"]), "2");
    assert_eq!(
        stdout(&nilops(&["orbit-dim", "P0^3"])),
        "formula: 6\nvia End: 6\n"
    );
    assert_eq!(first_line(&["decompose-word", "P1^2"]), "P0^1 * P1^1");
    assert_eq!(first_line(&["decompose-word", "0"]), "0");
    assert_eq!(
        stdout(&nilops(&["enumerate", "1", "2"])),
        "[2]/[1]  P1^2\n[1,1]/[1]  P0^1+P1^1\n"
    );
    assert_eq!(
        stdout(&nilops(&["hasse", "1", "2", "--format", "text"])),
        "[2]/[1] -> [1,1]/[1]\n"
    );
    assert!(stdout(&nilops(&["hasse", "1", "3"])).starts_with("digraph S_1_3 {"));
    assert_eq!(stdout(&nilops(&["render", "P1^2"])), "[ ]\n[1]\n");
    assert_eq!(
        first_line(&["render", "P1^2", "--format", "latex"]),
        "\\ytableaushort{\\none,1} * {1,1}"
    );
    let v = first_line(&["order", "P0^1+P1^1", "P1^2"]);
    assert!(v.starts_with("[1,1]/[1] not <= [2]/[1]"), "{v}");
}

#[test]
fn witness_and_oracle() {
    let text = stdout(&nilops(&["witness", "P1^2+P0^1+P0^1+P1^1", "P1^2"]));
    assert!(
        text.contains("E2(2,2,1): 0 -> P1^2 -> P1^3+P1^2 -> P1^2+P0^1 -> 0"),
        "{text}"
    );
    assert!(text.ends_with("sum: 0 -> P1^2 -> P1^3+P1^2+P0^1+P1^1 -> P1^2+P0^1+P0^1+P1^1 -> 0\n"));

    let out = nilops(&["oracle", "ext", "P1^1", "P1^1"]);
    assert_eq!(stdout(&out), "[1,1]/[]  P1^1+P1^1\n");
    let out = nilops(&["oracle", "ext", "P0^1", "P1^1"]);
    assert_eq!(stdout(&out), "[1,1]/[1]  P0^1+P1^1\n[2]/[1]  P1^2\n");
    let out = nilops(&["oracle", "verify", "P0^1+P1^1", "P1^2", "--p", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("PASS over F_3"));
}

#[test]
fn verify_suites() {
    let out = nilops(&["verify", "--suite", "assoc", "--max-b", "3"]);
    assert_eq!(stdout(&out), "assoc: PASS: 5832 triples\n");
    for suite in [
        "mono",
        "orders",
        "thm12",
        "orbit-dim",
        "witness",
        "partial-sums",
        "words",
        "strip",
        "classify",
        "oracle",
    ] {
        let out = nilops(&["verify", "--suite", suite, "--max-b", "4"]);
        assert_eq!(out.status.code(), Some(0), "{suite}");
        assert!(stdout(&out).contains("PASS"), "{suite}");
    }
}
