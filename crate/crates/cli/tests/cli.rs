use std::process::{Command, Output};

use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_cubic-torsion");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn check_ruled_out_reports_trace_rejection() {
    let out = run(&["check", "--n", "25"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("25 (t = 3, inadmissible)"), "{text}");
    assert!(text.trim_end().ends_with("verdict: RuledOut"), "{text}");
}

#[test]
fn check_inconclusive_names_first_failure() {
    let out = run(&["check", "--n", "20"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).contains("first failing step: gonality gate"));
}

#[test]
fn cross_validation_confirms() {
    let out = run(&["check", "--n", "22", "--cross-validate"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("oracle-confirmed"));
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        &["check", "--n", "25", "--degree", "4"][..],
        &["check", "--n", "0"],
        &["check"],
        &["enumerate", "--q", "12"],
        &["enumerate", "--q", "37"],
        &["enumerate", "--q", "9", "--traces", "--orders"],
        &["tables", "--n", "23"],
        &["no-such-command"],
    ] {
        assert_eq!(run(args).status.code(), Some(1), "{args:?}");
    }
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn enumerate_modes() {
    let traces = stdout(&run(&["enumerate", "--q", "3", "--traces"]));
    assert_eq!(traces.trim(), "{-3, -2, -1, 0, 1, 2, 3}");

    let orders = stdout(&run(&["enumerate", "--q", "5"]));
    let total: u64 = orders
        .lines()
        .map(|l| l.split('\t').nth(1).unwrap().parse::<u64>().unwrap())
        .sum();
    assert_eq!(total, 20);

    let hits = stdout(&run(&[
        "enumerate",
        "--q",
        "27",
        "--with-point-of-order",
        "25",
    ]));
    assert!(hits
        .trim_end()
        .ends_with("0 curves over F_27 with a point of order 25"));
}

#[test]
fn waterhouse_and_genus() {
    let text = stdout(&run(&["waterhouse", "--q", "27"]));
    assert!(text.contains("excluded: -6, -3, 3, 6"), "{text}");
    assert_eq!(stdout(&run(&["genus", "--n", "49"])).trim(), "69");
    let tables = stdout(&run(&["tables", "--n", "65"]));
    assert!(tables.contains("consistent"));
    assert!(tables.contains("finite = false"));
}

#[test]
fn certificate_json_shape() {
    let path = std::path::Path::new(env!("CARGO_TARGET_TMPDIR")).join("cli-40.json");
    let out = run(&[
        "check",
        "--n",
        "40",
        "--certificate",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["schema_version"], 1);
    assert_eq!(doc["input"]["level"], 40);
    assert_eq!(doc["verdict"], "RuledOut");
    let steps = doc["steps"].as_array().unwrap();
    assert_eq!(steps.first().unwrap()["name"], "hypotheses");
    assert_eq!(steps.last().unwrap()["name"], "good_reduction");
    assert!(steps.iter().all(|s| s["status"] == "pass"));
    assert!(doc.get("cross_validation").is_none());
}
