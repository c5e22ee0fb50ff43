//! End-to-end runs of the `sqp` binary.

use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

const PAIRS: &str = "vars: x1 x2 x3 x4\ngens: x1*x2, x1*x3, x1*x4, x2*x3, x2*x4, x3*x4\n";
const TRIANGLE: &str = "vars: x y z\ngens: x*y, x*z, y*z\n";

fn sqp(args: &[&str], stdin: &str) -> Output {
    sqp_env(args, stdin, &[])
}

fn sqp_env(args: &[&str], stdin: &str, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_sqp"));
    cmd.args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped());
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().expect("spawn sqp");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

#[test]
fn betti_diagrams_are_golden() {
    let out = sqp(&["betti"], PAIRS);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "       0 1 2 3\ntotal: 1 6 8 3\n    0: 1 . . .\n    1: . 6 8 3\n");
    let squared = stdout(&sqp(&["square-power", "-m", "2"], PAIRS));
    let out = sqp(&["betti"], &squared);
    assert_eq!(
        stdout(&out),
        "       0 1 2 3\ntotal: 1 6 8 3\n    0: 1 . . .\n    1: . . . .\n    2: . . . .\n    \
         3: . 6 . .\n    4: . . 8 .\n    5: . . . 3\n"
    );
}

#[test]
fn invariants_of_pairs() {
    assert_eq!(stdout(&sqp(&["reg"], PAIRS)).trim(), "1");
    assert_eq!(stdout(&sqp(&["pd"], PAIRS)).trim(), "3");
    assert_eq!(stdout(&sqp(&["depth"], PAIRS)).trim(), "1");
    assert_eq!(stdout(&sqp(&["dim"], PAIRS)).trim(), "1");
}

#[test]
fn square_power_one_echoes_input() {
    let shown = stdout(&sqp(&["show"], TRIANGLE));
    let out = sqp(&["square-power", "-m", "1"], TRIANGLE);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), shown);
    assert!(shown.contains("x*y"));
}

#[test]
fn json_round_trip() {
    let out = sqp(&["--json", "square-power", "-m", "2"], "{\"n\":2,\"gens\":[[1,0],[0,1]]}");
    assert_eq!(code(&out), 0);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["n"], 2);
    assert_eq!(value["gens"], serde_json::json!([[2, 0], [0, 2]]));
    let betti: serde_json::Value = serde_json::from_str(&stdout(&sqp(&["--json", "betti"], PAIRS))).unwrap();
    assert_eq!(betti["char"], 0);
    assert_eq!(betti["entries"], serde_json::json!([[0, 0, 1], [1, 2, 6], [2, 3, 8], [3, 4, 3]]));
}

#[test]
fn files_are_read_when_given() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.txt");
    let b = dir.path().join("b.txt");
    std::fs::write(&a, "vars: x y\ngens: x\n").unwrap();
    std::fs::write(&b, "vars: x y\ngens: x^2, y\n").unwrap();
    let out = sqp(&["intersect", a.to_str().unwrap(), b.to_str().unwrap()], "");
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("gens: x^2, x*y"), "{}", stdout(&out));
}

#[test]
fn decompositions_and_primes() {
    let text = stdout(&sqp(&["decompose"], TRIANGLE));
    for c in ["(x, y)", "(x, z)", "(y, z)"] {
        assert!(text.contains(c), "{text}");
    }
    let ass = stdout(&sqp(&["ass"], "vars: x y\ngens: x^2, x*y\n"));
    assert!(ass.contains("(x)") && ass.contains("(x, y)"), "{ass}");
    let min = stdout(&sqp(&["min"], "vars: x y\ngens: x^2, x*y\n"));
    assert!(min.contains("(x)") && !min.contains("(x, y)"), "{min}");
    let sym = stdout(&sqp(&["symbolic", "-s", "2"], TRIANGLE));
    assert!(sym.contains("x*y*z"), "{sym}");
    let closure = stdout(&sqp(&["closure"], "vars: x y\ngens: x^2, y^2\n"));
    assert!(closure.contains("x*y"), "{closure}");
}

#[test]
fn probes_report_window_and_exit_status() {
    let out = sqp(&["probe", "extremal-power", "--max-s", "4"], TRIANGLE);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).ends_with("probe extremal-power on window s <= 4: holds-on-window\n"));
    let out = sqp(&["probe", "ntf", "--max-s", "3", "-m", "2"], TRIANGLE);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("violated-at-s2"));
    let out = sqp(&["--json", "probe", "stability", "--max-s", "3", "-m", "2"], TRIANGLE);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["window"], 3);
    assert_eq!(value["verdict"], "holds-on-window");
    let again = sqp(&["--json", "probe", "stability", "--max-s", "3", "-m", "2"], TRIANGLE);
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn verify_seeded_corpus_and_persist() {
    let dir = tempfile::tempdir().unwrap();
    let out = sqp(
        &["verify", "reg-formula", "--seed", "7", "--count", "100", "--results-dir", dir.path().to_str().unwrap()],
        "",
    );
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    assert!(stdout(&out).starts_with("reg-formula: 100 passed, 0 failed"));
    let report = dir.path().join("7-reg-formula.json");
    assert!(Path::new(&report).exists());
    let value: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(report).unwrap()).unwrap();
    assert_eq!(value["theorem"], "reg-formula");
    assert_eq!(value["passed"], 100);
}

#[test]
fn verify_replays_a_single_ideal() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("pairs.txt");
    std::fs::write(&file, PAIRS).unwrap();
    let out = sqp(&["verify", "betti-scaling", "--ideal-file", file.to_str().unwrap()], "");
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("betti-scaling: 1 passed"));
}

#[test]
fn input_errors_exit_two() {
    assert_eq!(code(&sqp(&["show"], "vars: x y\ngens: x^-1\n")), 2);
    assert_eq!(code(&sqp(&["show"], "vars: x y\ngens: z\n")), 2);
    assert_eq!(code(&sqp(&["square-power", "-m", "0"], TRIANGLE)), 2);
    assert_eq!(code(&sqp(&["frobnicate"], TRIANGLE)), 2);
    assert_eq!(code(&sqp(&["verify", "no-such-theorem"], "")), 2);
    assert_eq!(code(&sqp(&["betti"], "vars: x\ngens: 1\n")), 2);
}

#[test]
fn resource_caps_exit_three() {
    let out = sqp_env(&["betti"], PAIRS, &[("SQP_MAX_GENS", "4")]);
    assert_eq!(code(&out), 3);
    assert!(String::from_utf8_lossy(&out.stderr).contains("4"));
}
