use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn toplat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_toplat"))
        .args(args)
        .env_remove("TOPLAT_MAX_ORDER")
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn json_file(path: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn analyze_z6() {
    let o = toplat(&["analyze", "--group", "Z 6"]);
    assert_eq!(code(&o), 0);
    let r: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(r["topologies"], 4);
    assert_eq!(r["height"], 2);
    assert_eq!(r["modular"], true);
}

#[test]
fn analyze_s3_is_a_chain() {
    let o = toplat(&["analyze", "--group", "S 3"]);
    assert_eq!(code(&o), 0);
    let r: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(r["topologies"], 3);
    assert_eq!(r["height"], 2);
    assert_eq!(r["distributive"], true);
}

#[test]
fn analyze_writes_dot_and_json() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("q8.dot");
    let json = dir.path().join("q8.json");
    let o = toplat(&[
        "analyze",
        "--group",
        "Q8",
        "--dot",
        dot.to_str().unwrap(),
        "--json",
        json.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    let text = std::fs::read_to_string(&dot).unwrap();
    assert!(text.starts_with("digraph"));
    assert_eq!(text.matches("label=").count(), 6);
    assert_eq!(json_file(&json)["topologies"], 6);
}

#[test]
fn usage_and_limit_exit_codes() {
    assert_eq!(code(&toplat(&["analyze", "--group", "Z seven"])), 2);
    assert_eq!(code(&toplat(&["verify", "nonsense"])), 2);
    assert_eq!(code(&toplat(&["analyze"])), 2);
    assert_eq!(code(&toplat(&["analyze", "--group", "Z 7 x Z 11"])), 3);
    assert_eq!(
        code(&toplat(&[
            "analyze",
            "--group",
            "Z 4",
            "--max-order",
            "100000"
        ])),
        2
    );
    assert_eq!(
        code(&toplat(&["verify", "prodanov", "--max-order", "32"])),
        3
    );
}

#[test]
fn max_order_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_toplat"))
        .args(["analyze", "--group", "Z 7 x Z 11"])
        .env("TOPLAT_MAX_ORDER", "80")
        .output()
        .unwrap();
    assert_eq!(code(&o), 0);
}

#[test]
fn verify_merzon_small() {
    let o = toplat(&["verify", "merzon", "--max-order", "16"]);
    assert_eq!(code(&o), 0);
    let s: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(s["passed"], true);
    assert_eq!(s["groups"], 35);
}

#[test]
fn verify_product_suite() {
    let o = toplat(&["--workers", "2", "verify", "th0-product"]);
    assert_eq!(code(&o), 0);
    let s: Value = serde_json::from_slice(&o.stdout).unwrap();
    let groups: Vec<&str> = s["reports"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["group"].as_str().unwrap())
        .collect();
    assert_eq!(groups, ["Z 3 x Q8", "Z^k 3 2 x D 4", "Z 5 x Q8"]);
}

/// On three points the lattice of topologies has two topologies covered by
/// their join whose meet is not covered by both, so this suite fails and
/// names them.
#[test]
fn toplattice_three_points() {
    let o = toplat(&["verify", "toplattice-classical", "--n", "3"]);
    assert_eq!(code(&o), 1);
    let s: Value = serde_json::from_slice(&o.stdout).unwrap();
    let r = &s["reports"][0];
    assert_eq!(r["topologies"], 29);
    assert_eq!(r["distributive"], false);
    assert!(r["distributive_witness"].is_array());
    assert!(r["dual_birkhoff_witness"].is_array());
    assert!(String::from_utf8_lossy(&o.stderr).contains("dual Birkhoff fails"));
}

#[test]
fn toplattice_two_points_passes() {
    assert_eq!(
        code(&toplat(&["verify", "toplattice-classical", "--n", "2"])),
        0
    );
}

#[test]
fn output_is_deterministic() {
    let a = toplat(&[
        "verify",
        "cover-transfer",
        "--max-order",
        "12",
        "--seed-less",
    ]);
    let b = toplat(&[
        "--workers",
        "1",
        "verify",
        "cover-transfer",
        "--max-order",
        "12",
    ]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn corpus_file_run() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = dir.path().join("corpus.json");
    std::fs::write(
        &corpus,
        r#"{
          "groups": ["Z 6", {"constructor": "D", "params": [4]},
                     {"product": ["Z 3", "Q8"]},
                     {"name": "V4", "order": 4,
                      "table": [[0,1,2,3],[1,0,3,2],[2,3,0,1],[3,2,1,0]]}],
          "suites": ["merzon", "oct11", "comfort-ross"],
          "caps": {"enumeration_order": 32}
        }"#,
    )
    .unwrap();
    let out = dir.path().join("run.json");
    let o = toplat(&[
        "run",
        "--corpus",
        corpus.to_str().unwrap(),
        "--json",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let s = json_file(&out);
    assert_eq!(s["passed"], true);
    assert_eq!(s["suites"][0]["groups"], 4);
    // only Z 6 and V4 are abelian
    assert_eq!(s["suites"][2]["groups"], 2);

    let o = toplat(&["verify", "meet-basis", "--corpus", corpus.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
}

#[test]
fn bad_corpus_file_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = dir.path().join("bad.json");
    std::fs::write(
        &corpus,
        r#"{"groups": [{"constructor": "A", "params": [5]}]}"#,
    )
    .unwrap();
    assert_eq!(
        code(&toplat(&[
            "verify",
            "merzon",
            "--corpus",
            corpus.to_str().unwrap()
        ])),
        2
    );
    std::fs::write(
        &corpus,
        r#"{"groups": ["Z 2"], "caps": {"enumeration_order": 100000}}"#,
    )
    .unwrap();
    assert_eq!(
        code(&toplat(&[
            "verify",
            "merzon",
            "--corpus",
            corpus.to_str().unwrap()
        ])),
        3
    );
}
