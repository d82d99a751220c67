use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use resmc::kformula::exceeds_n4;
use resmc_cli::commands::{self, Exit};
use resmc_cli::{instance, Format};
use serde_json::Value;

fn resmc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_resmc")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn kvalue_examples() {
    let out = resmc(&["kvalue", "-a", "1", "-m", "8", "-n", "16"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("K(1,8,16) = 4\n"));

    let out = resmc(&["kvalue", "-a", "1", "-m", "8", "-n", "15"]);
    assert!(stdout(&out).starts_with("K(1,8,15) = infinite\n"));
    assert!(stdout(&out).contains("exceeds n4(8): no"));

    let out = resmc(&["kvalue", "-a", "0", "-m", "3", "-n", "3"]);
    assert_eq!(stdout(&out), "K(0,3,3) = infinite\n");

    let out = resmc(&["kvalue", "-a", "2", "-m", "1", "-n", "10"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("unsupported"));
}

#[test]
fn kvalue_machine_output() {
    let out = resmc(&["kvalue", "-a", "1", "-m", "8", "-n", "16", "--machine"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["k"], 4);
    assert_eq!(v["n4"], "10+√33");
    assert_eq!(v["exceeds_n4"], true);
    let out = resmc(&["kvalue", "-a", "1", "-m", "2", "-n", "7", "--machine"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["k"], "infinite");
    assert_eq!(v["n4"], "7");
}

#[test]
fn construct_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("g.json");
    let out = resmc(&["construct", "-m", "8", "-n", "16", "--out", path_str(&file)]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("4 components, verified"));

    let inst = instance::read(&file).unwrap();
    assert_eq!(inst.graph.n(), 16);
    assert_eq!(inst.graph.edge_count(), 24);
    assert_eq!(inst.coloring.k(), 4);

    let out = resmc(&["verify", path_str(&file), "-a", "1", "-m", "8"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("PASS"));

    let out = resmc(&["verify", path_str(&file), "-a", "1", "-m", "9", "--machine"]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["violation"], "no_full_component");
    assert_eq!(v["attackers"], serde_json::json!([0]));
}

#[test]
fn construct_infeasible() {
    let out = resmc(&["construct", "-m", "8", "-n", "15"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("n4(8) = 10+√33"));
    assert!(out.stdout.is_empty());
}

#[test]
fn construct_dot() {
    let out = resmc(&["construct", "-m", "4", "-n", "11", "--format", "dot"]);
    assert_eq!(out.status.code(), Some(0));
    let dot = stdout(&out);
    assert!(dot.starts_with("graph "));
    assert_eq!(dot.matches("subgraph cluster_").count(), 4);
    // Three triangles and one edge.
    assert_eq!(dot.matches(" -- ").count(), 10);
    assert!(dot.contains("v0 [label=\"v0\\n{2,3}\"]"));
}

#[test]
fn verify_failing_instance() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("two_k2.json");
    fs::write(
        &file,
        r#"{"n": 4, "k": 2, "edges": [[0, 1], [2, 3]], "colors": [[1], [2], [1], [2]]}"#,
    )
    .unwrap();
    let out = resmc(&["verify", path_str(&file), "-a", "1", "-m", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).starts_with("FAIL: A = {0}, M = {2}"), "{}", stdout(&out));
}

#[test]
fn verify_input_errors() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("bad.json");
    fs::write(&file, r#"{"n": 1, "k": 4, "edges": [], "colors": [[1, 5]]}"#).unwrap();
    let out = resmc(&["verify", path_str(&file), "-a", "1", "-m", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("colors[0][1]"));

    fs::write(&file, "{ not json").unwrap();
    assert_eq!(resmc(&["verify", path_str(&file), "-a", "1", "-m", "0"]).status.code(), Some(2));

    let missing = dir.path().join("missing.json");
    assert_eq!(resmc(&["verify", path_str(&missing), "-a", "1", "-m", "0"]).status.code(), Some(2));
}

#[test]
fn oracle_examples() {
    let out = resmc(&["oracle", "-a", "1", "-m", "1", "-n", "6"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("oracle K(1,1,6) = 2"));
    assert!(stdout(&out).contains("agrees"));

    let out = resmc(&["oracle", "-a", "1", "-m", "1", "-n", "5"]);
    assert!(stdout(&out).starts_with("oracle K(1,1,5) = infinite"));
    assert!(stdout(&out).contains("agrees"));

    let out = resmc(&["oracle", "-a", "1", "-m", "2", "-n", "7", "--machine"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["k"], "infinite");
    assert_eq!(v["verdict"], "agrees");

    let out = resmc(&["oracle", "-a", "1", "-m", "1", "-n", "8"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("cap"));
}

#[test]
fn oracle_witness_file_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("w.json");
    let out = resmc(&[
        "oracle",
        "-a",
        "1",
        "-m",
        "1",
        "-n",
        "6",
        "-k",
        "3",
        "--witness",
        path_str(&file),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let out = resmc(&["verify", path_str(&file), "-a", "1", "-m", "1"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
}

#[test]
fn construct_verify_round_trip_every_feasible_pair() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("r.json");
    let mut checked = 0;
    for m in 1..=10u64 {
        for n in 1..=40u64 {
            let built = commands::construct(m, n, Format::Json, Some(&file));
            if !exceeds_n4(m, n) {
                assert_eq!(built.exit, Exit::Failure, "m={m} n={n}");
                continue;
            }
            assert_eq!(built.exit, Exit::Success, "m={m} n={n}: {}", built.stderr);
            let text = fs::read_to_string(&file).unwrap();
            let inst = instance::parse(&text).unwrap();
            assert_eq!(inst.to_file().to_json(), text, "m={m} n={n}");
            let verified = commands::verify(&file, 1, m as usize, false);
            assert_eq!(verified.exit, Exit::Success, "m={m} n={n}: {}", verified.stdout);
            checked += 1;
        }
    }
    assert_eq!(checked, 282);
}
