//! End-to-end tests driving the `usg` binary: output determinism, the
//! exit-code contract, format round-trips and configuration precedence.

use std::process::{Command, Output};

fn usg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_usg"))
        .args(args)
        .env_remove("USG_WORKERS")
        .env_remove("USG_MAX_ORACLE_VERTICES")
        .env_remove("USG_MAX_BRANCH_NODES")
        .output()
        .expect("binary runs")
}

fn usg_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_usg"));
    cmd.args(args);
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout(out)).expect("stdout is json")
}

#[test]
fn gen_dimacs_headers() {
    let out = usg(&["gen", "--n", "4", "--k", "2", "--format", "dimacs"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("p edge 6 12"));

    let out = usg(&["gen", "--n", "3", "--k", "2"]);
    assert!(stdout(&out).contains("p edge 3 3"), "J(3,2) is a triangle");

    let out = usg(&["gen", "--n", "5", "--k", "2", "--t", "0"]);
    assert!(stdout(&out).contains("p edge 10 15"), "Petersen");
}

#[test]
fn identical_invocations_are_byte_identical() {
    for args in [
        vec!["gen", "--n", "5", "--k", "2", "--format", "json"],
        vec!["superkappa", "--n", "6", "--k", "2"],
        vec!["table", "--k-max", "2", "--n-max", "5"],
        vec!["paths", "--lemma", "7", "--n", "7", "--k", "3"],
    ] {
        let a = usg(&args);
        let b = usg(&args);
        assert_eq!(stdout(&a), stdout(&b), "{args:?}");
    }
}

#[test]
fn worker_count_does_not_change_output() {
    let base = usg(&["superkappa", "--n", "6", "--k", "3", "--method", "flow"]);
    for workers in ["1", "2", "4"] {
        let out = usg(&[
            "superkappa", "--n", "6", "--k", "3", "--method", "flow", "--workers", workers,
        ]);
        assert_eq!(stdout(&base), stdout(&out), "workers = {workers}");
    }
}

#[test]
fn timing_flag_adds_elapsed_fields() {
    let plain = usg(&["superkappa", "--n", "6", "--k", "2"]);
    assert!(!stdout(&plain).contains("elapsed_ms"));
    let timed = usg(&["superkappa", "--n", "6", "--k", "2", "--timing"]);
    assert!(stdout(&timed).contains("elapsed_ms"));
}

#[test]
fn every_format_is_accepted_back_by_verify() {
    let dir = std::env::temp_dir().join("usg-cli-roundtrip");
    std::fs::create_dir_all(&dir).unwrap();
    let cert_path = dir.join("cut62.json");
    std::fs::write(&cert_path, stdout(&usg(&["witness", "--kind", "jn2", "--n", "6"]))).unwrap();
    for format in ["dimacs", "json", "edge-list"] {
        let graph = stdout(&usg(&["gen", "--n", "6", "--k", "2", "--format", format]));
        let graph_path = dir.join(format!("g-{format}"));
        std::fs::write(&graph_path, &graph).unwrap();
        let out = usg(&[
            "verify",
            "--graph",
            graph_path.to_str().unwrap(),
            "--certificate",
            cert_path.to_str().unwrap(),
        ]);
        assert_eq!(
            out.status.code(),
            Some(0),
            "{format}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
    // A jn2 witness below n = 6 is rejected outright.
    let out = usg(&["witness", "--kind", "jn2", "--n", "5"]);
    assert_ne!(out.status.code(), Some(0));
    assert!(stdout(&out).is_empty());
}

#[test]
fn exit_code_contract() {
    // 0: success.
    assert_eq!(usg(&["kappa", "--n", "5", "--k", "2"]).status.code(), Some(0));
    // 2: usage errors (bad parameters, unsupported formula cell).
    assert_eq!(usg(&["kappa", "--n", "2", "--k", "5"]).status.code(), Some(2));
    assert_eq!(
        usg(&["superkappa", "--n", "5", "--k", "3", "--method", "formula"])
            .status
            .code(),
        Some(2),
        "ambiguous closed-form cell must refuse --method formula"
    );
    assert_eq!(
        usg(&["paths", "--lemma", "9", "--n", "7", "--k", "3"])
            .status
            .code(),
        Some(2)
    );
    // 3: capacity and flagged-omitted sub-cases.
    assert_eq!(
        usg(&[
            "superkappa", "--n", "7", "--k", "2", "--method", "oracle",
            "--max-oracle-vertices", "10",
        ])
        .status
        .code(),
        Some(3)
    );
    assert_eq!(
        usg(&["paths", "--lemma", "8", "--n", "6", "--k", "3", "--case", "I"])
            .status
            .code(),
        Some(3),
        "unrealisable sub-case is flagged-omitted, not a failure"
    );
    // 3: budget exhausted.
    assert_eq!(
        usg(&[
            "superkappa", "--n", "6", "--k", "2", "--method", "flow",
            "--max-branch-nodes", "2",
        ])
        .status
        .code(),
        Some(3)
    );
}

#[test]
fn env_configures_defaults_and_flags_override() {
    // Environment alone forces the cap down: the oracle refuses.
    let out = usg_env(
        &["superkappa", "--n", "6", "--k", "2", "--method", "oracle"],
        &[("USG_MAX_ORACLE_VERTICES", "10")],
    );
    assert_eq!(out.status.code(), Some(3));
    // An explicit flag overrides the environment.
    let out = usg_env(
        &[
            "superkappa", "--n", "6", "--k", "2", "--method", "oracle",
            "--max-oracle-vertices", "24",
        ],
        &[("USG_MAX_ORACLE_VERTICES", "10")],
    );
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn superkappa_reports_expected_values() {
    let d = json(&usg(&["superkappa", "--n", "7", "--k", "2"]));
    assert_eq!(d["kappa_prime"], 12);
    assert_eq!(d["kappa"], 10);

    let d = json(&usg(&["superkappa", "--n", "8", "--k", "3", "--method", "formula"]));
    assert_eq!(d["kappa_prime"], 22);
    assert_eq!(d["witness"]["is_super"], true);
    assert_eq!(d["witness"]["cut"].as_array().unwrap().len(), 22);

    let d = json(&usg(&["superkappa", "--n", "5", "--k", "2"]));
    assert_eq!(d["kappa_prime"], "infinity");
    assert_eq!(d["exhaustion"]["kind"], "oracle-exhaustion");

    let d = json(&usg(&["kappa", "--n", "9", "--k", "4"]));
    assert_eq!(d["kappa"], 20);
}

#[test]
fn witness_command_matches_formulas() {
    let d = json(&usg(&["witness", "--kind", "jn2", "--n", "6"]));
    assert_eq!(d["size"], 9);
    assert_eq!(d["is_super"], true);

    let d = json(&usg(&["witness", "--kind", "edge-neighborhood", "--n", "7", "--k", "3"]));
    assert_eq!(d["size"], 17);
    assert_eq!(d["is_super"], true);

    let out = usg(&["witness", "--kind", "edge-neighborhood", "--n", "5", "--k", "3"]);
    assert_ne!(out.status.code(), Some(0));
}

#[test]
fn verify_accepts_valid_and_names_violations() {
    let dir = std::env::temp_dir().join("usg-cli-verify");
    std::fs::create_dir_all(&dir).unwrap();
    let graph_path = dir.join("j62.dimacs");
    std::fs::write(&graph_path, stdout(&usg(&["gen", "--n", "6", "--k", "2"]))).unwrap();
    let cert_path = dir.join("cut.json");
    std::fs::write(&cert_path, stdout(&usg(&["witness", "--kind", "jn2", "--n", "6"]))).unwrap();

    let ok = usg(&[
        "verify",
        "--graph",
        graph_path.to_str().unwrap(),
        "--certificate",
        cert_path.to_str().unwrap(),
    ]);
    assert_eq!(ok.status.code(), Some(0), "{}", String::from_utf8_lossy(&ok.stderr));

    // Tamper: drop one vertex from the cut.
    let mut doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&cert_path).unwrap()).unwrap();
    let cut = doc["cut"].as_array().unwrap().clone();
    doc["cut"] = serde_json::Value::Array(cut[1..].to_vec());
    let bad_path = dir.join("tampered.json");
    std::fs::write(&bad_path, serde_json::to_string(&doc).unwrap()).unwrap();
    let bad = usg(&[
        "verify",
        "--graph",
        graph_path.to_str().unwrap(),
        "--certificate",
        bad_path.to_str().unwrap(),
    ]);
    assert_eq!(bad.status.code(), Some(1));
    let err = String::from_utf8_lossy(&bad.stderr);
    assert!(err.contains("size") || err.contains("components"), "{err}");

    // Mismatched graph parameters.
    let other_graph = dir.join("j72.dimacs");
    std::fs::write(&other_graph, stdout(&usg(&["gen", "--n", "7", "--k", "2"]))).unwrap();
    let mismatch = usg(&[
        "verify",
        "--graph",
        other_graph.to_str().unwrap(),
        "--certificate",
        cert_path.to_str().unwrap(),
    ]);
    assert_eq!(mismatch.status.code(), Some(1));

    // A path family certificate round-trips through verify as well.
    let fam_path = dir.join("lemma7.json");
    let fam_graph = dir.join("j73.dimacs");
    std::fs::write(&fam_path, stdout(&usg(&["paths", "--lemma", "7", "--n", "7", "--k", "3"]))).unwrap();
    std::fs::write(&fam_graph, stdout(&usg(&["gen", "--n", "7", "--k", "3"]))).unwrap();
    let ok = usg(&[
        "verify",
        "--graph",
        fam_graph.to_str().unwrap(),
        "--certificate",
        fam_path.to_str().unwrap(),
    ]);
    assert_eq!(ok.status.code(), Some(0), "{}", String::from_utf8_lossy(&ok.stderr));
}

#[test]
fn table_summary_and_known_discrepancy() {
    let out = usg(&["table", "--k-min", "3", "--k-max", "3", "--n-max", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.lines().last().unwrap().starts_with("# summary:"));
    let j53 = text.lines().find(|l| l.starts_with("5,3,")).unwrap();
    assert!(j53.contains("false"), "the ambiguous cell disagrees: {j53}");
    assert!(j53.contains("inf"), "computed column is infinity: {j53}");
}
