//! End-to-end tests of the twistcode binary: golden outputs, exit codes, and
//! file round trips.

use std::fs;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twistcode"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_env(var: &str, value: &str, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twistcode"))
        .env(var, value)
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

#[test]
fn analyze_is_byte_stable_and_exact() {
    let args = ["analyze", "--family", "JI", "--n", "2", "--q", "3", "--a", "2"];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first.status.code(), Some(0), "stderr: {}", stderr(&first));
    assert_eq!(first.stdout, second.stdout, "reruns must be byte-identical");

    let v: serde_json::Value = serde_json::from_slice(&first.stdout).expect("json");
    assert_eq!(v["q"], 3);
    assert_eq!(v["n"], 2);
    assert_eq!(v["dim"], 1);
    assert_eq!(v["d"], 4);
    assert_eq!(v["d_status"], "exact");
    assert_eq!(v["H_rank"], 3);
    assert_eq!(v["bounds"]["spectral_lower"], 1);

    // stable key order: q first, bounds last
    let text = stdout(&first);
    let pos = |key: &str| text.find(key).unwrap_or_else(|| panic!("{key} missing"));
    assert!(pos("\"q\"") < pos("\"n\"") && pos("\"n\"") < pos("\"dim\""));
    assert!(pos("\"H_rank\"") < pos("\"bounds\""));
}

#[test]
fn analyze_reports_a_basis_on_request() {
    let out = run(&["analyze", "--family", "JI", "--n", "2", "--q", "3", "--a", "2", "--basis"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).expect("json");
    let basis = v["basis"].as_array().expect("basis array");
    assert_eq!(basis.len(), 1);
    // the lone generator is a nonzero multiple of the all-ones matrix
    let rows = basis[0].as_array().expect("matrix rows");
    let first = rows[0][0].as_u64().expect("entry");
    assert_ne!(first, 0);
    for row in rows {
        for entry in row.as_array().expect("row") {
            assert_eq!(entry.as_u64(), Some(first));
        }
    }
}

#[test]
fn census_matches_golden_and_witnesses_reanalyze() {
    let dir = tempfile::tempdir().expect("tempdir");
    let out_path = dir.path().join("census.json");
    let out = run(&[
        "census",
        "--q",
        "5",
        "--n",
        "2",
        "--a",
        "2",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    assert!(stderr(&out).contains("scanned 625 matrices"));

    let got = fs::read_to_string(&out_path).expect("census file");
    assert_eq!(got, include_str!("golden/census_q5_n2_a2.json"), "golden census drifted");

    // Every recorded witness re-analyzes to exactly its bucket's (k, d).
    let v: serde_json::Value = serde_json::from_str(&got).expect("json");
    let buckets = v["buckets"].as_array().expect("buckets");
    assert_eq!(buckets.len(), 7);
    for bucket in buckets {
        let witness = bucket["witness"].as_array().expect("witness rows");
        let mut text = String::from("5 2\n");
        for row in witness {
            let row = row.as_array().expect("witness row");
            text.push_str(&format!("{} {}\n", row[0], row[1]));
        }
        let m_path = dir.path().join("witness.txt");
        fs::write(&m_path, text).expect("write witness");
        let analyzed = run(&["analyze", "--input", m_path.to_str().unwrap(), "--a", "2"]);
        assert_eq!(analyzed.status.code(), Some(0));
        let av: serde_json::Value = serde_json::from_slice(&analyzed.stdout).expect("json");
        assert_eq!(av["dim"], bucket["k"], "witness dimension for bucket {bucket}");
        assert_eq!(av["d"], bucket["d"], "witness distance for bucket {bucket}");
        assert_eq!(av["d_status"], "exact");
    }
}

#[test]
fn census_csv_mirrors_the_json_buckets() {
    let dir = tempfile::tempdir().expect("tempdir");
    let json_path = dir.path().join("c.json");
    let csv_path = dir.path().join("c.csv");
    let out = run(&[
        "census",
        "--q",
        "3",
        "--n",
        "2",
        "--a",
        "-1",
        "--out",
        json_path.to_str().unwrap(),
        "--csv",
        csv_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&json_path).unwrap()).expect("json");
    let mut want = String::from("k,d,count\n");
    for b in v["buckets"].as_array().unwrap() {
        want.push_str(&format!("{},{},{}\n", b["k"], b["d"], b["count"]));
    }
    assert_eq!(fs::read_to_string(&csv_path).unwrap(), want);
}

#[test]
fn encode_corrupt_decode_round_trip() {
    let dir = tempfile::tempdir().expect("tempdir");
    let a_path = dir.path().join("A.txt");
    let msg_path = dir.path().join("msg.txt");
    let word_path = dir.path().join("word.txt");
    let recv_path = dir.path().join("recv.txt");
    let out_path = dir.path().join("decoded.txt");

    let out = run(&["construct", "--family", "J", "--q", "5", "--n", "3", "--out",
        a_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));

    // dim C(J,2) over GF(5), n = 3, is (n−1)² = 4
    fs::write(&msg_path, "5 1 4\n1 2 0 3\n").unwrap();
    let out = run(&["encode", "--input", a_path.to_str().unwrap(), "--a", "2",
        "--message", msg_path.to_str().unwrap(), "--out", word_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));

    // decoding the clean word reports no correction
    let out = run(&["decode", "--input", a_path.to_str().unwrap(), "--a", "2",
        "--received", word_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stderr(&out).contains("already a codeword"), "stderr: {}", stderr(&out));

    // corrupt entry (2,3): add 3 to the third token of the second data row
    let word = fs::read_to_string(&word_path).unwrap();
    let mut lines: Vec<String> = word.lines().map(str::to_string).collect();
    let mut tokens: Vec<u64> =
        lines[2].split_whitespace().map(|t| t.parse().unwrap()).collect();
    tokens[2] = (tokens[2] + 3) % 5;
    lines[2] = tokens.iter().map(u64::to_string).collect::<Vec<_>>().join(" ");
    fs::write(&recv_path, lines.join("\n") + "\n").unwrap();

    let out = run(&["decode", "--input", a_path.to_str().unwrap(), "--a", "2",
        "--received", recv_path.to_str().unwrap(), "--emit-message",
        "--out", out_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    assert!(stderr(&out).contains("corrected 3·E_{2,3}"), "stderr: {}", stderr(&out));
    assert_eq!(fs::read_to_string(&out_path).unwrap(), "5 1 4\n1 2 0 3\n");
}

#[test]
fn json_matrix_input_is_accepted() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("mds.json");
    fs::write(&path, r#"{"q":5,"rows":2,"cols":2,"entries":[[1,1],[4,4]]}"#).unwrap();
    let out = run(&["analyze", "--input", path.to_str().unwrap(), "--a", "2"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).expect("json");
    assert_eq!(v["dim"], 2);
    assert_eq!(v["d"], 3);
    assert_eq!(v["d_status"], "exact");
}

#[test]
fn symmetry_reports_quasicyclic_structure() {
    let out = run(&["symmetry", "--family", "J", "--n", "3", "--q", "3", "--a", "1",
        "--sigma", "(1 2 3)"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).expect("json");
    assert_eq!(v["commuting_count"], 6);
    assert_eq!(v["quasicyclic"]["ell"], 3);
    assert_eq!(v["quasicyclic"]["reordering"].as_array().unwrap().len(), 9);
    assert_eq!(v["transpose_invariant"], true);
}

#[test]
fn construct_unit_matrix_bytes() {
    let out = run(&["construct", "--family", "E", "--q", "3", "--n", "2", "--i", "1", "--j", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "3 2\n0 1\n0 0\n");
}

#[test]
fn verify_examples_table_and_json() {
    let out = run(&["verify", "--examples-only"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert_eq!(text.lines().filter(|l| l.trim_start().starts_with("PASS")).count(), 13);
    assert!(text.contains("verify: all checks passed"));

    let out = run(&["verify", "--examples-only", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).expect("json");
    let rows = v["named_examples"].as_array().expect("rows");
    assert_eq!(rows.len(), 13);
    assert!(rows.iter().all(|r| r["pass"] == true));
    assert!(v["suite"].is_null());
}

#[test]
fn badprimes_output_matches_golden() {
    let out = run(&["badprimes", "--n", "30", "--bound", "10000"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), include_str!("golden/bad_primes_n30.json"));
}

#[test]
fn budget_env_var_is_honored() {
    let args = ["analyze", "--family", "J", "--n", "3", "--q", "5", "--a", "2"];
    let out = run(&args);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).expect("json");
    assert_eq!(v["d_status"], "exact");

    let out = run_env("TWISTCODE_BUDGET", "1", &args);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).expect("json");
    assert_eq!(v["d_status"], "bounds-only");
}

#[test]
fn exit_codes_follow_the_contract() {
    let dir = tempfile::tempdir().expect("tempdir");
    let empty = dir.path().join("empty.txt");
    fs::write(&empty, "").unwrap();

    // 2: malformed input
    let out = run(&["analyze", "--input", empty.to_str().unwrap(), "--a", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("parse error"));

    // 2: twist outside the field
    let out = run(&["analyze", "--family", "J", "--n", "2", "--q", "5", "--a", "7"]);
    assert_eq!(out.status.code(), Some(2));

    // 2: malformed budget override
    let out = run_env("TWISTCODE_BUDGET", "banana",
        &["analyze", "--family", "J", "--n", "2", "--q", "3", "--a", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("TWISTCODE_BUDGET"));

    // 2: unknown flag (clap)
    let out = run(&["analyze", "--family", "J", "--n", "2", "--q", "3", "--a", "2", "--bogus"]);
    assert_eq!(out.status.code(), Some(2));

    // 1: refusal — Sylvester matrices need odd characteristic
    let out = run(&["construct", "--family", "H", "--q", "2", "--n", "4"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("characteristic"));

    // 1: refusal — census over budget without --force
    let out = run(&["census", "--q", "3", "--n", "4", "--a", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("budget"));

    // 1: refusal — permutation does not commute with the matrix
    let out = run(&["symmetry", "--family", "E", "--q", "3", "--n", "2", "--i", "1",
        "--j", "2", "--a", "1", "--sigma", "(1 2)"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("commute"), "stderr: {}", stderr(&out));
}
