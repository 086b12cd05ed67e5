use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name).display().to_string()
}

fn run(args: &[&str]) -> Output {
    run_with_env(args, &[])
}

fn run_with_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_workbench"));
    cmd.args(args);
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("workbench runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited")
}

fn counts(out: &Output) -> Vec<u64> {
    json(out)["result"].as_array().unwrap().iter().map(|r| r["count"].as_str().unwrap().parse().unwrap()).collect()
}

fn groups(out: &Output) -> Vec<String> {
    json(out)["result"]["homology"].as_array().unwrap().iter().map(|h| h["group"].as_str().unwrap().to_string()).collect()
}

#[test]
fn counts_match_known_tables() {
    let out = run(&["counts", "--group", "builtin:S3", "--tau", "gamma:2", "--k-max", "3"]);
    assert_eq!(code(&out), 0);
    assert_eq!(counts(&out), [1, 6, 18, 48]);
    let out = run(&["counts", "--group", "builtin:Z4", "--tau", "gamma:2"]);
    assert_eq!(counts(&out), [1, 4, 16, 64]);
    let out = run(&["counts", "--group", "builtin:S3", "--k-max", "5"]);
    assert_eq!(counts(&out), [1, 6, 36, 216, 1296, 7776]);
    let csv = run(&["counts", "--group", "builtin:S3", "--tau", "gamma:2", "--format", "csv"]);
    assert_eq!(String::from_utf8(csv.stdout).unwrap(), "k,count\n0,1\n1,6\n2,18\n3,48\n");
}

#[test]
fn exit_codes_for_bad_input_and_budget() {
    let out = run(&["counts", "--group", "builtin:S3", "--k-max", "12"]);
    assert_eq!(code(&out), 3);
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));
    assert_eq!(code(&run(&["counts", "--tau", "gamma:1"])), 2);
    assert_eq!(code(&run(&["counts", "--tau", "abmodpk:4,1"])), 2);
    assert_eq!(code(&run(&["counts", "--group", "builtin:nope"])), 2);
    assert_eq!(code(&run(&["counts", "--chain-cap", "0"])), 2);
    let out = run(&["counts", "--group", &fixture("nonassociative_group.json")]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("associativity"));
    let out = run(&["verify", "cocycle", "--input", &fixture("bad_complex.json")]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("missing cell"));
    assert_eq!(code(&run(&["homology", "wbar", "--trunc", "3", "--i-max", "3"])), 2);
}

#[test]
fn homology_of_wbar_z2() {
    let out = run(&["homology", "wbar", "--group", "builtin:Z2", "--trunc", "5"]);
    assert_eq!(code(&out), 0);
    assert_eq!(groups(&out), ["Z", "Z/2", "0", "Z/2", "0"]);
    let tau = run(&["homology", "wbar_tau", "--group", "builtin:Z2", "--tau", "gamma:2", "--trunc", "5"]);
    assert_eq!(groups(&tau), groups(&out));
    let file = run(&["homology", "wbar", "--group", &fixture("z3_table_group.json"), "--trunc", "4"]);
    assert_eq!(groups(&file), ["Z", "Z/3", "0", "Z/3"]);
    let contractible = run(&["homology", "w_total", "--group", "builtin:S3", "--trunc", "3"]);
    assert_eq!(groups(&contractible), ["Z", "0", "0"]);
}

#[test]
fn homology_of_diagonal_matches_wbar_tau() {
    let args = ["--group", "builtin:S3", "--tau", "gamma:2", "--trunc", "4", "--i-max", "2"];
    let w = run(&[&["homology", "wbar_tau"][..], &args].concat());
    let d = run(&[&["homology", "diagonal"][..], &args].concat());
    let t = run(&[&["homology", "total"][..], &args].concat());
    assert_eq!(code(&w), 0);
    assert_eq!(groups(&w), groups(&d));
    assert_eq!(groups(&w), groups(&t));
}

#[test]
fn verify_epsilon_and_cr() {
    let out = run(&["verify", "epsilon", "--k", "3", "--trunc", "4"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["status"], "pass");
    let out = run(&["verify", "cr", "--group", "builtin:Z2", "--trunc", "3"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let table = v["result"]["homology_agreement"].as_array().unwrap();
    assert_eq!(table.len(), 3);
    assert!(table.iter().all(|row| row["agree"] == true));
    assert_eq!(table[1]["wbar"], "Z/2");
}

#[test]
fn verify_zigzag_maps() {
    for target in ["bk", "tonks", "zigzag"] {
        let out = run(&["verify", target, "--group", "builtin:Z2", "--tau", "gamma:2", "--trunc", "2"]);
        assert_eq!(code(&out), 0, "{target}: {}", String::from_utf8_lossy(&out.stdout));
    }
}

#[test]
fn bundle_fixtures() {
    for target in ["bundle-roundtrip", "cocycle", "atlas"] {
        let out = run(&["verify", target, "--tau", "gamma:2", "--input", &fixture("circle_z2_bundle.json")]);
        assert_eq!(code(&out), 0, "{target}");
    }
    let s3 = ["--group", "builtin:S3", "--tau", "gamma:2"];
    let good = fixture("noncommuting_s3_bundle.json");
    assert_eq!(code(&run(&[&["verify", "bundle-roundtrip", "--input", &good][..], &s3].concat())), 0);
    assert_eq!(code(&run(&[&["verify", "cocycle", "--input", &good][..], &s3].concat())), 0);
    let free = run(&["verify", "atlas", "--group", "builtin:S3", "--input", &good]);
    assert_eq!(code(&free), 0);
}

#[test]
fn negative_fixtures_locate_the_failure() {
    let s3 = ["--group", "builtin:S3", "--tau", "gamma:2"];
    let witness = |out: &Output| json(out)["result"][0]["counterexample"].as_str().unwrap().to_string();

    let out = run(&[&["verify", "atlas", "--input", &fixture("noncommuting_s3_bundle.json")][..], &s3].concat());
    assert_eq!(code(&out), 1);
    let w = witness(&out);
    assert!(w.contains("chain [[1], [1, 2]] over c2_0") && w.contains("position 0"), "{w}");

    let out = run(&[&["verify", "cocycle", "--input", &fixture("corrupt_classifying_map.json")][..], &s3].concat());
    assert_eq!(code(&out), 1);
    assert!(witness(&out).contains("r(d_1 c2_0)"), "{}", witness(&out));

    let out = run(&["verify", "bundle-roundtrip", "--input", &fixture("corrupt_section.json")]);
    assert_eq!(code(&out), 1);
    assert!(witness(&out).contains("d_1 σ(c1_0)"), "{}", witness(&out));
}

#[test]
fn random_bundles_pass_roundtrip_and_cocycle() {
    for target in ["bundle-roundtrip", "cocycle"] {
        let out = run(&["verify", target, "--group", "builtin:S3", "--samples", "8", "--seed", "5"]);
        assert_eq!(code(&out), 0);
        let v = json(&out);
        assert_eq!(v["result"].as_array().unwrap().len(), 8);
        assert_eq!(v["result"][0]["map"], format!("{}[seed=5]", target.replace('-', "_")));
    }
}

#[test]
fn reports_are_deterministic() {
    let args = ["verify", "atlas", "--group", "builtin:S3", "--tau", "gamma:2", "--samples", "6", "--seed", "3"];
    let one = run_with_env(&args, &[("WORKBENCH_THREADS", "1")]);
    let four = run_with_env(&args, &[("WORKBENCH_THREADS", "4")]);
    let again = run(&args);
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(one.stdout, again.stdout);
    assert_eq!(code(&one), code(&four));

    let dir = std::env::temp_dir().join(format!("workbench-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("counts.json");
    let out = run(&["counts", "--group", "builtin:D4", "--tau", "gamma:2", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let written: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(written["group"], "D4");
    assert_eq!(written["tau"], "gamma:2");
    std::fs::remove_dir_all(&dir).unwrap();
}
