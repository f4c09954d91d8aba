use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/testdata").join(name)
}

fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

fn sinklab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sinklab"))
        .env_remove("SINKLAB_CAP")
        .args(args)
        .output()
        .expect("spawn sinklab")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn path(name: &str) -> String {
    data(name).to_string_lossy().into_owned()
}

#[test]
fn sink_of_rotation_in_s3() {
    let out = sinklab(&["sink", &path("S3.grp"), "--element", "(1 2 3)", "--no-timing"]);
    assert!(out.status.success());
    let v = json(&out);
    let r = &v["results"][0];
    assert_eq!(r["sink"], serde_json::json!(["e", "(1 2 3)"]));
    assert_eq!(r["size_full"], 2);
    assert_eq!(r["size_nontrivial"], 1);
    assert!(v.get("timing").is_none());
}

#[test]
fn element_can_be_a_word() {
    let a = json(&sinklab(&["sink", &path("S3.grp"), "--element", "g1", "--no-timing"]));
    let b = json(&sinklab(&["sink", &path("S3.grp"), "--element", "(1 2 3)", "--no-timing"]));
    assert_eq!(a, b);
}

#[test]
fn unknown_element_is_a_usage_error() {
    let out = sinklab(&["sink", &path("S3.grp"), "--element", "(1 4)"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn every_element_of_a5_is_a_commutator() {
    let v = json(&sinklab(&["gamma", &path("A5.grp"), "-k", "2"]));
    assert_eq!(v["results"][0]["size"], 60);
    assert_eq!(v["results"][0]["order"], 60);
}

#[test]
fn build_summary_for_s4() {
    let v = json(&sinklab(&["build", &path("S4.grp"), "--audit", "--no-timing"]));
    let r = &v["results"][0];
    assert_eq!(r["order"], 24);
    assert_eq!(r["exponent"], 12);
    assert_eq!(r["nilpotent"], false);
    assert_eq!(r["fitting_order"], 4);
    assert_eq!(r["fitting_index"], 6);
    assert_eq!(r["associative"], true);
}

#[test]
fn verify_all_passes_on_a_frobenius_group() {
    let out = sinklab(&["verify", &path("Frob7_3.grp")]);
    assert!(out.status.success());
    let v = json(&out);
    let checks: Vec<&str> = v["results"].as_array().unwrap().iter().map(|r| r["check"].as_str().unwrap()).collect();
    assert!(checks.contains(&"orbit_lemma"));
    assert!(checks.contains(&"sink_oracle"));
    assert!(!checks.contains(&"simple_product_gamma"));
}

#[test]
fn single_check_passes() {
    let out = sinklab(&["verify", &path("S4.grp"), "--check", "heineken"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["results"].as_array().unwrap().len(), 1);
}

#[test]
fn failed_check_exits_one() {
    // S3 is not a product of nonabelian simple groups, so (1 2) is no commutator
    let out = sinklab(&["verify", &path("S3.grp"), "--check", "simple_product_gamma"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["results"][0]["passed"], false);
    assert!(!v["results"][0]["counterexample"].is_null());
}

#[test]
fn orbit_lemma_needs_a_semidirect_family() {
    assert_eq!(sinklab(&["verify", &path("S3.grp"), "--check", "orbit_lemma"]).status.code(), Some(2));
    assert!(sinklab(&["verify", &path("InvExt3_2.grp"), "--check", "orbit_lemma", "-k", "3"]).status.success());
}

#[test]
fn unknown_check_is_a_usage_error() {
    assert_eq!(sinklab(&["verify", &path("S3.grp"), "--check", "nope"]).status.code(), Some(2));
}

#[test]
fn parse_error_names_the_line() {
    let out = sinklab(&["build", &path("bad_point.grp")]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 5"), "{err}");
}

#[test]
fn cap_exceeded_exits_three() {
    assert_eq!(sinklab(&["build", &path("big.grp"), "--cap", "1000"]).status.code(), Some(3));
    let env = Command::new(env!("CARGO_BIN_EXE_sinklab"))
        .env("SINKLAB_CAP", "10")
        .args(["build", &path("S4.grp")])
        .output()
        .unwrap();
    assert_eq!(env.status.code(), Some(3));
}

#[test]
fn cap_flag_overrides_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_sinklab"))
        .env("SINKLAB_CAP", "10")
        .args(["build", &path("S4.grp"), "--cap", "100"])
        .output()
        .unwrap();
    assert!(out.status.success());
}

#[test]
fn reports_without_timing_are_reproducible() {
    let args = ["verify", &path("InvExt3_2.grp"), "--no-timing"];
    let (a, b) = (sinklab(&args), sinklab(&args));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn contrast_matches_golden_csv() {
    let out = sinklab(&["contrast", "-p", "3", "--ranks", "1..4"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), fs::read_to_string(data("contrast_p3_r1_4.csv")).unwrap());
}

#[test]
fn contrast_writes_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("contrast.csv");
    let out = sinklab(&["contrast", "-p", "3", "--ranks", "1..=2", "--out", file.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = fs::read_to_string(file).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "group,n,k,mFull,mNontrivial,fittingIndex,residualOrder,quotientExponent");
    assert_eq!(lines[1], "inversion_extension_3_1,6,2,2,1,2,3,2");
    assert_eq!(lines.len(), 3);
}

#[test]
fn bad_rank_range_is_a_usage_error() {
    assert_eq!(sinklab(&["contrast", "-p", "3", "--ranks", "4..1"]).status.code(), Some(2));
}

#[test]
fn corpus_scan_matches_golden_csv() {
    let out = sinklab(&["scan", "--corpus", corpus_dir().to_str().unwrap(), "-k", "2"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), fs::read_to_string(data("corpus_scan_k2.csv")).unwrap());
}

#[test]
fn scan_without_manifest_reads_grp_files() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["S3.grp", "S4.grp"] {
        fs::copy(data(name), dir.path().join(name)).unwrap();
    }
    let out = sinklab(&["scan", "--corpus", dir.path().to_str().unwrap()]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let ids: Vec<&str> = text.lines().skip(1).map(|l| l.split(',').next().unwrap()).collect();
    assert_eq!(ids, ["S3", "S4"]);
    assert!(text.contains("S3,6,2,2,1,2,3,2"));
}

#[test]
fn scan_with_oversized_group_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    fs::copy(data("S3.grp"), dir.path().join("S3.grp")).unwrap();
    fs::copy(data("big.grp"), dir.path().join("big.grp")).unwrap();
    let out = sinklab(&["scan", "--corpus", dir.path().to_str().unwrap(), "--cap", "1000"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stdout).contains("S3,"));
}
