use std::path::Path;
use std::process::{Command, Output};

use nefcert::certify::{CertificateReport, Verdict};

fn nefcert(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nefcert"))
        .args(args)
        .env_remove("NEFCERT_CYCLE_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn seeded() -> tempfile::TempDir {
    let dir = tempfile::tempdir().unwrap();
    let o = nefcert(&["--seed-corpus", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    dir
}

fn file(dir: &Path, name: &str) -> String {
    dir.join(name).to_str().unwrap().to_string()
}

#[test]
fn certify_edge_c4_json() {
    let o = nefcert(&["certify", "edge", "cycle:4", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let r = CertificateReport::from_json(&stdout(&o)).unwrap();
    assert_eq!(r.verdict, Verdict::Confirmed);
    assert_eq!(r.pipeline, "edge");
    assert!(r.timings_ms.is_empty());
    assert_eq!(CertificateReport::from_json(&r.to_json()).unwrap(), r);
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let a = stdout(&nefcert(&["certify", "main1", "cycle:3", "--format", "json"]));
    let b = stdout(&nefcert(&["certify", "main1", "cycle:3", "--format", "json"]));
    assert_eq!(a, b);
}

#[test]
fn main2_on_c3_is_hypothesis_not_met() {
    let dir = seeded();
    let o = nefcert(&["certify", "main2", &file(dir.path(), "cycle_3.mat")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("verdict: HYPOTHESIS_NOT_MET"));
}

#[test]
fn bridged_triangles_edge_exit_two() {
    let dir = seeded();
    let o = nefcert(&["certify", "edge", &file(dir.path(), "bridged_triangles.graph"), "--format", "json"]);
    assert_eq!(o.status.code(), Some(2));
    let r = CertificateReport::from_json(&stdout(&o)).unwrap();
    assert_eq!(r.verdict, Verdict::HypothesisNotMet);
}

#[test]
fn hexagon_hstar_is_bare() {
    let dir = seeded();
    let o = nefcert(&["polytope", &file(dir.path(), "hexagon.pts"), "--hstar"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1 4 1\n");
    let o = nefcert(&["polytope", &file(dir.path(), "hexagon.pts"), "--reflexive"]);
    assert_eq!(stdout(&o), "true\n");
}

#[test]
fn analyze_minor_profile() {
    let dir = seeded();
    let o = nefcert(&["--format", "json", "analyze", "matrix", &file(dir.path(), "bridged_triangles.mat")]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["unimodular"], false);
    assert_eq!(v["minor_values"], serde_json::json!(["2", "4"]));
    assert_eq!(v["normalized_minor_values"], serde_json::json!(["1", "2"]));
}

#[test]
fn gb_modes() {
    let dir = seeded();
    let c4 = file(dir.path(), "cycle_4.mat");
    for mode in ["pm", "cayley", "azero"] {
        let o = nefcert(&["gb", &c4, "--mode", mode, "--format", "json"]);
        assert_eq!(o.status.code(), Some(0), "mode {mode}");
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(v["conforms"], true);
        assert_eq!(v["s"], 6);
        let again: serde_json::Value = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
        assert_eq!(again, v);
    }
    let o = nefcert(&["gb", &file(dir.path(), "bridged_triangles.mat"), "--mode", "pm"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn graph_command() {
    let o = nefcert(&["graph", "bridged_triangles", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["odd_cycles_intersect"], false);
    assert_eq!(v["unimodular"], false);
    assert_eq!(v["edge_polytope_dim"], 5);
}

#[test]
fn cycle_cap_flag_and_env() {
    let o = nefcert(&["certify", "edge", "bowtie", "--cycle-cap", "1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let o = Command::new(env!("CARGO_BIN_EXE_nefcert"))
        .args(["certify", "edge", "bowtie", "--format", "json"])
        .env("NEFCERT_CYCLE_CAP", "1")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    let o = Command::new(env!("CARGO_BIN_EXE_nefcert"))
        .args(["certify", "edge", "bowtie", "--cycle-cap", "100", "--format", "json"])
        .env("NEFCERT_CYCLE_CAP", "1")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(nefcert(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(nefcert(&["certify", "main1"]).status.code(), Some(1));
    assert_eq!(nefcert(&["certify", "main1", "cycle:4", "--all-corpus"]).status.code(), Some(1));
    assert_eq!(nefcert(&["certify", "main1", "no-such-file"]).status.code(), Some(1));
    assert_eq!(nefcert(&["--help"]).status.code(), Some(0));
}

#[test]
fn non_configuration_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.mat");
    std::fs::write(&path, "2 3\n1 0 1\n0 1 1\n").unwrap();
    let o = nefcert(&["certify", "main1", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}
