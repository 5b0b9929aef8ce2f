use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_stabcond"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("stabcond-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn build(name: &str, args: &[&str]) -> String {
    let p = tmp(name);
    let p = p.to_str().unwrap().to_string();
    let mut full = vec!["build"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--out", &p]);
    let o = run(&full);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    p
}

#[test]
fn gsd_over_the_trace_cap() {
    let m = build("z4.json", &["--kind", "zd", "--d", "4", "--width", "3", "--height", "3"]);
    let o = run(&["gsd", "--model", &m]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "GSD = 16 (snf) / 16 (ledger) / - (trace: over cap)");
}

#[test]
fn gsd_with_trace() {
    let m = build("z2.json", &["--kind", "zd", "--width", "2", "--height", "2"]);
    let o = run(&["gsd", "--model", &m]);
    assert_eq!(stdout(&o).trim(), "GSD = 4 (snf) / 4 (ledger) / 4 (trace)");
}

#[test]
fn three_lagrangians_for_z4() {
    let o = run(&["anyons", "--theory", "dz4", "--lagrangian"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 3);
}

#[test]
fn condensing_e2m2_gives_four_anyons() {
    let o = run(&["anyons", "--theory", "dz4", "--condense", "e2m2"]);
    let s = stdout(&o);
    assert!(s.contains("4 anyons"), "{s}");
    assert!(s.contains("spin 1/4") && s.contains("spin 3/4"), "{s}");
}

#[test]
fn empty_network_is_an_input_error() {
    let p = tmp("empty.json");
    std::fs::write(&p, r#"{"theories":[],"nodes":[],"links":[]}"#).unwrap();
    let o = run(&["pants", "contract", "--network", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn standard_network_round_trip() {
    let sc = tmp("scenario.json");
    let z2 = serde_json::to_value(stabcond::anyon::AnyonTheory::dz(2)).unwrap();
    let wall = serde_json::to_value(stabcond::anyon::TunnelingMatrix::identity(&stabcond::anyon::AnyonTheory::dz(2))).unwrap();
    let scenario = serde_json::json!({"scenario": "torus_with_walls", "theories": [z2], "walls": [wall]});
    std::fs::write(&sc, scenario.to_string()).unwrap();
    let net = tmp("net.json");
    let o = run(&["pants", "standard", "--scenario", sc.to_str().unwrap(), "--out", net.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let o = run(&["pants", "contract", "--network", net.to_str().unwrap()]);
    assert_eq!(stdout(&o).trim(), "GSD = 4");
}

#[test]
fn distance_report_shape() {
    let m = build("z2d.json", &["--kind", "zd", "--width", "3", "--height", "3"]);
    let o = run(&["distance", "--model", &m, "--cap", "3"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    for key in ["gsd", "k", "logicals", "d_X", "d_Z", "certified"] {
        assert!(v.get(key).is_some(), "missing {key} in {v}");
    }
    assert_eq!(v["gsd"], "4");
    assert_eq!(v["d_X"], 3);
    assert_eq!(v["d_Z"], 3);
    assert_eq!(v["certified"], true);
    assert_eq!(v["logicals"].as_array().unwrap().len(), 4);
}

#[test]
fn condense_job_keeps_ledger() {
    let m = build("z4c.json", &["--kind", "zd", "--d", "4", "--width", "3", "--height", "3"]);
    let job = tmp("job.json");
    std::fs::write(&job, r#"{"lattice":{"width":3,"height":3,"wrap_x":true,"wrap_y":true},"region":{"box":[0,0,1,1]},"labels":["e2m2"]}"#).unwrap();
    let out = tmp("z4c-out.json");
    let o = run(&["condense", "--model", &m, "--job", job.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let o = run(&["gsd", "--model", out.to_str().unwrap()]);
    assert!(stdout(&o).starts_with("GSD = 16 (snf) / 16 (ledger)"));
}

#[test]
fn bad_input_exits_2() {
    assert_eq!(run(&["gsd", "--model", "/nonexistent/model.json"]).status.code(), Some(2));
    assert_eq!(run(&["anyons", "--theory", "fib"]).status.code(), Some(2));
    let job = tmp("badjob.json");
    std::fs::write(&job, r#"{"lattice":{"width":3,"height":3,"wrap_x":true,"wrap_y":true},"region":{"box":[0,0,1,1]},"labels":["em"]}"#).unwrap();
    let m = build("z4bad.json", &["--kind", "zd", "--d", "4", "--width", "3", "--height", "3"]);
    // em has spin 1/4
    let o = run(&["condense", "--model", &m, "--job", job.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn export_svg_draws_every_edge() {
    let m = build("svg.json", &["--kind", "zd", "--width", "2", "--height", "2"]);
    let o = run(&["export-svg", "--model", &m]);
    assert_eq!(stdout(&o).matches("<line").count(), 8);
}

#[test]
fn verify_paper_single_group() {
    let o = bin().args(["verify-paper", "--only", "2"]).env("STABCOND_WORKERS", "2").output().unwrap();
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("0 failed"));
}
