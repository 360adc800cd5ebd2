use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quasispin")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn classify_defining_weight() {
    let out = run(&["classify", "--weight", "0,-1"]);
    assert_eq!(out.status.code(), Some(0));
    let t = json(&out);
    assert_eq!(t["weight"], serde_json::json!(["0", "-1"]));
    let states = t["states"].as_array().unwrap();
    assert_eq!(states.len(), 5);
    assert!(states.iter().all(|s| s["k"] == 0));
    let at = |tt: &str| states.iter().filter(|s| s["T"] == tt).map(|s| s["N"].as_str().unwrap().to_string()).collect::<Vec<_>>();
    assert_eq!(at("0"), ["-1", "1"]);
    assert_eq!(at("-1"), ["0", "0", "0"]);
}

#[test]
fn classify_trivial_weight() {
    let out = run(&["classify", "--weight", "0,0"]);
    assert_eq!(out.status.code(), Some(0));
    let t = json(&out);
    let states = t["states"].as_array().unwrap();
    assert_eq!(states.len(), 1);
    for key in ["T", "tau0", "N"] {
        assert_eq!(states[0][key], "0");
    }
    assert_eq!(states[0]["k"], 0);
}

#[test]
fn classify_csv_and_report_files() {
    let dir = tempfile::tempdir().unwrap();
    let table = dir.path().join("t.csv");
    let report = dir.path().join("r.csv");
    let out = run(&[
        "classify",
        "--weight=-1/2,-3/2",
        "--format",
        "csv",
        "--out",
        table.to_str().unwrap(),
        "--report",
        report.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = std::fs::read_to_string(&table).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("lambda1,lambda2,T,tau0,N,k,case,sigma,slice_dim"));
    assert_eq!(lines.count(), 16);
    let r = std::fs::read_to_string(&report).unwrap();
    assert!(r.starts_with("schema_version,suite,wall_time_ms,id,status,witness"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["classify", "--weight", "1,0"][..],
        &["classify", "--weight", "0,-1/2"],
        &["classify", "--weight", "zero"],
        &["probe", "conventions", "--bogus"],
        &["verify", "identities", "--n", "4"],
        &["fock", "build", "--j", "5/2"],
        &["repr", "analyze", "--source", "fock", "--power", "2"],
        &["repr", "analyze", "--source", "tensor"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{:?}", args);
    }
}

#[test]
fn verify_identities_o5() {
    let out = run(&["verify", "identities", "--n", "2", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["schema_version"], 1);
    let checks = r["checks"].as_array().unwrap();
    let ids: Vec<&str> = checks.iter().map(|c| c["id"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    assert!(checks.iter().all(|c| c["status"] != "fail"));
    assert!(ids.contains(&"capelli-central.c4.symbolic"));
}

#[test]
fn fock_build_exports_generators() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.json");
    let out = run(&["fock", "build", "--j", "1/2", "--generators", g.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    let car = r["checks"].as_array().unwrap().iter().find(|c| c["id"] == "car").unwrap().clone();
    assert_eq!(car["status"], "pass");
    let map: Value = serde_json::from_str(&std::fs::read_to_string(&g).unwrap()).unwrap();
    assert_eq!(map["dim"], 16);
    assert_eq!(map["generators"].as_array().unwrap().len(), 10);
}

#[test]
fn probe_anomalies_do_not_fail() {
    let out = run(&["probe", "conventions"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    let checks = r["checks"].as_array().unwrap();
    assert!(checks.iter().any(|c| c["status"] == "anomaly"));
    let gamma = checks.iter().find(|c| c["id"] == "gamma-convention").unwrap();
    assert_eq!(gamma["witness"]["winner"], "plain");
}

#[test]
fn repr_failure_exits_one() {
    // V(-1,-2) inside the third tensor power fails the N = 0 agreement
    let out = run(&["repr", "analyze", "--source", "defining-power", "--power", "3"]);
    assert_eq!(out.status.code(), Some(1));
    let r = json(&out);
    let failed: Vec<&str> = r["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["status"] == "fail")
        .map(|c| c["id"].as_str().unwrap())
        .collect();
    assert!(failed.contains(&"defining^3/V(-1,-2).n0-agreement"));
    assert!(failed.iter().all(|id| id.starts_with("defining^3/V(-1,-2).")));

    let ok = run(&["repr", "analyze", "--source", "defining-power", "--power", "2"]);
    assert_eq!(ok.status.code(), Some(0));
}
