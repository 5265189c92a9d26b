use std::process::{Command, Output};

use serde_json::Value;

fn gtkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gtkit")).args(args).output().expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn patterns_of_the_adjoint() {
    let v = json_of(&gtkit(&["patterns", "--hw", "1,0,-1"]));
    let list = v.as_array().unwrap();
    assert_eq!(list.len(), 8);
    assert_eq!(list[0]["pattern"], serde_json::json!([[1, 0, -1], [1, 0], [1]]));
    assert!(list.iter().all(|p| p["norm_sq"].is_string()));
}

#[test]
fn non_dominant_weight_is_rejected() {
    let out = gtkit(&["patterns", "--hw", "0,1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not dominant"));
    assert!(out.stdout.is_empty());
}

#[test]
fn unknown_command_prints_usage() {
    let out = gtkit(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("Usage"));
}

#[test]
fn claim_values() {
    let v = json_of(&gtkit(&["claim", "--n", "3", "--m", "1"]));
    assert_eq!(v["values"]["(1,0,0)"], "1/4");
    assert_eq!(v["values"]["(1,1,0)"], "3/4");
    assert_eq!(v["parseval"], "1");
    let d = json_of(&gtkit(&["claim", "--n", "4", "--m", "2", "--direct"]));
    assert_eq!(d["match"], true);
    assert_eq!(d["parseval"], "1");
}

#[test]
fn eta_and_identities() {
    let v = json_of(&gtkit(&["eta", "--n", "3", "--m", "1", "--direct"]));
    assert_eq!(v["coefficients"]["(1,1,0)"], "-3");
    assert_eq!(v["match"], true);
    let v = json_of(&gtkit(&["identities", "--n", "4", "--m", "1", "--p", "1"]));
    assert_eq!(v["combinatorial"]["lhs"], "18");
    assert_eq!(v["identity1"]["rhs"], "18");
    assert_eq!(gtkit(&["eta", "--n", "2", "--m", "1"]).status.code(), Some(2));
}

#[test]
fn dim_gen_branch_project_fixed() {
    assert_eq!(json_of(&gtkit(&["dim", "--hw", "2,0,-2"]))["dim"], 27);
    let g = json_of(&gtkit(&["gen", "--hw", "1,0,0", "--p", "1", "--q", "3"]));
    assert_eq!(g["matrix"]["entries"].as_array().unwrap().len(), 1);
    assert_eq!((g["p"].as_u64(), g["q"].as_u64()), (Some(1), Some(3)));
    assert_eq!(gtkit(&["gen", "--hw", "1,0,0", "--p", "4", "--q", "1"]).status.code(), Some(2));

    let b = json_of(&gtkit(&["branch", "--hw", "1,0,0", "--S", "1"]));
    let labels: Vec<&str> = b["types"].as_array().unwrap().iter().map(|t| t["label"].as_str().unwrap()).collect();
    assert_eq!(labels, vec!["((1,0),(0))", "((0,0),(1))"]);

    let p = json_of(&gtkit(&["project", "--hw", "1,0,0", "--S", "1", "--sigma", "1,0|0"]));
    assert_eq!(p["rank"], 2);
    assert_eq!(p["S"], serde_json::json!([1]));

    let f = json_of(&gtkit(&["fixed", "--hw", "2,0,-2", "--S", "2"]));
    assert_eq!(f["vectors"].as_array().unwrap().len(), 1);
    assert_eq!(gtkit(&["project", "--hw", "1,0,0", "--S", "5", "--sigma", "0"]).status.code(), Some(2));
}

#[test]
fn decay_csv_and_out_file() {
    let path = std::env::temp_dir().join(format!("gtkit-decay-{}.csv", std::process::id()));
    let out = gtkit(&["decay", "--n", "3", "--m-max", "3", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "m,dim,trace_num_den,norm_est,lower,upper");
    let traces: Vec<&str> = lines[1..].iter().map(|l| l.split(',').nth(2).unwrap()).collect();
    assert_eq!(traces, vec!["1", "1/4", "1/9", "1/16"]);
}

#[test]
fn decay_is_deterministic_across_modes() {
    let args = ["decay", "--n", "3", "--m-max", "4", "--S", "1", "--sigma", "1,0|-1", "--T", "2", "--tau", "1|0,-1", "--json"];
    let par = gtkit(&args);
    let mut seq_args = args.to_vec();
    seq_args.push("--sequential");
    let seq = gtkit(&seq_args);
    assert_eq!(par.stdout, seq.stdout);
    let rows = json_of(&par);
    assert_eq!(rows[2]["trace"], "4/9");
}

#[test]
fn support_of_a_foreign_projection() {
    let v = json_of(&gtkit(&["support", "--hw", "1,0,-1", "--S", "1", "--operator", "projection", "--T", "2", "--tau", "0|0,0"]));
    assert_eq!(v["support"].as_array().unwrap().len(), 4);
    let v = json_of(&gtkit(&["support", "--hw", "1,0,-1", "--S", "1", "--operator", "generator", "--p", "3", "--q", "3"]));
    assert_eq!(v["max_row_blocks"], 1);
    assert_eq!(gtkit(&["support", "--hw", "1,0,-1", "--operator", "generator"]).status.code(), Some(2));
}

#[test]
fn verify_fast_suite_passes() {
    let out = gtkit(&["verify", "--suite", "fast"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert_eq!(out.status.code(), Some(0), "{text}");
    assert_eq!(text.lines().filter(|l| l.starts_with("[PASS]")).count(), 10);
}

#[test]
fn verify_reports_injected_fault() {
    let out = gtkit(&["verify", "--inject-fault"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert_eq!(out.status.code(), Some(1));
    assert!(text.lines().any(|l| l.starts_with("[FAIL]  5")), "{text}");
    assert_eq!(text.lines().filter(|l| l.starts_with("[FAIL]")).count(), 1);
}
