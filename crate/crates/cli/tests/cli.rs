use std::process::{Command, Output};

use serde_json::Value;

fn ty(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ty"))
        .args(args)
        .env_remove("TY_MAX_POSET")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn signature_of_worked_example() {
    let out = ty(&["signature", "--n", "5", "--monomial", "4,3,2,1,1,4"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), r#"{"signature":[2,2,3]}"#);
}

#[test]
fn right_chain_has_five_elements() {
    let out = ty(&["chain", "--n", "5", "--monomial", "1,1,1,0,1,1", "--side", "right"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["elements"].as_array().unwrap().len(), 5);
    assert_eq!(v["colors"], serde_json::json!([1, 4, 5, 5]));
    assert_eq!(v["monotonic"], Value::Bool(true));
}

#[test]
fn verify_small_side_slice() {
    let out = ty(&["verify", "--n", "4", "--m", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["singular"], serde_json::json!([]));
    assert_eq!(v["ok"], Value::Bool(true));
}

#[test]
fn tropical_and_tableau() {
    let v = json(&ty(&["tropical", "--n", "5", "--monomial", "4,3,2,1,1,4"]));
    assert_eq!(v["f"], serde_json::json!([15, 8, 3]));
    assert_eq!(v["deg"], serde_json::json!([2, 2, 3]));
    assert_eq!(v["max_cover"][1]["covered"], 12);
    let v = json(&ty(&["tableau", "--n", "5", "--monomial", "4,3,2,1,1,4"]));
    assert_eq!(v["rows"][0], serde_json::json!([0, 2, 4]));
    assert_eq!(v["census"], serde_json::json!([2, 2, 3]));
}

#[test]
fn ideal_and_enumerate() {
    let v = json(&ty(&["ideal", "--n", "5", "--r", "2"]));
    assert_eq!(v["generators"].as_array().unwrap().len(), 4);
    assert_eq!(v["components"].as_array().unwrap().len(), 6);
    let v = json(&ty(&["enumerate", "--n", "1", "--m", "2"]));
    assert_eq!(v["monomials"], serde_json::json!([[2, 0], [1, 1], [0, 2]]));
}

#[test]
fn family_round_trip_through_verify() {
    let dir = std::env::temp_dir().join(format!("ty-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    for (args, name) in [
        (vec!["decompose", "--n", "5", "--signature", "0,1,1"], "cover.json"),
        (vec!["scd", "--n", "5", "--signature", "2,1,1"], "scd.json"),
    ] {
        let out = ty(&args);
        assert!(out.status.success());
        let path = dir.join(name);
        std::fs::write(&path, &out.stdout).unwrap();
        let check = ty(&["verify", "--input", path.to_str().unwrap()]);
        assert_eq!(check.status.code(), Some(0), "{name}");
    }

    // drop a chain: the union check must fail with exit code 1
    let mut fam = json(&ty(&["decompose", "--n", "5", "--signature", "2,1,1"]));
    fam["chains"].as_array_mut().unwrap().remove(0);
    let path = dir.join("broken.json");
    std::fs::write(&path, fam.to_string()).unwrap();
    let check = ty(&["verify", "--input", path.to_str().unwrap()]);
    assert_eq!(check.status.code(), Some(1));
    assert!(!json(&check)["missing"].as_array().unwrap().is_empty());
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(ty(&["signature", "--n", "4", "--monomial", "1,1"]).status.code(), Some(2));
    assert_eq!(ty(&["signature", "--n", "4"]).status.code(), Some(2));
    assert_eq!(ty(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(ty(&["levelset", "--n", "5", "--signature", "1,1"]).status.code(), Some(2));
}

#[test]
fn size_cap_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_ty"))
        .args(["enumerate", "--n", "5", "--m", "5"])
        .env("TY_MAX_POSET", "100")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("252"));
}

#[test]
fn dot_export() {
    let out = ty(&["export", "--format", "dot", "--n", "3", "--m", "2"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("digraph hasse {"));
    assert_eq!(text.matches(" -> ").count(), 12);
    assert!(text.contains("penwidth=3"));
}

#[test]
fn output_is_deterministic() {
    let args = ["scd", "--n", "5", "--m", "4"];
    assert_eq!(ty(&args).stdout, ty(&args).stdout);
}
