use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_flexgroup")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn analyze_q8() {
    let out = run(&["analyze", "Q8"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["d"], 2);
    assert_eq!(v["cycliciser"]["members"].as_array().unwrap().len(), 2);
    let flags: Vec<bool> = v["profile"].as_array().unwrap().iter().map(|p| p["flexible"].as_bool().unwrap()).collect();
    assert_eq!(flags, [false, true]);
    assert_eq!(v["profile"][0]["counterexample"], serde_json::json!([1]));
    assert_eq!(v["structure"]["variant"], "Q8Tag");
}

#[test]
fn analyze_vector_space_is_flexible() {
    let v = json(&run(&["analyze", "E(3,2)"]));
    assert_eq!(v["d"], 2);
    assert!(v["profile"].as_array().unwrap().iter().all(|p| p["flexible"] == true));
    assert_eq!(v["structure"], serde_json::json!({"variant": "ElementaryAbelian", "params": {"p": 3, "r": 2}}));
}

#[test]
fn analyze_parse_error_exits_2() {
    let out = run(&["analyze", "C0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("parse error"));
}

#[test]
fn order_cap_exits_3() {
    let out = Command::new(env!("CARGO_BIN_EXE_flexgroup"))
        .args(["analyze", "C12"])
        .env("FLEXGROUP_ORDER_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["verify", "thm9"]).status.code(), Some(2));
    assert_eq!(run(&["analyze"]).status.code(), Some(2));
}

#[test]
fn analyze_markdown_and_csv() {
    let md = String::from_utf8(run(&["analyze", "Q8", "--format", "md"]).stdout).unwrap();
    assert!(md.contains("| 1 | false | [1] |"));
    let csv = String::from_utf8(run(&["analyze", "Q8", "--format", "csv"]).stdout).unwrap();
    assert_eq!(csv.lines().next(), Some("group,order,d,k,flexible,counterexample"));
    assert_eq!(csv.lines().count(), 3);
}

#[test]
fn analyze_table_round_trip() {
    let g = flexgroup::parse_group_spec("Perm(3)").unwrap();
    let path = std::env::temp_dir().join(format!("flexgroup-table-{}.json", std::process::id()));
    std::fs::write(&path, g.to_json()).unwrap();
    let v = json(&run(&["analyze", "--table", path.to_str().unwrap(), "--dump-table"]));
    std::fs::remove_file(&path).unwrap();
    assert_eq!(v["order"], 6);
    assert_eq!(v["d"], 2);
    assert_eq!(v["table"].as_array().unwrap().len(), 6);
}

#[test]
fn verify_thm1_catalog_and_thm2_single() {
    let out = run(&["verify", "thm1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["summary"]["disagreements"], 0);

    let v = json(&run(&["verify", "thm2", "--spec", "Aff(3,2,2)"]));
    let checks = v["reports"][0]["checks"].as_array().unwrap();
    let equiv: Vec<&Value> = checks.iter().filter(|c| c["name"].as_str().unwrap().starts_with("2-flexible:")).collect();
    assert_eq!(equiv.len(), 3);
    assert!(equiv.iter().all(|c| c["expected"] == true && c["observed"] == true));
}

#[test]
fn verify_all_small_writes_report() {
    let path = std::env::temp_dir().join(format!("flexgroup-verify-{}.json", std::process::id()));
    let out = run(&[
        "verify",
        "all",
        "--max-order",
        "24",
        "--all-normals",
        "--symmetry-reduction",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(v["suite"], "all");
    assert!(v["reports"].as_array().unwrap().iter().all(|r| r["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["agree"] == true)));
}

#[test]
fn catalog_listing_and_filters() {
    let v = json(&run(&["catalog"]));
    assert_eq!(v["schema"], 1);
    assert!(v["entries"].as_array().unwrap().len() >= 40);

    let v = json(&run(&["catalog", "--max-order", "8"]));
    let names: Vec<&str> = v["entries"].as_array().unwrap().iter().map(|e| e["name"].as_str().unwrap()).collect();
    for n in ["C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "E(2,2)", "E(2,3)", "Q8", "D8"] {
        assert!(names.contains(&n), "{n}");
    }

    let v = json(&run(&["catalog", "--tags", "affine"]));
    for e in v["entries"].as_array().unwrap() {
        let spec = e["spec"].as_str().unwrap();
        assert!(spec.starts_with("Aff(") || spec.starts_with("MatAff("), "{spec}");
    }
}

#[test]
fn output_is_repeatable() {
    let a = run(&["verify", "d2", "--max-order", "32"]).stdout;
    let b = run(&["verify", "d2", "--max-order", "32", "--jobs", "3"]).stdout;
    assert_eq!(a, b);
}
