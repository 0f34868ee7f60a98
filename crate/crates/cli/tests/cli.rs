use std::process::{Command, Output};

fn kh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kh")).args(args).env_remove("KH_WEIGHT_BOUND").output().expect("run kh")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn milnor_of_e8_surface() {
    let o = kh(&["milnor", "--vars", "z1,z2,z3", "--poly", "z1^2+z2^3+z3^5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "8");
}

#[test]
fn groebner_basis_of_d5_curve_ideal() {
    let o = kh(&["gb", "--vars", "z1,z2", "--gens", "z1^2*z2+z2^4; z1^2+4*z2^3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "{z2^4, z1^2 + 4*z2^3}");
    let o = kh(&["gb", "--vars", "z1,z2", "--gens", "z1^2*z2+z2^4; z1^2+4*z2^3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["basis"], serde_json::json!(["z2^4", "z1^2 + 4*z2^3"]));
}

#[test]
fn e7_surface_catalog_passes() {
    let o = kh(&["verify-catalog", "--family", "E7-surface"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("all checks pass"));
}

#[test]
fn failed_check_exits_one() {
    let o = kh(&["verify-catalog", "--family", "D-surface", "--param", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["pass"], false);
    let failed: Vec<&str> = v["entries"][0]["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["pass"] == false)
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert_eq!(failed, ["table_milnor", "table_basis"]);
}

#[test]
fn usage_errors_exit_two_with_grammar() {
    for args in [
        &["milnor", "--vars", "z1,z2", "--poly", "z1^2+*z2"][..],
        &["milnor", "--vars", "z1,z2", "--poly", "z1^2+w"],
        &["verify-catalog", "--family", "F4-surface"],
        &["verify-catalog", "--family", "D-curve", "--param", "2"],
        &["cohomology", "--vars", "z1,z2", "--poly", "z1^3+z2^2", "--bound", "many"],
        &["gb", "--vars", "z1,z2", "--gens", "z1", "--order", "deglex"],
        &["frobnicate"],
    ] {
        let o = kh(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
    let o = kh(&["milnor", "--vars", "z1,z2", "--poly", "z1^2+w"]);
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("unknown variable") && err.contains("poly   :="), "{err}");
}

#[test]
fn non_isolated_singularity_is_rejected() {
    let o = kh(&["milnor", "--vars", "z1,z2", "--poly", "z1^2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn json_is_byte_identical_across_runs() {
    let args = ["verify-catalog", "--family", "D-curve", "--format", "json"];
    let a = kh(&args).stdout;
    let b = kh(&args).stdout;
    assert!(!a.is_empty());
    assert_eq!(a, b);
    let args = ["cohomology", "--vars", "z1,z2", "--poly", "z1^3+z2^2", "--format", "json", "--verbose"];
    assert_eq!(kh(&args).stdout, kh(&args).stdout);
}

#[test]
fn output_file_and_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.csv");
    let o = kh(&["verify-catalog", "--family", "E6-curve", "--format", "csv", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let csv = std::fs::read_to_string(&path).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("entry,family,param,check,expected,computed,pass,note"));
    assert!(lines.all(|l| l.starts_with("E6-curve,E6-curve,,")));
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
}

#[test]
fn cohomology_report_and_bound_override() {
    let o = kh(&["cohomology", "--vars", "z1,z2", "--poly", "z1^3+z2^2", "--pmax", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["weights"]["weights"], serde_json::json!([2, 3]));
    assert!(v.get("slices").is_none());
    let totals: Vec<bool> = v["degrees"].as_array().unwrap().iter().map(|d| d["finite"].as_bool().unwrap()).collect();
    assert_eq!(totals, [false, false, true, true]);
    assert_eq!(v["degrees"][2]["total"], 2);

    let o = Command::new(env!("CARGO_BIN_EXE_kh"))
        .args(["cohomology", "--vars", "z1,z2", "--poly", "z1^3+z2^2", "--pmax", "2", "--format", "json"])
        .env("KH_WEIGHT_BOUND", "30")
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["bound"], 30);
}

#[test]
fn small_commands() {
    let o = kh(&["nf", "--vars", "z1,z2", "--gens", "z1^2+z2^3; z1*z2", "--poly", "z1^3+z2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "z2");
    let o = kh(&["member", "--vars", "z1,z2", "--gens", "z1^2; z2", "--poly", "z1^2*z2+z2^3"]);
    assert_eq!(stdout(&o).trim(), "true");
    let o = kh(&["basis", "--vars", "z1,z2,z3", "--poly", "z1^2+z2^2*z3+z3^4"]);
    assert_eq!(stdout(&o).trim(), "{1, z3, z3^2, z3^3, z2}");
    let o = kh(&["hilbert", "--vars", "z1,z2,z3", "--gens", "z1^2+z2^2+z3^2", "--bound", "5"]);
    assert_eq!(stdout(&o).trim(), "1 3 5 7 9 11");
    let o = kh(&["quotient", "--vars", "z1,z2", "--gens", "z1^2; z2^3"]);
    assert!(stdout(&o).starts_with("dimension 6"));
    let o = kh(&["quotient", "--vars", "z1,z2", "--gens", "z1^2"]);
    assert_eq!(o.status.code(), Some(2));
    let o = kh(&["quotient", "--vars", "z1,z2", "--gens", "z1^2", "--bound", "2"]);
    assert!(stdout(&o).contains("{1, z2, z2^2, z1, z1*z2}"), "{}", stdout(&o));
}

#[test]
fn weighted_order_gives_same_milnor_number() {
    let lex = kh(&["milnor", "--vars", "z1,z2,z3", "--poly", "z1^2+z2^3+z2*z3^3"]);
    let wlex = kh(&[
        "milnor",
        "--vars",
        "z1,z2,z3",
        "--poly",
        "z1^2+z2^3+z2*z3^3",
        "--order",
        "wlex:z3>z2>z1",
        "--weights",
        "9,6,4",
    ]);
    assert_eq!(stdout(&lex), stdout(&wlex));
}
