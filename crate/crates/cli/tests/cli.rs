use std::io::Write;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn holocurv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_holocurv")).args(args).output().expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn zeros(r: usize, c: usize) -> Vec<Vec<&'static str>> {
    vec![vec!["0"; c]; r]
}

fn write_input(v: &Value) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(v.to_string().as_bytes()).unwrap();
    f
}

#[test]
fn rep_reports_structure() {
    let out = holocurv(&["rep", "so:5"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!((v["n"].as_u64(), v["dim_h"].as_u64()), (Some(5), Some(10)));
    assert!(v["dim_P"].is_null());

    let g2 = json_of(&holocurv(&["rep", "g2"]));
    assert_eq!((g2["n"].as_u64(), g2["dim_h"].as_u64()), (Some(7), Some(14)));
}

#[test]
fn bad_spec_exits_2_naming_token() {
    let out = holocurv(&["rep", "so:1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("so:1"));

    let out = holocurv(&["rep", "sx:4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("sx"));
}

#[test]
fn pspace_values() {
    for (spec, p, p1) in [("so:3", 8, 3), ("u:2", 12, 4)] {
        let v = json_of(&holocurv(&["pspace", spec]));
        assert_eq!(v["dim_P"].as_u64(), Some(p), "{spec}");
        assert_eq!(v["dim_P1"].as_u64(), Some(p1), "{spec}");
        assert_eq!(v["dim_P0"].as_u64(), Some(p - p1), "{spec}");
    }
}

#[test]
fn pspace_spin7() {
    let out = holocurv(&["pspace", "spin7"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!((v["dim_P"].as_u64(), v["dim_P1"].as_u64()), (Some(112), Some(0)));
}

#[test]
fn rspace_so3() {
    let v = json_of(&holocurv(&["rspace", "so:3"]));
    assert_eq!(v["dim_R"].as_u64(), Some(6));
    assert_eq!(v["dim_R1"].as_u64(), Some(1));
    assert_eq!(v["dim_Rprime"].as_u64(), Some(5));
}

#[test]
fn oracle_agrees() {
    let a = holocurv(&["rspace", "u:2"]);
    let b = holocurv(&["--oracle", "rspace", "u:2"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_table_rows() {
    let out = holocurv(&["verify-table", "--rows", "so:2"]);
    assert_eq!(out.status.code(), Some(0));
    let row = &json_of(&out)["rows"][0];
    assert_eq!((row["dim_P1"].as_u64(), row["dim_P0"].as_u64()), (Some(2), Some(0)));

    let out = holocurv(&["verify-table", "--rows", "soxso:3,3"]);
    assert_eq!(out.status.code(), Some(0));
    let row = &json_of(&out)["rows"][0];
    assert_eq!((row["dim_P0"].as_u64(), row["dim_P1"].as_u64()), (Some(0), Some(9)));
}

#[test]
fn verify_table_unknown_row_is_error() {
    let out = holocurv(&["verify-table", "--rows", "so:3 nope"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_table_keeps_row_order() {
    let out = holocurv(&["--format", "csv", "verify-table", "--rows", "so:4;so:2", "--rows", "so:3"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let names: Vec<&str> = text.lines().skip(1).map(|l| l.split(',').next().unwrap()).collect();
    assert_eq!(names, ["so:4", "so:2", "so:3"]);
}

#[test]
fn rows_flag_outside_table_is_usage_error() {
    assert_eq!(holocurv(&["--rows", "so:2", "rep", "so:3"]).status.code(), Some(2));
}

#[test]
fn obstruction_values() {
    for (case, value) in [("sp:3", "2"), ("so-even:3", "1"), ("obstruction:so-odd,3", "1"), ("sl8", "-1")] {
        let out = holocurv(&["obstruction", case]);
        assert_eq!(out.status.code(), Some(0), "{case}");
        let v = json_of(&out);
        assert_eq!(v["value"], value, "{case}");
        assert_eq!(v["verdict"], "not in P(h)");
    }
    assert_eq!(holocurv(&["obstruction", "sp:1"]).status.code(), Some(2));
}

#[test]
fn assemble_zero_file() {
    let f = write_input(&json!({ "algebra": "so:3", "R0": zeros(3, 3), "P": zeros(3, 3), "T": zeros(3, 3) }));
    let out = holocurv(&["assemble", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["pass"] == true));
    let ric = v["ricci"].as_array().unwrap();
    assert!(ric.iter().flat_map(|r| r.as_array().unwrap()).all(|x| x == "0"));
}

#[test]
fn assemble_identity_t() {
    let t = vec![vec!["1", "0", "0"], vec!["0", "1", "0"], vec!["0", "0", "1"]];
    let f = write_input(&json!({ "algebra": "so:3", "R0": zeros(3, 3), "P": zeros(3, 3), "T": t }));
    let out = holocurv(&["assemble", f.path().to_str().unwrap(), "--check", "einstein"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["ric_qq"], "3");
}

#[test]
fn assemble_rejects_asymmetric_t() {
    let t = vec![vec!["0", "1", "0"], vec!["0", "0", "0"], vec!["0", "0", "0"]];
    let f = write_input(&json!({ "algebra": "so:3", "R0": zeros(3, 3), "P": zeros(3, 3), "T": t }));
    let out = holocurv(&["assemble", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("T not symmetric"));
}

#[test]
fn assemble_rejects_bad_schema() {
    let f =
        write_input(&json!({ "algebra": "so:3", "R0": zeros(3, 3), "P": zeros(3, 3), "T": zeros(3, 3), "extra": 1 }));
    assert_eq!(holocurv(&["assemble", f.path().to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(holocurv(&["assemble", "/nonexistent/input.json"]).status.code(), Some(2));
    let f = write_input(&json!({ "algebra": "so:3", "R0": zeros(3, 3), "P": zeros(3, 3), "T": zeros(3, 3) }));
    assert_eq!(holocurv(&["assemble", f.path().to_str().unwrap(), "--check", "ricci"]).status.code(), Some(2));
}

#[test]
fn prolongation_dims() {
    let v = json_of(&holocurv(&["prolongation", "sp-complex:2"]));
    assert_eq!((v["field"].as_str(), v["dim"].as_u64()), (Some("complex"), Some(20)));
    let v = json_of(&holocurv(&["prolongation", "so:5"]));
    assert_eq!(v["dim"].as_u64(), Some(0));
}

#[test]
fn output_is_deterministic() {
    let args = ["verify-table", "--rows", "so:3 u:2 g2"];
    assert_eq!(holocurv(&args).stdout, holocurv(&args).stdout);
}

#[test]
fn text_and_csv_formats() {
    let text = String::from_utf8(holocurv(&["--format", "text", "pspace", "so:3"]).stdout).unwrap();
    assert!(text.contains("P = 8 (P0 = 5, P1 = 3)"));
    let csv = String::from_utf8(holocurv(&["--format", "csv", "obstruction", "sl8"]).stdout).unwrap();
    assert_eq!(csv, "case,value,verdict\nsl8,-1,not in P(h)\n");
}

#[test]
fn usage_error_exits_2() {
    assert_eq!(holocurv(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(holocurv(&["--format", "xml", "rep", "so:3"]).status.code(), Some(2));
}
