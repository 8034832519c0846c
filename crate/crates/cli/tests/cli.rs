use std::process::{Command, Output};

use serde_json::Value;

fn ravenel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ravenel"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = ravenel(&full);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn cohomology_of_the_theorem_slice() {
    let v = json(&[
        "cohomology",
        "--p",
        "7",
        "--n",
        "4",
        "--s",
        "13",
        "--t",
        "12",
    ]);
    assert_eq!(v["dimension"], 0);
    assert_eq!(v["slice_dim"], 21);
    assert_eq!(v["incoming_rank"], 16);
    assert_eq!(v["outgoing_rank"], 5);
}

#[test]
fn negative_degree_is_echoed_and_normalized() {
    let v = json(&["basis", "--p", "7", "--n", "4", "--s", "3", "--t", "-12"]);
    assert_eq!(v["t"], -12);
    assert_eq!(v["t_normalized"], 4788);
    assert_eq!(v["dimension"], 21);
}

#[test]
fn truncated_coefficients() {
    let v = json(&[
        "cohomology",
        "--p",
        "5",
        "--n",
        "3",
        "--s",
        "9",
        "--t",
        "8",
        "--truncate",
        "1,27",
    ]);
    assert_eq!(v["dimension"], 1);
    let v = json(&[
        "cohomology",
        "--p",
        "5",
        "--n",
        "3",
        "--s",
        "9",
        "--t",
        "8",
        "--truncate",
        "1,25",
    ]);
    assert_eq!(v["dimension"], 0);
}

#[test]
fn toda_search_finds_b10_power() {
    let v = json(&[
        "toda", "search", "--p", "7", "--bound", "1591", "--degree", "656",
    ]);
    assert_eq!(v["hits"], serde_json::json!(["b10^8"]));
}

#[test]
fn toda_scan_accepts_negative_offset_and_cell_sets() {
    let v = json(&[
        "toda", "scan", "--p", "7", "--s-set", "Z3>686", "--a-set", "Z3>686", "--offset", "-1",
    ]);
    let hits: Vec<(i64, String)> = v["degrees"]
        .as_array()
        .unwrap()
        .iter()
        .flat_map(|d| {
            let deg = d["degree"].as_i64().unwrap();
            d["hits"]
                .as_array()
                .unwrap()
                .iter()
                .map(move |h| (deg, h.as_str().unwrap().to_string()))
        })
        .collect();
    assert_eq!(
        hits,
        vec![
            (1395, "h1b10^16".to_string()),
            (1492, "g1b10^9".to_string())
        ]
    );
}

#[test]
fn bound_beyond_validity_is_rejected() {
    let out = ravenel(&["toda", "enumerate", "--p", "7", "--bound", "2000"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("1591"));
}

#[test]
fn check_all_passes_with_stable_json() {
    let out = ravenel(&["--json", "check", "--all"]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stdout)
    );
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let reports = v.as_array().unwrap();
    assert_eq!(reports.len(), 18);
    assert!(reports.iter().all(|r| r["status"] == "pass"));
    let keys: Vec<&String> = reports[0].as_object().unwrap().keys().collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    let again = ravenel(&["--json", "check", "--all"]);
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn check_report_written_to_file() {
    let path = std::env::temp_dir().join(format!("ravenel-report-{}.json", std::process::id()));
    let out = ravenel(&["check", "n3_residues", "--output", path.to_str().unwrap()]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v[0]["id"], "n3_residues");
    std::fs::remove_file(path).ok();
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(ravenel(&["check", "no_such_check"]).status.code(), Some(2));
    assert_eq!(ravenel(&["basis", "--p", "7"]).status.code(), Some(2));
    assert_eq!(
        ravenel(&["basis", "--p", "6", "--n", "2", "--s", "0", "--t", "0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        ravenel(&["diff", "--p", "5", "--n", "3", "--element", "h1,0 h1,0"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn l33_degree_queries() {
    assert_eq!(
        json(&["l33", "scan", "--degree", "120"])["hits"],
        serde_json::json!([])
    );
    let v = json(&["l33", "scan", "--degree", "152"]);
    let names: Vec<&str> = v["hits"]
        .as_array()
        .unwrap()
        .iter()
        .map(|h| h["name"].as_str().unwrap())
        .collect();
    assert!(names.contains(&"l22"));
    assert!(names.contains(&"(g0h11)*"));
}

#[test]
fn ideal_and_minexp() {
    assert_eq!(
        json(&["ideal", "check", "--p", "5", "--spec", "1;1,p^1"])["invariant"],
        true
    );
    assert_eq!(
        ravenel(&["ideal", "check", "--p", "5", "--spec", "1;1,5"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        json(&["ideal", "check", "--p", "5", "--spec", "2;1"])["invariant"],
        false
    );
    let v = json(&["minexp", "--p", "7", "--n", "4"]);
    assert_eq!(v["closed_form"], 393);
    assert_eq!(v["brute_force"], 393);
}

#[test]
fn diff_output_parses_back() {
    let v = json(&["diff", "--p", "7", "--n", "4", "--element", "h4,0 + 2*h3,1"]);
    let d = v["differential"].as_str().unwrap().to_string();
    let again = json(&["diff", "--p", "7", "--n", "4", "--element", &d]);
    assert_eq!(again["differential"], "0");
}
