use std::process::{Command, Output};

fn epalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_epalg")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn roots_count() {
    let o = epalg(&["roots", "E8", "--count"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "240");
    let o = epalg(&["roots", "G2"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["count"], 12);
    assert_eq!(v["roots"].as_array().unwrap().len(), 12);
}

#[test]
fn star_counts_and_files() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("f4.svg");
    let csv = dir.path().join("f4.csv");
    let o = epalg(&["star", "F4", "--svg", svg.to_str().unwrap(), "--csv", csv.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), r#"{"center":6,"hexagon":6,"tips":[6,6,6,6,6,6]}"#);
    assert_eq!(std::fs::read_to_string(&csv).unwrap().lines().count(), 49);
    assert!(std::fs::read_to_string(&svg).unwrap().starts_with("<svg"));
}

#[test]
fn clifford_summary_and_emit() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.csv");
    let o = epalg(&["clifford", "9", "0", "--check", "--emit", path.to_str().unwrap()]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["dim"], 16);
    assert_eq!(v["reality_class"], "Majorana");
    assert_eq!(std::fs::read_to_string(&path).unwrap().lines().count(), 1 + 9 * 16);
}

#[test]
fn ep_exit_codes_follow_the_claim() {
    let o = epalg(&["ep", "--level", "str0", "--n", "0", "--samples", "5", "--seed", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["dimension"], 78);
    assert_eq!(v["jacobi_status"], "holds");

    let o = epalg(&["ep", "--level", "der", "--n", "1", "--samples", "10"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["jacobi_status"], "violated");
    assert_eq!(v["witness"], serde_json::json!([0, 1, 16]));
}

#[test]
fn ep_output_is_deterministic() {
    let args = ["ep", "--level", "conf", "--n", "0", "--samples", "3", "--seed", "11"];
    assert_eq!(epalg(&args).stdout, epalg(&args).stdout);
}

#[test]
fn talg_entropy_of_rank_two_diagonal() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("diag220.json");
    let zeros = vec!["0"; 16];
    let doc = serde_json::json!({"q": 8, "n": 0, "r": ["2", "2", "0"], "v": vec!["0"; 8], "psi": [zeros]});
    std::fs::write(&path, doc.to_string()).unwrap();
    let o = epalg(&["talg", "--q", "8", "--n", "0", "entropy", "--input", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), r#"{"N":"0","rank":2,"entropy":0.0}"#);
}

#[test]
fn talg_norm_of_diagonal() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d.json");
    let doc =
        serde_json::json!({"q": 2, "n": 0, "r": ["1", "2", "-2"], "v": ["0", "0"], "psi": [["0", "0"], ["0", "0"]]});
    std::fs::write(&path, doc.to_string()).unwrap();
    let o = epalg(&["talg", "--q", "2", "--n", "0", "norm", "--input", path.to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["N"], "-4");
    assert_eq!(v["entropy"], 2.0 * std::f64::consts::PI);
}

#[test]
fn usage_and_io_errors() {
    assert_eq!(epalg(&["roots", "E8", "--bogus"]).status.code(), Some(1));
    assert_eq!(epalg(&["roots", "X9"]).status.code(), Some(1));
    assert_eq!(epalg(&["frobnicate"]).status.code(), Some(1));
    let o = epalg(&["talg", "--q", "8", "--n", "0", "norm", "--input", "/nonexistent/t.json"]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(epalg(&["--help"]).status.code(), Some(0));
}
