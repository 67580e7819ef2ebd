use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_flatknot"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn temp_file(name: &str, content: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("flatknot-cli-test-{name}"));
    std::fs::write(&path, content).unwrap();
    path
}

const FLAT_FIGURE_JSON: &str = r#"{"ring":"Z2","labels":["s","1","2","3"],
"b":[[0,1,1,0],[1,0,0,0],[1,0,0,1],[0,0,1,0]]}"#;

#[test]
fn compute_code_report() {
    let out = run(&["compute", "--code", "O1+O2+U1+U2+", "--ring", "z2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("genus: 1"), "{text}");
    assert!(text.contains("group: Z_2"), "{text}");
}

#[test]
fn compute_code_structured_is_json_and_deterministic() {
    let args: [&str; 7] = [
        "compute",
        "--code",
        "1-2-3+2-1-3+",
        "--ring",
        "z2",
        "--format",
        "structured",
    ];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let doc: serde_json::Value = serde_json::from_str(stdout(&a).trim()).unwrap();
    assert_eq!(doc["group"], "Z_2^3");
    assert_eq!(doc["parities"]["2"], serde_json::json!([1, 0, 1]));
    assert_eq!(doc["matrix"]["labels"][0], "s");
}

#[test]
fn compute_matrix_file() {
    let path = temp_file("m1.json", FLAT_FIGURE_JSON);
    let out = run(&["compute", "--matrix", path.to_str().unwrap(), "--ring", "z2"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("group: Z_2^3"));
}

#[test]
fn compute_matrix_ring_mismatch() {
    let path = temp_file("m2.json", FLAT_FIGURE_JSON);
    let out = run(&["compute", "--matrix", path.to_str().unwrap(), "--ring", "z"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn table_with_bad_row_keeps_going() {
    let path = temp_file(
        "table.tsv",
        "trefoil\tO1+U2+O3+U1+O2+U3+\nvtrefoil\tO1+O2+U1+U2+\nbad line without a tab\n",
    );
    let out = run(&[
        "compute",
        "--table",
        path.to_str().unwrap(),
        "--ring",
        "z2",
        "--format",
        "structured",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    let first: serde_json::Value = serde_json::from_str(lines[0]).unwrap();
    assert_eq!(first["name"], "trefoil");
    let last: serde_json::Value = serde_json::from_str(lines[2]).unwrap();
    assert!(last["error"].is_string());
}

#[test]
fn verify_fixture_matrix() {
    let path = temp_file("m3.json", FLAT_FIGURE_JSON);
    let out = run(&["verify", "--matrix", path.to_str().unwrap()]);
    assert!(out.status.success(), "{}", stdout(&out));
    assert!(stdout(&out).contains("Gaussian: ok"));
    assert!(stdout(&out).contains("Reduced: ok"));
}

#[test]
fn verify_rejects_broken_matrix() {
    // not skew-symmetric
    let path = temp_file(
        "m4.json",
        r#"{"ring":"Z","labels":["s","a"],"b":[[0,1],[1,0]]}"#,
    );
    let out = run(&["verify", "--matrix", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn fuzz_small_run_is_clean_and_deterministic() {
    let args = [
        "fuzz", "--ring", "z2", "--count", "30", "--max-size", "4", "--moves", "6", "--seed", "1",
    ];
    let a = run(&args);
    assert!(a.status.success(), "{}", stdout(&a));
    assert!(stdout(&a).contains("all assertions hold"));
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn compute_without_input_is_an_error() {
    let out = run(&["compute"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bad_code_is_an_input_error() {
    let out = run(&["compute", "--code", "O1+U2+U1+", "--format", "structured"]);
    assert_eq!(out.status.code(), Some(2));
    let doc: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert!(doc["error"].as_str().unwrap().contains("crossing 2"));
}
