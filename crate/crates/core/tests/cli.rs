use std::process::Command;

use polefiber::cli::run;
use serde_json::Value;

fn data(name: &str) -> String {
    format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn bin(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_polefiber"))
        .args(args)
        .env("POLEFIBER_THREADS", "1")
        .output()
        .expect("binary runs")
}

fn argv<'a>(args: &[&'a str]) -> Vec<&'a str> {
    let mut v = vec!["polefiber"];
    v.extend_from_slice(args);
    v
}

#[test]
fn binary_reports_degree() {
    let out = bin(&["degree", "4", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("d(4,2) = 14 (even)"), "{text}");
}

#[test]
fn binary_usage_errors_exit_two() {
    assert_eq!(bin(&["degree"]).status.code(), Some(2));
    assert_eq!(bin(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(bin(&["classify", "2", "2", "0"]).status.code(), Some(2));
    let bad = Command::new(env!("CARGO_BIN_EXE_polefiber"))
        .args(["degree", "2", "2"])
        .env("POLEFIBER_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn degree_json() {
    let out = run(argv(&["degree", "3", "3", "--json"]));
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["degree"], "42");
    assert_eq!(v["parity"], "even");
}

#[test]
fn classify_lines() {
    let out = run(argv(&["classify", "2", "2", "4", "--field", "real"]));
    assert!(out.stdout.contains("NOT generically surjective [WillemsHesselink]"), "{}", out.stdout);
    let out = run(argv(&["classify", "4", "2", "8", "--field", "complex", "--json"]));
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["authority"], "BrockettByrnes");
}

#[test]
fn solve_state_space_file() {
    let out = run(argv(&["solve", &data("state_space_2x2.json"), "--target", "-1,-2,-3,-4"]));
    assert_eq!(out.code, 0, "{}{}", out.stdout, out.stderr);
    assert!(out.stdout.contains("2 solutions: 2 real"), "{}", out.stdout);
}

#[test]
fn solve_json_is_stable() {
    let (system, target) = (data("shapiro_2x2.json"), data("shapiro_2x2_target.json"));
    let args = argv(&["solve", &system, "--target", &target, "--json"]);
    let a = run(args.clone());
    assert_eq!(a.code, 0, "{}", a.stderr);
    assert_eq!(a, run(args));
    let v: Value = serde_json::from_str(&a.stdout).unwrap();
    assert_eq!(v["num_solutions"], 2);
    assert_eq!(v["num_real"], 2);
}

#[test]
fn malformed_system_file_reports_position() {
    let dir = std::env::temp_dir().join(format!("polefiber-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("broken.json");
    std::fs::write(&path, "{\n  \"m\": 1,\n  \"p\": 1,\n  \"representation\": \"mfd\",\n  \"D\": [[[\"1\", \"x\"]]]\n}\n").unwrap();
    let out = run(argv(&["solve", path.to_str().unwrap(), "--target", "-1"]));
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("parse error at"), "{}", out.stderr);

    std::fs::write(&path, "{\n  \"m\": 1,\n  \"p\": 1,\n  \"bogus\": true\n}\n").unwrap();
    let out = run(argv(&["solve", path.to_str().unwrap(), "--target", "-1"]));
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("line "), "{}", out.stderr);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn missing_file_and_bad_target() {
    let out = run(argv(&["solve", "/nonexistent/plant.json", "--target", "-1"]));
    assert_eq!(out.code, 2);
    let out = run(argv(&["solve", &data("shapiro_2x2.json"), "--target", "1,1,2,3", "--mode", "root-eval"]));
    assert_eq!(out.code, 2, "{}", out.stdout);
    let out = run(argv(&["solve", &data("shapiro_2x2.json"), "--target", "1,2"]));
    assert_eq!(out.code, 2, "{}", out.stdout);
}

#[test]
fn truncated_counterexample_fails() {
    let out = run(argv(&["verify-counterexample", "--path-limit", "4"]));
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("FAIL"), "{}", out.stdout);
}

#[test]
fn shapiro_display_and_solve() {
    let out = run(argv(&["shapiro", "3", "2", "--no-solve"]));
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains('|'), "{}", out.stdout);
    let out = run(argv(&["shapiro", "2", "2", "--roots", "-3,-1,1,3", "--json"]));
    assert_eq!(out.code, 0, "{}", out.stdout);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["num_real"], 2);
    assert_eq!(run(argv(&["shapiro", "2", "2", "--roots", "1,2,3"])).code, 2);
}

#[test]
fn search_json_schema() {
    let out = run(argv(&["search", "--plants", "2", "--targets", "2", "--m", "2", "--p", "2", "--json"]));
    assert_eq!(out.code, 0, "{}", out.stderr);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["degree"], 2);
    assert_eq!(v["instances"].as_array().unwrap().len(), 4);
    assert!(v.get("runtime").is_none());
    assert_eq!(run(argv(&["search", "--root-range", "1:3"])).code, 2);
    assert_eq!(run(argv(&["search", "--coeff-range", "5"])).code, 2);
}
