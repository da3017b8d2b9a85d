//! Runs the `covsys` binary: golden outputs, exit codes, schema checks and
//! the construct/verify round trip. Set `UPDATE_GOLDEN=1` to rewrite goldens.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn data(name: &str) -> PathBuf {
    root().join("tests/data").join(name)
}

fn covsys(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_covsys")).args(args).output().expect("binary runs")
}

fn covsys_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_covsys"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn check_golden(name: &str, actual: &str) {
    let path = root().join("tests/golden").join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::create_dir_all(path.parent().unwrap()).unwrap();
        std::fs::write(&path, actual).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden {}", path.display()));
    assert_eq!(actual, expected, "output differs from {}", path.display());
}

fn schema(name: &str) -> jsonschema::Validator {
    let text = std::fs::read_to_string(root().join("schema").join(name)).unwrap();
    jsonschema::validator_for(&serde_json::from_str(&text).unwrap()).unwrap()
}

fn assert_valid(validator: &jsonschema::Validator, json: &str) {
    let value: serde_json::Value = serde_json::from_str(json).unwrap();
    let errors: Vec<String> = validator.iter_errors(&value).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "schema errors: {errors:?}");
}

fn golden_set(system: &str) {
    let file = data(&format!("{system}.json"));
    let file = file.to_str().unwrap();
    for cmd in ["verify", "analyze", "map"] {
        let out = covsys(&[cmd, file]);
        assert_eq!(out.status.code(), Some(0), "{cmd} {system}");
        check_golden(&format!("{system}.{cmd}.txt"), &stdout(&out));
    }
    let out = covsys(&["analyze", "--json", file]);
    check_golden(&format!("{system}.analyze.json"), &stdout(&out));
}

#[test]
fn golden_classic() {
    golden_set("classic");
}

#[test]
fn golden_gaussian() {
    golden_set("gaussian");
}

#[test]
fn classic_bounds_for_modulus_eight() {
    let out = covsys(&["analyze", "--json", data("classic.json").to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let eight: Vec<&serde_json::Value> = v["classes"].as_array().unwrap().iter().filter(|c| c["norm"] == 8).collect();
    assert_eq!(eight.len(), 2);
    for c in eight {
        assert_eq!(c["repetition_count"], 2);
        assert_eq!(c["theorem1_bound"], 2);
        assert_eq!(c["theorem2_bound"], 2);
    }
}

#[test]
fn missing_class_prints_witness() {
    let out = covsys(&["verify", data("missing_class.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("NotCovering"), "{text}");
    assert!(text.contains("witness   [7]"), "{text}");
    // analyze refuses a non-exact system the same way
    let out = covsys(&["analyze", data("missing_class.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn malformed_input_exits_two() {
    let out = covsys(&["verify", data("malformed.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let out = covsys(&["verify", "/nonexistent/system.json"]);
    assert_eq!(out.status.code(), Some(2));
    let out = covsys_stdin(&["verify", "-"], r#"{"field":{"type":"quadratic","d":4},"classes":[]}"#);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn residue_cap_exits_three() {
    let out = covsys(&["verify", "--cap", "4", data("classic.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn all_equal_marker() {
    let out = covsys(&["analyze", data("all_equal.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("all-equal"));
    let out = covsys(&["analyze", "--json", data("all_equal.json").to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["classes"].as_array().unwrap().iter().all(|c| c["theorem2_bound"] == "all-equal"));
}

#[test]
fn map_of_full_modulus_class_is_all_fixed() {
    let out = covsys(&["map", data("all_equal.json").to_str().unwrap()]);
    let text = stdout(&out);
    let residue_lines =
        text.lines().skip_while(|l| !l.starts_with("residue")).skip(1).take_while(|l| !l.starts_with("class"));
    assert_eq!(residue_lines.count(), 4);
    assert!(text.lines().filter(|l| l.ends_with("{}")).count() == 4);
}

#[test]
fn json_reports_match_schemas() {
    let verify = schema("verify.schema.json");
    let analyze = schema("analyze.schema.json");
    let map = schema("map.schema.json");
    let system = schema("system.schema.json");
    for name in ["classic.json", "gaussian.json", "all_equal.json", "missing_class.json"] {
        let f = data(name);
        let f = f.to_str().unwrap();
        assert_valid(&system, &std::fs::read_to_string(f).unwrap());
        assert_valid(&verify, &stdout(&covsys(&["verify", "--json", f])));
        assert_valid(&map, &stdout(&covsys(&["map", "--json", f])));
        if name != "missing_class.json" {
            assert_valid(&analyze, &stdout(&covsys(&["analyze", "--json", f])));
        }
    }
}

#[test]
fn construct_output_verifies() {
    let system = schema("system.schema.json");
    for (field, d) in [("rationals", None), ("quadratic", Some("-1")), ("quadratic", Some("-5"))] {
        let mut args = vec!["construct", "--field", field, "--seed", "11", "--steps", "6"];
        if let Some(d) = d {
            args.extend(["--d", d]);
        }
        let out = covsys(&args);
        assert_eq!(out.status.code(), Some(0));
        let json = stdout(&out);
        assert_valid(&system, &json);
        let back = covsys_stdin(&["verify", "-"], &json);
        assert_eq!(back.status.code(), Some(0), "{}", stdout(&back));
    }
}
