use std::fs;
use std::path::{Path, PathBuf};

use qicert_cli::{run, RunReport, EXIT_DOMAIN, EXIT_FINDINGS, EXIT_OK, EXIT_USAGE};
use serde_json::Value;

fn samples() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../docs/samples")
}

fn sample(name: &str) -> String {
    samples().join(name).to_str().unwrap().to_owned()
}

fn qicert(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("qicert").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn write_instance(dir: &tempfile::TempDir, name: &str, json: &str) -> String {
    let path = dir.path().join(name);
    fs::write(&path, json).unwrap();
    path.to_str().unwrap().to_owned()
}

fn without_wall_time(mut v: Value) -> Value {
    v["wall_time_seconds"] = Value::from(0.0);
    v
}

#[test]
fn list_cases_prints_every_case() {
    let (code, out, _) = qicert(&["list-cases"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().count(), 22);
    assert!(out.lines().next().unwrap().starts_with("qi_original"));
}

#[test]
fn reports_match_the_golden_files() {
    for name in ["qi_fx", "prop1_partition", "limit_exp"] {
        let (code, out, err) = qicert(&["case", "--instance", &sample(&format!("{name}.json"))]);
        assert_eq!(code, EXIT_OK, "{err}");
        let got: Value = serde_json::from_str(&out).unwrap();
        let want: Value = serde_json::from_str(&fs::read_to_string(samples().join(format!("{name}.report.json"))).unwrap()).unwrap();
        assert_eq!(without_wall_time(got), without_wall_time(want), "{name}");
    }
    let (code, out, _) = qicert(&[
        "falsify", "--case", "prop1_general", "--budget", "40", "--seed", "3", "--families", &sample("families.json"),
    ]);
    assert_eq!(code, EXIT_OK);
    let want = fs::read_to_string(samples().join("prop1_falsify.report.json")).unwrap();
    assert_eq!(
        without_wall_time(serde_json::from_str(&out).unwrap()),
        without_wall_time(serde_json::from_str(&want).unwrap())
    );
}

#[test]
fn qi_on_x_is_tight() {
    let (_, out, _) = qicert(&["case", "--instance", &sample("qi_fx.json")]);
    let report: RunReport = serde_json::from_str(&out).unwrap();
    let r = &report.results[0];
    assert_eq!(serde_json::to_value(r.verdict).unwrap(), "tight");
    assert!((r.lhs.unwrap() - 0.25).abs() < 1e-12 && (r.rhs.unwrap() - 0.25).abs() < 1e-12);
    assert!(report.config.strict);
}

#[test]
fn limit_scan_writes_csv() {
    let (code, out, _) = qicert(&["limit-scan", "--instance", &sample("limit_exp.json"), "--nmax", "10"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, fs::read_to_string(samples().join("limit_exp.scan.csv")).unwrap());
    let mut rows = csv::Reader::from_reader(out.as_bytes());
    assert_eq!(rows.headers().unwrap().len(), 9);
    assert_eq!(rows.records().count(), 10);
}

#[test]
fn out_flag_writes_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let (code, out, _) = qicert(&["case", "--instance", &sample("qi_fx.json"), "--out", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert!(out.is_empty());
    let report: RunReport = serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(report.command, "case");
}

#[test]
fn unconverged_integrals_fail_only_in_strict_mode() {
    let dir = tempfile::tempdir().unwrap();
    let steep = write_instance(&dir, "steep.json", r#"{"case_id":"qi_original","a":0,"b":1,"n":1,"functions":{"f":"exp(6*x)"}}"#);
    let (code, out, _) = qicert(&["--max-subdivisions", "1", "case", "--instance", &steep]);
    assert_eq!(code, EXIT_FINDINGS);
    assert!(out.contains("\"indeterminate\""));
    let (code, _, _) = qicert(&["--max-subdivisions", "1", "--lenient", "case", "--instance", &steep]);
    assert_eq!(code, EXIT_OK);
}

#[test]
fn failed_hypotheses_are_reported_without_failing_the_run() {
    let dir = tempfile::tempdir().unwrap();
    let weak = write_instance(&dir, "weak.json", r#"{"case_id":"qi_original","a":0,"b":1,"n":2,"functions":{"f":"x"}}"#);
    let (code, out, _) = qicert(&["case", "--instance", &weak]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("\"hypotheses_failed\""));
}

#[test]
fn domain_errors_exit_with_3() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write_instance(&dir, "log.json", r#"{"case_id":"qi_original","a":0,"b":1,"n":1,"functions":{"f":"log(x - 0.5)"}}"#);
    let (code, _, err) = qicert(&["case", "--instance", &bad]);
    assert_eq!(code, EXIT_DOMAIN);
    assert!(err.contains("domain"));
}

#[test]
fn usage_errors_exit_with_2() {
    let dir = tempfile::tempdir().unwrap();
    let unknown = write_instance(&dir, "u.json", r#"{"case_id":"no_such_case","a":0,"b":1,"functions":{}}"#);
    let missing_slot = write_instance(&dir, "m.json", r#"{"case_id":"qi_original","a":0,"b":1,"n":1,"functions":{}}"#);
    let cases: [&[&str]; 7] = [
        &["case", "--instance", &unknown],
        &["case", "--instance", &missing_slot],
        &["case", "--instance", "/nonexistent/instance.json"],
        &["falsify", "--case", "nope", "--budget", "3"],
        &["falsify", "--case", "qi_original", "--budget", "0"],
        &["--grid", "1", "list-cases"],
        &["frobnicate"],
    ];
    for args in cases {
        let (code, _, err) = qicert(args);
        assert_eq!(code, EXIT_USAGE, "{args:?}: {err}");
        assert!(!err.is_empty());
    }
}

#[test]
fn suite_runs_selected_cases() {
    let (code, out, _) = qicert(&["suite", "--cases", "qi_original,lemma_exp", "--count", "20", "--seed", "4"]);
    assert_eq!(code, EXIT_OK);
    let report: RunReport = serde_json::from_str(&out).unwrap();
    assert_eq!(report.falsification.len(), 2);
    assert_eq!(report.config.seed, Some(4));
    assert!(report.falsification.iter().all(|f| f.attempts == 20 && f.violations == 0));
}

#[test]
fn violations_fail_the_run() {
    let text = fs::read_to_string(samples().join("qi_fx.report.json")).unwrap();
    let mut v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::from_value::<RunReport>(v.clone()).unwrap().exit_code(), EXIT_OK);
    v["results"][0]["verdict"] = Value::from("violated");
    let report: RunReport = serde_json::from_value(v).unwrap();
    assert!(!report.is_clean());
    assert_eq!(report.exit_code(), EXIT_FINDINGS);
}
