use std::process::{Command, Output};

use serde_json::Value;

fn sqfree(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sqfree"))
        .args(args)
        .env_remove("SQFREE_FORMAT")
        .env_remove("SQFREE_BUDGET")
        .env_remove("SQFREE_CHARS")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = sqfree(&all);
    assert!(out.status.success(), "{}", stderr(&out));
    serde_json::from_str(&stdout(&out)).unwrap()
}

fn write_temp(contents: &str) -> tempfile::NamedTempFile {
    let file = tempfile::NamedTempFile::new().unwrap();
    std::fs::write(file.path(), contents).unwrap();
    file
}

#[test]
fn symbolic_power_listing() {
    let out = sqfree(&["symbolic", "--fixture", "c5", "-n", "3"]);
    assert!(out.status.success());
    assert!(stdout(&out).lines().any(|l| l.trim() == "x1*x2*x3*x4*x5"));

    let v = json(&["symbolic", "--fixture", "c5", "-n", "1"]);
    assert_eq!(v["display"], "(x1*x2, x2*x3, x3*x4, x1*x5, x4*x5)");

    let prime = write_temp("x1, x3");
    let v = json(&["symbolic", prime.path().to_str().unwrap(), "-n", "2"]);
    assert_eq!(v["display"], "(x1^2, x1*x3, x3^2)");
}

#[test]
fn equality_verdicts() {
    let v = json(&["equality", "--fixture", "c5"]);
    assert_eq!(v["verdict_all_n"], false);
    assert_eq!(v["first_failure"]["n"], 3);
    assert_eq!(v["first_failure"]["witness"], serde_json::json!([1, 1, 1, 1, 1]));

    let v = json(&["equality", "--fixture", "path3", "--extended", "5"]);
    assert_eq!(v["verdict_all_n"], true);
    let extended = v["extended"].as_array().unwrap();
    assert_eq!(extended.last().unwrap()["n"], 5);
    assert!(extended.iter().all(|c| c["equal"] == true));
}

#[test]
fn packed_reports() {
    let triangle = write_temp(r#"{"vertices":3,"edges":[[1,2],[2,3],[1,3]]}"#);
    let v = json(&["packed", triangle.path().to_str().unwrap()]);
    assert_eq!(v["konig"], false);
    assert_eq!(v["packed"], false);

    let v = json(&["packed", "--fixture", "c5"]);
    assert_eq!((v["cover_number"].as_u64(), v["matching_number"].as_u64()), (Some(3), Some(2)));
    assert_eq!(v["packed"], false);
    assert_eq!(v["mfmc"], false);

    let edge = write_temp(r#"{"vertices":2,"edges":[[1,2]]}"#);
    let v = json(&["packed", edge.path().to_str().unwrap()]);
    for key in ["konig", "packed", "mfmc", "equal_all_powers"] {
        assert_eq!(v[key], true, "{key}");
    }
}

#[test]
fn mfmc_sweep_and_budget_refusal() {
    let v = json(&["mfmc", "--fixture", "c5"]);
    assert_eq!(v["report"]["holds"], false);
    assert_eq!(v["report"]["failing"]["c"], serde_json::json!([1, 1, 1, 1, 1]));
    assert_eq!(v["equal_all_powers"], false);

    let v = json(&["mfmc", "--fixture", "path4", "--symmetry"]);
    assert_eq!(v["report"]["holds"], true);

    let out = sqfree(&["mfmc", "--fixture", "c5", "--budget", "10"]);
    assert_eq!(out.status.code(), Some(sqfree_cli::EXIT_BUDGET));
    assert!(stderr(&out).starts_with("refused"));
}

#[test]
fn limits_csv() {
    let out = sqfree(&["limits", "--fixture", "c5", "--n-max", "3", "--format", "csv"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,reg,depth,a_0,a_1,a_2,alpha,reg_over_n,alpha_over_n,checks");
    assert_eq!(lines.len(), 4);
    assert!(lines[1..].iter().all(|l| l.ends_with(",ok")));

    let out = sqfree(&["limits", "--fixture", "c3", "--n-max", "1", "--format", "csv"]);
    assert_eq!(stdout(&out).lines().count(), 2);
}

#[test]
fn limits_budget_truncates() {
    let out = sqfree(&["limits", "--fixture", "c5", "--n-max", "2", "--budget", "10"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("truncated: rows [2]"));
}

#[test]
fn homology_over_two_fields() {
    let v = json(&["homology", "--fixture", "c5", "--chars", "0,2"]);
    let fields = v["fields"].as_array().unwrap();
    assert_eq!(fields.len(), 2);
    assert_eq!(fields[0]["summary"]["reg"], 2);
    assert_eq!(fields[0]["betti"], fields[1]["betti"]);
}

#[test]
fn corpus_is_deterministic_and_planted_row_matches() {
    let args = ["corpus", "--count", "15", "--vars", "5", "--max-gens", "5", "--seed", "11", "--plant", "c5"];
    let mut with_json = args.to_vec();
    with_json.extend(["--format", "json"]);
    let a = sqfree(&with_json);
    let b = sqfree(&with_json);
    assert!(a.status.success(), "{}", stderr(&a));
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["violation_count"], 0);
    let c5 = &v["rows"][0];
    assert_eq!(c5["label"], "c5");
    assert_eq!(c5["first_failure"], 3);

    let mut with_csv = args.to_vec();
    with_csv.extend(["--format", "csv"]);
    assert_eq!(sqfree(&with_csv).stdout, sqfree(&with_csv).stdout);
}

#[test]
fn environment_overrides_and_dump() {
    let dump = tempfile::NamedTempFile::new().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_sqfree"))
        .args(["equality", "--fixture", "c3"])
        .env("SQFREE_FORMAT", "json")
        .env("SQFREE_DUMP", dump.path())
        .output()
        .unwrap();
    assert!(out.status.success());
    let printed: Value = serde_json::from_slice(&out.stdout).unwrap();
    let dumped: Value = serde_json::from_str(&std::fs::read_to_string(dump.path()).unwrap()).unwrap();
    assert_eq!(printed, dumped);
    assert_eq!(printed["first_failure"]["n"], 2);
}

#[test]
fn input_errors() {
    let out = sqfree(&["equality", "--fixture", "c6"]);
    assert_eq!(out.status.code(), Some(sqfree_cli::EXIT_ERROR));
    let out = sqfree(&["homology", "--fixture", "c5", "--chars", "6"]);
    assert_eq!(out.status.code(), Some(sqfree_cli::EXIT_ERROR));
    let not_sqfree = write_temp("x1^2*x2");
    let out = sqfree(&["equality", not_sqfree.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(sqfree_cli::EXIT_ERROR));
    let out = sqfree(&["equality"]);
    assert_eq!(out.status.code(), Some(sqfree_cli::EXIT_ERROR));
}
