use std::process::{Command, Output};

use gwgr::cli::{exit_code, OutputRecord, TableRow};
use gwgr::invariants::Pipeline;
use gwgr::Error;
use serde_json::Value;

fn gwgr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gwgr"))
        .args(args)
        .env_remove("GWGR_TOL")
        .output()
        .expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    gwgr(args).status.code().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = gwgr(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

const G1_K3: [&str; 10] = ["invariant", "--genus", "1", "--degree", "2", "--r", "2", "--k", "3", "--exponents"];

fn with<'a>(base: &[&'a str], extra: &[&'a str]) -> Vec<&'a str> {
    base.iter().chain(extra).copied().collect()
}

#[test]
fn invariant_examples() {
    let json = stdout(&with(&G1_K3, &["6,0", "--format", "json"]));
    let rec: OutputRecord = serde_json::from_str(&json).unwrap();
    assert!(rec.agree);
    assert!(rec.results.iter().all(|r| r.value == 3.into()));

    let json = stdout(&["invariant", "--genus", "2", "--degree", "3", "--r", "1", "--k", "4", "--exponents", "9", "--format", "json"]);
    let rec: OutputRecord = serde_json::from_str(&json).unwrap();
    assert_eq!(rec.results.iter().map(|r| r.pipeline).collect::<Vec<_>>(), [Pipeline::Vi, Pipeline::Projective]);
    assert!(rec.results.iter().all(|r| r.value == 16.into()));
}

#[test]
fn json_schema_and_round_trip() {
    let json = stdout(&with(&G1_K3, &["4,1", "--format", "json"]));
    let v: Value = serde_json::from_str(&json).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["agree", "formal_value", "query", "results"]);
    let query: Vec<&str> = v["query"].as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(query, ["d", "g", "k", "r", "s"]);
    for r in v["results"].as_array().unwrap() {
        assert!(r["value"].is_string());
        assert!(r["residual"].is_f64());
        assert!(r["exact"].is_boolean());
        assert!(r["pipeline"].is_string());
    }
    let rec: OutputRecord = serde_json::from_str(&json).unwrap();
    let again: OutputRecord = serde_json::from_str(&serde_json::to_string(&rec).unwrap()).unwrap();
    assert_eq!(rec, again);
}

#[test]
fn output_is_deterministic() {
    for format in ["text", "json", "csv"] {
        let args = with(&G1_K3, &["2,2", "--format", format]);
        assert_eq!(stdout(&args), stdout(&args), "{format}");
        let table = ["table", "--k", "5", "--degree", "3", "--format", format];
        assert_eq!(stdout(&table), stdout(&table), "table {format}");
    }
}

#[test]
fn table_shape() {
    let csv = stdout(&["table", "--genus", "1", "--r", "2", "--k", "3", "--degree", "2", "--format", "csv"]);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "n,m,vi,oracle,closed,flip,agree");
    assert_eq!(lines.len(), 5);
    assert!(lines[1].starts_with("0,6,3,3,3,3,true"));
    let csv = stdout(&["table", "--k", "3", "--degree", "1", "--format", "csv"]);
    assert_eq!(csv.lines().count(), 3);
    let rows: Vec<TableRow> =
        serde_json::from_str(&stdout(&["table", "--k", "4", "--degree", "2", "--format", "json"])).unwrap();
    assert_eq!(rows.len(), 5);
    assert!(rows.iter().all(|r| r.record.agree));
    // beyond the floating budget the table still fills the exact columns
    let csv = stdout(&["table", "--k", "5", "--degree", "10", "--format", "csv"]);
    assert!(csv.lines().nth(1).unwrap().starts_with("0,50,,,"));
}

#[test]
fn exit_codes() {
    assert_eq!(code(&with(&G1_K3, &["6,0"])), 0);
    // dimension mismatch
    let out = gwgr(&with(&G1_K3, &["5,0"]));
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("dimension"));
    // pipeline not applicable
    assert_eq!(code(&["invariant", "--genus", "2", "--degree", "3", "--r", "2", "--k", "4", "--exponents", "8,0", "--pipeline", "closed"]), 2);
    // invalid Grassmannian
    assert_eq!(code(&["ring", "--r", "3", "--k", "3"]), 2);
    // floating pipeline over budget
    assert_eq!(code(&["invariant", "--genus", "1", "--degree", "10", "--r", "2", "--k", "5", "--exponents", "50,0", "--pipeline", "vi"]), 2);
    // non-genus-one table
    assert_eq!(code(&["table", "--genus", "2", "--k", "3", "--degree", "2"]), 2);
    // usage errors
    assert_eq!(code(&["invariant", "--genus", "1"]), 1);
    assert_eq!(code(&["verify", "--suite", "nonsense"]), 1);
    assert_eq!(code(&with(&G1_K3, &["6,0", "--pipeline", "bogus"])), 1);
    assert_eq!(code(&with(&G1_K3, &["6,x"])), 1);
    assert_eq!(code(&["--help"]), 0);
    assert_eq!(code(&["--version"]), 0);
}

#[test]
fn exit_code_per_error_class() {
    let p = Pipeline::Vi;
    assert_eq!(exit_code(&Error::DimensionMismatch { expected: 6, got: 5 }), 2);
    assert_eq!(exit_code(&Error::PipelineNotApplicable { pipeline: p, reason: String::new() }), 2);
    assert_eq!(exit_code(&Error::InvalidGrassmannian { r: 3, k: 3 }), 2);
    assert_eq!(exit_code(&Error::PrecisionBudgetExceeded { kd: 50, budget: 48 }), 2);
    let mismatch = Error::CrossCheckMismatch {
        first: p,
        first_value: "1".into(),
        second: Pipeline::Closed,
        second_value: "2".into(),
    };
    assert_eq!(exit_code(&mismatch), 3);
    let non_integer = Error::NonIntegerResult { re: 0.5, im: 0.0, residual: 0.5, tol: 1e-9, err: 0.0 };
    assert_eq!(exit_code(&non_integer), 3);
}

#[test]
fn tolerance_from_environment() {
    let base = with(&G1_K3, &["6,0"]);
    let bad = Command::new(env!("CARGO_BIN_EXE_gwgr")).args(&base).env("GWGR_TOL", "loose").output().unwrap();
    assert_eq!(bad.status.code(), Some(1));
    let ok = Command::new(env!("CARGO_BIN_EXE_gwgr")).args(&base).env("GWGR_TOL", "1e-6").output().unwrap();
    assert!(String::from_utf8_lossy(&ok.stdout).contains("tolerance: 1e-6"));
}

#[test]
fn ring_and_critical_commands() {
    assert!(stdout(&["ring", "--r", "1", "--k", "4"]).starts_with("W = 1/5 X1^5\n"));
    let ring = stdout(&["ring", "--r", "2", "--k", "3"]);
    assert_eq!(ring, "W = 1/4 X1^4 - X1^2 X2 + 1/2 X2^2\nY2 = X1^2 - X2\nY3 = -X1^3 + 2 X1 X2\nh = X1^2 + 2 X2\n");
    let crit = stdout(&["critical", "--r", "2", "--k", "5"]);
    assert_eq!(crit.lines().count(), 11);
    let json: Value = serde_json::from_str(&stdout(&["critical", "--r", "1", "--k", "3", "--format", "json"])).unwrap();
    assert_eq!(json.as_array().unwrap().len(), 3);
}

#[test]
fn verify_command() {
    let out = stdout(&["verify", "--suite", "pipelines", "--max-k", "4", "--max-d", "4"]);
    assert!(out.lines().last().unwrap().ends_with(" 0 failed"));
    let out = stdout(&["verify", "--suite", "sympoly"]);
    assert!(out.contains("PASS [sympoly] G(7,8)"));
}
