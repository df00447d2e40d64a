use std::process::{Command, Output};

use serde_json::Value;

fn klmov(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_klmov")).args(args).env_remove("KLMOV_CACHE").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json", "--no-cache"]);
    let o = klmov(&all);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).expect("valid json")
}

#[test]
fn lmov_json_hopf_two_one() {
    let v = json(&["lmov", "--torus", "1,1,2", "--mu", "2|1"]);
    assert_eq!(v["schema"], "klmov-v1");
    assert_eq!(v["link"], "T(2,2)");
    assert_eq!(v["integral"], true);
    let got: Vec<(String, i64, String)> = v["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| {
            (e["g"].as_str().unwrap().to_string(), e["beta"].as_i64().unwrap(), e["N"].as_str().unwrap().to_string())
        })
        .collect();
    let want: Vec<(String, i64, String)> = [(-3, "1"), (-1, "-1"), (1, "-1"), (3, "1")]
        .iter()
        .map(|(b, n)| ("0".to_string(), *b, n.to_string()))
        .collect();
    assert_eq!(got, want);
}

#[test]
fn lmov_batch_wraps_results() {
    let v = json(&["lmov", "--torus", "1,1,2", "--mu", "2|1", "--mu", "1|1"]);
    let r = v["results"].as_array().unwrap();
    assert_eq!(r.len(), 2);
    assert_eq!(r[1]["mu"], "1|1");
}

#[test]
fn unknot_is_integral() {
    let v = json(&["lmov", "--unlink", "1", "--mu", "1"]);
    assert_eq!(v["integral"], true);
    assert_eq!(v["link"], "unlink(1)");
}

#[test]
fn degree_reports_bound() {
    let v = json(&["degree", "--torus", "2,3,1", "--mu", "2"]);
    assert_eq!(v["bound"], -1);
    assert_eq!(v["pass"], true);
}

#[test]
fn char_table_csv_header() {
    let o = klmov(&["char-table", "--n", "2", "--format", "csv", "--no-cache"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert_eq!(s.lines().next(), Some("label,class,value"));
    assert_eq!(s.lines().count(), 1 + 3 * 2);
}

#[test]
fn sb_expansion_text() {
    let o = klmov(&["sb", "--partition", "2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "sb_(2) = 1/2*pb(1,1) + 1/2*pb(2) - 1");
}

#[test]
fn ctilde_row_marks_parity() {
    let o = klmov(&["ctilde", "--colors", "1", "--r", "2"]);
    assert!(o.status.success());
    let s = stdout(&o);
    let row = s.lines().nth(1).unwrap();
    assert!(row.contains('×'), "{s}");
}

#[test]
fn parse_errors_exit_two() {
    let o = klmov(&["lmov", "--torus", "x", "--mu", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
    let o = klmov(&["verify", "--only", "nonsense"]);
    assert_eq!(o.status.code(), Some(2));
    let o = klmov(&["lmov", "--torus", "1,1,2", "--unlink", "2", "--mu", "1|1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn component_mismatch_is_usage_error() {
    let o = klmov(&["invariant", "--torus", "1,1,2", "--colors", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn unknown_subcommand_exits_two() {
    let o = klmov(&["bound-free-typo"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_subset_passes() {
    let o = klmov(&["verify", "--only", "characters,rmatrix,10"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let s = stdout(&o);
    assert!(s.lines().filter(|l| l.starts_with("PASS")).count() == 3, "{s}");
}

#[test]
fn property_suite_is_reproducible() {
    let a = json(&["verify", "--suite", "properties", "--seed", "42"]);
    let b = json(&["verify", "--suite", "properties", "--seed", "42"]);
    assert_eq!(a, b);
    assert_eq!(a["passed"], true);
    assert_eq!(a["suite"], "properties");
}

#[test]
fn bound_override_is_enforced() {
    let o = klmov(&["char-table", "--n", "5", "--bound", "partitions=3", "--no-cache"]);
    assert_eq!(o.status.code(), Some(2));
    let o = klmov(&["char-table", "--n", "1", "--bound", "bogus=3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn out_file_and_cache_dir() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("table.json");
    let cache = dir.path().join("cache");
    let o = klmov(&[
        "char-table",
        "--n",
        "3",
        "--format",
        "json",
        "--out",
        out.to_str().unwrap(),
        "--cache-dir",
        cache.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["n"], 3);
    assert_eq!(v["labels"].as_array().unwrap().len(), v["values"].as_array().unwrap().len());
    assert!(std::fs::read_dir(&cache).map(|d| d.count() > 0).unwrap_or(false), "cache dir was not populated");
}

#[test]
fn rmatrix_ribbon_only() {
    let v = json(&["rmatrix", "--N", "2", "--check", "ribbon"]);
    assert_eq!(v["checks"].as_array().unwrap().len(), 1);
    assert_eq!(v["passed"], true);
}
