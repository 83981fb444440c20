use serde_json::Value;
use std::process::{Command, Output};

fn kaclie(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kaclie")).args(args).output().expect("binary runs")
}

fn lines(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|l| serde_json::from_str(l).expect("json line"))
        .collect()
}

fn record<'a>(recs: &'a [Value], check: &str) -> &'a Value {
    recs.iter().find(|r| r["check"] == check).unwrap_or_else(|| panic!("no {check} record"))
}

#[test]
fn analyze_g2_index_is_certified() {
    let out = kaclie(&["analyze", "G2[0,1,1]"]);
    assert_eq!(out.status.code(), Some(0));
    let recs = lines(&out);
    assert_eq!(recs[0]["command"], "analyze");
    let idx = record(&recs, "index");
    assert_eq!(idx["claim"], "certified");
    assert_eq!(idx["values"]["index"], 2);
    assert_eq!(record(&recs, "grading")["values"]["order"], 5);
    assert_eq!(recs.last().unwrap()["summary"]["failed"], 0);
}

#[test]
fn analyze_sl2_index_is_certified() {
    let recs = lines(&kaclie(&["analyze", "A1[1,1]"]));
    let idx = record(&recs, "index");
    assert_eq!(idx["claim"], "certified");
    assert_eq!(idx["values"]["index"], 1);
}

#[test]
fn analyze_f4_example_is_observed() {
    let out = kaclie(&["analyze", "F4[0,0,1,0,0]"]);
    assert_eq!(out.status.code(), Some(0));
    let recs = lines(&out);
    let idx = record(&recs, "index");
    assert_eq!(idx["claim"], "observed");
    assert_eq!(idx["values"]["certified"], false);
    assert!(idx["values"]["index"].as_i64().unwrap() >= 4);
}

#[test]
fn malformed_diagram_exits_with_two() {
    let out = kaclie(&["analyze", "G2[0,1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
}

#[test]
fn unknown_suite_exits_with_two() {
    assert_eq!(kaclie(&["verify", "nonsense"]).status.code(), Some(2));
}

#[test]
fn enumerate_sl2_order_two() {
    let recs = lines(&kaclie(&["enumerate", "A1", "1", "2", "--nreg"]));
    let ds: Vec<&Value> = recs.iter().filter(|r| r["check"] == "diagram").collect();
    assert_eq!(ds.len(), 1);
    assert_eq!(ds[0]["values"]["n_regular"], true);
}

#[test]
fn enumerate_e7_lists_a_friendly_pair() {
    let recs = lines(&kaclie(&["enumerate", "E7", "1", "4", "--friendly"]));
    assert!(recs.iter().any(|r| r["check"] == "friendly_pair"));
}

#[test]
fn verify_collapse_passes() {
    let out = kaclie(&["verify", "collapse", "--max-rank", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let recs = lines(&out);
    assert!(recs.last().unwrap()["summary"]["checks"].as_u64().unwrap() > 0);
}

#[test]
fn output_is_reproducible_for_a_fixed_seed() {
    let args = ["--seed", "7", "verify", "index-g2", "--max-order", "6"];
    let a = kaclie(&args);
    let b = kaclie(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn csv_output_has_header_and_rows() {
    let out = kaclie(&["--format", "csv", "analyze", "A1[1,1]"]);
    let text = String::from_utf8_lossy(&out.stdout);
    let mut rows = csv::Reader::from_reader(text.as_bytes());
    assert_eq!(rows.headers().unwrap().iter().next(), Some("suite"));
    assert_eq!(rows.records().count(), 4);
}

#[test]
fn timings_appear_only_on_request() {
    let plain = lines(&kaclie(&["analyze", "A1[1,1]"]));
    assert!(plain.last().unwrap()["summary"].get("runtime_ms").is_none());
    let timed = lines(&kaclie(&["--timings", "analyze", "A1[1,1]"]));
    assert!(timed.last().unwrap()["summary"]["runtime_ms"].is_u64());
}
