use std::process::{Command, Output};

use serde_json::Value;

fn twobridge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twobridge"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(stdout(o).trim()).unwrap()
}

#[test]
fn certify_fraction() {
    let o = twobridge(&["certify", "14/1825"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["bound_n"], 9);
    assert_eq!(v["k0"], "14/19");
    assert_eq!(v["sl"], -5);
}

#[test]
fn certify_expansion() {
    let o = twobridge(&["certify", "[6 1 7 1 2]"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["input"], "26/179");
    assert_eq!(v["bound_n"], 2);
    assert_eq!(v["alexander_grading"], 3);
}

#[test]
fn exit_codes() {
    assert_eq!(twobridge(&["certify", "1/3"]).status.code(), Some(2));
    assert_eq!(twobridge(&["certify", "1/4"]).status.code(), Some(2));
    assert_eq!(twobridge(&["certify", "[4 1 3]"]).status.code(), Some(1));
    for bad in ["seven", "3/0", "4/6", "[1 0 2]", "[1"] {
        let o = twobridge(&["certify", bad]);
        assert_eq!(o.status.code(), Some(3), "{bad}");
        assert!(o.stdout.is_empty());
    }
    assert_eq!(twobridge(&["certify"]).status.code(), Some(3));
    assert_eq!(twobridge(&["bogus"]).status.code(), Some(3));
    assert_eq!(twobridge(&["--help"]).status.code(), Some(0));
}

#[test]
fn scan_finds_known_example() {
    let o = twobridge(&["scan", "--max-det", "179", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let row = out.lines().find(|l| l.starts_with("26/179,")).expect("row present");
    assert!(row.ends_with(",0,2,RankBound"), "{row}");
}

#[test]
fn empty_range() {
    for fmt in ["json", "text"] {
        let o = twobridge(&["scan", "--max-det", "1", "--format", fmt]);
        assert_eq!(o.status.code(), Some(0));
        assert!(o.stdout.is_empty());
    }
    let o = twobridge(&["scan", "--max-m", "2", "--max-term", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
}

#[test]
fn scan_needs_a_range() {
    assert_eq!(twobridge(&["scan"]).status.code(), Some(3));
    assert_eq!(twobridge(&["scan", "--max-m", "2"]).status.code(), Some(3));
}

#[test]
fn worker_count_does_not_change_output() {
    let base = twobridge(&["scan", "--max-det", "75", "--dedupe", "--workers", "1"]);
    assert!(!base.stdout.is_empty());
    for k in ["2", "7"] {
        let o = twobridge(&["scan", "--max-det", "75", "--dedupe", "--workers", k]);
        assert_eq!(o.stdout, base.stdout, "workers {k}");
    }
}

#[test]
fn rows_round_trip() {
    for fmt in ["json", "text"] {
        let o = twobridge(&["scan", "--max-m", "1", "--max-term", "5", "--format", fmt]);
        for line in stdout(&o).lines() {
            let fraction = if fmt == "json" {
                serde_json::from_str::<Value>(line).unwrap()["input"].as_str().unwrap().to_string()
            } else {
                line.split(' ').next().unwrap().to_string()
            };
            let single = twobridge(&["certify", &fraction, "--format", fmt]);
            assert_eq!(stdout(&single), format!("{line}\n"));
        }
    }
}

#[test]
fn dedupe_keeps_largest_bound() {
    let all = twobridge(&["scan", "--max-det", "179"]);
    let kept = twobridge(&["scan", "--max-det", "179", "--dedupe"]);
    let n_all = stdout(&all).lines().count();
    let rows: Vec<Value> = stdout(&kept).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert!(rows.len() < n_all);
    // 26/179 and its mirror 153/179 are one type; only the smaller numerator survives.
    assert!(rows.iter().any(|r| r["input"] == "26/179"));
    assert!(!rows.iter().any(|r| r["input"] == "153/179"));
}

#[test]
fn cache_is_reused() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("certs.jsonl");
    let p = path.to_str().unwrap();
    let first = twobridge(&["scan", "--max-det", "25", "--cache", p]);
    let lines = std::fs::read_to_string(&path).unwrap().lines().count();
    assert!(lines > 0);
    let second = twobridge(&["scan", "--max-det", "25", "--cache", p]);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(std::fs::read_to_string(&path).unwrap().lines().count(), lines);
    let one = twobridge(&["certify", "26/179", "--cache", p]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&path).unwrap().lines().count(), lines + 1);
}

#[test]
fn tables_pass() {
    let o = twobridge(&["tables"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.ends_with("29/29 rows pass\n"));
    let o = twobridge(&["tables", "2", "--format", "json"]);
    assert_eq!(stdout(&o).lines().count(), 14);
    assert_eq!(twobridge(&["tables", "3"]).status.code(), Some(3));
}

#[test]
fn invariants_of_figure_eight() {
    let o = twobridge(&["invariants", "2/5"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["alexander"], "-t^{-1} + 3 - t^{1}");
    assert_eq!(v["signature"], 0);
    assert_eq!(v["total_rank"], 5);
    assert_eq!(v["cross_checked"], true);
    assert_eq!(twobridge(&["invariants", "1/4"]).status.code(), Some(2));
}

#[test]
fn diagram_dump() {
    let o = twobridge(&["diagram", "26/179"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("word: term 1: D^1 C^7"));
}
