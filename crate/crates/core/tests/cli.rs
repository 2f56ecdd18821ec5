use std::process::{Command, Output};

use psemi::membership::in_sigma;
use psemi::{SetPartition, Transformation};
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_psemi"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = run(&full);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn check_exit_codes() {
    let yes = run(&["check", "-p", "0,1|2", "-f", "1,0,2", "--predicate", "sigma"]);
    assert_eq!(yes.status.code(), Some(0));
    assert_eq!(stdout(&yes).trim(), "true");

    let no = run(&["check", "-p", "0,1|2", "-f", "0,1,0", "--predicate", "sigma"]);
    assert_eq!(no.status.code(), Some(1));
    assert_eq!(stdout(&no).trim(), "false");

    let bad = run(&["check", "-p", "0,1|2", "-f", "0,1,9", "--predicate", "sigma"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains('9'));

    let bad_partition = run(&["check", "-p", "0,1|1", "-f", "0,1,2", "--predicate", "sigma"]);
    assert_eq!(bad_partition.status.code(), Some(2));
}

#[test]
fn count_examples() {
    for (set, expected) in [("T", "15"), ("Sigma", "6"), ("S", "2"), ("E-Sigma", "3")] {
        let out = run(&["count", "-p", "0,1|2", "--set", set]);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(stdout(&out).trim(), expected, "{set}");
    }
    let by_profile = json(&["count", "--profile", "2:1,1:1", "--set", "Sigma"]);
    assert_eq!(by_profile["count"], "6");

    let bad = run(&["count", "--profile", "2:1,2:1", "--set", "T"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn guard_exits_with_code_three() {
    let out = run(&["--guard", "100", "enumerate", "-p", "0|1|2|3", "--set", "T"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn json_enumeration_round_trips_through_parsers() {
    let v = json(&["enumerate", "-p", "0,1|2,3", "--set", "Sigma"]);
    let p: SetPartition = v["partition"].as_str().unwrap().parse().unwrap();
    let maps = v["maps"].as_array().unwrap();
    assert_eq!(v["total"], 32);
    assert_eq!(maps.len(), 32);
    for m in maps {
        let f: Transformation = m.as_str().unwrap().parse().unwrap();
        assert!(in_sigma(&f, &p).unwrap());
    }
}

#[test]
fn enumerate_csv_and_lines() {
    let csv = run(&["--format", "csv", "enumerate", "-p", "0,1|2", "--set", "E-Sigma"]);
    let text = stdout(&csv);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("index,map"));
    assert_eq!(lines.next(), Some("0,\"0,0,2\""));
    assert!(text.trim_end().ends_with("# total=3 shown=3 truncated=false"));

    let limited = run(&["--limit", "2", "enumerate", "-p", "0,1|2", "--set", "Sigma"]);
    let text = stdout(&limited);
    assert_eq!(text.lines().filter(|l| !l.starts_with('#')).count(), 2);
    assert!(text.contains("# total=6 shown=2 truncated=true"));

    let constructive = run(&[
        "enumerate", "-p", "0,1|2", "--set", "Sigma", "--strategy", "constructive",
    ]);
    let brute = run(&["enumerate", "-p", "0,1|2", "--set", "Sigma"]);
    assert_eq!(stdout(&constructive), stdout(&brute));
}

#[test]
fn quotient_classes() {
    let v = json(&["quotient", "-p", "0,1|2", "--representatives", "1"]);
    assert_eq!(v["class_count"], 2);
    assert_eq!(v["ok"], true);
    let sizes: Vec<u64> = v["classes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["size"].as_u64().unwrap())
        .collect();
    assert_eq!(sizes, [4, 2]);
}

#[test]
fn character_of_swap() {
    let v = json(&["character", "-p", "0,1|2", "-f", "2,2,0"]);
    assert_eq!(v["character"], "1,0");
    let bad = run(&["character", "-p", "0,1|2", "-f", "0,2,1"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn find_partition() {
    let v = json(&["find-partition", "-f", "1,2,3,4,5,0", "--verify"]);
    assert_eq!(v["partition"], "0,2,4|1,3,5");
    assert_eq!(v["verified"], true);

    let three = json(&["find-partition", "-f", "1,2,3,4,5,0", "-m", "3"]);
    assert_eq!(three["partition"], "0,3|1,4|2,5");

    let prime = run(&["find-partition", "-f", "1,2,3,4,0"]);
    assert_eq!(prime.status.code(), Some(1));
    assert_eq!(stdout(&prime).trim(), "none");
}

#[test]
fn verify_small() {
    let out = run(&["verify", "--n-max", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(!stdout(&out).contains("FAIL"));
}
