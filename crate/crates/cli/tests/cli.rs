use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn shellcount(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_shellcount"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    if let Some(text) = stdin {
        child.stdin.take().unwrap().write_all(text.as_bytes()).unwrap();
    }
    drop(child.stdin.take());
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

#[test]
fn count_c4_from_stdin() {
    let out = shellcount(&["count", "-"], Some("0 1\n1 2\n2 3\n3 0\n"));
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["schemaVersion"], 1);
    assert_eq!(v["results"]["complete_bipartite"], "16");
    assert_eq!(v["results"]["dp"], "16");
    assert_eq!(v["crossChecks"][0]["status"], "pass");
    assert!(String::from_utf8_lossy(&out.stderr).contains("PASS"));
}

#[test]
fn count_path_and_disconnected() {
    let v = json(&shellcount(&["count", "-"], Some("0 1\n1 2\n2 3\n")));
    assert_eq!(v["results"]["tree"], "4");
    assert_eq!(v["results"]["dp"], "4");
    let out = shellcount(&["count", "-"], Some("n 4\n0 1\n2 3\n"));
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["results"]["count"], "0");
}

#[test]
fn count_brute_matches_default() {
    let theta = "0 1\n1 2\n0 3\n3 2\n0 4\n4 2\n";
    let a = json(&shellcount(&["count", "-"], Some(theta)));
    let b = json(&shellcount(&["count", "--brute", "-"], Some(theta)));
    assert_eq!(a["results"]["count"], b["results"]["count"]);
    assert_eq!(b["results"]["enumeration"], b["results"]["dp"]);
}

#[test]
fn parse_errors_exit_2() {
    let out = shellcount(&["count", "-"], Some("0 1\n1 1\n"));
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    assert_eq!(code(&shellcount(&["count", "/no/such/file"], None)), 2);
    assert_eq!(code(&shellcount(&["tree-roots", "-"], Some("0 1\n1 2\n2 0\n"))), 2);
    assert_eq!(code(&shellcount(&["frobnicate"], None)), 2);
    assert_eq!(code(&shellcount(&["formula", "kn", "1"], None)), 2);
    assert_eq!(code(&shellcount(&["verify", "everything"], None)), 2);
}

#[test]
fn tree_roots_double_star() {
    let v = json(&shellcount(&["tree-roots", "-"], Some("0 1\n0 2\n1 3\n1 4\n")));
    let roots: Vec<&str> = v["perVertex"]["rootCounts"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_str().unwrap())
        .collect();
    assert_eq!(roots, ["8", "12", "2", "3", "3"]);
    assert_eq!(v["results"]["total"], "14");
}

#[test]
fn formula_values() {
    assert_eq!(json(&shellcount(&["formula", "kmn", "2", "3"], None))["results"]["count"], "360");
    assert_eq!(json(&shellcount(&["formula", "kn", "4"], None))["results"]["count"], "576");
    let v = json(&shellcount(&["formula", "stanley", "2", "2"], None));
    assert_eq!(v["results"]["count"], "16");
    assert_eq!(v["results"]["innerSum"], "2/3");
}

#[test]
fn bounds_path5() {
    let g = shellcount(&["gen", "path", "5"], None);
    let v = json(&shellcount(&["bounds", "-"], Some(&String::from_utf8_lossy(&g.stdout))));
    assert_eq!(v["results"]["exact"], "8");
    assert_eq!(v["results"]["diameterUpperPrinted"], "16");
    assert_eq!(v["results"]["midSpiderExact"], "8");
}

#[test]
fn gen_round_trips_and_is_deterministic() {
    let a = shellcount(&["gen", "tree", "10", "--seed", "42"], None);
    let b = shellcount(&["gen", "tree", "10", "--seed", "42"], None);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    let v = json(&shellcount(&["tree-roots", "-"], Some(&text)));
    assert_eq!(v["input"]["n"], 10);
    assert_eq!(v["crossChecks"][0]["status"], "pass");

    let c4 = String::from_utf8(shellcount(&["gen", "kmn", "2", "2"], None).stdout).unwrap();
    assert_eq!(c4.lines().filter(|l| !l.starts_with('n')).count(), 4);
    assert_eq!(code(&shellcount(&["gen", "mid-spider", "3", "3"], None)), 2);
}

#[test]
fn verify_bipartite_passes() {
    let out = shellcount(&["verify", "bipartite"], None);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    for c in v["crossChecks"].as_array().unwrap() {
        assert_eq!(c["status"], "pass");
        assert!(c["cases"].as_u64().unwrap() > 0);
    }
}
