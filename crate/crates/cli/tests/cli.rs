use std::path::Path;
use std::process::{Command, Output};

fn latinq(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_latinq")).args(args).current_dir(dir).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn construct_verify_lattice_iso() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    assert!(latinq(&["construct", "--family", "q4", "--out", "q4.tbl"], d).status.success());
    assert!(latinq(&["construct", "--family", "lss4p", "--p", "7", "--j", "1", "--out", "l1.tbl"], d).status.success());
    assert!(latinq(&["construct", "--family", "lss4p", "--p", "7", "--j", "2", "--out", "l2.tbl"], d).status.success());

    let v = latinq(&["verify", "--file", "l1.tbl", "--props", "latin,connected,faithful,solvable,si"], d);
    assert!(v.status.success(), "{}", stdout(&v));
    assert!(stdout(&v).contains("si: true"));
    let v = latinq(&["verify", "--file", "l1.tbl", "--props", "latin,dd"], d);
    assert!(!v.status.success());
    assert!(stdout(&v).contains("dd: false"));

    let l = latinq(&["lattice", "--file", "l1.tbl", "--dot", "l1.dot"], d);
    assert!(l.status.success());
    assert!(stdout(&l).contains("chain-3"));
    let dot = std::fs::read_to_string(d.join("l1.dot")).unwrap();
    assert!(dot.starts_with("digraph") && dot.matches("->").count() == 2);

    assert!(latinq(&["iso", "--a", "l1.tbl", "--b", "l1.tbl"], d).status.success());
    let i = latinq(&["iso", "--a", "l1.tbl", "--b", "l2.tbl"], d);
    assert!(!i.status.success());
    assert!(stdout(&i).contains("not isomorphic"));
}

#[test]
fn construct_rejects_bad_arguments() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    assert!(!latinq(&["construct", "--family", "sr", "--p", "11", "--out", "x.tbl"], d).status.success());
    assert!(!latinq(&["construct", "--family", "sr", "--out", "x.tbl"], d).status.success());
    assert!(!latinq(&["construct", "--family", "latin16", "--j", "10", "--out", "x.tbl"], d).status.success());
    assert!(!latinq(&["construct", "--family", "g5", "--p", "3", "--out", "x.tbl"], d).status.success());
    assert!(!latinq(&["classify", "--p", "7", "--tier", "4"], d).status.success());
    assert!(!latinq(&["verify", "--file", "missing.tbl"], d).status.success());
}

#[test]
fn classify_writes_report_and_tables() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let o = latinq(&["classify", "--p", "3", "--tier", "1", "--out", "report.json", "--tables-dir", "tables"], d);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("SI 1, DD 9, SR-not-DD 0"));
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(d.join("report.json")).unwrap()).unwrap();
    assert_eq!(report["p"], 3);
    assert_eq!(report["counts"]["dd"], 9);
    assert_eq!(report["coverage"]["exhaustive"], false);
    let families = report["families"].as_array().unwrap();
    assert_eq!(families.len(), 10);
    for f in families {
        let file = f["table_file"].as_str().unwrap();
        assert!(d.join(file).exists());
        assert_eq!(f["fingerprint"]["n"], 48);
    }
    let v = latinq(&["verify", "--file", families[0]["table_file"].as_str().unwrap(), "--props", "latin,si"], d);
    assert!(v.status.success());
}

#[test]
fn chain_search_and_suites() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let c = latinq(&["chain-search", "--p", "5", "--tier", "1"], d);
    assert!(c.status.success());
    assert!(stdout(&c).contains("1 quandle(s) [80]"));
    let s = latinq(&["suite", "--name", "galois", "--p", "7"], d);
    assert!(s.status.success(), "{}", stdout(&s));
    assert!(stdout(&s).contains("0 failed"));
    assert!(!latinq(&["suite", "--name", "counting", "--p", "11"], d).status.success());
}
