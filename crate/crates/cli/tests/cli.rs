use std::fs;
use std::process::{Command, Output};

fn pbei(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pbei"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn ideal_prints_generators() {
    let o = pbei(&["ideal", "--complete", "3", "--kind", "parity"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "x1*x2 - y1*y2\nx1*x3 - y1*y3\nx2*x3 - y2*y3\n");
}

#[test]
fn hilbert_prints_numerator() {
    let o = pbei(&[
        "hilbert",
        "--complete",
        "4",
        "--kind",
        "parity",
        "--degrees",
        "4",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(
        out.contains("numerator: 1 - 6*t^2 + 22*t^4 - 24*t^5 + 2*t^6 + 8*t^7 - 3*t^8"),
        "{out}"
    );
    assert!(out.contains("dim: 4"));
    assert!(out.contains("H: 1, 8, 30, 72, 136"));
}

#[test]
fn gb_reads_graph_files() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("tri.g");
    fs::write(&good, "3\n1 2\n2 3\n1 3\n").unwrap();
    let o = pbei(&["gb", "--graph", good.to_str().unwrap(), "--order", "lex"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().count() >= 3);

    let bad = dir.path().join("bad.g");
    fs::write(&bad, "3\n1 2\n2 zz\n").unwrap();
    let o = pbei(&["gb", "--graph", bad.to_str().unwrap(), "--order", "lex"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
}

#[test]
fn bad_flags_are_usage_errors() {
    assert_eq!(
        pbei(&["gb", "--complete", "3", "--order", "revlex"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        pbei(&["ideal", "--complete", "3", "--field", "fp:4"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        pbei(&["ideal", "--complete", "3", "--kind", "mystery"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(pbei(&["verify", "--checks", "NOPE"]).status.code(), Some(2));
    assert_eq!(
        pbei(&["verify", "--nmin", "2", "--nmax", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(pbei(&["ideal"]).status.code(), Some(2));
}

#[test]
fn permanental_warns_in_characteristic_two() {
    let o = pbei(&[
        "ideal",
        "--complete",
        "3",
        "--kind",
        "permanental",
        "--field",
        "fp:2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("permanental = determinantal"));
}

#[test]
fn betti_table_layout_and_cap() {
    let o = pbei(&["betti", "--complete", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("       0 1 2 3\ntotal: 1 3 3 1\n"));
    let o = pbei(&["betti", "--complete", "3", "--cap", "10"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("desk-scale exceeded"));
}

#[test]
fn verify_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let o = pbei(&[
        "verify",
        "--nmin",
        "3",
        "--nmax",
        "3",
        "--json",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["field"], "q");
    assert_eq!(v["summary"]["fail"], 0);
    assert_eq!(v["summary"]["pass"], 17);
    assert!(v["version"].is_string());
    let first = &v["checks"][0];
    for key in ["check_id", "n", "status", "witness", "runtime_ms"] {
        assert!(first.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn poison_fails_with_witness() {
    let o = pbei(&[
        "verify",
        "--poison",
        "--checks",
        "HP-CLOSED",
        "--nmin",
        "4",
        "--nmax",
        "4",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
    assert!(stdout(&o).contains("coefficient of t^4"));
}
