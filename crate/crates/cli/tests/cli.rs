use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn orrforge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orrforge"))
        .args(args)
        .env_remove("ORRFORGE_TIMEOUT")
        .output()
        .expect("binary runs")
}

fn catalog(key: &str) -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(format!("../core/catalog/{key}.pres"));
    p.to_str().unwrap().to_string()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn path(dir: &Path, name: &str) -> String {
    dir.join(name).to_str().unwrap().to_string()
}

#[test]
fn q8_is_an_exception() {
    let o = orrforge(&["classify", "--pres", &catalog("q8")]);
    assert_eq!(o.status.code(), Some(1));
    let row = stdout(&o);
    let cols: Vec<&str> = row.trim().split('\t').collect();
    assert_eq!(&cols[1..4], ["8", "Exception", "Q8"]);
}

#[test]
fn deep_classification_writes_a_certificate() {
    let dir = tempfile::tempdir().unwrap();
    let cert = path(dir.path(), "cert.json");
    let o = orrforge(&["classify", "--pres", &catalog("c4xc2"), "--deep", "--witness-out", &cert]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&cert).unwrap()).unwrap();
    assert!(!v["certificates"].as_array().unwrap().is_empty());
}

#[test]
fn construct_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let (set, grp, edges) = (path(dir.path(), "s"), path(dir.path(), "g.grp"), path(dir.path(), "e"));
    let o = orrforge(&[
        "orr", "construct", "--family", "abelian", "--moduli", "8,4", "-o", &set, "--group-out", &grp,
        "--graph-out", &edges,
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("\tORR"));
    let v = orrforge(&["verify", "--group", &grp, "--set", &set]);
    assert_eq!((v.status.code(), stdout(&v).trim()), (Some(0), "TRIVIAL"));
    let v = orrforge(&["verify", "--graph", &edges]);
    assert_eq!(v.status.code(), Some(0));
}

#[test]
fn verify_reports_a_witness() {
    let dir = tempfile::tempdir().unwrap();
    let edges = path(dir.path(), "cycle");
    std::fs::write(&edges, "4 4\n0 1\n1 2\n2 3\n3 0\n").unwrap();
    // The directed 4-cycle has a trivial stabiliser; its underlying undirected cycle does not.
    assert_eq!(orrforge(&["verify", "--graph", &edges]).status.code(), Some(0));
    std::fs::write(&edges, "4 8\n0 1\n1 0\n1 2\n2 1\n2 3\n3 2\n3 0\n0 3\n").unwrap();
    let o = orrforge(&["verify", "--graph", &edges]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("(1 3)"));
}

#[test]
fn group_build_and_info() {
    let dir = tempfile::tempdir().unwrap();
    let grp = path(dir.path(), "d4.grp");
    assert_eq!(orrforge(&["group", "build", "--pres", &catalog("d4"), "-o", &grp]).status.code(), Some(0));
    let o = orrforge(&["--json", "group", "info", "--group", &grp]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["order"], 8);
    assert_eq!(v["generalised_dihedral"], true);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(orrforge(&["classify"]).status.code(), Some(2));
    let o = orrforge(&["classify", "--pres", "/nonexistent.pres"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
    let o = orrforge(&["orr", "construct", "--family", "bi"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn timeouts_exit_three() {
    let o = Command::new(env!("CARGO_BIN_EXE_orrforge"))
        .args(["classify", "--pres", &catalog("q8xc2")])
        .env("ORRFORGE_TIMEOUT", "0")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("Unresolved"));
}

#[test]
fn reproduce_is_deterministic() {
    let a = orrforge(&["--json", "reproduce", "--suite", "theorem1", "--tier", "1"]);
    assert_eq!(a.status.code(), Some(0), "{}", stdout(&a));
    let b = orrforge(&["--json", "reproduce", "--suite", "theorem1", "--tier", "1"]);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["verdicts"].as_array().unwrap().len(), 11);
}
