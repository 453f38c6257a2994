use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn simdim(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_simdim")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let o = simdim(args);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

fn code(args: &[&str]) -> i32 {
    simdim(args).status.code().expect("exit code")
}

#[test]
fn dim_of_one_member() {
    assert_eq!(ok(&["dim", &fixture("fig1.fam"), "--graph", "G3"]), "dim 1\nwitness v1\n");
    assert_eq!(ok(&["dim", &fixture("k5.fam")]).lines().next(), Some("dim 4"));
}

#[test]
fn sdim_and_bounds() {
    let out = ok(&["sdim", &fixture("fig1.fam")]);
    assert!(out.starts_with("sd 2\nwitness v1 v3\n"), "{out}");
    let out = ok(&["sdim", &fixture("fig2.fam"), "--bounds"]);
    for line in ["sd 3", "lower 2", "upper 3"] {
        assert!(out.lines().any(|l| l == line), "{out}");
    }
}

#[test]
fn json_output_is_one_document() {
    let doc: Value = serde_json::from_str(&ok(&["--format", "json", "sdim", &fixture("fig1.fam")])).unwrap();
    assert_eq!(doc["sd"], 2);
    assert_eq!(doc["witness"], serde_json::json!(["v1", "v3"]));
    let doc: Value = serde_json::from_str(&ok(&[
        "--format",
        "json",
        "verify",
        "gb",
        &fixture("fig3.fam"),
        "--basis",
        "v1,v5",
        "--samples",
        "20",
    ]))
    .unwrap();
    assert_eq!(doc["verdict"], "holds");
}

#[test]
fn tree_commands() {
    assert!(ok(&["tree", "dim", &fixture("doublestar.fam")]).starts_with("dim 4\n"));
    let out = ok(&["tree", "exchange", &fixture("doublestar.fam"), "--add", "x1,y1", "--remove", "x,y"]);
    assert_eq!(out, "dim_before 4\ndim_after 2\ndelta -2\n");
    assert!(ok(&["tree", "bound", &fixture("fig4.fam")]).starts_with("bound 3\n"));
    assert!(ok(&["tree", "classify", &fixture("doublestar.fam")]).contains("x"));
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["dim", &fixture("fig1.fam")]), 2);
    assert_eq!(code(&["dim", &fixture("fig1.fam"), "--graph", "nope"]), 2);
    assert_eq!(code(&["dim", &fixture("disconnected.fam")]), 3);
    assert_eq!(code(&["dim", &fixture("missing.fam")]), 3);
    assert_eq!(code(&["gen", "cycles", "--n", "5"]), 2);
    assert_eq!(code(&["verify", "nonsense", &fixture("fig1.fam")]), 2);
    assert_eq!(code(&["tree", "dim", &fixture("k5.fam")]), 3);
    let invalid = ["tree", "exchange", &fixture("doublestar.fam"), "--add", "x1,x2", "--remove", "x,y"];
    assert_eq!(code(&invalid), 1);
    assert_eq!(code(&["verify", "twins", &fixture("fig2.fam")]), 0);
}

#[test]
fn census_line() {
    let out = ok(&["gen", "gb", "--graph", &fixture("fig3.fam"), "--basis", "v1,v5", "--census", "-"]);
    assert_eq!(out, "connected=1344 paths=48 basis_holds=1296\n");
}

#[test]
fn verify_gb_holds() {
    let out = ok(&["verify", "gb", &fixture("fig3.fam"), "--basis", "v1,v5", "--samples", "100", "--seed", "7"]);
    assert!(out.starts_with("gb: holds"), "{out}");
}

#[test]
fn verify_fixtures() {
    for (id, file) in [
        ("twins", "three_stars.fam"),
        ("sandwich", "fig1.fam"),
        ("diameter", "fig2.fam"),
        ("common-path", "complete_star_4_3.fam"),
        ("tree-bound", "fig4.fam"),
        ("tree-bound", "ratio_3_3.fam"),
        ("exchange-bound", "ratio_3_3.fam"),
    ] {
        let out = ok(&["verify", id, &fixture(file)]);
        assert!(out.contains(": holds"), "{id} {file}: {out}");
    }
}

#[test]
fn pipelines_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = |n: &str| dir.path().join(n).to_string_lossy().into_owned();

    ok(&["gen", "cycles", "--n", "6", "--out", &path("c6.fam")]);
    assert!(ok(&["sdim", &path("c6.fam")]).starts_with("sd 3\n"));
    assert!(ok(&["verify", "cycles", &path("c6.fam")]).contains(": holds"));

    ok(&["gen", "hsp", "--instance", &fixture("fig5.hsp"), "--out", &path("t.fam")]);
    assert!(ok(&["sdim", &path("t.fam")]).starts_with("sd 3\n"));
    assert!(ok(&["verify", "tree-bound", &path("t.fam")]).contains(": holds"));

    let c6 = "family c6\nvertices v1 v2 v3 v4 v5 v6\ngraph C\ne v1 v2\ne v2 v3\ne v3 v4\ne v4 v5\ne v5 v6\ne v6 v1\nendgraph\nendfamily\n";
    std::fs::write(path("cycle.fam"), c6).unwrap();
    ok(&[
        "gen",
        "gb",
        "--graph",
        &path("cycle.fam"),
        "--basis",
        "v1,v2",
        "--connected-only",
        "--census",
        &path("census.txt"),
        "--out",
        &path("gb.fam"),
    ]);
    assert_eq!(std::fs::read_to_string(path("census.txt")).unwrap(), "connected=48 paths=24 basis_holds=24\n");
    assert!(ok(&["sdim", &path("gb.fam")]).starts_with("sd 2\n"));
}

#[test]
fn stdin_is_accepted() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_simdim"))
        .args(["sdim", "-"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    use std::io::Write;
    child.stdin.take().unwrap().write_all(std::fs::read(fixture("fig2.fam")).unwrap().as_slice()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("sd 3\n"));
}

#[test]
fn runs_are_reproducible() {
    let args = ["--seed", "3", "gen", "gb", "--graph", &fixture("fig3.fam"), "--basis", "v1,v5", "--limit", "40"];
    let a = simdim(&args);
    let b = simdim(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stderr, b.stderr);
    let other = simdim(&["--seed", "4", "gen", "gb", "--graph", &fixture("fig3.fam"), "--basis", "v1,v5", "--limit", "40"]);
    assert_ne!(a.stdout, other.stdout);

    let v = ["--seed", "9", "verify", "gb", &fixture("fig3.fam"), "--basis", "v1,v5", "--samples", "30"];
    assert_eq!(simdim(&v).stdout, simdim(&v).stdout);
}
