use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;

use kgraph_tools::cli::{run, EXIT_FAIL, EXIT_INPUT, EXIT_PASS};

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name).display().to_string()
}

struct Outcome {
    code: i32,
    stdout: String,
    stderr: String,
}

fn kgraph(args: &[&str]) -> Outcome {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(std::iter::once("kgraph").chain(args.iter().copied()), &mut out, &mut err);
    Outcome { code, stdout: String::from_utf8(out).unwrap(), stderr: String::from_utf8(err).unwrap() }
}

fn json_records(o: &Outcome) -> Vec<Value> {
    o.stdout.lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

fn decision<'a>(rs: &'a [Value], name: &str) -> &'a Value {
    rs.iter().find(|r| r["type"] == "decision" && r["decision"] == name).unwrap_or_else(|| panic!("no {name}"))
}

#[test]
fn validate_bflip() {
    let o = kgraph(&["validate", &fixture("bflip.kg"), "--json"]);
    assert_eq!(o.code, EXIT_PASS, "{}", o.stderr);
    let rs = json_records(&o);
    assert_eq!(rs[0]["format"], "kgraph-report");
    let g = decision(&rs, "graph");
    assert_eq!((g["valid"].clone(), g["vertices"].clone(), g["edges"].clone()), (true.into(), 2.into(), 4.into()));
    assert_eq!(rs.last().unwrap()["status"], "pass");
}

#[test]
fn validate_broken_cube_fails_with_a_full_report() {
    let o = kgraph(&["validate", &fixture("broken_cube.kg"), "--json"]);
    assert_eq!(o.code, EXIT_FAIL);
    let rs = json_records(&o);
    assert!(rs.iter().any(|r| r["type"] == "violation" && r["kind"] == "CubeInconsistent"));
    assert_eq!(decision(&rs, "graph")["valid"], false);
    assert_eq!(rs.last().unwrap()["type"], "summary");
}

#[test]
fn lmin_prints_the_extension() {
    let o = kgraph(&["lmin", &fixture("bflip.kg"), "--left", "e", "--right", "h"]);
    assert_eq!(o.code, EXIT_PASS);
    assert!(o.stdout.lines().any(|l| l == "lambda-min {(h,f)}"), "{}", o.stdout);
}

#[test]
fn paths_and_orbit_on_bflip() {
    let o = kgraph(&["paths", &fixture("bflip.kg"), "--json"]);
    let rs = json_records(&o);
    assert_eq!(decision(&rs, "paths")["count"], 2);
    let o = kgraph(&["orbit", &fixture("bflip.kg"), "--cycle", "e h f g", "--json"]);
    assert_eq!(decision(&json_records(&o), "orbit")["members"], 2);
}

#[test]
fn compare_multiplicities() {
    let o = kgraph(&["rep-compare", &fixture("bflip_x.rep"), &fixture("bflip_x2.rep"), "--json"]);
    assert_eq!(o.code, EXIT_FAIL);
    let v = decision(&json_records(&o), "equivalence").clone();
    assert_eq!(v["equivalent"], false);
    assert_eq!(v["reason"], "multiplicity");

    let o = kgraph(&["rep-compare", &fixture("bflip_x.rep"), &fixture("bflip_y.rep"), "--json"]);
    assert_eq!(o.code, EXIT_PASS, "{}", o.stdout);
    let rs = json_records(&o);
    let v = decision(&rs, "equivalence");
    assert_eq!((v["equivalent"].clone(), v["matched_orbits"].clone()), (true.into(), 1.into()));
    assert!(rs.iter().any(|r| r["type"] == "relation" && r["relation"] == "well-defined"));
}

#[test]
fn compare_different_graphs_is_an_input_error() {
    let o = kgraph(&["rep-compare", &fixture("bflip_x.rep"), &fixture("delta.rep")]);
    assert_eq!(o.code, EXIT_INPUT);
    assert!(o.stdout.is_empty());
    assert!(o.stderr.contains("different graphs"), "{}", o.stderr);
}

#[test]
fn rep_verify_and_decompose_pass_on_fixtures() {
    for rep in ["bflip_x.rep", "bflip_x2.rep", "delta.rep", "delta2.rep", "bflip_mono2.rep"] {
        let o = kgraph(&["rep-verify", &fixture(rep), "--window", "2,2", "--json"]);
        assert_eq!(o.code, EXIT_PASS, "{rep}: {}", o.stdout);
        let o = kgraph(&["rep-decompose", &fixture(rep), "--window", "2,2", "--json"]);
        assert_eq!(o.code, EXIT_PASS, "{rep}: {}", o.stdout);
    }
    // lazy images leave the window and may share a window key with other points
    let o = kgraph(&["rep-verify", &fixture("mono2_thue_morse.rep"), "--window", "2,2"]);
    assert_eq!(o.code, EXIT_PASS, "{}", o.stdout);
    let o = kgraph(&["rep-verify", &fixture("delta.rep"), "--json"]);
    let rs = json_records(&o);
    assert_eq!(decision(&rs, "monic")["monic"], true);
    assert_eq!(decision(&rs, "cyclic-vector")["cyclic"], true);
}

#[test]
fn decompose_thue_morse() {
    let o = kgraph(&["rep-decompose", &fixture("mono2_thue_morse.rep"), "--degrees", "1,1", "--json"]);
    assert_eq!(o.code, EXIT_PASS, "{}", o.stdout);
    let rs = json_records(&o);
    assert_eq!(decision(&rs, "slices")["count"], 3);
    assert_eq!(rs.iter().filter(|r| r["type"] == "item" && r["kind"] == "slice").count(), 3);
}

#[test]
fn input_errors_exit_two() {
    let missing = kgraph(&["validate", "/nonexistent/x.kg"]);
    assert_eq!(missing.code, EXIT_INPUT);
    assert!(missing.stderr.contains("x.kg"));
    let o = kgraph(&["rep-verify", &fixture("bflip_xy.rep")]);
    assert_eq!(o.code, EXIT_INPUT);
    assert!(o.stderr.contains("bflip_xy.rep:4:1:"), "{}", o.stderr);
    let o = kgraph(&["rep-verify", &fixture("bflip_x.rep"), "--window", "3"]);
    assert_eq!(o.code, EXIT_INPUT);
    assert!(o.stderr.contains("rank"), "{}", o.stderr);
    assert_eq!(kgraph(&["frobnicate"]).code, EXIT_INPUT);
    assert_eq!(kgraph(&["paths", &fixture("bflip.kg"), "--cycle-bound", "x"]).code, EXIT_INPUT);
    assert_eq!(kgraph(&["lmin", &fixture("bflip.kg"), "--left", "q", "--right", "h"]).code, EXIT_INPUT);
    assert_eq!(kgraph(&["paths", &fixture("broken_cube.kg")]).code, EXIT_INPUT);
}

#[test]
fn syntax_errors_are_positioned() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("bad.kg");
    fs::write(&p, "rank 2\nvertex o\nedge b color 1 from o to w\n").unwrap();
    let o = kgraph(&["validate", p.to_str().unwrap()]);
    assert_eq!(o.code, EXIT_INPUT);
    assert!(o.stderr.contains("bad.kg:3:26: unknown vertex `w`"), "{}", o.stderr);
}

#[test]
fn reports_are_byte_identical_across_runs() {
    for args in [
        vec!["rep-verify", "bflip_mono2.rep", "--sample", "7", "--json"],
        vec!["rep-compare", "bflip_x.rep", "bflip_y.rep"],
        vec!["rep-decompose", "mono2_thue_morse.rep", "--sample", "20", "--json"],
        vec!["validate", "broken_cube.kg", "--json"],
    ] {
        let args: Vec<String> =
            args.iter().map(|a| if a.contains('.') { fixture(a) } else { a.to_string() }).collect();
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let (a, b) = (kgraph(&args), kgraph(&args));
        assert_eq!(a.code, b.code);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn subsampling_is_seeded() {
    let o = kgraph(&["rep-verify", &fixture("bflip_mono2.rep"), "--sample", "5", "--json"]);
    assert_eq!(decision(&json_records(&o), "sample")["points"], 5);
    let o = kgraph(&["rep-verify", &fixture("bflip_mono2.rep"), "--json"]);
    assert_eq!(decision(&json_records(&o), "sample")["points"], 18);
}

fn binary() -> PathBuf {
    PathBuf::from(env!("CARGO_BIN_EXE_kgraph"))
}

#[test]
fn binary_exit_codes_and_streams() {
    let ok = Command::new(binary()).args(["validate", &fixture("delta.kg")]).output().unwrap();
    assert_eq!(ok.status.code(), Some(EXIT_PASS));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("valid=true"));
    assert!(ok.stderr.is_empty());

    let fail = Command::new(binary()).args(["rep-compare", &fixture("delta.rep"), &fixture("delta2.rep")]).output().unwrap();
    assert_eq!(fail.status.code(), Some(EXIT_FAIL));
    assert!(String::from_utf8_lossy(&fail.stdout).contains("reason=multiplicity"));

    let bad = Command::new(binary()).args(["validate", "/nonexistent.kg"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_INPUT));
    assert!(bad.stdout.is_empty());
    assert!(!bad.stderr.is_empty());

    let help = Command::new(binary()).arg("--help").output().unwrap();
    assert_eq!(help.status.code(), Some(EXIT_PASS));
    assert!(String::from_utf8_lossy(&help.stdout).contains("rep-decompose"));
}
