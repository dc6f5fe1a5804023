use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn data(name: &str) -> PathBuf {
    root().join("data").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pathhom")).args(args).env_remove("PATHHOM_BUDGET").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn validate(schema: &str, doc: &str) {
    let schema: Value =
        serde_json::from_str(&std::fs::read_to_string(root().join("docs/schemas").join(schema)).unwrap()).unwrap();
    let doc: Value = serde_json::from_str(doc).expect("output is JSON");
    let v = jsonschema::validator_for(&schema).expect("schema compiles");
    let errors: Vec<String> = v.iter_errors(&doc).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{schema}: {errors:?}");
}

fn p(name: &str) -> String {
    data(name).to_string_lossy().into_owned()
}

#[test]
fn homology_of_a_cycle() {
    let o = run(&["homology", &p("three_cycle.dg")]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("H_0 = Z, H_1 = Z"));
}

#[test]
fn homology_of_nine_vertex_digraph_is_untruncated() {
    let o = run(&["homology", &p("nine_vertex.dg"), "--top-dim", "3", "--cohomology"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("H_3 = "));
    assert!(!out.contains("truncated"));
    assert!(!out.contains("H_4"));
}

#[test]
fn point_has_only_degree_zero() {
    let o = run(&["homology", &p("point.dg")]);
    assert_eq!(stdout(&o), "H_0 = Z\n");
}

#[test]
fn cohomology_alias_and_json() {
    let o = run(&["cohomology", &p("three_cycle.dg"), "--format", "json", "--ring", "Zp:3"]);
    assert_eq!(code(&o), 0);
    validate("homology.schema.json", &stdout(&o));
    assert!(stdout(&o).contains("\"Cohomology\""));
}

#[test]
fn realize_summaries() {
    for (file, cells) in [("handle.json", "cells: 4, 6, 2"), ("edge.dg", "cells: 2, 1"), ("three_cycle.dg", "cells: 3, 3")] {
        let o = run(&["realize", &p(file)]);
        assert_eq!(code(&o), 0);
        assert!(stdout(&o).starts_with(cells), "{file}: {}", stdout(&o));
    }
}

#[test]
fn realize_json_validates_and_is_stable() {
    let a = run(&["realize", &p("handle.json"), "--format", "json", "--coords"]);
    let b = run(&["realize", &p("handle.json"), "--format", "json", "--coords"]);
    assert_eq!(a.stdout, b.stdout);
    validate("cell_complex.schema.json", &stdout(&a));
    let cc = pathhom::io::parse_cell_complex(&stdout(&a)).unwrap();
    assert_eq!(pathhom::io::emit_cell_complex(&cc, true), stdout(&a));
}

#[test]
fn cubical_tetrahedron() {
    let o = run(&["cubical", &p("tetrahedron_boundary.json")]);
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.starts_with("v ")).count(), 14);
    assert_eq!(text.lines().filter(|l| l.starts_with("e ")).count(), 24);
    let g = pathhom::io::parse_digraph(&text).unwrap();
    assert_eq!(pathhom::io::emit_digraph(&g), text);
}

#[test]
fn join_and_product_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let b = dir.path().join("b.dg");
    std::fs::write(&b, "v b\n").unwrap();
    let out = dir.path().join("ab.json");
    let o = run(&["join", &p("point.dg"), &b.to_string_lossy(), "--out", &out.to_string_lossy()]);
    assert_eq!(code(&o), 0);
    let text = std::fs::read_to_string(&out).unwrap();
    validate("path_complex.schema.json", &text);
    let pc = pathhom::io::parse_path_complex(&text).unwrap();
    assert_eq!(pc.counts(), vec![2, 1]);
    assert_eq!(pathhom::io::emit_path_complex(&pc), text);

    let o = run(&["product", &p("edge.dg"), &p("edge2.dg")]);
    let pc = pathhom::io::parse_path_complex(&stdout(&o)).unwrap();
    assert_eq!(pc.paths(2).len(), 2);
}

#[test]
fn join_with_shared_labels_exits_2() {
    let o = run(&["join", &p("point.dg"), &p("point.dg")]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("not disjoint"));
}

#[test]
fn parse_errors_exit_2_with_position() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("bad.dg");
    std::fs::write(&f, "v a\ne a b\n").unwrap();
    let o = run(&["homology", &f.to_string_lossy()]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2, column 5"));
}

#[test]
fn budget_exit_3() {
    let o = run(&["hochschild", &p("triangle_boundary.json"), "--ring", "Q", "--budget", "100"]);
    assert_eq!(code(&o), 3);
    let o = Command::new(env!("CARGO_BIN_EXE_pathhom"))
        .args(["hochschild", &p("triangle_boundary.json"), "--ring", "Q"])
        .env("PATHHOM_BUDGET", "100")
        .output()
        .unwrap();
    assert_eq!(code(&o), 3);
    let o = run(&["homology", &p("nine_vertex.dg"), "--budget", "10"]);
    assert_eq!(code(&o), 3);
}

#[test]
fn kunneth_product_check_on_two_cycles() {
    let dir = tempfile::tempdir().unwrap();
    let y = dir.path().join("y.dg");
    std::fs::write(&y, "v x\nv y\nv z\ne x y\ne y z\ne z x\n").unwrap();
    let o = run(&["check", "kunneth-product", &p("three_cycle.dg"), &y.to_string_lossy()]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("deg 0: Z | Z") && out.contains("deg 1: Z^2 | Z^2") && out.contains("deg 2: Z | Z"));
    let o = run(&["check", "kunneth-product", &p("three_cycle.dg"), &y.to_string_lossy(), "--format", "json"]);
    validate("report.schema.json", &stdout(&o));
}

#[test]
fn realization_suite_check() {
    let o = run(&["check", "realization", "--seed", "7"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).starts_with("200 instances, 0 failed"));
    let o = run(&["check", "realization", "--count", "5", "--format", "json"]);
    validate("suite.schema.json", &stdout(&o));
}

#[test]
fn kunneth_join_random_suite() {
    let o = run(&["check", "kunneth-join", "--ring", "Zp:2"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
}

#[test]
fn hochschild_check_exit_status_reflects_the_hh_lower_mismatch() {
    // HH_0 of the edge algebra is 3-dimensional, so the homology comparison
    // disagrees while the cohomology side agrees.
    let o = run(&["check", "hochschild", &p("edge_simplex.json"), "--ring", "Q"]);
    assert_eq!(code(&o), 1);
    let out = stdout(&o);
    assert!(out.contains("[ERR] simplicial H_ vs HH_ deg 0: Q | Q^3"));
    assert!(out.contains("[ok ] simplicial H^ vs HH^ deg 0: Q | Q"));
    let o = run(&["check", "hochschild", &p("rp2.json")]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
}

#[test]
fn hochschild_check_rejects_path_complexes() {
    let o = run(&["check", "hochschild", &p("handle.json")]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("unsupported"));
}

#[test]
fn simplicial_inputs_validate() {
    for f in ["point_simplex.json", "edge_simplex.json", "triangle_boundary.json", "tetrahedron_boundary.json", "rp2.json"] {
        validate("simplicial.schema.json", &std::fs::read_to_string(data(f)).unwrap());
    }
    validate("path_complex.schema.json", &std::fs::read_to_string(data("handle.json")).unwrap());
}

#[test]
fn bad_ring_is_a_usage_error() {
    let o = run(&["homology", &p("point.dg"), "--ring", "Zp:4"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn hochschild_command_prints_both_sides() {
    let o = run(&["hochschild", &p("triangle_boundary.json"), "--ring", "Q"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("HH^0 = Q, HH^1 = Q, HH^2 = 0"));
    let o = run(&["hochschild", &p("edge_simplex.json"), "--ring", "Q", "--format", "json"]);
    validate("homology.schema.json", &stdout(&o));
    let o = run(&["hochschild", &p("edge_simplex.json")]);
    assert_eq!(code(&o), 2);
}
