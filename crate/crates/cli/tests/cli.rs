//! End-to-end tests of the binary: exit codes, report shape, and schema
//! validation of everything printed to standard output.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cyclespace"))
        .args(args)
        .output()
        .expect("spawn binary")
}

fn schema_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../schemas")
}

/// Validate `instance` against `schemas/<name>.json`, resolving the shared
/// definitions file.
fn validate(name: &str, instance: &Value) {
    let read = |f: &str| -> Value {
        let text = std::fs::read_to_string(schema_dir().join(f)).expect("read schema");
        serde_json::from_str(&text).expect("schema is valid JSON")
    };
    let common = read("common.json");
    let schema = read(&format!("{name}.json"));
    let registry = jsonschema::Registry::new()
        .add("https://example.invalid/cyclespace/common.json", common)
        .expect("register common definitions")
        .prepare()
        .expect("prepare registry");
    let validator = jsonschema::options()
        .with_registry(&registry)
        .build(&schema)
        .expect("schema compiles");
    if let Err(e) = validator.validate(instance) {
        panic!("schema {name} violated: {e}");
    }
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {}",
            String::from_utf8_lossy(&out.stdout)
        )
    })
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn tmpdir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("cyclespace-test-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn basis_reports_dimension_and_validates() {
    let out = run(&["basis", "corpus:dodecahedron"]);
    assert_eq!(code(&out), 0);
    let v = json_of(&out);
    validate("basis", &v);
    assert_eq!(v["dimension"], 11);
    assert_eq!(v["graph"]["vertices"], 20);
    assert_eq!(v["spanning_tree_edges"].as_array().unwrap().len(), 19);

    let out = run(&["basis", "corpus:triangle"]);
    assert_eq!(code(&out), 0);
    let v = json_of(&out);
    validate("basis", &v);
    assert_eq!(v["dimension"], 1);
}

#[test]
fn basis_accepts_graph6_files() {
    let dir = tmpdir("g6");
    let path = dir.join("k4.g6");
    std::fs::write(&path, "C~\n").unwrap();
    let out = run(&["basis", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let v = json_of(&out);
    validate("basis", &v);
    assert_eq!(v["graph"]["vertices"], 4);
    assert_eq!(v["graph"]["edges"], 6);
    assert_eq!(v["dimension"], 3);
}

#[test]
fn malformed_inputs_exit_2() {
    let dir = tmpdir("bad");
    let path = dir.join("loop.edges");
    std::fs::write(&path, "0 1\n1 1\n").unwrap();
    let out = run(&["basis", path.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());

    let out = run(&["basis", "/nonexistent/graph.edges"]);
    assert_eq!(code(&out), 2);

    let out = run(&["basis", "corpus:nosuch"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn grinberg_herschel_certifies_infeasible() {
    let out = run(&["grinberg", "corpus:herschel"]);
    assert_eq!(code(&out), 1);
    let v = json_of(&out);
    validate("grinberg", &v);
    assert_eq!(v["verdict"], "certified-infeasible");
    assert_eq!(v["certificate"]["modulus"], 2);
    assert_eq!(v["certificate"]["form"], "inside");
    assert_eq!(v["certificate"]["replayed"], true);
    assert!(v["solutions"].as_array().unwrap().is_empty());
}

#[test]
fn grinberg_grinberg_graph_mod_three_certificate() {
    let out = run(&["grinberg", "corpus:grinberg-graph"]);
    assert_eq!(code(&out), 1);
    let v = json_of(&out);
    validate("grinberg", &v);
    assert_eq!(v["certificate"]["modulus"], 3);
    assert_eq!(v["certificate"]["form"], "full");
    assert_eq!(v["certificate"]["replayed"], true);
}

#[test]
fn grinberg_dodecahedron_solution_is_forced() {
    let out = run(&["grinberg", "corpus:dodecahedron"]);
    assert_eq!(code(&out), 0);
    let v = json_of(&out);
    validate("grinberg", &v);
    assert_eq!(v["verdict"], "solutions-exist");
    let sols = v["solutions"].as_array().unwrap();
    assert_eq!(sols.len(), 1);
    assert_eq!(sols[0]["counts"][0]["degree"], 5);
    assert_eq!(sols[0]["counts"][0]["count"], 6);
}

#[test]
fn grinberg_partition_mode() {
    // triangle: either single face inside satisfies both forms
    let out = run(&["grinberg", "corpus:triangle", "--inside", "0"]);
    assert_eq!(code(&out), 0);
    let v = json_of(&out);
    validate("grinberg", &v);
    assert_eq!(v["mode"], "partition");
    assert_eq!(v["evaluation"]["satisfied_full"], true);
    assert_eq!(v["evaluation"]["satisfied_inside"], true);

    // both faces inside fails the inside form
    let out = run(&["grinberg", "corpus:triangle", "--inside", "0,1"]);
    assert_eq!(code(&out), 1);
    let v = json_of(&out);
    validate("grinberg", &v);
    assert_eq!(v["evaluation"]["satisfied_inside"], false);

    // out-of-range face index
    let out = run(&["grinberg", "corpus:triangle", "--inside", "7"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn grinberg_requires_an_embedding() {
    let out = run(&["grinberg", "corpus:petersen"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn plane_chorded_square_single_ve_plane() {
    let out = run(&["plane", "corpus:chorded-square"]);
    assert_eq!(code(&out), 0);
    let v = json_of(&out);
    validate("plane", &v);
    let planes = v["planes"].as_array().unwrap();
    assert_eq!(planes.len(), 1);
    assert_eq!(planes[0]["pair_classes"][0]["class"], "VE");
    assert_eq!(planes[0]["audit"]["identity_two_term"]["status"], "pass");
    assert_eq!(planes[0]["audit"]["size_identity"]["status"], "pass");
    assert_eq!(v["budget_status"], "complete");
}

#[test]
fn plane_k24_v0_counterexample() {
    let out = run(&["plane", "corpus:k24"]);
    assert_eq!(code(&out), 1);
    let v = json_of(&out);
    validate("plane", &v);
    assert!(v["planes"].as_array().unwrap().is_empty());
    let cex = v["counterexamples"].as_array().unwrap();
    assert_eq!(cex.len(), 1);
    assert_eq!(cex[0]["pair_classes"][0]["class"], "V0");
    assert_eq!(cex[0]["why_not_hamiltonian"], "sum-not-elementary");
}

#[test]
fn plane_petersen_exhaustively_empty() {
    let out = run(&["plane", "corpus:petersen"]);
    assert_eq!(code(&out), 1);
    let v = json_of(&out);
    validate("plane", &v);
    assert_eq!(v["basis_kind"], "fundamental");
    assert!(v["planes"].as_array().unwrap().is_empty());
    assert_eq!(v["budget_status"], "complete");
}

#[test]
fn plane_truncation_exits_3() {
    let out = run(&["plane", "corpus:dodecahedron", "--max-subsets", "2"]);
    assert_eq!(code(&out), 3);
    let v = json_of(&out);
    validate("plane", &v);
    assert_eq!(v["budget_status"], "truncated");
}

#[test]
fn plane_workers_are_deterministic() {
    let seq = run(&["plane", "corpus:dodecahedron"]);
    let par = run(&["plane", "corpus:dodecahedron", "--workers", "4"]);
    assert_eq!(code(&seq), 0);
    assert_eq!(code(&par), 0);
    let sv = json_of(&seq);
    let pv = json_of(&par);
    validate("plane", &pv);
    assert_eq!(sv["planes"], pv["planes"]);
    assert_eq!(sv["counterexamples"], pv["counterexamples"]);
}

#[test]
fn oracle_verdicts_and_exit_codes() {
    let out = run(&["oracle", "corpus:dodecahedron"]);
    assert_eq!(code(&out), 0);
    let v = json_of(&out);
    validate("oracle", &v);
    assert_eq!(v["verdict"], "hamiltonian");
    assert_eq!(v["cycle"]["vertices"].as_array().unwrap().len(), 20);

    let out = run(&["oracle", "corpus:herschel"]);
    assert_eq!(code(&out), 1);
    let v = json_of(&out);
    validate("oracle", &v);
    assert_eq!(v["verdict"], "non-hamiltonian");

    let out = run(&["oracle", "corpus:petersen", "--max-subsets", "2"]);
    assert_eq!(code(&out), 3);
    let v = json_of(&out);
    validate("oracle", &v);
    assert_eq!(v["verdict"], "unknown");
}

#[test]
fn corpus_list_names_everything() {
    let out = run(&["corpus", "list"]);
    assert_eq!(code(&out), 0);
    let v = json_of(&out);
    validate("corpus-list", &v);
    let names: Vec<&str> = v["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["name"].as_str().unwrap())
        .collect();
    for expected in [
        "triangle",
        "chorded-square",
        "k4",
        "k24",
        "prism",
        "herschel",
        "petersen",
        "dodecahedron",
        "grinberg-graph",
        "tutte",
    ] {
        assert!(names.contains(&expected), "missing {expected}");
    }
}

#[test]
fn corpus_emit_herschel_round_trips() {
    let dir = tmpdir("emit");
    let out = run(&["corpus", "emit", "herschel", "--dir", dir.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let v = json_of(&out);
    validate("corpus-emit", &v);
    assert_eq!(v["files"].as_array().unwrap().len(), 2);

    let edges = std::fs::read_to_string(dir.join("herschel.edges")).unwrap();
    let g = cyclespace::formats::parse_edge_list(&edges).unwrap();
    assert_eq!(g.vertex_count(), 11);
    assert_eq!(g.edge_count(), 18);
    let rot_text = std::fs::read_to_string(dir.join("herschel.rot")).unwrap();
    let rot = cyclespace::formats::parse_rotation(&rot_text, &g).unwrap();
    let trace = cyclespace::graph::trace_faces(&g, &rot);
    assert!(trace.euler_ok);
    assert_eq!(trace.face_count(), 9);

    let out = run(&["corpus", "emit", "nosuch", "--dir", dir.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
}
