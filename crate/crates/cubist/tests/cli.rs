//! Golden tests against the built binary.

use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("tests/data");
    p.push(name);
    p.to_str().unwrap().to_string()
}

fn cubist(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cubist")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = cubist(args);
    assert!(
        out.status.success(),
        "cubist {:?} failed:\n{}",
        args,
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn lines(args: &[&str]) -> Vec<String> {
    stdout(args).lines().map(|l| l.to_string()).collect()
}

#[test]
fn cubulate_tripod() {
    let out = lines(&["cubulate", "--in", &data("tripod.json")]);
    assert_eq!(out[0], "4 vertices, 3 edges, dimension 1");
    let mut vs = out[1..].to_vec();
    vs.sort();
    assert_eq!(vs, ["011", "101", "110", "111"]);
}

#[test]
fn cubulate_graph_input() {
    let out = lines(&["cubulate", "--in", &data("cube3.txt")]);
    assert_eq!(out[0], "8 vertices, 12 edges, dimension 3");
}

#[test]
fn cubulate_json_format() {
    let out = stdout(&["cubulate", "--in", &data("tripod.json"), "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["vertices"].as_array().unwrap().len(), 4);
    assert_eq!(v["edges"].as_array().unwrap().len(), 3);
}

#[test]
fn validate_and_dimension() {
    assert_eq!(stdout(&["validate", "--in", &data("square.json")]), "valid: 2 walls\n");
    assert_eq!(stdout(&["dimension", "--in", &data("grid34.json")]).trim(), "2");
    assert_eq!(stdout(&["dimension", "--in", &data("tripod.json")]).trim(), "1");
}

#[test]
fn decompose_grid() {
    let out = lines(&["decompose", "--in", &data("grid34.json")]);
    let mut comps = out.clone();
    comps.sort();
    assert_eq!(comps, ["x1 x2", "y1 y2 y3"]);
}

#[test]
fn interval_and_endpoints() {
    let mut iv = lines(&["interval", "--in", &data("tripod.json"), "--x", "011", "--y", "101"]);
    iv.sort();
    assert_eq!(iv, ["011", "101", "111"]);

    let out = lines(&["endpoints", "--in", &data("grid34.json"), "--x", "00000", "--y", "11111"]);
    assert_eq!(out[0], "4 endpoints (2^2)");
    let mut eps = out[1..].to_vec();
    eps.sort();
    assert_eq!(eps, ["00000", "00111", "11000", "11111"]);
}

#[test]
fn embed_reports_two_chains() {
    let out = stdout(&["embed", "--in", &data("grid34.json"), "--x", "00000", "--y", "11111"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["chains"], 2);
    assert_eq!(v["coordinates"].as_object().unwrap().len(), 12);
}

#[test]
fn helly_vertex_and_empty_pair() {
    let out = stdout(&["helly", "--in", &data("square.json"), "--halfspaces", "w0+ w1+"]);
    assert_eq!(out.trim(), "vertex 11");
    let out = stdout(&["helly", "--in", &data("square.json"), "--halfspaces", "w0+ w0-"]);
    assert_eq!(out.trim(), "empty pair w0+ w0-");
}

#[test]
fn lift_halfspace_of_square() {
    let out = lines(&["lift", "--in", &data("square.json"), "--set", "w0+"]);
    assert_eq!(out[0], "kept walls: w1");
    let mut vs = out[1..].to_vec();
    vs.sort();
    assert_eq!(vs, ["10", "11"]);
}

#[test]
fn measure_interval_of_uniform_leg_measure() {
    let out = lines(&[
        "measure-interval",
        "--in",
        &data("tripod.json"),
        "--measure",
        &data("leg_measure.json"),
    ]);
    assert_eq!(out, ["111"]);
}

#[test]
fn median_of_grid_corners() {
    let out = stdout(&[
        "median", "--in", &data("grid34.json"),
        "--x", "00000", "--y", "11111", "--z", "00111",
    ]);
    assert_eq!(out.trim(), "00111");
}

#[test]
fn restrict_and_product() {
    let out = stdout(&["restrict", "--in", &data("grid34.json"), "--keep", "0 1"]);
    let json_end = out.rfind('}').unwrap() + 1;
    let v: serde_json::Value = serde_json::from_str(&out[..json_end]).unwrap();
    assert_eq!(v["walls"], 2);
    let mut pts: Vec<&str> = out[json_end..].split_whitespace().collect();
    pts.sort();
    assert_eq!(pts, ["00", "10", "11"]);

    let out = stdout(&["product", "--in1", &data("square.json"), "--in2", &data("square.json")]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["walls"], 4);
}

#[test]
fn closure_and_orbit() {
    let out = lines(&["closure", "--gens", &data("g.txt"), "--dim", "2"]);
    assert_eq!(out[0], "order 4");
    let out = lines(&["orbit", "--gens", &data("g.txt"), "--dim", "2", "--point", "00"]);
    let mut pts = out.clone();
    pts.sort();
    assert_eq!(pts, ["00", "01", "10", "11"]);
}

#[test]
fn theorem_and_recipe_check() {
    let out = lines(&["theorem-check", "--gens", &data("g.txt"), "--dim", "2"]);
    assert_eq!(out[0], "orbit sizes: 4");
    assert_eq!(out[1], "witness orbit of size 4 = 2^2:");

    let out = stdout(&["recipe-check", "--gens", &data("g.txt"), "--dim", "2"]);
    assert!(out.contains("group order: 4"));
    assert!(out.contains("kernel order: 2"));
    assert!(out.contains("coset_reps_exist: false"));
    assert!(out.contains("orbit of O: 4"));
    assert!(out.contains("kernel orbit of O: 2"));
}

#[test]
fn zd_subcommands() {
    let out = stdout(&["zd", "member", "--point", "(3, -inf)", "--coord", "1", "--threshold", "2"]);
    assert_eq!(out.trim(), "true");
    let out = stdout(&[
        "zd", "median", "--x", "(0, 0)", "--y", "(5, +inf)", "--z", "(2, -3)",
    ]);
    assert_eq!(out.trim(), "(2, 0)");
    let out = stdout(&["zd", "interval", "--x", "(0, 0)", "--y", "(2, 3)"]);
    assert!(out.contains("lattice points: 12"));
    let out = stdout(&["zd", "orbit", "--gens", &data("dinfty2.txt"), "--point", "(+inf, +inf)"]);
    assert!(out.contains("finite orbit of size 4"));
    let out = stdout(&["zd", "dinfty-orbit", "--n", "3"]);
    assert!(out.contains("finite orbit of size 8"));
}

#[test]
fn dot_output_is_stable() {
    let a = stdout(&["dot", "--in", &data("tripod.json")]);
    let b = stdout(&["dot", "--in", &data("tripod.json")]);
    assert_eq!(a, b);
    assert!(a.starts_with("graph complex {"));
    assert!(a.contains("\"111\""));
    assert!(a.contains("[label=\"w0\"]"));
    let c = stdout(&["cubulate", "--in", &data("tripod.json"), "--format", "dot"]);
    assert_eq!(a, c);
}

#[test]
fn corpus_runs() {
    let out = stdout(&["corpus"]);
    assert!(out.lines().filter(|l| l.starts_with("pass:")).count() >= 4);
}

#[test]
fn exit_codes() {
    // domain error: inconsistent vertex
    let out = cubist(&[
        "median", "--in", &data("grid34.json"),
        "--x", "01000", "--y", "00000", "--z", "00000",
    ]);
    assert_eq!(out.status.code(), Some(1));
    // usage error
    let out = cubist(&["median", "--in", &data("grid34.json")]);
    assert_eq!(out.status.code(), Some(2));
    let out = cubist(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));
}
