use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_taitmorse")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json output")
}

#[test]
fn perfect_count_of_trefoil_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("trefoil.pd");
    fs::write(&path, "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)\n").unwrap();
    let v = json(&["count", "--perfect", path.to_str().unwrap()]);
    assert_eq!(v["perfect"]["value"], 18);
    assert_eq!(v["diagram"], "trefoil");
    assert!(v.get("all").is_none());
}

#[test]
fn count_with_oracle() {
    let v = json(&["count", "--oracle", "5_2"]);
    assert_eq!(v["oracle_agreement"], true);
    assert_eq!(v["perfect"]["provenance"], "both_agree");
}

#[test]
fn figure_eight_kauffman_states_form_a_path() {
    let v = json(&["moves", "--population", "kauffman", "--mark", "1", "fig8", "--connectivity"]);
    assert_eq!(v["connected"], true);
    assert_eq!(v["nodes"], 5);
    assert_eq!(v["path_graph"], true);
}

#[test]
fn move_graph_exports() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("g.dot");
    let js = dir.path().join("g.json");
    let v = json(&[
        "moves",
        "3_1",
        "--kinds",
        "clock,click-loop,click-path",
        "--connectivity",
        "--dot",
        dot.to_str().unwrap(),
        "--json",
        js.to_str().unwrap(),
    ]);
    assert_eq!(v["connected"], true);
    assert!(fs::read_to_string(&dot).unwrap().contains("graph"));
    let g: Value = serde_json::from_str(&fs::read_to_string(&js).unwrap()).unwrap();
    assert!(g.is_object());
}

#[test]
fn garbage_input_exits_with_usage_code() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("garbage.txt");
    fs::write(&path, "this is not a knot").unwrap();
    assert_eq!(run(&["parse", path.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(run(&["parse", "no_such_knot"]).status.code(), Some(2));
    assert_eq!(run(&["states", "3_1", "--filter", "bogus"]).status.code(), Some(2));
}

#[test]
fn face_cap_exits_with_resource_code() {
    let out = Command::new(env!("CARGO_BIN_EXE_taitmorse"))
        .args(["complex", "6_1", "--homology"])
        .env("TAITMORSE_FACE_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn states_and_complexes() {
    assert_eq!(json(&["states", "--filter", "kauffman", "--count", "3_1"])["count"], 3);
    assert_eq!(json(&["states", "--filter", "perfect-dmf", "--count", "3_1"])["count"], 18);
    let v = json(&["complex", "4_1", "--kind", "matching", "--homology"]);
    assert_eq!(v["ranks"]["2"], 5);
    assert_eq!(v["ranks"]["3"], 1);
    let csv = run(&["complex", "3_1", "--kind", "morse", "--csv"]);
    assert!(String::from_utf8(csv.stdout).unwrap().starts_with("degree,betti,torsion\n"));
}

#[test]
fn swapping_colours_keeps_tree_count() {
    let a = json(&["info", "6_2"]);
    let b = json(&["--swap-colours", "info", "6_2"]);
    assert_eq!(a["spanning_trees"]["value"], b["spanning_trees"]["value"]);
    assert_eq!(a["black_regions"], b["white_regions"]);
}

#[test]
fn table_and_selftest() {
    let rows = json(&["--threads", "2", "table1", "--max-crossings", "4"]);
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0]["knot"], "3_1");
    assert_eq!(rows[1]["clock_click_loop"]["components"], 9);
    let out = run(&["selftest", "--criterion", "1", "--criterion", "2", "--pretty"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.contains("PASS")).count(), 2);
}
