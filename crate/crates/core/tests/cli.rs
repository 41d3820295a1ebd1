mod common;

use std::process::{Command, Output};

use common::{data, fixture};
use serde_json::Value;
use weightcell::automaton::{equivalent, Automaton};

fn weightcell(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_weightcell"))
        .args(args)
        .env_remove("WEIGHTCELL_CAPS")
        .output()
        .unwrap()
}

fn path(name: &str) -> String {
    data(name).to_string_lossy().into_owned()
}

fn json_out(args: &[&str]) -> Value {
    let out = weightcell(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn minimal_fig1_is_canonical() {
    let out = weightcell(&["automaton", "min", &path("fig1.json")]);
    let a = Automaton::from_json(std::str::from_utf8(&out.stdout).unwrap()).unwrap();
    assert_eq!(a.num_states(), 13);
    assert_eq!(a.to_json(), fixture("fig1.json").to_json());
}

#[test]
fn enumerate_fig4() {
    let out = weightcell(&["automaton", "enum", &path("fig4.json"), "--maxlen", "5", "--format", "text"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "s\nsts\nststs\n");
}

#[test]
fn info_reports_empty_language() {
    assert_eq!(json_out(&["automaton", "info", &path("empty.json")])["empty_language"], true);
}

#[test]
fn reverse_twice() {
    let dir = tempfile::tempdir().unwrap();
    let once = dir.path().join("once.json");
    std::fs::write(&once, weightcell(&["automaton", "reverse", &path("fig2.json")]).stdout).unwrap();
    let twice = weightcell(&["automaton", "reverse", once.to_str().unwrap()]);
    let back = Automaton::from_json(std::str::from_utf8(&twice.stdout).unwrap()).unwrap();
    assert!(equivalent(&back, &fixture("fig2.json")).unwrap().is_equal());
}

#[test]
fn cones() {
    let v = json_out(&["cone", &path("fig2.json")]);
    assert_eq!(v["normals"].as_array().unwrap().len(), 4);
    assert_eq!(v["rays"].as_array().unwrap().len(), 4);
    assert_eq!(v["redundant"], serde_json::json!([["2", "3", "3"]]));
    let v = json_out(&["cone", &path("fig1.json")]);
    assert_eq!(v["normals"].as_array().unwrap().len(), 2);
    assert_eq!(v["lineality"].as_array().unwrap().len(), 1);
    let v = json_out(&["cone", &path("one_loop.json")]);
    assert_eq!(v["normals"], serde_json::json!([["1"]]));
}

#[test]
fn bounds_and_cells() {
    assert_eq!(json_out(&["bound", &path("fig2.json"), "--phi", "s=1,t=2,u=-5"])["bound"], "6");
    let v = json_out(&["cell", &path("infinite_dihedral.json"), "--phi", "s=1,t=-1"]);
    let cell = Automaton::from_json(&v["cell_dfa"].to_string()).unwrap();
    assert!(equivalent(&cell, &fixture("fig4.json")).unwrap().is_equal());

    let dir = tempfile::tempdir().unwrap();
    let prefix = dir.path().join("cell");
    let out = weightcell(&["cell", &path("fig2.json"), "--phi", "s=1,t=2,u=-5", "--emit", prefix.to_str().unwrap()]);
    assert!(out.status.success());
    let dot = std::fs::read_to_string(dir.path().join("cell.dot")).unwrap();
    assert!(dot.starts_with("digraph"));
    let emitted = Automaton::from_json(&std::fs::read_to_string(dir.path().join("cell.json")).unwrap()).unwrap();
    assert_eq!(emitted.num_states(), 5);
}

#[test]
fn unbounded_weight_exits_four_with_the_circuit() {
    let out = weightcell(&["bound", &path("one_loop.json"), "--phi", "s=1"]);
    assert_eq!(out.status.code(), Some(4));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"], "unbounded");
    assert_eq!(err["circuit"], "s");
}

#[test]
fn exit_codes() {
    assert_eq!(weightcell(&["bound", &path("fig2.json"), "--phi", "s=1,x=2"]).status.code(), Some(2));
    assert_eq!(weightcell(&["automaton", "info", "/no/such/file.json"]).status.code(), Some(2));
    let out = weightcell(&["coxeter", "build", "Ft4", "--max-states", "10"]);
    assert_eq!(out.status.code(), Some(3));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["exit_code"], 3);
    let odd = weightcell(&["coxeter", "bound", &path("delta333.json"), "--phi", "s=1,t=0,u=0"]);
    assert_eq!(odd.status.code(), Some(2));
}

#[test]
fn caps_from_the_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_weightcell"))
        .args(["coxeter", "build", "Ft4"])
        .env("WEIGHTCELL_CAPS", "states=10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    let out = Command::new(env!("CARGO_BIN_EXE_weightcell"))
        .args(["coxeter", "build", "Delta(2,4,6)", "--max-states", "100"])
        .env("WEIGHTCELL_CAPS", "states=10")
        .output()
        .unwrap();
    assert!(out.status.success());
}

#[test]
fn coxeter_pipeline() {
    let built = weightcell(&["coxeter", "build", &path("delta246.json"), "--order", "s,t,u", "--lang", "lex"]);
    let a = Automaton::from_json(std::str::from_utf8(&built.stdout).unwrap()).unwrap();
    assert!(equivalent(&a, &fixture("fig2.json")).unwrap().is_equal());

    let v = json_out(&["coxeter", "cell", &path("delta246.json"), "--phi", "s=-1,t=1,u=-1"]);
    assert_eq!(v["bound"], "1");
    assert_eq!(v["language"], "lex");

    assert_eq!(json_out(&["coxeter", "closed-form", "f4", "--phi", "a=1,b=-1"])["bound"], "4");
    let v = json_out(&["coxeter", "cone", "Delta(2,3,6)"]);
    assert_eq!(v["normals"].as_array().unwrap().len(), 2);

    let v = json_out(&["coxeter", "hecke", "Delta(2,4,6)", "--psi", "1,1,1", "--signs", "-,+,-"]);
    assert_eq!(v["bound"], "1");
    let v = json_out(&["coxeter", "probe-spherical", &path("delta246.json"), "--samples", "5"]);
    assert_eq!(v["samples"], 5);
}

#[test]
fn reordering_generators_changes_the_normal_forms() {
    let v = json_out(&["coxeter", "bound", &path("delta246.json"), "--order", "u,t,s", "--phi", "s=1,t=2,u=-5"]);
    assert_eq!(v["bound"], "6");
    assert!(v["witnesses"].as_array().unwrap().iter().all(|w| w.as_str().unwrap().len() == 4));
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["cone", "DATA/fig2.json"],
        vec!["coxeter", "cell", "Delta(2,4,6)", "--phi", "s=1,t=2,u=-5", "--format", "dot"],
        vec!["coxeter", "probe-spherical", "Delta(2,3,8)", "--samples", "3", "--seed", "7"],
    ] {
        let fixed: Vec<String> = args.iter().map(|a| a.replace("DATA/", &format!("{}/", path("")))).collect();
        let fixed: Vec<&str> = fixed.iter().map(String::as_str).collect();
        let (a, b) = (weightcell(&fixed), weightcell(&fixed));
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout);
    }
}
