use std::process::{Command, Output};

use serde_json::{json, Value};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twistcong")).args(args).env_remove("TWISTCONG_CAP").output().unwrap()
}

fn ok_json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn ok_text(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

const A: &str = r#"{"n":6,"blocks":[[1,4],[2,3,-4,-5],[5,6],[-1,-2,-6],[-3]]}"#;
const B: &str = r#"{"n":6,"blocks":[[1,2],[3,4,-1],[5,-4,-5,-6],[6],[-2,-3]]}"#;

#[test]
fn counts_by_every_method() {
    assert_eq!(ok_json(&["count", "--n", "3", "--d", "2"])["count"], 329);
    assert_eq!(ok_json(&["count", "--n", "2", "--d", "1", "--method", "oracle"])["count"], 43);
    assert_eq!(ok_json(&["count", "--n", "10", "--d", "10", "--method", "gf"])["count"], 6189136484u64);
    assert_eq!(ok_json(&["count", "--n", "3", "--d", "3", "--method", "recursion"])["count"], 1105);
    assert_eq!(ok_text(&["count", "--n", "2", "--d", "2", "--method", "generate", "--format", "csv"]), "n,d,method,count\n2,2,generate,136\n");
}

#[test]
fn table_grid() {
    assert_eq!(ok_text(&["table", "--n", "0", "--d", "0"]), "n,d=0\n0,2\n");
    let full = ok_text(&["table"]);
    assert_eq!(full.lines().count(), 12);
    assert!(full.lines().nth(1).unwrap().starts_with("0,2,3,4"));
    assert!(full.trim_end().ends_with(",6189136484"));
}

#[test]
fn lattice_reports() {
    let r = &ok_json(&["lattice", "--n", "2", "--d", "0"])["report"];
    assert_eq!((r["size"].clone(), r["distributive"].clone()), (json!(9), json!(true)));
    let r = &ok_json(&["lattice", "--n", "2", "--d", "1"])["report"];
    assert_eq!((r["size"].clone(), r["modular"].clone(), r["distributive"].clone()), (json!(43), json!(true), json!(false)));
    let r = &ok_json(&["lattice", "--n", "0", "--d", "3"])["report"];
    assert_eq!((r["size"].clone(), r["covers"].clone()), (json!(5), json!(4)));
    let dot = ok_text(&["lattice", "--n", "1", "--d", "1", "--format", "dot"]);
    assert!(dot.starts_with("digraph lattice {") && dot.matches(" -> ").count() > 0);
    let csv = ok_text(&["lattice", "--n", "1", "--d", "0", "--format", "csv"]);
    assert_eq!(csv.lines().count(), 1 + 9);
}

#[test]
fn products() {
    let v = ok_json(&["mul", A, B]);
    assert_eq!(v["phi"], 1);
    assert_eq!(v["product"], json!({"n": 6, "blocks": [[1, 4], [2, 3, -1, -4, -5, -6], [5, 6], [-2, -3]]}));
    let id = r#"{"n":2,"blocks":[[1,-1],[2,-2]]}"#;
    assert_eq!(ok_json(&["mul", id, id]), json!({"product": serde_json::from_str::<Value>(id).unwrap(), "phi": 0}));
    let e = r#"{"i":1,"alpha":{"n":1,"blocks":[[1],[-1]]}}"#;
    assert_eq!(ok_json(&["mul", e, e])["product"]["i"], 3);
    assert_eq!(ok_json(&["mul", e, e, "--d", "2"])["product"], json!({"zero": true}));
}

#[test]
fn errors_exit_nonzero() {
    let one = r#"{"n":1,"blocks":[[1,-1]]}"#;
    let two = r#"{"n":2,"blocks":[[1,-1],[2,-2]]}"#;
    for args in [
        vec!["mul", one, two],
        vec!["mul", "{not json", one],
        vec!["count", "--n", "2"],
        vec!["count", "--n", "2", "--d", "2", "--format", "dot"],
        vec!["lattice", "--n", "2", "--d", "2", "--cap", "10"],
        vec!["principal", r#"{"zero":true}"#, r#"{"zero":true}"#, "--d", "1"],
    ] {
        let out = run(&args);
        assert!(!out.status.success(), "{args:?} should fail");
        assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
    }
}

#[test]
fn cap_from_the_environment_overrides_the_flag() {
    let args = ["count", "--n", "2", "--d", "2", "--method", "generate", "--cap", "1000"];
    assert!(run(&args).status.success());
    let capped = Command::new(env!("CARGO_BIN_EXE_twistcong")).args(args).env("TWISTCONG_CAP", "10").output().unwrap();
    assert!(!capped.status.success());
}

#[test]
fn output_is_deterministic_and_can_go_to_a_file() {
    let args = ["lattice", "--n", "2", "--d", "1"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let path = std::env::temp_dir().join(format!("twistcong-cli-{}.dot", std::process::id()));
    let p = path.to_str().unwrap();
    assert!(run(&["lattice", "--n", "2", "--d", "1", "--format", "dot", "--out", p]).stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), ok_text(&["lattice", "--n", "2", "--d", "1", "--format", "dot"]));
    std::fs::remove_file(path).unwrap();
}

#[test]
fn principal_include_and_gen() {
    let a = r#"{"i":0,"alpha":{"n":2,"blocks":[[1,-1],[2],[-2]]}}"#;
    let zero = r#"{"zero":true}"#;
    let m = ok_json(&["principal", a, zero, "--n", "2", "--d", "1"]);
    assert_eq!(m["label"], "Δ Δ / R R / R R");
    let ms = m["matrix"].to_string();
    let delta = json!({"n": 2, "d": 1, "grid": [["D", "D"], ["D", "D"], ["D", "D"]]}).to_string();
    assert_eq!(ok_json(&["include", &delta, &ms]), json!({"first_in_second": true, "second_in_first": false}));
    let g = ok_json(&["gen", &ms]);
    assert_eq!((g["verified"].clone(), g["oracle_verified"].clone()), (json!(true), json!(true)));
    assert!(g["size"].as_u64().unwrap() <= g["bound"].as_u64().unwrap());

    let b = r#"{"i":1,"alpha":{"n":2,"blocks":[[1,-2],[2,-1]]}}"#;
    let id = r#"{"i":0,"alpha":{"n":2,"blocks":[[1,-1],[2,-2]]}}"#;
    let s = ok_json(&["principal", id, b]);
    let c = s["congruence"].to_string();
    assert_eq!(ok_json(&["gen", &c])["check"]["verified"], true);
    assert_eq!(ok_json(&["include", &c, &c])["first_in_second"], true);
    let out = run(&["include", &c, &ms]);
    assert!(!out.status.success());
}
