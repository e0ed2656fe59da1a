use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;
use tempfile::TempDir;

struct Run {
    code: i32,
    json: Value,
    stdout: String,
}

fn hm(args: &[&str], env: &[(&str, &str)]) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_hypermoment"));
    cmd.args(args).env_remove("HYPERMOMENT_CAPS");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("binary runs");
    let stdout = String::from_utf8(out.stdout).unwrap();
    let json = serde_json::from_str(&stdout).unwrap_or(Value::Null);
    Run {
        code: out.status.code().unwrap(),
        json,
        stdout,
    }
}

fn run(args: &[&str]) -> Run {
    hm(args, &[])
}

fn write(dir: &Path, name: &str, body: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

fn gen(dir: &Path, name: &str, args: &[&str]) -> String {
    let path = dir.join(name);
    let mut all = vec!["gen"];
    all.extend_from_slice(args);
    all.extend_from_slice(&["-o", path.to_str().unwrap()]);
    assert_eq!(run(&all).code, 0);
    path.to_str().unwrap().to_string()
}

fn result(r: &Run) -> &Value {
    &r.json["report"]["result"]
}

#[test]
fn gen_star() {
    let r = run(&["gen", "--family", "hyperstar", "--m", "3", "--q", "4"]);
    assert_eq!(r.code, 0);
    let h = &result(&r)["hypergraph"];
    assert_eq!(h["n"], 9);
    assert_eq!(h["edges"].as_array().unwrap().len(), 4);
    assert_eq!(r.json["report"]["schema"], "hypermoment.report/1");
    assert!(r.json["wall_time_ms"].is_u64());
}

#[test]
fn compare_path_and_star() {
    let dir = TempDir::new().unwrap();
    let p = gen(
        dir.path(),
        "p.json",
        &["--family", "hyperpath", "--m", "3", "--q", "4"],
    );
    let s = gen(
        dir.path(),
        "s.json",
        &["--family", "hyperstar", "--m", "3", "--q", "4"],
    );
    let r = run(&["compare", &p, &s, "--dmax", "9"]);
    assert_eq!(r.code, 0);
    assert_eq!(result(&r)["relation"], "Before");
    assert_eq!(result(&r)["deciding_index"], 6);
}

#[test]
fn triangle_moments() {
    let dir = TempDir::new().unwrap();
    let c = gen(
        dir.path(),
        "c.json",
        &["--family", "hypercycle", "--m", "3", "--e", "3"],
    );
    let r = run(&["moments", &c, "--dmax", "9"]);
    let rows = result(&r)["moments"].as_array().unwrap();
    let value = |d: usize| rows[d]["value"].as_str().unwrap().to_string();
    assert_eq!(
        (value(3), value(6), value(9)),
        ("216".into(), "540".into(), "1836".into())
    );
}

#[test]
fn text_input_and_census() {
    let dir = TempDir::new().unwrap();
    // Two edges sharing two vertices: not linear, counted by brute force.
    let f = write(dir.path(), "h.txt", "3 2\n0 1 2\n1 2 3\n");
    let r = run(&["census", f.to_str().unwrap()]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert_eq!(result(&r)["method"], "brute force");
    let path = gen(
        dir.path(),
        "p.json",
        &["--family", "hyperpath", "--m", "3", "--q", "4"],
    );
    let r = run(&["census", &path]);
    assert_eq!(result(&r)["census"]["P3"], "2");
    assert_eq!(r.json["report"]["status"], "pass");
    let z = run(&["zagreb", &path]);
    assert_eq!(result(&z)["zagreb"], "18");
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let bad_json = write(dir.path(), "bad.json", "{\"m\": 3, \"edges\": ");
    let r = run(&["moments", bad_json.to_str().unwrap()]);
    assert_eq!(r.code, 2);
    assert_eq!(r.json["error"]["kind"], "parse");

    let out_of_range = write(
        dir.path(),
        "oor.json",
        r#"{"m":2,"n":3,"edges":[[0,1],[1,5]]}"#,
    );
    assert_eq!(run(&["zagreb", out_of_range.to_str().unwrap()]).code, 2);

    assert_eq!(run(&["moments", "/nonexistent/file.json"]).code, 2);
    assert_eq!(
        run(&["gen", "--family", "nonsense", "--m", "3", "--q", "2"]).code,
        2
    );
    assert_eq!(
        run(&["gen", "--family", "hypercycle", "--m", "3", "--e", "2"]).code,
        2
    );
    assert_eq!(run(&["moments"]).code, 2);

    // Two edges sharing two vertices are outside the supported classes above S_m.
    let other = write(dir.path(), "other.txt", "3 2\n0 1 2\n1 2 3\n");
    let r = run(&["moments", other.to_str().unwrap(), "--dmax", "6"]);
    assert_eq!(r.code, 3);
    assert_eq!(r.json["error"]["kind"], "out_of_scope");

    let star = gen(
        dir.path(),
        "s.json",
        &["--family", "hyperstar", "--m", "2", "--q", "3"],
    );
    let r = run(&[
        "transform",
        &star,
        "--spec",
        r#"{"kind":"T1","edge":[0,1],"u":0,"v":1}"#,
    ]);
    assert_eq!(r.code, 3);
    assert_eq!(r.json["error"]["kind"], "precondition");
    let r = run(&["transform", &star, "--spec", "{\"kind\":\"T9\"}"]);
    assert_eq!(r.code, 2);

    let r = run(&[
        "enumerate",
        "--family",
        "hypertrees",
        "--m",
        "3",
        "--q",
        "8",
    ]);
    assert_eq!(r.code, 3);
    assert_eq!(r.json["error"]["kind"], "bound_exceeded");
    assert_eq!(
        run(&[
            "enumerate",
            "--family",
            "hypertrees",
            "--m",
            "3",
            "--q",
            "3",
            "--caps",
            "3:x"
        ])
        .code,
        2
    );

    let g = gen(
        dir.path(),
        "g.json",
        &["--family", "hyperpath", "--m", "2", "--q", "2"],
    );
    let h = gen(
        dir.path(),
        "h.json",
        &["--family", "hyperpath", "--m", "3", "--q", "2"],
    );
    assert_eq!(run(&["compare", &g, &h]).code, 2);
}

#[test]
fn caps_from_environment() {
    let args = [
        "enumerate",
        "--family",
        "hypertrees",
        "--m",
        "4",
        "--q",
        "7",
    ];
    assert_eq!(run(&args).code, 3);
    let r = hm(&args, &[("HYPERMOMENT_CAPS", "4=7")]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert_eq!(r.json["report"]["inputs"]["caps"], "2=9,3=7,4=7");
}

#[test]
fn enumerate_and_order_family() {
    let r = run(&[
        "enumerate",
        "--family",
        "hypertrees",
        "--m",
        "3",
        "--q",
        "5",
    ]);
    assert_eq!(result(&r)["count"], 8);
    let r = run(&[
        "enumerate",
        "--family",
        "unicyclic",
        "--m",
        "3",
        "--e",
        "3",
        "--f",
        "2",
        "--binary",
    ]);
    assert_eq!(r.code, 0);
    let r = run(&["order", "--family", "hypertrees", "--m", "3", "--q", "4"]);
    let blocks = result(&r)["blocks"].as_array().unwrap();
    assert_eq!(blocks.len(), 4);
    assert_eq!(blocks[0]["rank"], 0);
}

#[test]
fn order_files() {
    let dir = TempDir::new().unwrap();
    let p = gen(
        dir.path(),
        "p.json",
        &["--family", "hyperpath", "--m", "3", "--q", "4"],
    );
    let s = gen(
        dir.path(),
        "s.json",
        &["--family", "hyperstar", "--m", "3", "--q", "4"],
    );
    let r = run(&["order", &s, &p]);
    let blocks = result(&r)["blocks"].as_array().unwrap();
    assert_eq!(blocks[0]["members"][0], p.as_str());
    assert_eq!(blocks[1]["members"][0], s.as_str());
}

#[test]
fn transform_spec_and_reduction() {
    let dir = TempDir::new().unwrap();
    let p = gen(
        dir.path(),
        "p.json",
        &["--family", "hyperpath", "--m", "2", "--q", "3"],
    );
    let out = dir.path().join("star.json");
    let r = run(&[
        "transform",
        &p,
        "--spec",
        r#"{"kind":"T1","edge":[1,2],"u":2,"v":1}"#,
        "-o",
        out.to_str().unwrap(),
    ]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert_eq!(result(&r)["effect"]["predicted"], "2");
    assert_eq!(result(&r)["effect"]["actual"], "2");
    assert_eq!(r.json["report"]["status"], "pass");
    assert!(out.exists());

    let path4 = gen(
        dir.path(),
        "p4.json",
        &["--family", "hyperpath", "--m", "3", "--q", "4"],
    );
    let r = run(&["transform", &path4, "--reduce", "star-ward"]);
    assert_eq!(r.code, 0);
    let degrees_max = result(&r)["terminal"]["edges"]
        .as_array()
        .unwrap()
        .iter()
        .flat_map(|e| e.as_array().unwrap().iter().map(|v| v.as_u64().unwrap()))
        .fold(std::collections::BTreeMap::new(), |mut m, v| {
            *m.entry(v).or_insert(0) += 1;
            m
        })
        .into_values()
        .max();
    assert_eq!(degrees_max, Some(4));

    let r = run(&["transform", &path4, "--sites"]);
    assert_eq!(r.code, 0);
    assert!(result(&r)["count"].as_u64().unwrap() > 0);
}

#[test]
fn verify_examples() {
    let r = run(&["verify", "--suite", "trees", "--m", "3", "--q", "4"]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert_eq!(r.json["report"]["status"], "pass");
    let names: Vec<&str> = r.json["report"]["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert!(names.contains(&"trees/m3/q4/first-is-hyperpath"));
    assert!(names.contains(&"trees/m3/q4/last-is-hyperstar"));
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);

    let r = run(&[
        "verify",
        "--suite",
        "unicyclic",
        "--m",
        "3",
        "--e",
        "3",
        "--f",
        "2",
    ]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    let r = run(&["verify", "--suite", "oracles", "--q", "8"]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    let r = run(&["verify", "--suite", "unicyclic", "--m", "2"]);
    assert_eq!(r.code, 3);
}

#[test]
fn reports_are_byte_identical() {
    let args = [
        "verify",
        "--suite",
        "trees",
        "--m",
        "3",
        "--q",
        "5",
        "--no-timing",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
    assert!(a.json.get("wall_time_ms").is_none());
    let timed_a = run(&args[..6]);
    let timed_b = run(&args[..6]);
    assert_eq!(
        serde_json::to_string(&timed_a.json["report"]).unwrap(),
        serde_json::to_string(&timed_b.json["report"]).unwrap()
    );
}

#[test]
fn text_format() {
    let r = run(&[
        "gen",
        "--family",
        "pendant-cycle",
        "--m",
        "3",
        "--e",
        "3",
        "--f",
        "2",
        "--format",
        "text",
    ]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("status"));
    assert!(r.stdout.contains("linear-unicyclic(3)"));
    let r = run(&["zagreb", "/nonexistent", "--format", "text"]);
    assert_eq!(r.code, 2);
    assert!(r.stdout.starts_with("error (input)"));
}
