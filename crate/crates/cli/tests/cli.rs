use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_connclust"))
}

fn path6() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data/path6.json")
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn path6_disjoint_center_is_two() {
    let out = run(&["solve", "--in", path(&path6()), "--objective", "center", "--mode", "disjoint"]);
    assert!(out.status.success());
    let doc = json(&out);
    assert_eq!(doc["report"]["value"], 2);
    assert_eq!(doc["report"]["algorithm"], "tree-dp");
    assert_eq!(doc["report"]["feasible"], true);
}

#[test]
fn solve_output_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    for (mode, algo) in
        [("nondisjoint", "greedy"), ("disjoint", "general"), ("nondisjoint", "auto"), ("disjoint", "oracle")]
    {
        let c = dir.path().join(format!("{mode}-{algo}.json"));
        let out = run(&["solve", "--in", path(&path6()), "--mode", mode, "--algo", algo, "--out", path(&c)]);
        assert!(out.status.success(), "{mode} {algo}: {}", String::from_utf8_lossy(&out.stderr));
        let saved: Value = serde_json::from_str(&std::fs::read_to_string(&c).unwrap()).unwrap();
        let check = run(&["validate", "--in", path(&path6()), "--clustering", path(&c)]);
        assert!(check.status.success());
        assert_eq!(json(&check)["feasible"], true);
        let eval = run(&["eval", "--in", path(&path6()), "--clustering", path(&c)]);
        assert_eq!(json(&eval)["value"], saved["report"]["value"], "{mode} {algo}");
    }
}

#[test]
fn one_cluster_validates() {
    let dir = tempfile::tempdir().unwrap();
    let c = dir.path().join("all.json");
    std::fs::write(&c, r#"{"mode":"disjoint","clusters":[[0,1,2,3,4,5]],"centers":null}"#).unwrap();
    let out = run(&["validate", "--in", path(&path6()), "--clustering", path(&c)]);
    assert_eq!(out.status.code(), Some(0));
    std::fs::write(&c, r#"{"mode":"disjoint","clusters":[[0,2],[1,3,4,5]],"centers":null}"#).unwrap();
    let out = run(&["validate", "--in", path(&path6()), "--clustering", path(&c)]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["feasible"], false);
}

#[test]
fn worstcase_given_centers_cost_three() {
    let dir = tempfile::tempdir().unwrap();
    let inst = dir.path().join("i2.json");
    let out = run(&["gen", "--family", "worstcase-I", "--m", "2", "--out", path(&inst)]);
    assert!(out.status.success());
    let ann: Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("i2.json.annotations.json")).unwrap()).unwrap();
    let centers: Vec<String> = ann["roles"]["centers"].as_array().unwrap().iter().map(|v| v.to_string()).collect();
    let out = run(&["solve", "--in", path(&inst), "--algo", "oracle", "--centers", &centers.join(",")]);
    assert!(out.status.success());
    assert_eq!(json(&out)["report"]["value"], 3);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("nope.json");
    assert_eq!(run(&["solve", "--in", path(&missing)]).status.code(), Some(2));
    let broken = dir.path().join("broken.json");
    std::fs::write(&broken, r#"{"n": 2, "k": 1}"#).unwrap();
    assert_eq!(run(&["solve", "--in", path(&broken)]).status.code(), Some(2));
    assert_eq!(run(&["solve", "--in", path(&path6()), "--bogus"]).status.code(), Some(2));
    // a tree solver on a graph with a cycle
    let cyc = dir.path().join("cycle.json");
    let out =
        run(&["gen", "--family", "general", "--n", "6", "--k", "2", "--extra-edge-prob", "1", "--out", path(&cyc)]);
    assert!(out.status.success());
    assert_eq!(run(&["solve", "--in", path(&cyc), "--algo", "tree-dp"]).status.code(), Some(3));
    assert_eq!(run(&["solve", "--in", path(&path6()), "--algo", "tree-assign"]).status.code(), Some(3));
    assert_eq!(run(&["solve", "--in", path(&path6()), "--centers", "9"]).status.code(), Some(2));
}

#[test]
fn exact_k_pads() {
    let out = run(&["solve", "--in", path(&path6()), "--exact-k"]);
    assert!(out.status.success());
    let doc = json(&out);
    assert_eq!(doc["clusters"].as_array().unwrap().len(), 2);
    assert_eq!(doc["report"]["value"], 2);
    let out = run(&["solve", "--in", path(&path6()), "--mode", "nondisjoint", "--exact-k"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn output_is_deterministic() {
    let f = path6();
    let args = ["solve", "--in", path(&f), "--mode", "nondisjoint", "--algo", "greedy", "--seed", "5"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let gen = ["gen", "--family", "lp", "--n", "9", "--k", "3", "--seed", "11"];
    assert_eq!(run(&gen).stdout, run(&gen).stdout);
    let exact = ["--exact", "solve", "--in", path(&f)];
    assert_eq!(json(&run(&exact))["report"]["value"], 2);
}

#[test]
fn gadgets_and_dot() {
    let dir = tempfile::tempdir().unwrap();
    let sat = dir.path().join("sat.json");
    assert!(run(&["gen", "--family", "sat", "--formula", "1 2 3, -2 -3", "--out", path(&sat)]).status.success());
    let out = run(&["solve", "--in", path(&sat), "--algo", "oracle", "--centers", "0,1"]);
    assert_eq!(json(&out)["report"]["value"], 1);
    let star = dir.path().join("mc.json");
    let out = run(&["gen", "--family", "multicut", "--size", "3", "--pairs", "0-1", "--k", "1", "--out", path(&star)]);
    assert!(out.status.success());
    let out = run(&["solve", "--in", path(&star), "--objective", "diameter", "--algo", "oracle"]);
    assert_eq!(json(&out)["report"]["value"], 1);
    let dot = run(&["export-dot", "--in", path(&path6())]);
    let text = String::from_utf8(dot.stdout).unwrap();
    assert!(text.starts_with("graph") && text.contains("2 -- 3"));
    assert_eq!(run(&["gen", "--family", "sat", "--formula", "1 x"]).status.code(), Some(2));
}

#[test]
fn bench_csv() {
    let out = run(&[
        "bench",
        "--family",
        "line",
        "--n",
        "6",
        "--k",
        "2",
        "--count",
        "4",
        "--algo",
        "auto,oracle",
        "--oracle",
        "--threads",
        "3",
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "instance,algo,n,k,value,oracle,ratio,wall_ms");
    assert_eq!(lines.len(), 1 + 8);
    assert!(lines[1].starts_with("line-0,"));
    assert!(lines[7].starts_with("line-3,"));
    for l in &lines[1..] {
        // exact solvers on a path: ratio 1
        assert_eq!(l.split(',').nth(6), Some("1.0000"), "{l}");
    }
}

#[test]
fn golden_outputs() {
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data");
    let solved = run(&["solve", "--in", path(&path6()), "--mode", "nondisjoint", "--algo", "line"]);
    assert_eq!(
        String::from_utf8(solved.stdout).unwrap(),
        std::fs::read_to_string(data.join("path6.line-center.golden.json")).unwrap()
    );
    let golden = data.join("path6.line-center.golden.json");
    let dot = run(&["export-dot", "--in", path(&path6()), "--clustering", path(&golden)]);
    assert_eq!(String::from_utf8(dot.stdout).unwrap(), std::fs::read_to_string(data.join("path6.golden.dot")).unwrap());
}
