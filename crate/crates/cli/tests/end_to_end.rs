use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_derivscope"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn catalog_file(dir: &TempDir, args: &[&str], name: &str) -> PathBuf {
    let path = dir.path().join(name);
    let mut full = vec!["catalog"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["-o", path.to_str().unwrap()]);
    let out = run(&full);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    path
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

fn assert_no_floats(v: &Value) {
    match v {
        Value::Number(n) => assert!(n.is_u64() || n.is_i64(), "non-integer number {n}"),
        Value::Array(xs) => xs.iter().for_each(assert_no_floats),
        Value::Object(m) => m.values().for_each(assert_no_floats),
        _ => {}
    }
}

fn assert_schema(doc: &Value, command: &str) {
    let keys: Vec<_> = doc.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["tool_version", "subject", "command", "params", "results", "pass"]);
    assert_eq!(doc["command"], command);
    assert_no_floats(doc);
}

#[test]
fn info_reports_invariants() {
    let dir = TempDir::new().unwrap();
    let h3 = catalog_file(&dir, &["h3"], "h3.alg");
    let out = run(&["info", p(&h3)]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_schema(&doc, "info");
    let r = &doc["results"][0];
    assert_eq!((r["n"].as_u64(), r["is_lie"].as_bool()), (Some(3), Some(true)));
    assert_eq!((r["derived"].as_u64(), r["center"].as_u64(), r["omega"].as_u64()), (Some(1), Some(1), Some(2)));

    let ab = catalog_file(&dir, &["abelian", "4"], "ab4.alg");
    let r = json(&run(&["info", p(&ab)]))["results"][0].clone();
    assert_eq!((r["derived"].as_u64(), r["center"].as_u64(), r["omega"].as_u64()), (Some(0), Some(4), Some(16)));
}

#[test]
fn malformed_pair_exits_two_and_names_the_rule() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.alg", "dim 3\n0 0 1 1\n");
    let out = run(&["info", p(&bad)]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("i < j rule") && err.contains("line 2"), "{err}");

    let swapped = write(&dir, "swapped.alg", "dim 3\n0 1 2 1\n1 0 2 1\n");
    assert_eq!(run(&["verify", p(&swapped)]).status.code(), Some(2));
    let dup = write(&dir, "dup.alg", "dim 3\n0 1 2 1\n0 1 2 1\n");
    assert_eq!(run(&["info", p(&dup)]).status.code(), Some(2));
    assert_eq!(run(&["info", p(&dir.path().join("missing.alg"))]).status.code(), Some(2));
}

#[test]
fn derive_examples() {
    let dir = TempDir::new().unwrap();
    let aff = catalog_file(&dir, &["aff"], "aff.alg");
    let doc = json(&run(&["derive", p(&aff), "--alpha", "1", "--beta", "1", "--gamma", "0"]));
    assert_schema(&doc, "derive");
    assert_eq!(doc["params"]["alpha"], "1");
    assert_eq!(doc["results"][0]["dimension"], 1);
    assert_eq!(doc["results"][0]["basis"][0], serde_json::json!([["1", "0"], ["0", "1"]]));

    let doc = json(&run(&["derive", p(&aff), "--alpha", "-1", "--beta", "1", "--gamma", "0"]));
    assert_eq!(doc["results"][0]["dimension"], 0);

    let ab = catalog_file(&dir, &["abelian", "2"], "ab2.alg");
    let doc = json(&run(&["derive", p(&ab), "--alpha", "3/7", "--beta", "-2", "--gamma", "5"]));
    assert_eq!(doc["results"][0]["dimension"], 4);

    let out = run(&["derive", p(&ab), "--alpha", "0.5", "--beta", "1", "--gamma", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn phi_examples() {
    let dir = TempDir::new().unwrap();
    let as2 = catalog_file(&dir, &["As", "2"], "as2.alg");
    let doc = json(&run(&["phi", p(&as2), "--t-set", "2,3"]));
    assert_schema(&doc, "phi");
    assert_eq!(
        doc["results"],
        serde_json::json!([{"t": "2", "phi": 1}, {"t": "3", "phi": 0}])
    );

    let h3 = catalog_file(&dir, &["h3"], "h3.alg");
    let doc = json(&run(&["phi", p(&h3), "--t-set", "-1,2"]));
    let results = doc["results"].as_array().unwrap();
    assert_eq!(results.len(), 3);
    assert_eq!(results[0], serde_json::json!({"t": "-1", "phi": 3}));
    assert_eq!(results[2]["check_name"], "constancy");
    assert_eq!(results[2]["status"], "pass");

    let doc = json(&run(&["phi", p(&h3), "--t-set", "1"]));
    assert_eq!(doc["results"].as_array().unwrap().len(), 1);

    let doc = json(&run(&["phi", p(&h3)]));
    assert_eq!(doc["params"]["t_set"], serde_json::json!(["-2", "-1", "1/2", "2", "3"]));
}

#[test]
fn verify_non_lie_file() {
    let dir = TempDir::new().unwrap();
    let as2 = catalog_file(&dir, &["As", "2"], "as2.alg");
    let out = run(&["verify", p(&as2), "--t-set", "2,3"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_schema(&doc, "verify");
    assert_eq!(doc["params"]["s_samples"], serde_json::json!(["1", "2", "3"]));
    for r in doc["results"].as_array().unwrap() {
        let name = r["check_name"].as_str().unwrap();
        let expected = match name {
            "triple_identity" | "constancy" | "bounds" | "deformation" | "centroid_embedding" | "perfect_trivial" => {
                "not_applicable"
            }
            _ => "pass",
        };
        assert_eq!(r["status"], expected, "{name}");
    }
}

#[test]
fn verify_catalog_passes_and_is_thread_independent() {
    let run_with = |threads: &str| {
        bin()
            .args(["verify", "--catalog", "--t-set", "2,-1", "--s-samples", "1,2,3"])
            .env("DERIVSCOPE_THREADS", threads)
            .output()
            .unwrap()
    };
    let sequential = run_with("0");
    let pooled = run_with("2");
    assert_eq!(sequential.status.code(), Some(0));
    assert_eq!(sequential.stdout, pooled.stdout);
    let doc = json(&sequential);
    assert_schema(&doc, "verify");
    assert_eq!(doc["pass"], true);

    let bad = bin().args(["verify", "--catalog"]).env("DERIVSCOPE_THREADS", "x").output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn catalog_commands() {
    let dir = TempDir::new().unwrap();
    let out = run(&["catalog", "list"]);
    assert_eq!(out.status.code(), Some(0));
    let listing = String::from_utf8_lossy(&out.stdout);
    for name in ["abelian", "aff", "h3", "As", "sl2", "filiform"] {
        assert!(listing.lines().any(|l| l.starts_with(name)), "{listing}");
    }

    let path = catalog_file(&dir, &["As", "2"], "as2.alg");
    let text = std::fs::read_to_string(path).unwrap();
    let a = derivscope_cli::parse(&text).unwrap();
    assert_eq!(a, derivscope::catalog::family_as(derivscope::linalg::int(2)));

    let out = run(&["catalog", "filiform", "5"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.starts_with("dim 5\n"));
    let constants = text.lines().filter(|l| !l.starts_with('#') && !l.starts_with("dim")).count();
    assert_eq!(constants, 3);

    let out = run(&["catalog", "As", "-1/2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["catalog", "As", "--", "-1/2"]);
    assert_eq!(out.status.code(), Some(0));

    assert_eq!(run(&["catalog", "nosuch"]).status.code(), Some(2));
    assert_eq!(run(&["catalog", "filiform", "3"]).status.code(), Some(2));
    assert_eq!(run(&["catalog", "h3", "1"]).status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&[]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["verify"]).status.code(), Some(2));
    assert_eq!(run(&["phi", "x.alg", "--t-set", "2,,3"]).status.code(), Some(2));
}
