use std::process::{Command, Output};

use serde_json::Value;

fn gsilt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gsilt")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn verify_single_check_emits_one_pass_certificate() {
    let out = gsilt(&["verify", "kx2.json", "--check", "T2.11", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    for key in ["tool_version", "prime", "fixture", "certificates"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    assert_eq!(v["prime"], 1009);
    let certs = v["certificates"].as_array().unwrap();
    assert_eq!(certs.len(), 1);
    assert_eq!(certs[0]["check_id"], "T2.11");
    assert_eq!(certs[0]["verdict"]["kind"], "pass");
}

#[test]
fn silting_lists_the_regular_module_of_a2() {
    let out = gsilt(&["silting", "a2.json", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let rows = v["result"]["silting"].as_array().unwrap();
    // A = P_1 ⊕ P_2 has dimension vector (1,1) + (0,1)
    let regular = rows.iter().find(|r| r["dimension_vector"] == serde_json::json!([1, 2])).expect("A is listed");
    assert_eq!(regular["silting"], true);
    assert_eq!(regular["tilting"], true);
    assert_eq!(rows.iter().filter(|r| r["silting"] == true).count(), 2);
}

#[test]
fn bad_path_is_a_usage_error() {
    let out = gsilt(&["analyze", "/definitely/not/here.json"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("usage"));
    assert_eq!(gsilt(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(gsilt(&["verify", "kx2", "--check", "Z0.0"]).status.code(), Some(1));
    assert_eq!(gsilt(&["--help"]).status.code(), Some(0));
}

#[test]
fn malformed_file_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    std::fs::write(&path, "{ \"quiver\": ").unwrap();
    let out = gsilt(&["analyze", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn computation_errors_are_structured() {
    let out = gsilt(&["atlas", "radsq", "--format", "json"]);
    assert_eq!(out.status.code(), Some(2));
    let v = json(&out);
    assert_eq!(v["error"]["kind"], "NotCertifiedGorenstein");
    // the prime must exceed the algebra dimension
    let out = gsilt(&["analyze", "kx3", "--prime", "2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["error"]["kind"], "PrimeTooSmall");
}

#[test]
fn analyze_reports_refusal_without_failing() {
    let out = gsilt(&["analyze", "radsq", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["result"]["analyze"]["gorenstein"]["certified"], false);
    let out = gsilt(&["analyze", "triangular", "--format", "json"]);
    let a = &json(&out)["result"]["analyze"];
    assert_eq!(a["gorenstein"]["idim_left"], 1);
    assert_eq!(a["atlas"]["members"].as_array().unwrap().len(), 5);
    assert_eq!(a["atlas"]["completeness"], "certified");
}

#[test]
fn text_and_json_agree_on_verdicts() {
    let j = json(&gsilt(&["verify", "a2", "--format", "json"]));
    let text = String::from_utf8(gsilt(&["verify", "a2"]).stdout).unwrap();
    let certs = j["certificates"].as_array().unwrap();
    assert_eq!(certs.len(), 18);
    for c in certs {
        let id = c["check_id"].as_str().unwrap();
        let kind = c["verdict"]["kind"].as_str().unwrap();
        let line = text.lines().find(|l| l.split_whitespace().next() == Some(id)).expect("line per check");
        assert_eq!(line.split_whitespace().nth(1), Some(kind), "{id}");
    }
}

#[test]
fn reports_round_trip_and_reproduce() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        let out = gsilt(&["verify", "kx2", "--format", "json", "--out", p.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
        assert!(out.stdout.is_empty());
    }
    let bytes = std::fs::read(&a).unwrap();
    assert_eq!(bytes, std::fs::read(&b).unwrap());
    let v: Value = serde_json::from_slice(&bytes).unwrap();
    let again: Value = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
    assert_eq!(again, v);
}

#[test]
fn complexes_over_path_algebra() {
    let out = gsilt(&["complexes", "a2", "--format", "json"]);
    let rows = json(&out)["result"]["complexes"].as_array().unwrap().clone();
    assert_eq!(rows.len(), 5);
    for r in &rows {
        assert_eq!(r["summands"], 2);
        assert!(r["gldim_b"]["Finite"].as_u64().unwrap() <= 1);
    }
}
