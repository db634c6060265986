use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn jtwist(args: &[&str], envs: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_jtwist"));
    cmd.args(args).env_remove("JTWIST_ORDER");
    for (k, v) in envs {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn reports(out: &Output) -> Vec<Value> {
    serde_json::from_slice::<Value>(&out.stdout).expect("json on stdout").as_array().unwrap().clone()
}

#[test]
fn verify_twist_passes() {
    let out = jtwist(&["verify", "twist", "--n", "3", "--order", "4", "--format", "json"], &[]);
    assert_eq!(out.status.code(), Some(0));
    let reps = reports(&out);
    let te = reps.iter().find(|r| r["check"] == "twist.equation").unwrap();
    assert_eq!(te["status"], "pass");
    assert_eq!(te["params"]["N"], 3);
    assert_eq!(te["params"]["K"], 4);
    assert_eq!(te["params"]["variant"], "extended_multi");
    assert!(te.get("residual_witness").is_none());
    assert!(te["wall_time_ms"].is_number());
    let names: Vec<&str> = reps.iter().map(|r| r["check"].as_str().unwrap()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
}

#[test]
fn qspace_reports_every_relation() {
    let out = jtwist(&["verify", "qspace", "--n", "3", "--order", "3", "--format", "json"], &[]);
    let reps = reports(&out);
    assert!(reps.len() >= 15);
    let failing: Vec<&Value> = reps.iter().filter(|r| r["status"] == "fail").collect();
    // exit status follows the reports
    assert_eq!(out.status.code(), Some(if failing.is_empty() { 0 } else { 1 }));
    for r in failing {
        assert!(r["residual_witness"].is_string());
    }
}

#[test]
fn inhom_from_constants_file() {
    let dir = tempfile::tempdir().unwrap();
    let seed = dir.path().join("seed1d.json");
    std::fs::write(&seed, r#"{ "dim": 1, "L": [[["2"]]] }"#).unwrap();
    let out = jtwist(&["verify", "inhom", "--constants", seed.to_str().unwrap(), "--order", "4"], &[]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert_eq!(out.status.code(), Some(0), "{text}");
    assert!(text.contains("inhom.file.validate"));

    // the B∨ split of gl(3) with L^2_{22} = 1 added, which breaks quasi-associativity
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{ "dim": 2, "L": [[["2","0"],["0","1"]],[["0","2"],["0","1"]]] }"#).unwrap();
    let out = jtwist(&["verify", "inhom", "--constants", bad.to_str().unwrap(), "--format", "json"], &[]);
    assert_eq!(out.status.code(), Some(1));
    let reps = reports(&out);
    let v = reps.iter().find(|r| r["check"] == "inhom.file.validate").unwrap();
    assert_eq!(v["status"], "fail");
    assert!(v["residual_witness"].is_string());
}

#[test]
fn emit_r_matrix_json() {
    let out = jtwist(&["emit", "r-matrix", "--n", "2", "--order", "4", "--format", "json"], &[]);
    assert_eq!(out.status.code(), Some(0));
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["size"], 4);
    let rows = doc["entries"].as_array().unwrap();
    assert_eq!(rows.len(), 4);
    assert!(rows.iter().all(|r| r.as_array().unwrap().len() == 4));
    // R ≡ 1 at ξ = 0
    for (i, row) in rows.iter().enumerate() {
        for (j, e) in row.as_array().unwrap().iter().enumerate() {
            assert_eq!(e[0], if i == j { "1" } else { "0" });
        }
    }
}

#[test]
fn emit_classical_r_and_twist() {
    let out = jtwist(&["emit", "classical-r", "--n", "3"], &[]);
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "-H13∧E13 - 2 E12∧E23");
    let out = jtwist(&["emit", "twist", "--n", "3", "--order", "2"], &[]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.starts_with("(1) · 1 ⊗ 1 + (ξ) · H13 ⊗ E13"), "{text}");
    assert!(!text.contains("ξ^3"));
}

#[test]
fn emit_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let out = jtwist(&["emit", "r-matrix", "--n", "2", "--order", "2", "--format", "json", "--out", path.to_str().unwrap()], &[]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["order"], 2);
}

fn order_of(out: &Output) -> u64 {
    reports(out)[0]["params"]["K"].as_u64().unwrap()
}

#[test]
fn order_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.toml");
    std::fs::write(&cfg, "order = 2\nformat = \"json\"\n").unwrap();
    let cfg = cfg.to_str().unwrap();
    let base = ["verify", "r-hom", "--format", "json"];
    assert_eq!(order_of(&jtwist(&base, &[])), 4);
    assert_eq!(order_of(&jtwist(&base, &[("JTWIST_ORDER", "3")])), 3);
    assert_eq!(order_of(&jtwist(&["verify", "r-hom", "--config", cfg], &[("JTWIST_ORDER", "3")])), 2);
    assert_eq!(order_of(&jtwist(&["verify", "r-hom", "--config", cfg, "--order", "5"], &[("JTWIST_ORDER", "3")])), 5);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["verify", "quartic"][..],
        &["verify", "twist", "--n", "1"],
        &["verify", "twist", "--order", "0"],
        &["verify", "twist", "--variant", "nope"],
        &["verify", "inhom", "--constants", "/nonexistent/file.json"],
        &["emit", "nothing"],
    ] {
        let out = jtwist(args, &[]);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
    assert!(!Path::new("/nonexistent/file.json").exists());
}
