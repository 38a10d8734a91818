use std::fs;
use std::process::{Command, Output};

fn nichols(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nichols"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn hilbert_series() {
    let o = nichols(&["hilbert", "--system", "A2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "1 3 4 3 1 (closed)");
    let o = nichols(&["hilbert", "--system", "B3", "--max-degree", "1"]);
    assert_eq!(stdout(&o).trim(), "1 9");
}

#[test]
fn chain_as_json() {
    let o = nichols(&["chain", "--system", "A2", "--lambda", "1,0"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["lambda"], serde_json::json!([1, 0]));
    let steps = v["steps"].as_array().unwrap();
    assert_eq!(steps.len(), 2);
    assert_eq!(steps[0]["root"], serde_json::json!([1, -1, 0]));
    assert_eq!(steps[1]["root"], serde_json::json!([1, 0, -1]));
    assert_eq!(steps[0]["level"], 0);
}

#[test]
fn xi_by_degree() {
    let o = nichols(&["xi", "--system", "A2", "--lambda", "1,0"]);
    let s = stdout(&o);
    assert!(s.contains("degree 1: [1] + [2]"), "{s}");
    assert!(s.contains("degree 2: [2][1]"), "{s}");
}

#[test]
fn usage_errors_exit_with_2() {
    assert_eq!(nichols(&["verify", "--system", "E8"]).status.code(), Some(2));
    assert_eq!(nichols(&["verify", "--suite", "nonsense"]).status.code(), Some(2));
    assert_eq!(nichols(&["verify", "--oracle-bound", "9"]).status.code(), Some(2));
    assert_eq!(nichols(&["hilbert", "--max-degree", "0"]).status.code(), Some(2));
    assert_eq!(nichols(&["chain", "--lambda", "1"]).status.code(), Some(2));
    assert_eq!(nichols(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn verify_reports_json_and_exits_0() {
    let o = nichols(&["verify", "--system", "G2", "--suite", "relations", "--output", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["system"], "G2");
    assert_eq!(v["summary"]["fail"], 0);
    let entries = v["entries"].as_array().unwrap();
    let g2 = entries
        .iter()
        .filter(|e| e["check"] == "rank2_relation" && e["instance"].as_str().unwrap().starts_with("G2"))
        .count();
    assert_eq!(g2, 12);
    assert!(entries.iter().all(|e| e["status"] == "pass"));
}

#[test]
fn config_file_is_overridden_by_flags() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.conf");
    fs::write(&cfg, "system = B2\nseed = 11\noutput = json\n").unwrap();
    let cfg = cfg.to_str().unwrap();
    let o = nichols(&["verify", "--config", cfg, "--suite", "chains", "--seed", "5"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["system"], "B2");
    assert_eq!(v["seed"], 5);
}

#[test]
fn cache_round_trip_and_tamper_detection() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let o = nichols(&["cache", "inspect", "--cache-dir", d]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "");

    let cold = stdout(&nichols(&["hilbert", "--system", "B2", "--cache-dir", d]));
    let warm = stdout(&nichols(&["hilbert", "--system", "B2", "--cache-dir", d]));
    assert_eq!(cold, warm);
    let listing = stdout(&nichols(&["cache", "inspect", "--cache-dir", d]));
    assert_eq!(listing.lines().count(), 9);
    assert!(listing.lines().all(|l| l.contains("version 1") && l.ends_with("ok")));

    let f = dir.path().join("B2").join("degree-2.txt");
    let text = fs::read_to_string(&f).unwrap().replacen("deriv 0", "deriv 1", 1);
    fs::write(&f, text).unwrap();
    let o = nichols(&["cache", "verify", "--system", "B2", "--cache-dir", d]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("B2 degree 2: hash mismatch"));

    assert_eq!(stdout(&nichols(&["hilbert", "--system", "B2", "--cache-dir", d])), cold);
    let o = nichols(&["cache", "verify", "--system", "B2", "--cache-dir", d]);
    assert!(o.status.success(), "the corrupt entry is rewritten");

    assert!(nichols(&["cache", "clear", "--cache-dir", d]).status.success());
    assert_eq!(stdout(&nichols(&["cache", "inspect", "--cache-dir", d])), "");
    assert_eq!(stdout(&nichols(&["hilbert", "--system", "B2", "--cache-dir", d])), cold);
}

#[test]
fn identical_seeds_give_identical_reports() {
    let run = || {
        let o = nichols(&["verify", "--system", "A2", "--suite", "kmodel,equivariant", "--output", "json", "--seed", "42"]);
        let mut v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        for e in v["entries"].as_array_mut().unwrap() {
            e.as_object_mut().unwrap().remove("elapsed_ms");
        }
        v
    };
    assert_eq!(run(), run());
}
