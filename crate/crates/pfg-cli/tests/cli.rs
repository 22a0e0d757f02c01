use std::path::Path;
use std::process::{Command, Output};

fn pfg() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_pfg"));
    cmd.env_remove("PFG_CACHE_DIR");
    cmd
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn stderr_of(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).unwrap()
}

#[test]
fn csv_spectrum_exact_bytes() {
    let out = pfg()
        .args(["spectrum", "--n", "3", "--k", "1"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(
        stdout_of(&out),
        "lambda,f,eta,multiplicity\n3,1,3,1\n\"2,1\",2,0,4\n\"1,1,1\",1,-3,1\n"
    );
}

#[test]
fn json_spectrum_structure() {
    let out = pfg()
        .args(["spectrum", "--n", "4", "--k", "1", "--format", "json"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(doc["n"], 4);
    assert_eq!(doc["k"], 1);
    let entries = doc["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 5);
    assert_eq!(entries[0]["lambda"], serde_json::json!([4]));
    assert_eq!(entries[0]["f"], "1");
    assert_eq!(entries[0]["eta"], "8");
    assert_eq!(entries[0]["multiplicity"], "1");
    assert_eq!(entries[2]["lambda"], serde_json::json!([2, 2]));
    assert_eq!(entries[2]["eta"], "-4");
}

#[test]
fn csv_and_json_agree_on_values() {
    let csv_out = stdout_of(
        &pfg()
            .args(["spectrum", "--n", "6", "--k", "2"])
            .output()
            .unwrap(),
    );
    let json_out = stdout_of(
        &pfg()
            .args(["spectrum", "--n", "6", "--k", "2", "--format", "json"])
            .output()
            .unwrap(),
    );
    let doc: serde_json::Value = serde_json::from_str(&json_out).unwrap();
    let mut csv_lines = csv_out.lines();
    assert_eq!(csv_lines.next(), Some("lambda,f,eta,multiplicity"));
    for (line, entry) in csv_lines.zip(doc["entries"].as_array().unwrap()) {
        let eta = entry["eta"].as_str().unwrap();
        let fields: Vec<&str> = line.rsplitn(4, ',').collect();
        assert_eq!(fields[1], eta, "line {line}");
    }
}

#[test]
fn bad_invocations_exit_two() {
    for args in [
        &[] as &[&str],
        &["spectrum", "--n", "1", "--k", "0"],
        &["spectrum", "--n", "5", "--k", "5"],
        &["spectrum", "--n", "5"],
        &["verify", "--suite", "bogus"],
        &["tables"],
        &["nonsense"],
    ] {
        let out = pfg().args(args).output().unwrap();
        assert_eq!(out.status.code(), Some(2), "args {args:?}");
    }
}

#[test]
fn verify_single_suite_passes() {
    let out = pfg()
        .args(["verify", "--suite", "mass", "--max-n", "6"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("suite mass: pass"));
}

#[test]
fn verify_all_reduced_caps() {
    let out = pfg()
        .args(["verify", "--suite", "all", "--max-n", "5"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stderr_of(&out));
    let stdout = stdout_of(&out);
    assert_eq!(stdout.matches(": pass (").count(), 7);
}

#[test]
fn tables_paper_reproduces_everything() {
    let out = pfg().args(["tables", "--paper"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stderr_of(&out));
    let stdout = stdout_of(&out);
    assert!(stdout.contains("table n=3 (full): 3 rows ok"));
    assert!(stdout.contains("table n=11 (first part >= 5): 29 rows ok"));
    assert!(stdout.contains("table n=15 (full): 176 rows ok"));
    assert!(stdout.contains("all embedded tables reproduced exactly"));
}

#[test]
fn out_flag_writes_stdout_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.csv");
    let direct = stdout_of(
        &pfg()
            .args(["spectrum", "--n", "5", "--k", "2"])
            .output()
            .unwrap(),
    );
    let out = pfg()
        .args(["spectrum", "--n", "5", "--k", "2", "--out"])
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(stdout_of(&out).is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), direct);
}

fn cache_file(dir: &Path) -> std::path::PathBuf {
    dir.join("eta_5_1.jsonl")
}

#[test]
fn cache_round_trip_tamper_and_corruption() {
    let dir = tempfile::tempdir().unwrap();
    let spectrum_args = ["spectrum", "--n", "5", "--k", "1"];

    let first = pfg()
        .args(spectrum_args)
        .env("PFG_CACHE_DIR", dir.path())
        .output()
        .unwrap();
    assert!(first.status.success());
    let baseline = stdout_of(&first);
    let stored = std::fs::read_to_string(cache_file(dir.path())).unwrap();
    assert_eq!(stored.lines().count(), 7);
    assert!(stored.contains(r#"{"n":5,"k":1,"lambda":"3,2","eta":"-3"}"#));

    // warm read: same bytes out, file untouched
    let second = pfg()
        .args(spectrum_args)
        .env("PFG_CACHE_DIR", dir.path())
        .output()
        .unwrap();
    assert!(second.status.success());
    assert_eq!(stdout_of(&second), baseline);
    assert!(stderr_of(&second).is_empty());

    // a silently altered value must not reach the output
    let tampered = stored.replace(r#""lambda":"3,2","eta":"-3""#, r#""lambda":"3,2","eta":"-4""#);
    assert_ne!(tampered, stored);
    std::fs::write(cache_file(dir.path()), &tampered).unwrap();
    let third = pfg()
        .args(spectrum_args)
        .env("PFG_CACHE_DIR", dir.path())
        .output()
        .unwrap();
    assert!(third.status.success());
    assert_eq!(stdout_of(&third), baseline);
    assert!(stderr_of(&third).contains("warning"));
    assert_eq!(
        std::fs::read_to_string(cache_file(dir.path())).unwrap(),
        stored,
        "tampered cache was not rewritten"
    );

    // corrupt extra lines are skipped with a warning, output unchanged
    let mut with_garbage = stored.clone();
    with_garbage.push_str("not a record\n");
    std::fs::write(cache_file(dir.path()), &with_garbage).unwrap();
    let fourth = pfg()
        .args(spectrum_args)
        .env("PFG_CACHE_DIR", dir.path())
        .output()
        .unwrap();
    assert!(fourth.status.success());
    assert_eq!(stdout_of(&fourth), baseline);
    assert!(stderr_of(&fourth).contains("skipping line"));
}

#[test]
fn cache_output_matches_uncached_output() {
    let dir = tempfile::tempdir().unwrap();
    let uncached = stdout_of(
        &pfg()
            .args(["spectrum", "--n", "7", "--k", "3"])
            .output()
            .unwrap(),
    );
    for _ in 0..2 {
        let cached = pfg()
            .args(["spectrum", "--n", "7", "--k", "3"])
            .env("PFG_CACHE_DIR", dir.path())
            .output()
            .unwrap();
        assert!(cached.status.success());
        assert_eq!(stdout_of(&cached), uncached);
    }
}
