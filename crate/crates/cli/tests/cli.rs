use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn ct(args: &[&str], cache: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_ct"));
    cmd.args(args);
    match cache {
        Some(dir) => cmd.env("CT_CACHE_DIR", dir),
        None => cmd.env_remove("CT_CACHE_DIR"),
    };
    cmd.output().expect("ct runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn enumerate_counts_and_codes() {
    let o = ct(&["enumerate", "--n", "10"], None);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "75\n");
    let o = ct(&["enumerate", "--n", "7", "--segments", "3", "--count"], None);
    assert_eq!(stdout(&o), "3\n");
    let o = ct(&["enumerate", "--n", "8", "--codes"], None);
    let codes: Vec<_> = stdout(&o).lines().map(str::to_owned).collect();
    assert_eq!(codes.len(), 18);
    let mut sorted = codes.clone();
    sorted.sort_by(|a, b| b.cmp(a));
    sorted.dedup();
    assert_eq!(sorted.len(), 18);
    let o = ct(&["enumerate", "--n", "5", "--edgelists"], None);
    assert_eq!(stdout(&o).split("\n\n").count(), 3);
}

#[test]
fn bounds_json() {
    let o = ct(&["bounds", "--family", "branching", "--n", "13", "--p", "5", "--index", "m2", "--json"], None);
    assert!(o.status.success());
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["results"][0]["value"], 72);
    assert_eq!(v["results"][0]["index"], "M2");
    let o = ct(&["bounds", "--family", "segments", "--n", "11", "--p", "6", "--index", "both", "--json"], None);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["results"][1]["value"], 53);
}

#[test]
fn witness_then_moves() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("w.txt");
    let o = ct(&["witness", "--family", "branching", "--n", "9", "--p", "1", "--out", out.to_str().unwrap()], None);
    assert!(o.status.success());
    let text = fs::read_to_string(&out).unwrap();
    assert!(text.starts_with("9\n") && text.ends_with('\n'));
    assert_eq!(text.lines().count(), 9);
    let o = ct(&["moves", "--in", out.to_str().unwrap(), "--family", "branching"], None);
    assert_eq!(stdout(&o), "no moves\n");

    // Two degree-3 vertices joined by an internal path of length 3.
    let host = dir.path().join("h.txt");
    fs::write(&host, "8\n0 1\n0 2\n0 3\n3 4\n4 5\n5 6\n5 7\n").unwrap();
    let o = ct(&["moves", "--in", host.to_str().unwrap(), "--family", "segments"], None);
    assert!(o.status.success());
    let listing = stdout(&o);
    assert!(listing.starts_with("0: "), "{listing}");
    let o = ct(&["moves", "--in", host.to_str().unwrap(), "--family", "segments", "--apply", "0"], None);
    assert!(o.status.success());
    let applied = stdout(&o);
    assert!(applied.contains("before:\n8\n") && applied.contains("after:\n8\n"), "{applied}");
    let o = ct(&["moves", "--in", host.to_str().unwrap(), "--family", "segments", "--apply", "999"], None);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn usage_and_input_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "3\n0 1\n1 1\n").unwrap();
    let cases: [&[&str]; 6] = [
        &["bounds", "--family", "segments", "--n", "10", "--p", "2"],
        &["enumerate", "--n", "8", "--segments", "3", "--branching", "1"],
        &["verify", "--n-min", "4", "--n-max", "15"],
        &["verify", "--n-min", "9", "--n-max", "4", "--no-cache"],
        &["moves", "--in", bad.to_str().unwrap(), "--family", "segments"],
        &["moves", "--in", "/nonexistent/file", "--family", "segments"],
    ];
    for args in cases {
        assert_eq!(ct(args, None).status.code(), Some(2), "{args:?}");
    }
}

fn without_timing(report: &[u8]) -> Value {
    let mut v: Value = serde_json::from_slice(report).unwrap();
    for r in v["records"].as_array_mut().unwrap() {
        r.as_object_mut().unwrap().remove("elapsed_ms");
    }
    v["config"].as_object_mut().unwrap().remove("cache");
    v
}

#[test]
fn verify_report_is_deterministic_and_cache_independent() {
    let cache = tempfile::tempdir().unwrap();
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str, extra: &[&str], cache_dir: Option<&Path>| {
        let path = dir.path().join(name);
        let mut args = vec!["verify", "--family", "both", "--n-min", "4", "--n-max", "10", "--index", "both"];
        args.extend(["--report", path.to_str().unwrap(), "--format", "json"]);
        args.extend(extra);
        let o = ct(&args, cache_dir);
        assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
        fs::read(path).unwrap()
    };
    let cold = run("cold.json", &[], Some(cache.path()));
    assert!(fs::read_dir(cache.path()).unwrap().count() > 0);
    let warm = run("warm.json", &["--jobs", "2"], Some(cache.path()));
    let uncached = run("none.json", &["--no-cache"], None);
    let v = without_timing(&cold);
    assert_eq!(v["summary"]["fail"], 0);
    assert!(v["summary"]["pass"].as_u64().unwrap() > 0);
    assert_eq!(without_timing(&warm)["records"], v["records"]);
    assert_eq!(without_timing(&uncached)["records"], v["records"]);
    assert_eq!(without_timing(&uncached)["findings"], v["findings"]);
}

#[test]
fn verify_csv_and_text() {
    let o =
        ct(&["verify", "--family", "segments", "--n-min", "4", "--n-max", "6", "--format", "csv", "--no-cache"], None);
    assert!(o.status.success());
    let csv = stdout(&o);
    assert!(csv.lines().next().unwrap().starts_with("family,n,p,index"), "{csv}");
    let o = ct(&["verify", "--family", "branching", "--n-min", "4", "--n-max", "6", "--no-cache"], None);
    assert!(o.status.success());
    assert!(stdout(&o).contains("fail"));
}
