use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn ictool(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ictool"))
        .args(args)
        .env("ICTOOL_CACHE_DIR", cache)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn ok(cache: &Path, args: &[&str]) -> String {
    let o = ictool(cache, args);
    assert!(o.status.success(), "{args:?}: {}", stderr(&o));
    stdout(&o)
}

fn fixture(name: &str) -> String {
    format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn last_line(s: &str) -> &str {
    s.lines().last().unwrap_or("")
}

#[test]
fn ict_examples() {
    let dir = TempDir::new().unwrap();
    let c = dir.path();
    assert_eq!(last_line(&ok(c, &["ict", "--sym", "5"])), "ict: 14022");
    assert_eq!(last_line(&ok(c, &["ict", "--dihedral", "4"])), "ict: 6");
    let pq = ok(c, &["ict", "--pq", "2", "3"]);
    assert_eq!(last_line(&pq), "ict: 3");
    assert_eq!(last_line(&ok(c, &["ict", "--dihedral", "3"])), "ict: 3");
    assert!(pq.contains("method: cyclic_closed"));
}

#[test]
fn the_chosen_method_is_printed() {
    let dir = TempDir::new().unwrap();
    let c = dir.path();
    assert!(ok(c, &["ict", "--sym", "4"]).contains("method: sym_closed"));
    assert!(ok(c, &["ict", "--alt", "5"]).contains("method: alt_closed"));
    let fx = fixture("alt4.txt");
    let out = ok(c, &["ict", "--fixture", &fx]);
    assert!(out.contains("method: theorem6"));
    assert_eq!(last_line(&out), "ict: 7");
    let out = ok(c, &["ict", "--dihedral", "5", "--method", "oracle"]);
    assert!(out.contains("method: oracle"));
    assert_eq!(last_line(&out), "ict: 6");
}

#[test]
fn json_output_is_the_report_schema() {
    let dir = TempDir::new().unwrap();
    let out = ok(dir.path(), &["ict", "--sym", "4", "--format", "json", "--no-cache"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema"], "ict-report/1");
    assert_eq!(v["method"], "sym_closed");
    assert_eq!(v["value"], "44");
}

#[test]
fn cache_round_trip_is_byte_identical() {
    let dir = TempDir::new().unwrap();
    let c = dir.path();
    let first = ictool(c, &["ict", "--alt", "6"]);
    assert!(!stderr(&first).contains("cache: hit"));
    let second = ictool(c, &["ict", "--alt", "6"]);
    assert!(stderr(&second).contains("cache: hit"));
    assert_eq!(first.stdout, second.stdout);
    let fresh = ictool(c, &["ict", "--alt", "6", "--no-cache"]);
    assert_eq!(first.stdout, fresh.stdout);
    assert_eq!(last_line(&stdout(&first)), "ict: 6483015");
}

#[test]
fn stale_and_corrupt_caches_recompute() {
    let dir = TempDir::new().unwrap();
    let c = dir.path();
    let reference = ok(c, &["ict", "--dihedral", "6"]);
    let file = c.join("reports.json");
    let text = fs::read_to_string(&file).unwrap();
    let version = format!("{}+ict-report/1", env!("CARGO_PKG_VERSION"));
    fs::write(&file, text.replace(&version, "0.0.0+old")).unwrap();
    let o = ictool(c, &["ict", "--dihedral", "6"]);
    assert!(stderr(&o).contains("stale"));
    assert!(!stderr(&o).contains("cache: hit"));
    assert_eq!(stdout(&o), reference);

    fs::write(&file, "{ not json").unwrap();
    let o = ictool(c, &["ict", "--dihedral", "6"]);
    assert!(o.status.success());
    assert!(stderr(&o).contains("warning: ignoring corrupt cache"));
    assert_eq!(stdout(&o), reference);
    assert!(stderr(&ictool(c, &["ict", "--dihedral", "6"])).contains("cache: hit"));
}

#[test]
fn fixture_cache_key_ignores_comments() {
    let dir = TempDir::new().unwrap();
    let c = dir.path();
    let plain = c.join("a.txt");
    let commented = c.join("b.txt");
    fs::write(&plain, "name d4\ndegree 4\ngen (1,2,3,4)\ngen (2,4)\n").unwrap();
    fs::write(&commented, "# same group\nname d4\n\ndegree 4\ngen (1,2,3,4)   \ngen (2,4)\n").unwrap();
    ok(c, &["ict", "--fixture", plain.to_str().unwrap()]);
    let o = ictool(c, &["ict", "--fixture", commented.to_str().unwrap()]);
    assert!(stderr(&o).contains("cache: hit"));
    assert_eq!(last_line(&stdout(&o)), "ict: 6");
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let c = dir.path();
    let code = |args: &[&str]| ictool(c, args).status.code().unwrap();
    assert_eq!(code(&["ict", "--sym", "5", "--method", "alt"]), 2);
    assert_eq!(code(&["ict", "--sym", "4", "--method", "cyclic"]), 2);
    assert_eq!(code(&["ict", "--sym", "4", "--dihedral", "4"]), 2);
    assert_eq!(code(&["ict", "--dihedral", "2"]), 2);
    let o = ictool(c, &["ict", "--sym", "6", "--method", "oracle", "--max-transversals", "100", "--no-cache"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("max_transversals"));
    let o = ictool(c, &["ict", "--fixture", &fixture("alt4.txt"), "--method", "cyclic"]);
    assert_eq!(o.status.code(), Some(4));
    assert!(stderr(&o).contains("no cyclic normal transversal"));
}

#[test]
fn crosscheck_examples() {
    let dir = TempDir::new().unwrap();
    let c = dir.path();
    let alt5 = ok(c, &["crosscheck", "--alt", "5"]);
    for m in ["alt_closed", "theorem6", "oracle_conjugation", "oracle_table_iso", "oracle_right"] {
        let line = alt5.lines().find(|l| l.starts_with(m)).unwrap();
        assert!(line.contains(" 897 "), "{line}");
    }
    let d7 = ok(c, &["crosscheck", "--dihedral", "7", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&d7).unwrap();
    let value = |m: &str| {
        v["rows"].as_array().unwrap().iter().find(|r| r["method"] == m).unwrap()["value"].clone()
    };
    for m in ["cyclic_closed", "theorem6", "oracle_conjugation", "oracle_table_iso"] {
        assert_eq!(value(m), "14", "{m}");
    }
    assert_eq!(v["oracle_partitions_agree"], true);
    let s3 = ok(c, &["crosscheck", "--sym", "3"]);
    let census = s3.lines().find(|l| l.starts_with("census")).unwrap();
    assert!(census.contains(" 3 "));
    assert!(!s3.contains(" x "), "matrix has no disagreement");
}

#[test]
fn classes_dumps_one_block_per_class() {
    let dir = TempDir::new().unwrap();
    let c = dir.path();
    let count = |fam: &str| {
        let out = ok(c, &["classes", &format!("--{fam}"), "4"]);
        let sizes: u64 = out
            .lines()
            .filter_map(|l| l.strip_prefix("size "))
            .map(|s| s.parse::<u64>().unwrap())
            .sum();
        (out.lines().filter(|l| l.starts_with("class ")).count(), sizes)
    };
    assert_eq!(count("dihedral"), (6, 8));
    assert_eq!(count("sym"), (44, 216));
    assert_eq!(count("alt"), (7, 27));
    let path = c.join("dump.txt");
    let summary = ok(c, &["classes", "--sym", "4", "--output", path.to_str().unwrap()]);
    assert_eq!(summary.trim(), "44 classes over 216 transversals");
    assert_eq!(fs::read_to_string(&path).unwrap(), ok(c, &["classes", "--sym", "4"]));
}

#[test]
fn sweep_checks_the_facts() {
    let dir = TempDir::new().unwrap();
    let c = dir.path();
    let out = ok(c, &["sweep", "--dihedral", "3..10"]);
    let rows: Vec<&str> = out.lines().skip(1).collect();
    assert_eq!(rows.len(), 8);
    for r in &rows {
        let ict = r.split_whitespace().nth(3).unwrap();
        assert!(ict != "2" && ict != "4", "{r}");
    }
    let json = ok(c, &["sweep", "--all", "--format", "json"]);
    let rows: Vec<serde_json::Value> = serde_json::from_str(&json).unwrap();
    for r in &rows {
        if r["normal"] == true {
            assert_eq!(r["ict"], "1", "{r}");
        }
        if r["index"] == 3 {
            assert_eq!(r["ict"], "3", "{r}");
        }
    }
    assert!(rows.iter().any(|r| r["pair"] == "fixture:sym3_over_alt3" && r["ict"] == "1"));
    assert!(rows.iter().any(|r| r["pair"] == "fixture:order18" && r["ict"] == "3"));
    let fx = fixture("order18.txt");
    let out = ok(c, &["sweep", "--pq", "2,3", "--sym", "3", "--fixture", &fx]);
    assert_eq!(out.lines().skip(1).filter(|l| l.split_whitespace().nth(3) == Some("3")).count(), 3);
    assert_eq!(ictool(c, &["sweep"]).status.code(), Some(2));
}

#[test]
fn census_summary() {
    let dir = TempDir::new().unwrap();
    let out = ok(dir.path(), &["census", "3"]);
    assert!(out.starts_with("order 3: 3 classes among 4 left loop tables"));
    let json = ok(dir.path(), &["census", "4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["class_count"], "44");
    assert_eq!(v["total"], "216");
}

#[test]
fn identical_jobs_give_identical_output() {
    let dir = TempDir::new().unwrap();
    let c = dir.path();
    for args in [&["crosscheck", "--dihedral", "6"][..], &["classes", "--alt", "4"], &["sweep", "--all"]] {
        assert_eq!(ok(c, args), ok(c, &[&["--jobs", "1"][..], args].concat()));
    }
}
