//! End-to-end tests driving the compiled binary: exit codes, output
//! schemas, determinism, and the budget ladder.

use std::io::Write as _;
use std::process::{Command, Output, Stdio};

use beth_core::{to_graph6, Graph};
use serde_json::Value;

fn beth(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_beth"))
        .args(args)
        .env_remove("BETH_BUDGET")
        .output()
        .expect("binary runs")
}

fn beth_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_beth"))
        .args(args)
        .env_remove("BETH_BUDGET")
        .env(key, value)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is utf8")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr is utf8")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

fn json(out: &Output) -> Value {
    serde_json::from_str(&stdout(out)).expect("stdout is json")
}

fn octahedron_g6() -> String {
    to_graph6(&Graph::octahedron())
}

#[test]
fn report_octahedron_golden_values() {
    let out = beth(&["report", "--graph6", &octahedron_g6()]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let r = json(&out);
    assert_eq!(r["c"], 11);
    assert_eq!(r["s"], 6);
    assert_eq!((r["beth1"].as_i64(), r["beth2"].as_i64(), r["beth3"].as_i64()),
        (Some(6), Some(5), Some(1)));
    assert_eq!((r["bound1"].as_u64(), r["bound2"].as_u64(), r["bound3"].as_u64()),
        (Some(5), Some(5), Some(5)));
    assert_eq!((r["chi"].clone(), r["hadwiger"].clone(), r["planar"].clone()),
        (Value::from(3), Value::from(4), Value::from(true)));
    assert_eq!(r["omitted"].as_array().map(Vec::len), Some(0));
    for (id, outcome) in r["checks"].as_object().expect("checks object") {
        assert_ne!(outcome["status"], "fail", "{id} failed: {}", outcome["detail"]);
    }
}

#[test]
fn report_tree_from_edge_list_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("tree.txt");
    std::fs::write(&path, "# a path on four vertices\n4\n0 1\n1 2\n2 3\n").unwrap();
    let out = beth(&["report", "--edge-list", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let r = json(&out);
    assert_eq!(r["beth1"].as_i64(), Some(-1));
    assert_eq!(r["bound1"].as_u64(), Some(2));
    assert_eq!(r["chi"].as_u64(), Some(2));
    assert_eq!(r["hadwiger"].as_u64(), Some(2));
}

#[test]
fn report_k8_without_oracles() {
    let g6 = to_graph6(&Graph::complete(8));
    let out = beth(&["report", "--graph6", &g6, "--no-oracles"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let r = json(&out);
    assert_eq!(r["beth3"].as_i64(), Some(34));
    assert_eq!(r["beth2"].as_i64(), Some(36));
    assert!(r["chi"].is_null(), "oracles were disabled");
    assert!(r["hadwiger"].is_null());
    assert_eq!(r["omitted"].as_array().map(Vec::len), Some(0), "nothing omitted, just disabled");
    for (_, outcome) in r["checks"].as_object().unwrap() {
        assert_eq!(outcome["status"], "skipped-precondition");
    }
}

#[test]
fn report_reads_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_beth"))
        .args(["report"])
        .env_remove("BETH_BUDGET")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(octahedron_g6().as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    assert_eq!(json(&out)["c"], 11);
}

#[test]
fn report_parse_error_exits_2() {
    let out = beth(&["report", "--graph6", "this is not graph6"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("parse"), "stderr: {}", stderr(&out));
    assert!(stdout(&out).is_empty());
}

#[test]
fn report_disconnected_exits_2() {
    // "A?" is two vertices and no edge.
    let out = beth(&["report", "--graph6", "A?"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("not connected"), "stderr: {}", stderr(&out));
}

#[test]
fn report_budget_exhaustion_exits_3_with_partial_output() {
    let out = beth(&["report", "--graph6", &octahedron_g6(), "--budget", "1"]);
    assert_eq!(code(&out), 3, "stderr: {}", stderr(&out));
    let r = json(&out);
    // The structural fields survive; only the oracle fields are absent.
    assert_eq!(r["c"], 11);
    assert!(r["chi"].is_null());
    assert!(!r["omitted"].as_array().unwrap().is_empty());
    assert!(stderr(&out).contains("partial"));
}

#[test]
fn budget_env_var_applies_and_flag_wins() {
    let g6 = octahedron_g6();
    let env_only = beth_env(&["report", "--graph6", &g6], "BETH_BUDGET", "1");
    assert_eq!(code(&env_only), 3, "env budget must starve the oracles");
    let flag_wins = beth_env(
        &["report", "--graph6", &g6, "--budget", "50000000"],
        "BETH_BUDGET",
        "1",
    );
    assert_eq!(code(&flag_wins), 0, "flag must override the environment");
    let bad_env = beth_env(&["report", "--graph6", &g6], "BETH_BUDGET", "lots");
    assert_eq!(code(&bad_env), 2);
}

#[test]
fn report_csv_agrees_with_json() {
    let g6 = octahedron_g6();
    let js = json(&beth(&["report", "--graph6", &g6]));
    let csv_out = beth(&["report", "--graph6", &g6, "--format", "csv"]);
    assert_eq!(code(&csv_out), 0);
    let text = stdout(&csv_out);
    let mut lines = text.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    let row: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(header.len(), row.len());
    let field = |name: &str| -> &str {
        let i = header.iter().position(|h| *h == name).expect("column present");
        row[i]
    };
    assert_eq!(field("graph6"), g6);
    assert_eq!(field("c"), js["c"].to_string());
    assert_eq!(field("s"), js["s"].to_string());
    assert_eq!(field("chi"), js["chi"].to_string());
    assert_eq!(field("hadwiger"), js["hadwiger"].to_string());
    assert_eq!(field("threshold_C"), js["checks"]["threshold_C"]["status"].as_str().unwrap());
}

#[test]
fn suite_seeded_run_is_deterministic_and_clean() {
    let args = ["suite", "--generator", "n=9,p=0.4,count=40,seed=7"];
    let first = beth(&args);
    let second = beth(&args);
    assert_eq!(code(&first), 0, "stderr: {}", stderr(&first));
    assert_eq!(first.stdout, second.stdout, "byte-identical reruns");
    let results = json(&first);
    let list = results.as_array().unwrap();
    assert_eq!(list.len(), 40 * 19, "every check on every graph");
    assert!(list.iter().all(|r| r["status"] != "fail"));
    assert!(stderr(&first).contains("0 fail"));
}

#[test]
fn suite_budget_one_skips_every_oracle_check() {
    let oracle_checks = [
        "compression-monotonicity-b2",
        "compression-monotonicity-b3",
        "solids-equal-surfaces",
        "chi-bounds",
        "h-bounds",
        "thresholds",
        "hadwiger-class-ops",
        "equality-implies-hadwiger",
        "planar-corollaries",
        "h-le-longest-cycle",
    ];
    let out = beth(&[
        "suite",
        "--generator",
        "n=6,p=0.5,count=3,seed=1",
        "--budget",
        "1",
    ]);
    assert_eq!(code(&out), 0, "skips are not failures");
    for r in json(&out).as_array().unwrap() {
        let check = r["check"].as_str().unwrap();
        if oracle_checks.contains(&check) {
            assert_eq!(r["status"], "skipped-budget", "{check} must starve");
        }
        assert_ne!(
            (check, r["status"].as_str().unwrap()),
            (check, "fail"),
            "nothing may fail under starvation"
        );
        if oracle_checks.contains(&check) {
            assert_ne!(r["status"], "pass", "{check} must not claim pass");
        }
    }
}

#[test]
fn suite_unknown_check_id_exits_2() {
    let out = beth(&["suite", "--generator", "n=5,p=0.5,count=1,seed=1", "--checks", "bogus-check"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("unknown check id"));
}

#[test]
fn suite_check_filter_limits_the_run() {
    let out = beth(&[
        "suite",
        "--generator",
        "n=6,p=0.5,count=2,seed=5",
        "--checks",
        "census-identity,cone-C",
    ]);
    assert_eq!(code(&out), 0);
    let results = json(&out);
    let list = results.as_array().unwrap();
    assert_eq!(list.len(), 4);
    assert!(list
        .iter()
        .all(|r| r["check"] == "census-identity" || r["check"] == "cone-C"));
}

#[test]
fn suite_reads_a_graph6_corpus_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("corpus.g6");
    let body = format!(
        "# two classics\n{}\n{}\n",
        octahedron_g6(),
        to_graph6(&Graph::petersen())
    );
    std::fs::write(&path, body).unwrap();
    let out = beth(&["suite", "--file", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    assert_eq!(json(&out).as_array().unwrap().len(), 2 * 19);

    let bad = dir.path().join("bad.g6");
    std::fs::write(&bad, "A?\n").unwrap();
    let out = beth(&["suite", "--file", bad.to_str().unwrap()]);
    assert_eq!(code(&out), 2, "disconnected corpus entry is a config error");
}

#[test]
fn suite_csv_and_json_agree_field_for_field() {
    let js = json(&beth(&["suite", "--generator", "n=6,p=0.6,count=3,seed=11"]));
    let csv_out = beth(&[
        "suite",
        "--generator",
        "n=6,p=0.6,count=3,seed=11",
        "--format",
        "csv",
    ]);
    let text = stdout(&csv_out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("check,graph6,status,detail"));
    let rows: Vec<&str> = lines.collect();
    let list = js.as_array().unwrap();
    assert_eq!(rows.len(), list.len());
    for (row, r) in rows.iter().zip(list) {
        let mut parts = row.splitn(3, ',');
        assert_eq!(parts.next().unwrap(), r["check"].as_str().unwrap());
        assert_eq!(parts.next().unwrap(), r["graph6"].as_str().unwrap());
        let rest = parts.next().unwrap();
        assert!(rest.starts_with(r["status"].as_str().unwrap()));
    }
}

#[test]
fn gen_emits_header_and_is_deterministic() {
    let args = ["gen", "n=6,p=1,count=3,seed=7"];
    let first = beth(&args);
    let second = beth(&args);
    assert_eq!(code(&first), 0);
    assert_eq!(first.stdout, second.stdout, "fixed seed, identical bytes");
    let text = stdout(&first);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "# beth gen n=6,p=1,count=3,seed=7");
    let k6 = to_graph6(&Graph::complete(6));
    assert_eq!(lines[1..], vec![k6.as_str(), k6.as_str(), k6.as_str()][..]);
}

#[test]
fn gen_count_zero_emits_header_only() {
    let out = beth(&["gen", "n=6,p=0.5,count=0,seed=3"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "# beth gen n=6,p=0.5,count=0,seed=3\n");
}

#[test]
fn gen_seed_flag_overrides_spec() {
    let via_flag = beth(&["gen", "n=6,p=0.5,count=4,seed=1", "--seed", "99"]);
    let via_spec = beth(&["gen", "n=6,p=0.5,count=4,seed=99"]);
    assert_eq!(stdout(&via_flag), stdout(&via_spec));
}

#[test]
fn gen_matches_suite_generator_corpus() {
    // The suite's generator and gen must sample identical graphs so a
    // generated file replays to the same results.
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("gen.g6");
    let gen = beth(&["gen", "n=7,p=0.5,count=6,seed=21", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&gen), 0);
    let from_file = beth(&["suite", "--file", path.to_str().unwrap()]);
    let from_spec = beth(&["suite", "--generator", "n=7,p=0.5,count=6,seed=21"]);
    assert_eq!(stdout(&from_file), stdout(&from_spec));
}

#[test]
fn gen_bad_spec_exits_2() {
    for spec in ["n=6,p=0.5,count=1", "n=6,p=2,count=1,seed=1", "n=6,q=1,count=1,seed=1"] {
        let out = beth(&["gen", spec]);
        assert_eq!(code(&out), 2, "spec {spec:?} must be rejected");
    }
}
