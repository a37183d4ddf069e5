use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn exen(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_exen")).args(args).env_remove("EXEN_THREADS").output().expect("exen runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn checks<'a>(doc: &'a Value, id: &str) -> Vec<&'a Value> {
    doc["bound_checks"].as_array().unwrap().iter().filter(|c| c["bound_id"] == id).collect()
}

#[test]
fn path_three_extended_energy() {
    let out = exen(&["compute", "--family", "path:3"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    let e = doc["extended_energy"].as_f64().unwrap();
    assert!((e - 2.5 * 2f64.sqrt()).abs() < 1e-9);
    assert_eq!(doc["indexing"], "0-based");
    assert_eq!(doc["input"]["graph6"], "Bg");
    assert_eq!(doc["degree_profile"]["delta_max"], 2);
}

#[test]
fn k2_ordinary_energy() {
    let doc = json(&exen(&["compute", "--g6", "A_"]));
    assert_eq!(doc["ordinary_energy"].as_f64(), Some(2.0));
    assert_eq!(doc["order"], 2);
}

#[test]
fn star_centre_attains_vertex_bound() {
    let doc = json(&exen(&["compute", "--family", "star:4", "--vertex", "0"]));
    let star = checks(&doc, "vertex_upper_star");
    assert_eq!(star.len(), 1);
    assert_eq!(star[0]["vertex"], 0);
    assert_eq!(star[0]["status"], "equality");
    assert!(doc["bound_checks"].as_array().unwrap().iter().all(|c| c["vertex"].is_null() || c["vertex"] == 0));
}

#[test]
fn compute_reports_pairs_unless_disabled() {
    let with = json(&exen(&["compute", "--family", "cycle:5"]));
    assert_eq!(checks(&with, "ng_radius_lower").len(), 1);
    let without = json(&exen(&["compute", "--family", "cycle:5", "--no-pairs"]));
    assert!(checks(&without, "ng_radius_lower").is_empty());
}

#[test]
fn compute_bound_filter() {
    let doc = json(&exen(&["compute", "--family", "path:4", "--bounds", "sandwich_left,das_i"]));
    let ids: Vec<_> = doc["bound_checks"].as_array().unwrap().iter().map(|c| c["bound_id"].as_str().unwrap()).collect();
    assert_eq!(ids, ["sandwich_left", "das_i"]);
}

#[test]
fn compute_edge_list() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c4.txt");
    std::fs::write(&path, "4 4\n0 1\n1 2\n2 3\n3 0\n").unwrap();
    let doc = json(&exen(&["compute", "--edgelist", path.to_str().unwrap()]));
    assert!((doc["extended_energy"].as_f64().unwrap() - 4.0).abs() < 1e-9);
    assert_eq!(doc["input"]["kind"], "edgelist");
}

#[test]
fn exhaustive_five_with_pairs_passes() {
    let out = exen(&["verify", "--exhaustive", "5", "--bounds", "all", "--pairs"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let sweep = &json(&out)["sweep"];
    assert_eq!(sweep["graphs_processed"], 1024 + 64 + 8 + 2 + 1);
    assert_eq!(sweep["violated_total"], 0);
    assert_eq!(sweep["passed"], true);
    assert!(sweep.get("runtime_seconds").is_none());
}

#[test]
fn das_i_witnesses_on_three_vertices() {
    let out = exen(&["verify", "--exhaustive", "3", "--bounds", "das_i"]);
    let doc = json(&out);
    let b = &doc["sweep"]["bounds"][0];
    assert_eq!(b["bound_id"], "das_i");
    let g6: Vec<_> =
        b["equality_witnesses"].as_array().unwrap().iter().map(|w| w["graph6"].as_str().unwrap()).collect();
    assert!(g6.contains(&"B?"), "{g6:?}");
}

#[test]
fn corpus_tallies() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("graphs.g6");
    std::fs::write(&path, "# small graphs\nA_\nBg\nC~\n").unwrap();
    let doc = json(&exen(&["verify", "--corpus", path.to_str().unwrap(), "--bounds", "sandwich_left"]));
    let t = &doc["sweep"]["bounds"][0]["tallies"];
    assert_eq!(t["equality"], 2);
    assert_eq!(t["holds"], 1);
}

#[test]
fn sweep_writes_both_files() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("results");
    let out =
        exen(&["sweep", "--exhaustive", "4", "--bounds", "dominance:*", "--pairs", "--out", out_dir.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let summary: Value = serde_json::from_str(&std::fs::read_to_string(out_dir.join("summary.json")).unwrap()).unwrap();
    let bounds = summary["sweep"]["bounds"].as_array().unwrap();
    assert_eq!(bounds.len(), 5);
    for b in bounds {
        if let Some(w) = b["worst_slack"].as_f64() {
            assert!(w >= -1e-9, "{}", b["bound_id"]);
        }
    }
    let csv = std::fs::read_to_string(out_dir.join("slacks.csv")).unwrap();
    assert_eq!(csv.lines().count(), 6);
    assert!(csv.starts_with("bound_id,worst_slack,witness_g6,equality_count\n"));
}

fn sweep_bytes(args: &[&str], dir: &Path) -> (Vec<u8>, Vec<u8>) {
    let mut full = args.to_vec();
    full.extend(["--out", dir.to_str().unwrap()]);
    assert!(exen(&full).status.success());
    (std::fs::read(dir.join("summary.json")).unwrap(), std::fs::read(dir.join("slacks.csv")).unwrap())
}

#[test]
fn random_sweep_is_reproducible_and_seeded() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["sweep", "--random", "--n", "12", "--p", "0.5", "--samples", "20", "--seed", "7"];
    let a = sweep_bytes(&args, dir.path());
    let b = sweep_bytes(&args, dir.path());
    assert_eq!(a, b);
    let other = ["sweep", "--random", "--n", "12", "--p", "0.5", "--samples", "20", "--seed", "8"];
    assert_ne!(sweep_bytes(&other, dir.path()).0, a.0);
}

#[test]
fn thread_count_does_not_change_output() {
    let dir = tempfile::tempdir().unwrap();
    let one = sweep_bytes(&["sweep", "--exhaustive", "4", "--pairs", "--threads", "1"], dir.path());
    let four = sweep_bytes(&["sweep", "--exhaustive", "4", "--pairs", "--threads", "4"], dir.path());
    assert_eq!(one, four);
}

#[test]
fn catalog_text_and_json_agree() {
    let text = String::from_utf8(exen(&["catalog"]).stdout).unwrap();
    let entries = json(&exen(&["catalog", "--json"]));
    let entries = entries.as_array().unwrap();
    assert!(text.ends_with(&format!("{} bounds\n", entries.len())));
    let n_only = entries.iter().find(|e| e["id"] == "n_only_ex").unwrap();
    assert_eq!(n_only["anchor"], "Theorem ub5ex");
    let radius = entries.iter().find(|e| e["id"] == "ng_radius_lower").unwrap();
    assert_eq!(radius["scope"], "graph-pair");
    assert!(radius["precondition"].as_str().unwrap().contains("connected"));
}

#[test]
fn identities_pass() {
    let out = exen(&["identities"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["identities"]["passed"], true);
}

#[test]
fn input_errors_exit_two() {
    for args in [
        &["compute", "--g6", "!!"][..],
        &["compute", "--g6", "A_", "--vertex", "2"],
        &["compute", "--family", "paley:9"],
        &["compute", "--edgelist", "/nonexistent/graph.txt"],
        &["compute", "--family", "path:3", "--bounds", "no_such_bound"],
        &["compute", "--family", "path:3", "--tol-eq=-1"],
        &["compute", "--family", "path:3", "--tol-viol", "nan"],
        &["verify", "--exhaustive", "7"],
        &["verify", "--exhaustive", "8", "--extended"],
        &["verify", "--random", "--n", "ten"],
        &["verify", "--corpus", "/nonexistent/graphs.g6"],
    ] {
        let out = exen(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
        let err = String::from_utf8_lossy(&out.stderr);
        assert!(err.starts_with("exen: ") || err.starts_with("error: "), "{err}");
    }
}
