use std::process::{Command, Output};

use ancell_core::export::Listing;
use ancell_core::{rat, Limits, RatVec};

fn ancell(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ancell"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn info_counts() {
    let o = ancell(&["info", "3"]);
    assert_eq!(code(&o), 0);
    let s = stdout(&o);
    assert!(s.contains("vertices 14\n"));
    assert!(s.contains("facets 12\n"));
    assert!(s.contains("volume^2 4\n"));

    let o = ancell(&["info", "1", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["vertex_count"], 2);
    assert_eq!(v["facet_count"], 2);
    assert_eq!(v["volume_sq"], "2");

    assert_eq!(code(&ancell(&["info", "0"])), 2);
    assert_eq!(code(&ancell(&["info"])), 2);
}

#[test]
fn enumerate_vertices_json_round_trips() {
    let o = ancell(&["enumerate", "vertices", "2", "--json"]);
    assert_eq!(code(&o), 0);
    let s = stdout(&o);
    assert!(s.contains(r#"["2/3","-1/3","-1/3"]"#));
    let parsed = Listing::from_json(s.trim()).unwrap();
    assert_eq!(parsed, Listing::vertices(2, &Limits::default()).unwrap());
    assert_eq!(parsed.items.len(), 6);
}

#[test]
fn enumerate_other_kinds() {
    let o = ancell(&["enumerate", "rhombi", "3"]);
    let s = stdout(&o);
    assert_eq!(s.lines().count(), 4);
    assert!(s.lines().nth(3).unwrap().starts_with("R_4: (0, 0, 0, 0) + span{1,2,3}"));

    let o = ancell(&["--json", "enumerate", "faces", "1", "3"]);
    let parsed = Listing::from_json(stdout(&o).trim()).unwrap();
    assert_eq!(parsed.items.len(), 24);

    let o = ancell(&["enumerate", "facets", "3", "--json"]);
    let parsed = Listing::from_json(stdout(&o).trim()).unwrap();
    assert_eq!(parsed, Listing::facets(3, &Limits::default()).unwrap());

    assert_eq!(code(&ancell(&["enumerate", "simplices", "8"])), 3);
    assert_eq!(code(&ancell(&["enumerate", "faces", "3", "3"])), 2);
}

#[test]
fn locate_reports() {
    let o = ancell(&["locate", "2", "1/2", "-1/2", "0"]);
    assert_eq!(code(&o), 0);
    let s = stdout(&o);
    assert!(s.contains("inside true\n"));
    assert!(s.contains("rhombus 2\n"));

    let o = ancell(&["locate", "2", "2/3", "-1/3", "-1/3", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["boundary"], true);
    assert_eq!(v["inside"], true);

    assert_eq!(code(&ancell(&["locate", "2", "1", "1", "1"])), 2);
    let o = ancell(&["locate", "2", "1", "1", "1", "--project"]);
    assert_eq!(code(&o), 0);
    let s = stdout(&o);
    assert!(s.contains("point (0, 0, 0)\n") && s.contains("inside true\n"));

    let o = ancell(&["locate", "2", "2", "-1", "-1"]);
    assert!(stdout(&o).contains("inside false\n"));
    assert_eq!(code(&ancell(&["locate", "2", "1/2", "-1/2"])), 2);
    assert_eq!(code(&ancell(&["locate", "2", "x", "0", "0"])), 2);
}

#[test]
fn verify_suites() {
    let o = ancell(&["verify", "3", "--suite", "all"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAIL "));

    let o = ancell(&["verify", "4", "--suite", "section"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("EXPECTED-FAIL-OF-EQUALITY"));

    let o = ancell(&["verify", "9", "--suite", "decomp"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("SKIPPED"));
}

#[test]
fn verify_output_is_deterministic() {
    let a = ancell(&["verify", "3", "--seed", "42", "--json"]);
    let b = ancell(&["verify", "3", "--seed", "42", "--json"]);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(v["passed"], true);
}

#[test]
fn mesh_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rd.off");
    let o = ancell(&["mesh", "3", "--frame", "projected", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("OFF\n14 12 24\n"));
    let faces: Vec<&str> = text.lines().skip(2 + 14).collect();
    assert_eq!(faces.len(), 12);
    assert!(faces.iter().all(|f| f.starts_with("4 ")));

    let again = ancell(&["mesh", "3", "--frame", "projected"]);
    assert_eq!(stdout(&again), text);

    let hex = stdout(&ancell(&["mesh", "2"]));
    assert!(hex.starts_with("OFF\n6 1 6\n"));
    assert!(hex.lines().last().unwrap().starts_with("6 "));

    assert_eq!(code(&ancell(&["mesh", "4"])), 2);
    let bad = dir.path().join("missing").join("x.off");
    assert_eq!(code(&ancell(&["mesh", "2", "--out", bad.to_str().unwrap()])), 4);
}

#[test]
fn section_command() {
    let o = ancell(&["section", "3", "--json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["equal"], true);
    assert_eq!(v["clearance"], "0");

    let o = ancell(&["section", "4", "--json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["equal"], false);
    assert_eq!(v["neighbor_rank"], 4);
    let w: RatVec = serde_json::from_value(v["witness"].clone()).unwrap();
    assert_eq!(w.sum(), rat(-1, 2));

    assert_eq!(code(&ancell(&["section", "5"])), 2);
}
