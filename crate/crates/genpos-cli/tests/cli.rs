//! End-to-end runs of the binary.

use std::process::{Command, Output};

fn genpos(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_genpos"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn compute_cycle_five() {
    let out = genpos(&["compute", "--family", "cycle", "5"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("prism gp: 6"), "{text}");
    assert!(text.contains("check attains-upper: EXACT 6"), "{text}");
}

#[test]
fn compute_snake_five() {
    let out = genpos(&["compute", "--family", "gk", "5"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("prism gp: 11"));
}

#[test]
fn verify_trees_confirms_everything() {
    let out = genpos(&[
        "verify",
        "cor38",
        "--tree-n",
        "4..6",
        "--samples",
        "10",
        "--seed",
        "1",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "id\tinstance\ttheorem\tpredicted\texact\tverdict\tnodes\tmillis"
    );
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 30);
    assert!(rows.iter().all(|r| r.contains("CONFIRMED")));
}

#[test]
fn verify_is_reproducible() {
    let args = [
        "verify",
        "bounds",
        "--gnp-n",
        "4..6",
        "--samples",
        "6",
        "--seed",
        "11",
    ];
    let a = genpos(&args);
    let b = genpos(&args);
    assert_eq!(stdout(&a), stdout(&b));
    assert!(a.status.success());
}

#[test]
fn gen_matches_library_encoding() {
    let out = genpos(&["gen", "--family", "petersen"]);
    assert!(out.status.success());
    let expected = genpos::io::write_graph6(
        &genpos::families::generate(&genpos::families::FamilySpec::Petersen)
            .unwrap()
            .graph,
    )
    .unwrap();
    assert_eq!(stdout(&out).trim_end(), expected);
}

#[test]
fn prism_round_trip_through_files() {
    let dir = std::env::temp_dir().join("genpos-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("c5.g6");

    let out = genpos(&[
        "gen",
        "--family",
        "cycle",
        "5",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());

    let out = genpos(&["prism", path.to_str().unwrap(), "--format", "edgelist"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("10 15\n"), "{text}");

    let petersen = genpos::io::parse_edge_list(&text).unwrap();
    assert!(petersen.vertices().all(|v| petersen.degree(v) == 3));
}

#[test]
fn edge_list_input_is_detected() {
    let dir = std::env::temp_dir().join("genpos-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("p4.txt");
    std::fs::write(&path, "4 3\n0 1\n1 2\n2 3\n").unwrap();

    let out = genpos(&["compute", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("prism gp: 4"), "{text}");
    assert!(text.contains("check tree: EXACT 4"), "{text}");
}

#[test]
fn unknown_rule_is_an_error() {
    let out = genpos(&["verify", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn missing_input_is_an_error() {
    let out = genpos(&["compute"]);
    assert_eq!(out.status.code(), Some(2));
}
