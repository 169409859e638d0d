//! End-to-end checks of the binary: subcommand behavior and the exit-code
//! contract (0 valid/success, 1 invalid, 2 inconclusive, 64 usage).

use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_umcf"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn tmp(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    p.push(name);
    p.to_string_lossy().into_owned()
}

#[test]
fn gen_then_solve_um_path7() {
    let file = tmp("p7.graph");
    let out = run(&["gen", "path", "--param", "7", "-o", &file]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&["solve", "um", &file]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("k 3\n"), "got: {}", stdout(&out));
}

#[test]
fn solve_cf_on_binary_tree_is_four() {
    let file = tmp("b4.graph");
    run(&["gen", "btree", "--param", "4", "-o", &file]);
    let out = run(&["solve", "cf", &file, "--budget", "100000000"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("k 4\n"), "got: {}", stdout(&out));
}

#[test]
fn verify_exit_codes() {
    let graph = tmp("p7v.graph");
    run(&["gen", "path", "--param", "7", "-o", &graph]);

    // A constant coloring is not unique-maximum: exit 1 with a witness.
    let bad = tmp("bad.col");
    std::fs::write(
        &bad,
        "p col 7 1\nv 0 1\nv 1 1\nv 2 1\nv 3 1\nv 4 1\nv 5 1\nv 6 1\n",
    )
    .unwrap();
    let out = run(&["verify", "um", &graph, &bad]);
    assert_eq!(out.status.code(), Some(1));
    assert!(
        stdout(&out).contains("invalid witness="),
        "got: {}",
        stdout(&out)
    );

    // The solver certificate verifies: exit 0.
    let cert = tmp("p7v.col");
    run(&["solve", "um", &graph, "-o", &cert]);
    let out = run(&["verify", "um", &graph, &cert]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&["verify", "proper", &graph, &cert]);
    assert_eq!(out.status.code(), Some(0));

    // A starving budget must exit 2, not claim validity.
    let out = run(&["verify", "cf", &graph, &cert, "--budget", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).contains("inconclusive"));
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(run(&[]).status.code(), Some(64));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(64));
    assert_eq!(run(&["gen", "path"]).status.code(), Some(64));
    assert_eq!(
        run(&["gen", "möbius", "--param", "3"]).status.code(),
        Some(64)
    );
    assert_eq!(run(&["verify", "um"]).status.code(), Some(64));
    assert_eq!(
        run(&["bounds", "grid", "--m", "one"]).status.code(),
        Some(64)
    );
}

#[test]
fn game_values_and_play() {
    let graph = tmp("p7g.graph");
    run(&["gen", "path", "--param", "7", "-o", &graph]);
    let out = run(&["game", "vcs", &graph]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "vcs 3\n");
    let out = run(&["game", "vp", &graph]);
    assert_eq!(stdout(&out), "vp 3\n");

    let out = run(&["game", "play", &graph, "--game", "path", "--max", "greedy"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let last = text.lines().last().unwrap();
    assert!(last.starts_with("length "), "got: {text}");
    // Round lines are i|ids|v.
    assert!(text.lines().next().unwrap().split('|').count() == 3);
}

#[test]
fn reduce_emits_both_files() {
    let graph = tmp("k2.graph");
    std::fs::write(&graph, "p um 2 1\ne 0 1\n").unwrap();
    let prefix = tmp("k2red");
    let out = run(&["reduce", &graph, "-o", &prefix]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("equivalence=holds"));

    let gstar = std::fs::read_to_string(format!("{prefix}.graph")).unwrap();
    assert!(gstar.starts_with("p um 6 "), "got: {gstar}");
    assert!(gstar.contains("l 0 role=up:1"));
    let col = std::fs::read_to_string(format!("{prefix}.col")).unwrap();
    assert!(col.starts_with("p col 6 3\n"), "got: {col}");
    assert!(col.contains("m role."));
}

#[test]
fn bounds_table_quotes_published_values() {
    let out = run(&["bounds", "grid", "--m", "10"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("um_lower_3m_over_2") && text.contains("15.000000"));
    assert!(text.contains("um_upper_2.519m") && text.contains("25.190000"));
    assert!(text.contains("14.153725"));
    assert_eq!(run(&["bounds", "grid", "--m", "1"]).status.code(), Some(64));
}

#[test]
fn experiments_run_clean_at_desk_level() {
    for name in ["paths", "hedgehog", "grid", "reduction", "games"] {
        let out = run(&["experiment", name]);
        assert_eq!(out.status.code(), Some(0), "experiment {name} failed");
        let text = stdout(&out);
        assert!(text.contains("## claim"), "{name} printed no tables");
        assert!(!text.contains("| FAIL"), "{name} had failing rows: {text}");
    }
}

#[test]
fn experiment_reports_are_deterministic_for_a_seed() {
    let a = run(&["experiment", "reduction", "--seed", "7"]);
    let b = run(&["experiment", "reduction", "--seed", "7"]);
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn stdin_input_works() {
    use std::io::Write;
    let mut child = Command::new(env!("CARGO_BIN_EXE_umcf"))
        .args(["solve", "um", "-"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(b"p um 3 2\ne 0 1\ne 1 2\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("k 2\n"));
}
