//! End-to-end tests of the `cfgeo` binary: exit codes, piping between
//! subcommands, format round-trips, and byte-level determinism.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn cfgeo() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cfgeo"))
}

fn run(args: &[&str]) -> Output {
    cfgeo().args(args).output().expect("binary runs")
}

fn run_with_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = cfgeo()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().expect("binary finishes")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 output")
}

fn temp_path(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("cfgeo-test-{}-{name}", std::process::id()));
    p
}

#[test]
fn chromatic_solve_on_the_bull() {
    let bull = run(&["gen", "bull"]);
    assert!(bull.status.success());
    let solved = run_with_stdin(&["solve", "--chromatic", "-"], &stdout_of(&bull));
    assert_eq!(solved.status.code(), Some(0));
    let text = stdout_of(&solved);
    assert!(text.starts_with("chi_cf 2\ncfgeo-coloring v1\n"), "{text}");
}

#[test]
fn chain_pipe_prints_k3() {
    let chain = run(&["gen", "chain", "4"]);
    assert_eq!(stdout_of(&chain), "cfgeo-chain v1\nm 4\n");
    let solved = run_with_stdin(&["solve-chain"], &stdout_of(&chain));
    assert_eq!(solved.status.code(), Some(0));
    assert_eq!(stdout_of(&solved), "k 3\nwitness 1 2 1 3\n");
}

#[test]
fn verify_exit_codes() {
    let graph_path = temp_path("c4.graph");
    let coloring_path = temp_path("c4.coloring");
    assert!(run(&["gen", "c4", "-o", graph_path.to_str().unwrap()])
        .status
        .success());

    // One colored vertex leaves the opposite vertex without a unique neighbor.
    std::fs::write(&coloring_path, "cfgeo-coloring v1\npalette 1\nc 0 1\n").unwrap();
    let invalid = run(&[
        "verify",
        graph_path.to_str().unwrap(),
        coloring_path.to_str().unwrap(),
    ]);
    assert_eq!(invalid.status.code(), Some(1));
    let text = stdout_of(&invalid);
    assert!(text.starts_with("invalid\n"));
    assert!(text.contains("violation 2"));

    std::fs::write(
        &coloring_path,
        "cfgeo-coloring v1\npalette 2\nc 0 1\nc 1 2\n",
    )
    .unwrap();
    let valid = run(&[
        "verify",
        graph_path.to_str().unwrap(),
        coloring_path.to_str().unwrap(),
    ]);
    assert_eq!(valid.status.code(), Some(0));
    assert_eq!(stdout_of(&valid), "valid\n");

    std::fs::remove_file(&graph_path).ok();
    std::fs::remove_file(&coloring_path).ok();
}

#[test]
fn infeasible_decision_exits_one() {
    let c4 = run(&["gen", "c4"]);
    let solved = run_with_stdin(&["solve", "--k", "1", "-"], &stdout_of(&c4));
    assert_eq!(solved.status.code(), Some(1));
    assert_eq!(stdout_of(&solved), "not-colorable 1\n");
}

#[test]
fn budget_exhaustion_exits_three() {
    let gn = run(&["gen", "gn", "3"]);
    let solved = run_with_stdin(
        &["solve", "--k", "2", "--budget", "5", "-"],
        &stdout_of(&gn),
    );
    assert_eq!(solved.status.code(), Some(3));
    assert_eq!(stdout_of(&solved), "inconclusive budget-exhausted\n");
}

#[test]
fn budget_env_var_is_honored() {
    let gn = run(&["gen", "gn", "3"]);
    let mut child = cfgeo()
        .args(["solve", "--k", "2", "-"])
        .env("CFGEO_BUDGET", "5")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(stdout_of(&gn).as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["solve"]).status.code(), Some(2));
    let missing = run(&["build-graph", "/nonexistent/file"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn pipeline_instance_to_graph_to_coloring() {
    let inst = run(&[
        "gen",
        "random",
        "unit-disk",
        "40",
        "30",
        "1.7",
        "--seed",
        "9",
    ]);
    assert!(inst.status.success());
    let graph = run_with_stdin(&["build-graph", "-"], &stdout_of(&inst));
    assert!(graph.status.success());
    assert!(stdout_of(&graph).starts_with("cfgeo-graph v1\nn 40\n"));

    let colored = run_with_stdin(&["color-strips", "-"], &stdout_of(&inst));
    assert!(colored.status.success());
    assert!(stdout_of(&colored).starts_with("cfgeo-coloring v1\n"));

    let intervals = run(&["gen", "bull", "--instance"]);
    let coloring = run_with_stdin(&["color-intervals", "-"], &stdout_of(&intervals));
    assert!(coloring.status.success());
    assert_eq!(
        stdout_of(&coloring),
        "cfgeo-coloring v1\npalette 2\nc 1 1\nc 4 2\n"
    );
}

#[test]
fn render_produces_svg() {
    let inst_path = temp_path("bull.instance");
    let coloring_path = temp_path("bull.coloring");
    let svg_path = temp_path("bull.svg");
    assert!(run(&[
        "gen",
        "bull",
        "--instance",
        "-o",
        inst_path.to_str().unwrap()
    ])
    .status
    .success());
    assert!(run(&[
        "color-intervals",
        inst_path.to_str().unwrap(),
        "-o",
        coloring_path.to_str().unwrap()
    ])
    .status
    .success());
    let rendered = run(&[
        "render",
        inst_path.to_str().unwrap(),
        "--coloring",
        coloring_path.to_str().unwrap(),
        "-o",
        svg_path.to_str().unwrap(),
    ]);
    assert!(rendered.status.success());
    let svg = std::fs::read_to_string(&svg_path).unwrap();
    assert!(svg.contains("<svg "));
    assert_eq!(svg.matches("<line").count(), 5);

    std::fs::remove_file(&inst_path).ok();
    std::fs::remove_file(&coloring_path).ok();
    std::fs::remove_file(&svg_path).ok();
}

#[test]
fn recurrence_and_census_output() {
    assert_eq!(stdout_of(&run(&["recurrence", "gn", "3"])), "33\n");
    assert_eq!(stdout_of(&run(&["recurrence", "dk", "2"])), "5\n");
    assert_eq!(stdout_of(&run(&["recurrence", "gbar", "3"])), "42\n");
    assert_eq!(
        stdout_of(&run(&["recurrence", "gbar", "3", "--closed"])),
        "42\n"
    );
    let census = run(&["census", "--max-n", "4"]);
    assert!(census.status.success());
    assert_eq!(
        stdout_of(&census),
        "n 1 max_chi_cf 1\nn 2 max_chi_cf 1\nn 3 max_chi_cf 1\nn 4 max_chi_cf 2\n"
    );
    let guarded = run(&["census", "--max-n", "9"]);
    assert_eq!(guarded.status.code(), Some(2));
}

#[test]
fn emitted_files_reparse_and_are_deterministic() {
    for args in [
        vec!["gen", "gn", "3"],
        vec!["gen", "dk", "2"],
        vec!["gen", "bull"],
        vec!["gen", "bull", "--instance"],
        vec!["gen", "random", "interval", "20", "25", "4", "--seed", "5"],
        vec!["gen", "chain", "6"],
    ] {
        let first = run(&args);
        let second = run(&args);
        assert!(first.status.success());
        assert_eq!(
            stdout_of(&first),
            stdout_of(&second),
            "byte-identical reruns for {args:?}"
        );
    }

    // A generated reduction graph round-trips through solve.
    let formula_path = temp_path("phi.1in3");
    std::fs::write(&formula_path, "cfgeo-1in3 v1\nvars 3\nclause 0 1 2\n").unwrap();
    let gadget = run(&["gen", "reduction", formula_path.to_str().unwrap()]);
    assert!(gadget.status.success());
    let solved = run_with_stdin(&["solve", "--k", "1", "-"], &stdout_of(&gadget));
    assert_eq!(solved.status.code(), Some(0));
    std::fs::remove_file(&formula_path).ok();
}

#[test]
fn open_mode_solving_and_verification() {
    // A single vertex has an open chromatic number in no palette at all.
    let lone = "cfgeo-graph v1\nn 1\n";
    let solved = run_with_stdin(&["solve", "--chromatic", "--open", "-"], lone);
    assert_eq!(solved.status.code(), Some(1));
    assert_eq!(stdout_of(&solved), "chi_cf none\n");

    // Closed mode is fine, and its witness fails open-mode verification.
    let closed = run_with_stdin(&["solve", "--chromatic", "-"], lone);
    assert_eq!(closed.status.code(), Some(0));

    let graph_path = temp_path("lone.graph");
    let coloring_path = temp_path("lone.coloring");
    std::fs::write(&graph_path, lone).unwrap();
    std::fs::write(&coloring_path, "cfgeo-coloring v1\npalette 1\nc 0 1\n").unwrap();
    let closed_ok = run(&[
        "verify",
        graph_path.to_str().unwrap(),
        coloring_path.to_str().unwrap(),
    ]);
    assert_eq!(closed_ok.status.code(), Some(0));
    let open_fails = run(&[
        "verify",
        "--open",
        graph_path.to_str().unwrap(),
        coloring_path.to_str().unwrap(),
    ]);
    assert_eq!(open_fails.status.code(), Some(1));
    std::fs::remove_file(&graph_path).ok();
    std::fs::remove_file(&coloring_path).ok();
}

#[test]
fn square_strips_and_experimental_height_flag() {
    let squares = run(&[
        "gen",
        "random",
        "unit-square",
        "60",
        "40",
        "6",
        "--seed",
        "12",
    ]);
    assert!(squares.status.success());
    let colored = run_with_stdin(&["color-strips", "-"], &stdout_of(&squares));
    assert!(colored.status.success());

    // Interval instances are rejected by color-strips.
    let intervals = run(&["gen", "bull", "--instance"]);
    let rejected = run_with_stdin(&["color-strips", "-"], &stdout_of(&intervals));
    assert_eq!(rejected.status.code(), Some(2));

    // Height-2 disks: rejected by the proven path, accepted experimentally.
    let tall = run(&["gen", "random", "unit-disk", "30", "25", "2", "--seed", "4"]);
    let strict = run_with_stdin(&["color-strips", "-"], &stdout_of(&tall));
    assert!(strict.status.success(), "six-coloring handles any height");
    let experimental = run_with_stdin(
        &["color-strips", "--experimental-height-2", "-"],
        &stdout_of(&tall),
    );
    // The verifier decides: success or a negative decision, never a crash.
    assert!(matches!(experimental.status.code(), Some(0) | Some(1)));
}

#[test]
fn star_path_and_raised_census_guard() {
    let star = run(&["gen", "star", "4"]);
    assert!(stdout_of(&star).starts_with("cfgeo-graph v1\nn 5\n"));
    let chromatic = run_with_stdin(&["solve", "--chromatic", "-"], &stdout_of(&star));
    assert!(stdout_of(&chromatic).starts_with("chi_cf 1\n"));

    let path = run(&["gen", "path", "3"]);
    let chromatic = run_with_stdin(&["solve", "--chromatic", "-"], &stdout_of(&path));
    assert!(stdout_of(&chromatic).starts_with("chi_cf 1\n"));

    // The census guard is overridable, paralleling the library API.
    let census = run(&["census", "--max-n", "5", "--guard", "5"]);
    assert!(census.status.success());
    assert!(stdout_of(&census).ends_with("n 5 max_chi_cf 2\n"));
}
