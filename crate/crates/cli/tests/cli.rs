//! End-to-end tests against the compiled binary: golden input/output pairs,
//! exit codes, and map/unmap round trips for every route.

use std::process::{Command, Output};

fn zigzag(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zigzag"))
        .args(args)
        .output()
        .expect("run zigzag")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

fn stderr_of(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("utf-8 stderr")
}

#[test]
fn map_phi_golden() {
    let out = zigzag(&["map", "--via", "phi", "--perm", "63758142"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "121211323233\n");
}

#[test]
fn unmap_phi_golden() {
    let out = zigzag(&["unmap", "--via", "phi", "--word", "123"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "21\n");
}

#[test]
fn map_tableau_json_and_text() {
    let out = zigzag(&["map", "--via", "gamma", "--perm", "4657132"]);
    assert!(out.status.success());
    assert_eq!(
        stdout_of(&out),
        "{\"shape\":[4,3,2],\"shifted\":false,\"rows\":[[1,2,4,6],[3,5,9],[7,8]]}\n"
    );

    let out = zigzag(&[
        "map", "--via", "gamma", "--perm", "4657132", "--render", "text",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "1 2 4 6\n3 5 9\n7 8\n");
}

#[test]
fn map_then_unmap_round_trips_every_route() {
    let routes: [(&str, &str, bool); 6] = [
        ("phi", "63758142", true),
        ("psi", "31524", true),
        ("phi-bar", "63758142", false),
        ("psi-bar", "31524", false),
        ("gamma", "4657132", false),
        ("delta", "2413", false),
    ];
    for (via, perm, uses_word) in routes {
        let mapped = zigzag(&["map", "--via", via, "--perm", perm]);
        assert!(mapped.status.success(), "map --via {via}");
        let image = stdout_of(&mapped);
        let image = image.trim_end();

        let flag = if uses_word { "--word" } else { "--tableau" };
        let unmapped = zigzag(&["unmap", "--via", via, flag, image]);
        assert!(unmapped.status.success(), "unmap --via {via}");
        assert_eq!(
            stdout_of(&unmapped),
            format!("{perm}\n"),
            "round trip via {via}"
        );
    }
}

#[test]
fn enumerate_streams_and_counts() {
    let out = zigzag(&[
        "enumerate",
        "--class",
        "du",
        "--length",
        "4",
        "--avoid",
        "4123",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "2143\n3142\n3241\n4132\n4231\n");

    let out = zigzag(&[
        "enumerate",
        "--class",
        "du",
        "--length",
        "4",
        "--avoid",
        "4123",
        "--count-only",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "5\n");

    let out = zigzag(&[
        "enumerate",
        "--class",
        "ud",
        "--length",
        "13",
        "--avoid",
        "4123",
        "--count-only",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("limit"));
}

#[test]
fn count_tableaux() {
    let out = zigzag(&["count", "--shape", "3,3,3"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "42\n");

    let out = zigzag(&["count", "--shape", "4,2", "--shifted"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "5\n");

    let out = zigzag(&["count", "--shape", "2,3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_small_run_agrees() {
    let out = zigzag(&["verify", "--max-n", "2"]);
    assert!(out.status.success(), "stderr: {}", stderr_of(&out));
    let stdout = stdout_of(&out);
    assert!(!stdout.is_empty());
    for line in stdout.lines() {
        assert!(line.starts_with('{') && line.ends_with('}'), "line {line}");
        assert!(line.contains("\"agree\":true"), "line {line}");
    }
}

#[test]
fn domain_errors_exit_two_with_diagnostics() {
    let out = zigzag(&["map", "--via", "phi", "--perm", "12"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout_of(&out).is_empty());
    assert!(stderr_of(&out).contains("down-up"));

    let out = zigzag(&["map", "--via", "phi", "--perm", "11"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("invalid permutation"));

    let out = zigzag(&["unmap", "--via", "phi", "--tableau", "{}"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("--word"));

    let out = zigzag(&["render", "--tableau", "not json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn render_pretty_prints() {
    let out = zigzag(&[
        "render",
        "--tableau",
        "{\"shape\":[3,2,1],\"shifted\":true,\"rows\":[[1,2,4],[3,5],[6]]}",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "1 2 4\n  3 5\n    6\n");
}
