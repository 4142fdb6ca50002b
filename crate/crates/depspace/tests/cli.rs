//! End-to-end checks through the compiled binary: exit codes, report
//! formats, and the generate/consume pipeline.

use std::path::PathBuf;
use std::process::{Command, Output};

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_depspace"))
}

fn run(args: &[&str]) -> Output {
    binary().args(args).output().expect("binary runs")
}

fn stdout(output: &Output) -> &str {
    std::str::from_utf8(&output.stdout).expect("utf-8 stdout")
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let mut path = std::env::temp_dir();
    path.push(format!("depspace-e2e-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn check_exit_codes_reflect_the_verdict() {
    let space1 = temp_file("space1", "elements a b c d\ndep a b c\n");
    let out = run(&["check", space1.to_str().unwrap(), "--mode", "exhaustive"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "Transitivity: PASS (exhaustive)\n");

    let p3 = temp_file("p3", "elements x a b\ndep x a\ndep a b\n");
    let out = run(&["check", p3.to_str().unwrap(), "--mode", "exhaustive"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("Transitivity: FAIL (exhaustive)"));
    assert!(stdout(&out).contains("WITNESS x | A=a | B=b"));
}

#[test]
fn parse_errors_exit_with_code_two() {
    let bad = temp_file("bad", "dep a b\nelements a b\n");
    let out = run(&["check", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = std::str::from_utf8(&out.stderr).unwrap();
    assert!(stderr.contains("line 1"), "{stderr}");

    let out = run(&["check", "/no/such/file"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&[]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["help"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn exchange_porcelain_records() {
    let space1 = temp_file("exch", "elements a b c d\ndep a b c\n");
    let out = run(&[
        "exchange",
        space1.to_str().unwrap(),
        "--basis",
        "a,b,d",
        "--independent",
        "c",
        "--porcelain",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "A_PRIME\tb\nX\ta,c,d\nVERIFIED\ttrue\n");
}

#[test]
fn generated_files_feed_back_into_queries() {
    let out = run(&[
        "gen", "random", "--elements", "6", "--circuits", "4", "--max-size", "3", "--seed", "5",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let generated = temp_file("gen", stdout(&out));
    let file = generated.to_str().unwrap();

    let basis = run(&["basis", file, "--porcelain"]);
    assert_eq!(basis.status.code(), Some(0));
    let basis_line = stdout(&basis);
    assert!(basis_line.starts_with("BASIS\t"), "{basis_line}");

    let set = basis_line.trim_end().split('\t').nth(1).unwrap().to_owned();
    let indep = run(&["independent", file, "--set", &set]);
    assert_eq!(indep.status.code(), Some(0));

    let check = run(&["check", file, "--mode", "sampled", "--samples", "100", "--seed", "1"]);
    assert!(matches!(check.status.code(), Some(0) | Some(1)));
}

#[test]
fn empty_set_queries_are_accepted() {
    let space1 = temp_file("empty-set", "elements a b c d\ndep a b c\n");
    let file = space1.to_str().unwrap();
    let out = run(&["closure", file, "--set", "", "--porcelain"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "CLOSURE\t\n");

    let out = run(&["independent", file, "--set", ""]);
    assert_eq!(out.status.code(), Some(0));
}
