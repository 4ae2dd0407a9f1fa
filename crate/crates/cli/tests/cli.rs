//! End-to-end tests of the `borsuk` binary: exit-code contract, output
//! formats, determinism, and the lifted-configuration file interface.

use std::path::Path;
use std::process::{Command, Output};

use borsuk_core::bound::BoundCertificate;

fn borsuk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_borsuk"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn bound_success_exit_zero() {
    let out = borsuk(&["bound", "-n", "29", "-k", "9", "-p", "3", "--lambda=-1/3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("= 422"), "{text}");
    assert!(text.contains("d = C(29,2) = 406"));
}

#[test]
fn bound_rejection_exit_two() {
    let out = borsuk(&["bound", "-n", "6", "-k", "3", "-p", "2", "--lambda=-1/2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout_of(&out).contains("rejected: k-range"));
}

#[test]
fn bound_usage_errors_exit_one() {
    // malformed lambda
    let out = borsuk(&["bound", "-n", "6", "-k", "3", "-p", "2", "--lambda=oops"]);
    assert_eq!(out.status.code(), Some(1));
    // unknown flag
    let out = borsuk(&["bound", "--frobnicate"]);
    assert_eq!(out.status.code(), Some(1));
    // missing required argument
    let out = borsuk(&["bound", "-n", "6"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn help_exits_zero() {
    let out = borsuk(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    let out = borsuk(&["bound", "--help"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn bound_record_round_trips() {
    let out = borsuk(&["bound", "-n", "29", "-k", "9", "-p", "3", "--lambda=-1/3", "--record"]);
    assert_eq!(out.status.code(), Some(0));
    let parsed = BoundCertificate::from_record(&stdout_of(&out)).expect("record parses");
    let direct = borsuk_core::bound::theorem1_bound(&borsuk_core::lifting::Parameters::new(
        29,
        9,
        3.0,
        borsuk_core::lifting::Lambda::new(-1, 3).unwrap(),
    ))
    .unwrap();
    assert_eq!(parsed, direct);
}

#[test]
fn identical_runs_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let file_a = dir.path().join("a.csv");
    let file_b = dir.path().join("b.csv");
    for (file, _) in [(&file_a, 0), (&file_b, 1)] {
        let out = borsuk(&[
            "curve",
            "--p-values",
            "1,2.5,4.5",
            "-o",
            file.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
    }
    let a = std::fs::read(&file_a).unwrap();
    let b = std::fs::read(&file_b).unwrap();
    assert!(!a.is_empty());
    assert_eq!(a, b);
}

#[test]
fn curve_csv_format() {
    let out = borsuk(&["curve", "--p-values", "2,4.5", "--csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("p,c,lambda,kappa,tau"));
    let row: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(row.len(), 5);
    assert_eq!(row[0], "2.000000");
    // six decimal places everywhere
    for field in &row {
        assert_eq!(field.split('.').nth(1).map(str::len), Some(6), "{field}");
    }
}

#[test]
fn curve_grid_spec_and_plateau() {
    let out = borsuk(&["curve", "--grid", "1:2:0.25", "--csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    let c_values: Vec<f64> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(1).unwrap().parse().unwrap())
        .collect();
    assert_eq!(c_values.len(), 5);
    for c in &c_values {
        assert!((c - 1.2032).abs() < 5e-4, "plateau value {c}");
    }
    // empty/invalid grids are usage errors
    let out = borsuk(&["curve", "--grid", "2:1:0.5"]);
    assert_eq!(out.status.code(), Some(1));
    let out = borsuk(&["curve", "--p-values", ""]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn search_finds_corollary_witness_and_ranking() {
    let out = borsuk(&["search", "-d", "406", "-p", "3", "--csv", "--top", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("rank,n,k,lambda,t1,bound"));
    let best: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(best[1], "29");
    let bound: u64 = best[5].parse().unwrap();
    assert!(bound >= 422, "search must find at least the 422 witness");

    let out = borsuk(&["search", "-d", "3", "-p", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_quick_passes_and_corruption_fails() {
    let out = borsuk(&["verify", "--scope", "quick"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("0 failed"), "{text}");

    let out = borsuk(&["verify", "--scope", "quick", "--corrupt-quadratic-b"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout_of(&out).contains("FAIL"));
}

#[test]
fn verify_record_format() {
    let out = borsuk(&["verify", "--scope", "quick", "--record", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.starts_with("record = oracle_suite\n"));
    assert!(text.contains("seed = 7"));
    assert!(text.contains("failed = 0"));
    assert!(text.contains("oracle.0.name = "));
}

#[test]
fn lifted_dump_and_check_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("lifted.txt");
    let out = borsuk(&[
        "verify",
        "--dump-lifted",
        file.to_str().unwrap(),
        "-n",
        "5",
        "-k",
        "2",
        "--lambda=-1/3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let contents = std::fs::read_to_string(&file).unwrap();
    assert!(contents.starts_with("5 2 -1 3\n"));
    assert_eq!(contents.lines().count(), 11); // header + C(5,2) points

    let out = borsuk(&["verify", "--check-lifted", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("bit-for-bit"));

    // corrupt one coordinate: the check must fail
    let corrupted = contents.replacen("-0.3333333333333333", "-0.25", 1);
    assert_ne!(corrupted, contents);
    std::fs::write(&file, corrupted).unwrap();
    let out = borsuk(&["verify", "--check-lifted", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn config_file_applies_and_flags_override() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("borsuk.conf");
    std::fs::write(&cfg, "seed = 11\njobs = 2\ncensus_trials = 50\n").unwrap();
    let out = borsuk(&[
        "verify",
        "--scope",
        "quick",
        "--record",
        "--config",
        cfg.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("seed = 11"));

    // flag wins over file
    let out = borsuk(&[
        "verify",
        "--scope",
        "quick",
        "--record",
        "--config",
        cfg.to_str().unwrap(),
        "--seed",
        "5",
    ]);
    assert!(stdout_of(&out).contains("seed = 5"));

    // unknown keys are usage errors
    std::fs::write(&cfg, "bogus = 1\n").unwrap();
    let out = borsuk(&["verify", "--config", cfg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn output_files_are_atomic_and_complete() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("sweep.csv");
    let out = borsuk(&[
        "corollary2",
        "--p-min",
        "2.8",
        "--p-max",
        "2.82",
        "--step",
        "0.005",
        "--csv",
        "-o",
        file.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&file).unwrap();
    assert!(text.starts_with("p,t0,t1,bound\n"));
    assert_eq!(text.lines().count(), 6); // header + 5 grid points
    assert!(!Path::new(&format!("{}.tmp", file.display())).exists());
}
