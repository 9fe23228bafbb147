//! Golden-file tests for every subcommand. Run with `BLESS=1` to rewrite
//! the goldens after an intentional output change.

use std::path::PathBuf;

use interior_hull::cli::{run, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE};

fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

fn check_golden(name: &str, actual: &[u8]) {
    let path = golden_path(name);
    if std::env::var_os("BLESS").is_some() {
        std::fs::write(&path, actual).unwrap();
        return;
    }
    let expected = std::fs::read(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(
        String::from_utf8_lossy(actual),
        String::from_utf8_lossy(&expected),
        "output differs from {}",
        path.display()
    );
}

fn invoke(args: &[&str]) -> (i32, Vec<u8>, Vec<u8>) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("interior-hull").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, out, err)
}

fn golden_case(name: &str, args: &[&str], expected_code: i32) {
    let (code, out, err) = invoke(args);
    assert_eq!(code, expected_code, "stderr: {}", String::from_utf8_lossy(&err));
    if expected_code == EXIT_USAGE {
        check_golden(name, &err);
    } else {
        assert!(err.is_empty(), "unexpected stderr: {}", String::from_utf8_lossy(&err));
        check_golden(name, &out);
    }
}

#[test]
fn cf() {
    golden_case("cf_29_11.txt", &["cf", "29", "11"], EXIT_OK);
}

#[test]
fn hull_text_and_json() {
    golden_case("hull_11_29.txt", &["hull", "11", "29"], EXIT_OK);
    golden_case("hull_11_29.json", &["hull", "11", "29", "--json"], EXIT_OK);
    golden_case("hull_1_5.txt", &["hull", "1", "5"], EXIT_OK);
    golden_case("hull_1_2.json", &["hull", "1", "2", "--json"], EXIT_OK);
}

#[test]
fn hull_svg() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("figure.svg");
    let (code, out, _) = invoke(&["hull", "11", "29", "--svg", path.to_str().unwrap(), "--json"]);
    assert_eq!(code, EXIT_OK);
    check_golden("hull_11_29.json", &out);
    check_golden("hull_11_29.svg", &std::fs::read(&path).unwrap());
}

#[test]
fn reduce() {
    golden_case("reduce_3_1_2_3.txt", &["reduce", "--u", "3,1", "--v", "2,3"], EXIT_OK);
    golden_case("reduce_negative.txt", &["reduce", "--u", "-1,2", "--v", "1,-5", "--base", "5,-4"], EXIT_OK);
}

#[test]
fn class() {
    golden_case("class_2_7.txt", &["class", "2", "7"], EXIT_OK);
}

#[test]
fn verify() {
    golden_case("verify_200.txt", &["verify", "--max-n", "200", "--jobs", "2"], EXIT_OK);
    golden_case("verify_fault.txt", &["verify", "--max-n", "12", "--inject-fault"], EXIT_MISMATCH);
}

#[test]
fn stats() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sweep.csv");
    let (code, out, _) = invoke(&["stats", "--n-min", "2", "--n-max", "12", "--out", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert!(String::from_utf8(out).unwrap().starts_with("wrote 45 rows to "));
    check_golden("stats_2_12.csv", &std::fs::read(&path).unwrap());
}

#[test]
fn hull3d() {
    golden_case("hull3d_1_2_5.txt", &["hull3d", "1", "2", "5", "--reduce"], EXIT_OK);
    golden_case("hull3d_2_5_7.txt", &["hull3d", "2", "5", "7", "--reduce"], EXIT_OK);
    golden_case("hull3d_3_2_7.txt", &["hull3d", "3", "2", "7"], EXIT_OK);
}

#[test]
fn onion() {
    golden_case("onion_11_29.txt", &["onion", "11", "29"], EXIT_OK);
    golden_case("onion_1_5.txt", &["onion", "1", "5"], EXIT_OK);
}

#[test]
fn errors() {
    golden_case("error_domain.txt", &["hull", "3", "3"], EXIT_USAGE);
    golden_case("error_reduce_unclean.txt", &["reduce", "--u", "2,0", "--v", "0,1"], EXIT_USAGE);
    golden_case("error_reduce_unimodular.txt", &["reduce", "--u", "-1,2", "--v", "1,-3"], EXIT_USAGE);
    golden_case("error_hull3d_nonempty.txt", &["hull3d", "3", "2", "7", "--reduce"], EXIT_USAGE);
    golden_case("error_unknown_flag.txt", &["hull", "11", "29", "--png"], EXIT_USAGE);
    let (code, _, err) = invoke(&["verify", "--max-n", "1"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(!err.is_empty());
    let (code, _, _) = invoke(&[]);
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn help_and_version() {
    let (code, out, _) = invoke(&["--help"]);
    assert_eq!(code, EXIT_OK);
    let help = String::from_utf8(out).unwrap();
    for sub in ["cf", "hull", "reduce", "class", "verify", "stats", "hull3d", "onion"] {
        assert!(help.lines().any(|l| l.trim_start().starts_with(sub)), "{sub} missing from help");
    }
    assert!(!help.contains("inject-fault"));
    let (code, out, _) = invoke(&["--version"]);
    assert_eq!(code, EXIT_OK);
    assert!(String::from_utf8(out).unwrap().starts_with("interior-hull "));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_interior-hull");
    let status = |args: &[&str]| std::process::Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(status(&["class", "2", "7"]), Some(EXIT_OK));
    assert_eq!(status(&["class", "2", "8"]), Some(EXIT_USAGE));
    assert_eq!(status(&["verify", "--max-n", "10", "--inject-fault"]), Some(EXIT_MISMATCH));
}
