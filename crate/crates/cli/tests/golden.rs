//! Golden tests: run the `kittab` binary on committed session files and
//! compare the output byte-for-byte against committed expectations.

use std::path::PathBuf;
use std::process::Command;

fn session_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/sessions")
}

fn run(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_kittab"))
        .args(args)
        .output()
        .expect("failed to launch kittab")
}

fn golden(name: &str) {
    let dir = session_dir();
    let session = dir.join(format!("{}.ks", name));
    let expected = std::fs::read_to_string(dir.join(format!("{}.expected", name))).unwrap();
    let out = run(&["run", session.to_str().unwrap()]);
    assert!(
        out.status.success(),
        "kittab run {} failed: {}",
        name,
        String::from_utf8_lossy(&out.stderr)
    );
    let got = String::from_utf8(out.stdout).unwrap();
    assert_eq!(got, expected, "output drifted for session `{}`", name);
}

#[test]
fn golden_generic_kitt() {
    golden("generic_kitt");
}

#[test]
fn golden_linkage() {
    golden("linkage");
}

#[test]
fn golden_curve() {
    golden("curve");
}

#[test]
fn output_is_deterministic_across_runs() {
    let session = session_dir().join("linkage.ks");
    let path = session.to_str().unwrap();
    let first = run(&["run", path]).stdout;
    for _ in 0..3 {
        assert_eq!(run(&["run", path]).stdout, first);
    }
}

#[test]
fn json_mode_emits_one_object_per_command() {
    let session = session_dir().join("linkage.ks");
    let out = run(&["run", session.to_str().unwrap(), "--json"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    // gb, dim, colon, residual_check, verify_deformation
    assert_eq!(lines.len(), 5);
    for line in lines {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!(v.get("command").is_some());
        assert!(v.get("millis").is_some());
    }
}

#[test]
fn parse_error_exits_with_code_2() {
    let dir = tempdir();
    let bad = dir.join("bad.ks");
    std::fs::write(&bad, "ring R = QQ[x];\nfrobnicate x;\n").unwrap();
    let out = run(&["run", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!String::from_utf8_lossy(&out.stderr).is_empty());
}

#[test]
fn precondition_error_exits_with_code_1() {
    let dir = tempdir();
    let bad = dir.join("bad_colon.ks");
    std::fs::write(&bad, "ring R = QQ[x];\nideal a = x;\ncolon a missing;\n").unwrap();
    let out = run(&["run", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn timeout_exits_with_code_3() {
    let session = session_dir().join("curve.ks");
    let out = run(&["run", session.to_str().unwrap(), "--timeout-secs", "0"]);
    assert_eq!(out.status.code(), Some(3));
}

fn tempdir() -> PathBuf {
    let dir = std::env::temp_dir().join(format!("kittab-golden-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}
