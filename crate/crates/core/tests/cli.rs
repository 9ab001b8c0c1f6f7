use std::process::Command;

use alcove::cli::run;

fn run_args(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(
        std::iter::once("alcove").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn e6_certificate_verifies() {
    let (code, out, _) = run_args(&[
        "--json", "certificate", "--algebra", "E6^1", "--level", "2", "--weight", "1,0,0,0,1,0",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["verified"], true);
    assert_eq!(v["label"], "E6^1");
}

#[test]
fn json_round_trip_and_tamper() {
    let dir = tempfile::tempdir().unwrap();
    let (code, out, _) = run_args(&["--json", "certificate", "-a", "F4^1", "-l", "3", "-w", "2,1,0,4"]);
    assert_eq!(code, 0);
    let path = dir.path().join("cert.json");
    std::fs::write(&path, &out).unwrap();
    let p = path.to_str().unwrap();
    let (code, out, _) = run_args(&["certificate", "--verify-only", p]);
    assert_eq!(code, 0, "{out}");
    let (code, _, _) = run_args(&["certificate", "--verify", p]);
    assert_eq!(code, 0);

    let mut v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    v["Lambda"]["delta_degree"] = "1/2".into();
    std::fs::write(&path, v.to_string()).unwrap();
    let (code, out, _) = run_args(&["certificate", "--verify-only", p]);
    assert_eq!(code, 1);
    assert!(out.contains("FAIL"), "{out}");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run_args(&["certificate", "--algebra", "H9^1", "--level", "1", "--weight", "1"]).0, 2);
    assert_eq!(run_args(&["certificate", "--algebra", "A2^1", "--level", "1", "--weight", "1,-1"]).0, 2);
    assert_eq!(run_args(&["decompose", "--algebra", "C3^1", "--level", "2", "--weight", "1,1,1"]).0, 2);
    let (code, _, err) = run_args(&["nonsense"]);
    assert_eq!(code, 2);
    assert!(err.contains("nonsense"));
}

#[test]
fn fusion_and_qsystem_reports() {
    let (code, out, _) = run_args(&["verify-fusion", "--algebra", "A1^1", "--level", "1", "--weight", "2"]);
    assert_eq!(code, 0);
    assert!(out.contains("4 = 2×2"));
    let (code, out, _) = run_args(&["verify-qsystem", "-a", "A2^1", "-l", "1", "-w", "1,0", "-i", "1"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("(a) ungraded: PASS"));
    assert!(out.contains("(b) graded (Current): PASS"));
    let (code, _, err) = run_args(&["verify-qsystem", "-a", "A2^1", "-l", "1", "-w", "2,0", "-i", "1"]);
    assert_eq!(code, 2);
    assert!(err.contains("max{lambda(alpha^vee)"));
}

#[test]
fn selftest_is_deterministic() {
    let a = run_args(&["--json", "selftest", "--samples", "3", "--seed", "9"]);
    let b = run_args(&["--json", "selftest", "--samples", "3", "--seed", "9"]);
    assert_eq!(a.0, 0);
    assert_eq!(a, b);
}

#[test]
fn cache_admin_flow() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let (code, out, _) = run_args(&["--cache-dir", d, "cache", "list"]);
    assert_eq!(code, 0);
    assert!(out.is_empty());

    let (code, _, _) = run_args(&["--cache-dir", d, "character", "-a", "A2^1", "-l", "1", "-w", "1,1"]);
    assert_eq!(code, 0);
    let (code, out, _) = run_args(&["--cache-dir", d, "cache", "list"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 1);
    let (code, out, _) = run_args(&["--cache-dir", d, "cache", "validate"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("PASS"));

    std::fs::write(dir.path().join("B3-1_l1_0_0_1.json"), "garbage").unwrap();
    let (code, out, _) = run_args(&["--cache-dir", d, "cache", "list"]);
    assert_eq!(code, 1);
    assert!(out.contains("INVALID"));
    let (code, out, _) = run_args(&["--cache-dir", d, "cache", "clear"]);
    assert_eq!(code, 1);
    assert!(out.contains("removed 1"));
    assert!(dir.path().join("B3-1_l1_0_0_1.json").exists());
}

#[test]
fn binary_reads_cache_dir_from_env() {
    let dir = tempfile::tempdir().unwrap();
    let bin = env!("CARGO_BIN_EXE_alcove");
    let status = Command::new(bin)
        .args(["character", "-a", "A1^1", "-l", "1", "-w", "3"])
        .env("ALCOVE_CACHE_DIR", dir.path())
        .output()
        .unwrap();
    assert!(status.status.success());
    assert!(String::from_utf8_lossy(&status.stdout).contains("dimension  8"));
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);

    let out = Command::new(bin).args(["certificate", "-a", "H9^1", "-l", "1", "-w", "1"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}
