use std::process::{Command, Output};

use hodge_cli::SuiteReport;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hodge-verify")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn report(o: &Output) -> SuiteReport {
    serde_json::from_slice(&o.stdout).expect("valid report json")
}

#[test]
fn verified_subset_exits_zero() {
    let o = run(&["--poly", "1,-5,-2,1", "--claims", "C09,C20"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let r = report(&o);
    assert_eq!(r.claims.iter().map(|c| c.id.as_str()).collect::<Vec<_>>(), ["C09", "C20"]);
}

#[test]
fn failing_claim_exits_one() {
    let o = run(&["--poly", "1,-5,-2,1", "--claims", "C28"]);
    assert_eq!(code(&o), 1);
}

#[test]
fn usage_errors_exit_three() {
    for args in [
        &["--poly", "0,-5,-2,1"][..],
        &["--poly", "1,0,-5,-2,1"],
        &["--poly", "1,2,3"],
        &["--poly", "1,x,2,3"],
        &["--claims", "C29"],
        &["--precision-bits", "8"],
        &["--bogus"],
    ] {
        let o = run(args);
        assert_eq!(code(&o), 3, "{args:?}");
        assert!(o.stdout.is_empty());
    }
    let o = run(&["--poly", "1,0,-5,-2,1"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("depress"));
}

#[test]
fn help_exits_zero() {
    let o = run(&["--help"]);
    assert_eq!(code(&o), 0);
    assert!(String::from_utf8_lossy(&o.stdout).contains("--poly"));
}

#[test]
fn gate_rejection_exits_two_with_sturm_count() {
    let o = run(&["--poly", "1,0,0,-2"]);
    assert_eq!(code(&o), 2);
    let r = report(&o);
    let gate = r.gate.report.expect("gate report present");
    assert_eq!(gate.real_root_count, 2);
    assert!(!gate.galois_s4);
    assert!(r.claims.iter().filter(|c| c.id != "C01").all(|c| !c.status.is_verified()));
}

#[test]
fn json_round_trips_and_is_deterministic() {
    let args = ["--poly", "1,-7,-2,6", "--claims", "C01,C09,C16", "--seed", "7"];
    let a = run(&args);
    let b = run(&args);
    let (mut ra, mut rb) = (report(&a), report(&b));
    let text = serde_json::to_string(&ra).unwrap();
    assert_eq!(serde_json::from_str::<SuiteReport>(&text).unwrap(), ra);
    let top: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    for key in ["config", "gate", "claims", "overall"] {
        assert!(top.get(key).is_some(), "missing {key}");
    }
    ra.total_elapsed_ms = 0;
    rb.total_elapsed_ms = 0;
    for r in ra.claims.iter_mut().chain(rb.claims.iter_mut()) {
        r.elapsed_ms = 0;
    }
    assert_eq!(ra, rb);
}

#[test]
fn config_file_markdown_and_output_path() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.conf");
    let out = dir.path().join("report.md");
    std::fs::write(&cfg, format!("poly = 1,-5,-2,1\nclaims = C02\nformat = md\nout = {}\n", out.display())).unwrap();
    let o = run(&["--config", cfg.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let md = std::fs::read_to_string(&out).unwrap();
    assert!(md.contains("| C02 |") && md.contains("verified-exact"));

    // flags override the file
    let o = run(&["--config", cfg.to_str().unwrap(), "--format", "json", "--out", "-"]);
    assert_ne!(code(&o), 3);
}

#[test]
fn unwritable_output_exits_four() {
    let o = run(&["--poly", "1,-5,-2,1", "--claims", "C01", "--out", "/nonexistent-dir/x/report.json"]);
    assert_eq!(code(&o), 4);
}
