use std::path::Path;
use std::process::{Command, Output};

use sha2::{Digest, Sha256};

fn modp(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_modp"))
        .args(args)
        .env("MODP_CACHE_DIR", cache)
        .output()
        .expect("modp runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn digest(o: &Output) -> String {
    hex::encode(Sha256::digest(&o.stdout))
}

#[test]
fn degrees_of_b3() {
    let dir = tempfile::tempdir().unwrap();
    let o = modp(dir.path(), &["degrees", "--family", "B", "--rank", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "2 4 6\n");
    let o = modp(dir.path(), &["degrees", "--group", "E6"]);
    assert_eq!(stdout(&o), "2 5 6 8 9 12\n");
}

#[test]
fn usage_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let o = modp(dir.path(), &["frobnicate"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("Usage"));
    assert_eq!(modp(dir.path(), &["degrees", "--bogus-flag"]).status.code(), Some(2));
    assert_eq!(modp(dir.path(), &["degrees", "--family", "Q", "--rank", "2"]).status.code(), Some(2));
    assert_eq!(modp(dir.path(), &["degrees", "-g", "B3", "--csv"]).status.code(), Some(2));
    assert_eq!(modp(dir.path(), &["quillen", "--n", "11", "--dims", "9..3"]).status.code(), Some(2));
}

#[test]
fn spin_compare_json() {
    let dir = tempfile::tempdir().unwrap();
    let o = modp(dir.path(), &["spin-compare", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["schema"], "modp/1");
    assert_eq!(v["result"]["D_top"], 26);
    assert_eq!(v["result"]["D_low"], 26);
    assert_eq!(v["result"]["D_dR_lower"], 27);
}

#[test]
fn invariants_table_and_failure_code() {
    let dir = tempfile::tempdir().unwrap();
    let o = modp(dir.path(), &["invariants", "--group", "spin", "--n", "7", "--p", "2", "--max-degree", "10"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("k[c2,c3,eta2]"));
    assert!(text.trim_end().ends_with("PASS"));
    assert_eq!(text.lines().filter(|l| l.ends_with("yes")).count(), 11);
    // the squares of the coordinates do not generate in characteristic 2
    let o = modp(dir.path(), &["invariants", "--group", "B", "--n", "3", "--p", "2", "--max-degree", "4"]);
    assert_eq!(o.status.code(), Some(1));
    let o = modp(dir.path(), &["invariants", "--group", "B", "--n", "3", "--p", "3", "--max-degree", "6", "--csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("degree,expected,span_rank,invariants,ok\n0,1,1,1,true\n"));
}

#[test]
fn deterministic_json() {
    let dir = tempfile::tempdir().unwrap();
    let cases: &[&[&str]] = &[
        &["degrees", "-g", "Spin(11)"],
        &["primes", "-g", "G2"],
        &["weyl", "-g", "B3"],
        &["flag-poincare", "-g", "A2"],
        &["invariants", "-g", "symmetric", "-n", "4", "--max-degree", "6"],
        &["inv2-check", "--max-degree", "5"],
        &["ring", "--name", "bso", "-n", "5", "--max-degree", "8"],
        &["whitney", "--e", "a1;a2^2", "--f", "a3;a1*a2"],
        &["restrict", "-n", "7"],
        &["jacobian", "-r", "3", "--variant", "SO"],
        &["quillen", "-n", "10", "--dims", "0..12"],
        &["selftest", "--trials", "5", "--seed", "7"],
    ];
    for args in cases {
        let mut a: Vec<&str> = args.to_vec();
        a.push("--json");
        let first = modp(dir.path(), &a);
        let second = modp(dir.path(), &a);
        assert_eq!(first.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&first.stderr));
        assert_eq!(digest(&first), digest(&second), "{args:?}");
        a.push("--no-cache");
        assert_eq!(digest(&first), digest(&modp(dir.path(), &a)), "{args:?} without cache");
    }
}

#[test]
fn cache_hits_and_recovers() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["quillen", "-n", "11", "--dims", "30..34", "--json", "--verbose"];
    let first = modp(dir.path(), &args);
    assert!(String::from_utf8_lossy(&first.stderr).contains("Miss"));
    let second = modp(dir.path(), &args);
    assert!(String::from_utf8_lossy(&second.stderr).contains("Hit"));
    assert_eq!(first.stdout, second.stdout);
    for entry in std::fs::read_dir(dir.path()).unwrap() {
        std::fs::write(entry.unwrap().path(), "garbage").unwrap();
    }
    let third = modp(dir.path(), &args);
    assert!(String::from_utf8_lossy(&third.stderr).contains("Miss"));
    assert_eq!(first.stdout, third.stdout);
    let refreshed = modp(dir.path(), &[&args[..], &["--refresh-cache"]].concat());
    assert!(String::from_utf8_lossy(&refreshed.stderr).contains("Miss"));
}

#[test]
fn unwritable_cache_still_computes() {
    let dir = tempfile::tempdir().unwrap();
    let blocker = dir.path().join("file");
    std::fs::write(&blocker, "x").unwrap();
    let o = modp(&blocker.join("cache"), &["jacobian", "-r", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let err = String::from_utf8_lossy(&o.stderr);
    assert_eq!(err.matches("warning").count(), 1);
    assert!(stdout(&o).contains("det = t1 + t2"));
}
