//! End-to-end tests of the brsym binary: spec'd subcommand outputs, exit
//! codes and report determinism.

use std::process::{Command, Output};

fn brsym(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_brsym"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "invalid JSON ({e}): {}",
            String::from_utf8_lossy(&out.stdout)
        )
    })
}

#[test]
fn group_sd_n3_p3_lists_8_classes() {
    let out = brsym(&["group", "--family", "sd", "--n", "3", "--p", "3", "--json"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["family"], "SD");
    assert_eq!(v["n"], 3);
    assert_eq!(v["order"], 24);
    assert_eq!(v["pregular_classes"].as_array().unwrap().len(), 8);
    assert_eq!(v["prop_conformance"]["matches"], true);
}

#[test]
fn group_sd_n2_p2_single_class() {
    let out = brsym(&["group", "--family", "sd", "--n", "2", "--p", "2", "--json"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["pregular_classes"].as_array().unwrap().len(), 1);
}

#[test]
fn group_d_m6_p3_four_classes() {
    let out = brsym(&["group", "--family", "d", "--m", "6", "--p", "3", "--json"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["family"], "D");
    assert_eq!(v["pregular_classes"].as_array().unwrap().len(), 4);
}

#[test]
fn chars_sd_n2_p5_has_7_ibr_rows() {
    let out = brsym(&["chars", "--family", "sd", "--n", "2", "--p", "5", "--json"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["brauer"]["rows"].as_array().unwrap().len(), 7);
    let labels: Vec<&str> = v["brauer"]["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["label"].as_str().unwrap())
        .collect();
    assert_eq!(labels, ["chi0", "chi1", "chi2", "chi3", "psi1", "psi2", "psi5"]);
}

#[test]
fn gram_sd24_p3_chi0_is_24x24() {
    let out = brsym(&[
        "gram", "--family", "sd", "--n", "3", "--p", "3", "--char", "chi'0", "--alpha", "d0",
        "--d", "2", "--json",
    ]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    let entries = v["entries_exact"].as_array().unwrap();
    assert_eq!(entries.len(), 24);
    assert_eq!(entries[0].as_array().unwrap().len(), 24);
    // exact serialization schema for each entry
    assert!(entries[0][0]["order"].is_number());
    assert!(entries[0][0]["terms"].is_array());
    assert_eq!(v["side"], "poly");
}

#[test]
fn verdict_d12_p5_chihat2_false_false_null() {
    let out = brsym(&[
        "verdict", "--family", "d", "--m", "12", "--p", "5", "--char", "chihat2", "--json",
    ]);
    assert!(out.status.success(), "agreement exits 0");
    let v = stdout_json(&out);
    assert_eq!(v["closed_form"], false);
    assert_eq!(v["brute_force"], false);
    assert_eq!(v["witness"], serde_json::Value::Null);
}

#[test]
fn verdict_d12_p5_chihat3_true_with_witness() {
    let out = brsym(&[
        "verdict", "--family", "d", "--m", "12", "--p", "5", "--char", "chihat3", "--d", "1",
        "--json",
    ]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["closed_form"], true);
    assert_eq!(v["brute_force"], true);
    assert!(v["witness"].as_array().unwrap().len() >= 4);
}

#[test]
fn verify_rejects_invalid_prime_with_exit_3() {
    let out = brsym(&["verify", "--primes", "4"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verify_rejects_oversized_group_with_exit_3() {
    let out = brsym(&["verify", "--sd", "9"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn usage_errors_exit_1() {
    let out = brsym(&["group", "--family", "sd", "--p", "3"]);
    assert_eq!(out.status.code(), Some(1), "missing --n");
    let out = brsym(&["group", "--family", "sd", "--n", "2", "--p", "3", "--bogus"]);
    assert_eq!(out.status.code(), Some(1), "unknown flag");
    let out = brsym(&["verdict", "--family", "d", "--m", "12", "--p", "5", "--char", "zeta9"]);
    assert_eq!(out.status.code(), Some(1), "unparseable label");
    let out = brsym(&["verdict", "--family", "d", "--m", "12", "--p", "5", "--char", "chi11"]);
    assert_eq!(out.status.code(), Some(1), "label outside IBr");
}

#[test]
fn verify_json_is_deterministic_across_parallelism() {
    let args = [
        "verify", "--sd", "2", "--dihedral", "6", "--primes", "2,3", "--degrees", "1",
        "--dimvs", "1,2", "--json",
    ];
    let a = brsym(&args);
    assert!(a.status.success());
    let b = brsym(&args);
    let mut serial = args.to_vec();
    serial.push("--serial");
    let c = brsym(&serial);
    assert_eq!(a.stdout, b.stdout, "byte-identical across runs");
    assert_eq!(a.stdout, c.stdout, "byte-identical across parallelism width");
}

#[test]
fn verify_config_file_and_out_dir() {
    let dir = std::env::temp_dir().join(format!("brsym_cli_test_{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("sweep.conf");
    std::fs::write(
        &cfg,
        "# tiny grid\nsd = 2\ndihedral =\nprimes = 2\ndegrees = 1\ndimvs = 1\nparallel = false\n",
    )
    .unwrap();
    let out = brsym(&[
        "verify",
        "--config",
        cfg.to_str().unwrap(),
        "--out",
        dir.to_str().unwrap(),
        "--json",
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v = stdout_json(&out);
    assert_eq!(v["summary"]["discrepancies"], 0);
    let summary = std::fs::read_to_string(dir.join("verify_summary.json")).unwrap();
    assert!(summary.contains("millis"), "out-dir summary carries timings");
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn config_file_with_unknown_key_is_usage_error() {
    let dir = std::env::temp_dir().join(format!("brsym_cli_badcfg_{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("bad.conf");
    std::fs::write(&cfg, "frobnicate = 12\n").unwrap();
    let out = brsym(&["verify", "--config", cfg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn gram_tensor_side() {
    let out = brsym(&[
        "gram", "--family", "d", "--m", "4", "--char", "chi1", "--side", "tensor", "--dimv",
        "2", "--alpha", "1,2,1,1", "--json",
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v = stdout_json(&out);
    assert_eq!(v["side"], "tensor");
    assert!(v["entries_exact"].as_array().unwrap().len() >= 1);
}
