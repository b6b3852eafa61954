use std::fs;
use std::process::{Command, Output};

fn kisces(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kisces"))
        .args(args)
        .env_remove("KISCES_CONFIG")
        .output()
        .unwrap()
}

#[test]
fn table1_runs_with_zero_configuration() {
    let out = kisces(&["table1"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("| A3 |"));
}

#[test]
fn config_errors_exit_2_without_output() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("bad.json");
    let out_path = dir.path().join("out.csv");
    fs::write(&cfg, r#"{"production": {"z": 1, "alpha_k": 0.36, "alpha_l": 0.55, "alpha_p": 0.1, "sigma_prod": 0.6}}"#).unwrap();
    let out = kisces(&[
        "table1",
        "--config",
        cfg.to_str().unwrap(),
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out_path.exists());
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("alpha_k+alpha_l+alpha_p"));

    fs::write(&cfg, r#"{"sedd": 3}"#).unwrap();
    assert_eq!(
        kisces(&["table1", "--config", cfg.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
    fs::write(&cfg, "{").unwrap();
    assert_eq!(
        kisces(&["table1", "--config", cfg.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(kisces(&["tabel1"]).status.code(), Some(2));
    assert_eq!(
        kisces(&["table1", "--format", "yaml"]).status.code(),
        Some(2)
    );
}

#[test]
fn missing_config_file_is_an_error() {
    let out = kisces(&["table1", "--config", "/nonexistent/kisces.json"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn model_errors_are_nonzero_with_command_context() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("divergent.json");
    fs::write(
        &cfg,
        r#"{"household": {"beta": 0.96, "sigma_c": 1.5, "gamma": 2, "phi": 0.05, "c_min": 0.1, "lambda": 0.9},
            "multiplier": {"mpi": 0.2, "b_slope": 1.5,
                           "slump": {"pi": 0, "expected_inflation": 0, "y": 0.9},
                           "normal": {"pi": 0.02, "expected_inflation": 0.02, "y": 1}}}"#,
    )
    .unwrap();
    let out = kisces(&["multiplier", "--config", cfg.to_str().unwrap()]);
    assert!(!out.status.success());
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("multiplier:"));
}

#[test]
fn env_var_config_and_flag_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cfg.json");
    fs::write(&cfg, r#"{"output_format": "csv", "seed": 4}"#).unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_kisces"))
        .arg("table1")
        .env("KISCES_CONFIG", &cfg)
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .starts_with("scenario,strategy,"));

    let out = Command::new(env!("CARGO_BIN_EXE_kisces"))
        .args(["table1", "--format", "json"])
        .env("KISCES_CONFIG", &cfg)
        .output()
        .unwrap();
    assert!(String::from_utf8(out.stdout).unwrap().starts_with('{'));
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("path.json");
    let out = kisces(&[
        "path",
        "--format",
        "json",
        "--seed",
        "7",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_slice(&fs::read(&path).unwrap()).unwrap();
    assert_eq!(v["rows"].as_array().unwrap().len(), 3);
    assert!(v["notes"].to_string().contains("seed 7"));
}
