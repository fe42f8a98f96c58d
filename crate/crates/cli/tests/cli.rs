//! End-to-end CLI behaviour: exit codes, output formats, config handling
//! and byte-level determinism of the JSON reports.

use std::process::{Command, Output};

fn invpot(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_invpot"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn list_counts_and_filters() {
    let out = invpot(&["list", "--dim", "6", "--kind", "P"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 9);
    assert_eq!(rows.iter().filter(|r| r.contains("EMPTY")).count(), 2);

    let out = invpot(&["list", "--kind", "C"]);
    assert_eq!(stdout(&out).lines().count(), 1 + 7);

    let out = invpot(&["list"]);
    assert_eq!(stdout(&out).lines().count(), 1 + 102);

    // out-of-range dimension: usage error
    let out = invpot(&["list", "--dim", "7"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("dimension out of range 1..6"));
}

#[test]
fn verify_all_passes_and_empty_class_skips() {
    let out = invpot(&["verify", "--all", "--seed", "42"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("99 passed, 0 failed, 3 skipped"));

    let out = invpot(&["verify", "--class", "P5.2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("SKIP(EMPTY)"));
}

#[test]
fn verify_json_is_byte_identical_across_runs() {
    let a = invpot(&["verify", "--all", "--seed", "42", "--format", "json"]);
    let b = invpot(&["verify", "--all", "--seed", "42", "--format", "json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);

    // stable field names
    let text = stdout(&a);
    let first = text.lines().next().unwrap();
    let v: serde_json::Value = serde_json::from_str(first).unwrap();
    for key in [
        "class",
        "dim",
        "points",
        "max_residual",
        "closedness_max",
        "detected_dim",
        "pass",
        "seed",
        "skipped_empty",
        "per_generator",
    ] {
        assert!(v.get(key).is_some(), "missing JSON field {key}");
    }
}

#[test]
fn csv_has_the_stable_header() {
    let out = invpot(&["verify", "--class", "P1.1a", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(
        text.lines().next().unwrap(),
        "class,dim,points,max_residual,closedness_max,detected_dim,pass,seed"
    );
    assert!(text.lines().nth(1).unwrap().starts_with("P1.1a,1,100,"));
}

#[test]
fn config_file_roundtrip_and_constraints() {
    let dir = std::env::temp_dir();

    // the worked-example preset
    let preset = dir.join("invpot_preset.toml");
    std::fs::write(
        &preset,
        r#"
class = "P3.19"
preset = "example"
points = 50
seed = 7

[params]
lambda = 1.0
"#,
    )
    .unwrap();
    let out = invpot(&["verify", "--config", preset.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));

    // explicit polynomial slots
    let poly = dir.join("invpot_poly.toml");
    std::fs::write(
        &poly,
        r#"
class = "P3.20"
points = 40

[[slot]]
label = "A4"
terms = [{ exps = [2, 0], coeff = 1.0 }, { exps = [0, 1], coeff = 1.0 }]
"#,
    )
    .unwrap();
    let out = invpot(&["verify", "--config", poly.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));

    // the λμ = 0 coupling of the parabolic-helix family
    let bad = dir.join("invpot_bad.toml");
    std::fs::write(
        &bad,
        r#"
class = "P1.4"

[params]
lambda = 1.0
mu = 1.0
"#,
    )
    .unwrap();
    let out = invpot(&["verify", "--config", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("λμ=0"));

    // unknown keys are rejected
    let unknown = dir.join("invpot_unknown.toml");
    std::fs::write(&unknown, "class = \"P1.1a\"\nbogus = 3\n").unwrap();
    let out = invpot(&["verify", "--config", unknown.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn detect_reports_dimensions() {
    // the five-dimensional field tensor class at C = 1
    let out = invpot(&["detect", "--class", "C5.9", "--param", "c=1.0"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("detected symmetry dimension: 5"));
    assert!(text.contains("contains the class algebra: true"));

    // the zero field (all constants zero) admits everything
    let out = invpot(&[
        "detect", "--class", "P4.1", "--param", "c1=0", "--param", "c2=0", "--param", "c3=0",
        "--param", "c4=0",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("detected symmetry dimension: 10"));

    // a generic rotation-invariant potential contains the rotation algebra
    let out = invpot(&["detect", "--class", "P3.20"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("contains the class algebra: true"));
}

#[test]
fn appendix_suite_has_nine_pass_rows() {
    let out = invpot(&["appendix"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 9);
    assert!(text.contains("genericity violated"));
    assert!(text.contains("ZERO-FIELD"));
}

#[test]
fn usage_errors_exit_2() {
    let out = invpot(&["verify"]);
    assert_eq!(out.status.code(), Some(2));
    let out = invpot(&["detect", "--class", "P9.9"]);
    assert_eq!(out.status.code(), Some(2));
    let out = invpot(&["verify", "--class", "P3.19"]); // λ is required and nonzero
                                                       // random draw supplies λ, so this succeeds
    assert_eq!(out.status.code(), Some(0));
}
