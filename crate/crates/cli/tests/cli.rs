use std::process::{Command, Output};

use serde_json::Value;

fn wbr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wbr"))
        .args(args)
        .env_remove("WBR_SIZE_CAP")
        .output()
        .unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn center_of_b22_over_generic_delta() {
    let out = wbr(&[
        "center", "--r", "2", "--s", "2", "--delta", "generic", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["dimension"], 6);
    assert_eq!(v["schema"], "wbr-report/1");
    assert_eq!(v["supersymmetric"]["rank"], 6);
}

#[test]
fn verify_passes_at_seven_thirds() {
    let out = wbr(&["verify", "--r", "2", "--s", "2", "--delta", "7/3"]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v = json(&out);
    assert_eq!(v["relations"]["passed"], true);
    assert_eq!(v["idempotents"]["passed"], true);
}

#[test]
fn blocks_at_minus_one_link_a_balanced_pair() {
    let out = wbr(&["blocks", "--r", "2", "--s", "1", "--delta", "-1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let want_a = serde_json::json!({"left": [2], "right": [1], "t": 0});
    let want_b = serde_json::json!({"left": [1], "right": [], "t": 1});
    let blocks = v["blocks"].as_array().unwrap();
    assert!(blocks.iter().any(|b| {
        let b = b.as_array().unwrap();
        b.contains(&want_a) && b.contains(&want_b)
    }));
}

#[test]
fn output_is_deterministic() {
    let args = ["characters", "--r", "2", "--s", "1", "--delta", "4"];
    assert_eq!(wbr(&args).stdout, wbr(&args).stdout);
    let args = [
        "qverify",
        "--r",
        "1",
        "--s",
        "1",
        "--mode",
        "rational-qr",
        "--seed",
        "3",
    ];
    assert_eq!(wbr(&args).stdout, wbr(&args).stdout);
}

#[test]
fn flag_errors_exit_two() {
    assert_eq!(
        wbr(&["dims", "--r", "x", "--s", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        wbr(&["center", "--r", "1", "--s", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        wbr(&["center", "--r", "1", "--s", "1", "--delta", "1/0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        wbr(&["dims", "--r", "5", "--s", "3"]).status.code(),
        Some(2)
    );
    assert_eq!(
        wbr(&["dims", "--r", "2", "--s", "2", "--size-cap", "3"])
            .status
            .code(),
        Some(2)
    );
    let out = Command::new(env!("CARGO_BIN_EXE_wbr"))
        .args(["dims", "--r", "2", "--s", "2"])
        .env("WBR_SIZE_CAP", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(
        wbr(&["qverify", "--r", "3", "--s", "3"]).status.code(),
        Some(2)
    );
}

#[test]
fn non_semisimple_idempotents_fail() {
    let out = wbr(&["idempotents", "--r", "1", "--s", "1", "--delta", "0"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not semisimple"));
}

#[test]
fn dims_and_text_rendering() {
    let out = wbr(&[
        "dims", "--r", "2", "--s", "2", "--delta", "0", "--format", "text",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("diagrams: 24"));
    assert!(text.contains("dot_weights: 5"));
}

#[test]
fn quantized_verification() {
    let out = wbr(&[
        "qverify",
        "--r",
        "2",
        "--s",
        "1",
        "--mode",
        "generic-q",
        "--N",
        "3",
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v = json(&out);
    assert_eq!(v["dimension"], 6);
    assert_eq!(v["classical_limit"]["passed"], true);
    assert_eq!(v["center"]["dimension"], 3);
    let out = wbr(&[
        "qverify",
        "--r",
        "2",
        "--s",
        "1",
        "--mode",
        "rational-qr",
        "--q",
        "2",
        "--rho",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["points"].as_array().unwrap().len(), 4);
    assert_eq!(v["passed"], true);
}
