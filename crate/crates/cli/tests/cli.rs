use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn ismzv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ismzv"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    dir.join(name)
}

#[test]
fn compute_column_of_twos() {
    let out = ismzv(&[
        "compute",
        "--shape",
        "[1,1]",
        "--entries",
        "[[2],[2]]",
        "--N",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["coefficients"], serde_json::json!(["1/4", "17/16"]));
    assert_eq!(doc["ring"], "rational");
}

#[test]
fn compute_trivial_shapes() {
    let out = ismzv(&["compute", "--shape", "[]", "--N", "9"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["coefficients"], serde_json::json!(["1"]));
    let out = ismzv(&[
        "compute",
        "--shape",
        "[1]",
        "--entries",
        "[[2]]",
        "--N",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["coefficients"], serde_json::json!([]));
}

#[test]
fn compute_keys_and_diagonal() {
    // a single part: Σ_{m<3} m^{-2} = 5/4
    let out = ismzv(&["compute", "--keys", "[2]", "--N", "3"]);
    assert_eq!(json(&out)["coefficients"], serde_json::json!(["5/4"]));
    let out = ismzv(&[
        "compute",
        "--shape",
        "[1,1]",
        "--diagonal",
        r#"{"0":2,"-1":2}"#,
        "--N",
        "3",
    ]);
    assert_eq!(
        json(&out)["coefficients"],
        serde_json::json!(["1/4", "17/16"])
    );
}

#[test]
fn compute_in_series_rings() {
    let out = ismzv(&[
        "compute",
        "--keys",
        "[1]",
        "--N",
        "3",
        "--ring",
        "qseries:4",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["ring"], "qseries:4");
    // 1 + 1/(1+q) = 2 - q + q^2 - q^3
    assert_eq!(
        doc["coefficients"][0]["coeffs"],
        serde_json::json!(["2", "-1", "1", "-1"])
    );
    let out = ismzv(&["compute", "--keys", "[2,1]", "--N", "3", "--ring", "qsym"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["ring"], "qsym");
}

#[test]
fn malformed_input_exits_two() {
    for args in [
        vec!["compute", "--shape", "[2,1", "--N", "3"],
        vec![
            "compute",
            "--shape",
            "[1,2]",
            "--entries",
            "[[1],[1,1]]",
            "--N",
            "3",
        ],
        vec!["compute", "--shape", "[2]", "--N", "3"],
        vec!["compute", "--keys", "[2]"],
        vec!["compute", "--keys", "[2]", "--N", "3", "--ring", "complex"],
        vec!["verify", "--identity", "nothing"],
        vec!["jt-verify", "--shape", "[2,1]", "--diagonal", r#"{"0":2}"#],
        vec!["lemma45-verify", "--shape", "[2,1]", "--b", "[0,1]"],
        vec!["bogus"],
    ] {
        assert_eq!(ismzv(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn domain_errors_exit_three() {
    let out = ismzv(&[
        "compute",
        "--keys",
        "[0]",
        "--N",
        "3",
        "--ring",
        "qseries:4",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let out = ismzv(&["compute", "--keys", "[-1]", "--N", "3", "--ring", "qsym"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verify_examples_pass() {
    for args in [
        vec![
            "verify",
            "--identity",
            "conjugation",
            "--max-cells",
            "4",
            "--N",
            "4",
            "--seed",
            "7",
        ],
        vec![
            "verify",
            "--identity",
            "jacobi-trudi",
            "--shape",
            "[2,1]",
            "--N",
            "4",
            "--diagonal",
            r#"{"-1":2,"0":2,"1":2}"#,
        ],
        vec![
            "verify",
            "--identity",
            "lgv",
            "--shape",
            "[2,2]",
            "--N",
            "3",
        ],
        vec!["lemma45-verify", "--shape", "[4,2,2,1]", "--b", "[2,1,1,0]"],
        vec!["palindrome-verify", "--keys", "[2,3]", "--N", "4"],
        vec!["verify", "--identity", "oracles", "--keys", "[2,1,3]"],
        vec!["verify", "--identity", "path-sum", "--max-cells", "3"],
        vec![
            "jt-verify",
            "--ring",
            "qseries:8",
            "--shape",
            "[2,2]",
            "--N",
            "4",
        ],
    ] {
        let out = ismzv(&args);
        assert_eq!(
            out.status.code(),
            Some(0),
            "{args:?}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        let doc = json(&out);
        assert_eq!(doc["pass"], true);
        assert!(doc["reports"][0]["checked"].as_u64().unwrap() > 0);
    }
}

#[test]
fn worked_single_layer_stats() {
    let out = ismzv(&[
        "lemma45-verify",
        "--shape",
        "[4,2,2,1]",
        "--b",
        "[2,1,1,0]",
        "--M",
        "2",
    ]);
    let doc = json(&out);
    let stats = &doc["reports"][0]["instances"][0]["sides"]["stats"];
    assert_eq!(stats["v1"], 2);
    assert_eq!(stats["h1"], 1);
    assert_eq!(stats["one_ordered"], true);
}

#[test]
fn oracles_need_rationals() {
    let out = ismzv(&["verify", "--identity", "oracles", "--ring", "qsym"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = ["conjugation-verify", "--max-cells", "3", "--seed", "11"];
    let a = ismzv(&args);
    let b = ismzv(&args);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stderr, b.stderr);
    let c = ismzv(&["conjugation-verify", "--max-cells", "3", "--seed", "12"]);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn config_file_with_flag_override() {
    let path = scratch("config.json");
    std::fs::write(&path, r#"{"shape":[1,1],"entries":[[2],[2]],"N":4}"#).unwrap();
    let path = path.to_str().unwrap();
    let from_file = json(&ismzv(&["compute", "--config", path]));
    assert_eq!(from_file["N"], 4);
    let overridden = json(&ismzv(&["compute", "--config", path, "--N", "3"]));
    assert_eq!(
        overridden["coefficients"],
        serde_json::json!(["1/4", "17/16"])
    );

    let bad = scratch("bad.json");
    std::fs::write(&bad, r#"{"unknown":1}"#).unwrap();
    assert_eq!(
        ismzv(&["compute", "--config", bad.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn output_flag_writes_file() {
    let path = scratch("count.json");
    let out = ismzv(&[
        "oyt-count",
        "--shape",
        "[2,2]",
        "--N",
        "4",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["count"], 17);
}
