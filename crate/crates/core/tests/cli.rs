//! End-to-end tests of the `tgc` binary: file round trips, deterministic
//! reports, the exit-code contract, and golden outputs for each subcommand.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tgc::binary::cyclic;
use tgc::constructions::derive;
use tgc::examples::builtin_example;
use tgc::format::{parse_binary, serialize_cube};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_tgc"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn run_ok(args: &[&str]) -> Value {
    let out = run(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("reports are JSON")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

/// Writes a built-in example through the binary itself and returns the path.
fn example_file(dir: &Path, name: &str) -> PathBuf {
    let path = dir.join(format!("{name}.tgc"));
    let out = run(&["example", name, "-o", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);
    path
}

fn without_timing(mut report: Value) -> Value {
    report
        .as_object_mut()
        .expect("reports are objects")
        .remove("timing_ms")
        .expect("reports carry timings");
    report
}

#[test]
fn example_output_is_byte_identical_between_stdout_and_file() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["z3", "z4p1", "quat"] {
        let stdout_bytes = run(&["example", name]).stdout;
        let path = example_file(dir.path(), name);
        let file_bytes = std::fs::read(&path).unwrap();
        assert_eq!(stdout_bytes, file_bytes, "example {name}");
        // Both equal the library serialization of the same cube.
        let lib_text = serialize_cube(&builtin_example(name).unwrap());
        assert_eq!(file_bytes, lib_text.into_bytes(), "example {name}");
    }
}

#[test]
fn reports_are_deterministic_up_to_timing() {
    let dir = tempfile::tempdir().unwrap();
    let z3 = example_file(dir.path(), "z3");
    let z3s = z3.to_str().unwrap();
    for args in [
        vec!["verify", z3s],
        vec!["rep", z3s, "--kind", "middle"],
        vec!["decompose", z3s, "--kind", "middle"],
        vec!["classes", z3s, "--relation", "conj"],
    ] {
        let first = without_timing(run_ok(&args));
        let second = without_timing(run_ok(&args));
        assert_eq!(first, second, "two runs of {args:?}");
    }
}

#[test]
fn exit_codes_follow_the_contract() {
    let dir = tempfile::tempdir().unwrap();
    let z3 = example_file(dir.path(), "z3");
    let z3s = z3.to_str().unwrap();

    // 0: property checked and true.
    let out = run(&["verify", z3s]);
    assert_eq!(exit_code(&out), 0);
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["result"]["is_ternary_group"], Value::Bool(true));

    // 1: clean input whose property is false; the report carries witnesses.
    let constant = dir.path().join("constant.tgc");
    std::fs::write(&constant, "tgc v1\norder 2\n0 0\n0 0\n0 0\n0 0\n").unwrap();
    let out = run(&["verify", constant.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 1);
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["result"]["is_ternary_group"], Value::Bool(false));
    assert!(report["result"]["witnesses"]["ternary_group"].is_object());

    // 1: isomorphism search with no result.
    let z4 = example_file(dir.path(), "z4p1");
    let out = run(&["iso", z3s, z4.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 1);
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["result"]["isomorphic"], Value::Bool(false));

    // 0: isomorphism found, with the witness map in the report.
    let s3odd = example_file(dir.path(), "s3odd");
    let out = run(&["iso", z3s, s3odd.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["result"]["isomorphic"], Value::Bool(true));
    assert!(report["result"]["map"].is_array());

    // 2: malformed input, with the line number on stderr.
    let garbage = dir.path().join("garbage.tgc");
    std::fs::write(&garbage, "not a cube\n").unwrap();
    let out = run(&["verify", garbage.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 2);
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.starts_with("error:"), "stderr: {stderr}");
    assert!(stderr.contains("line 1"), "stderr: {stderr}");

    // 2: unknown example name, listing the known ones.
    let out = run(&["example", "nope"]);
    assert_eq!(exit_code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("z3"));

    // 2: out-of-range base point.
    let out = run(&["retract", z3s, "--at", "9"]);
    assert_eq!(exit_code(&out), 2);

    // 2: unknown representation kind.
    let out = run(&["rep", z3s, "--kind", "sideways"]);
    assert_eq!(exit_code(&out), 2);

    // 2: missing file.
    let out = run(&["verify", dir.path().join("missing.tgc").to_str().unwrap()]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn skew_and_gh_golden_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let z4 = example_file(dir.path(), "z4p1");
    let report = run_ok(&["skew", z4.to_str().unwrap()]);
    assert_eq!(report["result"]["skew"], serde_json::json!([3, 2, 1, 0]));
    assert_eq!(report["result"]["identities_verified"], Value::Bool(true));

    let z3 = example_file(dir.path(), "z3");
    let report = run_ok(&["gh", z3.to_str().unwrap(), "--at", "0"]);
    let result = &report["result"];
    assert_eq!(result["base_point"], serde_json::json!(0));
    assert_eq!(result["identity"], serde_json::json!(0));
    assert_eq!(result["phi"], serde_json::json!([0, 2, 1]));
    assert_eq!(result["b_element"], serde_json::json!(0));
    assert_eq!(result["reconstruction_verified"], Value::Bool(true));
}

#[test]
fn retract_and_cover_write_table_files() {
    let dir = tempfile::tempdir().unwrap();
    let z3 = example_file(dir.path(), "z3");
    let table_path = dir.path().join("retract.tgb");
    let report = run_ok(&[
        "retract",
        z3.to_str().unwrap(),
        "--at",
        "0",
        "-o",
        table_path.to_str().unwrap(),
    ]);
    assert_eq!(report["result"]["is_group"], Value::Bool(true));
    assert_eq!(report["result"]["identity"], serde_json::json!(0));
    let written = std::fs::read_to_string(&table_path).unwrap();
    assert_eq!(Value::String(written.clone()), report["result"]["table"]);
    assert_eq!(parse_binary(&written).unwrap().order(), 3);

    let z4 = example_file(dir.path(), "z4p1");
    let cover_path = dir.path().join("cover.tgb");
    let report = run_ok(&[
        "cover",
        z4.to_str().unwrap(),
        "--at",
        "0",
        "-o",
        cover_path.to_str().unwrap(),
    ]);
    assert_eq!(report["result"]["order"], serde_json::json!(8));
    assert_eq!(report["result"]["neutral"], serde_json::json!(7));
    let group = parse_binary(&std::fs::read_to_string(&cover_path).unwrap()).unwrap();
    assert_eq!(group.order(), 8);
    // Sidecar with the neutral element and subgroup mask.
    let sidecar_path = dir.path().join("cover.tgb.json");
    let sidecar: Value =
        serde_json::from_str(&std::fs::read_to_string(&sidecar_path).unwrap()).unwrap();
    assert_eq!(sidecar["neutral"], serde_json::json!(7));
    assert_eq!(
        sidecar["h_mask"],
        serde_json::json!([false, false, false, false, true, true, true, true])
    );
}

#[test]
fn rep_decompose_and_classes_golden_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let z3 = example_file(dir.path(), "z3");
    let z3s = z3.to_str().unwrap();

    let report = run_ok(&["rep", z3s, "--kind", "left"]);
    let result = &report["result"];
    assert_eq!(result["kind"], serde_json::json!("left"));
    assert_eq!(result["order"], serde_json::json!(3));
    assert_eq!(result["dim"], serde_json::json!(3));
    assert_eq!(result["verified"], Value::Bool(true));
    assert_eq!(result["unitary"], Value::Bool(true));
    assert_eq!(
        result["entries"]["0,0"],
        serde_json::json!([[[1, 0], [0, 0], [0, 0]], [[0, 0], [1, 0], [0, 0]], [[0, 0], [0, 0], [1, 0]]])
    );

    let report = run_ok(&["decompose", z3s, "--kind", "middle"]);
    assert_eq!(report["result"]["kind"], serde_json::json!("middle"));
    assert_eq!(report["result"]["block_dims"], serde_json::json!([1, 2]));
    assert_eq!(
        report["result"]["irreducible"],
        serde_json::json!([true, true])
    );

    let quat = example_file(dir.path(), "quat");
    let report = run_ok(&["classes", quat.to_str().unwrap(), "--relation", "conj"]);
    assert_eq!(
        report["result"]["on_elements"],
        serde_json::json!([[0], [1], [2, 3], [4, 5], [6, 7]])
    );
    let report = run_ok(&["classes", quat.to_str().unwrap(), "--relation", "middle"]);
    let classes = report["result"]["classes"].as_array().unwrap();
    assert_eq!(classes.len(), 32);
    assert!(classes.iter().all(|c| c.as_array().unwrap().len() == 2));
}

#[test]
fn enumerate_writes_loadable_files_and_an_index() {
    let dir = tempfile::tempdir().unwrap();
    let outdir = dir.path().join("census2");
    let report = run_ok(&[
        "enumerate",
        "--order",
        "2",
        "--outdir",
        outdir.to_str().unwrap(),
    ]);
    assert_eq!(report["result"]["count"], serde_json::json!(2));
    let index: Value =
        serde_json::from_str(&std::fs::read_to_string(outdir.join("index.json")).unwrap())
            .unwrap();
    assert_eq!(index["count"], serde_json::json!(2));
    for i in 0..2 {
        let file = outdir.join(format!("order2_{i}.tgc"));
        assert!(file.exists(), "{file:?}");
        let out = run(&["verify", file.to_str().unwrap()]);
        assert_eq!(exit_code(&out), 0, "entry {i} verifies as a ternary group");
    }
}

#[test]
fn mediality_check_is_gated_by_order_and_flag() {
    let dir = tempfile::tempdir().unwrap();
    // Order 5 exceeds the default bound for the O(n⁹) mediality sweep.
    let big = dir.path().join("cyclic5.tgc");
    std::fs::write(&big, serialize_cube(&derive(&cyclic(5)))).unwrap();
    let bigs = big.to_str().unwrap();

    let report = run_ok(&["verify", bigs]);
    assert_eq!(report["result"]["medial"], Value::Null);

    let report = run_ok(&["verify", bigs, "--force-medial"]);
    assert_eq!(report["result"]["medial"], Value::Bool(true));
}
