//! End-to-end tests of the `asmkit` binary: exact output bytes, exit codes,
//! and the file-writing paths.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn asmkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_asmkit"))
        .args(args)
        .output()
        .expect("the binary runs")
}

fn stdout_text(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr_text(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("stderr is UTF-8")
}

#[test]
fn count_prints_the_documented_object() {
    let out = asmkit(&["count", "--n", "6"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_text(&out), "{\"n\":6,\"count\":\"7436\"}\n");
}

#[test]
fn count_methods_agree() {
    for method in ["formula", "brute", "transfer", "ideals"] {
        let out = asmkit(&["count", "--n", "5", "--method", method, "--format", "text"]);
        assert_eq!(out.status.code(), Some(0), "method {method}");
        assert_eq!(stdout_text(&out), "429\n", "method {method}");
    }
}

#[test]
fn order_zero_is_a_usage_error() {
    let out = asmkit(&["count", "--n", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn oversized_brute_count_is_a_domain_error() {
    let out = asmkit(&["count", "--n", "9", "--method", "brute"]);
    assert_eq!(out.status.code(), Some(1));
    let error: serde_json::Value =
        serde_json::from_str(stderr_text(&out).trim()).expect("stderr is one JSON object");
    assert_eq!(error["error"]["kind"], "domain");
}

#[test]
fn convert_reproduces_the_documented_triangle() {
    let out = asmkit(&[
        "convert",
        "--from",
        "asm",
        "--to",
        "monotone",
        "--inline",
        "0 1 0 0; 1 -1 1 0; 0 0 0 1; 0 1 0 0",
        "--format",
        "text",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_text(&out), "2\n1 3\n1 3 4\n1 2 3 4\n");
}

#[test]
fn convert_reads_stdin_and_emits_the_json_schema() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_asmkit"))
        .args(["convert", "--from", "asm", "--to", "height"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .expect("the binary starts");
    child
        .stdin
        .take()
        .expect("stdin is piped")
        .write_all(b"0 1 0\n1 -1 1\n0 1 0\n")
        .expect("stdin accepts the matrix");
    let out = child.wait_with_output().expect("the binary exits");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout_text(&out),
        "{\"kind\":\"height\",\"n\":3,\"data\":[[0,1,2,3],[1,2,1,2],[2,1,2,1],[3,2,1,0]]}\n"
    );
}

#[test]
fn convert_round_trips_through_json() {
    let first = asmkit(&[
        "convert",
        "--from",
        "asm",
        "--to",
        "six-vertex",
        "--inline",
        "0 1 0; 1 -1 1; 0 1 0",
    ]);
    assert_eq!(first.status.code(), Some(0));
    let vertex_json = stdout_text(&first);
    let second = asmkit(&[
        "convert",
        "--from",
        "six-vertex",
        "--to",
        "asm",
        "--inline",
        vertex_json.trim(),
        "--format",
        "text",
    ]);
    assert_eq!(second.status.code(), Some(0));
    assert_eq!(stdout_text(&second), "0 1 0\n1 -1 1\n0 1 0\n");
}

#[test]
fn convert_rejects_a_kind_mismatch() {
    let out = asmkit(&[
        "convert",
        "--from",
        "height",
        "--to",
        "asm",
        "--inline",
        "{\"kind\":\"asm\",\"n\":1,\"data\":[[1]]}",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let error: serde_json::Value =
        serde_json::from_str(stderr_text(&out).trim()).expect("stderr is one JSON object");
    assert_eq!(error["error"]["kind"], "bad-input");
}

#[test]
fn weight_handles_exact_rationals() {
    let out = asmkit(&["weight", "--n", "3", "--x", "1/2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_text(&out), "{\"n\":3,\"x\":\"1/2\",\"value\":\"13/2\"}\n");
}

#[test]
fn hybrid_weight_reports_its_factorization() {
    let out = asmkit(&["weight", "--n", "6", "--hybrid"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout_text(&out),
        "{\"n\":6,\"phase\":\"origin-even\",\"total\":\"1953125\",\
         \"two_exponent\":0,\"five_exponent\":9}\n"
    );
}

#[test]
fn fpl_histogram_is_sorted_and_totalled() {
    let out = asmkit(&["fpl", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout_text(&out),
        "{\"n\":3,\"total\":\"7\",\"patterns\":[\
         {\"pattern\":\"1-2,3-4,5-6\",\"count\":\"2\"},\
         {\"pattern\":\"1-2,3-6,4-5\",\"count\":\"1\"},\
         {\"pattern\":\"1-4,2-3,5-6\",\"count\":\"1\"},\
         {\"pattern\":\"1-6,2-3,4-5\",\"count\":\"2\"},\
         {\"pattern\":\"1-6,2-5,3-4\",\"count\":\"1\"}]}\n"
    );
}

#[test]
fn hankel_coefficients_start_as_documented() {
    let out = asmkit(&["hankel", "--coefficients", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout_text(&out),
        "{\"count\":3,\"coefficients\":[\"1\",\"3\",\"15\"]}\n"
    );
}

#[test]
fn sampling_is_deterministic_per_seed() {
    let first = asmkit(&["sample", "--n", "5", "--seed", "42"]);
    let second = asmkit(&["sample", "--n", "5", "--seed", "42"]);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(stdout_text(&first), stdout_text(&second));
    assert!(stdout_text(&first).contains("\"window\":256"));
}

#[test]
fn sample_writes_the_rendering_it_reports() {
    let dir = std::env::temp_dir().join(format!("asmkit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).expect("temp dir is writable");
    let path = dir.join("tiling.svg");
    let out = asmkit(&["sample", "--n", "4", "--seed", "7", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value =
        serde_json::from_str(stdout_text(&out).trim()).expect("stdout is one JSON object");
    let written = std::fs::read(&path).expect("the rendering was written");
    assert_eq!(report["format"], "svg");
    assert_eq!(report["bytes"], written.len());
    assert!(written.starts_with(b"<svg "));
    std::fs::remove_dir_all(&dir).expect("temp dir is removable");
}

#[test]
fn octahedron_pairs_land_in_the_named_file() {
    let dir = std::env::temp_dir().join(format!("asmkit-pairs-{}", std::process::id()));
    std::fs::create_dir_all(&dir).expect("temp dir is writable");
    let path = dir.join("pairs.json");
    let out = asmkit(&[
        "octahedron",
        "--n",
        "2",
        "--audit",
        "--pairs",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let pairs: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).expect("the file was written"))
            .expect("the file holds JSON");
    let entries = pairs.as_array().expect("the file holds a JSON array");
    assert_eq!(entries.len(), 8);
    for entry in entries {
        assert_eq!(entry["lower"].as_array().unwrap().len(), 2);
        assert_eq!(entry["upper"].as_array().unwrap().len(), 3);
    }
    std::fs::remove_dir_all(&dir).expect("temp dir is removable");
}

#[test]
fn unknown_symmetry_group_is_a_usage_error() {
    let out = asmkit(&["symmetric", "--n", "4", "--group", "spiral"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn selftest_can_run_a_single_check() {
    let out = asmkit(&["selftest", "--only", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_text(&out);
    assert!(text.contains("weighted-identities"));
    assert!(text.ends_with("1/1 criteria passed\n"));
}

#[test]
fn help_lists_every_subcommand() {
    let out = asmkit(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_text(&out);
    for name in [
        "convert",
        "count",
        "weight",
        "half",
        "symmetric",
        "hankel",
        "fpl",
        "sample",
        "octahedron",
        "cube",
        "selftest",
    ] {
        assert!(text.contains(name), "--help does not mention {name}");
    }
}
