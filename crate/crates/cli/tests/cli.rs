//! Process-level tests of the `z4codes` binary.

use std::io::Write;
use std::process::{Command, Output};

use z4codes_cli::format::parse_matrix_file;
use z4codes_core::codes::{is_self_dual, same_code};
use z4codes_core::z4::Z4Matrix;

fn z4codes(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_z4codes")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn temp_matrix(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

/// Split a multi-matrix stream on header lines and parse each block.
fn parse_stream(text: &str) -> Vec<Z4Matrix> {
    let mut blocks: Vec<String> = Vec::new();
    for line in text.lines() {
        if line.starts_with("z4 ") {
            blocks.push(String::new());
        }
        if let Some(last) = blocks.last_mut() {
            last.push_str(line);
            last.push('\n');
        }
    }
    blocks.iter().map(|b| parse_matrix_file(b).expect("block parses")).collect()
}

#[test]
fn analyze_prints_swe_polynomial() {
    let out = z4codes(&["analyze", "catalog:D6_oplus", "--swe"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(
        text.contains("a^6 + 3a^4c^2 + 8a^3c^3 + 12a^2b^4 + 3a^2c^4 + 24ab^4c + 12b^4c^2 + c^6")
    );
    assert!(text.contains("self-dual = true"));
}

#[test]
fn analyze_reports_non_self_orthogonal_codes() {
    let f = temp_matrix("z4 n=4 rows=1\n1000\n");
    let out = z4codes(&["analyze", f.path().to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("type = 4^1 2^0"));
    assert!(text.contains("self-orthogonal = false"));
}

#[test]
fn analyze_json_has_the_documented_fields() {
    let out = z4codes(&["analyze", "catalog:2I4", "--json", "--swe", "--lattice"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["type"], serde_json::json!([0, 4]));
    assert_eq!(v["dL"], 2);
    assert_eq!(v["dE"], 4);
    assert_eq!(v["lee"]["2"], 4);
    assert_eq!(v["lattice"]["mu"], 1);
    assert_eq!(v["lattice"]["kissing"], 8);
    assert!(v["swe"].is_array());
    assert_eq!(v["self_dual"], true);
}

#[test]
fn analyze_json_is_stable_across_thread_counts() {
    let a = z4codes(&["analyze", "catalog:L8", "--json", "--swe", "--threads", "1"]);
    let b = z4codes(&["analyze", "catalog:L8", "--json", "--swe", "--threads", "3"]);
    assert!(a.status.success() && b.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn analyze_rejects_lattice_below_cap() {
    let out = z4codes(&["analyze", "catalog:2I4", "--cap", "2", "--lattice"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn expand_saturates_the_order_two_seed_to_2i4() {
    let f = temp_matrix("z4 n=4 rows=1\n2000\n");
    let out = z4codes(&["expand", f.path().to_str().unwrap(), "--algorithm", "1"]);
    assert!(out.status.success());
    let mats = parse_stream(&stdout(&out));
    assert_eq!(mats.len(), 1);
    let two_i4 = Z4Matrix::parse_grid("2000\n0200\n0020\n0002").unwrap();
    assert!(same_code(&mats[0], &two_i4).unwrap());
}

#[test]
fn expand_emits_self_dual_matrices_with_provenance() {
    let f = temp_matrix("z4 n=8 rows=2\n10111200\n01110320\n");
    let out = z4codes(&["expand", f.path().to_str().unwrap(), "--algorithm", "2", "--limit", "8"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.lines().filter(|l| l.starts_with("# expansion")).count() == 8);
    let mats = parse_stream(&text);
    assert_eq!(mats.len(), 8);
    for m in &mats {
        assert!(is_self_dual(m).unwrap());
    }
}

#[test]
fn expand_search_output_is_seed_deterministic() {
    let f = temp_matrix("z4 n=6 rows=1\n111300\n");
    let path = f.path().to_str().unwrap().to_owned();
    let args = ["expand", &path, "--objective", "dL", "--limit", "16", "--seed", "5"];
    let a = z4codes(&args);
    let b = z4codes(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn parse_errors_exit_with_code_2_and_a_position() {
    let f = temp_matrix("z4 n=4 rows=1\n1211x\n");
    let out = z4codes(&["analyze", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 2"), "stderr was: {err}");
}

#[test]
fn usage_errors_exit_with_code_2() {
    let out = z4codes(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn reproduce_fast_passes() {
    let out = z4codes(&["reproduce", "--fast"]);
    assert!(out.status.success(), "stdout: {}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("all checks passed"));
    assert!(text.contains("SKIP G34_4"));
}

#[test]
fn analyze_lattice_of_the_length_28_code() {
    let out = z4codes(&["analyze", "catalog:G28_4", "--lattice"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("min norm = 3"), "{text}");
    assert!(text.contains("kissing = 2240"), "{text}");
}

#[test]
fn expand_writes_files_with_out_dir() {
    let dir = tempfile::tempdir().unwrap();
    let f = temp_matrix("z4 n=4 rows=1\n2000\n");
    let out = z4codes(&[
        "expand",
        f.path().to_str().unwrap(),
        "--algorithm",
        "1",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let written = std::fs::read_to_string(dir.path().join("expansion_0.z4")).unwrap();
    assert!(parse_matrix_file(&written).is_ok());
}

#[test]
fn expand_respects_target_k1() {
    let f = temp_matrix("z4 n=8 rows=1\n10111002\n");
    let out = z4codes(&[
        "expand",
        f.path().to_str().unwrap(),
        "--algorithm",
        "2",
        "--target-k1",
        "2",
        "--limit",
        "4",
    ]);
    assert!(out.status.success());
    for m in parse_stream(&stdout(&out)) {
        let p = z4codes_core::codes::standard_form(&m).unwrap();
        assert_eq!(p.k1(), 2);
    }
    // an infeasible target is a usage error
    let out =
        z4codes(&["expand", f.path().to_str().unwrap(), "--algorithm", "2", "--target-k1", "5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn matrix_files_round_trip_through_the_renderer() {
    use z4codes_cli::format::render_matrix_file;
    for name in ["A1", "D6_oplus", "G27_4"] {
        let m = z4codes_core::catalog::get(name).unwrap().matrix;
        assert_eq!(parse_matrix_file(&render_matrix_file(&m)).unwrap(), m);
    }
}
