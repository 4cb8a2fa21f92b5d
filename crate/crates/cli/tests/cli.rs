//! End-to-end tests of the compiled binary: exit codes, report formats
//! and byte-level determinism.

use std::path::Path;
use std::process::{Command, Output};

use jembed_core::schema::{PropsDoc, ReportDoc};

fn jembed(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jembed"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
        .to_str()
        .unwrap()
        .to_string()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn tangent_plane_is_embeddable() {
    let out = jembed(&["classify", "--input", &fixture("veronese-tangent-plane.json")]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let text = stdout(&out);
    assert!(text.contains("case: Pair-3"), "{text}");
    assert!(text.contains("tangency point"), "{text}");
}

#[test]
fn conic_plane_is_an_obstruction() {
    let out = jembed(&["classify", "--input", &fixture("veronese-conic-plane.json")]);
    assert_eq!(out.status.code(), Some(1), "{out:?}");
    let text = stdout(&out);
    assert!(text.contains("NOT isomorphically projectable"), "{text}");
    assert!(text.contains("join [B; Y] has dimension 5"), "{text}");
}

#[test]
fn json_reports_are_byte_identical_across_runs() {
    let args = [
        "classify",
        "--input",
        &fixture("veronese-tangent-plane.json"),
        "--seed",
        "5",
        "--report",
        "json",
    ];
    let a = jembed(&args);
    let b = jembed(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);

    // And parsing then re-serializing reproduces the same bytes.
    let text = stdout(&a);
    let doc = ReportDoc::from_json(&text).unwrap();
    assert_eq!(doc.to_json(), text);
    assert_eq!(doc.seed, 5);
}

#[test]
fn prime_field_agrees_on_the_verdict() {
    let rational = jembed(&["classify", "--input", &fixture("veronese-conic-plane.json")]);
    let prime = jembed(&[
        "classify",
        "--input",
        &fixture("veronese-conic-plane.json"),
        "--field",
        "prime",
    ]);
    assert_eq!(rational.status.code(), Some(1));
    assert_eq!(prime.status.code(), Some(1));
}

#[test]
fn unknown_fields_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("extra.json");
    std::fs::write(
        &path,
        r#"{"schema_version":1,"components":[],"comment":"hello"}"#,
    )
    .unwrap();
    let out = jembed(&["classify", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2), "{out:?}");
}

#[test]
fn empty_component_list_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("empty.json");
    std::fs::write(&path, r#"{"schema_version":1,"components":[]}"#).unwrap();
    let out = jembed(&["classify", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2), "{out:?}");
}

#[test]
fn missing_input_exits_2() {
    let out = jembed(&["classify", "--input", "/nonexistent/v.json"]);
    assert_eq!(out.status.code(), Some(2), "{out:?}");
}

#[test]
fn bad_modulus_exits_2() {
    let out = jembed(&[
        "classify",
        "--input",
        &fixture("veronese-tangent-plane.json"),
        "--field",
        "prime:97",
    ]);
    assert_eq!(out.status.code(), Some(2), "{out:?}");
}

#[test]
fn props_default_shape_passes() {
    let out = jembed(&[
        "props", "--trials", "2", "--seed", "9", "--field", "prime", "--report", "json",
    ]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let doc = PropsDoc::from_json(&stdout(&out)).unwrap();
    assert!(doc.passed);
    assert_eq!(doc.suites.len(), 7);
    assert_eq!(doc.instances_per_clause, 2);
}

#[test]
fn props_violations_exit_nonzero_with_repro_seed() {
    let out = jembed(&[
        "props",
        "--trials",
        "2",
        "--seed",
        "31",
        "--field",
        "prime",
        "--inject-failure",
    ]);
    assert_eq!(out.status.code(), Some(1), "{out:?}");
    let text = stdout(&out);
    assert!(text.contains("FAIL"), "{text}");
    assert!(text.contains("repro seed 31"), "{text}");
}

#[test]
fn corpus_files_classify_to_their_expected_case() {
    let dir = tempfile::tempdir().unwrap();
    let out = jembed(&["corpus", "--out-dir", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    assert!(stdout(&out).contains("veronese-with-tangent-plane.json"));

    let case = dir.path().join("veronese-with-tangent-plane.json");
    let run = jembed(&["classify", "--input", case.to_str().unwrap(), "--report", "json"]);
    assert_eq!(run.status.code(), Some(0), "{run:?}");
    let doc = ReportDoc::from_json(&stdout(&run)).unwrap();
    assert_eq!(doc.case_id.token(), "Pair-3");
}

#[test]
fn trials_below_two_are_rejected() {
    let out = jembed(&[
        "classify",
        "--input",
        &fixture("veronese-tangent-plane.json"),
        "--trials",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(2), "{out:?}");
}
