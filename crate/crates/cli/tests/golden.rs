//! Golden-file tests: identical inputs must produce byte-identical output.

use std::path::PathBuf;
use std::process::{Command, Output};

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ribbonlab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn assert_matches_golden(args: &[&str], golden: &str) {
    let out = run(args);
    assert!(
        out.status.success(),
        "exit status {:?}, stderr: {}",
        out.status,
        String::from_utf8_lossy(&out.stderr)
    );
    let expected = std::fs::read(golden_dir().join(golden)).expect("golden file exists");
    assert_eq!(
        out.stdout,
        expected,
        "output differs from {golden}:\n--- got ---\n{}\n--- want ---\n{}",
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&expected)
    );
}

#[test]
fn strata_golden() {
    assert_matches_golden(
        &[
            "strata", "--gbar", "2", "--delta", "1", "-R", "2", "-D", "0", "--d1", "-5..5",
        ],
        "strata.txt",
    );
}

#[test]
fn tangent_golden() {
    let profile = golden_dir().join("profile_end_example.json");
    assert_matches_golden(
        &["tangent", "--profile", profile.to_str().unwrap()],
        "tangent.txt",
    );
}

#[test]
fn localext_golden() {
    assert_matches_golden(
        &["localext", "--p", "10007", "--N", "24", "--n-max", "5"],
        "localext.txt",
    );
}

#[test]
fn runs_are_byte_identical() {
    let args = [
        "strata", "--gbar", "2", "--delta", "1", "-R", "3", "-D", "2", "--d1", "-4..4",
    ];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn bad_window_exits_2() {
    let out = run(&[
        "strata", "--gbar", "2", "--delta", "1", "-R", "2", "-D", "0", "--d1", "5..1",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn small_truncation_exits_2() {
    let out = run(&["localext", "--p", "10007", "--N", "8", "--n-max", "5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn trivial_table_exits_0() {
    let out = run(&["localext", "--p", "10007", "--N", "24", "--n-max", "0"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn invalid_profile_exits_1_naming_the_invariant() {
    let dir = std::env::temp_dir().join("ribbonlab-golden-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("unsorted.json");
    std::fs::write(
        &path,
        r#"{"ribbon":{"gbar":2,"delta":1},"type":{"r0":3,"r1":2,"d0":5,"d1":0},"points":[{"name":"p","n":[1,2]}]}"#,
    )
    .unwrap();
    let out = run(&["tangent", "--profile", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(
        stderr.contains("profile lists must be weakly decreasing"),
        "stderr was: {stderr}"
    );
}

#[test]
fn json_output_round_trips() {
    use ribbonlab_cli::report::{LocalextDoc, SsDoc, StrataDoc, TangentDoc};

    fn round_trip<T: serde::de::DeserializeOwned + serde::Serialize + PartialEq + std::fmt::Debug>(
        stdout: Vec<u8>,
    ) -> T {
        let text = String::from_utf8(stdout).unwrap();
        let doc: T = serde_json::from_str(&text).unwrap();
        let emitted = serde_json::to_string_pretty(&doc).unwrap();
        assert_eq!(emitted.trim_end(), text.trim_end(), "re-emission changed bytes");
        let again: T = serde_json::from_str(&emitted).unwrap();
        assert_eq!(doc, again);
        doc
    }

    let out = run(&[
        "strata", "--gbar", "2", "--delta", "5", "-R", "3", "-D", "1", "--d1", "-3..3",
        "--format", "json",
    ]);
    assert!(out.status.success());
    let doc: StrataDoc = round_trip(out.stdout);
    assert_eq!(doc.schema_version, 1);
    assert_eq!(doc.moduli_dimension, 15);

    let out = run(&[
        "ss", "--gbar", "1", "--delta", "2", "-R", "4", "-D", "0", "--format", "json",
    ]);
    assert!(out.status.success());
    let _: SsDoc = round_trip(out.stdout);

    let profile = golden_dir().join("profile_end_example.json");
    let out = run(&[
        "tangent",
        "--profile",
        profile.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let doc: TangentDoc = round_trip(out.stdout);
    assert_eq!(doc.end.euler_characteristic, -7);

    let out = run(&[
        "localext", "--p", "3", "--N", "16", "--n-max", "2", "--format", "json",
    ]);
    assert!(out.status.success());
    let doc: LocalextDoc = round_trip(out.stdout);
    assert!(doc.all_match);

    let out = run(&[
        "invariants", "--gbar", "2", "--delta", "1", "--r0", "1", "--r1", "1", "--d0", "3",
        "--d1", "0", "--format", "json",
    ]);
    assert!(out.status.success());
    let doc: ribbonlab_cli::report::InvariantsDoc = round_trip(out.stdout);
    assert_eq!(doc.index, Some(2));
}
