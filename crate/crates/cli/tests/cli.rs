//! End-to-end checks of the command-line interface: exit codes, report
//! shapes, and determinism.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_cgel")
}

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data/mini").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(bin())
        .args(args)
        .env("CGEL_TOOLKIT_COLOR", "never")
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

#[test]
fn validate_clean_corpus_exits_zero() {
    let out = run(&["validate", data("mini.cgel").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    assert!(stdout_of(&out).is_empty());
}

#[test]
fn validate_bad_tree_exits_one() {
    let dir = std::env::temp_dir().join("cgel-cli-test-bad");
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.cgel");
    std::fs::write(
        &bad,
        "# sent_id = bad-1\n(NP :Head (Nom :Head (N :t \"salt\")) :Head (Nom :Head (N :t \"pepper\")))\n",
    )
    .unwrap();
    let out = run(&["validate", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1), "{out:?}");
    let report = stdout_of(&out);
    assert!(report.contains("HEAD-1"), "{report}");
    assert!(report.contains("bad-1"), "{report}");
}

#[test]
fn missing_input_exits_two() {
    let out = run(&["validate", "/no/such/file.cgel"]);
    assert_eq!(out.status.code(), Some(2), "{out:?}");
    assert!(String::from_utf8_lossy(&out.stderr).contains("error:"));
}

#[test]
fn usage_error_exits_two() {
    let out = run(&["validate"]);
    assert_eq!(out.status.code(), Some(2), "{out:?}");
}

#[test]
fn severity_filter_via_profile() {
    let dir = std::env::temp_dir().join("cgel-cli-test-warn");
    std::fs::create_dir_all(&dir).unwrap();
    let warny = dir.join("warn.cgel");
    std::fs::write(
        &warny,
        "(Nom :Head (N :t \"dog\") :Mod (AdjP :Head (Adj :t \"big\")))\n",
    )
    .unwrap();
    // ATTACH-1 is a warning: exit stays 0, report lists it.
    let out = run(&["validate", warny.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    assert!(stdout_of(&out).contains("ATTACH-1"));
    // Disabling the rule hides it.
    let out = run(&["validate", "--profile", "HEAD-1,GAP-1", warny.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).is_empty());
}

#[test]
fn stats_reports_the_tallied_counts() {
    let out = run(&["stats", data("mini.cgel").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("trees\t20"), "{text}");
    assert!(text.contains("tokens\t120"), "{text}");
    assert!(text.contains("gaps\t6"), "{text}");
    assert!(text.contains("h_pos_bits\t2.87"), "{text}");
    assert!(text.contains("\tpos\tN\t30"), "{text}");
    assert!(text.contains("\tcategory\tNP+AdvP\t1"), "{text}");
    assert!(text.contains("\tfunction\tDet-Head\t2\tFused"), "{text}");
}

#[test]
fn stats_on_empty_input_suppresses_entropy() {
    let dir = std::env::temp_dir().join("cgel-cli-test-empty");
    std::fs::create_dir_all(&dir).unwrap();
    let empty = dir.join("empty.cgel");
    std::fs::write(&empty, "# nothing here\n").unwrap();
    let out = run(&["stats", empty.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let text = stdout_of(&out);
    assert!(text.contains("trees\t0"));
    assert!(text.contains("h_pos_bits\tn/a"), "{text}");
}

#[test]
fn compare_produces_the_combined_report() {
    let out = run(&[
        "compare",
        "--ud",
        data("mini.conllu").to_str().unwrap(),
        "--ptb",
        data("mini.ptb").to_str().unwrap(),
        data("mini.cgel").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let text = stdout_of(&out);
    assert!(text.contains("ud_matched\t120"), "{text}");
    assert!(text.contains("\tgap_alignment\t*T*\t5/5"), "{text}");
    assert!(text.contains("\tgap_alignment\t*RNR*\t1/1"), "{text}");
    assert!(text.contains("unmatched_gaps\t0"), "{text}");
    assert!(text.contains("\thead_by_deprel\tcase\t0.0"), "{text}");
    // Deterministic: identical invocations produce identical bytes.
    let again = run(&[
        "compare",
        "--ud",
        data("mini.conllu").to_str().unwrap(),
        "--ptb",
        data("mini.ptb").to_str().unwrap(),
        data("mini.cgel").to_str().unwrap(),
    ]);
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn compare_count_mismatch_exits_two() {
    let dir = std::env::temp_dir().join("cgel-cli-test-mismatch");
    std::fs::create_dir_all(&dir).unwrap();
    let one = dir.join("one.cgel");
    std::fs::write(
        &one,
        "# sent_id = only\n(NP :Head (Nom :Head (N :t \"Liz\")))\n",
    )
    .unwrap();
    let out = run(&[
        "compare",
        "--pair-by",
        "order",
        "--ud",
        data("mini.conllu").to_str().unwrap(),
        one.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2), "{out:?}");
    assert!(String::from_utf8_lossy(&out.stderr).contains("pairing failed"));
}

#[test]
fn compare_by_sent_id_lists_unpaired() {
    let dir = std::env::temp_dir().join("cgel-cli-test-unpaired");
    std::fs::create_dir_all(&dir).unwrap();
    let one = dir.join("one.cgel");
    std::fs::write(
        &one,
        "# sent_id = nowhere-001\n(NP :Head (Nom :Head (N :t \"Liz\")))\n",
    )
    .unwrap();
    let out = run(&[
        "compare",
        "--ud",
        data("mini.conllu").to_str().unwrap(),
        one.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("nowhere-001"));
}

#[test]
fn align_dump_has_both_sides() {
    let out = run(&[
        "align",
        "--ud",
        data("mini.conllu").to_str().unwrap(),
        data("mini.cgel").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let text = stdout_of(&out);
    assert!(text.contains("mini-001\tcgel\t1\twhich\t1"), "{text}");
    assert!(text.contains("mini-002\tud\t5\t.\t-"), "{text}");
    // The multiword lexeme covers tokens 4 and 5.
    assert!(text.contains("mini-004\tcgel\t4\tNew York\t4,5"), "{text}");
}

#[test]
fn heads_match_the_golden_file() {
    let out = run(&["heads", data("mini.cgel").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let golden = std::fs::read_to_string(data("mini-heads.tsv")).unwrap();
    assert_eq!(stdout_of(&out), golden);
}

#[test]
fn roundtrip_emits_a_canonical_fixpoint() {
    let out = run(&["roundtrip", data("mini.cgel").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let canonical = stdout_of(&out);
    assert!(canonical.contains("# sent_id = mini-001"));
    // Feeding the canonical form back through is a fixpoint.
    let dir = std::env::temp_dir().join("cgel-cli-test-rt");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("canon.cgel");
    std::fs::write(&path, &canonical).unwrap();
    let again = run(&["roundtrip", path.to_str().unwrap()]);
    assert_eq!(again.status.code(), Some(0));
    assert_eq!(stdout_of(&again), canonical);
}

#[test]
fn reports_can_be_written_to_a_directory() {
    let dir = std::env::temp_dir().join("cgel-cli-test-out");
    let _ = std::fs::remove_dir_all(&dir);
    let out = run(&[
        "stats",
        "--format",
        "json",
        "--out",
        dir.to_str().unwrap(),
        data("mini.cgel").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let written = std::fs::read_to_string(dir.join("stats.json")).unwrap();
    let parsed: serde_json::Value = serde_json::from_str(&written).unwrap();
    assert_eq!(parsed["trees"], 20);
    assert_eq!(parsed["tokens"], 120);
}

#[test]
fn stdin_input_works() {
    use std::io::Write;
    use std::process::Stdio;
    let mut child = Command::new(bin())
        .args(["stats", "-"])
        .env("CGEL_TOOLKIT_COLOR", "never")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(b"(NP :Head (Nom :Head (N :t \"Liz\")))\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("trees\t1"));
}
