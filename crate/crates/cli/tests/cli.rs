//! Exit-code contract and output-format tests for the `agkey` binary.

use std::process::Command;

fn agkey(args: &[&str]) -> (String, String, i32) {
    let output = Command::new(env!("CARGO_BIN_EXE_agkey"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8(output.stdout).expect("utf8 stdout"),
        String::from_utf8(output.stderr).expect("utf8 stderr"),
        output.status.code().expect("exit code"),
    )
}

#[test]
fn verify_success_is_exit_zero() {
    let (stdout, _, code) = agkey(&["verify", "key-identity", "--i", "9", "--j", "6"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "PASS key-identity i=9 j=6\n");
}

#[test]
fn verify_with_k_checks() {
    let (stdout, _, code) = agkey(&["verify", "phi-bar", "--i", "5", "--j", "4", "--k", "2"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "PASS phi-bar i=5 j=4 k=2\n");

    let (stdout, _, code) = agkey(&["verify", "genfunc", "--i", "5", "--j", "4", "--k", "2"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "PASS genfunc i=5 j=4 k=2\n");
}

#[test]
fn verify_json_is_one_record() {
    let (stdout, _, code) = agkey(&["verify", "involution", "--i", "4", "--j", "3", "--json"]);
    assert_eq!(code, 0);
    let record: serde_json::Value = serde_json::from_str(stdout.trim()).unwrap();
    assert_eq!(record["check"], "involution");
    assert_eq!(record["passed"], true);
    assert_eq!(record["counts"]["members"], 27);
}

#[test]
fn usage_errors_are_exit_two() {
    // Unknown flag (handled by clap).
    let (_, _, code) = agkey(&["verify", "key-identity", "--i", "3", "--j", "2", "--zap"]);
    assert_eq!(code, 2);

    // Missing required flag.
    let (_, _, code) = agkey(&["verify", "key-identity", "--i", "3"]);
    assert_eq!(code, 2);

    // Unknown check name.
    let (_, _, code) = agkey(&["verify", "nonsense", "--i", "3", "--j", "2"]);
    assert_eq!(code, 2);

    // Out-of-range parameters.
    let (_, stderr, code) = agkey(&["verify", "key-identity", "--i", "3", "--j", "6"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("requires j <= i"));

    // Stray --k on a check that does not take it.
    let (_, _, code) = agkey(&["verify", "lemma2", "--i", "3", "--j", "2", "--k", "1"]);
    assert_eq!(code, 2);

    // Malformed partition string.
    let (_, stderr, code) = agkey(&["map", "psi", "--i", "9", "--j", "6", "--lambda", "4,x"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("cannot parse"));

    // Structurally invalid overpartition.
    let (_, _, code) = agkey(&["map", "psi", "--i", "9", "--j", "6", "--lambda", "2,2'"]);
    assert_eq!(code, 2);

    // Flag that does not belong to the subcommand form.
    let (_, _, code) = agkey(&[
        "enumerate",
        "--set",
        "A",
        "--i",
        "9",
        "--j",
        "6",
        "--k",
        "3",
    ]);
    assert_eq!(code, 2);
    let (_, _, code) = agkey(&[
        "map", "psi", "--i", "9", "--j", "6", "--lambda", "2,2", "--trace",
    ]);
    assert_eq!(code, 2);
}

#[test]
fn failed_membership_checks_are_exit_one() {
    // Well-formed overpartition that is not in O(9,6).
    let (stdout, _, code) = agkey(&["map", "psi", "--i", "9", "--j", "6", "--lambda", "5,0,0"]);
    assert_eq!(code, 1);
    assert!(stdout.starts_with("FAIL:"), "stdout: {stdout}");

    // Insertion into a partition that is too short.
    let (stdout, _, code) = agkey(&["map", "insert", "--alpha", "3", "--beta", "1,0"]);
    assert_eq!(code, 1);
    assert!(stdout.contains("part count"));

    // Gamma outside the window of A(i,k).
    let (stdout, _, code) = agkey(&[
        "map", "phi-bar", "--i", "9", "--j", "6", "--k", "3", "--gamma", "5,2", "--beta", "3,3,2",
    ]);
    assert_eq!(code, 1);
    assert!(stdout.contains("A(9,3)"));
}

#[test]
fn enumerate_o_emits_three_to_the_j_records() {
    for (i, j) in [(2u64, 2u64), (4, 3), (5, 0)] {
        let (stdout, _, code) = agkey(&[
            "enumerate",
            "--set",
            "O",
            "--i",
            &i.to_string(),
            "--j",
            &j.to_string(),
        ]);
        assert_eq!(code, 0);
        assert_eq!(stdout.lines().count() as u64, 3u64.pow(j as u32));
    }
}

#[test]
fn enumerate_json_records_have_the_documented_fields() {
    let (stdout, _, code) = agkey(&[
        "enumerate",
        "--set",
        "O",
        "--i",
        "2",
        "--j",
        "2",
        "--k",
        "2",
        "--json",
    ]);
    assert_eq!(code, 0);
    let first: serde_json::Value = serde_json::from_str(stdout.lines().next().unwrap()).unwrap();
    assert_eq!(first["i"], 2);
    assert_eq!(first["j"], 2);
    assert_eq!(first["k"], 2);
    assert_eq!(first["weight"], 1);
    assert_eq!(first["parts"][0]["value"], 1);
    assert_eq!(first["parts"][0]["overlined"], true);
}

#[test]
fn map_outputs_parse_back() {
    use agkey::{DistinctPartition, Overpartition, Partition};

    let (stdout, _, code) = agkey(&["map", "psi", "--i", "9", "--j", "6", "--lambda", "4',3',2"]);
    assert_eq!(code, 0);
    let image = stdout.lines().next().unwrap().split(" -> ").nth(1).unwrap();
    let parsed: Overpartition = image.parse().unwrap();
    assert_eq!(parsed.to_string(), image);

    let (stdout, _, code) = agkey(&["map", "extract", "--lambda", "11',8,7,3',3,0'"]);
    assert_eq!(code, 0);
    let mut lines = stdout.lines();
    let alpha_text = lines.next().unwrap().strip_prefix("alpha: ").unwrap();
    let beta_text = lines.next().unwrap().strip_prefix("beta: ").unwrap();
    let alpha: DistinctPartition = alpha_text.parse().unwrap();
    let beta: Partition = beta_text.parse().unwrap();
    assert_eq!(alpha.to_string(), alpha_text);
    assert_eq!(beta.to_string(), beta_text);

    let (stdout, _, code) = agkey(&[
        "map", "phi-bar", "--i", "9", "--j", "6", "--k", "3", "--gamma", "8,7", "--beta", "3,3,2",
    ]);
    assert_eq!(code, 0);
    let lambda: Overpartition = stdout.trim().parse().unwrap();
    assert_eq!(lambda.to_string(), stdout.trim());
}

#[test]
fn sweep_json_streams_records_and_summarizes_on_stderr() {
    let (stdout, stderr, code) = agkey(&["sweep", "--max-i", "2", "--json"]);
    assert_eq!(code, 0);
    let mut records = 0;
    for line in stdout.lines() {
        let record: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(record["passed"], true);
        records += 1;
    }
    assert!(records > 0);
    assert_eq!(stderr.trim(), format!("PASS {records}/{records} checks"));
}

#[test]
fn sweep_human_output_ends_with_the_summary() {
    let (stdout, _, code) = agkey(&["sweep", "--max-i", "1", "--checks", "involution,lemma2"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(*lines.last().unwrap(), "PASS 6/6 checks");
    assert!(lines[0].starts_with("PASS lemma2 i=0 j=0"));
}

#[test]
fn render_matches_figure_conventions() {
    let (stdout, _, code) = agkey(&["render", "--lambda", "9,7',6,5,5,2',2,1',0", "--i", "11"]);
    assert_eq!(code, 0);
    let rows: Vec<&str> = stdout.lines().collect();
    assert_eq!(rows.len(), 9);
    assert_eq!(rows[1], "*******ooo");
    assert_eq!(rows[8], "@");

    let (stdout, _, code) = agkey(&["render", "--lambda", "4',3',2", "--i", "9", "--unicode"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "●●●●○○○○○○○\n●●●○○○○○○○\n●●\n");

    let (stdout, _, code) = agkey(&["render", "--lambda", "-", "--i", "5"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "");
}
