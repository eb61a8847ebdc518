//! Acceptance suite: exhaustive desk-scale verification of every identity
//! layer, byte-exact goldens for the worked examples through the CLI, and
//! mutation checks showing that corrupted steps fail with witnesses.
//!
//! One test per criterion; each prints a PASS line with its scale.

use std::process::Command;
use std::time::{Duration, Instant};

use agkey::families::OContext;
use agkey::involution::{classify, f_statistic, orbit_check_with, psi, OClass};
use agkey::partition::enumerate_overpartitions;
use agkey::qseries::{gaussian, pochhammer_shifted, QPoly};
use agkey::verifier::{
    verify_genfuncs, verify_involution, verify_lemma2, verify_phi_bar, verify_theorem22,
    VerifyReport,
};
use agkey::Overpartition;

fn agkey_bin(args: &[&str]) -> (String, String, i32) {
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
fn criterion_1_key_identity_sweep_to_15() {
    let started = Instant::now();
    let (stdout, stderr, code) = agkey_bin(&[
        "sweep",
        "--max-i",
        "15",
        "--checks",
        "key-identity",
        "--json",
    ]);
    let elapsed = started.elapsed();
    assert_eq!(code, 0, "stderr: {stderr}");

    let mut cells = 0;
    for line in stdout.lines() {
        let record: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(record["check"], "key-identity");
        assert_eq!(record["passed"], true, "cell failed: {line}");
        cells += 1;
    }
    assert_eq!(cells, 136);
    assert_eq!(stderr.trim(), "PASS 136/136 checks");
    assert!(
        elapsed < Duration::from_secs(10),
        "sweep took {elapsed:?}, budget 10s"
    );
    println!("ACCEPTANCE 1 PASS key identity exact on all 136 cells j <= i <= 15 ({elapsed:?})");
}

#[test]
fn criterion_2_lemma2_full_square_to_12() {
    let started = Instant::now();
    for i in 0..=12u64 {
        for j in 0..=12u64 {
            let report = verify_lemma2(i, j);
            assert!(report.passed, "({i},{j}): {:?}", report.witness);
        }
    }
    let elapsed = started.elapsed();
    assert!(
        elapsed < Duration::from_secs(10),
        "lemma2 grid took {elapsed:?}, budget 10s"
    );
    println!("ACCEPTANCE 2 PASS cleared two-variable identity exact on all 169 cells i, j <= 12 ({elapsed:?})");
}

#[test]
fn criterion_3_generating_functions_to_12() {
    let started = Instant::now();
    let mut cells = 0;
    for i in 0..=12u64 {
        for j in 0..=i {
            for k in 0..=j {
                let report = verify_genfuncs(i, j, k).unwrap();
                assert!(report.passed, "({i},{j},{k}): {:?}", report.witness);
                cells += 1;
            }
        }
    }
    let elapsed = started.elapsed();
    println!("ACCEPTANCE 3 PASS generating polynomials match closed forms on {cells} cells k <= j <= i <= 12 ({elapsed:?})");
}

#[test]
fn criterion_4_theorem22_to_8() {
    let started = Instant::now();
    let mut largest = 0;
    for i in 0..=8u64 {
        for j in 0..=i {
            let report = verify_theorem22(i, j).unwrap();
            assert!(report.passed, "({i},{j}): {:?}", report.witness);
            largest = largest.max(report.counts["members"]);
        }
    }
    let elapsed = started.elapsed();
    assert_eq!(largest, 6561);
    assert!(
        elapsed < Duration::from_secs(30),
        "theorem22 grid took {elapsed:?}, budget 30s"
    );
    println!("ACCEPTANCE 4 PASS overpartition expansion exact on all 45 cells j <= i <= 8, largest cell 6561 members ({elapsed:?})");
}

#[test]
fn criterion_5_bijection_to_8() {
    let started = Instant::now();
    let mut pairs = 0;
    for i in 0..=8u64 {
        for j in 0..=i {
            for k in 0..=j {
                let report = verify_phi_bar(i, j, k).unwrap();
                assert!(report.passed, "({i},{j},{k}): {:?}", report.witness);
                assert_eq!(report.counts["image"], report.counts["pairs"]);
                assert_eq!(report.counts["o_members"], report.counts["pairs"]);
                pairs += report.counts["pairs"];
            }
        }
    }
    let elapsed = started.elapsed();
    println!("ACCEPTANCE 5 PASS bijection round trips and weight preservation on {pairs} pairs over k <= j <= i <= 8 ({elapsed:?})");
}

#[test]
fn criterion_6_involution_to_8() {
    let started = Instant::now();
    for i in 0..=8u64 {
        for j in 0..=i {
            let report = verify_involution(i, j).unwrap();
            assert!(report.passed, "({i},{j}): {:?}", report.witness);
            assert_eq!(report.counts["fixed_points"], 1, "({i},{j})");
        }
    }
    let elapsed = started.elapsed();
    println!(
        "ACCEPTANCE 6 PASS involution orbit structure on all 45 cells j <= i <= 8 ({elapsed:?})"
    );
}

#[test]
fn criterion_7_cli_goldens() {
    // Insertion of (5,3,0) into (9,6,5,2,2,0), with every step.
    let (stdout, _, code) = agkey_bin(&[
        "map",
        "insert",
        "--alpha",
        "5,3,0",
        "--beta",
        "9,6,5,2,2,0",
        "--trace",
    ]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "insert 0 -> 9',6,5,2,2,0\n\
         insert 3 -> 10',7,6,2',2,0\n\
         insert 5 -> 11',8,7,3',3,0'\n\
         11',8,7,3',3,0'\n"
    );

    // And its reversal.
    let (stdout, _, code) = agkey_bin(&["map", "extract", "--lambda", "11',8,7,3',3,0'"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "alpha: 5,3,0\nbeta: 9,6,5,2,2,0\n");

    // The pair ((8,7), (3,3,2)) maps into O(9,6,3) and back.
    let (stdout, _, code) = agkey_bin(&[
        "map", "phi-bar", "--i", "9", "--j", "6", "--k", "3", "--gamma", "8,7", "--beta", "3,3,2",
    ]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "4',3',2\n");

    let (stdout, _, code) = agkey_bin(&[
        "map",
        "phi-bar-inv",
        "--i",
        "9",
        "--j",
        "6",
        "--k",
        "3",
        "--lambda",
        "4',3',2",
    ]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "gamma: 8,7\nbeta: 3,3,2\n");

    // The involution on (4',3',2) at i=9, j=6, with both monomials.
    let (stdout, _, code) =
        agkey_bin(&["map", "psi", "--i", "9", "--j", "6", "--lambda", "4',3',2"]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "O1 -> 3',2\nf(lambda) = +q^41\nf(psi(lambda)) = -q^41\n"
    );

    println!("ACCEPTANCE 7 PASS worked examples reproduce byte-exactly through the CLI");
}

#[test]
fn criterion_8_corrupted_steps_fail_with_witnesses() {
    // Corruption A: overline weight i-k instead of i-k+1. The signed sum
    // over O(i,j,k) then misses the closed form.
    let (i, j, k) = (2u64, 2, 1);
    let ctx = OContext::new(i, j, k).unwrap();
    let wrong_weight = ctx.weight() - 1;
    let mut corrupted = QPoly::zero();
    for lambda in agkey::families::enumerate_o(ctx) {
        let ol = lambda.overline_count() as u64;
        let sign: i64 = if ol.is_multiple_of(2) { 1 } else { -1 };
        corrupted.add_term(lambda.size() + ol * wrong_weight, sign.into());
    }
    let expected = pochhammer_shifted(i - k + 1, k) * gaussian(j, k);
    let mut report = VerifyReport::new("genfunc", i, j, Some(k));
    report.expect_poly("signed sum with corrupted weight", &expected, &corrupted);
    assert!(!report.passed);
    assert!(report.witness.is_some(), "must name the mismatch");

    // Corruption B: drop the overline-count condition from membership. The
    // family inflates past 2^k binomial(j,k) and the sum misses again.
    let (i, j, k) = (3u64, 3, 2);
    let ctx = OContext::new(i, j, k).unwrap();
    let unfiltered = enumerate_overpartitions(k as usize, j - 1);
    let mut report = VerifyReport::new("phi-bar", i, j, Some(k));
    report.expect_count(
        "members without the overline condition",
        (1 << k) * 3, // 2^k * binomial(3,2)
        unfiltered.len() as u64,
    );
    assert!(!report.passed);
    let mut corrupted = QPoly::zero();
    for lambda in &unfiltered {
        let ol = lambda.overline_count() as u64;
        let sign: i64 = if ol.is_multiple_of(2) { 1 } else { -1 };
        corrupted.add_term(lambda.size() + ol * ctx.weight(), sign.into());
    }
    let expected = pochhammer_shifted(i - k + 1, k) * gaussian(j, k);
    let mut report = VerifyReport::new("genfunc", i, j, Some(k));
    report.expect_poly(
        "signed sum without the overline condition",
        &expected,
        &corrupted,
    );
    assert!(!report.passed);
    assert!(report.witness.is_some());

    // Corruption C: statistic with weight i-ell instead of i-ell+1; the
    // orbit check catches the broken sign reversal pointwise.
    let bad_f = |lambda: &Overpartition, i: u64, j: u64| {
        let mut monomial = f_statistic(lambda, i, j)?;
        monomial.exponent -= lambda.overline_count() as u64;
        Ok(monomial)
    };
    let report = orbit_check_with(3, 2, psi, bad_f).unwrap();
    assert!(!report.passed);
    assert!(report.witness.is_some());

    // Corruption D: the involution inserts j-ell+ol instead of j-ell+ol-1.
    let bad_psi = |lambda: &Overpartition, i: u64, j: u64| {
        let ol = lambda.overline_count() as u64;
        let ell = lambda.len() as u64;
        match classify(lambda, i, j)? {
            OClass::O2 => {
                let mut parts = lambda.parts().to_vec();
                let value = j - ell + ol;
                let index = parts
                    .iter()
                    .position(|part| part.value <= value)
                    .unwrap_or(parts.len());
                parts.insert(index, agkey::OverPart::overlined(value));
                Overpartition::new(parts)
            }
            _ => psi(lambda, i, j),
        }
    };
    let report = orbit_check_with(4, 3, bad_psi, f_statistic).unwrap();
    assert!(!report.passed);
    assert!(report.witness.is_some());

    println!("ACCEPTANCE 8 PASS corrupted weight/condition/statistic/insertion all fail with concrete witnesses");
}
