//! Reportable verification suites tying the algebraic side (closed-form
//! polynomials) to the combinatorial side (enumeration, the insertion
//! bijection, the involution), plus a parameter-sweep harness.
//!
//! Every suite returns a [`VerifyReport`]; a failing report always carries a
//! concrete [`Witness`] naming the first offending element in canonical
//! enumeration order.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use crate::bijection::{phi_bar, phi_bar_inv};
use crate::error::{Error, Result};
use crate::families::{
    enumerate_a, enumerate_b, enumerate_o, enumerate_o_all, genfunc_b, signed_genfunc_a,
    signed_genfunc_o, OContext,
};
use crate::involution::{f_statistic, orbit_check};
use crate::qseries::{
    gaussian, key_identity_lhs, lemma2_lhs_cleared, lemma2_rhs_cleared, pochhammer_shifted, QPoly,
};

/// Concrete evidence for a failed check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// Two polynomials that were asserted equal differ.
    PolyMismatch {
        what: String,
        expected: String,
        actual: String,
    },
    /// A signed monomial differs from its expected partner.
    MonomialMismatch {
        element: String,
        expected: String,
        actual: String,
    },
    /// A cardinality came out wrong.
    CountMismatch {
        what: String,
        expected: u64,
        actual: u64,
    },
    /// A single element violated a pointwise property.
    Element { element: String, problem: String },
    /// A pair failed to survive the map-and-invert round trip.
    RoundTrip {
        gamma: String,
        beta: String,
        image: String,
        recovered_gamma: String,
        recovered_beta: String,
    },
    /// Two distinct pairs mapped to the same image.
    Collision {
        image: String,
        first: String,
        second: String,
    },
}

/// The structured outcome of one verification check.
///
/// `passed == false` implies `witness.is_some()`; only the first witness in
/// canonical enumeration order is kept. Serialization is deterministic
/// except for `elapsed_micros`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub check: String,
    pub i: u64,
    pub j: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u64>,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub counts: BTreeMap<String, u64>,
    pub elapsed_micros: u64,
}

impl VerifyReport {
    /// A fresh, passing report; checks then record witnesses into it.
    pub fn new(check: &str, i: u64, j: u64, k: Option<u64>) -> Self {
        VerifyReport {
            check: check.to_string(),
            i,
            j,
            k,
            passed: true,
            witness: None,
            counts: BTreeMap::new(),
            elapsed_micros: 0,
        }
    }

    pub fn set_count(&mut self, what: &str, value: u64) {
        self.counts.insert(what.to_string(), value);
    }

    /// Marks the report failed, keeping only the first witness.
    pub fn record_witness(&mut self, witness: Witness) {
        if self.witness.is_none() {
            self.witness = Some(witness);
        }
        self.passed = false;
    }

    /// Asserts polynomial equality, recording a [`Witness::PolyMismatch`] on
    /// failure. Returns whether the assertion held.
    pub fn expect_poly(&mut self, what: &str, expected: &QPoly, actual: &QPoly) -> bool {
        if expected == actual {
            return true;
        }
        self.record_witness(Witness::PolyMismatch {
            what: what.to_string(),
            expected: expected.to_string(),
            actual: actual.to_string(),
        });
        false
    }

    /// Asserts a cardinality, recording a [`Witness::CountMismatch`] on
    /// failure.
    pub fn expect_count(&mut self, what: &str, expected: u64, actual: u64) -> bool {
        if expected == actual {
            return true;
        }
        self.record_witness(Witness::CountMismatch {
            what: what.to_string(),
            expected,
            actual,
        });
        false
    }

    /// One human-readable line: `PASS <check> i=.. j=.. [k=..]`.
    pub fn status_line(&self) -> String {
        let mut line = format!(
            "{} {} i={} j={}",
            if self.passed { "PASS" } else { "FAIL" },
            self.check,
            self.i,
            self.j
        );
        if let Some(k) = self.k {
            line.push_str(&format!(" k={k}"));
        }
        line
    }
}

/// The available checks, in canonical sweep order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Check {
    KeyIdentity,
    Lemma2,
    Theorem22,
    PhiBar,
    Genfunc,
    Involution,
}

impl Check {
    pub const ALL: [Check; 6] = [
        Check::KeyIdentity,
        Check::Lemma2,
        Check::Theorem22,
        Check::PhiBar,
        Check::Genfunc,
        Check::Involution,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::KeyIdentity => "key-identity",
            Check::Lemma2 => "lemma2",
            Check::Theorem22 => "theorem22",
            Check::PhiBar => "phi-bar",
            Check::Genfunc => "genfunc",
            Check::Involution => "involution",
        }
    }

    /// Whether the check runs once per `(i, j, k)` cell rather than `(i, j)`.
    pub fn per_k(self) -> bool {
        matches!(self, Check::PhiBar | Check::Genfunc)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        match input {
            "key-identity" => Ok(Check::KeyIdentity),
            "lemma2" => Ok(Check::Lemma2),
            "theorem22" => Ok(Check::Theorem22),
            "phi-bar" => Ok(Check::PhiBar),
            "genfunc" => Ok(Check::Genfunc),
            "involution" => Ok(Check::Involution),
            other => Err(Error::Parse {
                what: "check name",
                reason: format!(
                    "`{other}` is not one of key-identity, lemma2, theorem22, phi-bar, genfunc, involution"
                ),
            }),
        }
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for t in 0..k.min(n - k) {
        acc = acc * (n - t) as u128 / (t + 1) as u128;
    }
    acc as u64
}

/// Checks that the key-identity sum collapses to the constant 1.
pub fn verify_key_identity(i: u64, j: u64) -> Result<VerifyReport> {
    let started = Instant::now();
    let lhs = key_identity_lhs(i, j)?;
    let mut report = VerifyReport::new(Check::KeyIdentity.name(), i, j, None);
    report.set_count("summands", j + 1);
    report.expect_poly("key-identity sum", &QPoly::one(), &lhs);
    report.elapsed_micros = started.elapsed().as_micros() as u64;
    Ok(report)
}

/// Checks the cleared form of the triangle-number identity.
pub fn verify_lemma2(i: u64, j: u64) -> VerifyReport {
    let started = Instant::now();
    let mut report = VerifyReport::new(Check::Lemma2.name(), i, j, None);
    report.set_count("summands", i.min(j) + 1);
    report.expect_poly(
        "cleared lemma-2 sum",
        &lemma2_rhs_cleared(i, j),
        &lemma2_lhs_cleared(i, j),
    );
    report.elapsed_micros = started.elapsed().as_micros() as u64;
    report
}

/// Checks the overpartition expansion of the key identity, per `k` and in
/// total: each product `(q^{i-k+1};q)_k [j k]_q` against the signed sum over
/// `O(i,j,k)`, and the whole left-hand side against the f-weighted sum over
/// `O(i,j)`.
pub fn verify_theorem22(i: u64, j: u64) -> Result<VerifyReport> {
    let started = Instant::now();
    if j > i {
        return Err(Error::ParameterRange(format!(
            "theorem22 requires j <= i, got i={i}, j={j}"
        )));
    }
    let mut report = VerifyReport::new(Check::Theorem22.name(), i, j, None);
    for k in 0..=j {
        let ctx = OContext::new(i, j, k)?;
        let product = pochhammer_shifted(i - k + 1, k) * gaussian(j, k);
        report.expect_poly(
            &format!("signed sum over O({i},{j},{k})"),
            &product,
            &signed_genfunc_o(ctx),
        );
    }

    let members = enumerate_o_all(i, j)?;
    report.set_count("members", members.len() as u64);
    let mut total = QPoly::zero();
    for (_, lambda) in &members {
        let monomial = f_statistic(lambda, i, j)?;
        total.add_term(monomial.exponent, i64::from(monomial.sign).into());
    }
    report.expect_poly(
        "key-identity LHS vs f-weighted sum over O(i,j)",
        &key_identity_lhs(i, j)?,
        &total,
    );
    report.elapsed_micros = started.elapsed().as_micros() as u64;
    Ok(report)
}

/// Checks the insertion bijection exhaustively on one `(i, j, k)` cell:
/// round trips both ways, sign/weight preservation per pair, image
/// cardinality `2^k binomial(j,k)` with zero collisions, and image equality
/// with the enumerated `O(i,j,k)`.
pub fn verify_phi_bar(i: u64, j: u64, k: u64) -> Result<VerifyReport> {
    let started = Instant::now();
    let ctx = OContext::new(i, j, k)?;
    let mut report = VerifyReport::new(Check::PhiBar.name(), i, j, Some(k));
    let gammas = enumerate_a(i, k)?;
    let betas = enumerate_b(j, k)?;
    let members = enumerate_o(ctx);
    let member_set: HashSet<_> = members.iter().cloned().collect();
    report.set_count("pairs", (gammas.len() * betas.len()) as u64);
    report.set_count("o_members", members.len() as u64);

    let mut image_of: HashMap<_, String> = HashMap::new();
    'pairs: for gamma in &gammas {
        for beta in &betas {
            let pair_label = format!("({gamma}; {beta})");
            let image = match phi_bar(gamma, beta, ctx) {
                Ok(image) => image,
                Err(error) => {
                    report.record_witness(Witness::Element {
                        element: pair_label,
                        problem: format!("phi-bar failed: {error}"),
                    });
                    break 'pairs;
                }
            };
            if !member_set.contains(&image) {
                report.record_witness(Witness::Element {
                    element: pair_label,
                    problem: format!("image {image} is not in O({i},{j},{k})"),
                });
                break 'pairs;
            }

            // Weight preservation, as monomials: sign and exponent must both
            // match between (-1)^{len(gamma)} q^{|gamma|+|beta|} and
            // (-1)^{ol} q^{|image| + ol*(i-k+1)}.
            let pair_sign = if gamma.len() % 2 == 0 { 1i8 } else { -1 };
            let pair_exponent = gamma.size() + beta.size();
            let ol = image.overline_count() as u64;
            let image_sign = if ol.is_multiple_of(2) { 1i8 } else { -1 };
            let image_exponent = image.size() + ol * ctx.weight();
            if (pair_sign, pair_exponent) != (image_sign, image_exponent) {
                report.record_witness(Witness::MonomialMismatch {
                    element: pair_label,
                    expected: format!("sign {pair_sign}, exponent {pair_exponent}"),
                    actual: format!("sign {image_sign}, exponent {image_exponent}"),
                });
                break 'pairs;
            }

            if let Some(previous) = image_of.insert(image.clone(), pair_label.clone()) {
                report.record_witness(Witness::Collision {
                    image: image.to_string(),
                    first: previous,
                    second: pair_label,
                });
                break 'pairs;
            }

            match phi_bar_inv(&image, ctx) {
                Ok((back_gamma, back_beta)) => {
                    if (&back_gamma, &back_beta) != (gamma, beta) {
                        report.record_witness(Witness::RoundTrip {
                            gamma: gamma.to_string(),
                            beta: beta.to_string(),
                            image: image.to_string(),
                            recovered_gamma: back_gamma.to_string(),
                            recovered_beta: back_beta.to_string(),
                        });
                        break 'pairs;
                    }
                }
                Err(error) => {
                    report.record_witness(Witness::Element {
                        element: image.to_string(),
                        problem: format!("phi-bar-inv failed: {error}"),
                    });
                    break 'pairs;
                }
            }
        }
    }

    report.set_count("image", image_of.len() as u64);
    if report.passed {
        let expected = (1u64 << k) * binomial(j, k);
        report.expect_count("image cardinality", expected, image_of.len() as u64);
        report.expect_count("O(i,j,k) cardinality", expected, members.len() as u64);
    }

    // Dual direction: every member recovers a pair that maps back onto it.
    if report.passed {
        for lambda in &members {
            let (gamma, beta) = match phi_bar_inv(lambda, ctx) {
                Ok(pair) => pair,
                Err(error) => {
                    report.record_witness(Witness::Element {
                        element: lambda.to_string(),
                        problem: format!("phi-bar-inv failed: {error}"),
                    });
                    break;
                }
            };
            match phi_bar(&gamma, &beta, ctx) {
                Ok(image) if image == *lambda => {}
                Ok(image) => {
                    report.record_witness(Witness::RoundTrip {
                        gamma: gamma.to_string(),
                        beta: beta.to_string(),
                        image: image.to_string(),
                        recovered_gamma: gamma.to_string(),
                        recovered_beta: beta.to_string(),
                    });
                    break;
                }
                Err(error) => {
                    report.record_witness(Witness::Element {
                        element: lambda.to_string(),
                        problem: format!("phi-bar failed on recovered pair: {error}"),
                    });
                    break;
                }
            }
        }
    }
    report.elapsed_micros = started.elapsed().as_micros() as u64;
    Ok(report)
}

/// Checks both enumerated generating polynomials against their closed forms.
pub fn verify_genfuncs(i: u64, j: u64, k: u64) -> Result<VerifyReport> {
    let started = Instant::now();
    OContext::new(i, j, k)?;
    let mut report = VerifyReport::new(Check::Genfunc.name(), i, j, Some(k));
    report.set_count("a_members", 1 << k);
    report.set_count("b_members", binomial(j, k));
    report.expect_poly(
        &format!("signed A({i},{k}) sum vs (q^{};q)_{k}", i - k + 1),
        &pochhammer_shifted(i - k + 1, k),
        &signed_genfunc_a(i, k)?,
    );
    report.expect_poly(
        &format!("B({j},{k}) sum vs the Gaussian coefficient"),
        &gaussian(j, k),
        &genfunc_b(j, k)?,
    );
    report.elapsed_micros = started.elapsed().as_micros() as u64;
    Ok(report)
}

/// Checks the involution's orbit structure over all of `O(i,j)`.
pub fn verify_involution(i: u64, j: u64) -> Result<VerifyReport> {
    if j > i {
        return Err(Error::ParameterRange(format!(
            "involution requires j <= i, got i={i}, j={j}"
        )));
    }
    orbit_check(i, j)
}

/// Runs the selected checks over every cell `0 <= j <= i <= max_i` (and
/// every `k <= j` for the per-k checks), in a deterministic order.
pub fn sweep(max_i: u64, checks: &[Check]) -> Vec<VerifyReport> {
    let selected: Vec<Check> = Check::ALL
        .into_iter()
        .filter(|check| checks.is_empty() || checks.contains(check))
        .collect();
    let mut reports = Vec::new();
    for i in 0..=max_i {
        for j in 0..=i {
            for &check in &selected {
                match check {
                    Check::KeyIdentity => {
                        reports.push(verify_key_identity(i, j).expect("j <= i"));
                    }
                    Check::Lemma2 => reports.push(verify_lemma2(i, j)),
                    Check::Theorem22 => {
                        reports.push(verify_theorem22(i, j).expect("j <= i"));
                    }
                    Check::Involution => {
                        reports.push(verify_involution(i, j).expect("j <= i"));
                    }
                    Check::PhiBar => {
                        for k in 0..=j {
                            reports.push(verify_phi_bar(i, j, k).expect("k <= j <= i"));
                        }
                    }
                    Check::Genfunc => {
                        for k in 0..=j {
                            reports.push(verify_genfuncs(i, j, k).expect("k <= j <= i"));
                        }
                    }
                }
            }
        }
    }
    reports
}

/// The sweep summary line, `PASS m/n checks` (or `FAIL m/n checks`).
pub fn summary(reports: &[VerifyReport]) -> String {
    let passed = reports.iter().filter(|report| report.passed).count();
    let verdict = if passed == reports.len() {
        "PASS"
    } else {
        "FAIL"
    };
    format!("{verdict} {passed}/{} checks", reports.len())
}
