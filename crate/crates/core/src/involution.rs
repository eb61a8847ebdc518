//! The sign-reversing involution on `O(i,j)` and its supporting pieces: the
//! three-way classification of members, the signed monomial each member
//! contributes, and the exhaustive orbit checker.
//!
//! Writing `ol` for the overline count, `ell` for the length and
//! `w = i - ell + 1` for the overline weight, every member contributes
//! `f = (-1)^{ol} q^{size + ol*w + (i-ell)(j-ell)}`. The involution removes
//! the largest overlined part when it equals `j - ell + ol - 1`, inserts an
//! overlined part of that value (or of `j - ell - 1` on plain members)
//! otherwise, and fixes exactly the all-zero member with `j` parts. Paired
//! members carry opposite signs and equal exponents, so the whole sum
//! telescopes to 1.

use std::cmp::Ordering;
use std::fmt;
use std::time::Instant;

use crate::error::Result;
use crate::families::{context_for_member, enumerate_o_all};
use crate::partition::{OverPart, Overpartition};
use crate::qseries::QPoly;
use crate::verifier::{VerifyReport, Witness};

/// Where a member of `O(i,j)` sits in the disjoint decomposition driving
/// the involution.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OClass {
    /// Overlined, with largest overlined part equal to `j - ell + ol - 1`.
    O1,
    /// Overlined, with largest overlined part below `j - ell + ol - 1`.
    O2,
    /// Plain with fewer than `j` parts; the involution inserts an overline.
    O3Movable,
    /// Plain with exactly `j` parts: the all-zero fixed point.
    O3Fixed,
}

impl OClass {
    /// The family label; both plain cases print as `O3`.
    pub fn label(&self) -> &'static str {
        match self {
            OClass::O1 => "O1",
            OClass::O2 => "O2",
            OClass::O3Movable | OClass::O3Fixed => "O3",
        }
    }
}

impl fmt::Display for OClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// The signed monomial `(-1)^{ol} q^{exponent}` a member contributes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FMonomial {
    /// `+1` or `-1`.
    pub sign: i8,
    pub exponent: u64,
}

impl FMonomial {
    pub fn negated(&self) -> FMonomial {
        FMonomial {
            sign: -self.sign,
            exponent: self.exponent,
        }
    }

    pub fn to_poly(&self) -> QPoly {
        QPoly::term(i64::from(self.sign), self.exponent)
    }
}

impl fmt::Display for FMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", if self.sign < 0 { '-' } else { '+' })?;
        match self.exponent {
            0 => write!(f, "1"),
            1 => write!(f, "q"),
            exp => write!(f, "q^{exp}"),
        }
    }
}

/// Classifies a member of `O(i,j)`.
///
/// The case `largest overlined > j - ell + ol - 1` cannot occur: such a part
/// would force more overlines to its right than the overpartition carries.
pub fn classify(lambda: &Overpartition, i: u64, j: u64) -> Result<OClass> {
    context_for_member(lambda, i, j)?;
    let ol = lambda.overline_count() as u64;
    let ell = lambda.len() as u64;
    if ol == 0 {
        return Ok(if ell == j {
            OClass::O3Fixed
        } else {
            OClass::O3Movable
        });
    }
    let largest = lambda.largest_overlined().expect("ol >= 1");
    let threshold = (j - ell) + (ol - 1);
    match largest.cmp(&threshold) {
        Ordering::Equal => Ok(OClass::O1),
        Ordering::Less => Ok(OClass::O2),
        Ordering::Greater => unreachable!(
            "member of O({i},{j}) with largest overlined part {largest} above {threshold}"
        ),
    }
}

fn remove_largest_overlined(lambda: &Overpartition) -> Overpartition {
    let largest = lambda.largest_overlined().expect("caller checked ol >= 1");
    let mut parts = lambda.parts().to_vec();
    let index = parts
        .iter()
        .position(|part| part.overlined && part.value == largest)
        .expect("largest overlined part exists");
    parts.remove(index);
    Overpartition::new(parts).expect("removing a part preserves validity")
}

fn insert_overlined(lambda: &Overpartition, value: u64) -> Result<Overpartition> {
    let mut parts = lambda.parts().to_vec();
    // First-occurrence rule: the new overline goes directly before any plain
    // part of equal value.
    let index = parts
        .iter()
        .position(|part| part.value <= value)
        .unwrap_or(parts.len());
    parts.insert(index, OverPart::overlined(value));
    Overpartition::new(parts)
}

/// The involution on `O(i,j)`.
///
/// Members of `O1` lose their largest overlined part; members of `O2` gain
/// an overlined `j - ell + ol - 1`; plain members gain an overlined
/// `j - ell - 1` unless they already have `j` parts, in which case they are
/// the fixed point. Applying the map twice restores the input, and off the
/// fixed point it flips the sign of the contributed monomial.
pub fn psi(lambda: &Overpartition, i: u64, j: u64) -> Result<Overpartition> {
    let ol = lambda.overline_count() as u64;
    let ell = lambda.len() as u64;
    match classify(lambda, i, j)? {
        OClass::O1 => Ok(remove_largest_overlined(lambda)),
        OClass::O2 => insert_overlined(lambda, (j - ell) + (ol - 1)),
        OClass::O3Movable => insert_overlined(lambda, j - ell - 1),
        OClass::O3Fixed => Ok(lambda.clone()),
    }
}

/// The signed monomial `f` of a member of `O(i,j)`.
pub fn f_statistic(lambda: &Overpartition, i: u64, j: u64) -> Result<FMonomial> {
    context_for_member(lambda, i, j)?;
    let ol = lambda.overline_count() as u64;
    let ell = lambda.len() as u64;
    let weight = i - ell + 1;
    Ok(FMonomial {
        sign: if ol.is_multiple_of(2) { 1 } else { -1 },
        exponent: lambda.size() + ol * weight + (i - ell) * (j - ell),
    })
}

/// One orbit record: a member of `O(i,j)`, its class, its signed monomial,
/// and its image under the involution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitRecord {
    pub lambda: Overpartition,
    pub class: OClass,
    pub monomial: FMonomial,
    pub image: Overpartition,
}

impl fmt::Display for OrbitRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {} -> {}",
            self.lambda, self.class, self.monomial, self.image
        )
    }
}

/// The full orbit listing of `O(i,j)` in canonical enumeration order.
pub fn orbit_trace(i: u64, j: u64) -> Result<Vec<OrbitRecord>> {
    enumerate_o_all(i, j)?
        .into_iter()
        .map(|(_, lambda)| {
            let class = classify(&lambda, i, j)?;
            let monomial = f_statistic(&lambda, i, j)?;
            let image = psi(&lambda, i, j)?;
            Ok(OrbitRecord {
                lambda,
                class,
                monomial,
                image,
            })
        })
        .collect()
}

/// Runs [`orbit_check_with`] on the canonical involution and statistic.
pub fn orbit_check(i: u64, j: u64) -> Result<VerifyReport> {
    orbit_check_with(i, j, psi, f_statistic)
}

/// Walks all of `O(i,j)` and checks that the supplied map is a
/// sign-reversing, class-respecting involution whose signed monomials sum
/// to exactly 1, with the all-zero member as the only fixed point.
///
/// The map and statistic are parameters so that deliberately corrupted
/// variants can be shown to fail; [`orbit_check`] wires in the real ones.
pub fn orbit_check_with<P, F>(i: u64, j: u64, psi_fn: P, f_fn: F) -> Result<VerifyReport>
where
    P: Fn(&Overpartition, u64, u64) -> Result<Overpartition>,
    F: Fn(&Overpartition, u64, u64) -> Result<FMonomial>,
{
    let started = Instant::now();
    let members = enumerate_o_all(i, j)?;
    let mut report = VerifyReport::new("involution", i, j, None);
    report.set_count("members", members.len() as u64);
    report.expect_count(
        "O(i,j) cardinality",
        3u64.pow(j as u32),
        members.len() as u64,
    );

    let mut sum = QPoly::zero();
    let mut fixed_points = 0u64;
    for (_, lambda) in &members {
        if !check_member(
            i,
            j,
            lambda,
            &psi_fn,
            &f_fn,
            &mut sum,
            &mut fixed_points,
            &mut report,
        ) {
            break;
        }
    }
    report.set_count("fixed_points", fixed_points);
    if report.passed {
        report.expect_count("fixed points", 1, fixed_points);
    }
    if report.passed {
        report.expect_poly("telescoped f-sum over O(i,j)", &QPoly::one(), &sum);
    }
    report.elapsed_micros = started.elapsed().as_micros() as u64;
    Ok(report)
}

#[allow(clippy::too_many_arguments)]
fn check_member<P, F>(
    i: u64,
    j: u64,
    lambda: &Overpartition,
    psi_fn: &P,
    f_fn: &F,
    sum: &mut QPoly,
    fixed_points: &mut u64,
    report: &mut VerifyReport,
) -> bool
where
    P: Fn(&Overpartition, u64, u64) -> Result<Overpartition>,
    F: Fn(&Overpartition, u64, u64) -> Result<FMonomial>,
{
    let fail = |report: &mut VerifyReport, problem: String| {
        report.record_witness(Witness::Element {
            element: lambda.to_string(),
            problem,
        });
        false
    };

    let monomial = match f_fn(lambda, i, j) {
        Ok(monomial) => monomial,
        Err(error) => return fail(report, format!("statistic failed: {error}")),
    };
    sum.add_term(monomial.exponent, i64::from(monomial.sign).into());

    let image = match psi_fn(lambda, i, j) {
        Ok(image) => image,
        Err(error) => return fail(report, format!("map failed: {error}")),
    };
    if let Err(error) = context_for_member(&image, i, j) {
        return fail(report, format!("image {image} left O({i},{j}): {error}"));
    }
    let back = match psi_fn(&image, i, j) {
        Ok(back) => back,
        Err(error) => return fail(report, format!("map failed on image {image}: {error}")),
    };
    if back != *lambda {
        return fail(
            report,
            format!("not an involution: maps to {image}, which maps to {back}"),
        );
    }

    if image == *lambda {
        *fixed_points += 1;
        let all_zero = lambda.is_plain() && lambda.parts().iter().all(|part| part.value == 0);
        if !(all_zero && lambda.len() as u64 == j) {
            return fail(
                report,
                format!("unexpected fixed point (wants {j} zero parts)"),
            );
        }
        return true;
    }

    let image_monomial = match f_fn(&image, i, j) {
        Ok(monomial) => monomial,
        Err(error) => {
            return fail(
                report,
                format!("statistic failed on image {image}: {error}"),
            )
        }
    };
    if image_monomial != monomial.negated() {
        report.record_witness(Witness::MonomialMismatch {
            element: format!("{lambda} -> {image}"),
            expected: monomial.negated().to_string(),
            actual: image_monomial.to_string(),
        });
        return false;
    }

    // Class transport: O1 trades places with O2 or movable O3, and both the
    // length and the overline count move by exactly one.
    let class = classify(lambda, i, j).expect("member classifies");
    let image_class = classify(&image, i, j).expect("member image classifies");
    let transported = matches!(
        (class, image_class),
        (OClass::O1, OClass::O2 | OClass::O3Movable) | (OClass::O2 | OClass::O3Movable, OClass::O1)
    );
    if !transported {
        return fail(
            report,
            format!("class transport violated: {class:?} maps to {image_class:?}"),
        );
    }
    let length_step = lambda.len().abs_diff(image.len());
    let overline_step = lambda.overline_count().abs_diff(image.overline_count());
    if length_step != 1 || overline_step != 1 {
        return fail(
            report,
            format!("length/overline steps are ({length_step},{overline_step}), want (1,1)"),
        );
    }
    true
}
