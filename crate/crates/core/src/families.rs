//! The three partition families behind the identity and their exact
//! generating polynomials:
//!
//! * `A(i,k)` — partitions into distinct parts from `{i-k+1, ..., i}`, plus
//!   the empty partition; signed by `(-1)^length` they generate
//!   `(q^{i-k+1}; q)_k`.
//! * `B(j,k)` — partitions into exactly `k` nonnegative parts, each at most
//!   `j-k`; they generate the Gaussian coefficient `[j k]_q`.
//! * `O(i,j,k)` — weighted overpartitions into `k` nonnegative parts bounded
//!   by `j-1`, where every index `r` satisfies `value_r - t_r <= j-k` for
//!   `t_r` the number of overlines strictly to the right, and every overline
//!   carries the weight `i-k+1`.
//!
//! All enumerators emit a canonical order: part sequences lexicographically
//! decreasing, an overlined part ahead of the plain part of equal value.

use crate::error::{Error, Result};
use crate::partition::{enumerate_overpartitions, DistinctPartition, Overpartition, Partition};
use crate::qseries::QPoly;

/// The parameter triple `(i, j, k)` with `k <= j <= i` that pins down one
/// family `O(i,j,k)`: parts are bounded by `j-1`, the box bound is `j-k`,
/// and each overline weighs `i-k+1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct OContext {
    i: u64,
    j: u64,
    k: u64,
}

impl OContext {
    pub fn new(i: u64, j: u64, k: u64) -> Result<Self> {
        if k > j || j > i {
            return Err(Error::ParameterRange(format!(
                "O(i,j,k) requires k <= j <= i, got i={i}, j={j}, k={k}"
            )));
        }
        Ok(OContext { i, j, k })
    }

    pub fn i(&self) -> u64 {
        self.i
    }

    pub fn j(&self) -> u64 {
        self.j
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    /// The weight `i - k + 1` carried by each overline.
    pub fn weight(&self) -> u64 {
        self.i - self.k + 1
    }

    /// The box bound `j - k` on `value_r - t_r`.
    pub fn box_bound(&self) -> u64 {
        self.j - self.k
    }

    /// The largest allowed part value, `j - 1`; `None` when `j = 0`.
    pub fn part_bound(&self) -> Option<u64> {
        self.j.checked_sub(1)
    }
}

/// Enumerates `A(i,k)`: all `2^k` subsets of `{i-k+1, ..., i}` as strictly
/// decreasing sequences, lexicographically decreasing, the empty partition
/// last.
pub fn enumerate_a(i: u64, k: u64) -> Result<Vec<DistinctPartition>> {
    if k > i {
        return Err(Error::ParameterRange(format!(
            "A(i,k) requires k <= i, got i={i}, k={k}"
        )));
    }
    let low = i - k + 1;
    let mut out = Vec::with_capacity(1 << k.min(20));
    let mut prefix = Vec::new();
    subsets_below(i + 1, low, &mut prefix, &mut out);
    Ok(out)
}

fn subsets_below(bound: u64, low: u64, prefix: &mut Vec<u64>, out: &mut Vec<DistinctPartition>) {
    for first in (low..bound).rev() {
        prefix.push(first);
        subsets_below(first, low, prefix, out);
        prefix.pop();
    }
    out.push(DistinctPartition::new(prefix.clone()).expect("descending subsets are distinct"));
}

/// Enumerates `B(j,k)`: partitions into exactly `k` nonnegative parts, each
/// at most `j-k`, lexicographically decreasing. Cardinality `binomial(j,k)`.
pub fn enumerate_b(j: u64, k: u64) -> Result<Vec<Partition>> {
    if k > j {
        return Err(Error::ParameterRange(format!(
            "B(j,k) requires k <= j, got j={j}, k={k}"
        )));
    }
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(k as usize);
    boxed_partitions(k as usize, j - k, &mut prefix, &mut out);
    Ok(out)
}

fn boxed_partitions(remaining: usize, bound: u64, prefix: &mut Vec<u64>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition::new(prefix.clone()).expect("generated nonincreasing"));
        return;
    }
    for value in (0..=bound).rev() {
        prefix.push(value);
        boxed_partitions(remaining - 1, value, prefix, out);
        prefix.pop();
    }
}

/// Membership test for `O(i,j,k)`.
///
/// True exactly when the overpartition has `k` parts, every value is at most
/// `j-1`, and every index `r` satisfies `value_r - t_r <= j-k` where `t_r`
/// counts the overlines strictly to the right of `r`. The last condition is
/// the position-wise reading of the family's overline rule; it is what makes
/// the extraction `beta_r = value_r - t_r` land inside the `B(j,k)` box.
pub fn is_member_o(lambda: &Overpartition, ctx: OContext) -> bool {
    if lambda.len() as u64 != ctx.k() {
        return false;
    }
    if let Some(bound) = ctx.part_bound() {
        if lambda.parts().iter().any(|part| part.value > bound) {
            return false;
        }
    } else if !lambda.is_empty() {
        return false;
    }
    let to_right = lambda.overlines_to_right();
    lambda
        .parts()
        .iter()
        .zip(&to_right)
        .all(|(part, &t)| part.value <= t as u64 + ctx.box_bound())
}

/// Explains why an overpartition is outside `O(i,j,k)`, for error reports.
pub(crate) fn membership_failure(lambda: &Overpartition, ctx: OContext) -> Option<String> {
    if lambda.len() as u64 != ctx.k() {
        return Some(format!("has {} parts instead of {}", lambda.len(), ctx.k()));
    }
    let bound = ctx.part_bound();
    for (index, part) in lambda.parts().iter().enumerate() {
        match bound {
            Some(bound) if part.value > bound => {
                return Some(format!(
                    "part {} at index {index} exceeds the bound {bound}",
                    part.value
                ));
            }
            _ => {}
        }
    }
    let to_right = lambda.overlines_to_right();
    for (index, (part, &t)) in lambda.parts().iter().zip(&to_right).enumerate() {
        if part.value > t as u64 + ctx.box_bound() {
            return Some(format!(
                "index {index}: value {} minus {t} trailing overlines exceeds {}",
                part.value,
                ctx.box_bound()
            ));
        }
    }
    None
}

/// Enumerates `O(i,j,k)` in canonical order. Cardinality `2^k * binomial(j,k)`.
pub fn enumerate_o(ctx: OContext) -> Vec<Overpartition> {
    if ctx.k() == 0 {
        return vec![Overpartition::empty()];
    }
    let bound = ctx.part_bound().expect("k >= 1 forces j >= 1");
    enumerate_overpartitions(ctx.k() as usize, bound)
        .into_iter()
        .filter(|candidate| is_member_o(candidate, ctx))
        .collect()
}

/// Enumerates the full disjoint union `O(i,j)` tagged by `k`, for
/// `k = 0, ..., j`. Total cardinality `3^j`.
pub fn enumerate_o_all(i: u64, j: u64) -> Result<Vec<(u64, Overpartition)>> {
    if j > i {
        return Err(Error::ParameterRange(format!(
            "O(i,j) requires j <= i, got i={i}, j={j}"
        )));
    }
    let mut out = Vec::new();
    for k in 0..=j {
        let ctx = OContext::new(i, j, k)?;
        out.extend(enumerate_o(ctx).into_iter().map(|lambda| (k, lambda)));
    }
    Ok(out)
}

/// The signed generating polynomial of `A(i,k)` by direct enumeration:
/// `sum (-1)^length q^size`. Equal to `(q^{i-k+1}; q)_k`.
pub fn signed_genfunc_a(i: u64, k: u64) -> Result<QPoly> {
    let mut sum = QPoly::zero();
    for gamma in enumerate_a(i, k)? {
        let sign = if gamma.len() % 2 == 0 { 1 } else { -1 };
        sum.add_term(gamma.size(), sign.into());
    }
    Ok(sum)
}

/// The generating polynomial of `B(j,k)` by direct enumeration:
/// `sum q^size`. Equal to the Gaussian coefficient `[j k]_q`.
pub fn genfunc_b(j: u64, k: u64) -> Result<QPoly> {
    let mut sum = QPoly::zero();
    for beta in enumerate_b(j, k)? {
        sum.add_term(beta.size(), 1.into());
    }
    Ok(sum)
}

/// The signed, weight-adjusted generating polynomial of `O(i,j,k)`:
/// `sum (-1)^{ol} q^{size + ol * (i-k+1)}`. Equal to
/// `(q^{i-k+1}; q)_k [j k]_q`.
pub fn signed_genfunc_o(ctx: OContext) -> QPoly {
    let mut sum = QPoly::zero();
    for lambda in enumerate_o(ctx) {
        let ol = lambda.overline_count() as u64;
        let sign = if ol.is_multiple_of(2) { 1 } else { -1 };
        sum.add_term(lambda.size() + ol * ctx.weight(), sign.into());
    }
    sum
}

/// Builds the membership context and checks that `lambda` lies in
/// `O(i, j, length)`; shared entry point for the involution operations.
pub(crate) fn context_for_member(lambda: &Overpartition, i: u64, j: u64) -> Result<OContext> {
    let k = lambda.len() as u64;
    if k > j || j > i {
        return Err(Error::NotInO {
            i,
            j,
            k,
            reason: format!(
                "parameters must satisfy length <= j <= i, got length={k}, j={j}, i={i}"
            ),
        });
    }
    let ctx = OContext::new(i, j, k)?;
    match membership_failure(lambda, ctx) {
        None => Ok(ctx),
        Some(reason) => Err(Error::NotInO { i, j, k, reason }),
    }
}
