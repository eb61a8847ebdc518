//! The Joichi-Stanton insertion algorithm on overpartitions and the
//! weight-preserving bijection between `A(i,k) x B(j,k)` and `O(i,j,k)`
//! built on top of it.
//!
//! Inserting a value `m` into an overpartition adds 1 to the first `m` parts
//! and overlines the `(m+1)`-th. Inserting the distinct values of a
//! partition `alpha` from `{0, ..., n-1}` into an `n`-part partition `beta`
//! realizes the classical correspondence between pairs `(alpha, beta)` and
//! overpartitions with `n` nonnegative parts. The reverse direction has the
//! closed form `beta_r = value_r - t_r` where `t_r` counts the overlines
//! strictly to the right of index `r`.

use crate::error::{Error, Result};
use crate::families::{is_member_o, membership_failure, OContext};
use crate::partition::{DistinctPartition, OverPart, Overpartition, Partition};

/// One recorded insertion step: the inserted value and the overpartition it
/// produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InsertionStep {
    pub inserted: u64,
    pub result: Overpartition,
}

/// The step-by-step record of a sequence of insertions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InsertionTrace {
    initial: Overpartition,
    steps: Vec<InsertionStep>,
}

impl InsertionTrace {
    pub fn initial(&self) -> &Overpartition {
        &self.initial
    }

    pub fn steps(&self) -> &[InsertionStep] {
        &self.steps
    }

    /// The overpartition after the final step (the initial one when no steps
    /// were taken).
    pub fn result(&self) -> &Overpartition {
        self.steps.last().map_or(&self.initial, |step| &step.result)
    }
}

/// Inserts a single value `m`: adds 1 to the first `m` parts and overlines
/// the part at position `m + 1` (1-based).
///
/// Fails when the overpartition has fewer than `m + 1` parts or when that
/// part already carries an overline (which signals a repeated insertion).
pub fn insert_one(lambda: &Overpartition, m: u64) -> Result<Overpartition> {
    let index = m as usize;
    if index >= lambda.len() {
        return Err(Error::InsertPositionOutOfRange {
            position: index + 1,
            length: lambda.len(),
        });
    }
    if lambda.parts()[index].overlined {
        return Err(Error::AlreadyOverlined { position: index });
    }
    let mut parts: Vec<OverPart> = lambda.parts().to_vec();
    for part in parts.iter_mut().take(index) {
        part.value += 1;
    }
    parts[index].overlined = true;
    Ok(Overpartition::new(parts).expect("insertion preserves overpartition validity"))
}

/// Inserts every part of `alpha` into `beta` (in increasing order of the
/// inserted values), recording each intermediate overpartition.
///
/// Requires `alpha` to be a set of distinct values from `{0, ..., n-1}`
/// where `n` is the number of parts of `beta`; distinctness is guaranteed by
/// the [`DistinctPartition`] type.
pub fn js_insert_traced(alpha: &DistinctPartition, beta: &Partition) -> Result<InsertionTrace> {
    let length = beta.len();
    if let Some(&largest) = alpha.parts().first() {
        if largest as usize >= length {
            return Err(Error::InsertValueOutOfRange {
                value: largest,
                length,
            });
        }
    }
    let initial = Overpartition::from(beta);
    let mut current = initial.clone();
    let mut steps = Vec::with_capacity(alpha.len());
    for &inserted in alpha.parts().iter().rev() {
        current = insert_one(&current, inserted)?;
        steps.push(InsertionStep {
            inserted,
            result: current.clone(),
        });
    }
    Ok(InsertionTrace { initial, steps })
}

/// Inserts every part of `alpha` into `beta`, returning only the final
/// overpartition. The result has `|alpha| + |beta|` as its size, one
/// overline per part of `alpha`, and its overlined positions (1-based) are
/// exactly `{m + 1 : m in alpha}`.
pub fn js_insert(alpha: &DistinctPartition, beta: &Partition) -> Result<Overpartition> {
    Ok(js_insert_traced(alpha, beta)?.result().clone())
}

/// Reverses the insertion algorithm in one pass: `alpha` collects `p - 1`
/// for each 1-based overlined position `p`, and `beta_r = value_r - t_r`
/// subtracts the trailing-overline count from each value.
///
/// Every valid overpartition is in the image of the insertion map, so this
/// cannot fail.
pub fn js_extract(lambda: &Overpartition) -> (DistinctPartition, Partition) {
    let mut alpha: Vec<u64> = lambda
        .overlined_indices()
        .into_iter()
        .map(|index| index as u64)
        .collect();
    alpha.reverse();
    let to_right = lambda.overlines_to_right();
    let beta: Vec<u64> = lambda
        .parts()
        .iter()
        .zip(&to_right)
        .map(|(part, &t)| part.value - t as u64)
        .collect();
    (
        DistinctPartition::new(alpha).expect("overlined indices are distinct"),
        Partition::new(beta).expect("extraction preserves the nonincreasing order"),
    )
}

fn check_gamma_in_a(gamma: &DistinctPartition, ctx: OContext) -> Result<()> {
    let (i, k) = (ctx.i(), ctx.k());
    let low = ctx.weight(); // i - k + 1
    for &value in gamma.parts() {
        if value < low || value > i {
            return Err(Error::NotInA {
                value,
                low,
                high: i,
                i,
                k,
            });
        }
    }
    Ok(())
}

fn check_beta_in_b(beta: &Partition, ctx: OContext) -> Result<()> {
    let (j, k) = (ctx.j(), ctx.k());
    if beta.len() as u64 != k {
        return Err(Error::NotInB {
            j,
            k,
            reason: format!("has {} parts instead of {k}", beta.len()),
        });
    }
    let bound = ctx.box_bound();
    for (index, &value) in beta.parts().iter().enumerate() {
        if value > bound {
            return Err(Error::NotInB {
                j,
                k,
                reason: format!("part {value} at index {index} exceeds the box bound {bound}"),
            });
        }
    }
    Ok(())
}

/// The weight-preserving map `A(i,k) x B(j,k) -> O(i,j,k)`, with its
/// insertion steps.
///
/// When `gamma` is empty the image is `beta` itself; otherwise `gamma` is
/// lowered by `i-k+1` into distinct values below `k` and inserted into
/// `beta`. Inputs are checked against their families eagerly.
pub fn phi_bar_traced(
    gamma: &DistinctPartition,
    beta: &Partition,
    ctx: OContext,
) -> Result<InsertionTrace> {
    check_gamma_in_a(gamma, ctx)?;
    check_beta_in_b(beta, ctx)?;
    let lowered = gamma.offset_down(ctx.weight())?;
    let trace = js_insert_traced(&lowered, beta)?;
    debug_assert!(
        is_member_o(trace.result(), ctx),
        "image must land in O({},{},{})",
        ctx.i(),
        ctx.j(),
        ctx.k()
    );
    Ok(trace)
}

/// The weight-preserving map `A(i,k) x B(j,k) -> O(i,j,k)`.
///
/// The sign and weight bookkeeping matches term by term:
/// `(-1)^{length(gamma)} q^{|gamma| + |beta|}` equals
/// `(-1)^{ol} q^{|image| + ol * (i-k+1)}`.
pub fn phi_bar(
    gamma: &DistinctPartition,
    beta: &Partition,
    ctx: OContext,
) -> Result<Overpartition> {
    Ok(phi_bar_traced(gamma, beta, ctx)?.result().clone())
}

/// The inverse map `O(i,j,k) -> A(i,k) x B(j,k)`.
///
/// A plain member maps to `(empty, itself)`; otherwise the extraction runs
/// and the recovered distinct parts are raised by `i-k+1` back into the
/// window `{i-k+1, ..., i}`. Membership of the input is checked eagerly.
pub fn phi_bar_inv(
    lambda: &Overpartition,
    ctx: OContext,
) -> Result<(DistinctPartition, Partition)> {
    if let Some(reason) = membership_failure(lambda, ctx) {
        return Err(Error::NotInO {
            i: ctx.i(),
            j: ctx.j(),
            k: ctx.k(),
            reason,
        });
    }
    if lambda.is_plain() {
        return Ok((DistinctPartition::empty(), lambda.to_partition()));
    }
    let (lowered, beta) = js_extract(lambda);
    debug_assert!(check_beta_in_b(&beta, ctx).is_ok());
    Ok((lowered.offset_up(ctx.weight()), beta))
}
