//! Partition and overpartition value types, their validity rules and
//! statistics, and the comma-separated text format with trailing-apostrophe
//! overlines (`11',8,7,3',3,0'`; the empty partition prints as `-`).
//!
//! Lengths here count *all* parts including zeros, and both the plain zero
//! part and the overlined zero are first-class values.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result, Violation};

/// A partition: a nonincreasing sequence of nonnegative integers.
///
/// Zero parts are kept, and [`Partition::len`] counts them.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    /// Validates and wraps a nonincreasing sequence.
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        Self::validate(&parts).map_err(Error::InvalidPartition)?;
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// Checks the nonincreasing invariant, reporting the first offense.
    pub fn validate(parts: &[u64]) -> std::result::Result<(), Violation> {
        for position in 1..parts.len() {
            if parts[position] > parts[position - 1] {
                return Err(Violation::Increase { position });
            }
        }
        Ok(())
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// Number of parts, zeros included.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of all parts.
    pub fn size(&self) -> u64 {
        self.parts.iter().sum()
    }
}

/// A partition into strictly decreasing nonnegative parts; may be empty.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct DistinctPartition {
    parts: Vec<u64>,
}

impl DistinctPartition {
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        Self::validate(&parts).map_err(Error::InvalidPartition)?;
        Ok(DistinctPartition { parts })
    }

    pub fn empty() -> Self {
        DistinctPartition::default()
    }

    pub fn validate(parts: &[u64]) -> std::result::Result<(), Violation> {
        for position in 1..parts.len() {
            if parts[position] >= parts[position - 1] {
                return Err(Violation::NotStrictlyDecreasing { position });
            }
        }
        Ok(())
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// Subtracts `delta` from every part. Strict decrease is preserved;
    /// fails if any part would go negative.
    pub fn offset_down(&self, delta: u64) -> Result<Self> {
        let mut parts = Vec::with_capacity(self.parts.len());
        for &part in &self.parts {
            let shifted = part.checked_sub(delta).ok_or_else(|| {
                Error::ParameterRange(format!("cannot lower part {part} by {delta}"))
            })?;
            parts.push(shifted);
        }
        Ok(DistinctPartition { parts })
    }

    /// Adds `delta` to every part.
    pub fn offset_up(&self, delta: u64) -> Self {
        DistinctPartition {
            parts: self.parts.iter().map(|&part| part + delta).collect(),
        }
    }
}

/// One part of an overpartition: a value with an optional overline.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct OverPart {
    pub value: u64,
    pub overlined: bool,
}

impl OverPart {
    pub fn plain(value: u64) -> Self {
        OverPart {
            value,
            overlined: false,
        }
    }

    pub fn overlined(value: u64) -> Self {
        OverPart {
            value,
            overlined: true,
        }
    }
}

/// Summary statistics of an overpartition.
///
/// `overlines_to_right[r]` counts the overlined parts at indices strictly
/// greater than `r` (the quantity usually written `t` with 1-based indices).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OverpartitionStats {
    pub size: u64,
    pub length: usize,
    pub overline_count: usize,
    pub largest_overlined: Option<u64>,
    pub overlines_to_right: Vec<usize>,
}

/// An overpartition: a nonincreasing sequence of parts where the first
/// occurrence of a value may be overlined.
///
/// Consequently overlined values are pairwise distinct, and an overlined part
/// precedes every plain part of the same value.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Overpartition {
    parts: Vec<OverPart>,
}

impl Overpartition {
    pub fn new(parts: Vec<OverPart>) -> Result<Self> {
        Self::validate(&parts).map_err(Error::InvalidOverpartition)?;
        Ok(Overpartition { parts })
    }

    pub fn empty() -> Self {
        Overpartition::default()
    }

    /// Checks all overpartition invariants, reporting the first offense.
    pub fn validate(parts: &[OverPart]) -> std::result::Result<(), Violation> {
        for position in 1..parts.len() {
            let prev = parts[position - 1];
            let here = parts[position];
            if here.value > prev.value {
                return Err(Violation::Increase { position });
            }
            if here.overlined && here.value == prev.value {
                // Equal values sit in a contiguous run, so the previous part
                // settles whether this is a duplicate or a late overline.
                if prev.overlined {
                    return Err(Violation::DuplicateOverline { position });
                }
                return Err(Violation::OverlineAfterPlain { position });
            }
        }
        Ok(())
    }

    pub fn parts(&self) -> &[OverPart] {
        &self.parts
    }

    /// Number of parts, zeros included.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().map(|part| part.value).sum()
    }

    pub fn overline_count(&self) -> usize {
        self.parts.iter().filter(|part| part.overlined).count()
    }

    /// The value of the largest overlined part, if any.
    pub fn largest_overlined(&self) -> Option<u64> {
        self.parts
            .iter()
            .filter(|part| part.overlined)
            .map(|part| part.value)
            .max()
    }

    /// True when no part is overlined.
    pub fn is_plain(&self) -> bool {
        self.overline_count() == 0
    }

    /// 0-based indices of the overlined parts, ascending.
    pub fn overlined_indices(&self) -> Vec<usize> {
        self.parts
            .iter()
            .enumerate()
            .filter(|(_, part)| part.overlined)
            .map(|(index, _)| index)
            .collect()
    }

    /// For each index `r`, the number of overlined parts strictly to its right.
    pub fn overlines_to_right(&self) -> Vec<usize> {
        let mut counts = vec![0usize; self.parts.len()];
        let mut seen = 0;
        for index in (0..self.parts.len()).rev() {
            counts[index] = seen;
            if self.parts[index].overlined {
                seen += 1;
            }
        }
        counts
    }

    /// The part values with overlines forgotten.
    pub fn values(&self) -> Vec<u64> {
        self.parts.iter().map(|part| part.value).collect()
    }

    /// The underlying plain partition (overlines forgotten).
    pub fn to_partition(&self) -> Partition {
        Partition {
            parts: self.values(),
        }
    }

    pub fn stats(&self) -> OverpartitionStats {
        OverpartitionStats {
            size: self.size(),
            length: self.len(),
            overline_count: self.overline_count(),
            largest_overlined: self.largest_overlined(),
            overlines_to_right: self.overlines_to_right(),
        }
    }
}

impl From<Partition> for Overpartition {
    fn from(partition: Partition) -> Self {
        Overpartition {
            parts: partition.parts.into_iter().map(OverPart::plain).collect(),
        }
    }
}

impl From<&Partition> for Overpartition {
    fn from(partition: &Partition) -> Self {
        Overpartition {
            parts: partition
                .parts
                .iter()
                .copied()
                .map(OverPart::plain)
                .collect(),
        }
    }
}

/// Enumerates every valid overpartition with exactly `num_parts` parts and
/// all values at most `max_value`, in canonical order: part sequences compare
/// lexicographically decreasing, with an overlined part ahead of a plain part
/// of the same value.
pub fn enumerate_overpartitions(num_parts: usize, max_value: u64) -> Vec<Overpartition> {
    let mut out = Vec::new();
    let mut stack = Vec::with_capacity(num_parts);
    descend(&mut stack, num_parts, max_value, &mut out);
    out
}

fn descend(
    stack: &mut Vec<OverPart>,
    num_parts: usize,
    max_value: u64,
    out: &mut Vec<Overpartition>,
) {
    if stack.len() == num_parts {
        out.push(Overpartition {
            parts: stack.clone(),
        });
        return;
    }
    let bound = stack.last().map_or(max_value, |prev| prev.value);
    for value in (0..=bound).rev() {
        // An overline is legal only on the first occurrence of the value.
        let first_occurrence = stack.last().is_none_or(|prev| prev.value > value);
        if first_occurrence {
            stack.push(OverPart::overlined(value));
            descend(stack, num_parts, max_value, out);
            stack.pop();
        }
        stack.push(OverPart::plain(value));
        descend(stack, num_parts, max_value, out);
        stack.pop();
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_csv(f, self.parts.iter().map(|&value| (value, false)))
    }
}

impl fmt::Display for DistinctPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_csv(f, self.parts.iter().map(|&value| (value, false)))
    }
}

impl fmt::Display for Overpartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_csv(
            f,
            self.parts.iter().map(|part| (part.value, part.overlined)),
        )
    }
}

fn write_csv(
    f: &mut fmt::Formatter<'_>,
    parts: impl ExactSizeIterator<Item = (u64, bool)>,
) -> fmt::Result {
    if parts.len() == 0 {
        return write!(f, "-");
    }
    for (index, (value, overlined)) in parts.enumerate() {
        if index > 0 {
            write!(f, ",")?;
        }
        write!(f, "{value}")?;
        if overlined {
            write!(f, "'")?;
        }
    }
    Ok(())
}

fn parse_csv(input: &str, what: &'static str, allow_overlines: bool) -> Result<Vec<OverPart>> {
    let trimmed = input.trim();
    if trimmed.is_empty() {
        return Err(Error::Parse {
            what,
            reason: "empty string (use `-` for the empty partition)".into(),
        });
    }
    if trimmed == "-" {
        return Ok(Vec::new());
    }
    let mut parts = Vec::new();
    for piece in trimmed.split(',') {
        let (digits, overlined) = match piece.strip_suffix('\'') {
            Some(digits) => (digits, true),
            None => (piece, false),
        };
        if overlined && !allow_overlines {
            return Err(Error::Parse {
                what,
                reason: format!("overline marker in `{piece}` is not allowed here"),
            });
        }
        let value: u64 = digits.parse().map_err(|_| Error::Parse {
            what,
            reason: format!("`{piece}` is not a nonnegative integer part"),
        })?;
        parts.push(OverPart { value, overlined });
    }
    Ok(parts)
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let parts = parse_csv(input, "partition", false)?;
        Partition::new(parts.into_iter().map(|part| part.value).collect())
    }
}

impl FromStr for DistinctPartition {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let parts = parse_csv(input, "distinct partition", false)?;
        DistinctPartition::new(parts.into_iter().map(|part| part.value).collect())
    }
}

impl FromStr for Overpartition {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        Overpartition::new(parse_csv(input, "overpartition", true)?)
    }
}
