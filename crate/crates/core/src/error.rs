//! Error and invariant-violation types shared across the crate.

use thiserror::Error;

/// A broken structural invariant of a partition or overpartition.
///
/// `position` is the 0-based index of the first offending part.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Error)]
pub enum Violation {
    /// `parts[position]` is larger than `parts[position - 1]`.
    #[error("part at index {position} increases")]
    Increase { position: usize },
    /// `parts[position]` is not strictly smaller than `parts[position - 1]`.
    #[error("part at index {position} does not strictly decrease")]
    NotStrictlyDecreasing { position: usize },
    /// A second overline on a value that is already overlined.
    #[error("duplicate overline at index {position}")]
    DuplicateOverline { position: usize },
    /// An overlined part that follows a plain part of the same value.
    #[error("overline at index {position} does not mark the first occurrence of its value")]
    OverlineAfterPlain { position: usize },
}

/// Errors reported by the library.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(Violation),

    #[error("invalid overpartition: {0}")]
    InvalidOverpartition(Violation),

    /// A numeric parameter falls outside its stated domain (e.g. `j > i`).
    #[error("parameters out of range: {0}")]
    ParameterRange(String),

    #[error("cannot parse {what}: {reason}")]
    Parse { what: &'static str, reason: String },

    /// Insertion asked for position `m + 1` of an overpartition that is too short.
    #[error("insertion position {position} exceeds the part count {length}")]
    InsertPositionOutOfRange { position: usize, length: usize },

    /// Insertion would overline a part that already carries an overline.
    #[error("part at index {position} is already overlined")]
    AlreadyOverlined { position: usize },

    /// An inserted value must lie in `{0, ..., n - 1}` for an `n`-part partition.
    #[error("inserted value {value} is not below the part count {length}")]
    InsertValueOutOfRange { value: u64, length: usize },

    /// A part of gamma lies outside the allowed window `{i-k+1, ..., i}`.
    #[error("part {value} lies outside {low}..={high}, so the partition is not in A({i},{k})")]
    NotInA {
        value: u64,
        low: u64,
        high: u64,
        i: u64,
        k: u64,
    },

    #[error("partition is not in B({j},{k}): {reason}")]
    NotInB { j: u64, k: u64, reason: String },

    #[error("overpartition is not in O({i},{j},{k}): {reason}")]
    NotInO {
        i: u64,
        j: u64,
        k: u64,
        reason: String,
    },
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
