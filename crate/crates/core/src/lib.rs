//! Exact q-series and overpartition combinatorics for the Alladi-Gordon key
//! identity
//!
//! ```text
//! sum_{k=0}^{j} (q^{i-k+1}; q)_k [j k]_q q^{(i-k)(j-k)} = 1,    0 <= j <= i,
//! ```
//!
//! together with a machine check of its combinatorial proof. The crate has
//! two halves that meet in the [`verifier`]:
//!
//! * the algebraic side ([`qseries`]): sparse polynomials in `q` over
//!   arbitrary-precision integers, q-shifted factorials, Gaussian binomial
//!   coefficients, and the identity sums in cleared-denominator form;
//! * the combinatorial side ([`partition`], [`families`], [`bijection`],
//!   [`involution`]): exhaustive enumeration of the partition families
//!   `A(i,k)`, `B(j,k)` and the weighted overpartitions `O(i,j,k)`, the
//!   Joichi-Stanton insertion bijection between them, and the sign-reversing
//!   involution on `O(i,j)` whose single fixed point telescopes the signed
//!   sum to 1.
//!
//! Everything is exact: identities are checked as equalities of polynomials
//! with `BigInt` coefficients, never numerically and never truncated.
//!
//! # Quick tour
//!
//! ```
//! use agkey::qseries::{gaussian, key_identity_lhs};
//! use agkey::verifier::{sweep, summary, Check};
//!
//! // The algebraic sum really is the constant 1.
//! assert!(key_identity_lhs(9, 6).unwrap().is_one());
//! assert_eq!(gaussian(4, 2).to_string(), "1 + q + 2*q^2 + q^3 + q^4");
//!
//! // And the combinatorial suites agree, cell by cell.
//! let reports = sweep(3, &[Check::Theorem22, Check::Involution]);
//! assert_eq!(summary(&reports), "PASS 20/20 checks");
//! ```
//!
//! The `agkey` binary in this workspace exposes the same operations as the
//! `verify`, `sweep`, `enumerate`, `map` and `render` subcommands.

#![forbid(unsafe_code)]

pub mod bijection;
pub mod diagram;
pub mod error;
pub mod families;
pub mod involution;
pub mod partition;
pub mod qseries;
pub mod verifier;

pub use error::{Error, Result, Violation};
pub use families::OContext;
pub use partition::{DistinctPartition, OverPart, Overpartition, Partition};
pub use qseries::QPoly;
pub use verifier::{Check, VerifyReport, Witness};


// The book chapters double as doctests: every fenced Rust block below
// compiles and runs under `cargo test --doc`.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub struct Introduction;

    #[doc = include_str!("../../../book/src/qpolynomials.md")]
    pub struct QPolynomials;

    #[doc = include_str!("../../../book/src/partitions.md")]
    pub struct Partitions;

    #[doc = include_str!("../../../book/src/insertion.md")]
    pub struct Insertion;

    #[doc = include_str!("../../../book/src/involution.md")]
    pub struct Involution;

    #[doc = include_str!("../../../book/src/verification.md")]
    pub struct Verification;
}
