//! Degree-sequence combinatorics for potentially `K_m - H`-graphic sequences.
//!
//! The crate is `no_std` and only needs `alloc`. It covers:
//!
//! - [`sequence`]: canonical degree sequences, the Erdős–Gallai test, laying
//!   off a term and the graphic-sequence enumerator.
//! - [`graph`]: small labeled simple graphs, realizations, the 2-switch
//!   realization walk and non-induced subgraph search.
//! - [`pattern`]: target patterns `K_m - H` and the family catalog.
//! - [`potential`]: exhaustive potentially-graphic decisions and the
//!   sufficient-condition predicates.
//! - [`extremal`]: closed-form extremal sums, the lower-bound witness and the
//!   brute-force threshold oracle.
//!
//! IO, the command line and parallel drivers live in the `degseq` crate.

#![no_std]
#![warn(missing_debug_implementations, rust_2018_idioms)]

extern crate alloc;

mod error;

pub mod extremal;
pub mod graph;
pub mod pattern;
pub mod potential;
pub mod report;
pub mod sequence;

pub use error::{Error, Result};
pub use extremal::{SigmaMethod, SigmaQuery, SigmaResult};
pub use graph::{CanonicalForm, CanonicalMode, SimpleGraph};
pub use pattern::{Family, TargetPattern};
pub use potential::{Answer, PotentialDecision};
pub use report::{Failure, Status, VerificationReport};
pub use sequence::{DegreeSequence, LayoffResult};

/// Default cap on the number of labeled realizations a single search visits.
pub const DEFAULT_REALIZATION_LIMIT: usize = 5_000_000;
