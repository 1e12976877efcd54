//! File formats, results cache, parallel drivers and verification suites on
//! top of `degseq-core`, plus the `degseq` command line.

pub mod cache;
pub mod cli;
mod error;
pub mod io;
pub mod parallel;
pub mod verify;

pub use error::{Error, Result};
