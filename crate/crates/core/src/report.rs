//! Verification reports shared by the suites.

use alloc::string::String;
use alloc::vec::Vec;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum Status {
    Pass,
    Fail,
    Incomplete,
}

/// One mismatch, recorded so the named operation can be re-run on `input`.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Failure {
    pub input: String,
    pub expected: String,
    pub got: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "camelCase"))]
pub struct SuiteParameters {
    pub r: Vec<usize>,
    pub n_min: usize,
    pub n_max: usize,
    pub families: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "camelCase"))]
pub struct VerificationReport {
    pub suite: String,
    pub parameters: SuiteParameters,
    pub checked: u64,
    pub failures: Vec<Failure>,
    /// Set when some search hit its limit.
    pub incomplete: bool,
    pub elapsed_ms: u64,
    pub status: Status,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>, parameters: SuiteParameters) -> Self {
        Self {
            suite: suite.into(),
            parameters,
            checked: 0,
            failures: Vec::new(),
            incomplete: false,
            elapsed_ms: 0,
            status: Status::Pass,
        }
    }

    /// Counts one check and records a failure when `ok` is false.
    pub fn check(&mut self, ok: bool, failure: impl FnOnce() -> Failure) {
        self.checked += 1;
        if !ok {
            self.failures.push(failure());
        }
        self.refresh();
    }

    pub fn fail(&mut self, failure: Failure) {
        self.checked += 1;
        self.failures.push(failure);
        self.refresh();
    }

    pub fn mark_incomplete(&mut self) {
        self.incomplete = true;
        self.refresh();
    }

    /// Folds another report's counts and failures into this one.
    pub fn merge(&mut self, other: VerificationReport) {
        self.checked += other.checked;
        self.failures.extend(other.failures);
        self.incomplete |= other.incomplete;
        self.refresh();
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    fn refresh(&mut self) {
        self.status = if !self.failures.is_empty() {
            Status::Fail
        } else if self.incomplete {
            Status::Incomplete
        } else {
            Status::Pass
        };
    }
}

impl Failure {
    pub fn new(input: impl Into<String>, expected: impl Into<String>, got: impl Into<String>) -> Self {
        Self { input: input.into(), expected: expected.into(), got: got.into() }
    }
}
