//! Potentially-graphic decisions and sufficient conditions.
//!
//! The exhaustive decisions walk the whole labeled realization space (see
//! [`walk_realizations`]) and stop at the first realization that contains the
//! target. The [`Condition`] predicates only evaluate hypotheses on the
//! degree terms; they never search.

use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::ops::ControlFlow;

use crate::graph::{
    find_embedding, find_embedding_with, find_top_embedding, walk_realizations, SimpleGraph, WalkOutcome,
};
use crate::pattern::TargetPattern;
use crate::sequence::DegreeSequence;
use crate::{Error, Result};

/// Three-valued answer: a truncated search can confirm but never refute.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum Answer {
    Yes,
    No,
    Unknown,
}

impl Answer {
    pub fn as_bool(self) -> Option<bool> {
        match self {
            Self::Yes => Some(true),
            Self::No => Some(false),
            Self::Unknown => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "camelCase", tag = "kind", content = "condition"))]
pub enum Method {
    SufficientCondition(Condition),
    ExhaustiveSearch,
}

/// A realization together with where the target sits in it.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Witness {
    pub graph: SimpleGraph,
    /// `embedding[p]` is the host vertex carrying pattern vertex `p`.
    pub embedding: Vec<usize>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SearchStats {
    /// Labeled realizations visited.
    pub explored: usize,
    pub truncated: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PotentialDecision {
    pub answer: Answer,
    pub method: Method,
    pub witness: Option<Witness>,
    pub stats: SearchStats,
}

impl PotentialDecision {
    pub fn value(&self) -> Option<bool> {
        self.answer.as_bool()
    }

    fn from_walk(outcome: WalkOutcome<Witness>) -> Self {
        let explored = outcome.explored();
        match outcome {
            WalkOutcome::Found { value, .. } => Self {
                answer: Answer::Yes,
                method: Method::ExhaustiveSearch,
                witness: Some(value),
                stats: SearchStats { explored, truncated: false },
            },
            WalkOutcome::Exhausted { .. } => Self {
                answer: Answer::No,
                method: Method::ExhaustiveSearch,
                witness: None,
                stats: SearchStats { explored, truncated: false },
            },
            WalkOutcome::Truncated { .. } => Self {
                answer: Answer::Unknown,
                method: Method::ExhaustiveSearch,
                witness: None,
                stats: SearchStats { explored, truncated: true },
            },
        }
    }
}

fn check_fits(seq: &DegreeSequence, m: usize) -> Result<()> {
    seq.require_graphic()?;
    if m > seq.len() {
        return Err(Error::InvalidParameter(alloc::format!(
            "pattern on {m} vertices does not fit a sequence of length {}",
            seq.len()
        )));
    }
    Ok(())
}

/// Does some realization of `seq` contain `pattern`?
pub fn is_potentially(seq: &DegreeSequence, pattern: &TargetPattern, limit: usize) -> Result<PotentialDecision> {
    check_fits(seq, pattern.m)?;
    let outcome = walk_realizations(seq, limit, |g| match find_embedding(g, &pattern.graph) {
        Some(embedding) => ControlFlow::Break(Witness { graph: g.clone(), embedding }),
        None => ControlFlow::Continue(()),
    })?;
    Ok(PotentialDecision::from_walk(outcome))
}

/// Does some realization have `r + 1` vertices carrying the `r + 1` largest
/// degrees that induce a clique?
pub fn is_potentially_a(seq: &DegreeSequence, r: usize, limit: usize) -> Result<PotentialDecision> {
    check_fits(seq, r + 1)?;
    let clique = SimpleGraph::complete(r + 1);
    let outcome = walk_realizations(seq, limit, |g| match find_top_embedding(g, &clique) {
        Some(embedding) => ControlFlow::Break(Witness { graph: g.clone(), embedding }),
        None => ControlFlow::Continue(()),
    })?;
    Ok(PotentialDecision::from_walk(outcome))
}

/// Fast path: answer `Yes` from the first listed condition whose target
/// contains `pattern`, otherwise fall back to [`is_potentially`].
pub fn decide(seq: &DegreeSequence, pattern: &TargetPattern, limit: usize) -> Result<PotentialDecision> {
    check_fits(seq, pattern.m)?;
    let r = pattern.m.saturating_sub(1);
    if r >= 3 {
        for cond in Condition::ALL {
            let target = cond.target(r)?;
            if crate::graph::contains_subgraph(&target, &pattern.graph) && cond.holds(seq, r)? {
                return Ok(PotentialDecision {
                    answer: Answer::Yes,
                    method: Method::SufficientCondition(cond),
                    witness: None,
                    stats: SearchStats::default(),
                });
            }
        }
    }
    is_potentially(seq, pattern, limit)
}

/// Whether some realization places `pattern` on vertices carrying the
/// `pattern.m` largest degrees. Requires `seq` to be (non-truncated)
/// potentially `pattern`-graphic.
pub fn check_placement_property(seq: &DegreeSequence, pattern: &TargetPattern, limit: usize) -> Result<bool> {
    let decision = is_potentially(seq, pattern, limit)?;
    match decision.answer {
        Answer::Yes => {}
        Answer::No => return Err(Error::Precondition(alloc::format!("({seq}) is not potentially {pattern}-graphic"))),
        Answer::Unknown => return Err(Error::OracleIncomplete { sequence: seq.to_string(), limit }),
    }
    let outcome = walk_realizations(seq, limit, |g| match find_top_embedding(g, &pattern.graph) {
        Some(_) => ControlFlow::Break(()),
        None => ControlFlow::Continue(()),
    })?;
    match outcome {
        WalkOutcome::Found { .. } => Ok(true),
        WalkOutcome::Exhausted { .. } => Ok(false),
        WalkOutcome::Truncated { .. } => Err(Error::OracleIncomplete { sequence: seq.to_string(), limit }),
    }
}

/// `K_{r+1}` minus the edge between slots `r - 1` and `r` (0-based).
pub fn clique_minus_last_edge(r: usize) -> SimpleGraph {
    let mut g = SimpleGraph::complete(r + 1);
    g.remove_edge(r - 1, r);
    g
}

/// For a potentially `K_{r+1} - e`-graphic sequence: whether some realization
/// holds `K_{r+1} - e` on vertices `v_1..v_{r+1}` with `deg(v_i) = d_i` and the
/// missing edge between `v_r` and `v_{r+1}`.
pub fn check_missing_edge_placement(seq: &DegreeSequence, r: usize, limit: usize) -> Result<bool> {
    if r < 1 {
        return Err(Error::InvalidParameter("r must be at least 1".into()));
    }
    let near_clique = TargetPattern::build(r + 1, crate::pattern::Family::Path(1))?;
    match is_potentially(seq, &near_clique, limit)?.answer {
        Answer::Yes => {}
        Answer::No => {
            return Err(Error::Precondition(alloc::format!("({seq}) is not potentially {near_clique}-graphic")))
        }
        Answer::Unknown => return Err(Error::OracleIncomplete { sequence: seq.to_string(), limit }),
    }
    let slots = clique_minus_last_edge(r);
    let terms = seq.terms();
    let outcome = walk_realizations(seq, limit, |g| {
        match find_embedding_with(g, &slots, |p, v| g.degree(v) == terms[p], |_| true) {
            Some(_) => ControlFlow::Break(()),
            None => ControlFlow::Continue(()),
        }
    })?;
    match outcome {
        WalkOutcome::Found { .. } => Ok(true),
        WalkOutcome::Exhausted { .. } => Ok(false),
        WalkOutcome::Truncated { .. } => Err(Error::OracleIncomplete { sequence: seq.to_string(), limit }),
    }
}

/// Hypothesis checks on the degree terms that guarantee a target in some
/// realization. Names describe the shape of the hypothesis: "staircase" is
/// `d_i ≥ 2r - i` over a leading block, "tail" is `d_{2r+2} ≥ r - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum Condition {
    /// `n ≥ r+1`, `d_{r+1} ≥ r`, `d_i ≥ 2r-i` for `i ≤ r-1`; gives a top clique.
    CliqueStaircase,
    /// `n ≥ 2r+2`, `d_{r+1} ≥ r`, `d_{2r+2} ≥ r-1`; gives a top clique.
    CliqueTail,
    /// `n ≥ r+1`, `d_{r+1} ≥ r-1`, `d_i ≥ 2r-i` for `i ≤ r-1`; gives `K_{r+1} - e`.
    NearCliqueStaircase,
    /// `n ≥ 2r+2`, `d_{r-1} ≥ r`, `d_{2r+2} ≥ r-1`; gives `K_{r+1} - e`.
    NearCliqueTail,
    /// `n ≥ r+1`, `d_r ≥ r-1`, `d_{r+1} ≥ r-2`, `d_i ≥ 2r-i` for `i ≤ r-2`;
    /// gives `K_{r+1} - P_2`.
    MinusPathStaircase,
    /// `n ≥ 2r+2`, `d_{r-2} ≥ r`, `d_{2r+2} ≥ r-1`; gives `K_{r+1} - P_2`.
    MinusPathTail,
}

impl Condition {
    pub const ALL: [Condition; 6] = [
        Self::CliqueStaircase,
        Self::CliqueTail,
        Self::NearCliqueStaircase,
        Self::NearCliqueTail,
        Self::MinusPathStaircase,
        Self::MinusPathTail,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::CliqueStaircase => "clique-staircase",
            Self::CliqueTail => "clique-tail",
            Self::NearCliqueStaircase => "near-clique-staircase",
            Self::NearCliqueTail => "near-clique-tail",
            Self::MinusPathStaircase => "minus-path-staircase",
            Self::MinusPathTail => "minus-path-tail",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.name() == name)
    }

    fn min_r(self) -> usize {
        match self {
            Self::MinusPathStaircase | Self::MinusPathTail => 3,
            _ => 2,
        }
    }

    /// Smallest sequence length for which the hypothesis is meaningful.
    pub fn min_len(self, r: usize) -> usize {
        match self {
            Self::CliqueStaircase | Self::NearCliqueStaircase | Self::MinusPathStaircase => r + 1,
            Self::CliqueTail | Self::NearCliqueTail | Self::MinusPathTail => 2 * r + 2,
        }
    }

    /// The graph the condition promises: `K_{r+1}`, `K_{r+1} - e` or
    /// `K_{r+1} - P_2`.
    pub fn target(self, r: usize) -> Result<SimpleGraph> {
        let family = match self {
            Self::CliqueStaircase | Self::CliqueTail => return Ok(SimpleGraph::complete(r + 1)),
            Self::NearCliqueStaircase | Self::NearCliqueTail => crate::pattern::Family::Path(1),
            Self::MinusPathStaircase | Self::MinusPathTail => crate::pattern::Family::P2,
        };
        Ok(TargetPattern::build(r + 1, family)?.graph)
    }

    /// Evaluates the hypothesis. A sequence too short for it gives `false`;
    /// a non-graphic sequence is an error.
    pub fn holds(self, seq: &DegreeSequence, r: usize) -> Result<bool> {
        if r < self.min_r() {
            return Err(Error::InvalidParameter(alloc::format!("{} needs r >= {}", self.name(), self.min_r())));
        }
        seq.require_graphic()?;
        if seq.len() < self.min_len(r) {
            return Ok(false);
        }
        let d = |i: usize| seq.d(i);
        let staircase = |upto: usize| (1..=upto).all(|i| d(i) >= 2 * r - i);
        Ok(match self {
            Self::CliqueStaircase => d(r + 1) >= r && staircase(r - 1),
            Self::CliqueTail => d(r + 1) >= r && d(2 * r + 2) >= r - 1,
            Self::NearCliqueStaircase => d(r + 1) >= r - 1 && staircase(r - 1),
            Self::NearCliqueTail => d(r - 1) >= r && d(2 * r + 2) >= r - 1,
            Self::MinusPathStaircase => d(r) >= r - 1 && d(r + 1) >= r - 2 && staircase(r - 2),
            Self::MinusPathTail => d(r - 2) >= r && d(2 * r + 2) >= r - 1,
        })
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
