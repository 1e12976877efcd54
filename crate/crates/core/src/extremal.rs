//! Extremal degree sums `σ(K_{r+1} - H, n)`.
//!
//! Two closed forms are known for `r ≥ 3`:
//!
//! - `H = P_2`: `(r-1)(2n-r) - 2(n-r) + 2`, proved for `n ≥ 4r + 8`;
//! - `H` on `4 ≤ k ≤ r+1` vertices containing a tree on four vertices and no
//!   triangle (this covers both trees on four vertices): `(r-1)(2n-r) - 2(n-r)`,
//!   proved for `n ≥ 4r + 10`.
//!
//! The second value is also a lower bound for every such `H` and every
//! `n ≥ r + 1`, certified by `K_{r-2} + \overline{K_{n-r+2}}`, whose degree
//! sequence has exactly one realization up to isomorphism and misses the
//! target. [`sigma_brute`] recomputes `σ` from its definition for small `n`.

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use crate::graph::{all_realizations, contains_subgraph, CanonicalMode, SimpleGraph};
use crate::pattern::{in_tree_class, Family, TargetPattern};
use crate::potential::{is_potentially, Answer};
use crate::report::{Failure, SuiteParameters, VerificationReport};
use crate::sequence::{enumerate_graphic_sequences, is_graphic_eg, DegreeSequence};
use crate::{Error, Result, DEFAULT_REALIZATION_LIMIT};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum SigmaMethod {
    Formula,
    Brute,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SigmaQuery {
    pub family: Family,
    pub r: usize,
    pub n: usize,
    pub method: SigmaMethod,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum Provenance {
    Formula,
    /// The closed form evaluated below the length where it is proved.
    FormulaExtrapolation,
    BruteForce,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "camelCase"))]
pub struct SigmaResult {
    pub query: SigmaQuery,
    pub value: usize,
    pub threshold_met: bool,
    /// A graphic sequence with sum `value - 2` that is not potentially
    /// `K_{r+1} - H`-graphic (brute force only).
    pub witness_below: Option<DegreeSequence>,
    pub provenance: Provenance,
    /// Filled in by callers that time the computation.
    pub elapsed_ms: u64,
}

/// Which closed form covers a family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedForm {
    /// `H = P_2`.
    MinusPath,
    /// Triangle-free `H` containing a tree on four vertices.
    TreeClass,
}

impl ClosedForm {
    pub fn for_family(family: &Family, r: usize) -> Option<Self> {
        if *family == Family::P2 {
            return Some(Self::MinusPath);
        }
        let h = family.h_graph().ok()?;
        in_tree_class(&h, family.order(), r).then_some(Self::TreeClass)
    }

    /// Smallest `n` for which the value is proved.
    pub fn threshold(self, r: usize) -> usize {
        match self {
            Self::MinusPath => 4 * r + 8,
            Self::TreeClass => 4 * r + 10,
        }
    }

    pub fn value(self, r: usize, n: usize) -> usize {
        match self {
            Self::MinusPath => tree_class_sum(r, n) + 2,
            Self::TreeClass => tree_class_sum(r, n),
        }
    }
}

/// `(r-1)(2n-r) - 2(n-r)`, for `r ≥ 1` and `n ≥ r`.
pub fn tree_class_sum(r: usize, n: usize) -> usize {
    let (r, n) = (r as i64, n as i64);
    let v = (r - 1) * (2 * n - r) - 2 * (n - r);
    usize::try_from(v).expect("non-negative for n >= r >= 1")
}

/// `(r-2)(n-1) + (r-2)(n-r+2) + 2`: the lower bound assembled from the
/// witness degree sum.
pub fn witness_bound(r: usize, n: usize) -> usize {
    (r - 2) * (n - 1) + (r - 2) * (n - r + 2) + 2
}

fn check_rn(r: usize, n: usize) -> Result<()> {
    if r < 3 {
        return Err(Error::InvalidParameter(format!("r must be at least 3, got {r}")));
    }
    if n < r + 1 {
        return Err(Error::InvalidParameter(format!("n must be at least r + 1 = {}, got {n}", r + 1)));
    }
    Ok(())
}

/// Evaluates the closed form for `family`. Below the proved length the value
/// is still returned, flagged `threshold_met = false`.
pub fn sigma_formula(family: &Family, r: usize, n: usize) -> Result<SigmaResult> {
    check_rn(r, n)?;
    let form = ClosedForm::for_family(family, r).ok_or_else(|| Error::NoFormula(family.to_string()))?;
    let threshold_met = n >= form.threshold(r);
    Ok(SigmaResult {
        query: SigmaQuery { family: family.clone(), r, n, method: SigmaMethod::Formula },
        value: form.value(r, n),
        threshold_met,
        witness_below: None,
        provenance: if threshold_met { Provenance::Formula } else { Provenance::FormulaExtrapolation },
        elapsed_ms: 0,
    })
}

/// `K_{r-2} + \overline{K_{n-r+2}}` and its degree sequence
/// `((n-1)^{r-2}, (r-2)^{n-r+2})`.
pub fn build_witness(r: usize, n: usize) -> Result<(SimpleGraph, DegreeSequence)> {
    check_rn(r, n)?;
    let g = SimpleGraph::join(&SimpleGraph::complete(r - 2), &SimpleGraph::empty(n - r + 2))?;
    let seq = g.degree_sequence();
    Ok((g, seq))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BruteConfig {
    /// Realization limit for every inner decision.
    pub limit: usize,
    /// Largest `n` accepted.
    pub max_n: usize,
}

impl Default for BruteConfig {
    fn default() -> Self {
        Self { limit: DEFAULT_REALIZATION_LIMIT, max_n: 9 }
    }
}

/// Graphic sequences of length `n` grouped by sum, largest sum first; each
/// group is in descending lexicographic order.
pub fn sigma_levels(n: usize) -> Result<Vec<(usize, Vec<DegreeSequence>)>> {
    let mut levels: Vec<(usize, Vec<DegreeSequence>)> = Vec::new();
    let mut all: Vec<DegreeSequence> = enumerate_graphic_sequences(n, 0, n * (n - 1))?.collect();
    all.sort_by(|a, b| b.sigma().cmp(&a.sigma()).then_with(|| b.cmp(a)));
    for s in all {
        match levels.last_mut() {
            Some((sigma, group)) if *sigma == s.sigma() => group.push(s),
            _ => levels.push((s.sigma(), alloc::vec![s])),
        }
    }
    Ok(levels)
}

/// The lexicographically largest sequence of `level` that is not potentially
/// `pattern`-graphic. A truncated decision is an error.
pub fn first_failing(
    pattern: &TargetPattern,
    level: &[DegreeSequence],
    limit: usize,
) -> Result<Option<DegreeSequence>> {
    for s in level {
        if fails(pattern, s, limit)? {
            return Ok(Some(s.clone()));
        }
    }
    Ok(None)
}

/// Whether `seq` is a definite non-example for `pattern`.
pub fn fails(pattern: &TargetPattern, seq: &DegreeSequence, limit: usize) -> Result<bool> {
    match is_potentially(seq, pattern, limit)?.answer {
        Answer::Yes => Ok(false),
        Answer::No => Ok(true),
        Answer::Unknown => Err(Error::OracleIncomplete { sequence: seq.to_string(), limit }),
    }
}

/// `σ(K_{r+1} - H, n)` straight from its definition: sweep sums downward and
/// stop at the first level holding a sequence that is not potentially
/// graphic; the answer is that sum plus two.
pub fn sigma_brute(family: &Family, r: usize, n: usize, config: BruteConfig) -> Result<SigmaResult> {
    sigma_brute_by(family, r, n, config, |pattern, level| first_failing(pattern, level, config.limit))
}

/// [`sigma_brute`] with a caller-supplied level scan, e.g. a parallel one.
/// `scan` must return the lexicographically largest failing sequence of the
/// level, or `None`.
pub fn sigma_brute_by(
    family: &Family,
    r: usize,
    n: usize,
    config: BruteConfig,
    mut scan: impl FnMut(&TargetPattern, &[DegreeSequence]) -> Result<Option<DegreeSequence>>,
) -> Result<SigmaResult> {
    check_rn(r, n)?;
    if n > config.max_n {
        return Err(Error::InvalidParameter(format!("brute force is capped at n <= {}, got {n}", config.max_n)));
    }
    let pattern = TargetPattern::build(r + 1, family.clone())?;
    let mut value = 0;
    let mut witness_below = None;
    for (sigma, level) in sigma_levels(n)? {
        if let Some(bad) = scan(&pattern, &level)? {
            value = sigma + 2;
            witness_below = Some(bad);
            break;
        }
    }
    let threshold_met = ClosedForm::for_family(family, r).is_some_and(|f| n >= f.threshold(r));
    Ok(SigmaResult {
        query: SigmaQuery { family: family.clone(), r, n, method: SigmaMethod::Brute },
        value,
        threshold_met,
        witness_below,
        provenance: Provenance::BruteForce,
        elapsed_ms: 0,
    })
}

/// Checks that the witness for `(r, n)` certifies the lower bound for
/// `K_{r+1} - H`: its sequence is graphic, has one realization up to
/// isomorphism, no realization contains the target, and the sums line up.
pub fn verify_lower_bound(family: &Family, r: usize, n: usize, limit: usize) -> Result<VerificationReport> {
    let pattern = TargetPattern::build(r + 1, family.clone())?;
    let (g, seq) = build_witness(r, n)?;
    let mut rep = VerificationReport::new(
        "lower-bound",
        SuiteParameters { r: alloc::vec![r], n_min: n, n_max: n, families: alloc::vec![family.label()] },
    );
    let tag = |what: &str| format!("family={family} r={r} n={n} check={what}");

    let graphic = is_graphic_eg(&seq)?;
    rep.check(graphic, || Failure::new(tag("graphic"), "true", "false"));

    let want_sum = tree_class_sum(r, n) - 2;
    rep.check(seq.sigma() == want_sum, || {
        Failure::new(tag("witness-sum"), want_sum.to_string(), seq.sigma().to_string())
    });

    let identity = witness_bound(r, n) == tree_class_sum(r, n);
    rep.check(identity, || {
        Failure::new(tag("identity"), tree_class_sum(r, n).to_string(), witness_bound(r, n).to_string())
    });

    if !graphic {
        return Ok(rep);
    }
    let set = all_realizations(&seq, limit)?;
    if set.truncated {
        rep.mark_incomplete();
    }
    let canon = g.canonical_form(CanonicalMode::Unlabeled);
    let classes = set.graphs.iter().filter(|h| h.canonical_form(CanonicalMode::Unlabeled) != canon).count();
    rep.check(classes == 0, || {
        Failure::new(tag("unique-realization"), "0 non-isomorphic realizations", format!("{classes}"))
    });
    let hits = set.graphs.iter().filter(|h| contains_subgraph(h, &pattern.graph)).count();
    rep.check(hits == 0, || {
        Failure::new(tag("avoids-target"), "0 realizations containing the target", format!("{hits}"))
    });
    Ok(rep)
}

#[cfg(feature = "serde")]
mod serde_family {
    use super::Family;
    use crate::graph::SimpleGraph;
    use alloc::string::String;

    #[derive(serde::Serialize, serde::Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Named(String),
        Custom { custom: SimpleGraph },
    }

    impl serde::Serialize for Family {
        fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            match self {
                Family::Custom(h) => Repr::Custom { custom: h.clone() },
                named => Repr::Named(named.label()),
            }
            .serialize(s)
        }
    }

    impl<'de> serde::Deserialize<'de> for Family {
        fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
            match Repr::deserialize(d)? {
                Repr::Named(name) => name.parse().map_err(serde::de::Error::custom),
                Repr::Custom { custom } => Ok(Family::Custom(custom)),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn formula_examples() {
        let p = sigma_formula(&Family::P2, 3, 20).unwrap();
        assert_eq!((p.value, p.threshold_met), (42, true));
        let t = sigma_formula(&Family::T3Path, 3, 22).unwrap();
        assert_eq!((t.value, t.threshold_met), (44, true));
        let c = sigma_formula(&Family::Cycle(4), 4, 26).unwrap();
        assert_eq!((c.value, c.threshold_met), (100, true));
        assert_eq!(sigma_formula(&Family::P2, 4, 24).unwrap().value, 94);
    }

    #[test]
    fn formula_thresholds() {
        assert!(!sigma_formula(&Family::P2, 3, 19).unwrap().threshold_met);
        assert_eq!(sigma_formula(&Family::P2, 3, 19).unwrap().provenance, Provenance::FormulaExtrapolation);
        assert!(!sigma_formula(&Family::T3Star, 3, 21).unwrap().threshold_met);
        assert!(sigma_formula(&Family::T3Star, 3, 22).unwrap().threshold_met);
    }

    #[test]
    fn formula_errors() {
        assert_eq!(sigma_formula(&Family::K3, 3, 30), Err(Error::NoFormula("K3".into())));
        assert!(matches!(sigma_formula(&Family::Path(1), 3, 30), Err(Error::NoFormula(_))));
        // C5 has five vertices; with r = 3 the pattern only has four
        assert!(matches!(sigma_formula(&Family::Cycle(5), 3, 30), Err(Error::NoFormula(_))));
        assert!(sigma_formula(&Family::P2, 2, 30).is_err());
        assert!(sigma_formula(&Family::P2, 3, 3).is_err());
        let custom = Family::Custom(SimpleGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap());
        assert_eq!(sigma_formula(&custom, 4, 30).unwrap().value, tree_class_sum(4, 30));
    }

    #[test]
    fn formula_relation_and_parity() {
        for r in 3..=10 {
            for n in r + 1..=60 {
                let p2 = sigma_formula(&Family::P2, r, n).unwrap().value;
                let t3 = sigma_formula(&Family::T3Path, r, n).unwrap().value;
                assert_eq!(p2, t3 + 2);
                assert_eq!(t3 % 2, 0);
                assert_eq!(witness_bound(r, n), t3);
            }
        }
    }

    #[test]
    fn witness_examples() {
        let (g, s) = build_witness(3, 7).unwrap();
        assert_eq!(s.terms(), &[6, 1, 1, 1, 1, 1, 1]);
        assert_eq!(s.sigma(), 12);
        assert_eq!(g, SimpleGraph::star(6));

        let (_, s) = build_witness(4, 8).unwrap();
        assert_eq!(s.terms(), &[7, 7, 2, 2, 2, 2, 2, 2]);
        assert_eq!(s.sigma(), 26);

        let (g, s) = build_witness(3, 4).unwrap();
        assert_eq!(s.terms(), &[3, 1, 1, 1]);
        assert_eq!(g, SimpleGraph::star(3));
        assert!(build_witness(3, 3).is_err());
    }

    #[test]
    fn witness_degree_law() {
        for r in 3..=8 {
            for n in r + 1..=20 {
                let (_, s) = build_witness(r, n).unwrap();
                assert_eq!(s.terms().iter().filter(|&&d| d == n - 1).count(), r - 2);
                assert_eq!(s.terms().iter().filter(|&&d| d == r - 2).count(), n - r + 2);
                assert_eq!(s.sigma() + 2, tree_class_sum(r, n));
            }
        }
    }

    #[test]
    fn lower_bound_examples() {
        let rep = verify_lower_bound(&Family::T3Path, 3, 7, 1000).unwrap();
        assert!(rep.passed(), "{rep:?}");
        assert_eq!(rep.checked, 5);
        let rep = verify_lower_bound(&Family::Cycle(4), 4, 9, 1000).unwrap();
        assert!(rep.passed(), "{rep:?}");
    }

    #[test]
    fn lower_bound_reports_a_bad_family() {
        // K_4 - K_3 is a star, which the witness star does contain
        let rep = verify_lower_bound(&Family::K3, 3, 6, 1000).unwrap();
        assert!(!rep.passed());
        assert_eq!(rep.failures.len(), 1);
        assert!(rep.failures[0].input.contains("avoids-target"));
    }

    #[test]
    fn sigma_levels_are_descending() {
        let levels = sigma_levels(4).unwrap();
        assert_eq!(levels.first().unwrap().0, 12);
        assert_eq!(levels.last().unwrap(), &(0, vec![DegreeSequence::new(vec![0; 4])]));
        assert_eq!(levels.iter().map(|(_, g)| g.len()).sum::<usize>(), 11);
    }

    #[test]
    fn brute_guards() {
        let cfg = BruteConfig::default();
        assert!(sigma_brute(&Family::P2, 3, 10, cfg).is_err());
        assert!(sigma_brute(&Family::P2, 3, 3, cfg).is_err());
        assert!(matches!(sigma_brute(&Family::Cycle(5), 3, 6, cfg), Err(Error::PatternTooSmall { .. })));
        let tiny = BruteConfig { limit: 1, max_n: 9 };
        assert!(matches!(sigma_brute(&Family::T3Star, 3, 6, tiny), Err(Error::OracleIncomplete { .. })));
    }
}
