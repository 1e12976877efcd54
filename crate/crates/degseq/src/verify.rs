//! Desk-scale verification suites. Each suite sweeps a finite family of
//! inputs, checks one property per input and returns a
//! [`VerificationReport`]; failures record the exact input so they can be
//! replayed with the matching library call.

use std::time::Instant;

use degseq_core::extremal::{
    build_witness, fails, sigma_formula, tree_class_sum, verify_lower_bound, witness_bound, BruteConfig,
};
use degseq_core::graph::realization_exists_backtracking;
use degseq_core::potential::{
    check_missing_edge_placement, check_placement_property, is_potentially, is_potentially_a, Condition,
};
use degseq_core::report::SuiteParameters;
use degseq_core::sequence::{
    all_bounded_sequences, enumerate_graphic_sequences, is_graphic_eg, is_graphic_layoff, layoff,
};
use degseq_core::{Answer, DegreeSequence, Failure, Family, TargetPattern, VerificationReport};
use rayon::prelude::*;

use crate::cache::{CacheEntry, ResultsCache};
use crate::parallel::sigma_brute_parallel;
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, clap::ValueEnum)]
pub enum Suite {
    /// Three graphicality tests agree on every bounded sequence.
    Graphic,
    /// Laying off any term preserves graphicality in both directions.
    Layoff,
    /// Potentially K_{r+1}-H implies a realization with the target on the top degrees.
    Placement,
    /// Potentially K_{r+1}-e implies the missing edge can sit at v_r v_{r+1}.
    MissingEdgePlacement,
    CliqueStaircase,
    CliqueTail,
    NearCliqueStaircase,
    NearCliqueTail,
    MinusPathStaircase,
    MinusPathTail,
    /// All six sufficient conditions.
    Sufficiency,
    /// The witness graph certifies the lower bound.
    LowerBound,
    /// Closed-form identities over a wide range of r and n.
    Identities,
    /// Brute-force σ against the lower bound and the frozen cache.
    Oracle,
    /// Every suite above.
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Self::Graphic => "graphic",
            Self::Layoff => "layoff",
            Self::Placement => "placement",
            Self::MissingEdgePlacement => "missing-edge-placement",
            Self::CliqueStaircase => "clique-staircase",
            Self::CliqueTail => "clique-tail",
            Self::NearCliqueStaircase => "near-clique-staircase",
            Self::NearCliqueTail => "near-clique-tail",
            Self::MinusPathStaircase => "minus-path-staircase",
            Self::MinusPathTail => "minus-path-tail",
            Self::Sufficiency => "sufficiency",
            Self::LowerBound => "lower-bound",
            Self::Identities => "identities",
            Self::Oracle => "oracle",
            Self::All => "all",
        }
    }

    fn condition(self) -> Option<Condition> {
        Condition::from_name(self.name())
    }

    /// The suites `all` expands to.
    pub const EACH: [Suite; 8] = [
        Self::Graphic,
        Self::Layoff,
        Self::Placement,
        Self::MissingEdgePlacement,
        Self::Sufficiency,
        Self::LowerBound,
        Self::Identities,
        Self::Oracle,
    ];
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    /// Largest sequence length; each suite has its own default.
    pub max_n: Option<usize>,
    pub r: Option<usize>,
    pub families: Option<Vec<Family>>,
    pub limit: usize,
    /// Frozen brute-force results for the oracle suite; missing entries are written.
    pub cache: Option<ResultsCache>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self { max_n: None, r: None, families: None, limit: degseq_core::DEFAULT_REALIZATION_LIMIT, cache: None }
    }
}

/// Runs `suite` on the current rayon pool. `all` yields one report per suite.
pub fn run(suite: Suite, opts: &VerifyOptions) -> Result<Vec<VerificationReport>> {
    if suite == Suite::All {
        let mut out = Vec::new();
        for s in Suite::EACH {
            out.extend(run(s, opts)?);
        }
        return Ok(out);
    }
    let start = Instant::now();
    log::info!("suite {}: start", suite.name());
    let mut rep = match suite {
        Suite::Graphic => graphic(opts.max_n.unwrap_or(8)),
        Suite::Layoff => layoff_suite(opts.max_n.unwrap_or(8)),
        Suite::Placement => placement(opts),
        Suite::MissingEdgePlacement => missing_edge(opts),
        Suite::Sufficiency => sufficiency(opts),
        Suite::LowerBound => lower_bound(opts),
        Suite::Identities => Ok(identities(opts.max_n.unwrap_or(100))),
        Suite::Oracle => oracle(opts),
        Suite::All => unreachable!(),
        s => condition_suite(s.condition().expect("condition suite"), opts),
    }?;
    rep.elapsed_ms = start.elapsed().as_millis() as u64;
    log::info!(
        "suite {}: {} checks, {} failures, {:?} in {} ms",
        rep.suite,
        rep.checked,
        rep.failures.len(),
        rep.status,
        rep.elapsed_ms
    );
    Ok(vec![rep])
}

fn params(r: Vec<usize>, n_min: usize, n_max: usize, families: Vec<String>) -> SuiteParameters {
    SuiteParameters { r, n_min, n_max, families }
}

fn blank() -> VerificationReport {
    VerificationReport::new(String::new(), SuiteParameters::default())
}

/// Checks every item in parallel and merges the per-item reports in input
/// order.
fn sweep<T: Sync>(
    rep: &mut VerificationReport,
    label: &str,
    items: &[T],
    check: impl Fn(&T, &mut VerificationReport) -> degseq_core::Result<()> + Sync,
) -> Result<()> {
    let parts: Vec<degseq_core::Result<VerificationReport>> = items
        .par_iter()
        .map(|item| {
            let mut part = blank();
            check(item, &mut part)?;
            Ok(part)
        })
        .collect();
    let before = rep.checked;
    for part in parts {
        rep.merge(part?);
    }
    log::info!("{}: {label}: {} checks", rep.suite, rep.checked - before);
    Ok(())
}

/// A truncated search marks the report incomplete instead of failing it.
fn or_incomplete<T>(part: &mut VerificationReport, res: degseq_core::Result<T>) -> degseq_core::Result<Option<T>> {
    match res {
        Ok(v) => Ok(Some(v)),
        Err(degseq_core::Error::OracleIncomplete { .. }) => {
            part.mark_incomplete();
            Ok(None)
        }
        Err(e) => Err(e),
    }
}

fn graphic_sequences(n: usize) -> degseq_core::Result<Vec<DegreeSequence>> {
    Ok(enumerate_graphic_sequences(n, 0, n * n.saturating_sub(1))?.collect())
}

fn graphic(max_n: usize) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new("graphic", params(vec![], 1, max_n, vec![]));
    for n in 1..=max_n {
        let items: Vec<DegreeSequence> = all_bounded_sequences(n).collect();
        sweep(&mut rep, &format!("n={n}"), &items, |s, part| {
            let eg = is_graphic_eg(s)?;
            let lay = is_graphic_layoff(s)?;
            let bt = realization_exists_backtracking(s)?;
            part.check(eg == lay && lay == bt, || {
                Failure::new(
                    format!("seq={s}"),
                    "eg = layoff = backtracking",
                    format!("eg={eg} layoff={lay} backtracking={bt}"),
                )
            });
            Ok(())
        })?;
    }
    Ok(rep)
}

fn layoff_suite(max_n: usize) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new("layoff", params(vec![], 2, max_n, vec![]));
    for n in 2..=max_n {
        let items: Vec<DegreeSequence> = all_bounded_sequences(n).collect();
        sweep(&mut rep, &format!("n={n}"), &items, |s, part| {
            let before = is_graphic_eg(s)?;
            for k in 1..=n {
                let after = match layoff(s, k) {
                    Ok(res) => match is_graphic_eg(&res.reduced) {
                        Err(degseq_core::Error::TermTooLarge { .. }) => false,
                        other => other?,
                    },
                    Err(degseq_core::Error::NegativeResidual { .. }) => false,
                    Err(e) => return Err(e),
                };
                part.check(before == after, || {
                    Failure::new(format!("seq={s} k={k}"), format!("reduced graphic = {before}"), format!("{after}"))
                });
            }
            Ok(())
        })?;
    }
    Ok(rep)
}

fn r_or(opts: &VerifyOptions, default: usize) -> usize {
    opts.r.unwrap_or(default)
}

fn labels(families: &[Family]) -> Vec<String> {
    families.iter().map(Family::label).collect()
}

fn placement(opts: &VerifyOptions) -> Result<VerificationReport> {
    let r = r_or(opts, 3);
    let max_n = opts.max_n.unwrap_or(7);
    let families = opts.families.clone().unwrap_or_else(|| vec![Family::P2, Family::T3Path, Family::T3Star]);
    let patterns: Vec<TargetPattern> =
        families.iter().map(|f| TargetPattern::build(r + 1, f.clone())).collect::<degseq_core::Result<_>>()?;
    let mut rep = VerificationReport::new("placement", params(vec![r], r + 1, max_n, labels(&families)));
    for n in r + 1..=max_n {
        let items = graphic_sequences(n)?;
        sweep(&mut rep, &format!("n={n}"), &items, |s, part| {
            for p in &patterns {
                match check_placement_property(s, p, opts.limit) {
                    Err(degseq_core::Error::Precondition(_)) => {}
                    res => {
                        if let Some(ok) = or_incomplete(part, res)? {
                            part.check(ok, || {
                                Failure::new(
                                    format!("seq={s} pattern={p}"),
                                    "target on the top degrees in some realization",
                                    "no such realization",
                                )
                            });
                        }
                    }
                }
            }
            Ok(())
        })?;
    }
    Ok(rep)
}

fn missing_edge(opts: &VerifyOptions) -> Result<VerificationReport> {
    let r = r_or(opts, 3);
    let max_n = opts.max_n.unwrap_or(7);
    let mut rep = VerificationReport::new("missing-edge-placement", params(vec![r], r + 1, max_n, vec!["P1".into()]));
    for n in r + 1..=max_n {
        let items = graphic_sequences(n)?;
        sweep(&mut rep, &format!("n={n}"), &items, |s, part| {
            match check_missing_edge_placement(s, r, opts.limit) {
                Err(degseq_core::Error::Precondition(_)) => {}
                res => {
                    if let Some(ok) = or_incomplete(part, res)? {
                        part.check(ok, || {
                            Failure::new(
                                format!("seq={s} r={r}"),
                                "K_{r+1}-e on v_1..v_{r+1} missing v_r v_{r+1}",
                                "no such realization",
                            )
                        });
                    }
                }
            }
            Ok(())
        })?;
    }
    Ok(rep)
}

fn condition_suite(cond: Condition, opts: &VerifyOptions) -> Result<VerificationReport> {
    let r = r_or(opts, 3);
    let max_n = opts.max_n.unwrap_or(10);
    let n_min = cond.min_len(r);
    let mut rep = VerificationReport::new(cond.name(), params(vec![r], n_min, max_n, vec![]));
    let pattern = match cond {
        Condition::CliqueStaircase | Condition::CliqueTail => None,
        Condition::NearCliqueStaircase | Condition::NearCliqueTail => {
            Some(TargetPattern::build(r + 1, Family::Path(1))?)
        }
        Condition::MinusPathStaircase | Condition::MinusPathTail => Some(TargetPattern::build(r + 1, Family::P2)?),
    };
    let promised = match &pattern {
        None => format!("top K_{}", r + 1),
        Some(p) => format!("potentially {p}"),
    };
    for n in n_min..=max_n {
        let items = graphic_sequences(n)?;
        sweep(&mut rep, &format!("n={n}"), &items, |s, part| {
            if !cond.holds(s, r)? {
                return Ok(());
            }
            let decision = match &pattern {
                None => is_potentially_a(s, r, opts.limit)?,
                Some(p) => is_potentially(s, p, opts.limit)?,
            };
            match decision.answer {
                Answer::Yes => part.check(true, || unreachable!()),
                Answer::No => part.fail(Failure::new(
                    format!("seq={s} r={r} condition={cond}"),
                    promised.clone(),
                    format!("no such realization among {} explored", decision.stats.explored),
                )),
                Answer::Unknown => part.mark_incomplete(),
            }
            Ok(())
        })?;
    }
    Ok(rep)
}

fn sufficiency(opts: &VerifyOptions) -> Result<VerificationReport> {
    let r = r_or(opts, 3);
    let mut rep = VerificationReport::new("sufficiency", params(vec![r], r + 1, opts.max_n.unwrap_or(10), vec![]));
    for cond in Condition::ALL {
        let mut part = condition_suite(cond, opts)?;
        for f in &mut part.failures {
            f.input = format!("{} {}", cond.name(), f.input);
        }
        rep.merge(part);
    }
    Ok(rep)
}

fn lower_bound(opts: &VerifyOptions) -> Result<VerificationReport> {
    let rs = opts.r.map_or(vec![3, 4], |r| vec![r]);
    let max_n = opts.max_n.unwrap_or(9);
    let families_for = |r: usize| -> Vec<Family> {
        match &opts.families {
            Some(f) => f.iter().filter(|f| f.order() <= r + 1).cloned().collect(),
            None if r >= 4 => vec![Family::T3Path, Family::T3Star, Family::Cycle(4), Family::Cycle(5), Family::path(3)],
            None => vec![Family::T3Path, Family::T3Star, Family::Cycle(4)],
        }
    };
    let all_families: Vec<String> = {
        let mut v: Vec<String> = rs.iter().flat_map(|&r| labels(&families_for(r))).collect();
        v.dedup();
        v
    };
    let n_min = rs.iter().min().map_or(4, |r| r + 1);
    let mut rep = VerificationReport::new("lower-bound", params(rs.clone(), n_min, max_n, all_families));
    for &r in &rs {
        let items: Vec<(Family, usize)> =
            families_for(r).into_iter().flat_map(|f| (r + 1..=max_n).map(move |n| (f.clone(), n))).collect();
        sweep(&mut rep, &format!("r={r}"), &items, |(f, n), part| {
            part.merge(verify_lower_bound(f, r, *n, opts.limit)?);
            Ok(())
        })?;
    }
    Ok(rep)
}

fn identities(max_n: usize) -> VerificationReport {
    let mut rep = VerificationReport::new(
        "identities",
        params((3..=10).collect(), 4, max_n, vec!["P2".into(), "T3path".into(), "T3star".into()]),
    );
    for r in 3..=10 {
        for n in r + 1..=max_n {
            let tag = |what: &str| format!("r={r} n={n} check={what}");
            rep.check(witness_bound(r, n) == tree_class_sum(r, n), || {
                Failure::new(tag("witness-sum"), tree_class_sum(r, n).to_string(), witness_bound(r, n).to_string())
            });
            let p2 = sigma_formula(&Family::P2, r, n).map(|s| s.value);
            for tree in [Family::T3Path, Family::T3Star] {
                let t = sigma_formula(&tree, r, n).map(|s| s.value);
                let ok = matches!((&p2, &t), (Ok(a), Ok(b)) if *a == b + 2 && a % 2 == 0 && b % 2 == 0);
                rep.check(ok, || {
                    Failure::new(tag(&format!("P2-minus-{tree}")), "2, both even", format!("{p2:?} vs {t:?}"))
                });
            }
        }
    }
    rep
}

fn oracle(opts: &VerifyOptions) -> Result<VerificationReport> {
    let r = r_or(opts, 3);
    let max_n = opts.max_n.unwrap_or(7);
    let n_min = 5.max(r + 1);
    let families = opts.families.clone().unwrap_or_else(|| vec![Family::T3Path, Family::T3Star]);
    let mut rep = VerificationReport::new("oracle", params(vec![r], n_min, max_n, labels(&families)));
    let config = BruteConfig { limit: opts.limit, ..BruteConfig::default() };
    for family in &families {
        let pattern = TargetPattern::build(r + 1, family.clone())?;
        for n in n_min..=max_n {
            let tag = |what: &str| format!("family={family} r={r} n={n} check={what}");
            let res = match sigma_brute_parallel(family, r, n, config) {
                Err(crate::Error::Core(degseq_core::Error::OracleIncomplete { .. })) => {
                    rep.mark_incomplete();
                    continue;
                }
                other => other?,
            };
            let bound = tree_class_sum(r, n);
            rep.check(res.value % 2 == 0, || Failure::new(tag("even"), "even", res.value.to_string()));
            rep.check(res.value >= bound, || {
                Failure::new(tag("lower-bound"), format!(">= {bound}"), res.value.to_string())
            });

            let (_, template_witness) = build_witness(r, n)?;
            let role = match &res.witness_below {
                Some(w) => {
                    is_graphic_eg(w)?
                        && w.sigma() + 2 == res.value
                        && w.sigma() >= template_witness.sigma()
                        && fails(&pattern, w, opts.limit)?
                }
                None => false,
            };
            rep.check(role, || {
                Failure::new(
                    tag("witness-role"),
                    format!(
                        "graphic, sum {}, >= {}, not potentially {pattern}",
                        res.value.saturating_sub(2),
                        template_witness.sigma()
                    ),
                    format!("{:?}", res.witness_below.as_ref().map(|w| w.to_string())),
                )
            });

            if let Some(cache) = &opts.cache {
                let fresh = CacheEntry::from_result(&res);
                match cache.load(&res.query)? {
                    Some(frozen) => rep.check(frozen.same_outcome(&fresh), || {
                        Failure::new(
                            tag("frozen"),
                            format!(
                                "value={} witness={:?}",
                                frozen.value,
                                frozen.witness_below.as_ref().map(|w| w.to_string())
                            ),
                            format!(
                                "value={} witness={:?}",
                                fresh.value,
                                fresh.witness_below.as_ref().map(|w| w.to_string())
                            ),
                        )
                    }),
                    None => {
                        let path = cache.store(&res)?;
                        log::info!("froze {}", path.display());
                    }
                }
            }
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(max_n: usize) -> VerifyOptions {
        VerifyOptions { max_n: Some(max_n), ..VerifyOptions::default() }
    }

    #[test]
    fn small_suites_pass() {
        for (suite, n) in [
            (Suite::Graphic, 6),
            (Suite::Layoff, 6),
            (Suite::Placement, 6),
            (Suite::MissingEdgePlacement, 6),
            (Suite::Sufficiency, 7),
            (Suite::LowerBound, 6),
            (Suite::Identities, 30),
        ] {
            let reps = run(suite, &small(n)).unwrap();
            assert_eq!(reps.len(), 1);
            assert!(reps[0].passed(), "{:?}", reps[0]);
            assert!(reps[0].checked > 0, "{}", suite.name());
        }
    }

    #[test]
    fn all_expands_to_every_suite() {
        let names: Vec<&str> = Suite::EACH.iter().map(|s| s.name()).collect();
        assert_eq!(
            names,
            [
                "graphic",
                "layoff",
                "placement",
                "missing-edge-placement",
                "sufficiency",
                "lower-bound",
                "identities",
                "oracle"
            ]
        );
    }

    #[test]
    fn condition_names_line_up() {
        for cond in Condition::ALL {
            let suite = <Suite as clap::ValueEnum>::from_str(cond.name(), false).unwrap();
            assert_eq!(suite.condition(), Some(cond));
        }
    }

    #[test]
    fn frozen_mismatch_is_reported() {
        let dir = tempfile::tempdir().unwrap();
        let cache = ResultsCache::new(dir.path());
        let opts = VerifyOptions {
            max_n: Some(5),
            families: Some(vec![Family::T3Path]),
            cache: Some(cache.clone()),
            ..VerifyOptions::default()
        };
        let first = run(Suite::Oracle, &opts).unwrap().remove(0);
        assert!(first.passed(), "{first:?}");
        let path = dir.path().join("T3path_r3_n5.json");
        let text = std::fs::read_to_string(&path).unwrap();
        let mut entry: CacheEntry = serde_json::from_str(&text).unwrap();
        entry.value += 2;
        std::fs::write(&path, serde_json::to_string(&entry).unwrap()).unwrap();
        let second = run(Suite::Oracle, &opts).unwrap().remove(0);
        assert!(!second.passed());
        assert!(second.failures[0].input.contains("check=frozen"));
    }
}
