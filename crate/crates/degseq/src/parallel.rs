//! Rayon drivers. Every result is independent of the worker count: scans
//! keep input order and reports merge in input order.

use std::time::Instant;

use degseq_core::extremal::{fails, sigma_brute_by, BruteConfig, SigmaResult};
use degseq_core::{DegreeSequence, Family, TargetPattern};
use rayon::prelude::*;

use crate::Result;

/// `None` uses rayon's default of one worker per core.
pub fn pool(jobs: Option<usize>) -> Result<rayon::ThreadPool> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        builder = builder.num_threads(j.max(1));
    }
    Ok(builder.build()?)
}

/// The first sequence of `level` (in its given order) that is not
/// potentially `pattern`-graphic. A truncated decision before that point is
/// an error, exactly as in the sequential scan.
pub fn scan_level(
    pattern: &TargetPattern,
    level: &[DegreeSequence],
    limit: usize,
) -> degseq_core::Result<Option<DegreeSequence>> {
    level
        .par_iter()
        .map(|s| fails(pattern, s, limit).map(|bad| bad.then(|| s.clone())))
        .find_first(|r| !matches!(r, Ok(None)))
        .unwrap_or(Ok(None))
}

/// `σ` by exhaustion with each sum level scanned in parallel.
pub fn sigma_brute_parallel(family: &Family, r: usize, n: usize, config: BruteConfig) -> Result<SigmaResult> {
    let start = Instant::now();
    let mut res = sigma_brute_by(family, r, n, config, |pattern, level| {
        let sum = level.first().map_or(0, |s| s.sigma());
        log::debug!("{family} r={r} n={n}: scanning sum {sum} ({} sequences)", level.len());
        scan_level(pattern, level, config.limit)
    })?;
    res.elapsed_ms = start.elapsed().as_millis() as u64;
    log::info!("{family} r={r} n={n}: sigma = {} in {} ms", res.value, res.elapsed_ms);
    Ok(res)
}

#[cfg(test)]
mod tests {
    use super::*;
    use degseq_core::extremal::sigma_brute;

    #[test]
    fn parallel_matches_sequential() {
        for family in [Family::P2, Family::T3Path, Family::T3Star] {
            for n in 4..=6 {
                let seq = sigma_brute(&family, 3, n, BruteConfig::default()).unwrap();
                for jobs in [1, 3] {
                    let par = pool(Some(jobs))
                        .unwrap()
                        .install(|| sigma_brute_parallel(&family, 3, n, BruteConfig::default()))
                        .unwrap();
                    assert_eq!(par.value, seq.value);
                    assert_eq!(par.witness_below, seq.witness_below);
                }
            }
        }
    }

    #[test]
    fn truncation_is_an_error_not_a_value() {
        let config = BruteConfig { limit: 1, max_n: 9 };
        let err = sigma_brute_parallel(&Family::T3Path, 3, 6, config).unwrap_err();
        assert!(matches!(err, crate::Error::Core(degseq_core::Error::OracleIncomplete { .. })), "{err}");
    }
}
