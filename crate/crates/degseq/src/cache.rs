//! Results cache for brute-force `σ` values: one JSON file per query, named
//! `<family>_r<r>_n<n>.json`.

use std::path::{Path, PathBuf};

use degseq_core::extremal::{Provenance, SigmaQuery, SigmaResult};
use degseq_core::{DegreeSequence, Family};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Entries written by a different version are never reused.
pub const CODE_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CacheEntry {
    pub query: SigmaQuery,
    pub value: usize,
    pub threshold_met: bool,
    pub witness_below: Option<DegreeSequence>,
    pub elapsed_ms: u64,
    pub code_version: String,
}

impl CacheEntry {
    pub fn from_result(res: &SigmaResult) -> Self {
        Self {
            query: res.query.clone(),
            value: res.value,
            threshold_met: res.threshold_met,
            witness_below: res.witness_below.clone(),
            elapsed_ms: res.elapsed_ms,
            code_version: CODE_VERSION.into(),
        }
    }

    pub fn to_result(&self) -> SigmaResult {
        SigmaResult {
            query: self.query.clone(),
            value: self.value,
            threshold_met: self.threshold_met,
            witness_below: self.witness_below.clone(),
            provenance: Provenance::BruteForce,
            elapsed_ms: self.elapsed_ms,
        }
    }

    /// Same query, value, flag and witness; timing and version are ignored.
    pub fn same_outcome(&self, other: &CacheEntry) -> bool {
        self.query == other.query
            && self.value == other.value
            && self.threshold_met == other.threshold_met
            && self.witness_below == other.witness_below
    }
}

#[derive(Debug, Clone)]
pub struct ResultsCache {
    dir: PathBuf,
}

impl ResultsCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Self { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn file_name(family: &Family, r: usize, n: usize) -> String {
        let label: String = family
            .label()
            .chars()
            .map(|c| if c.is_ascii_alphanumeric() || c == '.' || c == '-' { c } else { '_' })
            .collect();
        format!("{label}_r{r}_n{n}.json")
    }

    pub fn path_for(&self, query: &SigmaQuery) -> PathBuf {
        self.dir.join(Self::file_name(&query.family, query.r, query.n))
    }

    /// The stored entry for `query`, whatever version wrote it.
    pub fn load(&self, query: &SigmaQuery) -> Result<Option<CacheEntry>> {
        let path = self.path_for(query);
        let text = match std::fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(Error::io(path, e)),
        };
        let entry: CacheEntry = serde_json::from_str(&text).map_err(|source| Error::Json { path, source })?;
        Ok((entry.query == *query).then_some(entry))
    }

    /// The stored entry for `query` if the current version wrote it.
    pub fn lookup(&self, query: &SigmaQuery) -> Result<Option<SigmaResult>> {
        Ok(self.load(query)?.filter(|e| e.code_version == CODE_VERSION).map(|e| e.to_result()))
    }

    pub fn store(&self, res: &SigmaResult) -> Result<PathBuf> {
        std::fs::create_dir_all(&self.dir).map_err(|e| Error::io(&self.dir, e))?;
        let path = self.path_for(&res.query);
        let mut text = serde_json::to_string_pretty(&CacheEntry::from_result(res))
            .map_err(|source| Error::Json { path: path.clone(), source })?;
        text.push('\n');
        std::fs::write(&path, text).map_err(|e| Error::io(&path, e))?;
        Ok(path)
    }
}
