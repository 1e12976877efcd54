//! Target patterns `K_m - H`.
//!
//! Family names follow the usual edge-count indexing: `P<k>` is a path with
//! `k` edges (so `k + 1` vertices), `T3` a tree on four vertices, `C<k>` a
//! cycle on `k` vertices.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::graph::{contains_subgraph, SimpleGraph, MAX_VERTICES};
use crate::{Error, Result};

/// The graph `H` removed from `K_m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Family {
    /// Path with two edges.
    P2,
    /// Path on four vertices.
    T3Path,
    /// `K_{1,3}`.
    T3Star,
    /// Cycle on `k ≥ 3` vertices.
    Cycle(usize),
    K3,
    /// Path with `k ≥ 1` edges; `k = 2` is normalised to [`Family::P2`].
    Path(usize),
    /// Arbitrary `H`; its vertex count is the declared order `k`.
    Custom(SimpleGraph),
}

impl Family {
    pub fn path(edges: usize) -> Self {
        if edges == 2 {
            Self::P2
        } else {
            Self::Path(edges)
        }
    }

    /// `H` placed on the labels `0..order`.
    pub fn h_graph(&self) -> Result<SimpleGraph> {
        Ok(match self {
            Self::P2 => SimpleGraph::path(3),
            Self::T3Path => SimpleGraph::path(4),
            Self::T3Star => SimpleGraph::star(3),
            Self::K3 => SimpleGraph::complete(3),
            Self::Cycle(k) => {
                if !(3..=MAX_VERTICES).contains(k) {
                    return Err(Error::InvalidParameter(format!("cycle length {k} outside 3..=64")));
                }
                SimpleGraph::cycle(*k)
            }
            Self::Path(k) => {
                if !(1..MAX_VERTICES).contains(k) {
                    return Err(Error::InvalidParameter(format!("path length {k} outside 1..64")));
                }
                SimpleGraph::path(k + 1)
            }
            Self::Custom(h) => h.clone(),
        })
    }

    /// Number of vertices of `H`.
    pub fn order(&self) -> usize {
        match self {
            Self::P2 | Self::K3 => 3,
            Self::T3Path | Self::T3Star => 4,
            Self::Cycle(k) => *k,
            Self::Path(k) => k + 1,
            Self::Custom(h) => h.n(),
        }
    }

    /// Short name used in pattern text and cache file names.
    pub fn label(&self) -> String {
        match self {
            Self::P2 => "P2".into(),
            Self::T3Path => "T3path".into(),
            Self::T3Star => "T3star".into(),
            Self::K3 => "K3".into(),
            Self::Cycle(k) => format!("C{k}"),
            Self::Path(k) => format!("P{k}"),
            Self::Custom(h) => {
                let mut s = format!("custom{}", h.n());
                for (u, v) in h.edges() {
                    s.push_str(&format!("_{u}.{v}"));
                }
                s
            }
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Parses the named families: `P2`, `T3path`, `T3star`, `K3`, `C<k>`,
    /// `P<k>`. Custom graphs come from an edge list, not from text.
    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownFamily(s.into());
        match s {
            "P2" => return Ok(Self::P2),
            "T3path" => return Ok(Self::T3Path),
            "T3star" => return Ok(Self::T3Star),
            "K3" => return Ok(Self::K3),
            _ => {}
        }
        let (head, num) = s.split_at(s.find(|c: char| c.is_ascii_digit()).ok_or_else(unknown)?);
        let k: usize = num.parse().map_err(|_| unknown())?;
        match head {
            "C" if k >= 3 => Ok(Self::Cycle(k)),
            "P" if k >= 1 => Ok(Self::path(k)),
            _ => Err(unknown()),
        }
    }
}

/// The family part of a pattern string: a named family or an edge-list file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Named(Family),
    File(String),
}

/// Splits `"K:<m>-<family>"` into `m` and the family part; `file:<path>`
/// families are returned unresolved.
pub fn parse_pattern_text(text: &str) -> Result<(usize, FamilySpec)> {
    let bad = || Error::Parse(format!("pattern `{text}` is not of the form K:<m>-<family>"));
    let rest = text.trim().strip_prefix("K:").ok_or_else(bad)?;
    let (m, family) = rest.split_once('-').ok_or_else(bad)?;
    let m: usize = m.parse().map_err(|_| bad())?;
    let spec = match family.strip_prefix("file:") {
        Some(path) if !path.is_empty() => FamilySpec::File(path.into()),
        Some(_) => return Err(bad()),
        None => FamilySpec::Named(family.parse()?),
    };
    Ok((m, spec))
}

/// `K_m - H` with `H` placed on the lowest labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TargetPattern {
    pub m: usize,
    pub family: Family,
    /// Edges of `H`, `u < v`.
    pub h_edges: Vec<(usize, usize)>,
    /// `K_m` minus `h_edges`.
    pub graph: SimpleGraph,
}

impl TargetPattern {
    pub fn build(m: usize, family: Family) -> Result<Self> {
        let h = family.h_graph()?;
        if h.n() > m {
            return Err(Error::PatternTooSmall { needed: h.n(), m });
        }
        SimpleGraph::new(m)?;
        let mut graph = SimpleGraph::complete(m);
        let h_edges: Vec<_> = h.edges().collect();
        for &(u, v) in &h_edges {
            graph.remove_edge(u, v);
        }
        Ok(Self { m, family, h_edges, graph })
    }

    /// `K_m` itself.
    pub fn clique(m: usize) -> Result<Self> {
        Self::build(m, Family::Custom(SimpleGraph::empty(0)))
    }

    pub fn label(&self) -> String {
        format!("K:{}-{}", self.m, self.family)
    }
}

impl fmt::Display for TargetPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Whether `h` (on `k` vertices) falls in the class covered by the
/// `(r-1)(2n-r) - 2(n-r)` closed form: `4 ≤ k ≤ r + 1`, `h` contains a tree on
/// four vertices (equivalently a path on four vertices or `K_{1,3}`), and `h`
/// has no triangle.
pub fn in_tree_class(h: &SimpleGraph, k: usize, r: usize) -> bool {
    k >= 4
        && k <= r + 1
        && (contains_subgraph(h, &SimpleGraph::path(4)) || contains_subgraph(h, &SimpleGraph::star(3)))
        && !contains_subgraph(h, &SimpleGraph::complete(3))
}
