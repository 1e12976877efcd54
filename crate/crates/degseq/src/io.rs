//! Text formats: comma-separated sequences, edge lists and pattern strings.
//!
//! An edge list has one `u v` pair of 0-based vertices per line. `#` starts a
//! comment, blank lines are skipped, and an optional `n=<count>` line fixes
//! the vertex count; without it the count is one more than the largest label.

use std::fmt::Write as _;
use std::path::Path;

use degseq_core::pattern::{parse_pattern_text, Family, FamilySpec};
use degseq_core::{DegreeSequence, SimpleGraph, TargetPattern};

use crate::{Error, Result};

/// Parses `"3,3,2,2,2"` (any order) and rejects terms `≥ n`.
pub fn parse_sequence(text: &str) -> Result<DegreeSequence> {
    let seq: DegreeSequence = text.parse()?;
    seq.validate()?;
    Ok(seq)
}

/// Line number and message of the first problem in an edge list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeListError {
    pub line: usize,
    pub msg: String,
}

pub fn parse_edge_list(text: &str) -> Result<SimpleGraph, EdgeListError> {
    let mut declared: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize, usize)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let err = |msg: String| EdgeListError { line: line_no, msg };
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(count) = line.strip_prefix("n=") {
            if declared.is_some() {
                return Err(err("second n= header".into()));
            }
            let n = count.trim().parse().map_err(|_| err(format!("bad vertex count `{}`", count.trim())))?;
            declared = Some((n, line_no));
            continue;
        }
        let mut parts = line.split_whitespace();
        let mut vertex = || -> Result<usize, EdgeListError> {
            let tok = parts.next().ok_or_else(|| err("expected two vertices".into()))?;
            tok.parse().map_err(|_| err(format!("bad vertex `{tok}`")))
        };
        let (u, v) = (vertex()?, vertex()?);
        if parts.next().is_some() {
            return Err(err("expected two vertices".into()));
        }
        edges.push((u, v, line_no));
    }
    let n = match declared {
        Some((n, _)) => n,
        None => edges.iter().map(|&(u, v, _)| u.max(v) + 1).max().unwrap_or(0),
    };
    let mut g =
        SimpleGraph::new(n).map_err(|e| EdgeListError { line: declared.map_or(1, |d| d.1), msg: e.to_string() })?;
    for (u, v, line) in edges {
        match g.add_edge(u, v) {
            Ok(true) => {}
            Ok(false) => return Err(EdgeListError { line, msg: format!("duplicate edge {u} {v}") }),
            Err(e) => return Err(EdgeListError { line, msg: e.to_string() }),
        }
    }
    Ok(g)
}

pub fn format_edge_list(g: &SimpleGraph) -> String {
    let mut out = format!("n={}\n", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn read_edge_list(path: &Path) -> Result<SimpleGraph> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_edge_list(&text).map_err(|e| Error::EdgeList { path: path.into(), line: e.line, msg: e.msg })
}

pub fn write_edge_list(path: &Path, g: &SimpleGraph) -> Result<()> {
    std::fs::write(path, format_edge_list(g)).map_err(|e| Error::io(path, e))
}

/// Resolves `"K:<m>-<family>"`; a `file:<path>` family is read as an edge
/// list and becomes a custom `H` on as many vertices as the file declares.
pub fn resolve_pattern(text: &str) -> Result<TargetPattern> {
    let (m, spec) = parse_pattern_text(text)?;
    let family = match spec {
        FamilySpec::Named(f) => f,
        FamilySpec::File(path) => Family::Custom(read_edge_list(Path::new(&path))?),
    };
    Ok(TargetPattern::build(m, family)?)
}

/// Comma-separated family names, e.g. `"T3path,T3star,C4"`.
pub fn parse_families(text: &str) -> Result<Vec<Family>> {
    text.split(',').map(|s| Ok(s.trim().parse()?)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_round_trip() {
        let g = SimpleGraph::from_edges(5, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        let text = format_edge_list(&g);
        assert_eq!(text, "n=5\n0 1\n1 2\n3 4\n");
        assert_eq!(parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn comments_and_implicit_count() {
        let g = parse_edge_list("# a path\n\n0 1  # first\n1 2\n").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(parse_edge_list("n=4\n").unwrap(), SimpleGraph::empty(4));
        assert_eq!(parse_edge_list("").unwrap().n(), 0);
    }

    #[test]
    fn edge_list_errors_carry_line_numbers() {
        assert_eq!(parse_edge_list("0 1\n1 1\n").unwrap_err().line, 2);
        assert_eq!(parse_edge_list("0 1\n1 0\n").unwrap_err().line, 2);
        assert_eq!(parse_edge_list("n=3\n0 3\n").unwrap_err().line, 2);
        assert_eq!(parse_edge_list("0 x\n").unwrap_err().line, 1);
        assert_eq!(parse_edge_list("0 1 2\n").unwrap_err().line, 1);
        assert_eq!(parse_edge_list("n=2\nn=3\n").unwrap_err().line, 2);
    }

    #[test]
    fn sequences_validate_terms() {
        assert_eq!(parse_sequence("2,3,2,3,2").unwrap().terms(), &[3, 3, 2, 2, 2]);
        assert!(matches!(parse_sequence("9,1"), Err(Error::Core(degseq_core::Error::TermTooLarge { .. }))));
        assert!(parse_sequence("3,a").is_err());
    }

    #[test]
    fn named_patterns() {
        let p = resolve_pattern("K:4-P2").unwrap();
        assert_eq!(p.graph.edge_count(), 4);
        assert_eq!(resolve_pattern("K:6-C4").unwrap().graph.edge_count(), 11);
        assert!(resolve_pattern("K:2-T3path").is_err());
        assert_eq!(parse_families("T3path, C4").unwrap(), vec![Family::T3Path, Family::Cycle(4)]);
    }
}
