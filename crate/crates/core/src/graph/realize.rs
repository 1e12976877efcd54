//! Building realizations and walking the realization space.
//!
//! Realizations are labeled: vertex `i` always carries degree `d_{i+1}`, so
//! two realizations are equal exactly when their edge sets are.

use alloc::string::ToString;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use hashbrown::HashSet;

use super::{EdgeKey, SimpleGraph};
use crate::sequence::{is_graphic_eg, layoff, DegreeSequence};
use crate::{Error, Result};

/// Constructs a realization by laying off the largest term, realizing the
/// residual sequence, and joining the removed vertex to the decremented
/// positions. Deterministic; `None` iff the sequence is not graphic.
pub fn realize(seq: &DegreeSequence) -> Result<Option<SimpleGraph>> {
    if !is_graphic_eg(seq)? {
        return Ok(None);
    }
    SimpleGraph::new(seq.len())?;
    Ok(Some(build(seq)))
}

fn build(seq: &DegreeSequence) -> SimpleGraph {
    let n = seq.len();
    let mut g = SimpleGraph::empty(n);
    if seq.is_all_zero() {
        return g;
    }
    let res = layoff(seq, 1).expect("graphic sequences lay off cleanly");
    let sub = build(&res.reduced);
    for (a, b) in sub.edges() {
        g.insert(res.origin[a] - 1, res.origin[b] - 1);
    }
    for &p in &res.decremented_positions {
        g.insert(0, p - 1);
    }
    g
}

/// How a realization walk ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WalkOutcome<T> {
    /// The visitor stopped the walk.
    Found { value: T, explored: usize },
    /// Every realization was visited.
    Exhausted { explored: usize },
    /// The limit was reached before the walk closed.
    Truncated { explored: usize },
}

impl<T> WalkOutcome<T> {
    pub fn explored(&self) -> usize {
        match *self {
            Self::Found { explored, .. } | Self::Exhausted { explored } | Self::Truncated { explored } => explored,
        }
    }

    pub fn is_truncated(&self) -> bool {
        matches!(self, Self::Truncated { .. })
    }
}

/// Depth-first walk over the closure of [`realize`]'s output under
/// 2-switches. `visit` sees every labeled realization at most once and may
/// stop the walk early. At most `limit` realizations are visited.
pub fn walk_realizations<T>(
    seq: &DegreeSequence,
    limit: usize,
    mut visit: impl FnMut(&SimpleGraph) -> ControlFlow<T>,
) -> Result<WalkOutcome<T>> {
    if limit == 0 {
        return Err(Error::InvalidParameter("realization limit must be positive".into()));
    }
    let start = realize(seq)?.ok_or_else(|| Error::NotGraphic(seq.to_string()))?;
    let mut seen: HashSet<EdgeKey> = HashSet::new();
    seen.insert(start.edge_key());
    if let ControlFlow::Break(value) = visit(&start) {
        return Ok(WalkOutcome::Found { value, explored: 1 });
    }

    let mut stack = alloc::vec![start];
    let mut edges = Vec::new();
    while let Some(g) = stack.pop() {
        edges.clear();
        edges.extend(g.edges());
        for (i, &(a, b)) in edges.iter().enumerate() {
            for &(c, d) in &edges[i + 1..] {
                if a == c || a == d || b == c || b == d {
                    continue;
                }
                // {ab, cd} -> {ad, cb} or {ac, bd}
                for (x1, y1, x2, y2) in [(a, d, c, b), (a, c, b, d)] {
                    if g.has_edge(x1, y1) || g.has_edge(x2, y2) {
                        continue;
                    }
                    let mut h = g.clone();
                    h.remove_edge(a, b);
                    h.remove_edge(c, d);
                    h.insert(x1, y1);
                    h.insert(x2, y2);
                    let key = h.edge_key();
                    if seen.contains(&key) {
                        continue;
                    }
                    if seen.len() == limit {
                        return Ok(WalkOutcome::Truncated { explored: seen.len() });
                    }
                    seen.insert(key);
                    if let ControlFlow::Break(value) = visit(&h) {
                        return Ok(WalkOutcome::Found { value, explored: seen.len() });
                    }
                    stack.push(h);
                }
            }
        }
    }
    Ok(WalkOutcome::Exhausted { explored: seen.len() })
}

/// The labeled realizations of a sequence, sorted by edge key.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizationSet {
    pub graphs: Vec<SimpleGraph>,
    /// Set when the limit stopped the walk; `graphs` is then a subset.
    pub truncated: bool,
}

/// Every labeled realization reachable by 2-switches from [`realize`], which
/// is all of them. Stops with `truncated` once `limit` graphs are collected
/// and another one exists.
pub fn all_realizations(seq: &DegreeSequence, limit: usize) -> Result<RealizationSet> {
    let mut graphs = Vec::new();
    let outcome = walk_realizations(seq, limit, |g| {
        graphs.push(g.clone());
        ControlFlow::<()>::Continue(())
    })?;
    graphs.sort_by_cached_key(|g| g.edge_key());
    Ok(RealizationSet { graphs, truncated: outcome.is_truncated() })
}

/// Enumerates labeled realizations by filling the adjacency matrix row by
/// row. Independent of laying off and of 2-switches; meant for small `n`.
pub fn backtrack_realizations(
    seq: &DegreeSequence,
    mut visit: impl FnMut(&SimpleGraph) -> ControlFlow<()>,
) -> Result<()> {
    seq.validate()?;
    let n = seq.len();
    SimpleGraph::new(n)?;
    if seq.sigma() % 2 == 1 {
        return Ok(());
    }
    let mut state = Backtrack { n, rem: seq.terms().to_vec(), g: SimpleGraph::empty(n) };
    let _ = state.row(0, &mut visit);
    Ok(())
}

pub fn realization_exists_backtracking(seq: &DegreeSequence) -> Result<bool> {
    let mut found = false;
    backtrack_realizations(seq, |_| {
        found = true;
        ControlFlow::Break(())
    })?;
    Ok(found)
}

struct Backtrack {
    n: usize,
    rem: Vec<usize>,
    g: SimpleGraph,
}

impl Backtrack {
    fn row(&mut self, u: usize, visit: &mut impl FnMut(&SimpleGraph) -> ControlFlow<()>) -> ControlFlow<()> {
        if u == self.n {
            return visit(&self.g);
        }
        let cands: Vec<usize> = (u + 1..self.n).filter(|&v| self.rem[v] > 0).collect();
        let need = self.rem[u];
        if need > cands.len() {
            return ControlFlow::Continue(());
        }
        self.rem[u] = 0;
        let mut chosen = Vec::with_capacity(need);
        let flow = self.choose(u, &cands, 0, need, &mut chosen, visit);
        self.rem[u] = need;
        flow
    }

    fn choose(
        &mut self,
        u: usize,
        cands: &[usize],
        from: usize,
        need: usize,
        chosen: &mut Vec<usize>,
        visit: &mut impl FnMut(&SimpleGraph) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if chosen.len() == need {
            if !self.tail_feasible(u) {
                return ControlFlow::Continue(());
            }
            return self.row(u + 1, visit);
        }
        let left = need - chosen.len();
        for i in from..=cands.len() - left {
            let v = cands[i];
            chosen.push(v);
            self.rem[v] -= 1;
            self.g.insert(u, v);
            let flow = self.choose(u, cands, i + 1, need, chosen, visit);
            self.g.remove_edge(u, v);
            self.rem[v] += 1;
            chosen.pop();
            flow?;
        }
        ControlFlow::Continue(())
    }

    /// Each later vertex needs enough other later vertices with spare degree.
    fn tail_feasible(&self, u: usize) -> bool {
        let live = (u + 1..self.n).filter(|&v| self.rem[v] > 0).count();
        (u + 1..self.n).all(|w| self.rem[w] == 0 || self.rem[w] < live)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::CanonicalMode;
    use alloc::vec;

    fn seq(terms: &[usize]) -> DegreeSequence {
        DegreeSequence::new(terms.to_vec())
    }

    /// Every labeled graph on `n` vertices whose label degrees match `terms`.
    fn brute_labeled(terms: &[usize]) -> Vec<EdgeKey> {
        let n = terms.len();
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let mut out = Vec::new();
        for mask in 0u64..1 << pairs.len() {
            let mut deg = vec![0; n];
            for (i, &(u, v)) in pairs.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    deg[u] += 1;
                    deg[v] += 1;
                }
            }
            if deg == terms {
                let edges: Vec<_> =
                    pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
                out.push(SimpleGraph::from_edges(n, &edges).unwrap().edge_key());
            }
        }
        out.sort();
        out
    }

    #[test]
    fn realize_examples() {
        assert_eq!(realize(&seq(&[2, 2, 2])).unwrap(), Some(SimpleGraph::complete(3)));
        assert_eq!(realize(&seq(&[1, 1, 1])).unwrap(), None);
        let g = realize(&seq(&[3, 2, 2, 1])).unwrap().unwrap();
        assert_eq!(g.degrees(), vec![3, 2, 2, 1]);
        assert!(realize(&seq(&[4, 1])).is_err());
    }

    #[test]
    fn realize_handles_empty_and_zero() {
        assert_eq!(realize(&DegreeSequence::new(vec![])).unwrap(), Some(SimpleGraph::empty(0)));
        assert_eq!(realize(&seq(&[0, 0])).unwrap(), Some(SimpleGraph::empty(2)));
    }

    #[test]
    fn all_realizations_examples() {
        assert_eq!(all_realizations(&seq(&[2, 2, 2]), 10).unwrap().graphs.len(), 1);
        assert_eq!(all_realizations(&seq(&[4, 1, 1, 1, 1]), 10).unwrap().graphs.len(), 1);
        let set = all_realizations(&seq(&[2, 2, 2, 2]), 10).unwrap();
        assert_eq!(set.graphs.len(), 3);
        assert!(!set.truncated);
    }

    #[test]
    fn all_realizations_truncates() {
        let set = all_realizations(&seq(&[2, 2, 2, 2]), 2).unwrap();
        assert_eq!(set.graphs.len(), 2);
        assert!(set.truncated);
        // exactly at the limit is not truncation
        assert!(!all_realizations(&seq(&[2, 2, 2, 2]), 3).unwrap().truncated);
        assert!(all_realizations(&seq(&[2, 2, 2, 2]), 0).is_err());
    }

    #[test]
    fn two_switch_closure_matches_brute_force() {
        for n in 1..=6 {
            for s in crate::sequence::enumerate_graphic_sequences(n, 0, n * (n - 1)).unwrap() {
                let walked: Vec<EdgeKey> =
                    all_realizations(&s, 1 << 20).unwrap().graphs.iter().map(|g| g.edge_key()).collect();
                assert_eq!(walked, brute_labeled(s.terms()), "{s}");

                let mut tracked = Vec::new();
                backtrack_realizations(&s, |g| {
                    tracked.push(g.edge_key());
                    ControlFlow::Continue(())
                })
                .unwrap();
                tracked.sort();
                assert_eq!(tracked, walked, "{s}");
            }
        }
    }

    #[test]
    fn backtracking_on_non_graphic() {
        assert_eq!(realization_exists_backtracking(&seq(&[3, 3, 1, 1])), Ok(false));
        assert_eq!(realization_exists_backtracking(&seq(&[1, 1, 1])), Ok(false));
        assert_eq!(realization_exists_backtracking(&seq(&[3, 3, 2, 2, 2])), Ok(true));
        assert!(realization_exists_backtracking(&seq(&[5, 1])).is_err());
    }

    #[test]
    fn walk_stops_early() {
        let mut calls = 0;
        let out = walk_realizations(&seq(&[2, 2, 2, 2, 2, 2]), 1000, |g| {
            calls += 1;
            if calls == 3 {
                ControlFlow::Break(g.clone())
            } else {
                ControlFlow::Continue(())
            }
        })
        .unwrap();
        assert!(matches!(out, WalkOutcome::Found { explored: 3, .. }));
        assert!(walk_realizations(&seq(&[1, 1, 1, 1, 0, 1]), 10, |_| ControlFlow::<()>::Continue(())).is_err());
    }

    #[test]
    fn unlabeled_classes_of_two_regular_six() {
        let set = all_realizations(&seq(&[2; 6]), 1000).unwrap();
        // 60 hexagons + 10 pairs of triangles
        assert_eq!(set.graphs.len(), 70);
        let mut classes: Vec<_> = set.graphs.iter().map(|g| g.canonical_form(CanonicalMode::Unlabeled)).collect();
        classes.sort();
        classes.dedup();
        assert_eq!(classes.len(), 2);
    }
}
