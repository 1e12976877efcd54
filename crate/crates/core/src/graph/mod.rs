//! Small labeled simple graphs backed by one `u64` adjacency row per vertex.

use alloc::vec::Vec;
use core::fmt;

use smallvec::SmallVec;

use crate::sequence::DegreeSequence;
use crate::{Error, Result};

mod realize;
mod subgraph;

pub use realize::{
    all_realizations, backtrack_realizations, realization_exists_backtracking, realize, walk_realizations,
    RealizationSet, WalkOutcome,
};
pub use subgraph::{contains_subgraph, find_embedding, find_embedding_with, find_top_embedding};

/// Largest vertex count a [`SimpleGraph`] can hold.
pub const MAX_VERTICES: usize = 64;

/// Packed upper triangle of an adjacency matrix, row-major.
pub type EdgeKey = SmallVec<[u64; 2]>;

/// A simple undirected graph on the vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<u64>,
}

impl SimpleGraph {
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { got: n, max: MAX_VERTICES });
        }
        Ok(Self { n, adj: alloc::vec![0; n] })
    }

    /// Edgeless graph on `n` vertices.
    ///
    /// # Panics
    ///
    /// Panics if `n > MAX_VERTICES`.
    pub fn empty(n: usize) -> Self {
        Self::new(n).expect("vertex count within MAX_VERTICES")
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            g.adj[u] = low_mask(n) & !(1 << u);
        }
        g
    }

    /// The cycle `0-1-…-(k-1)-0`; `k ≥ 3`.
    pub fn cycle(k: usize) -> Self {
        assert!(k >= 3, "a cycle needs at least 3 vertices");
        let mut g = Self::path(k);
        g.insert(0, k - 1);
        g
    }

    /// The path `0-1-…-(vertices-1)`.
    pub fn path(vertices: usize) -> Self {
        let mut g = Self::empty(vertices);
        for u in 1..vertices {
            g.insert(u - 1, u);
        }
        g
    }

    /// `K_{1,leaves}` with centre 0.
    pub fn star(leaves: usize) -> Self {
        let mut g = Self::empty(leaves + 1);
        for v in 1..=leaves {
            g.insert(0, v);
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Adds `uv`; returns whether the edge was new.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let fresh = !self.has_edge(u, v);
        self.insert(u, v);
        Ok(fresh)
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        if u >= self.n || v >= self.n || !self.has_edge(u, v) {
            return false;
        }
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
        true
    }

    pub(crate) fn insert(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Neighbourhood of `v` as a bit mask.
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Degrees by vertex label.
    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence::new(self.degrees())
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            let mut row = self.adj[u] & !low_mask(u + 1);
            core::iter::from_fn(move || {
                if row == 0 {
                    return None;
                }
                let v = row.trailing_zeros() as usize;
                row &= row - 1;
                Some((u, v))
            })
        })
    }

    pub fn complement(&self) -> Self {
        let full = low_mask(self.n);
        let adj = self.adj.iter().enumerate().map(|(u, &row)| !row & full & !(1 << u)).collect();
        Self { n: self.n, adj }
    }

    /// `G + H`: the disjoint union with every cross edge added. Vertices of
    /// `h` are shifted by `g.n()`.
    pub fn join(g: &Self, h: &Self) -> Result<Self> {
        let mut out = Self::disjoint_union(g, h)?;
        for u in 0..g.n {
            for v in 0..h.n {
                out.insert(u, g.n + v);
            }
        }
        Ok(out)
    }

    pub fn disjoint_union(g: &Self, h: &Self) -> Result<Self> {
        let mut out = Self::new(g.n + h.n)?;
        for (u, v) in g.edges() {
            out.insert(u, v);
        }
        for (u, v) in h.edges() {
            out.insert(g.n + u, g.n + v);
        }
        Ok(out)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n);
        let mut out = Self::empty(self.n);
        for (u, v) in self.edges() {
            out.insert(perm[u], perm[v]);
        }
        out
    }

    /// Packed upper triangle; equal keys on equal `n` mean identical edge sets.
    pub fn edge_key(&self) -> EdgeKey {
        let mut key = EdgeKey::new();
        let mut word = 0u64;
        let mut bit = 0;
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.adj[u] >> v & 1 == 1 {
                    word |= 1 << bit;
                }
                bit += 1;
                if bit == 64 {
                    key.push(word);
                    word = 0;
                    bit = 0;
                }
            }
        }
        if bit > 0 {
            key.push(word);
        }
        key
    }

    pub fn canonical_form(&self, mode: CanonicalMode) -> CanonicalForm {
        let certificate = match mode {
            CanonicalMode::Labeled => self.edge_key(),
            CanonicalMode::Unlabeled => self.min_relabeled_key(),
        };
        CanonicalForm { mode, n: self.n, certificate }
    }

    /// Smallest edge key over all relabelings that list vertices by
    /// non-increasing degree. Isomorphisms preserve degrees, so the set of
    /// such relabelings is an isomorphism invariant.
    fn min_relabeled_key(&self) -> EdgeKey {
        let degrees = self.degrees();
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by(|&a, &b| degrees[b].cmp(&degrees[a]).then(a.cmp(&b)));
        let slot_degree: Vec<usize> = order.iter().map(|&v| degrees[v]).collect();

        let mut best: Option<EdgeKey> = None;
        let mut assigned = alloc::vec![usize::MAX; self.n];
        let mut used = 0u64;
        self.relabel_search(&degrees, &slot_degree, 0, &mut assigned, &mut used, &mut best);
        best.unwrap_or_default()
    }

    fn relabel_search(
        &self,
        degrees: &[usize],
        slot_degree: &[usize],
        slot: usize,
        assigned: &mut [usize],
        used: &mut u64,
        best: &mut Option<EdgeKey>,
    ) {
        if slot == self.n {
            // assigned[slot] = vertex; permuted wants perm[vertex] = slot
            let mut perm = alloc::vec![0; self.n];
            for (s, &v) in assigned.iter().enumerate() {
                perm[v] = s;
            }
            let key = self.permuted(&perm).edge_key();
            if best.as_ref().map_or(true, |b| key < *b) {
                *best = Some(key);
            }
            return;
        }
        for v in 0..self.n {
            if *used >> v & 1 == 0 && degrees[v] == slot_degree[slot] {
                *used |= 1 << v;
                assigned[slot] = v;
                self.relabel_search(degrees, slot_degree, slot + 1, assigned, used, best);
                *used &= !(1 << v);
            }
        }
    }
}

pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimpleGraph(n={}, {{", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("})")
    }
}

/// Whether a [`CanonicalForm`] identifies labeled graphs or isomorphism
/// classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum CanonicalMode {
    Labeled,
    Unlabeled,
}

/// Total-order key for a graph. In labeled mode equal certificates mean equal
/// edge sets; in unlabeled mode they mean isomorphic graphs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub mode: CanonicalMode,
    pub n: usize,
    pub certificate: EdgeKey,
}

#[cfg(feature = "serde")]
mod serde_impl {
    use super::SimpleGraph;
    use alloc::vec::Vec;

    #[derive(serde::Serialize, serde::Deserialize)]
    struct Repr {
        n: usize,
        edges: Vec<[usize; 2]>,
    }

    impl serde::Serialize for SimpleGraph {
        fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            Repr { n: self.n, edges: self.edges().map(|(u, v)| [u, v]).collect() }.serialize(s)
        }
    }

    impl<'de> serde::Deserialize<'de> for SimpleGraph {
        fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
            let repr = Repr::deserialize(d)?;
            let edges: Vec<(usize, usize)> = repr.edges.iter().map(|e| (e[0], e[1])).collect();
            SimpleGraph::from_edges(repr.n, &edges).map_err(serde::de::Error::custom)
        }
    }
}
