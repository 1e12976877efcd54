//! Non-induced subgraph search by backtracking over bit masks.

use alloc::vec::Vec;

use super::{low_mask, SimpleGraph};

/// Whether `host` contains `pattern` as a (not necessarily induced) subgraph.
pub fn contains_subgraph(host: &SimpleGraph, pattern: &SimpleGraph) -> bool {
    find_embedding(host, pattern).is_some()
}

/// An injective map `pattern vertex -> host vertex` sending every pattern
/// edge to a host edge.
pub fn find_embedding(host: &SimpleGraph, pattern: &SimpleGraph) -> Option<Vec<usize>> {
    find_embedding_with(host, pattern, |_, _| true, |_| true)
}

/// [`find_embedding`] restricted by `allowed(pattern_vertex, host_vertex)`,
/// returning the first complete map that `accept` agrees to.
pub fn find_embedding_with(
    host: &SimpleGraph,
    pattern: &SimpleGraph,
    allowed: impl Fn(usize, usize) -> bool,
    mut accept: impl FnMut(&[usize]) -> bool,
) -> Option<Vec<usize>> {
    if pattern.n() > host.n() {
        return None;
    }
    let order = search_order(pattern);
    let mut search =
        Search { host, pattern, order: &order, map: alloc::vec![usize::MAX; pattern.n()], allowed: &allowed };
    if search.extend(0, 0, &mut accept) {
        Some(search.map)
    } else {
        None
    }
}

/// Embeds `pattern` onto vertices whose degree multiset equals the
/// `pattern.n()` largest degrees of `host`. With ties at the boundary any
/// vertex of the boundary degree qualifies.
pub fn find_top_embedding(host: &SimpleGraph, pattern: &SimpleGraph) -> Option<Vec<usize>> {
    let m = pattern.n();
    if m > host.n() {
        return None;
    }
    if m == 0 {
        return Some(Vec::new());
    }
    let degrees = host.degrees();
    let mut sorted = degrees.clone();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let boundary = sorted[m - 1];
    let forced: u64 = (0..host.n()).filter(|&v| degrees[v] > boundary).fold(0, |acc, v| acc | 1 << v);
    find_embedding_with(
        host,
        pattern,
        |_, v| degrees[v] >= boundary,
        |map| {
            let image = map.iter().fold(0u64, |acc, &v| acc | 1 << v);
            image & forced == forced
        },
    )
}

/// Highest degree first, then repeatedly the vertex with the most already
/// ordered neighbours.
fn search_order(pattern: &SimpleGraph) -> Vec<usize> {
    let m = pattern.n();
    let mut placed = 0u64;
    let mut order = Vec::with_capacity(m);
    for _ in 0..m {
        let next = (0..m)
            .filter(|&p| placed >> p & 1 == 0)
            .max_by_key(|&p| {
                let linked = (pattern.neighbors(p) & placed).count_ones();
                (linked, pattern.degree(p), core::cmp::Reverse(p))
            })
            .expect("an unplaced vertex remains");
        placed |= 1 << next;
        order.push(next);
    }
    order
}

struct Search<'a, F> {
    host: &'a SimpleGraph,
    pattern: &'a SimpleGraph,
    order: &'a [usize],
    map: Vec<usize>,
    allowed: &'a F,
}

impl<F: Fn(usize, usize) -> bool> Search<'_, F> {
    fn extend(&mut self, depth: usize, used: u64, accept: &mut impl FnMut(&[usize]) -> bool) -> bool {
        if depth == self.order.len() {
            return accept(&self.map);
        }
        let p = self.order[depth];
        let mut cand = !used & low_mask(self.host.n());
        let placed: u64 = self.order[..depth].iter().fold(0, |acc, &q| acc | 1 << q);
        let mut linked = self.pattern.neighbors(p) & placed;
        while linked != 0 {
            let q = linked.trailing_zeros() as usize;
            linked &= linked - 1;
            cand &= self.host.neighbors(self.map[q]);
        }
        let need = self.pattern.degree(p);
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            if self.host.degree(v) < need || !(self.allowed)(p, v) {
                continue;
            }
            self.map[p] = v;
            if self.extend(depth + 1, used | 1 << v, accept) {
                return true;
            }
        }
        self.map[p] = usize::MAX;
        false
    }
}
