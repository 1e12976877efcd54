//! Degree sequences, the Erdős–Gallai test and laying off a term.
//!
//! Sequences are kept canonically non-increasing. Positions in the public API
//! are 1-based (`d(1)` is the largest term), matching the usual `d_1 ≥ … ≥ d_n`
//! notation; vertex labels in [`crate::graph`] are 0-based.

use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::{Error, Result};

/// A non-increasing sequence of nonnegative integers with its cached sum.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(
    feature = "serde",
    derive(serde::Serialize, serde::Deserialize),
    serde(into = "Vec<usize>", from = "Vec<usize>")
)]
pub struct DegreeSequence {
    terms: Vec<usize>,
    sigma: usize,
}

impl DegreeSequence {
    /// Builds a sequence from terms in any order; the terms are sorted
    /// non-increasing.
    pub fn new(terms: impl Into<Vec<usize>>) -> Self {
        let mut terms = terms.into();
        terms.sort_unstable_by(|a, b| b.cmp(a));
        Self::from_sorted_unchecked(terms)
    }

    /// Like [`DegreeSequence::new`] but also returns the sorting permutation:
    /// canonical position `i` (0-based) holds the input term at `perm[i]`.
    /// Ties keep their input order.
    pub fn with_positions(terms: &[usize]) -> (Self, Vec<usize>) {
        let mut perm: Vec<usize> = (0..terms.len()).collect();
        perm.sort_by(|&a, &b| terms[b].cmp(&terms[a]));
        let sorted = perm.iter().map(|&i| terms[i]).collect();
        (Self::from_sorted_unchecked(sorted), perm)
    }

    pub(crate) fn from_sorted_unchecked(terms: Vec<usize>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0] >= w[1]));
        let sigma = terms.iter().sum();
        Self { terms, sigma }
    }

    pub fn terms(&self) -> &[usize] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of all terms.
    pub fn sigma(&self) -> usize {
        self.sigma
    }

    /// The `i`-th largest term, 1-based.
    ///
    /// # Panics
    ///
    /// Panics when `i` is 0 or greater than the length.
    pub fn d(&self, i: usize) -> usize {
        assert!(i >= 1 && i <= self.terms.len(), "position {i} out of range");
        self.terms[i - 1]
    }

    pub fn max_term(&self) -> usize {
        self.terms.first().copied().unwrap_or(0)
    }

    pub fn is_all_zero(&self) -> bool {
        self.max_term() == 0
    }

    /// Rejects sequences with a term that no simple graph on `n` vertices
    /// could carry.
    pub fn validate(&self) -> Result<()> {
        let n = self.len();
        match self.terms.first() {
            Some(&term) if term >= n => Err(Error::TermTooLarge { position: 1, term, len: n }),
            _ => Ok(()),
        }
    }

    pub fn is_graphic(&self) -> Result<bool> {
        is_graphic_eg(self)
    }

    pub fn layoff(&self, k: usize) -> Result<LayoffResult> {
        layoff(self, k)
    }

    /// Returns `Err(NotGraphic)` unless the sequence is graphic.
    pub fn require_graphic(&self) -> Result<()> {
        if is_graphic_eg(self)? {
            Ok(())
        } else {
            Err(Error::NotGraphic(self.to_string()))
        }
    }
}

impl From<Vec<usize>> for DegreeSequence {
    fn from(terms: Vec<usize>) -> Self {
        Self::new(terms)
    }
}

impl From<DegreeSequence> for Vec<usize> {
    fn from(seq: DegreeSequence) -> Self {
        seq.terms
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl FromStr for DegreeSequence {
    type Err = Error;

    /// Parses comma-separated integers in any order, e.g. `"2,3,2,3,2"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty sequence".into()));
        }
        let terms = s
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                tok.parse::<usize>().map_err(|_| Error::Parse(alloc::format!("bad term `{tok}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(terms))
    }
}

/// Outcome of laying off the term at position `k`.
///
/// All positions are 1-based positions in the original sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayoffResult {
    /// The residual sequence, length `n - 1`.
    pub reduced: DegreeSequence,
    pub k: usize,
    pub removed_degree: usize,
    /// Original positions whose terms were reduced by one, ascending.
    pub decremented_positions: Vec<usize>,
    /// `origin[i]` is the original position of the term now at position `i + 1`
    /// of `reduced`. Ties are ordered by original position.
    pub origin: Vec<usize>,
}

/// Lays off `d_k`: when `d_k ≥ k` the terms at positions `1..k-1` and
/// `k+1..d_k+1` lose one, otherwise the terms at `1..d_k` do. The remaining
/// `n - 1` terms are then re-sorted.
pub fn layoff(seq: &DegreeSequence, k: usize) -> Result<LayoffResult> {
    let n = seq.len();
    if k == 0 || k > n {
        return Err(Error::IndexOutOfRange { index: k, len: n });
    }
    let dk = seq.d(k);
    if n == 1 && dk > 0 {
        return Err(Error::SingleTermLayoff);
    }
    if dk >= n {
        return Err(Error::TermTooLarge { position: k, term: dk, len: n });
    }
    let decremented_positions: Vec<usize> =
        if dk >= k { (1..k).chain(k + 1..=dk + 1).collect() } else { (1..=dk).collect() };
    let mut hit = alloc::vec![false; n + 1];
    for &p in &decremented_positions {
        hit[p] = true;
    }

    let mut entries = Vec::with_capacity(n - 1);
    for pos in (1..=n).filter(|&p| p != k) {
        let d = seq.d(pos);
        let v = if hit[pos] { d.checked_sub(1).ok_or(Error::NegativeResidual { k, position: pos })? } else { d };
        entries.push((v, pos));
    }
    // stable: equal values stay in original position order
    entries.sort_by_key(|e| core::cmp::Reverse(e.0));
    let (terms, origin): (Vec<_>, Vec<_>) = entries.into_iter().unzip();

    Ok(LayoffResult {
        reduced: DegreeSequence::from_sorted_unchecked(terms),
        k,
        removed_degree: dk,
        decremented_positions,
        origin,
    })
}

/// Erdős–Gallai: an even-sum sequence is graphic iff for every `t` in
/// `1..n-1`, `Σ_{i≤t} d_i ≤ t(t-1) + Σ_{j>t} min(t, d_j)`.
///
/// Odd sums answer `false`; a term `≥ n` is a validation error.
pub fn is_graphic_eg(seq: &DegreeSequence) -> Result<bool> {
    seq.validate()?;
    if seq.sigma() % 2 == 1 {
        return Ok(false);
    }
    Ok(eg_holds(seq.terms()))
}

fn eg_holds(d: &[usize]) -> bool {
    let n = d.len();
    let mut lhs = 0;
    for t in 1..n {
        lhs += d[t - 1];
        let rhs: usize = t * (t - 1) + d[t..].iter().map(|&x| x.min(t)).sum::<usize>();
        if lhs > rhs {
            return false;
        }
    }
    true
}

/// Decides graphicality by repeatedly laying off the largest term.
pub fn is_graphic_layoff(seq: &DegreeSequence) -> Result<bool> {
    seq.validate()?;
    let mut current = seq.clone();
    loop {
        if current.is_all_zero() {
            return Ok(true);
        }
        match layoff(&current, 1) {
            Ok(res) => current = res.reduced,
            Err(Error::NegativeResidual { .. }) | Err(Error::TermTooLarge { .. }) => return Ok(false),
            Err(e) => return Err(e),
        }
    }
}

/// Iterator over the graphic sequences of a fixed length whose sum lies in a
/// range, in descending lexicographic order.
///
/// Built by backtracking over non-increasing prefixes, pruned by the sum
/// window and by the Erdős–Gallai inequality with every later term bounded
/// by the current one.
#[derive(Debug, Clone)]
pub struct GraphicSequences {
    n: usize,
    min_sigma: usize,
    max_sigma: usize,
    first: Option<usize>,
    vals: Vec<usize>,
    sum: usize,
    started: bool,
    done: bool,
}

/// Every graphic sequence of length `n` with even sum in `[min_sigma, max_sigma]`.
pub fn enumerate_graphic_sequences(n: usize, min_sigma: usize, max_sigma: usize) -> Result<GraphicSequences> {
    GraphicSequences::new(n, min_sigma, max_sigma, None)
}

impl GraphicSequences {
    /// `first`, when set, restricts the walk to sequences with `d_1 = first`;
    /// the partitions over `first ∈ 0..n` are disjoint and cover the full walk.
    pub fn new(n: usize, min_sigma: usize, max_sigma: usize, first: Option<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("n must be at least 1".into()));
        }
        if min_sigma > max_sigma || max_sigma > n * (n - 1) {
            return Err(Error::InvalidParameter(alloc::format!(
                "need 0 <= min_sigma <= max_sigma <= {}, got [{min_sigma}, {max_sigma}]",
                n * (n - 1)
            )));
        }
        if let Some(f) = first {
            if f >= n {
                return Err(Error::InvalidParameter(alloc::format!("first term {f} >= n = {n}")));
            }
        }
        Ok(Self { n, min_sigma, max_sigma, first, vals: Vec::with_capacity(n), sum: 0, started: false, done: false })
    }

    /// Pushes the largest feasible value `≤ hi` at the next position.
    fn place(&mut self, hi: usize) -> bool {
        let pos = self.vals.len();
        let t = pos + 1;
        let rest = self.n - t;
        let mut v = hi;
        loop {
            // later terms are ≤ v, so this bound is monotone in v
            if self.sum + v + rest * v < self.min_sigma {
                return false;
            }
            let s = self.sum + v;
            if s <= self.max_sigma && s <= t * (t - 1) + rest * v.min(t) {
                self.vals.push(v);
                self.sum = s;
                return true;
            }
            if v == 0 {
                return false;
            }
            v -= 1;
        }
    }

    fn backtrack(&mut self) -> bool {
        while let Some(v) = self.vals.pop() {
            self.sum -= v;
            if self.vals.is_empty() && self.first.is_some() {
                return false;
            }
            if v > 0 && self.place(v - 1) {
                return true;
            }
        }
        false
    }

    fn descend(&mut self) -> bool {
        while self.vals.len() < self.n {
            let hi = self.vals.last().copied().unwrap_or(self.first.unwrap_or(self.n - 1));
            if self.vals.is_empty() && self.first.is_some() {
                if !self.place_exact(hi) {
                    return false;
                }
                continue;
            }
            if !self.place(hi) && !self.backtrack() {
                return false;
            }
        }
        true
    }

    fn place_exact(&mut self, v: usize) -> bool {
        if self.place(v) {
            if self.vals[0] == v {
                return true;
            }
            self.sum -= self.vals.pop().unwrap_or(0);
        }
        false
    }
}

impl Iterator for GraphicSequences {
    type Item = DegreeSequence;

    fn next(&mut self) -> Option<DegreeSequence> {
        if self.done {
            return None;
        }
        loop {
            let ok = if self.started {
                self.backtrack() && self.descend()
            } else {
                self.started = true;
                self.descend()
            };
            if !ok {
                self.done = true;
                return None;
            }
            if self.sum % 2 == 0 && self.sum >= self.min_sigma && eg_holds(&self.vals) {
                return Some(DegreeSequence::from_sorted_unchecked(self.vals.clone()));
            }
        }
    }
}

/// Every non-increasing sequence of length `n` with terms in `0..n`, graphic
/// or not, in descending lexicographic order.
pub fn all_bounded_sequences(n: usize) -> impl Iterator<Item = DegreeSequence> {
    let mut cur: Option<Vec<usize>> = if n == 0 { None } else { Some(alloc::vec![n - 1; n]) };
    core::iter::from_fn(move || {
        let out = cur.clone()?;
        // next smaller non-increasing sequence: decrement the rightmost
        // positive term, fill the tail with the new value
        let mut next = out.clone();
        cur = match next.iter().rposition(|&x| x > 0) {
            Some(i) => {
                let v = next[i] - 1;
                for x in &mut next[i..] {
                    *x = v;
                }
                Some(next)
            }
            None => None,
        };
        Some(DegreeSequence::from_sorted_unchecked(out))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn seq(terms: &[usize]) -> DegreeSequence {
        DegreeSequence::new(terms.to_vec())
    }

    /// Brute force: try every edge subset of K_n.
    fn brute_realizable(terms: &[usize]) -> bool {
        let n = terms.len();
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let mut want = terms.to_vec();
        want.sort_unstable_by(|a, b| b.cmp(a));
        (0u64..1 << pairs.len()).any(|mask| {
            let mut deg = vec![0; n];
            for (i, &(u, v)) in pairs.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    deg[u] += 1;
                    deg[v] += 1;
                }
            }
            deg.sort_unstable_by(|a, b| b.cmp(a));
            deg == want
        })
    }

    #[test]
    fn eg_examples() {
        assert_eq!(is_graphic_eg(&seq(&[1, 1])), Ok(true));
        assert_eq!(is_graphic_eg(&seq(&[1, 1, 1])), Ok(false));
        assert!(brute_realizable(&[3, 3, 2, 2, 2]));
        assert_eq!(is_graphic_eg(&seq(&[3, 3, 2, 2, 2])), Ok(true));
    }

    #[test]
    fn eg_rejects_oversized_term() {
        assert!(matches!(is_graphic_eg(&seq(&[9, 1])), Err(Error::TermTooLarge { term: 9, .. })));
        assert!(matches!(is_graphic_layoff(&seq(&[2, 1])), Err(Error::TermTooLarge { .. })));
    }

    #[test]
    fn layoff_examples() {
        let r = layoff(&seq(&[3, 3, 2, 2, 2]), 1).unwrap();
        assert_eq!(r.reduced.terms(), &[2, 2, 1, 1]);
        assert_eq!(r.decremented_positions, vec![2, 3, 4]);
        assert_eq!(r.removed_degree, 3);

        let r = layoff(&seq(&[0, 0, 0]), 2).unwrap();
        assert_eq!(r.reduced.terms(), &[0, 0]);
        assert!(r.decremented_positions.is_empty());

        let r = layoff(&seq(&[2, 2, 1, 1]), 4).unwrap();
        assert_eq!(r.reduced.terms(), &[2, 1, 1]);
        assert_eq!(r.decremented_positions, vec![1]);
    }

    #[test]
    fn layoff_tracks_origins() {
        let r = layoff(&seq(&[3, 3, 2, 2, 2]), 1).unwrap();
        // reduced values (2@2, 1@3, 1@4, 2@5) sorted stably by value
        assert_eq!(r.origin, vec![2, 5, 3, 4]);
    }

    #[test]
    fn layoff_errors() {
        assert_eq!(layoff(&seq(&[1, 1]), 3), Err(Error::IndexOutOfRange { index: 3, len: 2 }));
        assert!(matches!(layoff(&seq(&[1, 1]), 0), Err(Error::IndexOutOfRange { .. })));
        assert_eq!(layoff(&seq(&[1]), 1), Err(Error::SingleTermLayoff));
        assert!(layoff(&seq(&[0]), 1).unwrap().reduced.is_empty());
        assert!(matches!(layoff(&seq(&[2, 2, 0]), 1), Err(Error::NegativeResidual { k: 1, position: 3 })));
    }

    #[test]
    fn layoff_graphic_examples() {
        assert_eq!(is_graphic_layoff(&seq(&[2, 2, 2])), Ok(true));
        assert_eq!(is_graphic_layoff(&seq(&[3, 1, 1, 1])), Ok(true));
        assert!(!brute_realizable(&[3, 3, 1, 1]));
        assert_eq!(is_graphic_layoff(&seq(&[3, 3, 1, 1])), Ok(false));
        assert_eq!(is_graphic_layoff(&seq(&[1, 1, 1])), Ok(false));
    }

    #[test]
    fn eg_and_layoff_agree_with_brute_force() {
        for n in 1..=6 {
            for s in all_bounded_sequences(n) {
                let brute = brute_realizable(s.terms());
                assert_eq!(is_graphic_eg(&s), Ok(brute), "{s}");
                assert_eq!(is_graphic_layoff(&s), Ok(brute), "{s}");
            }
        }
    }

    #[test]
    fn enumerate_examples() {
        let got: Vec<_> = enumerate_graphic_sequences(3, 0, 6).unwrap().collect();
        assert_eq!(got, vec![seq(&[2, 2, 2]), seq(&[2, 1, 1]), seq(&[1, 1, 0]), seq(&[0, 0, 0])]);
        let got: Vec<_> = enumerate_graphic_sequences(2, 0, 2).unwrap().collect();
        assert_eq!(got, vec![seq(&[1, 1]), seq(&[0, 0])]);
        let got: Vec<_> = enumerate_graphic_sequences(1, 0, 0).unwrap().collect();
        assert_eq!(got, vec![seq(&[0])]);
    }

    #[test]
    fn enumerate_matches_filtered_bounded_sequences() {
        for n in 1..=7 {
            let max = n * (n - 1);
            for (lo, hi) in [(0, max), (max / 3, max / 2), (max, max)] {
                let want: Vec<_> = all_bounded_sequences(n)
                    .filter(|s| s.sigma() >= lo && s.sigma() <= hi)
                    .filter(|s| is_graphic_eg(s).unwrap())
                    .collect();
                let got: Vec<_> = enumerate_graphic_sequences(n, lo, hi).unwrap().collect();
                assert_eq!(got, want, "n={n} [{lo},{hi}]");
            }
        }
    }

    #[test]
    fn first_term_partitions_cover_the_walk() {
        let n = 7;
        let all: Vec<_> = enumerate_graphic_sequences(n, 0, n * (n - 1)).unwrap().collect();
        let parts: Vec<_> =
            (0..n).rev().flat_map(|f| GraphicSequences::new(n, 0, n * (n - 1), Some(f)).unwrap()).collect();
        assert_eq!(all, parts);
    }

    #[test]
    fn enumerate_rejects_bad_parameters() {
        assert!(enumerate_graphic_sequences(0, 0, 0).is_err());
        assert!(enumerate_graphic_sequences(3, 4, 2).is_err());
        assert!(enumerate_graphic_sequences(3, 0, 7).is_err());
        assert!(GraphicSequences::new(3, 0, 6, Some(3)).is_err());
    }

    #[test]
    fn parse_and_display() {
        let s: DegreeSequence = "2, 3,2,3 ,2".parse().unwrap();
        assert_eq!(s.terms(), &[3, 3, 2, 2, 2]);
        assert_eq!(s.sigma(), 12);
        assert_eq!(s.to_string(), "3,3,2,2,2");
        assert!("".parse::<DegreeSequence>().is_err());
        assert!("1,-1".parse::<DegreeSequence>().is_err());
        assert!("1,,1".parse::<DegreeSequence>().is_err());
    }

    #[test]
    fn with_positions_records_permutation() {
        let (s, perm) = DegreeSequence::with_positions(&[1, 3, 2, 3]);
        assert_eq!(s.terms(), &[3, 3, 2, 1]);
        assert_eq!(perm, vec![1, 3, 2, 0]);
    }

    #[test]
    fn bounded_sequence_count() {
        // C(2n-1, n) non-increasing sequences with terms in 0..n
        assert_eq!(all_bounded_sequences(8).count(), 6435);
        assert_eq!(all_bounded_sequences(1).count(), 1);
        assert_eq!(all_bounded_sequences(0).count(), 0);
    }
}
