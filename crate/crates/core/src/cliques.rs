//! Clique counting and maximal-clique listing.
//!
//! Counting walks the pivoting Bron–Kerbosch recursion tree without ever
//! materialising non-maximal cliques: every clique is represented uniquely
//! on some root-to-leaf path as the set of *held* vertices plus a subset of
//! the *pivot* vertices met along the way, so a leaf with `h` held vertices
//! and `p` pivots accounts for `C(p, j)` cliques of size `h + j`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::bitset::BitSet;
use crate::graph::Graph;
use crate::math::binomial;

/// Clique counts by size, k_t(G) for t >= 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliqueCensus {
    counts: BTreeMap<usize, u64>,
}

impl CliqueCensus {
    /// Builds a census from per-size counts; zero entries are dropped.
    pub fn from_counts(counts: impl IntoIterator<Item = (usize, u64)>) -> Self {
        CliqueCensus {
            counts: counts.into_iter().filter(|&(t, c)| t >= 1 && c > 0).collect(),
        }
    }

    /// k_t(G); zero for sizes beyond the clique number.
    pub fn count(&self, t: usize) -> u64 {
        self.counts.get(&t).copied().unwrap_or(0)
    }

    /// k(G), the number of non-empty cliques.
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Largest size with a non-zero count (the clique number when the census
    /// was not truncated).
    pub fn max_size(&self) -> usize {
        self.counts.keys().next_back().copied().unwrap_or(0)
    }

    pub fn counts(&self) -> &BTreeMap<usize, u64> {
        &self.counts
    }
}

/// Counts cliques of every size up to `max_size` (all sizes when `None`).
pub fn enumerate_cliques(g: &Graph, max_size: Option<usize>) -> CliqueCensus {
    let limit = max_size.unwrap_or(usize::MAX);
    let mut tallies = vec![0u64; g.n() + 1];
    if limit > 0 && g.n() > 0 {
        pivot_count(g, g.vertex_set(), 0, 0, limit, &mut tallies);
    }
    CliqueCensus::from_counts(tallies.into_iter().enumerate())
}

fn pivot_count(
    g: &Graph,
    cand: BitSet,
    held: usize,
    pivots: usize,
    limit: usize,
    tallies: &mut [u64],
) {
    if held > limit {
        return;
    }
    if cand.is_empty() {
        let top = pivots.min(limit - held);
        for j in 0..=top {
            let size = held + j;
            if size >= 1 {
                tallies[size] += binomial(pivots as i64, j as i64);
            }
        }
        return;
    }
    let pivot = cand
        .iter()
        .max_by_key(|&u| (g.neighbors(u).intersection_len(&cand), std::cmp::Reverse(u)))
        .expect("non-empty candidate set");
    pivot_count(g, cand.intersection(g.neighbors(pivot)), held, pivots + 1, limit, tallies);

    let mut rest = cand.clone();
    rest.remove(pivot);
    for v in cand.difference(g.neighbors(pivot)).iter() {
        if v == pivot {
            continue;
        }
        rest.remove(v);
        pivot_count(g, rest.intersection(g.neighbors(v)), held + 1, pivots, limit, tallies);
    }
}

/// All maximal cliques, sorted lexicographically. Isolated vertices appear
/// as singletons; the graph on zero vertices has none.
pub fn maximal_cliques(g: &Graph) -> Vec<BitSet> {
    let mut out = Vec::new();
    if g.n() > 0 {
        bron_kerbosch(g, BitSet::new(), g.vertex_set(), BitSet::new(), &mut out);
    }
    out.sort();
    out
}

fn bron_kerbosch(g: &Graph, clique: BitSet, mut cand: BitSet, mut excl: BitSet, out: &mut Vec<BitSet>) {
    if cand.is_empty() {
        if excl.is_empty() {
            out.push(clique);
        }
        return;
    }
    let pivot = cand
        .iter()
        .chain(excl.iter())
        .max_by_key(|&u| g.neighbors(u).intersection_len(&cand))
        .expect("non-empty candidate set");
    for v in cand.difference(g.neighbors(pivot)).iter() {
        let nv = g.neighbors(v);
        let mut next = clique.clone();
        next.insert(v);
        bron_kerbosch(g, next, cand.intersection(nv), excl.intersection(nv), out);
        cand.remove(v);
        excl.insert(v);
    }
}

/// ω(G).
pub fn clique_number(g: &Graph) -> usize {
    maximal_cliques(g).iter().map(BitSet::len).max().unwrap_or(0)
}

/// Every clique of exactly `size` vertices, sorted lexicographically.
pub fn list_cliques(g: &Graph, size: usize) -> Vec<BitSet> {
    fn extend(g: &Graph, clique: &mut Vec<usize>, cand: BitSet, size: usize, out: &mut Vec<BitSet>) {
        if clique.len() == size {
            out.push(clique.iter().copied().collect());
            return;
        }
        for v in cand.iter() {
            let next: BitSet = cand.intersection(g.neighbors(v)).iter().filter(|&u| u > v).collect();
            clique.push(v);
            extend(g, clique, next, size, out);
            clique.pop();
        }
    }
    let mut out = Vec::new();
    if size > 0 {
        extend(g, &mut Vec::new(), g.vertex_set(), size, &mut out);
    }
    out.sort();
    out
}
