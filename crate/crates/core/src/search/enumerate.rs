//! Isomorph-free generation of small graphs under a degree bound.
//!
//! Level `k + 1` comes from level `k` by adding one vertex joined to a set
//! of existing vertices that still have spare degree, then keeping one
//! canonical code per class. Every connected graph has a vertex whose
//! removal leaves it connected, and the degree and clique bounds survive
//! vertex deletion, so the levels are complete.

use std::collections::HashSet;

use crate::canon::{canonical_form, decode, MAX_CANON_VERTICES};
use crate::error::SearchError;
use crate::graph::Graph;
use crate::math::binomial;
use crate::search::par;

pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumSpec {
    pub n: usize,
    /// Maximum degree; `None` for no bound.
    pub max_degree: Option<usize>,
    pub connected: bool,
    /// Upper bound on the clique number, pruned during generation.
    pub max_clique: Option<usize>,
    /// Cap on the total number of augmentations tried.
    pub budget: u64,
    /// 0 picks the available parallelism.
    pub workers: usize,
}

impl EnumSpec {
    pub fn new(n: usize) -> Self {
        EnumSpec {
            n,
            max_degree: None,
            connected: true,
            max_clique: None,
            budget: DEFAULT_BUDGET,
            workers: 1,
        }
    }

    pub fn max_degree(mut self, r: usize) -> Self {
        self.max_degree = Some(r);
        self
    }

    pub fn connected(mut self, connected: bool) -> Self {
        self.connected = connected;
        self
    }

    pub fn max_clique(mut self, omega: usize) -> Self {
        self.max_clique = Some(omega);
        self
    }

    pub fn budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    pub fn workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }
}

/// Canonical codes of every class on `spec.n` vertices, ascending, plus the
/// number of augmentations spent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration {
    pub n: usize,
    pub codes: Vec<u128>,
    /// Class counts for `1..=n` vertices.
    pub level_sizes: Vec<usize>,
    pub augmentations: u64,
}

impl Enumeration {
    pub fn graphs(&self) -> Vec<Graph> {
        self.codes.iter().map(|&c| Graph::from_masks(&decode(self.n, c))).collect()
    }

    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }
}

const BATCH: usize = 512;

pub fn enumerate_graphs(spec: &EnumSpec) -> Result<Enumeration, SearchError> {
    let n = spec.n;
    if n == 0 {
        return Err(SearchError::InvalidSpec("n must be at least 1".into()));
    }
    if n > MAX_CANON_VERTICES {
        return Err(SearchError::TooManyVertices {
            n,
            max: MAX_CANON_VERTICES,
        });
    }
    if spec.max_clique == Some(0) {
        return Err(SearchError::InvalidSpec("clique bound must be at least 1".into()));
    }
    let r = spec.max_degree.unwrap_or(n).min(n);
    let min_new = usize::from(spec.connected);
    let mut level: Vec<u128> = vec![0];
    let mut level_sizes = vec![1];
    let mut spent = 0u64;
    for k in 1..n {
        let cost: u64 = level
            .iter()
            .map(|&code| augmentation_count(&decode(k, code), r, min_new))
            .sum();
        spent = spent.saturating_add(cost);
        if spent > spec.budget {
            return Err(SearchError::BudgetExceeded {
                estimate: spent,
                budget: spec.budget,
            });
        }
        let mut next: HashSet<u128> = HashSet::new();
        for batch in level.chunks(BATCH * spec.workers.max(1)) {
            let chunks: Vec<&[u128]> = batch.chunks(BATCH.min(batch.len()).max(1)).collect();
            let results = par::map(&chunks, spec.workers, |chunk| {
                let mut local = Vec::new();
                for &code in chunk.iter() {
                    augment(&decode(k, code), r, min_new, spec.max_clique, &mut local);
                }
                local.sort_unstable();
                local.dedup();
                local
            });
            for codes in results {
                next.extend(codes);
            }
        }
        level = next.into_iter().collect();
        level.sort_unstable();
        level_sizes.push(level.len());
    }
    Ok(Enumeration {
        n,
        codes: level,
        level_sizes,
        augmentations: spent,
    })
}

fn spare_mask(rows: &[u64], r: usize) -> u64 {
    rows.iter()
        .enumerate()
        .filter(|(_, row)| (row.count_ones() as usize) < r)
        .fold(0, |acc, (v, _)| acc | 1 << v)
}

fn augmentation_count(rows: &[u64], r: usize, min_new: usize) -> u64 {
    let spare = spare_mask(rows, r).count_ones() as i64;
    (min_new..=r).map(|s| binomial(spare, s as i64)).sum()
}

fn augment(rows: &[u64], r: usize, min_new: usize, max_clique: Option<usize>, out: &mut Vec<u128>) {
    let k = rows.len();
    let spare = spare_mask(rows, r);
    let candidates: Vec<usize> = (0..k).filter(|&v| spare >> v & 1 == 1).collect();
    let mut extended = rows.to_vec();
    extended.push(0);
    let mut visit = |attach: u64| {
        if let Some(bound) = max_clique {
            if has_clique(rows, attach, bound) {
                return;
            }
        }
        let mut g = extended.clone();
        g[k] = attach;
        let mut a = attach;
        while a != 0 {
            let v = a.trailing_zeros() as usize;
            a &= a - 1;
            g[v] |= 1 << k;
        }
        out.push(canonical_form(&g).code);
    };
    subsets(&candidates, 0, 0, 0, min_new, r, &mut visit);
}

fn subsets(items: &[usize], start: usize, mask: u64, size: usize, min: usize, max: usize, f: &mut impl FnMut(u64)) {
    if size >= min {
        f(mask);
    }
    if size == max {
        return;
    }
    for i in start..items.len() {
        subsets(items, i + 1, mask | 1 << items[i], size + 1, min, max, f);
    }
}

/// Whether the vertices in `within` contain a clique of `size` vertices.
pub(crate) fn has_clique(rows: &[u64], within: u64, size: usize) -> bool {
    if size == 0 {
        return true;
    }
    if (within.count_ones() as usize) < size {
        return false;
    }
    let mut rest = within;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if has_clique(rows, rest & rows[v], size - 1) {
            return true;
        }
    }
    false
}

/// Deduplicates an external stream to canonical codes on `n` vertices,
/// keeping graphs that satisfy the degree and connectivity filters.
pub fn ingest_stream(
    graphs: &[Graph],
    n: usize,
    max_degree: Option<usize>,
    connected: bool,
) -> Result<Enumeration, SearchError> {
    if n > MAX_CANON_VERTICES {
        return Err(SearchError::TooManyVertices {
            n,
            max: MAX_CANON_VERTICES,
        });
    }
    let mut codes: Vec<u128> = graphs
        .iter()
        .filter(|g| g.n() == n)
        .filter(|g| max_degree.is_none_or(|r| g.max_degree() <= r))
        .filter(|g| !connected || g.is_connected())
        .map(|g| canonical_form(&g.to_masks()).code)
        .collect();
    codes.sort_unstable();
    codes.dedup();
    Ok(Enumeration {
        n,
        level_sizes: vec![codes.len()],
        codes,
        augmentations: graphs.len() as u64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn published_counts() {
        let connected = [1, 1, 2, 6, 21, 112, 853];
        let all = [1, 2, 4, 11, 34, 156, 1044];
        let c = enumerate_graphs(&EnumSpec::new(7)).unwrap();
        assert_eq!(c.level_sizes, connected);
        let a = enumerate_graphs(&EnumSpec::new(7).connected(false)).unwrap();
        assert_eq!(a.level_sizes, all);
    }

    #[test]
    fn worker_count_does_not_change_output() {
        let base = enumerate_graphs(&EnumSpec::new(7).max_degree(4)).unwrap();
        for w in [2, 3] {
            assert_eq!(enumerate_graphs(&EnumSpec::new(7).max_degree(4).workers(w)).unwrap(), base);
        }
    }

    #[test]
    fn degree_and_clique_filters() {
        let e = enumerate_graphs(&EnumSpec::new(6).max_degree(2)).unwrap();
        // connected graphs with maximum degree 2 on 6 vertices: P6 and C6
        assert_eq!(e.len(), 2);
        let tri_free = enumerate_graphs(&EnumSpec::new(5).max_clique(2)).unwrap();
        assert!(tri_free.graphs().iter().all(|g| crate::cliques::clique_number(g) <= 2));
        // connected triangle-free graphs on 5 vertices
        assert_eq!(tri_free.len(), 6);
    }

    #[test]
    fn budget_refusal() {
        let err = enumerate_graphs(&EnumSpec::new(7).budget(100)).unwrap_err();
        assert!(matches!(err, SearchError::BudgetExceeded { budget: 100, .. }));
        assert!(enumerate_graphs(&EnumSpec::new(17)).is_err());
    }

    #[test]
    fn stream_ingestion_dedups() {
        let g = crate::generators::cir_star(6, 4);
        let h = g.relabel(&[6, 5, 4, 3, 2, 1]);
        let e = ingest_stream(&[g, h, Graph::new(6)], 6, Some(4), true).unwrap();
        assert_eq!(e.len(), 1);
    }
}
