//! Canonical labeling of small graphs by partition refinement and
//! individualization, with automorphism pruning.
//!
//! Works on 0-based adjacency masks. The canonical code packs the upper
//! triangle of the relabeled adjacency matrix (pair `i < j` at bit
//! `j(j-1)/2 + i`, the graph6 column order) into a `u128`, so at most 16
//! vertices are supported. Two graphs are isomorphic iff their codes match.

use crate::error::SearchError;
use crate::graph::Graph;
use crate::graph6::emit_graph6;

pub const MAX_CANON_VERTICES: usize = 16;

/// Result of canonical labeling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Canonical {
    pub code: u128,
    /// `order[p]` is the original (0-based) vertex placed at position `p`.
    pub order: Vec<u8>,
}

/// Bit index of the pair `{i, j}` (`i < j`) in a canonical code.
#[inline]
pub fn pair_bit(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

/// Adjacency masks of the graph described by `code` on `n` vertices.
pub fn decode(n: usize, code: u128) -> Vec<u64> {
    let mut rows = vec![0u64; n];
    for j in 1..n {
        for i in 0..j {
            if code >> pair_bit(i, j) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
        }
    }
    rows
}

/// Code of the graph given by `rows` under the identity labeling.
pub fn encode(rows: &[u64]) -> u128 {
    let n = rows.len();
    let mut code = 0u128;
    for j in 1..n {
        let mut r = rows[j] & ((1u64 << j) - 1);
        while r != 0 {
            let i = r.trailing_zeros() as usize;
            r &= r - 1;
            code |= 1u128 << pair_bit(i, j);
        }
    }
    code
}

pub fn canonical_form(rows: &[u64]) -> Canonical {
    let n = rows.len();
    assert!(n <= MAX_CANON_VERTICES, "canonical_form supports at most 16 vertices");
    if n <= 1 {
        return Canonical {
            code: 0,
            order: (0..n as u8).collect(),
        };
    }
    let mut cells = vec![(1u64 << n) - 1];
    refine(rows, &mut cells);
    let mut search = Search {
        rows,
        n,
        first: None,
        best: None,
        autos: Vec::new(),
    };
    search.descend(cells, &mut Vec::with_capacity(n));
    let (code, order) = search.best.expect("search reaches at least one leaf");
    Canonical { code, order }
}

/// Canonical code of a labeled graph.
pub fn canonical_code(g: &Graph) -> Result<u128, SearchError> {
    check_size(g.n())?;
    Ok(canonical_form(&g.to_masks()).code)
}

/// The canonically relabeled copy of `g`.
pub fn canonical_graph(g: &Graph) -> Result<Graph, SearchError> {
    check_size(g.n())?;
    Ok(Graph::from_masks(&decode(g.n(), canonical_form(&g.to_masks()).code)))
}

/// graph6 string of the canonical relabeling; equal strings mean
/// isomorphic graphs.
pub fn canonical_graph6(g: &Graph) -> Result<String, SearchError> {
    Ok(emit_graph6(&canonical_graph(g)?)?)
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool, SearchError> {
    Ok(a.n() == b.n() && a.edge_count() == b.edge_count() && canonical_code(a)? == canonical_code(b)?)
}

fn check_size(n: usize) -> Result<(), SearchError> {
    if n > MAX_CANON_VERTICES {
        Err(SearchError::TooManyVertices {
            n,
            max: MAX_CANON_VERTICES,
        })
    } else {
        Ok(())
    }
}

/// Refines an ordered partition to the coarsest equitable one below it.
/// Cells split by neighbour count into the splitter, ascending; the result
/// depends only on the graph structure and the incoming cell order.
fn refine(rows: &[u64], cells: &mut Vec<u64>) {
    let mut s = 0;
    let mut next: Vec<u64> = Vec::with_capacity(rows.len());
    while s < cells.len() {
        let splitter = cells[s];
        let mut split = false;
        next.clear();
        for &cell in cells.iter() {
            if cell & (cell - 1) == 0 {
                next.push(cell);
                continue;
            }
            let mut groups = [0u64; MAX_CANON_VERTICES + 1];
            let mut used = 0u32;
            let mut c = cell;
            while c != 0 {
                let v = c.trailing_zeros() as usize;
                c &= c - 1;
                let k = (rows[v] & splitter).count_ones() as usize;
                groups[k] |= 1 << v;
                used |= 1 << k;
            }
            if used & (used - 1) != 0 {
                split = true;
            }
            while used != 0 {
                let k = used.trailing_zeros() as usize;
                used &= used - 1;
                next.push(groups[k]);
            }
        }
        if split {
            std::mem::swap(cells, &mut next);
            s = 0;
        } else {
            s += 1;
        }
    }
}

struct Search<'a> {
    rows: &'a [u64],
    n: usize,
    first: Option<(u128, Vec<u8>)>,
    best: Option<(u128, Vec<u8>)>,
    /// Automorphisms as image arrays, `auto[v]` = image of `v`.
    autos: Vec<[u8; MAX_CANON_VERTICES]>,
}

const MAX_STORED_AUTOS: usize = 64;

impl Search<'_> {
    fn descend(&mut self, cells: Vec<u64>, prefix: &mut Vec<u8>) {
        if cells.len() == self.n {
            self.leaf(&cells);
            return;
        }
        let target = cells
            .iter()
            .position(|c| c & (c - 1) != 0)
            .expect("non-discrete partition has a non-singleton cell");
        let cell = cells[target];
        let mut tried = 0u64;
        let mut c = cell;
        while c != 0 {
            let v = c.trailing_zeros() as usize;
            c &= c - 1;
            if tried != 0 && self.equivalent_to_tried(prefix, v, tried) {
                continue;
            }
            tried |= 1 << v;
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(1 << v);
            child.push(cell & !(1 << v));
            child.extend_from_slice(&cells[target + 1..]);
            refine(self.rows, &mut child);
            prefix.push(v as u8);
            self.descend(child, prefix);
            prefix.pop();
        }
    }

    /// Whether `v` shares an orbit with an explored sibling under the group
    /// generated by known automorphisms that fix `prefix` pointwise.
    fn equivalent_to_tried(&self, prefix: &[u8], v: usize, tried: u64) -> bool {
        let mut parent: [u8; MAX_CANON_VERTICES] = std::array::from_fn(|i| i as u8);
        fn find(p: &mut [u8; MAX_CANON_VERTICES], mut x: usize) -> usize {
            while p[x] as usize != x {
                p[x] = p[p[x] as usize];
                x = p[x] as usize;
            }
            x
        }
        let mut any = false;
        for a in &self.autos {
            if prefix.iter().all(|&u| a[u as usize] == u) {
                any = true;
                for x in 0..self.n {
                    let (rx, ry) = (find(&mut parent, x), find(&mut parent, a[x] as usize));
                    if rx != ry {
                        parent[rx] = ry as u8;
                    }
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        let mut t = tried;
        while t != 0 {
            let u = t.trailing_zeros() as usize;
            t &= t - 1;
            if find(&mut parent, u) == rv {
                return true;
            }
        }
        false
    }

    fn leaf(&mut self, cells: &[u64]) {
        let order: Vec<u8> = cells.iter().map(|c| c.trailing_zeros() as u8).collect();
        let mut code = 0u128;
        for j in 1..self.n {
            let rj = self.rows[order[j] as usize];
            for i in 0..j {
                if rj >> order[i] & 1 == 1 {
                    code |= 1u128 << pair_bit(i, j);
                }
            }
        }
        let Some((first_code, first_order)) = &self.first else {
            self.first = Some((code, order.clone()));
            self.best = Some((code, order));
            return;
        };
        let first_code = *first_code;
        if code == first_code {
            let auto = self.automorphism(first_order, &order);
            self.push_auto(auto);
        }
        let (best_code, best_order) = self.best.as_ref().expect("best set with first");
        let best_code = *best_code;
        if code == best_code && best_code != first_code {
            let auto = self.automorphism(best_order, &order);
            self.push_auto(auto);
        } else if code > best_code {
            self.best = Some((code, order));
        }
    }

    fn automorphism(&self, from: &[u8], to: &[u8]) -> [u8; MAX_CANON_VERTICES] {
        let mut a = [0u8; MAX_CANON_VERTICES];
        for p in 0..self.n {
            a[from[p] as usize] = to[p];
        }
        a
    }

    fn push_auto(&mut self, a: [u8; MAX_CANON_VERTICES]) {
        if self.autos.len() < MAX_STORED_AUTOS && (0..self.n).any(|v| a[v] as usize != v) {
            self.autos.push(a);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{circulant, cir_star};

    fn permuted(g: &Graph, seed: u64) -> Graph {
        let n = g.n();
        let mut perm: Vec<usize> = (1..=n).collect();
        let mut s = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let j = (s >> 33) as usize % (i + 1);
            perm.swap(i, j);
        }
        g.relabel(&perm)
    }

    #[test]
    fn code_round_trip() {
        let g = cir_star(9, 4);
        let rows = g.to_masks();
        assert_eq!(decode(9, encode(&rows)), rows);
    }

    #[test]
    fn invariant_under_relabeling() {
        let graphs = [
            cir_star(10, 4),
            circulant(10, &[1, 3]).unwrap(),
            Graph::new(8),
            Graph::complete(7),
            Graph::from_edges(6, [(1, 2), (3, 4), (5, 6)]).unwrap(),
        ];
        for g in &graphs {
            let c = canonical_code(g).unwrap();
            for seed in 0..20 {
                assert_eq!(canonical_code(&permuted(g, seed)).unwrap(), c);
            }
        }
    }

    #[test]
    fn separates_cospectral_like_pairs() {
        // C6 versus two triangles: both 2-regular on six vertices.
        let c6 = circulant(6, &[1]).unwrap();
        let two = Graph::from_edges(6, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)]).unwrap();
        assert!(!are_isomorphic(&c6, &two).unwrap());
        assert!(are_isomorphic(&c6, &permuted(&c6, 3)).unwrap());
    }

    #[test]
    fn canonical_graph_is_isomorphic_copy() {
        let g = cir_star(7, 4);
        let c = canonical_graph(&g).unwrap();
        assert_eq!(c.edge_count(), g.edge_count());
        assert_eq!(canonical_code(&c).unwrap(), canonical_code(&g).unwrap());
        assert!(canonical_code(&Graph::new(17)).is_err());
    }
}
