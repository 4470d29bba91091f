//! Independent oracles: slow, definition-level reimplementations used to
//! cross-check the library.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use shellar_core::complex::SimplicialComplex;
use shellar_core::graph::Graph;
use shellar_core::search::enumerate::{enumerate_graphs, EnumSpec};

pub type Set = BTreeSet<usize>;

pub fn facets_of(c: &SimplicialComplex) -> Vec<Set> {
    c.facets().iter().map(|f| f.iter().collect()).collect()
}

/// Clique counts by size from all vertex subsets.
pub fn naive_census(g: &Graph) -> Vec<u64> {
    let n = g.n();
    let mut counts = vec![0u64; n + 1];
    for mask in 1u32..(1 << n) {
        let vs: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect();
        if vs.iter().enumerate().all(|(i, &u)| vs[i + 1..].iter().all(|&v| g.has_edge(u, v))) {
            counts[vs.len()] += 1;
        }
    }
    counts
}

/// Every face of the complex generated by `generators`, the empty face
/// included.
pub fn generated_faces(generators: &[Set]) -> HashSet<Set> {
    let mut out = HashSet::new();
    for g in generators {
        let vs: Vec<usize> = g.iter().copied().collect();
        for mask in 0u32..(1 << vs.len()) {
            out.insert((0..vs.len()).filter(|i| mask >> i & 1 == 1).map(|i| vs[i]).collect());
        }
    }
    out
}

/// The shelling condition straight from the definition: the faces common
/// to `<facet>` and `<earlier>` form a nonvoid complex whose maximal faces
/// all have `|facet| - 1` vertices.
pub fn attaches(earlier: &[Set], facet: &Set) -> bool {
    if earlier.is_empty() {
        return true;
    }
    let mine = generated_faces(std::slice::from_ref(facet));
    let theirs = generated_faces(earlier);
    let common: Vec<&Set> = mine.intersection(&theirs).collect();
    if common.is_empty() {
        return false;
    }
    common
        .iter()
        .filter(|a| !common.iter().any(|b| b.len() > a.len() && a.is_subset(b)))
        .all(|a| a.len() + 1 == facet.len())
}

/// Brute force over all facet orders (any sizes), pruning prefixes already
/// known to be dead ends.
pub fn brute_force_shellable(c: &SimplicialComplex) -> bool {
    let facets = facets_of(c);
    let mut dead: HashSet<u64> = HashSet::new();
    fn extend(facets: &[Set], used: u64, order: &mut Vec<usize>, dead: &mut HashSet<u64>) -> bool {
        if order.len() == facets.len() {
            return true;
        }
        if dead.contains(&used) {
            return false;
        }
        let earlier: Vec<Set> = order.iter().map(|&i| facets[i].clone()).collect();
        for i in 0..facets.len() {
            if used >> i & 1 == 0 && attaches(&earlier, &facets[i]) {
                order.push(i);
                if extend(facets, used | 1 << i, order, dead) {
                    return true;
                }
                order.pop();
            }
        }
        dead.insert(used);
        false
    }
    extend(&facets, 0, &mut Vec::new(), &mut dead)
}

/// Every valid shelling order, up to `limit` of them.
pub fn all_shelling_orders(c: &SimplicialComplex, limit: usize) -> Vec<Vec<Set>> {
    let facets = facets_of(c);
    let mut out = Vec::new();
    fn extend(facets: &[Set], used: u64, order: &mut Vec<usize>, out: &mut Vec<Vec<Set>>, limit: usize) {
        if out.len() >= limit {
            return;
        }
        if order.len() == facets.len() {
            out.push(order.iter().map(|&i| facets[i].clone()).collect());
            return;
        }
        let earlier: Vec<Set> = order.iter().map(|&i| facets[i].clone()).collect();
        for i in 0..facets.len() {
            if used >> i & 1 == 0 && attaches(&earlier, &facets[i]) {
                order.push(i);
                extend(facets, used | 1 << i, order, out, limit);
                order.pop();
            }
        }
    }
    extend(&facets, 0, &mut Vec::new(), &mut out, limit);
    out
}

/// Restriction numbers by definition: vertices `v` with `F_i - F_j = {v}`
/// for some earlier `F_j`.
pub fn restriction_numbers(order: &[Set]) -> Vec<usize> {
    order
        .iter()
        .enumerate()
        .map(|(i, f)| {
            let mut found = BTreeSet::new();
            for g in &order[..i] {
                let diff: Vec<usize> = f.difference(g).copied().collect();
                if diff.len() == 1 {
                    found.insert(diff[0]);
                }
            }
            found.len()
        })
        .collect()
}

/// Connected graphs on `1..=n_max` vertices with optional degree bound.
pub fn connected_graphs(n_max: usize, max_degree: Option<usize>) -> Vec<Graph> {
    (1..=n_max)
        .flat_map(|n| {
            let mut spec = EnumSpec::new(n);
            spec.max_degree = max_degree;
            enumerate_graphs(&spec).unwrap().graphs()
        })
        .collect()
}

pub fn to_faces(order: &[Set]) -> Vec<shellar_core::bitset::BitSet> {
    order.iter().map(|f| f.iter().copied().collect()).collect()
}
