//! Facet-level structures: the facet adjacency graph K(G, m) and K_m trees.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::complex::{Face, SimplicialComplex};
use crate::error::TreeError;
use crate::graph::Graph;
use crate::shelling::{verify_shelling, StepKind};

/// Facets of size `m` joined when they share `m - 1` vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacetAdjacencyGraph {
    pub m: usize,
    pub nodes: Vec<Face>,
    /// Index pairs `(i, j)` with `i < j`.
    pub edges: Vec<(usize, usize)>,
}

impl FacetAdjacencyGraph {
    pub fn degree(&self, node: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == node || b == node).count()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.nodes.len()).map(|i| self.degree(i)).max().unwrap_or(0)
    }

    /// Same shape as a [`Graph`] on nodes `1..=len`.
    pub fn as_graph(&self) -> Graph {
        Graph::from_edges(self.nodes.len(), self.edges.iter().map(|&(a, b)| (a + 1, b + 1)))
            .expect("facet indices are in range")
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph facets {\n");
        for (i, f) in self.nodes.iter().enumerate() {
            let _ = writeln!(out, "  f{i} [label=\"{f}\"];");
        }
        for &(a, b) in &self.edges {
            let _ = writeln!(out, "  f{a} -- f{b};");
        }
        out.push_str("}\n");
        out
    }
}

fn pure_of_size(c: &SimplicialComplex, m: usize) -> Result<(), TreeError> {
    if !c.is_pure().unwrap_or(false) {
        return Err(TreeError::NotPure);
    }
    let found = c.facets()[0].len();
    if found != m {
        return Err(TreeError::WrongFacetSize { expected: m, found });
    }
    Ok(())
}

pub fn facet_graph(c: &SimplicialComplex, m: usize) -> Result<FacetAdjacencyGraph, TreeError> {
    pure_of_size(c, m)?;
    let nodes = c.facets().to_vec();
    let mut edges = Vec::new();
    for i in 0..nodes.len() {
        for j in i + 1..nodes.len() {
            if nodes[i].intersection_len(&nodes[j]) + 1 == m {
                edges.push((i, j));
            }
        }
    }
    Ok(FacetAdjacencyGraph { m, nodes, edges })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KmNode {
    pub facet: Face,
    /// The vertex this facet contributes beyond its attaching face.
    pub vertex_added: usize,
    /// Index of the parent node, `None` for children of the root.
    pub parent: Option<usize>,
    /// The vertex the parent has and this facet lacks; `None` under the root.
    pub label: Option<usize>,
}

/// Rooted labeled tree encoding a pure shelling without structural facets.
///
/// The root is the intersection of the first two facets. A facet whose
/// attaching face is the root hangs from it; any other facet hangs from the
/// earliest facet containing its attaching face, with the edge labeled by
/// the one parent vertex it drops. Vertices keep their original labels;
/// `relabeling` maps them to the normal form where the root is `1..=|root|`
/// and the remaining vertices follow in order of addition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KmTree {
    pub root: Face,
    pub nodes: Vec<KmNode>,
    pub relabeling: BTreeMap<usize, usize>,
}

#[derive(Serialize)]
struct NodeJson {
    vertex_added: usize,
    label: Option<usize>,
    children: Vec<NodeJson>,
}

#[derive(Serialize)]
struct TreeJson {
    root: Vec<u32>,
    children: Vec<NodeJson>,
}

pub fn build_km_tree(c: &SimplicialComplex, r: u32, order: &[Face]) -> Result<KmTree, TreeError> {
    if r == 0 || r % 2 == 1 {
        return Err(TreeError::OddDegree(r));
    }
    let half = r as usize / 2;
    pure_of_size(c, half + 1)?;
    if c.facet_count() < 2 {
        return Err(TreeError::TooFewFacets);
    }
    let cert = verify_shelling(c, order)?;
    if let Some(i) = cert.classification.iter().position(|&k| k == StepKind::Structural) {
        return Err(TreeError::StructuralFacet { step: i + 1 });
    }
    let root = order[0].intersection(&order[1]);
    if root.len() != half {
        return Err(TreeError::BadRoot {
            expected: half,
            found: root.len(),
        });
    }

    let mut nodes: Vec<KmNode> = Vec::with_capacity(order.len());
    let mut seen = root.clone();
    for (j, f) in order.iter().enumerate() {
        let added = f.difference(&seen).first().expect("vertex-adding facet adds a vertex");
        seen.insert(added);
        let mut attaching = f.clone();
        attaching.remove(added);
        let (parent, label) = if attaching == root {
            (None, None)
        } else {
            let i = (0..j)
                .find(|&i| attaching.is_subset(&order[i]))
                .expect("attaching face lies in an earlier facet");
            let dropped = order[i].difference(f);
            (Some(i), dropped.first())
        };
        nodes.push(KmNode {
            facet: f.clone(),
            vertex_added: added,
            parent,
            label,
        });
    }
    let relabeling = root
        .iter()
        .chain(nodes.iter().map(|n| n.vertex_added))
        .enumerate()
        .map(|(i, v)| (v, i + 1))
        .collect();
    Ok(KmTree { root, nodes, relabeling })
}

impl KmTree {
    fn children(&self, parent: Option<usize>) -> impl Iterator<Item = usize> + '_ {
        (0..self.nodes.len()).filter(move |&i| self.nodes[i].parent == parent)
    }

    pub fn root_degree(&self) -> usize {
        self.children(None).count()
    }

    /// Nodes reachable from `start` (`None` is the root) along downward
    /// paths that never use an edge labeled `forbidden`; `start` itself is
    /// not counted.
    pub fn reachable(&self, start: Option<usize>, forbidden: usize) -> usize {
        let mut stack: Vec<usize> = self.children(start).collect();
        let mut count = 0;
        while let Some(i) = stack.pop() {
            if self.nodes[i].label == Some(forbidden) {
                continue;
            }
            count += 1;
            stack.extend(self.children(Some(i)));
        }
        count
    }

    /// Vertex degrees read off the tree: a root vertex `i` has degree
    /// `|root| - 1` plus the nodes reachable from the root avoiding label
    /// `i`; any other vertex has `|root|` plus the nodes reachable from the
    /// node that added it.
    pub fn tree_degrees(&self) -> BTreeMap<usize, usize> {
        let half = self.root.len();
        let mut out = BTreeMap::new();
        for v in self.root.iter() {
            out.insert(v, half - 1 + self.reachable(None, v));
        }
        for (i, node) in self.nodes.iter().enumerate() {
            out.insert(node.vertex_added, half + self.reachable(Some(i), node.vertex_added));
        }
        out
    }

    /// With exactly `|root| + 2` non-root nodes: whether the root has two
    /// children and the edge labels run over the root vertices exactly once.
    pub fn check_branch_lemma(&self, r: u32) -> Result<bool, TreeError> {
        let expected = r as usize / 2 + 2;
        if self.nodes.len() != expected {
            return Err(TreeError::NodeCount {
                expected,
                found: self.nodes.len(),
            });
        }
        let mut labels: Vec<usize> = self.nodes.iter().filter_map(|n| n.label).collect();
        labels.sort_unstable();
        let root: Vec<usize> = self.root.iter().collect();
        Ok(self.root_degree() == 2 && labels == root)
    }

    /// Rebuilds the facets: a child of the root is the root plus its vertex,
    /// any other node is its parent minus the label plus its vertex.
    pub fn facets(&self) -> Vec<Face> {
        let mut out: Vec<Face> = Vec::with_capacity(self.nodes.len());
        for node in &self.nodes {
            let mut f = match (node.parent, node.label) {
                (Some(p), Some(label)) => {
                    let mut f = out[p].clone();
                    f.remove(label);
                    f
                }
                _ => self.root.clone(),
            };
            f.insert(node.vertex_added);
            out.push(f);
        }
        out
    }

    pub fn to_complex(&self, vertex_count: usize) -> Result<SimplicialComplex, crate::error::ComplexError> {
        SimplicialComplex::new(vertex_count, self.facets())
    }

    /// The skeleton graph of the rebuilt complex, on the vertices the tree
    /// mentions.
    pub fn underlying_graph(&self) -> Graph {
        let n = self.relabeling.keys().copied().max().unwrap_or(0);
        let mut g = Graph::new(n);
        for f in self.facets() {
            let vs: Vec<usize> = f.iter().collect();
            for (a, &u) in vs.iter().enumerate() {
                for &v in &vs[a + 1..] {
                    g.link(u, v);
                }
            }
        }
        g
    }

    /// Whether the tree, viewed as an undirected graph including the root,
    /// is a path.
    pub fn is_path(&self) -> bool {
        let mut degree = vec![0usize; self.nodes.len() + 1];
        for (i, node) in self.nodes.iter().enumerate() {
            let p = node.parent.map_or(0, |p| p + 1);
            degree[p] += 1;
            degree[i + 1] += 1;
        }
        degree.iter().all(|&d| d <= 2)
    }

    pub fn to_json(&self) -> String {
        fn build(t: &KmTree, parent: Option<usize>) -> Vec<NodeJson> {
            t.children(parent)
                .map(|i| NodeJson {
                    vertex_added: t.nodes[i].vertex_added,
                    label: t.nodes[i].label,
                    children: build(t, Some(i)),
                })
                .collect()
        }
        serde_json::to_string(&TreeJson {
            root: self.root.to_vec(),
            children: build(self, None),
        })
        .expect("tree serializes")
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph kmtree {\n");
        let _ = writeln!(out, "  root [label=\"{}\"];", self.root);
        for (i, node) in self.nodes.iter().enumerate() {
            let _ = writeln!(out, "  n{} [label=\"F*{}\"];", i, node.vertex_added);
            let from = node.parent.map_or_else(|| "root".to_string(), |p| format!("n{p}"));
            match node.label {
                Some(l) => {
                    let _ = writeln!(out, "  {from} -> n{i} [label=\"{l}\"];");
                }
                None => {
                    let _ = writeln!(out, "  {from} -> n{i};");
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::clique_complex;
    use crate::generators::{circulant, cir_star};

    fn s(v: &[usize]) -> Face {
        v.iter().copied().collect()
    }

    /// The illustrative tree with its last vertex renamed 7 so that every
    /// vertex is covered.
    fn illustration() -> (SimplicialComplex, Vec<Face>) {
        let order = vec![s(&[1, 2, 3]), s(&[1, 2, 4]), s(&[2, 4, 5]), s(&[1, 4, 6]), s(&[1, 6, 7])];
        (SimplicialComplex::new(7, order.clone()).unwrap(), order)
    }

    #[test]
    fn illustration_tree_shape() {
        let (c, order) = illustration();
        let t = build_km_tree(&c, 4, &order).unwrap();
        assert_eq!(t.root, s(&[1, 2]));
        let shape: Vec<(usize, Option<usize>, Option<usize>)> = t
            .nodes
            .iter()
            .map(|n| (n.vertex_added, n.parent.map(|p| t.nodes[p].vertex_added), n.label))
            .collect();
        assert_eq!(
            shape,
            vec![(3, None, None), (4, None, None), (5, Some(4), Some(1)), (6, Some(4), Some(2)), (7, Some(6), Some(4))]
        );
        let d = t.tree_degrees();
        assert_eq!(d[&1], 5);
        assert_eq!(d[&7], 2);
        assert_eq!(d[&4], 4);
        let g = c.skeleton();
        for (&v, &deg) in &d {
            assert_eq!(g.degree(v), deg, "vertex {v}");
        }
        assert_eq!(t.facets(), order);
        assert_eq!(t.check_branch_lemma(4), Err(TreeError::NodeCount { expected: 4, found: 5 }));
        assert_eq!(
            t.to_json(),
            "{\"root\":[1,2],\"children\":[{\"vertex_added\":3,\"label\":null,\"children\":[]},\
             {\"vertex_added\":4,\"label\":null,\"children\":[{\"vertex_added\":5,\"label\":1,\"children\":[]},\
             {\"vertex_added\":6,\"label\":2,\"children\":[{\"vertex_added\":7,\"label\":4,\"children\":[]}]}]}]}"
        );
    }

    #[test]
    fn two_facets() {
        let c = SimplicialComplex::from_lists(4, &[&[1, 2, 3], &[2, 3, 4]]).unwrap();
        let t = build_km_tree(&c, 4, c.facets()).unwrap();
        assert_eq!(t.root, s(&[2, 3]));
        assert_eq!(t.root_degree(), 2);
        assert!(t.nodes.iter().all(|n| n.label.is_none()));
        let d = t.tree_degrees();
        assert_eq!((d[&1], d[&2], d[&3], d[&4]), (2, 3, 3, 2));
        assert_eq!(t.relabeling, BTreeMap::from([(2, 1), (3, 2), (1, 3), (4, 4)]));
    }

    #[test]
    fn cir_star_trees() {
        let c = clique_complex(&cir_star(6, 4));
        let t = build_km_tree(&c, 4, c.facets()).unwrap();
        assert_eq!(t.root, s(&[2, 3]));
        assert!(t.check_branch_lemma(4).unwrap());
        for n in 5..12 {
            let g = cir_star(n, 4);
            let c = clique_complex(&g);
            let t = build_km_tree(&c, 4, c.facets()).unwrap();
            assert!(t.is_path());
            assert_eq!(t.underlying_graph(), g);
            let d = t.tree_degrees();
            for v in 1..=n {
                assert_eq!(d[&v], g.degree(v));
            }
        }
    }

    #[test]
    fn branch_lemma_false_for_wide_root() {
        // three facets hang from the root
        let c = SimplicialComplex::from_lists(6, &[&[1, 2, 3], &[1, 2, 4], &[1, 2, 5], &[2, 5, 6]]).unwrap();
        let t = build_km_tree(&c, 4, c.facets()).unwrap();
        assert_eq!(t.root_degree(), 3);
        assert!(!t.check_branch_lemma(4).unwrap());
    }

    #[test]
    fn construction_errors() {
        let c = SimplicialComplex::from_lists(4, &[&[1, 2, 3], &[2, 3, 4]]).unwrap();
        assert_eq!(build_km_tree(&c, 3, c.facets()), Err(TreeError::OddDegree(3)));
        assert!(matches!(build_km_tree(&c, 6, c.facets()), Err(TreeError::WrongFacetSize { .. })));
        let mixed = SimplicialComplex::from_lists(4, &[&[1, 2, 3], &[3, 4]]).unwrap();
        assert_eq!(build_km_tree(&mixed, 4, mixed.facets()), Err(TreeError::NotPure));
        let worked = SimplicialComplex::from_lists(6, &[&[1, 2, 3], &[2, 3, 4], &[3, 4, 5], &[2, 4, 6], &[4, 5, 6]]).unwrap();
        assert_eq!(
            build_km_tree(&worked, 4, worked.facets()),
            Err(TreeError::StructuralFacet { step: 5 })
        );
        let single = SimplicialComplex::from_lists(3, &[&[1, 2, 3]]).unwrap();
        assert_eq!(build_km_tree(&single, 4, single.facets()), Err(TreeError::TooFewFacets));
    }

    #[test]
    fn facet_graphs() {
        let path = facet_graph(&clique_complex(&cir_star(7, 4)), 3).unwrap();
        assert_eq!(path.nodes.len(), 5);
        assert_eq!(path.edges, vec![(0, 1), (1, 2), (2, 3), (3, 4)]);
        let cube = facet_graph(&clique_complex(&circulant(8, &[1, 2, 3]).unwrap()), 4).unwrap();
        assert_eq!(cube.nodes.len(), 16);
        assert!((0..16).all(|i| cube.degree(i) == 4));
        assert_eq!(cube.edges.len(), 32);
        let single = facet_graph(&SimplicialComplex::from_lists(3, &[&[1, 2, 3]]).unwrap(), 3).unwrap();
        assert_eq!((single.nodes.len(), single.edges.len()), (1, 0));
        assert!(single.to_dot().contains("f0 [label=\"{1,2,3}\"]"));
        assert!(matches!(facet_graph(&clique_complex(&cir_star(7, 4)), 4), Err(TreeError::WrongFacetSize { .. })));
    }
}
