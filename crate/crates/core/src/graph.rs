//! Finite simple graphs on the vertex labels `1..=n`.

use std::fmt::Write as _;

use crate::bitset::BitSet;
use crate::error::GraphError;

/// Undirected simple graph. Vertices are labeled `1..=n`; `adj[v]` holds the
/// neighbours of `v` (index 0 is unused and always empty).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<BitSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            adj: vec![BitSet::new(); n + 1],
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 1..=n {
            for v in u + 1..=n {
                g.link(u, v);
            }
        }
        g
    }

    /// Adds the edge `uv`; adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        for w in [u, v] {
            if w == 0 || w > self.n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.link(u, v);
        Ok(())
    }

    pub(crate) fn link(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u >= 1 && v >= 1 && u <= self.n && v <= self.n);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &BitSet {
        &self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u <= self.n && self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Δ(G); zero for edgeless graphs and for the graph with no vertices.
    pub fn max_degree(&self) -> usize {
        (1..=self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        (1..=self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    pub fn vertex_set(&self) -> BitSet {
        BitSet::range(1, self.n)
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..=self.n).flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = BitSet::new();
        seen.insert(1);
        let mut stack = vec![1];
        while let Some(u) = stack.pop() {
            for v in self.adj[u].iter() {
                if !seen.contains(v) {
                    seen.insert(v);
                    stack.push(v);
                }
            }
        }
        seen.len() == self.n
    }

    /// Number of connected components with at least one edge.
    pub fn nontrivial_components(&self) -> usize {
        let mut seen = BitSet::new();
        let mut count = 0;
        for s in 1..=self.n {
            if seen.contains(s) || self.adj[s].is_empty() {
                continue;
            }
            count += 1;
            seen.insert(s);
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for v in self.adj[u].iter() {
                    if !seen.contains(v) {
                        seen.insert(v);
                        stack.push(v);
                    }
                }
            }
        }
        count
    }

    /// Graph with vertex `v` renamed to `perm[v - 1]`. `perm` must be a
    /// permutation of `1..=n`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "relabel: permutation length");
        let mut g = Graph::new(self.n);
        for (u, v) in self.edges() {
            g.link(perm[u - 1], perm[v - 1]);
        }
        g
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::new(self.n + other.n);
        for (u, v) in self.edges() {
            g.link(u, v);
        }
        for (u, v) in other.edges() {
            g.link(u + self.n, v + self.n);
        }
        g
    }

    /// 0-based adjacency rows; bit `j` of row `i` is set when vertices
    /// `i+1` and `j+1` are adjacent. Requires `n <= 64`.
    pub fn to_masks(&self) -> Vec<u64> {
        assert!(self.n <= 64, "to_masks requires n <= 64");
        (1..=self.n).map(|v| self.adj[v].low_word() >> 1).collect()
    }

    pub fn from_masks(rows: &[u64]) -> Graph {
        let n = rows.len();
        assert!(n <= 64, "from_masks requires n <= 64");
        let mut g = Graph::new(n);
        for (i, &row) in rows.iter().enumerate() {
            let mut r = row;
            while r != 0 {
                let j = r.trailing_zeros() as usize;
                r &= r - 1;
                if j > i {
                    g.link(i + 1, j + 1);
                }
            }
        }
        g
    }

    /// Human-readable edge list: `n m` followed by one `u v` line per edge.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.n, self.edge_count());
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hline, header) = lines.next().ok_or(GraphError::EdgeList {
            line: 1,
            message: "missing `n m` header".into(),
        })?;
        let (n, m) = parse_pair(hline, header)?;
        let mut g = Graph::new(n);
        let mut seen = 0;
        for (line, l) in lines {
            let (u, v) = parse_pair(line, l)?;
            g.add_edge(u, v).map_err(|e| GraphError::EdgeList {
                line,
                message: e.to_string(),
            })?;
            seen += 1;
        }
        if seen != m {
            return Err(GraphError::EdgeList {
                line: hline,
                message: format!("header declares {m} edges but {seen} were listed"),
            });
        }
        Ok(g)
    }
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize), GraphError> {
    let err = |message: String| GraphError::EdgeList { line, message };
    let mut it = text.split_whitespace();
    let mut next = || -> Result<usize, GraphError> {
        let tok = it.next().ok_or_else(|| err("expected two integers".into()))?;
        tok.parse().map_err(|_| err(format!("not an integer: {tok:?}")))
    };
    let a = next()?;
    let b = next()?;
    if it.next().is_some() {
        return Err(err("expected exactly two integers".into()));
    }
    Ok((a, b))
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (k, (u, v)) in self.edges().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}
