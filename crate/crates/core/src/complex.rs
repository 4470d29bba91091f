//! Simplicial complexes stored by their facets.

use std::collections::HashSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::cliques::maximal_cliques;
use crate::error::ComplexError;
use crate::graph::Graph;

pub type Face = BitSet;

/// A simplicial complex on vertices `1..=n` given by its facets.
///
/// Facets are pairwise incomparable, cover every vertex and are kept in
/// lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    vertex_count: usize,
    facets: Vec<Face>,
}

/// Face counts by dimension; `entries[i]` counts faces with `i + 1` vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FVector {
    pub entries: Vec<u64>,
    /// Whether [`FVector::total`] counts the empty face.
    pub includes_empty_face: bool,
}

impl FVector {
    pub fn total(&self) -> u64 {
        self.entries.iter().sum::<u64>() + u64::from(self.includes_empty_face)
    }

    /// Number of faces with exactly `size` vertices (`size = 0` is the empty
    /// face, present in every non-void complex).
    pub fn faces_of_size(&self, size: usize) -> u64 {
        match size {
            0 => 1,
            s => self.entries.get(s - 1).copied().unwrap_or(0),
        }
    }

    pub fn with_empty_face(mut self) -> Self {
        self.includes_empty_face = true;
        self
    }
}

#[derive(Serialize, Deserialize)]
struct ComplexJson {
    n: usize,
    facets: Vec<Vec<u32>>,
}

impl SimplicialComplex {
    /// Validating constructor.
    pub fn new(vertex_count: usize, facets: Vec<Face>) -> Result<Self, ComplexError> {
        if facets.is_empty() {
            return Err(ComplexError::Empty);
        }
        let mut facets = facets;
        facets.sort();
        let mut covered = BitSet::new();
        for (i, f) in facets.iter().enumerate() {
            if f.is_empty() {
                return Err(ComplexError::EmptyFacet);
            }
            if let Some(v) = f.iter().find(|&v| v == 0 || v > vertex_count) {
                return Err(ComplexError::VertexOutOfRange { vertex: v, n: vertex_count });
            }
            if i > 0 && facets[i - 1] == *f {
                return Err(ComplexError::DuplicateFacet(f.clone()));
            }
            covered.union_with(f);
        }
        for a in &facets {
            for b in &facets {
                if a != b && a.is_subset(b) {
                    return Err(ComplexError::NotAntichain {
                        inner: a.clone(),
                        outer: b.clone(),
                    });
                }
            }
        }
        if let Some(v) = (1..=vertex_count).find(|&v| !covered.contains(v)) {
            return Err(ComplexError::UncoveredVertex(v));
        }
        Ok(SimplicialComplex { vertex_count, facets })
    }

    /// Convenience constructor from 1-based vertex lists.
    pub fn from_lists(vertex_count: usize, facets: &[&[usize]]) -> Result<Self, ComplexError> {
        Self::new(
            vertex_count,
            facets.iter().map(|f| f.iter().copied().collect()).collect(),
        )
    }

    /// The complex generated by arbitrary faces: keeps the inclusion-maximal
    /// ones and adds singleton facets for vertices no face covers.
    pub fn generated_by(vertex_count: usize, faces: Vec<Face>) -> Result<Self, ComplexError> {
        let mut faces: Vec<Face> = faces.into_iter().filter(|f| !f.is_empty()).collect();
        faces.sort();
        faces.dedup();
        let maximal: Vec<Face> = faces
            .iter()
            .filter(|f| !faces.iter().any(|g| g != *f && f.is_subset(g)))
            .cloned()
            .collect();
        let covered = maximal.iter().fold(BitSet::new(), |acc, f| acc.union(f));
        let mut facets = maximal;
        facets.extend((1..=vertex_count).filter(|&v| !covered.contains(v)).map(|v| {
            let mut s = BitSet::new();
            s.insert(v);
            s
        }));
        Self::new(vertex_count, facets)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    /// Whether every facet has the same number of vertices.
    pub fn is_pure(&self) -> Result<bool, ComplexError> {
        let first = self.facets.first().ok_or(ComplexError::Empty)?.len();
        Ok(self.facets.iter().all(|f| f.len() == first))
    }

    /// ω(Δ): the size of the largest facet.
    pub fn omega(&self) -> Result<usize, ComplexError> {
        self.facets.iter().map(Face::len).max().ok_or(ComplexError::Empty)
    }

    /// Face counts by dimension, by expanding every facet into its subsets
    /// and deduplicating. Exponential in the facet size.
    pub fn f_vector(&self) -> FVector {
        let omega = self.facets.iter().map(Face::len).max().unwrap_or(0);
        let mut seen: Vec<HashSet<Face>> = vec![HashSet::new(); omega + 1];
        for f in &self.facets {
            let verts: Vec<usize> = f.iter().collect();
            for mask in 1u64..(1u64 << verts.len()) {
                let face: Face = verts
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &v)| v)
                    .collect();
                seen[face.len()].insert(face);
            }
        }
        FVector {
            entries: seen.iter().skip(1).map(|s| s.len() as u64).collect(),
            includes_empty_face: false,
        }
    }

    /// The underlying graph (1-skeleton).
    pub fn skeleton(&self) -> Graph {
        let mut g = Graph::new(self.vertex_count);
        for f in &self.facets {
            let vs: Vec<usize> = f.iter().collect();
            for (i, &u) in vs.iter().enumerate() {
                for &v in &vs[i + 1..] {
                    g.link(u, v);
                }
            }
        }
        g
    }

    /// Facet-list text: `n k`, then one sorted facet per line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.vertex_count, self.facets.len());
        for f in &self.facets {
            let line: Vec<String> = f.iter().map(|v| v.to_string()).collect();
            let _ = writeln!(out, "{}", line.join(" "));
        }
        out
    }

    pub fn parse_text(text: &str) -> Result<Self, ComplexError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hline, header) = lines.next().ok_or(ComplexError::Format {
            line: 1,
            message: "missing `n k` header".into(),
        })?;
        let head = parse_ints(hline, header)?;
        if head.len() != 2 {
            return Err(ComplexError::Format {
                line: hline,
                message: "header must be `n k`".into(),
            });
        }
        let (n, k) = (head[0], head[1]);
        let mut facets = Vec::with_capacity(k);
        for (line, l) in lines {
            facets.push(parse_ints(line, l)?.into_iter().collect::<Face>());
        }
        if facets.len() != k {
            return Err(ComplexError::Format {
                line: hline,
                message: format!("header declares {k} facets but {} were listed", facets.len()),
            });
        }
        Self::new(n, facets)
    }

    /// JSON mirror `{"n": .., "facets": [[..], ..]}`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&ComplexJson {
            n: self.vertex_count,
            facets: self.facets.iter().map(Face::to_vec).collect(),
        })
        .expect("complex serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, ComplexError> {
        let raw: ComplexJson = serde_json::from_str(text).map_err(|e| ComplexError::Format {
            line: e.line(),
            message: e.to_string(),
        })?;
        Self::new(
            raw.n,
            raw.facets
                .into_iter()
                .map(|f| f.into_iter().map(|v| v as usize).collect())
                .collect(),
        )
    }
}

fn parse_ints(line: usize, text: &str) -> Result<Vec<usize>, ComplexError> {
    text.split_whitespace()
        .map(|tok| {
            tok.parse().map_err(|_| ComplexError::Format {
                line,
                message: format!("not a non-negative integer: {tok:?}"),
            })
        })
        .collect()
}

/// K(G): the complex whose faces are the cliques of `g`. Its facets are the
/// maximal cliques; isolated vertices become singleton facets.
pub fn clique_complex(g: &Graph) -> SimplicialComplex {
    SimplicialComplex {
        vertex_count: g.n(),
        facets: maximal_cliques(g),
    }
}
