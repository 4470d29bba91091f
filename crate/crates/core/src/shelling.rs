//! Shelling orders: decision, verification and the counts they certify.
//!
//! Step test. Let `R` be the set of vertices `v` of `F` for which `F - v`
//! lies in some earlier facet. The intersection of `<F>` with the earlier
//! facets is pure of codimension one exactly when no earlier facet contains
//! all of `R`: every `F ∩ G` must avoid some `v ∈ R`. An empty `R` fails
//! whenever there is an earlier facet, and `|R|` is the restriction number.

use std::collections::HashMap;

use num_rational::Ratio;
use serde::Serialize;

use crate::bitset::BitSet;
use crate::complex::{Face, SimplicialComplex};
use crate::error::ShellingError;
use crate::math::binomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum StepKind {
    /// The facet brings one new vertex (the first facet brings all of its own).
    #[serde(rename = "VA")]
    VertexAdding,
    /// The facet brings no new vertex.
    #[serde(rename = "ST")]
    Structural,
}

/// A validated shelling order with its per-step data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShellingCertificate {
    pub order: Vec<Face>,
    /// `restriction[i]` is `r_i`.
    pub restriction: Vec<usize>,
    /// The vertices counted by `restriction[i]`.
    pub restriction_faces: Vec<Face>,
    pub classification: Vec<StepKind>,
    pub vertex_delta: Vec<usize>,
    pub edge_delta: Vec<usize>,
    /// Free degree after each step, filled in by [`ShellingCertificate::with_free_degree`].
    pub free_degree: Option<Vec<i64>>,
}

#[derive(Serialize)]
struct CertificateJson<'a> {
    order: Vec<Vec<u32>>,
    restriction: &'a [usize],
    classification: &'a [StepKind],
    free_degree: Option<&'a [i64]>,
    valid: bool,
    failing_step: Option<usize>,
}

/// Restriction face of `facet` against `earlier`, or `None` when attaching
/// it there violates the shelling condition.
pub fn attach(earlier: &[&Face], facet: &Face) -> Option<Face> {
    if earlier.is_empty() {
        return Some(BitSet::new());
    }
    let restriction: Face = facet
        .iter()
        .filter(|&v| {
            let mut rest = facet.clone();
            rest.remove(v);
            earlier.iter().any(|g| rest.is_subset(g))
        })
        .collect();
    if earlier.iter().any(|g| restriction.is_subset(g)) {
        None
    } else {
        Some(restriction)
    }
}

/// Inclusion-maximal faces among `facet ∩ g` for `g` in `earlier`.
pub fn intersection_generators(earlier: &[&Face], facet: &Face) -> Vec<Face> {
    let mut faces: Vec<Face> = earlier.iter().map(|g| facet.intersection(g)).collect();
    faces.sort();
    faces.dedup();
    let maximal = faces
        .iter()
        .filter(|a| !faces.iter().any(|b| b != *a && a.is_subset(b)))
        .cloned()
        .collect();
    maximal
}

/// Checks `order` step by step and builds its certificate.
pub fn verify_shelling(c: &SimplicialComplex, order: &[Face]) -> Result<ShellingCertificate, ShellingError> {
    let mut sorted = order.to_vec();
    sorted.sort();
    if sorted.len() != c.facet_count() || sorted.as_slice() != c.facets() {
        return Err(ShellingError::NotAPermutation(format!(
            "{} facets given for a complex with {}",
            order.len(),
            c.facet_count()
        )));
    }
    let mut cert = ShellingCertificate {
        order: order.to_vec(),
        restriction: Vec::with_capacity(order.len()),
        restriction_faces: Vec::with_capacity(order.len()),
        classification: Vec::with_capacity(order.len()),
        vertex_delta: Vec::with_capacity(order.len()),
        edge_delta: Vec::with_capacity(order.len()),
        free_degree: None,
    };
    let mut seen = BitSet::new();
    for (i, f) in order.iter().enumerate() {
        let earlier: Vec<&Face> = order[..i].iter().collect();
        let Some(restriction) = attach(&earlier, f) else {
            return Err(ShellingError::FailingStep {
                step: i + 1,
                facet: f.clone(),
                generators: intersection_generators(&earlier, f),
            });
        };
        let new_vertices = f.difference(&seen).len();
        let verts: Vec<usize> = f.iter().collect();
        let mut new_edges = 0;
        for (a, &u) in verts.iter().enumerate() {
            for &v in &verts[a + 1..] {
                if !earlier.iter().any(|g| g.contains(u) && g.contains(v)) {
                    new_edges += 1;
                }
            }
        }
        seen.union_with(f);
        cert.restriction.push(restriction.len());
        cert.restriction_faces.push(restriction);
        cert.classification.push(if i == 0 || new_vertices > 0 {
            StepKind::VertexAdding
        } else {
            StepKind::Structural
        });
        cert.vertex_delta.push(new_vertices);
        cert.edge_delta.push(new_edges);
    }
    Ok(cert)
}

/// Decides shellability, returning a certificate with facet sizes
/// non-increasing along the order.
///
/// Memoized over the set of facets still to be placed: the last facet of the
/// remaining set must have minimum size and attach to the others. Candidates
/// are tried in lexicographic order, so the result is deterministic.
pub fn is_shellable(c: &SimplicialComplex) -> Option<ShellingCertificate> {
    let facets = c.facets();
    let all: BitSet = (0..facets.len()).collect();
    let mut memo: HashMap<BitSet, Option<usize>> = HashMap::new();
    if !shellable_rec(facets, &all, &mut memo) {
        return None;
    }
    let mut order = Vec::with_capacity(facets.len());
    let mut rest = all;
    while !rest.is_empty() {
        let last = if rest.len() == 1 {
            rest.first().unwrap()
        } else {
            memo[&rest].expect("memo holds a choice for every shellable state")
        };
        order.push(facets[last].clone());
        rest.remove(last);
    }
    order.reverse();
    Some(verify_shelling(c, &order).expect("decision procedure emits valid orders"))
}

fn shellable_rec(facets: &[Face], set: &BitSet, memo: &mut HashMap<BitSet, Option<usize>>) -> bool {
    if set.len() <= 1 {
        return true;
    }
    if let Some(choice) = memo.get(set) {
        return choice.is_some();
    }
    let min = set.iter().map(|i| facets[i].len()).min().unwrap();
    let mut choice = None;
    for i in set.iter().filter(|&i| facets[i].len() == min) {
        let mut rest = set.clone();
        rest.remove(i);
        let earlier: Vec<&Face> = rest.iter().map(|j| &facets[j]).collect();
        if attach(&earlier, &facets[i]).is_some() && shellable_rec(facets, &rest, memo) {
            choice = Some(i);
            break;
        }
    }
    memo.insert(set.clone(), choice);
    choice.is_some()
}

/// Number of faces with `t` vertices: `Σ C(|F_i| - r_i, t - r_i)`.
pub fn face_count_by_size(cert: &ShellingCertificate, t: usize) -> u64 {
    cert.order
        .iter()
        .zip(&cert.restriction)
        .map(|(f, &r)| binomial((f.len() - r) as i64, t as i64 - r as i64))
        .sum()
}

/// `Σ 2^(|F_i| - r_i)`: every face once, the empty face included.
pub fn total_faces(cert: &ShellingCertificate) -> u64 {
    cert.order
        .iter()
        .zip(&cert.restriction)
        .map(|(f, &r)| 1u64 << (f.len() - r))
        .sum()
}

/// Free degree `|V_i| r - 2|E_i|` after each step, computed directly from
/// the prefix vertex and edge counts.
pub fn direct_free_degree(cert: &ShellingCertificate, r: u32) -> Vec<i64> {
    let (mut vertices, mut edges) = (0i64, 0i64);
    cert.vertex_delta
        .iter()
        .zip(&cert.edge_delta)
        .map(|(&dv, &de)| {
            vertices += dv as i64;
            edges += de as i64;
            vertices * i64::from(r) - 2 * edges
        })
        .collect()
}

/// Free-degree trace, cross-checking the direct values against the
/// incremental rule: `r + 2 - 2m` for a vertex-adding facet of size `m`,
/// `-2` for a structural facet.
pub fn free_degree_trace(cert: &ShellingCertificate, r: u32) -> Result<Vec<i64>, ShellingError> {
    let direct = direct_free_degree(cert, r);
    let r = i64::from(r);
    let mut incremental = 0i64;
    for (i, f) in cert.order.iter().enumerate() {
        let m = f.len() as i64;
        incremental += match (i, cert.classification[i]) {
            (0, _) => m * r - m * (m - 1),
            (_, StepKind::VertexAdding) => r + 2 - 2 * m,
            (_, StepKind::Structural) => -2,
        };
        if incremental != direct[i] {
            return Err(ShellingError::FreeDegreeMismatch {
                step: i + 1,
                incremental,
                direct: direct[i],
            });
        }
    }
    Ok(direct)
}

/// `½ s(s-1) + ½ (n-s)(r-2s+2)`, the ceiling on structural facets of a pure
/// shellable clique complex with facet size `s` under maximum degree `r`.
pub fn structural_facet_bound(n: u64, r: u64, s: u64) -> Result<Ratio<i64>, ShellingError> {
    if s == 0 || s > r / 2 + 1 || s > n {
        return Err(ShellingError::OutOfRegime { n, r, s });
    }
    let (n, r, s) = (n as i64, r as i64, s as i64);
    Ok(Ratio::new(s * (s - 1) + (n - s) * (r - 2 * s + 2), 2))
}

impl ShellingCertificate {
    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn structural_count(&self) -> usize {
        self.classification.iter().filter(|&&k| k == StepKind::Structural).count()
    }

    pub fn with_free_degree(mut self, r: u32) -> Result<Self, ShellingError> {
        self.free_degree = Some(free_degree_trace(&self, r)?);
        Ok(self)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&CertificateJson {
            order: self.order.iter().map(Face::to_vec).collect(),
            restriction: &self.restriction,
            classification: &self.classification,
            free_degree: self.free_degree.as_deref(),
            valid: true,
            failing_step: None,
        })
        .expect("certificate serializes")
    }
}

/// JSON report for an order that failed verification.
pub fn rejection_json(order: &[Face], err: &ShellingError) -> String {
    let failing_step = match err {
        ShellingError::FailingStep { step, .. } => Some(*step),
        _ => None,
    };
    serde_json::to_string(&CertificateJson {
        order: order.iter().map(Face::to_vec).collect(),
        restriction: &[],
        classification: &[],
        free_degree: None,
        valid: false,
        failing_step,
    })
    .expect("rejection serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::clique_complex;
    use crate::generators::cir_star;
    use crate::graph::Graph;

    fn s(v: &[usize]) -> Face {
        v.iter().copied().collect()
    }

    fn worked_example() -> (SimplicialComplex, Vec<Face>) {
        let lists: [&[usize]; 5] = [&[1, 2, 3], &[2, 3, 4], &[3, 4, 5], &[2, 4, 6], &[4, 5, 6]];
        let c = SimplicialComplex::from_lists(6, &lists).unwrap();
        (c, lists.iter().map(|l| s(l)).collect())
    }

    #[test]
    fn worked_example_certificate() {
        let (c, order) = worked_example();
        let cert = verify_shelling(&c, &order).unwrap();
        assert_eq!(cert.restriction, vec![0, 1, 1, 1, 2]);
        use StepKind::*;
        assert_eq!(
            cert.classification,
            vec![VertexAdding, VertexAdding, VertexAdding, VertexAdding, Structural]
        );
        assert_eq!(cert.vertex_delta, vec![3, 1, 1, 1, 0]);
        assert_eq!(cert.edge_delta, vec![3, 2, 2, 2, 1]);
        assert_eq!(face_count_by_size(&cert, 0), 1);
        assert_eq!(face_count_by_size(&cert, 2), 10);
        assert_eq!(face_count_by_size(&cert, 3), 5);
        assert_eq!(total_faces(&cert), 22);
        assert_eq!(free_degree_trace(&cert, 4).unwrap(), vec![6, 6, 6, 6, 4]);
        assert!(is_shellable(&c).is_some());
    }

    #[test]
    fn cir_star_natural_order() {
        let c = clique_complex(&cir_star(6, 4));
        let cert = verify_shelling(&c, c.facets()).unwrap();
        assert_eq!(cert.restriction, vec![0, 1, 1, 1]);
        assert!(cert.classification.iter().all(|&k| k == StepKind::VertexAdding));
        assert_eq!(total_faces(&cert), 20);
        assert_eq!(free_degree_trace(&cert, 4).unwrap(), vec![6, 6, 6, 6]);
    }

    #[test]
    fn single_clique_trace() {
        for r in 1..8 {
            let c = clique_complex(&Graph::complete(r as usize + 1));
            let cert = is_shellable(&c).unwrap();
            assert_eq!(free_degree_trace(&cert, r).unwrap(), vec![0]);
            assert_eq!(total_faces(&cert), 1 << (r + 1));
        }
    }

    #[test]
    fn disconnected_edges_not_shellable() {
        let g = Graph::from_edges(5, [(1, 2), (2, 3), (1, 3), (4, 5)]).unwrap();
        assert!(is_shellable(&clique_complex(&g)).is_none());
        // isolated vertices are always appendable
        let h = Graph::from_edges(5, [(1, 2), (2, 3), (1, 3)]).unwrap();
        let cert = is_shellable(&clique_complex(&h)).unwrap();
        assert_eq!(cert.order.last().unwrap().len(), 1);
    }

    #[test]
    fn cyclic_windows_versus_circulant_clique_complex() {
        let windows: Vec<Face> = (0..8).map(|i| (0..4).map(|k| (i + k) % 8 + 1).collect()).collect();
        let solid = SimplicialComplex::new(8, windows).unwrap();
        assert!(is_shellable(&solid).is_none());
        // the full clique complex of Cir(8, {1,2,3}) is the boundary of the
        // 4-dimensional cross-polytope, which does shell
        let g = crate::generators::circulant(8, &[1, 2, 3]).unwrap();
        let cert = is_shellable(&clique_complex(&g)).unwrap();
        assert_eq!(cert.len(), 16);
    }

    #[test]
    fn rejects_bad_orders() {
        let (c, order) = worked_example();
        let bad = vec![order[0].clone(), order[4].clone(), order[1].clone(), order[2].clone(), order[3].clone()];
        match verify_shelling(&c, &bad) {
            Err(ShellingError::FailingStep { step, generators, .. }) => {
                assert_eq!(step, 2);
                assert_eq!(generators, vec![BitSet::new()]);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            verify_shelling(&c, &order[..4]),
            Err(ShellingError::NotAPermutation(_))
        ));
        let json = rejection_json(&bad, &verify_shelling(&c, &bad).unwrap_err());
        assert!(json.contains("\"valid\":false,\"failing_step\":2"));
    }

    #[test]
    fn certificate_json_fields() {
        let (c, order) = worked_example();
        let json = verify_shelling(&c, &order).unwrap().with_free_degree(4).unwrap().to_json();
        assert_eq!(
            json,
            "{\"order\":[[1,2,3],[2,3,4],[3,4,5],[2,4,6],[4,5,6]],\"restriction\":[0,1,1,1,2],\
             \"classification\":[\"VA\",\"VA\",\"VA\",\"VA\",\"ST\"],\"free_degree\":[6,6,6,6,4],\
             \"valid\":true,\"failing_step\":null}"
        );
    }

    #[test]
    fn structural_bound_values() {
        assert_eq!(structural_facet_bound(10, 4, 2).unwrap(), Ratio::from_integer(9));
        assert_eq!(structural_facet_bound(10, 5, 3).unwrap(), Ratio::new(13, 2));
        assert_eq!(structural_facet_bound(4, 6, 4).unwrap(), Ratio::from_integer(6));
        assert!(structural_facet_bound(10, 4, 4).is_err());
    }

    #[test]
    fn octahedron_structural_step_adds_no_edge() {
        // K_{2,2,2}: the final facet of any shelling has all three of its
        // edges already present.
        let g = Graph::from_edges(
            6,
            [(1, 3), (1, 4), (1, 5), (1, 6), (2, 3), (2, 4), (2, 5), (2, 6), (3, 5), (3, 6), (4, 5), (4, 6)],
        )
        .unwrap();
        let cert = is_shellable(&clique_complex(&g)).unwrap();
        assert_eq!(cert.order.len(), 8);
        assert_eq!(*cert.restriction.last().unwrap(), 3);
        assert_eq!(*cert.edge_delta.last().unwrap(), 0);
        assert!(matches!(
            free_degree_trace(&cert, 4),
            Err(ShellingError::FreeDegreeMismatch { step: 8, .. })
        ));
    }
}
