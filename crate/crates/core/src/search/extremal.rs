//! Extremal clique counts over graphs with shellable clique complexes.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::canon::decode;
use crate::cliques::{enumerate_cliques, CliqueCensus};
use crate::complex::{clique_complex, SimplicialComplex};
use crate::error::SearchError;
use crate::graph::Graph;
use crate::graph6::emit_graph6;
use crate::search::enumerate::{enumerate_graphs, ingest_stream, EnumSpec, Enumeration, DEFAULT_BUDGET};
use crate::search::par;
use crate::shelling::{is_shellable, ShellingCertificate};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    /// Generate every class internally.
    Enumerate,
    /// Use these graphs (deduplicated up to isomorphism).
    Graphs(Vec<Graph>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchSpec {
    pub n: usize,
    /// Maximum degree bound.
    pub r: usize,
    /// Clique size to maximize; `None` maximizes the total count.
    pub t: Option<usize>,
    pub require_pure: bool,
    pub require_connected: bool,
    /// Only graphs with exactly this clique number.
    pub omega: Option<usize>,
    pub source: Source,
    pub workers: usize,
    pub budget: u64,
}

impl SearchSpec {
    pub fn new(n: usize, r: usize) -> Self {
        SearchSpec {
            n,
            r,
            t: None,
            require_pure: false,
            require_connected: true,
            omega: None,
            source: Source::Enumerate,
            workers: 1,
            budget: DEFAULT_BUDGET,
        }
    }

    pub fn validate(&self) -> Result<(), SearchError> {
        if self.n == 0 || self.r == 0 || self.t == Some(0) || self.omega == Some(0) {
            return Err(SearchError::InvalidSpec("n, r, t and omega must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub n: usize,
    pub r: usize,
    pub t: Option<usize>,
    pub value: u64,
    /// Canonical graph6 strings of every extremal class, sorted.
    pub witnesses: Vec<String>,
    pub graphs_scanned: usize,
    pub shellable_count: usize,
    pub pure_count: usize,
    /// Largest `k_t` over admissible graphs, per clique size.
    pub per_t: BTreeMap<usize, u64>,
}

/// What the sweeps need to know about one graph.
#[derive(Debug, Clone)]
pub struct GraphProfile {
    pub graph: Graph,
    pub census: CliqueCensus,
    pub complex: SimplicialComplex,
    pub certificate: Option<ShellingCertificate>,
    pub pure: bool,
    pub omega: usize,
}

impl GraphProfile {
    pub fn new(graph: Graph) -> Self {
        let complex = clique_complex(&graph);
        let census = enumerate_cliques(&graph, None);
        let certificate = is_shellable(&complex);
        let pure = complex.is_pure().unwrap_or(false);
        let omega = complex.omega().unwrap_or(0);
        GraphProfile {
            graph,
            census,
            complex,
            certificate,
            pure,
            omega,
        }
    }

    pub fn shellable(&self) -> bool {
        self.certificate.is_some()
    }

    pub fn graph6(&self) -> String {
        emit_graph6(&self.graph).expect("search graphs fit graph6")
    }
}

/// Graph classes for `(n, r)` from the chosen source.
pub fn candidate_classes(spec: &SearchSpec) -> Result<Enumeration, SearchError> {
    match &spec.source {
        Source::Enumerate => enumerate_graphs(
            &EnumSpec::new(spec.n)
                .max_degree(spec.r)
                .connected(spec.require_connected)
                .budget(spec.budget)
                .workers(spec.workers),
        ),
        Source::Graphs(graphs) => ingest_stream(graphs, spec.n, Some(spec.r), spec.require_connected),
    }
}

/// Profiles every class in `e`, in canonical order.
pub fn profile_all(e: &Enumeration, workers: usize) -> Vec<GraphProfile> {
    par::map(&e.codes, workers, |&code| GraphProfile::new(Graph::from_masks(&decode(e.n, code))))
}

/// Exact `max k_t` (or `max k`) over the admissible classes of `spec`.
pub fn extremal_f(spec: &SearchSpec) -> Result<SearchReport, SearchError> {
    spec.validate()?;
    let classes = candidate_classes(spec)?;
    let profiles = profile_all(&classes, spec.workers);
    let objective = |p: &GraphProfile| match spec.t {
        Some(t) => p.census.count(t),
        None => p.census.total(),
    };
    let admissible: Vec<&GraphProfile> = profiles
        .iter()
        .filter(|p| p.shellable())
        .filter(|p| !spec.require_pure || p.pure)
        .filter(|p| spec.omega.is_none_or(|w| p.omega == w))
        .collect();
    let value = admissible.iter().map(|p| objective(p)).max().unwrap_or(0);
    let mut witnesses: Vec<String> = admissible
        .iter()
        .filter(|p| objective(p) == value)
        .map(|p| p.graph6())
        .collect();
    witnesses.sort();
    let mut per_t = BTreeMap::new();
    for p in &admissible {
        for (&t, &k) in p.census.counts() {
            let e = per_t.entry(t).or_insert(0);
            *e = k.max(*e);
        }
    }
    Ok(SearchReport {
        n: spec.n,
        r: spec.r,
        t: spec.t,
        value,
        witnesses,
        graphs_scanned: profiles.len(),
        shellable_count: profiles.iter().filter(|p| p.shellable()).count(),
        pure_count: profiles.iter().filter(|p| p.shellable() && p.pure).count(),
        per_t,
    })
}

impl SearchReport {
    /// CSV rows `n,r,t,value,witness_graph6`, one per witness.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,r,t,value,witness_graph6\n");
        let t = self.t.map_or_else(|| "all".to_string(), |t| t.to_string());
        for w in &self.witnesses {
            out.push_str(&format!("{},{},{},{},{}\n", self.n, self.r, t, self.value, w));
        }
        out
    }
}
