//! Finite checks of the extremal statements, each returning a report.

use std::collections::{BTreeMap, HashSet};

use num_rational::Ratio;
use serde::Serialize;

use crate::canon::{canonical_code, canonical_graph6, decode};
use crate::cliques::{enumerate_cliques, CliqueCensus};
use crate::complex::clique_complex;
use crate::error::{SearchError, TreeError};
use crate::facets::build_km_tree;
use crate::generators::{cir_star, cir_star_star, colex, turan, union_of_cliques};
use crate::graph::Graph;
use crate::graph6::emit_graph6;
use crate::math::binomial;
use crate::search::enumerate::{enumerate_graphs, EnumSpec};
use crate::search::extremal::{extremal_f, profile_all, SearchSpec};
use crate::search::par;
use crate::shelling::{
    face_count_by_size, free_degree_trace, is_shellable, structural_facet_bound, total_faces, StepKind,
};

/// Worker count and augmentation budget shared by the exhaustive checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub workers: usize,
    pub budget: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            workers: 1,
            budget: crate::search::enumerate::DEFAULT_BUDGET,
        }
    }
}

fn even_half(r: u32) -> Result<usize, SearchError> {
    if r == 0 || r % 2 == 1 {
        return Err(SearchError::Tree(TreeError::OddDegree(r)));
    }
    Ok(r as usize / 2)
}

fn graph6(g: &Graph) -> String {
    emit_graph6(g).expect("search graphs fit graph6")
}

/// Decimal expansion rounded half away from zero.
pub fn format_decimal(x: Ratio<i64>, places: u32) -> String {
    let scale = 10i128.pow(places);
    let (num, den) = (*x.numer() as i128, *x.denom() as i128);
    let scaled = (num.abs() * scale * 2 + den) / (den * 2);
    let sign = if num < 0 && scaled != 0 { "-" } else { "" };
    let (int, frac) = (scaled / scale, scaled % scale);
    format!("{sign}{int}.{frac:0width$}", width = places as usize)
}

fn fraction(x: Ratio<i64>) -> String {
    if *x.denom() == 1 {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// `k_t` of the path-power graph with facets of size `m = r/2 + 1`:
/// `C(m, t) + (n - m) C(m - 1, t - 1)`.
pub fn cir_star_clique_formula(n: u64, r: u32, t: u32) -> Result<u64, SearchError> {
    let m = even_half(r)? as u64 + 1;
    if t == 0 || u64::from(t) > m {
        return Err(SearchError::InvalidSpec(format!("t = {t} outside 1..={m}")));
    }
    if n < m {
        return Err(SearchError::InvalidSpec(format!("n = {n} below the facet size {m}")));
    }
    let (n, m, t) = (n as i64, m as i64, i64::from(t));
    let value = binomial(m, t) + (n - m) as u64 * binomial(m - 1, t - 1);
    let factored = Ratio::from_integer(binomial(m - 1, t - 1) as i64) * (Ratio::new(m, t) + (n - m));
    assert_eq!(factored, Ratio::from_integer(value as i64), "factored form agrees");
    Ok(value)
}

/// `k` of the path-power graph: `2^m - 1 + (n - m) 2^(m-1)`, or `2^n - 1`
/// when the graph is complete.
pub fn cir_star_total(n: u64, r: u32) -> Result<u64, SearchError> {
    let m = even_half(r)? as u64 + 1;
    if n <= m {
        return Ok((1u64 << n) - 1);
    }
    Ok((1u64 << m) - 1 + (n - m) * (1u64 << (m - 1)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TreeShape {
    /// `r/2 + 3` facets on `r + 3` vertices.
    Full,
    /// `r/2 + 2` facets on `r + 2` vertices.
    Relaxed,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeClass {
    pub graph6: String,
    pub tree_is_path: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UniqueTreeReport {
    pub r: u32,
    pub shape: TreeShape,
    pub n: usize,
    pub facets: usize,
    pub graphs_scanned: usize,
    pub classes: Vec<TreeClass>,
    pub cir_star_graph6: String,
    /// Exactly one class, and it is the path-power graph.
    pub unique_cir_star: bool,
}

/// Classes of connected graphs with maximum degree at most `r` whose clique
/// complex is pure with facets of size `r/2 + 1`, has the given number of
/// facets, and shells without structural facets.
pub fn verify_unique_km_tree(r: u32, shape: TreeShape, limits: Limits) -> Result<UniqueTreeReport, SearchError> {
    let half = even_half(r)?;
    let m = half + 1;
    let (n, facets) = match shape {
        TreeShape::Full => (r as usize + 3, half + 3),
        TreeShape::Relaxed => (r as usize + 2, half + 2),
    };
    let classes = enumerate_graphs(
        &EnumSpec::new(n)
            .max_degree(r as usize)
            .max_clique(m)
            .budget(limits.budget)
            .workers(limits.workers),
    )?;
    let found: Vec<Option<TreeClass>> = par::map(&classes.codes, limits.workers, |&code| {
        let g = Graph::from_masks(&decode(n, code));
        let c = clique_complex(&g);
        if c.facet_count() != facets || !c.is_pure().unwrap_or(false) || c.facets()[0].len() != m {
            return None;
        }
        let cert = is_shellable(&c)?;
        if cert.structural_count() > 0 {
            return None;
        }
        let tree = build_km_tree(&c, r, &cert.order).ok()?;
        Some(TreeClass {
            graph6: graph6(&g),
            tree_is_path: tree.is_path(),
        })
    });
    let classes_found: Vec<TreeClass> = found.into_iter().flatten().collect();
    let target = canonical_graph6(&cir_star(n, r as usize))?;
    let unique_cir_star = classes_found.len() == 1 && classes_found[0].graph6 == target;
    Ok(UniqueTreeReport {
        r,
        shape,
        n,
        facets,
        graphs_scanned: classes.len(),
        classes: classes_found,
        cir_star_graph6: target,
        unique_cir_star,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TendrilReport {
    pub n: usize,
    pub r: u32,
    pub graphs_scanned: usize,
    /// Pure shellable complexes of the right facet size containing the pattern.
    pub containing: usize,
    pub counterexamples: Vec<String>,
}

/// Whether some injective vertex map sends every facet of `pattern` to a
/// facet of `target` (both as 0-based masks).
pub fn embeds_facets(pattern_rows: &[u64], pattern_facets: &[u64], target_rows: &[u64], target_facets: &HashSet<u64>) -> bool {
    let p = pattern_rows.len();
    // facets indexed by their largest pattern vertex
    let mut closing: Vec<Vec<u64>> = vec![Vec::new(); p];
    for &f in pattern_facets {
        closing[63 - f.leading_zeros() as usize].push(f);
    }
    let mut image = vec![0usize; p];
    fn extend(
        k: usize,
        used: u64,
        image: &mut [usize],
        pattern_rows: &[u64],
        closing: &[Vec<u64>],
        target_rows: &[u64],
        target_facets: &HashSet<u64>,
    ) -> bool {
        if k == image.len() {
            return true;
        }
        'next: for v in 0..target_rows.len() {
            if used >> v & 1 == 1 {
                continue;
            }
            let mut back = pattern_rows[k] & ((1u64 << k) - 1);
            while back != 0 {
                let u = back.trailing_zeros() as usize;
                back &= back - 1;
                if target_rows[v] >> image[u] & 1 == 0 {
                    continue 'next;
                }
            }
            image[k] = v;
            for &f in &closing[k] {
                let mut mapped = 0u64;
                let mut bits = f;
                while bits != 0 {
                    let u = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    mapped |= 1 << image[u];
                }
                if !target_facets.contains(&mapped) {
                    continue 'next;
                }
            }
            if extend(k + 1, used | 1 << v, image, pattern_rows, closing, target_rows, target_facets) {
                return true;
            }
        }
        false
    }
    extend(0, 0, &mut image, pattern_rows, &closing, target_rows, target_facets)
}

fn facet_masks(g: &Graph) -> Vec<u64> {
    clique_complex(g).facets().iter().map(|f| f.low_word() >> 1).collect()
}

/// Among pure shellable clique complexes with facets of size `r/2 + 1` and
/// maximum degree at most `r` on `n` vertices, those containing a copy of the
/// `(r + 3)`-vertex path-power complex must be the `n`-vertex path-power
/// complex.
pub fn verify_tendril(n: usize, r: u32, limits: Limits) -> Result<TendrilReport, SearchError> {
    let half = even_half(r)?;
    let m = half + 1;
    let classes = enumerate_graphs(
        &EnumSpec::new(n)
            .max_degree(r as usize)
            .max_clique(m)
            .budget(limits.budget)
            .workers(limits.workers),
    )?;
    let pattern = cir_star(r as usize + 3, r as usize);
    let pattern_rows = pattern.to_masks();
    let pattern_facets = facet_masks(&pattern);
    let target_code = canonical_code(&cir_star(n, r as usize))?;
    let verdicts: Vec<Option<bool>> = par::map(&classes.codes, limits.workers, |&code| {
        let rows = decode(n, code);
        let g = Graph::from_masks(&rows);
        let c = clique_complex(&g);
        if !c.is_pure().unwrap_or(false) || c.facets()[0].len() != m {
            return None;
        }
        let facets: HashSet<u64> = c.facets().iter().map(|f| f.low_word() >> 1).collect();
        if !embeds_facets(&pattern_rows, &pattern_facets, &rows, &facets) {
            return None;
        }
        is_shellable(&c)?;
        Some(code == target_code)
    });
    let mut counterexamples = Vec::new();
    let mut containing = 0;
    for (code, verdict) in classes.codes.iter().zip(&verdicts) {
        match verdict {
            Some(true) => containing += 1,
            Some(false) => {
                containing += 1;
                counterexamples.push(graph6(&Graph::from_masks(&decode(n, *code))));
            }
            None => {}
        }
    }
    Ok(TendrilReport {
        n,
        r,
        graphs_scanned: classes.len(),
        containing,
        counterexamples,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BinomReport {
    pub a_max: u64,
    pub checked: u64,
    /// `(a, b, c, d)` tuples where the inequality fails.
    pub violations: Vec<[u64; 4]>,
}

/// `C(b, c) + (a - b) C(b - 1, c - 1) <= C(a, d)` for `0 <= c <= b <= a <=
/// a_max` and `c <= d <= c + (a - b) - 1`.
pub fn verify_binom_lemma(a_max: u64) -> BinomReport {
    let mut checked = 0;
    let mut violations = Vec::new();
    for a in 0..=a_max as i64 {
        for b in 0..=a {
            for c in 0..=b {
                let lhs = binomial(b, c) + (a - b) as u64 * binomial(b - 1, c - 1);
                for d in c..c + (a - b) {
                    checked += 1;
                    if lhs > binomial(a, d) {
                        violations.push([a as u64, b as u64, c as u64, d as u64]);
                    }
                }
            }
        }
    }
    BinomReport {
        a_max,
        checked,
        violations,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RatioRow {
    pub n: u64,
    pub count: u64,
    pub ratio: String,
    pub ratio_decimal: String,
    pub limit: String,
    pub gap: String,
    pub gap_decimal: String,
    /// The true extremal value, when it was within reach.
    pub exhaustive: Option<u64>,
}

/// Exhaustive values are attempted only up to this many vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Exhaustive {
    pub limits: Limits,
    pub max_n: u64,
}

/// `k_t(Cir*(n, r)) / n` (or `k / n`) against its limit `C(r/2, t-1)` (or
/// `2^(r/2)`).
pub fn ratio_report(
    r: u32,
    t: Option<u32>,
    n_values: &[u64],
    exhaustive: Option<Exhaustive>,
) -> Result<Vec<RatioRow>, SearchError> {
    let half = even_half(r)? as i64;
    let m = half as u64 + 1;
    let limit = match t {
        Some(t) => Ratio::from_integer(binomial(half, i64::from(t) - 1) as i64),
        None => Ratio::from_integer(1i64 << half),
    };
    let mut rows = Vec::with_capacity(n_values.len());
    for &n in n_values {
        if n == 0 {
            return Err(SearchError::InvalidSpec("n must be positive".into()));
        }
        let count = match t {
            Some(t) if n >= m => cir_star_clique_formula(n, r, t)?,
            Some(t) => binomial(n as i64, i64::from(t)),
            None => cir_star_total(n, r)?,
        };
        let ratio = Ratio::new(count as i64, n as i64);
        let gap = limit - ratio;
        let exhaustive = match exhaustive {
            Some(ex) if n <= ex.max_n => {
                let mut spec = SearchSpec::new(n as usize, r as usize);
                spec.t = t.map(|t| t as usize);
                spec.workers = ex.limits.workers;
                spec.budget = ex.limits.budget;
                match extremal_f(&spec) {
                    Ok(rep) => Some(rep.value),
                    Err(SearchError::BudgetExceeded { .. } | SearchError::TooManyVertices { .. }) => None,
                    Err(e) => return Err(e),
                }
            }
            _ => None,
        };
        rows.push(RatioRow {
            n,
            count,
            ratio: fraction(ratio),
            ratio_decimal: format_decimal(ratio, 6),
            limit: fraction(limit),
            gap: fraction(gap),
            gap_decimal: format_decimal(gap, 6),
            exhaustive,
        });
    }
    Ok(rows)
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub name: String,
    pub cases: u64,
    pub violations: u64,
    pub violation_examples: Vec<String>,
    pub tight_cases: u64,
    pub tight_examples: Vec<String>,
}

const EXAMPLES: usize = 5;

impl BoundCheck {
    fn new(name: &str) -> Self {
        BoundCheck {
            name: name.into(),
            ..Default::default()
        }
    }

    fn record(&mut self, ok: bool, tight: bool, describe: impl Fn() -> String) {
        self.cases += 1;
        if !ok {
            self.violations += 1;
            if self.violation_examples.len() < EXAMPLES {
                self.violation_examples.push(describe());
            }
        } else if tight {
            self.tight_cases += 1;
            if self.tight_examples.len() < EXAMPLES {
                self.tight_examples.push(describe());
            }
        }
    }

    pub fn holds(&self) -> bool {
        self.violations == 0 && self.tight_cases > 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassicalReport {
    pub n_max: usize,
    pub graphs: usize,
    pub checks: Vec<BoundCheck>,
}

impl ClassicalReport {
    pub fn check(&self, name: &str) -> Option<&BoundCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

pub const ZYKOV: &str = "zykov";
pub const KRUSKAL_KATONA: &str = "kruskal_katona";
pub const GAN_LOH_SUDAKOV: &str = "gan_loh_sudakov";
pub const CUTLER_RADCLIFFE_TOTAL: &str = "cutler_radcliffe_total";
pub const CUTLER_RADCLIFFE_BY_SIZE: &str = "cutler_radcliffe_t_at_least_3";
pub const CUTLER_RADCLIFFE_EDGES: &str = "cutler_radcliffe_t_2";

/// Exhaustive checks over all graphs on `1..=n_max` vertices of the
/// classical clique bounds: Zykov (`ω <= r`), the Kruskal–Katona colex bound
/// (fixed edge count), Gan–Loh–Sudakov (`n <= 2r + 1`, `Δ <= r <= 4`,
/// `t = 3`) and Cutler–Radcliffe (`Δ <= r`, totals and sizes `t >= 3` for
/// `r <= 6`). The Cutler–Radcliffe size form is also run at `t = 2`, where it
/// does not hold, and reported separately.
pub fn verify_classical_bounds(n_max: usize, limits: Limits) -> Result<ClassicalReport, SearchError> {
    let mut zykov = BoundCheck::new(ZYKOV);
    let mut kk = BoundCheck::new(KRUSKAL_KATONA);
    let mut gls = BoundCheck::new(GAN_LOH_SUDAKOV);
    let mut cr_total = BoundCheck::new(CUTLER_RADCLIFFE_TOTAL);
    let mut cr_sizes = BoundCheck::new(CUTLER_RADCLIFFE_BY_SIZE);
    let mut cr_edges = BoundCheck::new(CUTLER_RADCLIFFE_EDGES);
    let mut graphs_seen = 0;
    for n in 1..=n_max {
        let classes = enumerate_graphs(
            &EnumSpec::new(n)
                .connected(false)
                .budget(limits.budget)
                .workers(limits.workers),
        )?;
        graphs_seen += classes.len();
        let graphs = classes.graphs();
        let censuses: Vec<CliqueCensus> = par::map(&graphs, limits.workers, |g| enumerate_cliques(g, None));
        let turan_census: Vec<CliqueCensus> = (1..=n).map(|r| enumerate_cliques(&turan(n, r).unwrap(), None)).collect();
        let max_edges = n * (n - 1) / 2;
        let colex_census: Vec<CliqueCensus> = (0..=max_edges)
            .map(|m| enumerate_cliques(&colex(n, m).unwrap(), None))
            .collect();
        let union_census = |r: usize| {
            let (a, b) = (n / (r + 1), n % (r + 1));
            enumerate_cliques(&union_of_cliques(a, r, b).unwrap(), None)
        };
        for (g, census) in graphs.iter().zip(&censuses) {
            let name = || graph6(g);
            let omega = census.max_size();
            let delta = g.max_degree();
            for r in omega.max(1)..=n {
                let bound = &turan_census[r - 1];
                let ok = (1..=n).all(|t| census.count(t) <= bound.count(t)) && census.total() <= bound.total();
                let tight = census.total() == bound.total();
                zykov.record(ok, tight, || format!("{} r={r}", name()));
            }
            let bound = &colex_census[g.edge_count()];
            let ok = (3..=n).all(|t| census.count(t) <= bound.count(t));
            let tight = census.count(3) > 0 && census.count(3) == bound.count(3);
            kk.record(ok, tight, || format!("{} m={}", name(), g.edge_count()));
            for r in delta.max(1)..n {
                if r <= 4 && n <= 2 * r + 1 {
                    let bound = enumerate_cliques(&union_of_cliques(1, r, n - r - 1).unwrap(), None);
                    let tight = census.count(3) > 0 && census.count(3) == bound.count(3);
                    gls.record(census.count(3) <= bound.count(3), tight, || format!("{} r={r}", name()));
                }
                let bound = union_census(r);
                let tight = census.total() == bound.total();
                cr_total.record(census.total() <= bound.total(), tight, || format!("{} r={r}", name()));
                if r <= 6 {
                    let ok = (3..=n).all(|t| census.count(t) <= bound.count(t));
                    let tight = census.count(3) > 0 && census.count(3) == bound.count(3);
                    cr_sizes.record(ok, tight, || format!("{} r={r}", name()));
                    let tight = census.count(2) > 0 && census.count(2) == bound.count(2);
                    cr_edges.record(census.count(2) <= bound.count(2), tight, || format!("{} r={r}", name()));
                }
            }
        }
    }
    Ok(ClassicalReport {
        n_max,
        graphs: graphs_seen,
        checks: vec![zykov, kk, gls, cr_total, cr_sizes, cr_edges],
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OddCandidate {
    pub graph6: String,
    pub total: u64,
    pub counts: BTreeMap<usize, u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OddReport {
    pub n: usize,
    pub r: u32,
    pub facet_size: usize,
    pub in_regime: bool,
    pub graphs_scanned: usize,
    pub candidates: usize,
    pub cir_star: OddCandidate,
    pub cir_star_star: Option<OddCandidate>,
    /// Largest `k_t` among candidates, per size.
    pub best_per_t: BTreeMap<usize, u64>,
    /// Candidates with more cliques than the path-power graph.
    pub beating_cir_star: Vec<String>,
    /// The top candidates by total count.
    pub frontier: Vec<OddCandidate>,
}

const FRONTIER: usize = 10;

fn odd_candidate(g: &Graph) -> OddCandidate {
    let census = enumerate_cliques(g, None);
    OddCandidate {
        graph6: graph6(g),
        total: census.total(),
        counts: census.counts().clone(),
    }
}

/// Pure shellable clique complexes with facets of size `⌊r/2⌋ + 1` under
/// `Δ <= r`, `r` odd, ranked against the two path-power constructions.
pub fn odd_explore(n: usize, r: u32, limits: Limits) -> Result<OddReport, SearchError> {
    if r.is_multiple_of(2) {
        return Err(SearchError::InvalidSpec(format!("r = {r} must be odd")));
    }
    if n == 0 {
        return Err(SearchError::InvalidSpec("n must be positive".into()));
    }
    let m = r as usize / 2 + 1;
    let star = odd_candidate(&cir_star(n, r as usize));
    let star_star = cir_star_star(n, r as usize).ok().map(|g| odd_candidate(&g));
    let in_regime = n > r as usize;
    let mut report = OddReport {
        n,
        r,
        facet_size: m,
        in_regime,
        graphs_scanned: 0,
        candidates: 0,
        cir_star: star,
        cir_star_star: star_star,
        best_per_t: BTreeMap::new(),
        beating_cir_star: Vec::new(),
        frontier: Vec::new(),
    };
    if !in_regime {
        return Ok(report);
    }
    let classes = enumerate_graphs(
        &EnumSpec::new(n)
            .max_degree(r as usize)
            .max_clique(m)
            .budget(limits.budget)
            .workers(limits.workers),
    )?;
    report.graphs_scanned = classes.len();
    let found: Vec<Option<OddCandidate>> = par::map(&classes.codes, limits.workers, |&code| {
        let g = Graph::from_masks(&decode(n, code));
        let c = clique_complex(&g);
        if !c.is_pure().unwrap_or(false) || c.facets()[0].len() != m {
            return None;
        }
        is_shellable(&c)?;
        Some(odd_candidate(&g))
    });
    let mut candidates: Vec<OddCandidate> = found.into_iter().flatten().collect();
    report.candidates = candidates.len();
    for c in &candidates {
        for (&t, &k) in &c.counts {
            let e = report.best_per_t.entry(t).or_insert(0);
            *e = k.max(*e);
        }
        if c.total > report.cir_star.total {
            report.beating_cir_star.push(c.graph6.clone());
        }
    }
    candidates.sort_by(|a, b| b.total.cmp(&a.total).then_with(|| a.graph6.cmp(&b.graph6)));
    candidates.truncate(FRONTIER);
    report.frontier = candidates;
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LargeCliqueRow {
    pub n: usize,
    pub graphs_scanned: usize,
    pub shellable: usize,
    /// Most facets larger than `⌊r/2⌋ + 1` in one shellable complex.
    pub max_large_facets: usize,
    /// Most cliques of size `⌊r/2⌋ + 1` in a shellable complex whose clique
    /// number exceeds that size.
    pub max_small_cliques_with_large_omega: Option<u64>,
}

pub fn scan_large_clique_budget(n_max: usize, r: usize, limits: Limits) -> Result<Vec<LargeCliqueRow>, SearchError> {
    if r == 0 {
        return Err(SearchError::InvalidSpec("r must be positive".into()));
    }
    let m = r / 2 + 1;
    let mut rows = Vec::new();
    for n in 1..=n_max {
        let classes = enumerate_graphs(
            &EnumSpec::new(n)
                .max_degree(r)
                .budget(limits.budget)
                .workers(limits.workers),
        )?;
        let profiles = profile_all(&classes, limits.workers);
        let shellable: Vec<_> = profiles.iter().filter(|p| p.shellable()).collect();
        rows.push(LargeCliqueRow {
            n,
            graphs_scanned: profiles.len(),
            shellable: shellable.len(),
            max_large_facets: shellable
                .iter()
                .map(|p| p.complex.facets().iter().filter(|f| f.len() > m).count())
                .max()
                .unwrap_or(0),
            max_small_cliques_with_large_omega: shellable
                .iter()
                .filter(|p| p.omega > m)
                .map(|p| p.census.count(m))
                .max(),
        });
    }
    Ok(rows)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundViolation {
    pub graph6: String,
    pub n: usize,
    pub r: usize,
    pub s: usize,
    pub structural: usize,
    pub bound: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructuralReport {
    pub n_max: usize,
    pub graphs: usize,
    pub certificates: usize,
    pub structural_facets: usize,
    /// How many structural facets added each number of edges.
    pub edge_delta_counts: BTreeMap<usize, usize>,
    /// Graphs with a structural facet adding other than exactly one edge.
    pub edge_delta_violations: Vec<String>,
    /// Certificates whose incremental free-degree accounting breaks.
    pub free_degree_mismatches: usize,
    pub pure_certificates: usize,
    pub bound_violations: Vec<BoundViolation>,
    /// Pure certificates breaking `k_t <= C(s,t) + (n-s) C(s-1,t-1) + w C(s-2,t-2)`.
    pub count_bound_violations: Vec<String>,
}

/// Shells every connected graph on at most `n_max` vertices and audits the
/// structural facets of the resulting certificates. Each pure certificate
/// with facet size `s` is held to the structural-facet bound at the
/// smallest admissible degree bound `r = max(Δ, 2s - 2)`.
pub fn structural_sweep(n_max: usize, limits: Limits) -> Result<StructuralReport, SearchError> {
    let mut report = StructuralReport {
        n_max,
        graphs: 0,
        certificates: 0,
        structural_facets: 0,
        edge_delta_counts: BTreeMap::new(),
        edge_delta_violations: Vec::new(),
        free_degree_mismatches: 0,
        pure_certificates: 0,
        bound_violations: Vec::new(),
        count_bound_violations: Vec::new(),
    };
    for n in 1..=n_max {
        let classes = enumerate_graphs(&EnumSpec::new(n).budget(limits.budget).workers(limits.workers))?;
        report.graphs += classes.len();
        for p in profile_all(&classes, limits.workers) {
            let Some(cert) = &p.certificate else { continue };
            report.certificates += 1;
            let mut bad_delta = false;
            for (kind, &de) in cert.classification.iter().zip(&cert.edge_delta) {
                if *kind == StepKind::Structural {
                    report.structural_facets += 1;
                    *report.edge_delta_counts.entry(de).or_insert(0) += 1;
                    bad_delta |= de != 1;
                }
            }
            if bad_delta {
                report.edge_delta_violations.push(p.graph6());
            }
            let delta = p.graph.max_degree();
            if free_degree_trace(cert, delta.max(1) as u32).is_err() {
                report.free_degree_mismatches += 1;
            }
            if !p.pure {
                continue;
            }
            report.pure_certificates += 1;
            let s = p.omega;
            let w = cert.structural_count();
            let r = delta.max(2 * s - 2).max(1);
            let bound = structural_facet_bound(n as u64, r as u64, s as u64)?;
            if Ratio::from_integer(w as i64) > bound {
                report.bound_violations.push(BoundViolation {
                    graph6: p.graph6(),
                    n,
                    r,
                    s,
                    structural: w,
                    bound: fraction(bound),
                });
            }
            let (si, ni, wi) = (s as i64, n as i64, w as u64);
            let within = (1..=s).all(|t| {
                let t = t as i64;
                let cap = binomial(si, t) + (ni - si) as u64 * binomial(si - 1, t - 1) + wi * binomial(si - 2, t - 2);
                p.census.count(t as usize) <= cap
            });
            if !within {
                report.count_bound_violations.push(p.graph6());
            }
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormulaReport {
    pub n_max: usize,
    pub graphs: usize,
    pub shellable: usize,
    pub mismatches: Vec<String>,
}

/// Compares the certificate face counts with the f-vector on every
/// connected graph with at most `n_max` vertices.
pub fn verify_face_formulas(n_max: usize, limits: Limits) -> Result<FormulaReport, SearchError> {
    let mut report = FormulaReport {
        n_max,
        graphs: 0,
        shellable: 0,
        mismatches: Vec::new(),
    };
    for n in 1..=n_max {
        let classes = enumerate_graphs(&EnumSpec::new(n).budget(limits.budget).workers(limits.workers))?;
        report.graphs += classes.len();
        for p in profile_all(&classes, limits.workers) {
            let Some(cert) = &p.certificate else { continue };
            report.shellable += 1;
            let fv = p.complex.f_vector();
            let sizes_ok = (0..=n).all(|t| face_count_by_size(cert, t) == fv.faces_of_size(t));
            if !sizes_ok || total_faces(cert) != fv.with_empty_face().total() {
                report.mismatches.push(p.graph6());
            }
        }
    }
    Ok(report)
}
