use std::fmt::Write as _;

use serde::Serialize;
use serde_json::value::RawValue;
use shellar_core::cliques::{enumerate_cliques, CliqueCensus};
use shellar_core::complex::{clique_complex, SimplicialComplex};
use shellar_core::facets::{build_km_tree, facet_graph};
use shellar_core::generators as family;
use shellar_core::graph::Graph;
use shellar_core::graph6::emit_graph6;
use shellar_core::search::extremal::{extremal_f, SearchSpec, Source as SearchSource};
use shellar_core::search::verify::{self, Exhaustive, Limits, TreeShape};
use shellar_core::shelling::{is_shellable, rejection_json, verify_shelling, ShellingCertificate};

use crate::args::{Command, Family, Format, SearchArgs, Source, Suite};
use crate::config::Settings;
use crate::error::{domain, CliError};
use crate::input::{self, Loaded};

/// Text to print, plus a failure to report after printing it.
pub struct Outcome {
    pub output: String,
    pub failure: Option<CliError>,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Outcome { output, failure: None }
    }
}

fn pick(chosen: Option<Format>, allowed: &[Format], command: &str) -> Result<Format, CliError> {
    match chosen {
        None => Ok(allowed[0]),
        Some(f) if allowed.contains(&f) => Ok(f),
        Some(f) => Err(CliError::Usage(format!(
            "--format {} is not supported by `{command}` (use {})",
            f.name(),
            allowed.iter().map(|f| f.name()).collect::<Vec<_>>().join(", ")
        ))),
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn raw(s: String) -> Box<RawValue> {
    RawValue::from_string(s).expect("library JSON is valid")
}

fn g6(g: &Graph) -> Result<String, CliError> {
    emit_graph6(g).map_err(domain)
}

pub fn run(command: &Command, settings: &Settings) -> Result<Outcome, CliError> {
    let limits = Limits {
        workers: settings.workers,
        budget: settings.budget,
    };
    let format = settings.format;
    match command {
        Command::Gen(f) => gen(f, format).map(Outcome::ok),
        Command::Census { input, max_size } => census(input.input.as_ref(), *max_size, format).map(Outcome::ok),
        Command::Shellable {
            input,
            certificate,
            expect_shellable,
            order,
            free_degree,
        } => shellable(
            input.input.as_ref(),
            *certificate,
            *expect_shellable,
            order.as_deref(),
            *free_degree,
            format,
        ),
        Command::Fvector { input, with_empty } => fvector(input.input.as_ref(), *with_empty, format).map(Outcome::ok),
        Command::Kmtree { input, r, order } => kmtree(input.input.as_ref(), *r, order.as_deref(), format).map(Outcome::ok),
        Command::Facetgraph { input, m } => facetgraph(input.input.as_ref(), *m, format).map(Outcome::ok),
        Command::Search(args) => search(args, settings, format).map(Outcome::ok),
        Command::Verify(suite) => verify_suite(suite, limits, format),
        Command::Ratios { r, t, n, exhaustive_max } => {
            let ex = exhaustive_max.map(|max_n| Exhaustive { limits, max_n });
            ratios(*r, *t, n, ex, format).map(Outcome::ok)
        }
    }
}

fn gen(f: &Family, format: Option<Format>) -> Result<String, CliError> {
    let g = match f {
        Family::CirStar { n, r } => Ok(family::cir_star(*n, *r)),
        Family::CirStarStar { n, r } => family::cir_star_star(*n, *r),
        Family::Circulant { n, jumps } => family::circulant(*n, jumps),
        Family::Turan { n, r } => family::turan(*n, *r),
        Family::Colex { n, m } => family::colex(*n, *m),
        Family::UnionCliques { a, r, b } => family::union_of_cliques(*a, *r, *b),
        Family::DegreeExtremal { n, r } => family::degree_extremal_union(*n, *r),
        Family::Complete { n } => Ok(Graph::complete(*n)),
    }
    .map_err(domain)?;
    match pick(format, &[Format::Graph6, Format::Text, Format::Json], "gen")? {
        Format::Graph6 => Ok(format!("{}\n", g6(&g)?)),
        Format::Text => Ok(g.to_edge_list()),
        _ => {
            #[derive(Serialize)]
            struct Out {
                n: usize,
                edges: Vec<(usize, usize)>,
            }
            Ok(json(&Out {
                n: g.n(),
                edges: g.edges().collect(),
            }))
        }
    }
}

fn census_line(census: &CliqueCensus) -> String {
    let parts: Vec<String> = census.counts().iter().map(|(t, k)| format!("k{t}={k}")).collect();
    format!("k={} {}", census.total(), parts.join(" "))
}

fn census(path: Option<&std::path::PathBuf>, max_size: Option<usize>, format: Option<Format>) -> Result<String, CliError> {
    let graphs = input::graphs(&input::read_text(path)?)?;
    let rows: Vec<(String, CliqueCensus)> = graphs
        .iter()
        .map(|g| Ok((g6(g)?, enumerate_cliques(g, max_size))))
        .collect::<Result<_, CliError>>()?;
    let mut out = String::new();
    match pick(format, &[Format::Text, Format::Json, Format::Csv], "census")? {
        Format::Text => {
            for (name, c) in &rows {
                let _ = writeln!(out, "{name} {}", census_line(c));
            }
        }
        Format::Csv => {
            out.push_str("graph6,t,count\n");
            for (name, c) in &rows {
                for (t, k) in c.counts() {
                    let _ = writeln!(out, "{name},{t},{k}");
                }
                let _ = writeln!(out, "{name},all,{}", c.total());
            }
        }
        _ => {
            #[derive(Serialize)]
            struct Row<'a> {
                graph6: &'a str,
                total: u64,
                counts: &'a std::collections::BTreeMap<usize, u64>,
            }
            let rows: Vec<Row> = rows
                .iter()
                .map(|(name, c)| Row {
                    graph6: name,
                    total: c.total(),
                    counts: c.counts(),
                })
                .collect();
            out = json(&rows);
        }
    }
    Ok(out)
}

/// Certificate or rejection for one complex; `Err` carries the rejection
/// JSON and message. Without an explicit order the complex's own facet order is
/// tried before searching.
fn shell_one(
    c: &SimplicialComplex,
    order: Option<&[shellar_core::complex::Face]>,
    free_degree: Option<u32>,
) -> Result<Result<ShellingCertificate, (String, String)>, CliError> {
    let cert = match order {
        Some(order) => match verify_shelling(c, order) {
            Ok(cert) => cert,
            Err(e) => return Ok(Err((rejection_json(order, &e), e.to_string()))),
        },
        None => match verify_shelling(c, c.facets()).ok().or_else(|| is_shellable(c)) {
            Some(cert) => cert,
            None => {
                return Ok(Err((
                    "{\"valid\":false,\"failing_step\":null}".to_string(),
                    "no shelling order exists".to_string(),
                )))
            }
        },
    };
    match free_degree {
        Some(r) => Ok(Ok(cert.with_free_degree(r).map_err(domain)?)),
        None => Ok(Ok(cert)),
    }
}

fn cert_text(cert: &ShellingCertificate) -> String {
    let mut out = format!("shellable: {} facets, {} structural\n", cert.len(), cert.structural_count());
    for (i, f) in cert.order.iter().enumerate() {
        let kind = serde_json::to_string(&cert.classification[i]).expect("step kind serializes");
        let _ = write!(out, "{:>3} {} r={} {}", i + 1, f, cert.restriction[i], kind.trim_matches('"'));
        if let Some(fd) = &cert.free_degree {
            let _ = write!(out, " free={}", fd[i]);
        }
        out.push('\n');
    }
    out
}

fn shellable(
    path: Option<&std::path::PathBuf>,
    certificate: bool,
    expect: bool,
    order: Option<&std::path::Path>,
    free_degree: Option<u32>,
    format: Option<Format>,
) -> Result<Outcome, CliError> {
    let allowed: &[Format] = if certificate {
        &[Format::Json, Format::Text]
    } else {
        &[Format::Text, Format::Json]
    };
    let format = pick(format, allowed, "shellable")?;
    let order = order.map(input::load_order).transpose()?;
    let mut out = String::new();
    let mut rejected = 0;
    match input::load(path)? {
        Loaded::Complex(c) => {
            let result = shell_one(&c, order.as_deref(), free_degree)?;
            match (&result, format) {
                (Ok(cert), Format::Json) if certificate => out = cert.to_json() + "\n",
                (Ok(cert), Format::Json) => {
                    let _ = writeln!(out, "{{\"shellable\":true,\"facets\":{}}}", cert.len());
                }
                (Ok(cert), _) if certificate => out = cert_text(cert),
                (Ok(cert), _) => {
                    let _ = writeln!(out, "shellable: {} facets, {} structural", cert.len(), cert.structural_count());
                }
                (Err((j, _)), Format::Json) => out = format!("{j}\n"),
                (Err((_, why)), _) => {
                    let _ = writeln!(out, "not shellable: {why}");
                }
            }
            rejected += usize::from(result.is_err());
        }
        Loaded::Graphs(gs) => {
            #[derive(Serialize)]
            struct Row {
                graph6: String,
                shellable: bool,
                #[serde(skip_serializing_if = "Option::is_none")]
                certificate: Option<Box<RawValue>>,
            }
            let mut rows = Vec::new();
            for g in &gs {
                let result = shell_one(&clique_complex(g), order.as_deref(), free_degree)?;
                rejected += usize::from(result.is_err());
                let name = g6(g)?;
                match format {
                    Format::Json => rows.push(Row {
                        graph6: name,
                        shellable: result.is_ok(),
                        certificate: certificate.then(|| raw(result.as_ref().map_or_else(|e| e.0.clone(), |c| c.to_json()))),
                    }),
                    _ => match &result {
                        Ok(cert) if certificate => {
                            let _ = write!(out, "{name} {}", cert_text(cert));
                        }
                        Ok(cert) => {
                            let _ = writeln!(out, "{name} shellable: {} facets, {} structural", cert.len(), cert.structural_count());
                        }
                        Err((_, why)) => {
                            let _ = writeln!(out, "{name} not shellable: {why}");
                        }
                    },
                }
            }
            if format == Format::Json {
                out = json(&rows);
            }
        }
    }
    let failure = (expect && rejected > 0).then(|| CliError::Domain(format!("{rejected} input(s) not shellable")));
    Ok(Outcome { output: out, failure })
}

fn fvector(path: Option<&std::path::PathBuf>, with_empty: bool, format: Option<Format>) -> Result<String, CliError> {
    let items: Vec<(Option<String>, SimplicialComplex)> = match input::load(path)? {
        Loaded::Complex(c) => vec![(None, c)],
        Loaded::Graphs(gs) => gs.iter().map(|g| Ok((Some(g6(g)?), clique_complex(g)))).collect::<Result<_, CliError>>()?,
    };
    let vectors: Vec<(Option<String>, shellar_core::complex::FVector)> = items
        .into_iter()
        .map(|(name, c)| {
            let f = c.f_vector();
            (name, if with_empty { f.with_empty_face() } else { f })
        })
        .collect();
    let mut out = String::new();
    match pick(format, &[Format::Text, Format::Json, Format::Csv], "fvector")? {
        Format::Text => {
            for (name, f) in &vectors {
                let entries: Vec<String> = f.entries.iter().map(u64::to_string).collect();
                if let Some(name) = name {
                    let _ = write!(out, "{name} ");
                }
                let _ = writeln!(out, "({}) total={}", entries.join(", "), f.total());
            }
        }
        Format::Csv => {
            out.push_str("graph6,size,count\n");
            for (name, f) in &vectors {
                let name = name.as_deref().unwrap_or("");
                if f.includes_empty_face {
                    let _ = writeln!(out, "{name},0,1");
                }
                for (i, k) in f.entries.iter().enumerate() {
                    let _ = writeln!(out, "{name},{},{k}", i + 1);
                }
            }
        }
        _ => {
            #[derive(Serialize)]
            struct Row<'a> {
                #[serde(skip_serializing_if = "Option::is_none")]
                graph6: Option<&'a str>,
                entries: &'a [u64],
                includes_empty_face: bool,
                total: u64,
            }
            let rows: Vec<Row> = vectors
                .iter()
                .map(|(name, f)| Row {
                    graph6: name.as_deref(),
                    entries: &f.entries,
                    includes_empty_face: f.includes_empty_face,
                    total: f.total(),
                })
                .collect();
            out = if rows.len() == 1 && rows[0].graph6.is_none() {
                json(&rows[0])
            } else {
                json(&rows)
            };
        }
    }
    Ok(out)
}

fn kmtree(path: Option<&std::path::PathBuf>, r: u32, order: Option<&std::path::Path>, format: Option<Format>) -> Result<String, CliError> {
    let format = pick(format, &[Format::Json, Format::Dot, Format::Text], "kmtree")?;
    let c = input::load_complex(path)?;
    let order = match order {
        Some(p) => input::load_order(p)?,
        None => is_shellable(&c).ok_or_else(|| CliError::Domain("no shelling order exists".into()))?.order,
    };
    let tree = build_km_tree(&c, r, &order).map_err(domain)?;
    Ok(match format {
        Format::Json => tree.to_json() + "\n",
        Format::Dot => tree.to_dot(),
        _ => {
            let mut out = format!("root {}\n", tree.root);
            for (i, node) in tree.nodes.iter().enumerate() {
                let parent = node.parent.map_or_else(|| "root".to_string(), |p| format!("node {}", p + 1));
                let label = node.label.map_or_else(String::new, |l| format!(" label {l}"));
                let _ = writeln!(out, "node {} {} adds {} under {parent}{label}", i + 1, node.facet, node.vertex_added);
            }
            let degrees: Vec<String> = tree.tree_degrees().iter().map(|(v, d)| format!("{v}:{d}")).collect();
            let _ = writeln!(out, "degrees {}", degrees.join(" "));
            let _ = writeln!(out, "path {}", tree.is_path());
            if let Ok(holds) = tree.check_branch_lemma(r) {
                let _ = writeln!(out, "branch lemma {holds}");
            }
            out
        }
    })
}

fn facetgraph(path: Option<&std::path::PathBuf>, m: Option<usize>, format: Option<Format>) -> Result<String, CliError> {
    let format = pick(format, &[Format::Text, Format::Json, Format::Dot], "facetgraph")?;
    let c = input::load_complex(path)?;
    let m = m.unwrap_or_else(|| c.facets()[0].len());
    let fg = facet_graph(&c, m).map_err(domain)?;
    Ok(match format {
        Format::Dot => fg.to_dot(),
        Format::Json => {
            #[derive(Serialize)]
            struct Out {
                m: usize,
                nodes: Vec<Vec<u32>>,
                edges: Vec<(usize, usize)>,
                max_degree: usize,
            }
            json(&Out {
                m,
                nodes: fg.nodes.iter().map(|f| f.to_vec()).collect(),
                edges: fg.edges.iter().map(|&(a, b)| (a + 1, b + 1)).collect(),
                max_degree: fg.max_degree(),
            })
        }
        _ => {
            let mut out = format!("{} facets of size {m}, {} edges, max degree {}\n", fg.nodes.len(), fg.edges.len(), fg.max_degree());
            for (i, f) in fg.nodes.iter().enumerate() {
                let _ = writeln!(out, "{} {f}", i + 1);
            }
            for &(a, b) in &fg.edges {
                let _ = writeln!(out, "{} -- {}", a + 1, b + 1);
            }
            out
        }
    })
}

fn search(args: &SearchArgs, settings: &Settings, format: Option<Format>) -> Result<String, CliError> {
    let format = pick(format, &[Format::Text, Format::Json, Format::Csv], "search")?;
    let mut spec = SearchSpec::new(args.n, args.r);
    spec.t = args.t;
    spec.require_pure = args.pure;
    spec.omega = args.omega;
    spec.require_connected = settings.connected && !args.allow_disconnected;
    spec.workers = settings.workers;
    spec.budget = settings.budget;
    if args.source == Source::Stdin {
        spec.source = SearchSource::Graphs(input::graphs(&input::read_text(args.input.as_ref())?)?);
    } else if args.input.is_some() {
        return Err(CliError::Usage("--in needs --source stdin".into()));
    }
    let rep = extremal_f(&spec).map_err(domain)?;
    Ok(match format {
        Format::Json => json(&rep),
        Format::Csv => rep.to_csv(),
        _ => {
            let what = rep.t.map_or_else(|| "k".to_string(), |t| format!("k_{t}"));
            let mut out = format!(
                "n={} r={}: max {what} = {} over {} shellable of {} graphs ({} pure)\n",
                rep.n, rep.r, rep.value, rep.shellable_count, rep.graphs_scanned, rep.pure_count
            );
            for w in &rep.witnesses {
                let _ = writeln!(out, "witness {w}");
            }
            out
        }
    })
}

fn verify_suite(suite: &Suite, limits: Limits, format: Option<Format>) -> Result<Outcome, CliError> {
    let format = pick(format, &[Format::Text, Format::Json], "verify")?;
    let (text, value, failed): (String, String, Option<String>) = match suite {
        Suite::Binom { a_max } => {
            let rep = verify::verify_binom_lemma(*a_max);
            let text = format!("a <= {a_max}: {} tuples, {} violations\n", rep.checked, rep.violations.len());
            let failed = (!rep.violations.is_empty()).then(|| format!("{} violations", rep.violations.len()));
            (text, json(&rep), failed)
        }
        Suite::Tendril { n, r } => {
            let rep = verify::verify_tendril(*n, *r, limits).map_err(domain)?;
            let mut text = format!(
                "n={n} r={r}: {} graphs, {} containing the pattern, {} counterexamples\n",
                rep.graphs_scanned,
                rep.containing,
                rep.counterexamples.len()
            );
            for g in &rep.counterexamples {
                let _ = writeln!(text, "counterexample {g}");
            }
            let failed = (!rep.counterexamples.is_empty()).then(|| format!("{} counterexamples", rep.counterexamples.len()));
            (text, json(&rep), failed)
        }
        Suite::Unique { r, relaxed } => {
            let shape = if *relaxed { TreeShape::Relaxed } else { TreeShape::Full };
            let rep = verify::verify_unique_km_tree(*r, shape, limits).map_err(domain)?;
            let mut text = format!(
                "r={r} n={} facets={}: {} graphs, {} classes, unique and equal to Cir*: {}\n",
                rep.n,
                rep.facets,
                rep.graphs_scanned,
                rep.classes.len(),
                rep.unique_cir_star
            );
            for c in &rep.classes {
                let _ = writeln!(text, "class {} path={}", c.graph6, c.tree_is_path);
            }
            let failed = (!rep.unique_cir_star).then(|| format!("{} classes", rep.classes.len()));
            (text, json(&rep), failed)
        }
        Suite::Classical { n_max } => {
            let rep = verify::verify_classical_bounds(*n_max, limits).map_err(domain)?;
            let mut text = format!("{} graphs on n <= {n_max}\n", rep.graphs);
            for c in &rep.checks {
                let _ = writeln!(text, "{}: {} cases, {} violations, {} tight", c.name, c.cases, c.violations, c.tight_cases);
            }
            // the edge-only form is reported, not required
            let failing: Vec<&str> = rep
                .checks
                .iter()
                .filter(|c| c.name != verify::CUTLER_RADCLIFFE_EDGES && c.violations > 0)
                .map(|c| c.name.as_str())
                .collect();
            let failed = (!failing.is_empty()).then(|| format!("violated: {}", failing.join(", ")));
            (text, json(&rep), failed)
        }
        Suite::Odd { n, r } => {
            let rep = verify::odd_explore(*n, *r, limits).map_err(domain)?;
            let mut text = format!(
                "n={n} r={r}: {} graphs, {} candidates; k(Cir*)={}",
                rep.graphs_scanned, rep.candidates, rep.cir_star.total
            );
            if let Some(ss) = &rep.cir_star_star {
                let _ = write!(text, " k(Cir**)={}", ss.total);
            }
            let _ = writeln!(text, "; {} candidates beat Cir*", rep.beating_cir_star.len());
            for c in &rep.frontier {
                let _ = writeln!(text, "{} k={}", c.graph6, c.total);
            }
            (text, json(&rep), None)
        }
        Suite::Large { n_max, r } => {
            let rows = verify::scan_large_clique_budget(*n_max, *r, limits).map_err(domain)?;
            let mut text = String::from("n graphs shellable max_large_facets max_small_cliques_with_large_omega\n");
            for row in &rows {
                let small = row.max_small_cliques_with_large_omega.map_or_else(|| "-".to_string(), |k| k.to_string());
                let _ = writeln!(text, "{} {} {} {} {small}", row.n, row.graphs_scanned, row.shellable, row.max_large_facets);
            }
            (text, json(&rows), None)
        }
        Suite::Structural { n_max } => {
            let rep = verify::structural_sweep(*n_max, limits).map_err(domain)?;
            let deltas: Vec<String> = rep.edge_delta_counts.iter().map(|(d, k)| format!("{d}:{k}")).collect();
            let mut text = format!(
                "{} graphs, {} certificates, {} structural facets, edge deltas {}\n",
                rep.graphs,
                rep.certificates,
                rep.structural_facets,
                deltas.join(" ")
            );
            let _ = writeln!(text, "edge delta other than 1: {}", rep.edge_delta_violations.join(" "));
            let _ = writeln!(text, "free degree mismatches: {}", rep.free_degree_mismatches);
            let _ = writeln!(text, "{} pure certificates, {} bound violations", rep.pure_certificates, rep.bound_violations.len());
            for v in &rep.bound_violations {
                let _ = writeln!(text, "  {} n={} r={} s={} structural={} bound={}", v.graph6, v.n, v.r, v.s, v.structural, v.bound);
            }
            let _ = writeln!(text, "count bound violations: {}", rep.count_bound_violations.len());
            let bad = rep.edge_delta_violations.len() + rep.bound_violations.len() + rep.count_bound_violations.len();
            let failed = (bad > 0).then(|| format!("{bad} violations"));
            (text, json(&rep), failed)
        }
        Suite::Formula { n_max } => {
            let rep = verify::verify_face_formulas(*n_max, limits).map_err(domain)?;
            let text = format!("{} graphs, {} shellable, {} mismatches\n", rep.graphs, rep.shellable, rep.mismatches.len());
            let failed = (!rep.mismatches.is_empty()).then(|| format!("{} mismatches", rep.mismatches.len()));
            (text, json(&rep), failed)
        }
    };
    Ok(Outcome {
        output: if format == Format::Json { value } else { text },
        failure: failed.map(|why| CliError::Domain(format!("check failed: {why}"))),
    })
}

fn ratios(r: u32, t: Option<u32>, n: &[u64], ex: Option<Exhaustive>, format: Option<Format>) -> Result<String, CliError> {
    let format = pick(format, &[Format::Text, Format::Csv, Format::Json], "ratios")?;
    let rows = verify::ratio_report(r, t, n, ex).map_err(domain)?;
    let exhaustive = |e: Option<u64>| e.map_or_else(String::new, |v| v.to_string());
    Ok(match format {
        Format::Json => json(&rows),
        Format::Csv => {
            let mut out = String::from("n,count,ratio,ratio_decimal,limit,gap,gap_decimal,exhaustive\n");
            for row in &rows {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{},{},{}",
                    row.n,
                    row.count,
                    row.ratio,
                    row.ratio_decimal,
                    row.limit,
                    row.gap,
                    row.gap_decimal,
                    exhaustive(row.exhaustive)
                );
            }
            out
        }
        _ => {
            let mut out = format!("{:>8} {:>12} {:>14} {:>10} {:>6} {:>10}\n", "n", "count", "ratio", "decimal", "limit", "gap");
            for row in &rows {
                let _ = write!(
                    out,
                    "{:>8} {:>12} {:>14} {:>10} {:>6} {:>10}",
                    row.n, row.count, row.ratio, row.ratio_decimal, row.limit, row.gap_decimal
                );
                if let Some(v) = row.exhaustive {
                    let _ = write!(out, " exhaustive={v}");
                }
                out.push('\n');
            }
            out
        }
    })
}
