use std::io::Read;
use std::path::{Path, PathBuf};

use shellar_core::complex::{clique_complex, Face, SimplicialComplex};
use shellar_core::graph::Graph;
use shellar_core::graph6::parse_graph6_stream;

use crate::error::{domain, CliError};

pub enum Loaded {
    Complex(SimplicialComplex),
    Graphs(Vec<Graph>),
}

pub fn read_text(path: Option<&PathBuf>) -> Result<String, CliError> {
    match path {
        Some(p) if p.as_os_str() != "-" => {
            std::fs::read_to_string(p).map_err(|e| CliError::Usage(format!("--in {}: {e}", p.display())))
        }
        _ => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| CliError::Usage(format!("stdin: {e}")))?;
            Ok(s)
        }
    }
}

pub fn graphs(text: &str) -> Result<Vec<Graph>, CliError> {
    parse_graph6_stream(text).map_err(|(line, e)| CliError::Domain(format!("graph6 line {line}: {e}")))
}

/// A JSON object is a complex; a first line of integers is a facet list;
/// anything else is read as graph6 (whose alphabet has no digits or spaces).
pub fn load(path: Option<&PathBuf>) -> Result<Loaded, CliError> {
    let text = read_text(path)?;
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .ok_or_else(|| CliError::Domain("input is empty".into()))?;
    if first.starts_with('{') {
        return SimplicialComplex::from_json(&text).map(Loaded::Complex).map_err(domain);
    }
    if first.split_whitespace().all(|t| t.bytes().all(|b| b.is_ascii_digit())) {
        return SimplicialComplex::parse_text(&text).map(Loaded::Complex).map_err(domain);
    }
    graphs(&text).map(Loaded::Graphs)
}

/// A complex, or the clique complex of a single input graph.
pub fn load_complex(path: Option<&PathBuf>) -> Result<SimplicialComplex, CliError> {
    match load(path)? {
        Loaded::Complex(c) => Ok(c),
        Loaded::Graphs(gs) if gs.len() == 1 => Ok(clique_complex(&gs[0])),
        Loaded::Graphs(gs) => Err(CliError::Usage(format!("expected one complex or graph, got {} graphs", gs.len()))),
    }
}

/// One facet per line, vertices separated by spaces or commas.
pub fn load_order(path: &Path) -> Result<Vec<Face>, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("--order {}: {e}", path.display())))?;
    let mut order = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut face = Face::new();
        for tok in line.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
            let v: usize = tok
                .parse()
                .map_err(|_| CliError::Domain(format!("order line {}: not a vertex: {tok:?}", i + 1)))?;
            face.insert(v);
        }
        order.push(face);
    }
    Ok(order)
}
