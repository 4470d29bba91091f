//! graph6 interchange (single-byte size header, so at most 62 vertices).
//!
//! The body lists the upper triangle of the adjacency matrix column by
//! column (`x(0,1) x(0,2) x(1,2) x(0,3) ...`), packed big-endian into
//! 6-bit groups, each stored as `group + 63`. graph6 numbers vertices from
//! 0; vertex `i` becomes label `i + 1` here.

use crate::error::Graph6Error;
use crate::graph::Graph;

pub const MAX_GRAPH6_VERTICES: usize = 62;
const HEADER: &str = ">>graph6<<";

pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let line = line.trim_end_matches(['\n', '\r']);
    let body = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = body.as_bytes();
    let (&first, data) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    check_byte(0, first)?;
    if first == 126 {
        return Err(Graph6Error::UnsupportedSize);
    }
    let n = (first - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    for (k, &b) in data.iter().enumerate() {
        check_byte(k + 1, b)?;
    }
    if data.len() < expected {
        return Err(Graph6Error::Truncated { expected, found: data.len() });
    }
    if data.len() > expected {
        return Err(Graph6Error::TrailingData { expected, found: data.len() });
    }
    let pad = expected * 6 - bits;
    if pad > 0 && (data[expected - 1] - 63) & ((1 << pad) - 1) != 0 {
        return Err(Graph6Error::NonZeroPadding);
    }

    let mut g = Graph::new(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let group = data[k / 6] - 63;
            if group >> (5 - k % 6) & 1 == 1 {
                g.link(i + 1, j + 1);
            }
            k += 1;
        }
    }
    Ok(g)
}

fn check_byte(offset: usize, byte: u8) -> Result<(), Graph6Error> {
    if (63..=126).contains(&byte) {
        Ok(())
    } else {
        Err(Graph6Error::InvalidByte { offset, byte })
    }
}

pub fn emit_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.n();
    if n > MAX_GRAPH6_VERTICES {
        return Err(Graph6Error::TooLarge(n));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let mut data = vec![0u8; bits.div_ceil(6)];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(i + 1, j + 1) {
                data[k / 6] |= 1 << (5 - k % 6);
            }
            k += 1;
        }
    }
    let mut out = String::with_capacity(1 + data.len());
    out.push((n as u8 + 63) as char);
    out.extend(data.into_iter().map(|b| (b + 63) as char));
    Ok(out)
}

/// Parses one graph per non-empty line.
pub fn parse_graph6_stream(text: &str) -> Result<Vec<Graph>, (usize, Graph6Error)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| parse_graph6(l.trim()).map_err(|e| (i + 1, e)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vertex_and_empty() {
        assert_eq!(emit_graph6(&Graph::new(1)).unwrap(), "@");
        assert_eq!(emit_graph6(&Graph::new(0)).unwrap(), "?");
        assert_eq!(parse_graph6("@").unwrap(), Graph::new(1));
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
    }

    #[test]
    fn star_example() {
        let g = parse_graph6("D?{").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(1, 5), (2, 5), (3, 5), (4, 5)]);
        assert_eq!(emit_graph6(&g).unwrap(), "D?{");
        assert_eq!(parse_graph6(">>graph6<<D?{\n").unwrap(), g);
    }

    #[test]
    fn distinct_errors() {
        assert_eq!(parse_graph6("D?"), Err(Graph6Error::Truncated { expected: 2, found: 1 }));
        assert_eq!(parse_graph6("D?{?"), Err(Graph6Error::TrailingData { expected: 2, found: 3 }));
        assert_eq!(parse_graph6("D? "), Err(Graph6Error::InvalidByte { offset: 2, byte: b' ' }));
        assert_eq!(parse_graph6("~??"), Err(Graph6Error::UnsupportedSize));
        // n = 5 has 10 bits, so the last two bits of the second byte are padding
        assert_eq!(parse_graph6("D?@"), Err(Graph6Error::NonZeroPadding));
        assert_eq!(emit_graph6(&Graph::new(63)), Err(Graph6Error::TooLarge(63)));
    }

    #[test]
    fn largest_supported() {
        let g = crate::generators::cir_star(62, 4);
        let s = emit_graph6(&g).unwrap();
        assert_eq!(s.len(), 1 + (62 * 61 / 2usize).div_ceil(6));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }
}
