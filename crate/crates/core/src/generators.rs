//! Graph families that appear as extremal examples or counterexamples.

use crate::error::GraphError;
use crate::graph::Graph;
use crate::math::binomial;

/// Turán graph T(n, r): complete r-partite with parts as equal as possible.
/// Larger parts take the lowest labels.
pub fn turan(n: usize, r: usize) -> Result<Graph, GraphError> {
    if r == 0 {
        return Err(GraphError::InvalidParameter("Turán graph needs r >= 1".into()));
    }
    let mut part = vec![0usize; n + 1];
    let (base, extra) = (n / r, n % r);
    let mut v = 1;
    for p in 0..r {
        let size = base + usize::from(p < extra);
        for _ in 0..size {
            part[v] = p;
            v += 1;
        }
    }
    let mut g = Graph::new(n);
    for u in 1..=n {
        for w in u + 1..=n {
            if part[u] != part[w] {
                g.link(u, w);
            }
        }
    }
    Ok(g)
}

/// Colex graph C(n, m): the first `m` pairs of `[n]` in colexicographic
/// order, i.e. ordered by larger element and then smaller element.
pub fn colex(n: usize, m: usize) -> Result<Graph, GraphError> {
    let total = n * n.saturating_sub(1) / 2;
    if m > total {
        return Err(GraphError::InvalidParameter(format!(
            "colex graph C({n},{m}): only {total} pairs exist"
        )));
    }
    let mut g = Graph::new(n);
    let pairs = (2..=n).flat_map(|b| (1..b).map(move |a| (a, b)));
    for (a, b) in pairs.take(m) {
        g.link(a, b);
    }
    Ok(g)
}

/// `a` disjoint copies of K_{r+1} followed by one K_b.
pub fn union_of_cliques(a: usize, r: usize, b: usize) -> Result<Graph, GraphError> {
    if r == 0 {
        return Err(GraphError::InvalidParameter("union of cliques needs r >= 1".into()));
    }
    let mut g = Graph::new(0);
    for _ in 0..a {
        g = g.disjoint_union(&Graph::complete(r + 1));
    }
    Ok(g.disjoint_union(&Graph::complete(b)))
}

/// The union of cliques that is extremal under Δ <= r on `n` vertices:
/// `n = a(r+1) + b` with `0 <= b <= r`.
pub fn degree_extremal_union(n: usize, r: usize) -> Result<Graph, GraphError> {
    if r == 0 {
        return Err(GraphError::InvalidParameter("union of cliques needs r >= 1".into()));
    }
    union_of_cliques(n / (r + 1), r, n % (r + 1))
}

/// Circulant graph Cir(n, J) on Z_n, with residue `i` labeled `i + 1`.
pub fn circulant(n: usize, jumps: &[usize]) -> Result<Graph, GraphError> {
    let mut g = Graph::new(n);
    for &j in jumps {
        if j == 0 || j > n / 2 {
            return Err(GraphError::InvalidParameter(format!(
                "circulant jump {j} is outside 1..={}",
                n / 2
            )));
        }
        if 2 * j == n {
            return Err(GraphError::InvalidParameter(format!(
                "circulant jump {j} equals n/2; the graph would not be regular"
            )));
        }
        for i in 0..n {
            g.link(i + 1, (i + j) % n + 1);
        }
    }
    Ok(g)
}

/// Cir*(n, r): vertices `1..=n`, `x ~ y` iff `|x - y| <= floor(r/2)`.
pub fn cir_star(n: usize, r: usize) -> Graph {
    let reach = r / 2;
    let mut g = Graph::new(n);
    for x in 1..=n {
        for y in x + 1..=(x + reach).min(n) {
            g.link(x, y);
        }
    }
    g
}

/// True when Cir*(n, r) degenerates to a complete graph with no facet of
/// the nominal size `floor(r/2) + 1`.
pub fn cir_star_is_degenerate(n: usize, r: usize) -> bool {
    n <= r / 2
}

/// Cir**(n, r) for odd `r` and `n > r`: Cir*(n, r) plus the matching
/// `{i, i + ceil(n/2)}` for `i <= floor(n/2)`.
pub fn cir_star_star(n: usize, r: usize) -> Result<Graph, GraphError> {
    if r.is_multiple_of(2) {
        return Err(GraphError::InvalidParameter(format!("Cir** needs odd r (got {r})")));
    }
    if n <= r {
        return Err(GraphError::InvalidParameter(format!("Cir** needs n > r (got n={n}, r={r})")));
    }
    let mut g = cir_star(n, r);
    let shift = n.div_ceil(2);
    for i in 1..=n / 2 {
        g.link(i, i + shift);
    }
    Ok(g)
}

/// Upper bound on clique counts for Δ(G) <= r: `C(r, t-1) n` for cliques of
/// size `t`, or `2^r n` for all cliques when `t` is `None`.
pub fn folklore_bound(n: u64, r: u32, t: Option<u32>) -> u64 {
    match t {
        Some(0) => 1,
        Some(t) => binomial(r as i64, t as i64 - 1) * n,
        None => (1u64 << r) * n,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cliques::enumerate_cliques;

    #[test]
    fn turan_examples() {
        let t42 = turan(4, 2).unwrap();
        assert_eq!(t42.edge_count(), 4);
        assert_eq!(enumerate_cliques(&t42, None).count(3), 0);
        let t52 = turan(5, 2).unwrap();
        assert_eq!(t52.edge_count(), 6);
        assert_eq!(enumerate_cliques(&t52, None).total(), 11);
        // larger part on the low labels
        assert!(!t52.has_edge(1, 3) && t52.has_edge(3, 4));
        assert_eq!(turan(3, 3).unwrap(), Graph::complete(3));
        assert!(turan(3, 0).is_err());
    }

    #[test]
    fn colex_examples() {
        let c43 = colex(4, 3).unwrap();
        assert_eq!(c43.edges().collect::<Vec<_>>(), vec![(1, 2), (1, 3), (2, 3)]);
        assert_eq!(enumerate_cliques(&c43, None).count(3), 1);
        let c54 = colex(5, 4).unwrap();
        assert_eq!(c54.edges().collect::<Vec<_>>(), vec![(1, 2), (1, 3), (1, 4), (2, 3)]);
        let census = enumerate_cliques(&c54, None);
        assert_eq!((census.count(2), census.count(3)), (4, 1));
        assert_eq!(colex(6, 0).unwrap().edge_count(), 0);
        assert!(colex(4, 7).is_err());
    }

    #[test]
    fn union_examples() {
        let g = union_of_cliques(1, 2, 2).unwrap();
        assert_eq!((g.n(), g.edge_count()), (5, 4));
        assert_eq!(enumerate_cliques(&g, None).count(3), 1);
        assert_eq!(union_of_cliques(0, 4, 3).unwrap(), Graph::complete(3));
        assert_eq!(enumerate_cliques(&union_of_cliques(2, 2, 0).unwrap(), None).total(), 14);
    }

    #[test]
    fn circulant_examples() {
        let c = circulant(8, &[1, 2, 3]).unwrap();
        assert!((1..=8).all(|v| c.degree(v) == 6));
        let c5 = circulant(5, &[1]).unwrap();
        assert_eq!(c5.edge_count(), 5);
        assert!((1..=5).all(|v| c5.degree(v) == 2));
        assert!(circulant(8, &[4]).is_err());
        assert!(circulant(8, &[5]).is_err());
        assert!(circulant(8, &[0]).is_err());
    }

    #[test]
    fn cir_star_examples() {
        let g = cir_star(6, 4);
        assert_eq!((1..=6).map(|v| g.degree(v)).collect::<Vec<_>>(), vec![2, 3, 4, 4, 3, 2]);
        assert_eq!(g.max_degree(), 4);
        assert_eq!(cir_star(4, 2).edges().collect::<Vec<_>>(), vec![(1, 2), (2, 3), (3, 4)]);
        assert!(cir_star_is_degenerate(2, 4));
        assert!(!cir_star_is_degenerate(3, 4));
        assert_eq!(cir_star(2, 4), Graph::complete(2));
    }

    #[test]
    fn cir_star_star_examples() {
        let g = cir_star_star(8, 5).unwrap();
        for (u, v) in [(1, 5), (2, 6), (3, 7), (4, 8)] {
            assert!(g.has_edge(u, v));
        }
        assert_eq!(g.edge_count(), cir_star(8, 5).edge_count() + 4);
        assert_eq!(g.max_degree(), 5);
        let h = cir_star_star(6, 3).unwrap();
        assert_eq!(h.edge_count(), 5 + 3);
        assert!(h.has_edge(1, 4) && h.has_edge(2, 5) && h.has_edge(3, 6));
        assert!(cir_star_star(8, 4).is_err());
        assert!(cir_star_star(5, 5).is_err());
    }

    #[test]
    fn folklore_examples() {
        assert_eq!(folklore_bound(6, 4, Some(3)), 36);
        assert_eq!(folklore_bound(6, 4, None), 96);
        assert_eq!(folklore_bound(1, 0, Some(1)), 1);
    }
}
