use shellar_core::complex::clique_complex;
use shellar_core::facets::{build_km_tree, facet_graph};
use shellar_core::graph::Graph;
use shellar_core::search::enumerate::{enumerate_graphs, EnumSpec};
use shellar_core::shelling::is_shellable;

/// Connected graphs with maximum degree 4 and no K_4 whose clique complex
/// is pure with triangle facets and shellable.
fn pure_triangle_complexes(n: usize) -> Vec<Graph> {
    enumerate_graphs(&EnumSpec::new(n).max_degree(4).max_clique(3))
        .unwrap()
        .graphs()
        .into_iter()
        .filter(|g| {
            let c = clique_complex(g);
            c.is_pure().unwrap() && c.omega().unwrap() == 3 && is_shellable(&c).is_some()
        })
        .collect()
}

#[test]
fn tree_degrees_and_round_trip() {
    let mut trees = 0;
    for n in 4..=9 {
        for g in pure_triangle_complexes(n) {
            let c = clique_complex(&g);
            let cert = is_shellable(&c).unwrap();
            if cert.structural_count() > 0 {
                continue;
            }
            let tree = build_km_tree(&c, 4, &cert.order).unwrap();
            trees += 1;
            assert_eq!(tree.to_complex(n).unwrap(), c);
            assert_eq!(tree.underlying_graph(), g);
            for (v, d) in tree.tree_degrees() {
                assert_eq!(d, g.degree(v), "vertex {v} of {g:?}");
            }
            assert!(tree.root_degree() >= 2);
            for node in &tree.nodes {
                if let (Some(p), Some(label)) = (node.parent, node.label) {
                    assert!(tree.nodes[p].facet.contains(label) && !node.facet.contains(label));
                }
            }
            let mut relabeled: Vec<usize> = tree.relabeling.values().copied().collect();
            relabeled.sort_unstable();
            assert_eq!(relabeled, (1..=n).collect::<Vec<_>>());
        }
    }
    assert!(trees > 0);
}

#[test]
fn facet_graph_degree_at_most_r() {
    for n in 3..=9 {
        for g in pure_triangle_complexes(n) {
            let fg = facet_graph(&clique_complex(&g), 3).unwrap();
            assert!(fg.max_degree() <= 4, "{g:?}");
        }
    }
}

#[test]
fn trees_with_r_plus_three_vertices_are_paths() {
    for g in pure_triangle_complexes(7) {
        let c = clique_complex(&g);
        let cert = is_shellable(&c).unwrap();
        if c.facet_count() != 5 || cert.structural_count() > 0 {
            continue;
        }
        assert!(build_km_tree(&c, 4, &cert.order).unwrap().is_path());
    }
}

#[test]
fn branch_lemma_on_six_vertices() {
    let mut checked = 0;
    for g in pure_triangle_complexes(6) {
        let c = clique_complex(&g);
        let cert = is_shellable(&c).unwrap();
        if cert.structural_count() > 0 {
            continue;
        }
        let tree = build_km_tree(&c, 4, &cert.order).unwrap();
        assert!(tree.check_branch_lemma(4).unwrap(), "{g:?}");
        checked += 1;
    }
    assert!(checked > 0);
}
