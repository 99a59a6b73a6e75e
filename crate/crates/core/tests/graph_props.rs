use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use probe_core::graph::{
    canonical_code, emit_graph6, enumerate_graphs, enumerate_trees, has_k4_or_k23_topological_minor, is_outerplanar,
    parse_graph6, Graph,
};

fn random_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::empty(n);
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        g.add_edge(u, v);
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

#[test]
fn isomorphism_class_counts() {
    let all = [1, 2, 4, 11, 34, 156, 1044, 12346];
    let connected = [1, 1, 2, 6, 21, 112, 853, 11117];
    for n in 1..=8 {
        assert_eq!(enumerate_graphs(n, false).unwrap().count(), all[n - 1], "all graphs on {n}");
        assert_eq!(enumerate_graphs(n, true).unwrap().count(), connected[n - 1], "connected graphs on {n}");
    }
}

#[test]
fn tree_counts() {
    let trees = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106];
    for n in 1..=10 {
        let found: Vec<Graph> = enumerate_trees(n).unwrap().collect();
        assert_eq!(found.len(), trees[n - 1], "trees on {n}");
        assert!(found.iter().all(Graph::is_tree));
    }
}

#[test]
fn outerplanar_iff_no_forbidden_minor() {
    for n in 1..=7 {
        for g in enumerate_graphs(n, false).unwrap() {
            assert_eq!(is_outerplanar(&g).outerplanar, !has_k4_or_k23_topological_minor(&g), "{}", emit_graph6(&g));
        }
    }
}

proptest! {
    #[test]
    fn graph6_roundtrip(g in random_graph(12)) {
        prop_assert_eq!(parse_graph6(&emit_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn canonical_code_ignores_labels(g in random_graph(8), seed in any::<u64>()) {
        let mut perm: Vec<usize> = (0..g.n()).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert_eq!(canonical_code(&g), canonical_code(&g.relabeled(&perm)));
    }

    #[test]
    fn complement_is_an_involution(g in random_graph(10)) {
        prop_assert_eq!(g.complement().complement(), g.clone());
        prop_assert_eq!(g.edge_count() + g.complement().edge_count(), g.n() * (g.n() - 1) / 2);
    }
}
