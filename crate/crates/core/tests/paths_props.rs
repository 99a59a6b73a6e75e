use proptest::prelude::*;

use probe_core::graph::{emit_graph6, enumerate_graphs, is_outerplanar, Graph, VertexSet};
use probe_core::paths::{all_partitions, certificate_valid, core_structure, find_certificate_bruteforce, recognize};

/// Random sparse graphs: a random spanning path or cycle plus a few chords,
/// so that parallel-path graphs show up often.
fn sparse_graph() -> impl Strategy<Value = Graph> {
    (8usize..=9)
        .prop_flat_map(|n| {
            (Just(n), any::<bool>(), prop::collection::vec((0..n, 0..n), 0..4), prop::collection::vec(0..n, n))
        })
        .prop_map(|(n, close, chords, order)| {
            // permutation from the sampled keys
            let mut perm: Vec<usize> = (0..n).collect();
            perm.sort_by_key(|&i| (order[i], i));
            let mut g = Graph::empty(n);
            for w in perm.windows(2) {
                g.add_edge(w[0], w[1]);
            }
            if close {
                g.add_edge(perm[0], perm[n - 1]);
            }
            for (u, v) in chords {
                if u != v {
                    g.add_edge(u, v);
                }
            }
            g
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn structural_matches_bruteforce_on_larger_graphs(g in sparse_graph()) {
        let r = recognize(&g);
        prop_assert_eq!(r.two_parallel_paths, find_certificate_bruteforce(&g).unwrap().is_some(), "{}", emit_graph6(&g));
        if let Some(cert) = &r.certificate {
            prop_assert!(certificate_valid(&g, cert));
        }
        if r.two_parallel_paths {
            prop_assert!(is_outerplanar(&g).outerplanar);
        }
    }
}

fn arc_sets(outer: &[usize]) -> Vec<VertexSet> {
    let r = outer.len();
    let mut out = Vec::new();
    for start in 0..r {
        for len in 0..=r {
            out.push((0..len).map(|i| outer[(start + i) % r]).collect());
        }
    }
    out
}

#[test]
fn partition_meets_core_in_arcs() {
    for n in 3..=7 {
        for g in enumerate_graphs(n, true).unwrap() {
            if g.is_forest() || !recognize(&g).two_parallel_paths {
                continue;
            }
            let cs = core_structure(&g).unwrap();
            let arcs = arc_sets(&cs.outer_cycle);
            let core = cs.core();
            for cert in all_partitions(&g).unwrap() {
                let (p, q) = cert.vertex_sets();
                assert!(arcs.contains(&(p & core)) && arcs.contains(&(q & core)), "{}", emit_graph6(&g));
            }
            if !cs.is_cycle_core() {
                assert_eq!(cs.one_interior_cycles.len(), 2, "{}", emit_graph6(&g));
            }
        }
    }
}
