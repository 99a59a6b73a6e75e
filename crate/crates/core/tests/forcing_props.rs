use proptest::prelude::*;

use probe_core::forcing::{
    forcing_chains, probe_closure, probe_closure_set, probe_zero_forcing_number, reversal, standard_closure_set,
    zero_forcing_number,
};
use probe_core::graph::{Graph, ProbeGraph, VertexSet};
use probe_core::witness::nullity_witness;

/// A random graph with a random independent set (greedy over a random mask).
fn probe_graph(max_n: usize) -> impl Strategy<Value = ProbeGraph> {
    (2..=max_n).prop_flat_map(|n| {
        (prop::collection::vec(any::<bool>(), n * (n - 1) / 2), any::<u32>()).prop_map(move |(bits, mask)| {
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
            let mut nonprobes = VertexSet::EMPTY;
            for v in 0..n {
                if mask >> v & 1 == 1 && (g.neighbors(v) & nonprobes).is_empty() {
                    nonprobes.insert(v);
                }
            }
            ProbeGraph::new(g, nonprobes).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn closure_is_monotone_and_idempotent(pg in probe_graph(9), a in any::<u32>(), b in any::<u32>()) {
        let small = VertexSet::from_iter((0..pg.n()).filter(|&v| a >> v & 1 == 1));
        let large = small | VertexSet::from_iter((0..pg.n()).filter(|&v| b >> v & 1 == 1));
        let cs = probe_closure_set(&pg, small);
        prop_assert!(cs.is_subset(probe_closure_set(&pg, large)));
        prop_assert_eq!(probe_closure_set(&pg, cs), cs);
        prop_assert!(small.is_subset(cs));
    }

    #[test]
    fn probe_rule_is_weaker_than_standard(pg in probe_graph(9), a in any::<u32>()) {
        let blue = VertexSet::from_iter((0..pg.n()).filter(|&v| a >> v & 1 == 1));
        prop_assert!(probe_closure_set(&pg, blue).is_subset(standard_closure_set(pg.graph(), blue)));
        prop_assert!(probe_closure_set(&pg, blue).is_subset(standard_closure_set(&pg.clique_completion(), blue)));
    }

    #[test]
    fn forcing_number_bounds(pg in probe_graph(8)) {
        let (z, witness) = probe_zero_forcing_number(&pg).unwrap();
        prop_assert_eq!(witness.len(), z);
        prop_assert!(z >= zero_forcing_number(pg.graph()).unwrap().0);
        // Z(G^N) >= M(G^N) >= |N|, with the witness matrix realizing |N|
        prop_assert!(z >= pg.nonprobes().len());
        prop_assert!(nullity_witness(&pg).nullity().unwrap() <= z);
    }

    #[test]
    fn chains_partition_the_vertices(pg in probe_graph(8)) {
        let (_, witness) = probe_zero_forcing_number(&pg).unwrap();
        let state = probe_closure(&pg, witness);
        let chains = forcing_chains(&state, witness, pg.n()).unwrap();
        let mut seen = VertexSet::EMPTY;
        for c in &chains.chains {
            for &v in c {
                prop_assert!(!seen.contains(v));
                seen.insert(v);
            }
        }
        prop_assert_eq!(seen, pg.graph().vertices());
        prop_assert_eq!(reversal(&chains).len(), witness.len());
    }
}
