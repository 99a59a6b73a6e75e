//! Zero forcing on graphs and probe graphs.
//!
//! Standard rule: a blue vertex with exactly one white neighbour forces it.
//! Probe rule: probes force as usual; a non-probe may force only once every
//! non-probe is blue. Ties are broken by applying the lowest-labelled
//! eligible forcer first, so force logs are reproducible.

mod structure;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{subsets_of_size, Graph, ProbeGraph, VertexSet};

pub use structure::{all_reversals, check_min_forcing_structure, VertexCutReport};

/// Largest vertex count accepted by the exhaustive forcing-number searches.
pub const FORCING_SEARCH_LIMIT: usize = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ForcingError {
    #[error("forcing search is limited to {limit} vertices, got {n}")]
    SearchLimit { n: usize, limit: usize },
    #[error("blue set {0} does not force the whole graph")]
    IncompleteClosure(VertexSet),
    #[error("probe forcing number {z} differs from |N| = {nonprobes}")]
    ForcingNumberNotN { z: usize, nonprobes: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Force {
    pub forcer: usize,
    pub forced: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ForcingState {
    pub blue: VertexSet,
    pub log: Vec<Force>,
}

/// Which rule set governs a closure.
#[derive(Clone, Copy)]
struct Rules<'a> {
    g: &'a Graph,
    /// Non-probes; they may force only once all of them are blue.
    nonprobes: VertexSet,
}

impl Rules<'_> {
    fn may_force(&self, v: usize, blue: VertexSet) -> bool {
        !self.nonprobes.contains(v) || self.nonprobes.is_subset(blue)
    }

    fn lowest_force(&self, blue: VertexSet) -> Option<Force> {
        blue.iter().filter(|&v| self.may_force(v, blue)).find_map(|v| {
            let white = self.g.neighbors(v) - blue;
            (white.len() == 1).then(|| Force { forcer: v, forced: white.first().unwrap() })
        })
    }

    fn run(&self, blue: VertexSet) -> ForcingState {
        let mut state = ForcingState { blue, log: Vec::new() };
        while let Some(f) = self.lowest_force(state.blue) {
            state.blue.insert(f.forced);
            state.log.push(f);
        }
        state
    }

    /// Final blue set only, without the tie-break bookkeeping.
    fn closure(&self, mut blue: VertexSet) -> VertexSet {
        loop {
            let before = blue;
            for v in before.iter() {
                if self.may_force(v, blue) {
                    let white = self.g.neighbors(v) - blue;
                    if white.len() == 1 {
                        blue = blue | white;
                    }
                }
            }
            if blue == before {
                return blue;
            }
        }
    }
}

pub fn standard_closure(g: &Graph, blue: VertexSet) -> ForcingState {
    Rules { g, nonprobes: VertexSet::EMPTY }.run(blue)
}

pub fn probe_closure(pg: &ProbeGraph, blue: VertexSet) -> ForcingState {
    Rules { g: pg.graph(), nonprobes: pg.nonprobes() }.run(blue)
}

/// Standard closure on the graph with all pairs inside `N` joined.
pub fn probe_closure_via_clique(pg: &ProbeGraph, blue: VertexSet) -> ForcingState {
    standard_closure(&pg.clique_completion(), blue)
}

/// Final blue set of the standard closure.
pub fn standard_closure_set(g: &Graph, blue: VertexSet) -> VertexSet {
    Rules { g, nonprobes: VertexSet::EMPTY }.closure(blue)
}

/// Final blue set of the probe closure.
pub fn probe_closure_set(pg: &ProbeGraph, blue: VertexSet) -> VertexSet {
    Rules { g: pg.graph(), nonprobes: pg.nonprobes() }.closure(blue)
}

pub fn is_probe_forcing_set(pg: &ProbeGraph, blue: VertexSet) -> bool {
    probe_closure_set(pg, blue) == pg.graph().vertices()
}

fn minimum_search(rules: Rules) -> Result<(usize, VertexSet), ForcingError> {
    let n = rules.g.n();
    if n > FORCING_SEARCH_LIMIT {
        return Err(ForcingError::SearchLimit { n, limit: FORCING_SEARCH_LIMIT });
    }
    let all = rules.g.vertices();
    for k in 0..=n {
        if let Some(s) = subsets_of_size(n, k).find(|&s| rules.closure(s) == all) {
            return Ok((k, s));
        }
    }
    unreachable!("the full vertex set always forces")
}

/// `Z(G)` with the lexicographically first minimum witness of each size.
pub fn zero_forcing_number(g: &Graph) -> Result<(usize, VertexSet), ForcingError> {
    minimum_search(Rules { g, nonprobes: VertexSet::EMPTY })
}

/// `Z(G^N)` under the probe rule.
pub fn probe_zero_forcing_number(pg: &ProbeGraph) -> Result<(usize, VertexSet), ForcingError> {
    minimum_search(Rules { g: pg.graph(), nonprobes: pg.nonprobes() })
}

/// Every minimum probe forcing set.
pub fn minimum_probe_forcing_sets(pg: &ProbeGraph) -> Result<Vec<VertexSet>, ForcingError> {
    let (z, _) = probe_zero_forcing_number(pg)?;
    Ok(subsets_of_size(pg.n(), z).filter(|&s| is_probe_forcing_set(pg, s)).collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ForcingChains {
    pub chains: Vec<Vec<usize>>,
}

/// Chains traced by the force log, one per initially blue vertex, in label
/// order of their first vertex.
pub fn forcing_chains(state: &ForcingState, initial: VertexSet, n: usize) -> Result<ForcingChains, ForcingError> {
    if state.blue != VertexSet::full(n) {
        return Err(ForcingError::IncompleteClosure(initial));
    }
    let mut next = vec![None; n];
    for f in &state.log {
        next[f.forcer] = Some(f.forced);
    }
    let chains = initial
        .iter()
        .map(|start| {
            let mut chain = vec![start];
            while let Some(v) = next[*chain.last().unwrap()] {
                chain.push(v);
            }
            chain
        })
        .collect();
    Ok(ForcingChains { chains })
}

/// Last vertex of each chain.
pub fn reversal(chains: &ForcingChains) -> VertexSet {
    chains.chains.iter().filter_map(|c| c.last().copied()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    fn probe(g: Graph, n: &[usize]) -> ProbeGraph {
        ProbeGraph::new(g, set(n)).unwrap()
    }

    #[test]
    fn standard_closure_examples() {
        let s = standard_closure(&path(4), set(&[0]));
        assert_eq!(s.blue, VertexSet::full(4));
        assert_eq!(s.log.len(), 3);
        assert_eq!(standard_closure(&cycle(4), set(&[0])).blue, set(&[0]));
        // paw labels 1,2 are 0,1 here
        assert_eq!(standard_closure(&paw(), set(&[0, 1])).blue, VertexSet::full(4));
    }

    #[test]
    fn probe_closure_examples() {
        // paw with N = {1,4} (0-indexed {0,3}), blue {2,3} (0-indexed {1,2})
        let pg = probe(paw(), &[0, 3]);
        assert_eq!(probe_closure(&pg, set(&[1, 2])).blue, VertexSet::full(4));
        assert_eq!(probe_closure_via_clique(&pg, set(&[1, 2])).blue, VertexSet::full(4));

        // P4 with N = {1,3}: probe 0 forces 1, then the non-probes are not all blue
        let pg = probe(path(4), &[1, 3]);
        let oracle = standard_closure(&path(4).with_edge(1, 3), set(&[0, 1])).blue;
        assert_eq!(probe_closure(&pg, set(&[0, 1])).blue, oracle);

        let pg = probe(cycle(5), &[0, 2]);
        assert_eq!(probe_closure(&pg, set(&[1])).blue, set(&[1]));
        assert_eq!(probe_closure_via_clique(&pg, set(&[1])).blue, set(&[1]));

        let pg = probe(paw(), &[0, 3]);
        assert_eq!(probe_closure(&pg, VertexSet::full(4)).blue, VertexSet::full(4));
    }

    #[test]
    fn clique_rule_can_force_between_nonprobes() {
        // the clique completion lets one non-probe force another, the probe rule does not
        let pg = probe(Graph::empty(2), &[0, 1]);
        assert_eq!(probe_closure(&pg, set(&[0])).blue, set(&[0]));
        assert_eq!(probe_closure_via_clique(&pg, set(&[0])).blue, set(&[0, 1]));
    }

    #[test]
    fn forcing_numbers() {
        for n in 1..8 {
            assert_eq!(zero_forcing_number(&path(n)).unwrap().0, 1);
        }
        assert_eq!(zero_forcing_number(&complete(4)).unwrap().0, 3);
        assert_eq!(zero_forcing_number(&paw()).unwrap().0, 2);
        let pg = probe(paw(), &[0, 3]);
        assert_eq!(probe_zero_forcing_number(&pg).unwrap().0, 2);
        assert!(is_probe_forcing_set(&pg, set(&[1, 2])));
        assert_eq!(probe_zero_forcing_number(&probe(path(6), &[1, 3, 5])).unwrap().0, 3);
        assert_eq!(probe_zero_forcing_number(&probe(cycle(6), &[0, 2, 4])).unwrap().0, 3);
        assert!(zero_forcing_number(&Graph::empty(13)).is_err());
    }

    #[test]
    fn chains_and_reversals() {
        let s = standard_closure(&path(4), set(&[0]));
        let c = forcing_chains(&s, set(&[0]), 4).unwrap();
        assert_eq!(c.chains, vec![vec![0, 1, 2, 3]]);
        assert_eq!(reversal(&c), set(&[3]));

        let b = set(&[0, 1]);
        let c = forcing_chains(&standard_closure(&paw(), b), b, 4).unwrap();
        assert_eq!(c.chains.len(), 2);
        assert_eq!(c.chains.iter().map(Vec::len).sum::<usize>(), 4);

        let all = VertexSet::full(4);
        let c = forcing_chains(&standard_closure(&paw(), all), all, 4).unwrap();
        assert_eq!(reversal(&c), all);

        let pg = probe(paw(), &[0, 3]);
        let b = set(&[1, 2]);
        let c = forcing_chains(&probe_closure(&pg, b), b, 4).unwrap();
        let rev = reversal(&c);
        assert_eq!(rev.len(), 2);
        assert!(is_probe_forcing_set(&pg, rev));

        assert!(forcing_chains(&standard_closure(&cycle(4), set(&[0])), set(&[0]), 4).is_err());
    }
}
