//! Exhaustive search for a subdivision of `K4` or `K_{2,3}` as a subgraph.
//!
//! Branch vertices are chosen outright; the six branch paths are routed one at
//! a time through vertices not yet used, backtracking over every simple path.
//! Exponential, but fine at desk scale (`n <= 12`).

use super::{subsets_of_size, Graph, VertexSet};

/// Internally disjoint paths realizing the given branch pairs. Internal
/// vertices may not touch `blocked` (the branch vertices) or earlier paths.
fn route(g: &Graph, pairs: &[(usize, usize)], blocked: VertexSet, used: VertexSet) -> bool {
    let Some(&(s, t)) = pairs.first() else {
        return true;
    };
    let rest = &pairs[1..];
    if g.has_edge(s, t) && route(g, rest, blocked, used) {
        return true;
    }
    let free = g.vertices() - blocked - used;
    // DFS over simple paths s -> ... -> t with internal vertices in `free`
    let mut stack: Vec<(usize, VertexSet)> = Vec::new();
    for v in (g.neighbors(s) & free).iter() {
        stack.push((v, VertexSet::singleton(v)));
    }
    while let Some((v, internal)) = stack.pop() {
        if g.has_edge(v, t) && route(g, rest, blocked, used | internal) {
            return true;
        }
        for w in (g.neighbors(v) & (free - internal)).iter() {
            stack.push((w, internal.with(w)));
        }
    }
    false
}

fn has_k4_subdivision(g: &Graph) -> bool {
    let hubs: VertexSet = (0..g.n()).filter(|&v| g.degree(v) >= 3).collect();
    if hubs.len() < 4 {
        return false;
    }
    subsets_of_size(g.n(), 4).filter(|b| b.is_subset(hubs)).any(|b| {
        let v = b.to_vec();
        let pairs = [(v[0], v[1]), (v[2], v[3]), (v[0], v[2]), (v[1], v[3]), (v[0], v[3]), (v[1], v[2])];
        route(g, &pairs, b, VertexSet::EMPTY)
    })
}

fn has_k23_subdivision(g: &Graph) -> bool {
    let hubs: VertexSet = (0..g.n()).filter(|&v| g.degree(v) >= 3).collect();
    let mids: VertexSet = (0..g.n()).filter(|&v| g.degree(v) >= 2).collect();
    for pair in subsets_of_size(g.n(), 2).filter(|p| p.is_subset(hubs)) {
        let ab = pair.to_vec();
        for trio in subsets_of_size(g.n(), 3).filter(|t| t.is_subset(mids - pair)) {
            let cde = trio.to_vec();
            let pairs: Vec<(usize, usize)> = cde.iter().flat_map(|&c| [(ab[0], c), (ab[1], c)]).collect();
            if route(g, &pairs, pair | trio, VertexSet::EMPTY) {
                return true;
            }
        }
    }
    false
}

pub fn has_k4_or_k23_topological_minor(g: &Graph) -> bool {
    has_k4_subdivision(g) || has_k23_subdivision(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn forbidden_graphs_themselves() {
        assert!(has_k4_or_k23_topological_minor(&complete(4)));
        assert!(has_k4_or_k23_topological_minor(&complete_bipartite(2, 3)));
        assert!(!has_k4_or_k23_topological_minor(&complete(3)));
    }

    #[test]
    fn trees_and_cycles_are_clean() {
        for g in [path(7), star(5), spider(&[2, 2, 2]), cycle(8)] {
            assert!(!has_k4_or_k23_topological_minor(&g));
        }
    }

    #[test]
    fn wheel_contains_k4_subdivision() {
        // hub plus rim vertices 1, 2, 4 with 2-3-4 subdividing one rim edge
        assert!(has_k4_subdivision(&wheel(5)));
    }

    #[test]
    fn subdivided_k23() {
        // theta graph with three paths of length 3 between 0 and 1
        let g =
            Graph::from_edges(8, &[(0, 2), (2, 3), (3, 1), (0, 4), (4, 5), (5, 1), (0, 6), (6, 7), (7, 1)]).unwrap();
        assert!(has_k23_subdivision(&g));
        assert!(!has_k4_subdivision(&g));
    }
}
