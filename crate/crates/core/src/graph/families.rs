//! Named graph families used throughout tests and scans.

use super::Graph;

pub fn path(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for v in 1..n {
        g.add_edge(v - 1, v);
    }
    g
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    let mut g = path(n);
    g.add_edge(n - 1, 0);
    g
}

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    g
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::empty(a).join(&Graph::empty(b))
}

/// `K_{1,leaves}` with centre 0.
pub fn star(leaves: usize) -> Graph {
    complete_bipartite(1, leaves)
}

/// Hub `0` joined to a cycle on `1..=rim`.
pub fn wheel(rim: usize) -> Graph {
    let mut g = Graph::empty(1).disjoint_union(&cycle(rim));
    for v in 1..=rim {
        g.add_edge(0, v);
    }
    g
}

/// Triangle `0,1,2` with a pendant vertex `3` at `2`.
///
/// With labels shifted by one this is the paw on `1..4` with edges 12, 13, 23, 34.
pub fn paw() -> Graph {
    Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap()
}

/// Vertex `0` with legs of the given lengths; legs are labeled consecutively.
pub fn spider(legs: &[usize]) -> Graph {
    let n = 1 + legs.iter().sum::<usize>();
    let mut g = Graph::empty(n);
    let mut next = 1;
    for &len in legs {
        let mut prev = 0;
        for _ in 0..len {
            g.add_edge(prev, next);
            prev = next;
            next += 1;
        }
    }
    g
}
