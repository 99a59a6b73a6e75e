//! Labeled simple graphs on at most 32 vertices, probe graphs, and the
//! structural queries shared by the rest of the crate.

mod alpha;
mod enumerate;
pub mod families;
mod graph6;
mod minor;
mod outerplanar;
mod set;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use alpha::{make_alpha_graph, AlphaParams};
pub use enumerate::{
    canonical_code, canonical_form, canonical_graph, enumerate_graphs, enumerate_trees, is_isomorphic, GraphStream,
    MAX_ENUMERATION_N, MAX_TREE_N,
};
pub use graph6::{emit_graph6, parse_graph6};
pub use minor::has_k4_or_k23_topological_minor;
pub use outerplanar::{is_outerplanar, outer_cycle, Outerplanarity};
pub use set::{subsets_of_size, VertexSet, MAX_VERTICES};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graphs are limited to {MAX_VERTICES} vertices, got {0}")]
    TooManyVertices(usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("non-probe set must be independent (edge {0}-{1})")]
    NonprobesNotIndependent(usize, usize),
    #[error("bad vertex list {0:?}")]
    BadVertexList(String),
    #[error("enumeration is limited to n <= {limit}, got {n}")]
    EnumerationLimit { n: usize, limit: usize },
    #[error("invalid alpha-graph parameters: {0}")]
    AlphaParams(String),
}

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "graph too large: {n}");
        Graph { n, adj: vec![VertexSet::EMPTY; n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.add_edge(u, v);
        Ok(())
    }

    /// Panics on out-of-range labels or loops; use [`Graph::try_add_edge`] for input data.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n && u != v, "bad edge {u}-{v}");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u].remove(v);
        self.adj[v].remove(u);
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.add_edge(u, v);
        g
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.remove_edge(u, v);
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    /// Unordered non-adjacent pairs `(u, v)`, `u < v`.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertices();
        let adj = (0..self.n).map(|v| (full - self.adj[v]).without(v)).collect();
        Graph { n: self.n, adj }
    }

    /// Subgraph induced by `s`, relabeled `0..|s|` in increasing label order.
    /// The returned map sends new labels to old ones.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
        if let Some(bad) = (s - self.vertices()).first() {
            return Err(GraphError::VertexOutOfRange { vertex: bad, n: self.n });
        }
        let map = s.to_vec();
        let mut g = Graph::empty(map.len());
        for (i, &u) in map.iter().enumerate() {
            for (j, &v) in map.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        Ok((g, map))
    }

    /// Number of edges with both ends in `s`.
    pub fn edges_within(&self, s: VertexSet) -> usize {
        s.iter().map(|v| (self.adj[v] & s).len()).sum::<usize>() / 2
    }

    pub fn is_independent_set(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v].is_disjoint(s))
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| s.without(v).is_subset(self.adj[v]))
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                next = next | (self.adj[v] & within);
            }
            frontier = next - seen;
            seen = seen | frontier;
        }
        seen
    }

    /// Connected components of `G[within]`, ordered by smallest vertex.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut left = within;
        let mut out = Vec::new();
        while let Some(v) = left.first() {
            let c = self.reach(v, within);
            out.push(c);
            left = left - c;
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.reach(0, self.vertices()) == self.vertices()
    }

    pub fn is_connected_within(&self, s: VertexSet) -> bool {
        match s.first() {
            None => true,
            Some(v) => self.reach(v, s) == s,
        }
    }

    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.components().len() == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.n > 0 && self.is_connected() && self.edge_count() + 1 == self.n
    }

    /// Vertex order of `G[s]` when it is an induced path (a single vertex counts).
    pub fn induced_path_order(&self, s: VertexSet) -> Option<Vec<usize>> {
        let k = s.len();
        if k == 0 {
            return None;
        }
        if self.edges_within(s) != k - 1 || !self.is_connected_within(s) {
            return None;
        }
        if s.iter().any(|v| (self.adj[v] & s).len() > 2) {
            return None;
        }
        let start = s.iter().find(|&v| (self.adj[v] & s).len() <= 1)?;
        let mut order = vec![start];
        let mut seen = VertexSet::singleton(start);
        let mut cur = start;
        while let Some(next) = (self.adj[cur] & (s - seen)).first() {
            order.push(next);
            seen.insert(next);
            cur = next;
        }
        Some(order)
    }

    pub fn is_path(&self) -> bool {
        self.n > 0 && self.induced_path_order(self.vertices()).is_some()
    }

    /// Whether `G[s]` is a cycle (at least three vertices, all of degree two, connected).
    pub fn induces_cycle(&self, s: VertexSet) -> bool {
        s.len() >= 3 && s.iter().all(|v| (self.adj[v] & s).len() == 2) && self.is_connected_within(s)
    }

    /// Vertices lying on at least one cycle: the endpoints of non-bridge edges.
    pub fn core_vertices(&self) -> VertexSet {
        let mut core = VertexSet::EMPTY;
        for (u, v) in self.edges() {
            if core.contains(u) && core.contains(v) {
                continue;
            }
            // uv lies on a cycle iff v is reachable from u without using uv
            let mut h = self.clone();
            h.remove_edge(u, v);
            if h.reach(u, self.vertices()).contains(v) {
                core.insert(u);
                core.insert(v);
            }
        }
        core
    }

    /// Whether `G - s` has at least two components.
    pub fn is_vertex_cut(&self, s: VertexSet) -> bool {
        self.components_within(self.vertices() - s).len() >= 2
    }

    /// Applies a relabeling: vertex `v` becomes `perm[v]`.
    pub fn relabeled(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// Disjoint union, `other` shifted to labels `n..n+m`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(u + self.n, v + self.n);
        }
        g
    }

    /// Join: disjoint union plus every edge between the two parts.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut g = self.disjoint_union(other);
        for u in 0..self.n {
            for v in 0..other.n {
                g.add_edge(u, self.n + v);
            }
        }
        g
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        GraphRepr { n: self.n, edges: self.edges() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = GraphRepr::deserialize(d)?;
        Graph::from_edges(r.n, &r.edges).map_err(serde::de::Error::custom)
    }
}

/// A graph together with an independent set `N` of non-probe vertices.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct ProbeGraph {
    graph: Graph,
    nonprobes: VertexSet,
}

impl ProbeGraph {
    pub fn new(graph: Graph, nonprobes: VertexSet) -> Result<Self, GraphError> {
        if let Some(bad) = (nonprobes - graph.vertices()).first() {
            return Err(GraphError::VertexOutOfRange { vertex: bad, n: graph.n() });
        }
        for u in nonprobes.iter() {
            if let Some(v) = (graph.neighbors(u) & nonprobes).first() {
                return Err(GraphError::NonprobesNotIndependent(u.min(v), u.max(v)));
            }
        }
        Ok(ProbeGraph { graph, nonprobes })
    }

    /// Probe graph with no non-probes.
    pub fn plain(graph: Graph) -> Self {
        ProbeGraph { graph, nonprobes: VertexSet::EMPTY }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn nonprobes(&self) -> VertexSet {
        self.nonprobes
    }

    pub fn probes(&self) -> VertexSet {
        self.graph.vertices() - self.nonprobes
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// Unordered pairs inside `N`, lexicographically sorted.
    pub fn addable_pairs(&self) -> Vec<(usize, usize)> {
        let ns = self.nonprobes.to_vec();
        let mut out = Vec::new();
        for (i, &u) in ns.iter().enumerate() {
            for &v in &ns[i + 1..] {
                out.push((u, v));
            }
        }
        out
    }

    /// Every graph obtained by adding a subset of the pairs inside `N`.
    ///
    /// Subsets are visited in binary counting order over [`Self::addable_pairs`],
    /// bit `i` selecting pair `i`, so the first completion is the graph itself.
    pub fn completions(&self) -> Completions<'_> {
        let pairs = self.addable_pairs();
        assert!(pairs.len() < 64, "too many non-probe pairs to enumerate");
        Completions { pg: self, total: 1u64 << pairs.len(), pairs, next: 0 }
    }

    /// The graph with all of `N` turned into a clique.
    pub fn clique_completion(&self) -> Graph {
        let mut g = self.graph.clone();
        for (u, v) in self.addable_pairs() {
            g.add_edge(u, v);
        }
        g
    }
}

/// Lazy stream of completions, see [`ProbeGraph::completions`].
pub struct Completions<'a> {
    pg: &'a ProbeGraph,
    pairs: Vec<(usize, usize)>,
    total: u64,
    next: u64,
}

impl Completions<'_> {
    pub fn total(&self) -> u64 {
        self.total
    }
}

impl Iterator for Completions<'_> {
    /// The completed graph and the added pairs.
    type Item = (Graph, Vec<(usize, usize)>);

    fn next(&mut self) -> Option<Self::Item> {
        if self.next >= self.total {
            return None;
        }
        let bits = self.next;
        self.next += 1;
        let mut g = self.pg.graph.clone();
        let mut added = Vec::new();
        for (i, &(u, v)) in self.pairs.iter().enumerate() {
            if bits >> i & 1 == 1 {
                g.add_edge(u, v);
                added.push((u, v));
            }
        }
        Some((g, added))
    }
}

/// Parses a comma-separated vertex list such as `"1,4"`; the empty string is the empty set.
pub fn parse_vertex_list(text: &str) -> Result<VertexSet, GraphError> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(VertexSet::EMPTY);
    }
    let mut s = VertexSet::EMPTY;
    for tok in text.split(',') {
        let v: usize = tok.trim().parse().map_err(|_| GraphError::BadVertexList(text.to_string()))?;
        if v >= MAX_VERTICES {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: MAX_VERTICES });
        }
        s.insert(v);
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::families::*;
    use super::*;

    fn vs(v: &[usize]) -> VertexSet {
        v.iter().collect()
    }

    #[test]
    fn rejects_loops_and_range() {
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert!(matches!(Graph::from_edges(3, &[(0, 3)]), Err(GraphError::VertexOutOfRange { vertex: 3, .. })));
        let g = Graph::from_edges(3, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn complement_examples() {
        assert_eq!(complete(5).complement(), Graph::empty(5));
        assert!(is_isomorphic(&cycle(5).complement(), &cycle(5)));
        let expected = complete(2).disjoint_union(&complete(3));
        assert_eq!(complete_bipartite(2, 3).complement(), expected);
    }

    #[test]
    fn induced_subgraph_examples() {
        let (k2, map) = complete(4).induced_subgraph(vs(&[0, 1])).unwrap();
        assert_eq!(k2, complete(2));
        assert_eq!(map, vec![0, 1]);
        let (p3, _) = cycle(5).induced_subgraph(vs(&[0, 1, 2])).unwrap();
        assert_eq!(p3, path(3));
        // paw labels 1..4 are 0..3 here; {1,2,3} is the triangle
        let (k3, _) = paw().induced_subgraph(vs(&[0, 1, 2])).unwrap();
        assert_eq!(k3, complete(3));
        assert!(complete(3).induced_subgraph(vs(&[3])).is_err());
    }

    #[test]
    fn independence_examples() {
        assert!(paw().is_independent_set(VertexSet::EMPTY));
        assert!(!complete(3).is_independent_set(vs(&[0, 1])));
        assert!(paw().is_independent_set(vs(&[0, 3])));
        assert!(paw().is_independent_set(vs(&[1, 3])));
        assert!(!paw().is_independent_set(vs(&[2, 3])));
    }

    #[test]
    fn completions_examples() {
        let pg = ProbeGraph::new(paw(), vs(&[2])).unwrap();
        assert_eq!(pg.completions().count(), 1);
        let pg = ProbeGraph::new(paw(), vs(&[0, 3])).unwrap();
        let all: Vec<_> = pg.completions().collect();
        assert_eq!(all.len(), 2);
        assert_eq!(all[0].0, paw());
        assert_eq!(all[1].1, vec![(0, 3)]);
        assert!(is_isomorphic(&all[1].0, &complete(4).without_edge(1, 3)));
        let pg = ProbeGraph::new(path(4), vs(&[0, 2])).unwrap();
        let all: Vec<_> = pg.completions().map(|c| c.0).collect();
        assert_eq!(all, vec![path(4), path(4).with_edge(0, 2)]);
    }

    #[test]
    fn probe_graph_validation() {
        assert_eq!(ProbeGraph::new(paw(), vs(&[2, 3])).unwrap_err(), GraphError::NonprobesNotIndependent(2, 3));
        assert!(ProbeGraph::new(paw(), vs(&[7])).is_err());
    }

    #[test]
    fn core_vertex_examples() {
        assert!(star(4).core_vertices().is_empty());
        assert!(path(6).core_vertices().is_empty());
        let mut g = cycle(5).disjoint_union(&Graph::empty(1));
        g.add_edge(0, 5);
        assert_eq!(g.core_vertices(), vs(&[0, 1, 2, 3, 4]));
        assert_eq!(paw().core_vertices(), vs(&[0, 1, 2]));
    }

    #[test]
    fn path_order_and_cycles() {
        assert_eq!(path(4).induced_path_order(path(4).vertices()), Some(vec![0, 1, 2, 3]));
        assert_eq!(cycle(4).induced_path_order(cycle(4).vertices()), None);
        assert!(cycle(4).induces_cycle(cycle(4).vertices()));
        assert!(!paw().induces_cycle(paw().vertices()));
        assert!(Graph::empty(1).is_path());
    }

    #[test]
    fn vertex_list_parsing() {
        assert_eq!(parse_vertex_list("1, 4").unwrap(), vs(&[1, 4]));
        assert_eq!(parse_vertex_list("").unwrap(), VertexSet::EMPTY);
        assert!(parse_vertex_list("1;4").is_err());
    }
}
