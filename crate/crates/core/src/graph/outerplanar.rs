//! Outerplanarity by Hamiltonian cycles of blocks.
//!
//! A 2-connected graph is outerplanar exactly when it has a Hamiltonian cycle
//! whose chords pairwise do not cross; a graph is outerplanar exactly when
//! every block is. This route is independent of the forbidden-subdivision
//! search in [`super::minor`], and the two are cross-checked in the tests.

use serde::Serialize;

use super::{Graph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Outerplanarity {
    pub outerplanar: bool,
    /// Outer-cycle order of `G[core]`, present when the graph is outerplanar
    /// and its core induces a 2-connected graph.
    pub outer_cycle: Option<Vec<usize>>,
}

/// Vertex sets of the blocks of `g` (bridges give 2-vertex blocks; isolated
/// vertices give none).
pub fn blocks(g: &Graph) -> Vec<VertexSet> {
    struct State<'a> {
        g: &'a Graph,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(usize, usize)>,
        out: Vec<VertexSet>,
    }
    fn dfs(st: &mut State, u: usize, parent: Option<usize>) {
        st.time += 1;
        st.disc[u] = st.time;
        st.low[u] = st.time;
        for v in st.g.neighbors(u).iter() {
            if st.disc[v] == 0 {
                st.stack.push((u, v));
                dfs(st, v, Some(u));
                st.low[u] = st.low[u].min(st.low[v]);
                if st.low[v] >= st.disc[u] {
                    let mut block = VertexSet::EMPTY;
                    while let Some((a, b)) = st.stack.pop() {
                        block.insert(a);
                        block.insert(b);
                        if (a, b) == (u, v) {
                            break;
                        }
                    }
                    st.out.push(block);
                }
            } else if Some(v) != parent && st.disc[v] < st.disc[u] {
                st.stack.push((u, v));
                st.low[u] = st.low[u].min(st.disc[v]);
            }
        }
    }
    let mut st = State { g, disc: vec![0; g.n()], low: vec![0; g.n()], time: 0, stack: Vec::new(), out: Vec::new() };
    for v in 0..g.n() {
        if st.disc[v] == 0 {
            dfs(&mut st, v, None);
        }
    }
    st.out.sort();
    st.out
}

fn chords_cross(pos: &[usize], a: (usize, usize), b: (usize, usize)) -> bool {
    let (a0, a1) = (pos[a.0].min(pos[a.1]), pos[a.0].max(pos[a.1]));
    let (b0, b1) = (pos[b.0].min(pos[b.1]), pos[b.0].max(pos[b.1]));
    (a0 < b0 && b0 < a1 && a1 < b1) || (b0 < a0 && a0 < b1 && b1 < a1)
}

fn non_crossing(g: &Graph, block: VertexSet, cycle: &[usize]) -> bool {
    let mut pos = vec![usize::MAX; g.n()];
    for (i, &v) in cycle.iter().enumerate() {
        pos[v] = i;
    }
    let k = cycle.len();
    let on_cycle = |u: usize, v: usize| {
        let d = pos[u].abs_diff(pos[v]);
        d == 1 || d == k - 1
    };
    let chords: Vec<(usize, usize)> =
        g.edges().into_iter().filter(|&(u, v)| block.contains(u) && block.contains(v) && !on_cycle(u, v)).collect();
    chords.iter().enumerate().all(|(i, &c)| chords[i + 1..].iter().all(|&d| !chords_cross(&pos, c, d)))
}

/// First Hamiltonian cycle of `G[block]` with non-crossing chords, starting at
/// the lowest vertex and visiting its smaller cycle-neighbour second.
fn outer_hamiltonian_cycle(g: &Graph, block: VertexSet) -> Option<Vec<usize>> {
    let start = block.first()?;
    let k = block.len();
    if k < 3 || g.edges_within(block) > 2 * k - 3 {
        return None;
    }
    let mut path = vec![start];
    fn extend(g: &Graph, block: VertexSet, path: &mut Vec<usize>, seen: VertexSet) -> Option<Vec<usize>> {
        let last = *path.last().unwrap();
        if path.len() == block.len() {
            let start = path[0];
            if g.has_edge(last, start) && path[1] < last && non_crossing(g, block, path) {
                return Some(path.clone());
            }
            return None;
        }
        for v in (g.neighbors(last) & (block - seen)).iter() {
            path.push(v);
            if let Some(c) = extend(g, block, path, seen.with(v)) {
                return Some(c);
            }
            path.pop();
        }
        None
    }
    extend(g, block, &mut path, VertexSet::singleton(start))
}

pub fn is_outerplanar(g: &Graph) -> Outerplanarity {
    let bs = blocks(g);
    let outerplanar = bs.iter().all(|&b| b.len() <= 2 || outer_hamiltonian_cycle(g, b).is_some());
    let outer_cycle = if outerplanar { outer_cycle(g) } else { None };
    Outerplanarity { outerplanar, outer_cycle }
}

/// The outer-cycle of `G[core]` when the core is a single outerplanar block.
///
/// Normalized to start at the lowest label and continue towards its smaller
/// cycle neighbour.
pub fn outer_cycle(g: &Graph) -> Option<Vec<usize>> {
    let core = g.core_vertices();
    let bs: Vec<VertexSet> = blocks(g).into_iter().filter(|b| b.len() >= 3).collect();
    match bs.as_slice() {
        [b] if *b == core => outer_hamiltonian_cycle(g, core),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn block_decomposition() {
        assert_eq!(blocks(&paw()), vec![[0, 1, 2].iter().collect(), [2, 3].iter().collect()]);
        assert_eq!(blocks(&path(4)).len(), 3);
        assert_eq!(blocks(&cycle(5)), vec![cycle(5).vertices()]);
        assert!(blocks(&Graph::empty(3)).is_empty());
    }

    #[test]
    fn examples() {
        assert!(!is_outerplanar(&complete(4)).outerplanar);
        assert!(!is_outerplanar(&complete_bipartite(2, 3)).outerplanar);
        let g = cycle(6).with_edge(0, 3);
        let op = is_outerplanar(&g);
        assert!(op.outerplanar);
        assert_eq!(op.outer_cycle, Some(vec![0, 1, 2, 3, 4, 5]));
        let op = is_outerplanar(&paw());
        assert_eq!(op.outer_cycle, Some(vec![0, 1, 2]));
        assert_eq!(is_outerplanar(&path(5)).outer_cycle, None);
    }

    #[test]
    fn two_cycles_joined_by_a_bridge_have_no_outer_cycle() {
        let mut g = cycle(3).disjoint_union(&cycle(3));
        g.add_edge(0, 3);
        let op = is_outerplanar(&g);
        assert!(op.outerplanar);
        assert_eq!(op.outer_cycle, None);
    }
}
