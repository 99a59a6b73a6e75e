//! Isomorphism-class enumeration for small graphs.
//!
//! Canonical form: the lexicographically smallest upper-triangle adjacency
//! string over all relabelings that respect an equitable, degree-seeded
//! vertex partition. The partition is isomorphism invariant, so the minimum
//! over partition-respecting relabelings is as canonical as the minimum over
//! all `n!` of them, at a fraction of the cost.

use std::collections::{BTreeMap, HashSet};
use std::sync::OnceLock;

use super::{Graph, GraphError};

/// Largest `n` accepted by [`enumerate_graphs`].
pub const MAX_ENUMERATION_N: usize = 8;

/// Largest `n` accepted by [`enumerate_trees`].
pub const MAX_TREE_N: usize = 16;

/// Lazy stream of graphs.
pub type GraphStream = std::vec::IntoIter<Graph>;

fn code_under(g: &Graph, order: &[usize]) -> u128 {
    // bit order as in graph6: column j, rows 0..j
    let mut code = 0u128;
    for j in 1..order.len() {
        for i in 0..j {
            code = code << 1 | g.has_edge(order[i], order[j]) as u128;
        }
    }
    code
}

fn equitable_partition(g: &Graph) -> Vec<Vec<usize>> {
    let mut cells: Vec<Vec<usize>> = vec![(0..g.n()).collect()];
    loop {
        let cell_of: Vec<usize> = {
            let mut c = vec![0; g.n()];
            for (i, cell) in cells.iter().enumerate() {
                for &v in cell {
                    c[v] = i;
                }
            }
            c
        };
        let mut next = Vec::with_capacity(cells.len());
        for cell in &cells {
            let mut split: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
            for &v in cell {
                let mut key = vec![0; cells.len()];
                for u in g.neighbors(v).iter() {
                    key[cell_of[u]] += 1;
                }
                split.entry(key).or_default().push(v);
            }
            next.extend(split.into_values());
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        v.reverse();
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Canonical code and the vertex order realizing it (`order[new] = old`).
pub fn canonical_form(g: &Graph) -> (u128, Vec<usize>) {
    assert!(g.n() <= 16, "canonical codes are limited to 16 vertices");
    let mut cells = equitable_partition(g);
    for c in &mut cells {
        c.sort_unstable();
    }
    let mut best: Option<(u128, Vec<usize>)> = None;
    loop {
        let order: Vec<usize> = cells.iter().flatten().copied().collect();
        let code = code_under(g, &order);
        if best.as_ref().is_none_or(|(b, _)| code < *b) {
            best = Some((code, order));
        }
        // odometer over per-cell permutations
        let mut k = cells.len();
        loop {
            if k == 0 {
                return best.expect("at least one ordering");
            }
            k -= 1;
            if next_permutation(&mut cells[k]) {
                break;
            }
            // wrapped around: cell k is back to sorted order
        }
    }
}

/// Canonical adjacency code; equal codes on equal `n` mean isomorphic graphs.
pub fn canonical_code(g: &Graph) -> u128 {
    canonical_form(g).0
}

pub fn canonical_graph(g: &Graph) -> Graph {
    let (_, order) = canonical_form(g);
    let mut perm = vec![0; g.n()];
    for (new, &old) in order.iter().enumerate() {
        perm[old] = new;
    }
    g.relabeled(&perm)
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && canonical_code(a) == canonical_code(b)
}

fn classes() -> &'static Vec<Vec<Graph>> {
    static CLASSES: OnceLock<Vec<Vec<Graph>>> = OnceLock::new();
    CLASSES.get_or_init(|| {
        let mut by_n: Vec<Vec<Graph>> = vec![vec![Graph::empty(0)]];
        for n in 1..=MAX_ENUMERATION_N {
            let mut seen = HashSet::new();
            let mut reps = Vec::new();
            for base in &by_n[n - 1] {
                for nbrs in 0u32..1 << (n - 1) {
                    let mut g = base.disjoint_union(&Graph::empty(1));
                    for u in 0..n - 1 {
                        if nbrs >> u & 1 == 1 {
                            g.add_edge(u, n - 1);
                        }
                    }
                    let (code, _) = canonical_form(&g);
                    if seen.insert(code) {
                        reps.push((code, canonical_graph(&g)));
                    }
                }
            }
            reps.sort_by_key(|(code, _)| *code);
            by_n.push(reps.into_iter().map(|(_, g)| g).collect());
        }
        by_n
    })
}

/// One representative per isomorphism class of graphs on `n` vertices,
/// ordered by canonical code.
pub fn enumerate_graphs(n: usize, connected_only: bool) -> Result<GraphStream, GraphError> {
    if n > MAX_ENUMERATION_N {
        return Err(GraphError::EnumerationLimit { n, limit: MAX_ENUMERATION_N });
    }
    let all = &classes()[n];
    let out: Vec<Graph> = all.iter().filter(|g| !connected_only || g.is_connected()).cloned().collect();
    Ok(out.into_iter())
}

fn rooted_code(g: &Graph, v: usize, parent: Option<usize>) -> String {
    let mut kids: Vec<String> =
        g.neighbors(v).iter().filter(|&u| Some(u) != parent).map(|u| rooted_code(g, u, Some(v))).collect();
    kids.sort();
    format!("({})", kids.concat())
}

fn tree_code(g: &Graph) -> String {
    // peel leaves down to the centre
    let mut alive = g.vertices();
    while alive.len() > 2 {
        let leaves: Vec<usize> = alive.iter().filter(|&v| (g.neighbors(v) & alive).len() <= 1).collect();
        for v in leaves {
            alive.remove(v);
        }
    }
    alive.iter().map(|c| rooted_code(g, c, None)).min().unwrap_or_default()
}

/// One representative per isomorphism class of trees on `n` vertices.
pub fn enumerate_trees(n: usize) -> Result<GraphStream, GraphError> {
    if n > MAX_TREE_N {
        return Err(GraphError::EnumerationLimit { n, limit: MAX_TREE_N });
    }
    if n == 0 {
        return Ok(Vec::new().into_iter());
    }
    let mut level = vec![Graph::empty(1)];
    for m in 2..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for t in &level {
            for v in 0..m - 1 {
                let mut g = t.disjoint_union(&Graph::empty(1));
                g.add_edge(v, m - 1);
                if seen.insert(tree_code(&g)) {
                    next.push(g);
                }
            }
        }
        level = next;
    }
    Ok(level.into_iter())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn class_counts() {
        // OEIS A000088 and A001349
        let all = [1, 1, 2, 4, 11, 34, 156, 1044];
        let connected = [1, 1, 1, 2, 6, 21, 112, 853];
        for n in 0..=7 {
            assert_eq!(enumerate_graphs(n, false).unwrap().count(), all[n], "n={n}");
            if n > 0 {
                assert_eq!(enumerate_graphs(n, true).unwrap().count(), connected[n], "n={n}");
            }
        }
        assert!(enumerate_graphs(9, false).is_err());
    }

    #[test]
    fn tree_counts() {
        // OEIS A000055
        let counts = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106];
        for (i, &c) in counts.iter().enumerate() {
            let n = i + 1;
            let trees: Vec<Graph> = enumerate_trees(n).unwrap().collect();
            assert_eq!(trees.len(), c, "n={n}");
            assert!(trees.iter().all(|t| t.is_tree()));
        }
    }

    #[test]
    fn canonical_code_is_invariant() {
        let g = paw();
        for perm in [[1, 2, 3, 0], [3, 2, 1, 0], [2, 0, 3, 1]] {
            assert_eq!(canonical_code(&g.relabeled(&perm)), canonical_code(&g));
        }
        assert!(!is_isomorphic(&path(4), &star(3)));
        assert!(is_isomorphic(&cycle(5).complement(), &cycle(5)));
    }
}
