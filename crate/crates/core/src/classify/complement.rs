//! Graphs of minimum rank at most two, recognized through their complements:
//! `(K_{s₁} ∪ K_{s₂} ∪ K_{p₁,q₁} ∪ ⋯ ∪ K_{p_k,q_k}) ∨ K_r`.

use serde::Serialize;

use crate::graph::{Graph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComplementForm {
    /// The joined clique `K_r`.
    pub joined: VertexSet,
    /// At most two cliques `K_{s₁}, K_{s₂}`.
    pub cliques: Vec<VertexSet>,
    /// Complete bipartite pieces as their two sides.
    pub bipartite: Vec<(VertexSet, VertexSet)>,
}

/// Sides of `s` when `h[s]` is complete bipartite (one side may be empty
/// only for a single vertex).
fn complete_bipartite_sides(h: &Graph, s: VertexSet) -> Option<(VertexSet, VertexSet)> {
    let v = s.first()?;
    let b = h.neighbors(v) & s;
    let a = s - b;
    let complete = a.iter().all(|u| b.is_subset(h.neighbors(u)));
    (h.is_independent_set(a) && h.is_independent_set(b) && complete).then_some((a, b))
}

/// Structural recognizer. `g` has `mr(g) ≤ 2` iff its complement has the form.
pub fn complement_form_recognizer(g: &Graph) -> Option<ComplementForm> {
    let h = g.complement();
    let all = h.vertices();
    let universal: VertexSet = all.iter().filter(|&v| h.degree(v) + 1 == h.n()).collect();
    let mut strips: Vec<VertexSet> = universal.subsets().collect();
    strips.sort_by_key(|s| std::cmp::Reverse(s.len()));
    'strip: for joined in strips {
        let mut cliques = Vec::new();
        let mut bipartite = Vec::new();
        for comp in h.components_within(all - joined) {
            if let Some(sides) = complete_bipartite_sides(&h, comp) {
                bipartite.push(sides);
            } else if h.is_clique(comp) {
                cliques.push(comp);
            } else {
                continue 'strip;
            }
        }
        if cliques.len() <= 2 {
            return Some(ComplementForm { joined, cliques, bipartite });
        }
    }
    None
}

/// Independent exhaustive check: every subset as the joined clique, every
/// set partition of the rest into blocks with no edges between blocks, each
/// block a clique or complete bipartite, at most two blocks using the clique
/// allowance.
pub fn complement_form_exhaustive(g: &Graph) -> bool {
    let h = g.complement();
    let all = h.vertices();
    all.subsets().any(|joined| {
        let rest = all - joined;
        let joins = joined.iter().all(|v| all.without(v).is_subset(h.neighbors(v)));
        joins && partitions_ok(&h, rest.to_vec().as_slice(), &mut Vec::new())
    })
}

fn block_is_bipartite(h: &Graph, block: VertexSet) -> bool {
    let v: Vec<usize> = block.to_vec();
    (0u32..1 << v.len()).any(|mask| {
        let a: VertexSet = v.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &x)| x).collect();
        let b = block - a;
        h.is_independent_set(a) && h.is_independent_set(b) && a.iter().all(|x| b.iter().all(|y| h.has_edge(x, y)))
    })
}

fn partitions_ok(h: &Graph, rest: &[usize], blocks: &mut Vec<VertexSet>) -> bool {
    let Some((&v, tail)) = rest.split_first() else {
        for (i, &a) in blocks.iter().enumerate() {
            for &b in &blocks[i + 1..] {
                if a.iter().any(|x| b.iter().any(|y| h.has_edge(x, y))) {
                    return false;
                }
            }
        }
        let special = blocks.iter().filter(|&&b| !block_is_bipartite(h, b)).count();
        return special <= 2 && blocks.iter().all(|&b| block_is_bipartite(h, b) || h.is_clique(b));
    };
    for i in 0..blocks.len() {
        blocks[i].insert(v);
        if partitions_ok(h, tail, blocks) {
            blocks[i].remove(v);
            return true;
        }
        blocks[i].remove(v);
    }
    blocks.push(VertexSet::singleton(v));
    let ok = partitions_ok(h, tail, blocks);
    blocks.pop();
    ok
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn examples() {
        let f = complement_form_recognizer(&complete_bipartite(2, 3)).unwrap();
        assert_eq!(f.cliques.len(), 1);
        assert!(complement_form_recognizer(&cycle(4)).is_some());
        assert!(complement_form_recognizer(&path(5)).is_none());
        assert!(complement_form_recognizer(&Graph::empty(4)).is_some());
        assert!(complement_form_exhaustive(&complete_bipartite(2, 3)));
        assert!(!complement_form_exhaustive(&path(5)));
    }
}
