//! Best-effort minimum rank of the probe-row pattern.
//!
//! The search samples symmetric-probe-block realizations with small integer
//! entries. A result is certified only when it meets the triangle lower
//! bound, which holds for every matrix with the pattern.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::Realization;
use crate::graph::ProbeGraph;
use crate::linalg::{probe_pattern, rat, PatternEntry, PatternMatrix, RationalMatrix};

/// Size of the largest triangle: rows `r_1..r_t`, columns `c_1..c_t` with
/// `P[r_i][c_i] = *` and `P[r_i][c_j] = 0` for `j > i`. Any matrix with the
/// pattern has a nonsingular `t×t` triangular submatrix there.
pub fn triangle_number(p: &PatternMatrix) -> usize {
    fn grow(p: &PatternMatrix, chosen: &mut Vec<(usize, usize)>, best: &mut usize) {
        *best = (*best).max(chosen.len());
        let free_rows = p.rows() - chosen.len();
        if chosen.len() + free_rows <= *best {
            return;
        }
        for r in 0..p.rows() {
            if chosen.iter().any(|&(cr, _)| cr == r) {
                continue;
            }
            for c in 0..p.cols() {
                if chosen.iter().any(|&(_, cc)| cc == c) || p.get(r, c) != PatternEntry::Star {
                    continue;
                }
                if chosen.iter().all(|&(cr, _)| p.get(cr, c) == PatternEntry::Zero) {
                    chosen.push((r, c));
                    grow(p, chosen, best);
                    chosen.pop();
                }
            }
        }
    }
    let mut best = 0;
    grow(p, &mut Vec::new(), &mut best);
    best
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PatternMinimum {
    pub rank: usize,
    pub lower_bound: usize,
    /// `rank == lower_bound`, so `rank` is the pattern's minimum rank.
    pub certified: bool,
    #[serde(skip)]
    pub realization: Realization,
}

fn sample(pg: &ProbeGraph, rng: &mut ChaCha8Rng) -> Realization {
    let order = crate::linalg::ProbeOrder::new(pg);
    let g = pg.graph();
    let k = order.probe_count;
    let star = |rng: &mut ChaCha8Rng| rat([1, -1, 2, -2][rng.gen_range(0..4)]);
    let mut a = RationalMatrix::zeros(k, k);
    for i in 0..k {
        a[(i, i)] = rat(rng.gen_range(-2..=2));
        for j in 0..i {
            if g.has_edge(order.order[i], order.order[j]) {
                let v = star(rng);
                a[(i, j)] = v.clone();
                a[(j, i)] = v;
            }
        }
    }
    let b = RationalMatrix::from_fn(k, pg.n() - k, |i, j| {
        if g.has_edge(order.order[i], order.order[k + j]) {
            star(rng)
        } else {
            rat(0)
        }
    });
    Realization { a, b, order }
}

/// Samples `budget` realizations from a fixed seed and keeps the lowest rank.
pub fn minimize_pattern_rank(pg: &ProbeGraph, budget: usize, seed: u64) -> PatternMinimum {
    let (pattern, _) = probe_pattern(pg);
    let lower_bound = triangle_number(&pattern);
    let mut best = Realization::unit(pg);
    let mut best_rank = best.top_block().rank();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..budget {
        if best_rank == lower_bound {
            break;
        }
        let cand = sample(pg, &mut rng);
        let r = cand.top_block().rank();
        if r < best_rank {
            best = cand;
            best_rank = r;
        }
    }
    PatternMinimum { rank: best_rank, lower_bound, certified: best_rank == lower_bound, realization: best }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::graph::{Graph, VertexSet};

    #[test]
    fn triangle_examples() {
        let (p, _) = probe_pattern(&ProbeGraph::plain(path(4)));
        // a path pattern contains a triangle of size n - 1
        assert_eq!(triangle_number(&p), 3);
        let (p, _) = probe_pattern(&ProbeGraph::plain(Graph::empty(3)));
        assert_eq!(triangle_number(&p), 0);
    }

    #[test]
    fn star_with_leaf_nonprobes_has_rank_one_top() {
        let pg = ProbeGraph::new(star(3), [1, 2, 3].into_iter().collect::<VertexSet>()).unwrap();
        let m = minimize_pattern_rank(&pg, 50, 1);
        assert_eq!((m.rank, m.lower_bound, m.certified), (1, 1, true));
    }

    #[test]
    fn path_pattern_is_certified() {
        let m = minimize_pattern_rank(&ProbeGraph::plain(path(5)), 200, 3);
        assert!(m.certified);
        assert_eq!(m.rank, 4);
    }
}
