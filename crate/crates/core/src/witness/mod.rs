//! Rank witnesses for probe graphs: the nullity-`|N|` construction, the
//! top-half sandwich construction, and rank intervals combining all bounds.

mod interval;
mod minimize;

use num_traits::Zero;
use rand::Rng;
use serde::Serialize;
use thiserror::Error;

use crate::graph::ProbeGraph;
use crate::linalg::{
    matches_pattern, probe_pattern, projection_split, rat, solve, symmetric_same_rowspace, LinalgError, ProbeOrder,
    RationalMatrix,
};

pub use interval::{mr_interval, RankInterval, RankSource};
pub use minimize::{minimize_pattern_rank, triangle_number, PatternMinimum};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WitnessError {
    #[error("top block does not match the probe pattern")]
    PatternMismatch,
    #[error("probe block of the realization is not symmetric")]
    AsymmetricProbeBlock,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("internal construction step failed: {0}")]
    Internal(&'static str),
    #[error(transparent)]
    Forcing(#[from] crate::forcing::ForcingError),
}

/// The probe rows `[A | B]` of a matrix in `S(G^N)`, in probe order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Realization {
    pub a: RationalMatrix,
    pub b: RationalMatrix,
    pub order: ProbeOrder,
}

impl Realization {
    /// Validates a top block whose columns are in probe order.
    pub fn from_top_block(pg: &ProbeGraph, top: &RationalMatrix) -> Result<Self, WitnessError> {
        let (pattern, order) = probe_pattern(pg);
        if !matches_pattern(top, &pattern).map_err(|_| WitnessError::PatternMismatch)? {
            return Err(WitnessError::PatternMismatch);
        }
        let k = order.probe_count;
        let rows: Vec<usize> = (0..k).collect();
        let a = top.select(&rows, &rows);
        if !a.is_symmetric() {
            return Err(WitnessError::AsymmetricProbeBlock);
        }
        let b = top.select(&rows, &(k..pg.n()).collect::<Vec<_>>());
        Ok(Realization { a, b, order })
    }

    pub fn top_block(&self) -> RationalMatrix {
        self.a.hstack(&self.b).expect("blocks share rows")
    }

    /// Random realization: nonzero entries from `{±1, ±3}`, diagonal from `-2..=2`.
    pub fn random(pg: &ProbeGraph, rng: &mut impl Rng) -> Self {
        let order = ProbeOrder::new(pg);
        let g = pg.graph();
        let k = order.probe_count;
        let nonzero = |rng: &mut dyn rand::RngCore| {
            let v = [1, 3][rng.gen_range(0..2)];
            rat(if rng.gen_bool(0.5) { v } else { -v })
        };
        let mut a = RationalMatrix::zeros(k, k);
        for i in 0..k {
            a[(i, i)] = rat(rng.gen_range(-2..=2));
            for j in 0..i {
                if g.has_edge(order.order[i], order.order[j]) {
                    let v = nonzero(rng);
                    a[(i, j)] = v.clone();
                    a[(j, i)] = v;
                }
            }
        }
        let b = RationalMatrix::from_fn(k, pg.n() - k, |i, j| {
            if g.has_edge(order.order[i], order.order[k + j]) {
                nonzero(rng)
            } else {
                rat(0)
            }
        });
        Realization { a, b, order }
    }

    /// Realization with unit entries and `A = 0` off the edges, diagonal zero.
    pub fn unit(pg: &ProbeGraph) -> Self {
        let order = ProbeOrder::new(pg);
        let g = pg.graph();
        let k = order.probe_count;
        let a = RationalMatrix::from_fn(k, k, |i, j| rat(g.has_edge(order.order[i], order.order[j]) as i64));
        let b =
            RationalMatrix::from_fn(k, pg.n() - k, |i, j| rat(g.has_edge(order.order[i], order.order[k + j]) as i64));
        Realization { a, b, order }
    }
}

/// A matrix in `S(G^N)` (original labels) of nullity exactly `|N|`.
pub fn nullity_witness(pg: &ProbeGraph) -> RationalMatrix {
    let Realization { mut a, b, order } = Realization::unit(pg);
    let k = order.probe_count;
    // smallest positive shift making A invertible; at most k values are bad
    let base = a.clone();
    for t in 1.. {
        for i in 0..k {
            a[(i, i)] = &base[(i, i)] + rat(t);
        }
        if !a.determinant().expect("square").is_zero() {
            break;
        }
    }
    let d = solve(&a, &b).expect("shapes agree").expect("A is invertible");
    let dt = d.transpose();
    let c = &(&dt * &a) * &d;
    let m = RationalMatrix::block(&a, &b, &b.transpose(), &c).expect("block shapes");
    order.restore(&m)
}

/// The symmetric completion `Q` of a realization and the ranks around it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QConstruction {
    /// `Q` in probe order.
    pub q: RationalMatrix,
    pub rank_a: usize,
    pub rank_b_perp: usize,
    pub rank_q: usize,
    /// `rank(diag(A − D RᵀR Dᵀ, RᵀR))`, computed separately.
    pub congruent_rank: usize,
    pub order: ProbeOrder,
}

impl QConstruction {
    /// `Q` indexed by the original vertex labels.
    pub fn q_original(&self) -> RationalMatrix {
        self.order.restore(&self.q)
    }

    pub fn upper_bound(&self) -> usize {
        self.rank_a + 2 * self.rank_b_perp
    }
}

/// Builds `Q = Uᵀ W U` with `W = [[A, B⊥], [B⊥ᵀ, RᵀR]]` and `U = [[I, C], [O, I]]`,
/// where `B_A = AC` and `D RᵀR = B⊥`. Its probe rows are `[A | B]`.
pub fn construct_q(real: &Realization) -> Result<QConstruction, WitnessError> {
    let (a, b) = (&real.a, &real.b);
    let (k, m) = (a.rows(), b.cols());
    let (b_par, b_perp) = projection_split(a, b)?;
    let c = solve(a, &b_par)?.ok_or(WitnessError::Internal("projection outside the column space"))?;
    let s = symmetric_same_rowspace(&b_perp);
    let dt = solve(&s, &b_perp.transpose())?.ok_or(WitnessError::Internal("row space mismatch"))?;
    let d = dt.transpose();
    let w = RationalMatrix::block(a, &b_perp, &b_perp.transpose(), &s)?;
    let u = RationalMatrix::block(
        &RationalMatrix::identity(k),
        &c,
        &RationalMatrix::zeros(m, k),
        &RationalMatrix::identity(m),
    )?;
    let q = &(&u.transpose() * &w) * &u;
    let reduced = a - &(&(&d * &s) * &dt);
    let congruent = RationalMatrix::block(&reduced, &RationalMatrix::zeros(k, m), &RationalMatrix::zeros(m, k), &s)?;
    Ok(QConstruction {
        rank_a: a.rank(),
        rank_b_perp: b_perp.rank(),
        rank_q: q.rank(),
        congruent_rank: congruent.rank(),
        q,
        order: real.order.clone(),
    })
}

/// `[rank(A) + rank(B⊥), rank(A) + 2 rank(B⊥)]`. The lower end bounds
/// `mr(G^N)` only if the realization attains the pattern's minimum rank.
pub fn sandwich_bounds(real: &Realization) -> Result<RankInterval, WitnessError> {
    let (_, b_perp) = projection_split(&real.a, &real.b)?;
    let (ra, rb) = (real.a.rank(), b_perp.rank());
    Ok(RankInterval {
        lower: ra + rb,
        upper: ra + 2 * rb,
        lower_source: RankSource::PatternRealization { certified: false },
        upper_source: RankSource::QConstruction,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessSummary {
    pub nullity: usize,
    pub rank: usize,
}

pub fn summarize(m: &RationalMatrix) -> WitnessSummary {
    let rank = m.rank();
    WitnessSummary { nullity: m.cols() - rank, rank }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::graph::{Graph, VertexSet};
    use crate::linalg::in_s_probe;
    use rand::SeedableRng;

    fn probe(g: Graph, n: &[usize]) -> ProbeGraph {
        ProbeGraph::new(g, n.iter().copied().collect::<VertexSet>()).unwrap()
    }

    #[test]
    fn nullity_witness_examples() {
        for (pg, nullity) in [
            (ProbeGraph::plain(paw()), 0),
            (probe(paw(), &[0, 3]), 2),
            (probe(path(6), &[1, 3, 5]), 3),
            (ProbeGraph::plain(complete(3)), 0),
        ] {
            let m = nullity_witness(&pg);
            assert_eq!(in_s_probe(&m, &pg), Ok(true));
            assert_eq!(m.nullity(), Ok(nullity));
        }
    }

    #[test]
    fn q_with_zero_b_is_block_diagonal() {
        let pg = probe(path(3).disjoint_union(&Graph::empty(2)), &[3, 4]);
        let real = Realization::unit(&pg);
        let qc = construct_q(&real).unwrap();
        assert!(qc.q.select(&[3, 4], &[0, 1, 2, 3, 4]).is_zero());
        assert_eq!(qc.rank_q, real.a.rank());
        let iv = sandwich_bounds(&real).unwrap();
        assert_eq!((iv.lower, iv.upper), (real.a.rank(), real.a.rank()));
    }

    #[test]
    fn complete_bipartite_attains_upper_bound() {
        let pg = probe(complete_bipartite(2, 3), &[2, 3, 4]);
        let real = Realization::unit(&pg);
        assert!(real.a.is_zero());
        let qc = construct_q(&real).unwrap();
        assert_eq!((qc.rank_a, qc.rank_b_perp, qc.rank_q), (0, 1, 2));
        assert_eq!(qc.congruent_rank, 2);
        let iv = sandwich_bounds(&real).unwrap();
        assert_eq!((iv.lower, iv.upper), (1, 2));
    }

    #[test]
    fn q_keeps_the_top_block() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let pg = probe(cycle(6), &[0, 3]);
        for _ in 0..20 {
            let real = Realization::random(&pg, &mut rng);
            let qc = construct_q(&real).unwrap();
            let rows: Vec<usize> = (0..4).collect();
            let cols: Vec<usize> = (0..6).collect();
            assert_eq!(qc.q.select(&rows, &cols), real.top_block());
            assert!(qc.q.is_symmetric());
            assert!(qc.rank_q <= qc.upper_bound());
            assert_eq!(qc.rank_q, qc.congruent_rank);
            assert_eq!(in_s_probe(&qc.q_original(), &pg), Ok(true));
        }
    }

    #[test]
    fn from_top_block_validates() {
        let pg = probe(path(3), &[0, 2]);
        let good = RationalMatrix::from_i64_rows(&[vec![5, 1, 2]]);
        assert!(Realization::from_top_block(&pg, &good).is_ok());
        let bad = RationalMatrix::from_i64_rows(&[vec![5, 0, 2]]);
        assert_eq!(Realization::from_top_block(&pg, &bad), Err(WitnessError::PatternMismatch));
    }
}
