use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use super::{LinalgError, RationalMatrix};
use crate::graph::{Graph, ProbeGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum PatternEntry {
    /// Must be zero.
    Zero,
    /// Must be nonzero.
    Star,
    /// Unconstrained.
    Any,
}

impl PatternEntry {
    pub fn admits(self, zero: bool) -> bool {
        match self {
            PatternEntry::Zero => zero,
            PatternEntry::Star => !zero,
            PatternEntry::Any => true,
        }
    }

    fn symbol(self) -> char {
        match self {
            PatternEntry::Zero => '0',
            PatternEntry::Star => '*',
            PatternEntry::Any => '?',
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PatternMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<PatternEntry>,
}

impl PatternMatrix {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> PatternEntry) -> Self {
        let entries = (0..rows * cols).map(|k| f(k / cols.max(1), k % cols.max(1))).collect();
        PatternMatrix { rows, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> PatternEntry {
        assert!(i < self.rows && j < self.cols);
        self.entries[i * self.cols + j]
    }

    pub fn star_count(&self) -> usize {
        self.entries.iter().filter(|&&e| e == PatternEntry::Star).count()
    }
}

impl fmt::Debug for PatternMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: String = (0..self.cols).map(|j| self.get(i, j).symbol()).collect();
            writeln!(f, "{row}")?;
        }
        Ok(())
    }
}

/// Pattern of `S(G)`: `?` on the diagonal, `*` on edges, `0` elsewhere.
pub fn graph_pattern(g: &Graph) -> PatternMatrix {
    PatternMatrix::from_fn(g.n(), g.n(), |i, j| {
        if i == j {
            PatternEntry::Any
        } else if g.has_edge(i, j) {
            PatternEntry::Star
        } else {
            PatternEntry::Zero
        }
    })
}

/// Reindexing that puts probes first and non-probes last, each in label order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProbeOrder {
    /// `order[new] = old`.
    pub order: Vec<usize>,
    pub probe_count: usize,
}

impl ProbeOrder {
    pub fn new(pg: &ProbeGraph) -> Self {
        let mut order = pg.probes().to_vec();
        let probe_count = order.len();
        order.extend(pg.nonprobes().iter());
        ProbeOrder { order, probe_count }
    }

    /// `position[old] = new`.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (new, &old) in self.order.iter().enumerate() {
            pos[old] = new;
        }
        pos
    }

    /// Moves a matrix indexed in probe order back to the original labels.
    pub fn restore(&self, m: &RationalMatrix) -> RationalMatrix {
        let pos = self.positions();
        RationalMatrix::from_fn(m.rows(), m.cols(), |i, j| m[(pos[i], pos[j])].clone())
    }

    /// Moves a matrix indexed by original labels into probe order.
    pub fn apply(&self, m: &RationalMatrix) -> RationalMatrix {
        m.select(&self.order, &self.order)
    }
}

/// The `(n−k)×n` pattern of the probe rows, with columns in probe order
/// (probes first, then `N`). Returns the order used.
pub fn probe_pattern(pg: &ProbeGraph) -> (PatternMatrix, ProbeOrder) {
    let ord = ProbeOrder::new(pg);
    let g = pg.graph();
    let p = PatternMatrix::from_fn(ord.probe_count, pg.n(), |i, j| {
        let (u, v) = (ord.order[i], ord.order[j]);
        if u == v {
            PatternEntry::Any
        } else if g.has_edge(u, v) {
            PatternEntry::Star
        } else {
            PatternEntry::Zero
        }
    });
    (p, ord)
}

pub fn matches_pattern(m: &RationalMatrix, p: &PatternMatrix) -> Result<bool, LinalgError> {
    if (m.rows(), m.cols()) != (p.rows, p.cols) {
        return Err(LinalgError::DimensionMismatch(format!(
            "matrix {}x{} vs pattern {}x{}",
            m.rows(),
            m.cols(),
            p.rows,
            p.cols
        )));
    }
    Ok((0..p.rows).all(|i| (0..p.cols).all(|j| p.get(i, j).admits(m[(i, j)].is_zero()))))
}

/// Membership in `S(G^N)`, with `m` indexed by original labels: symmetric,
/// off-diagonal entries follow the edges of `G` unless both ends lie in `N`.
pub fn in_s_probe(m: &RationalMatrix, pg: &ProbeGraph) -> Result<bool, LinalgError> {
    let n = pg.n();
    if (m.rows(), m.cols()) != (n, n) {
        return Err(LinalgError::DimensionMismatch(format!("expected {n}x{n}, got {}x{}", m.rows(), m.cols())));
    }
    if !m.is_symmetric() {
        return Err(LinalgError::NotSymmetric);
    }
    let nonprobes = pg.nonprobes();
    let g = pg.graph();
    Ok((0..n).all(|i| {
        (0..i).all(|j| (nonprobes.contains(i) && nonprobes.contains(j)) || g.has_edge(i, j) != m[(i, j)].is_zero())
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::graph::VertexSet;
    use crate::linalg::rat;
    use PatternEntry::*;

    fn adjacency(g: &Graph) -> RationalMatrix {
        RationalMatrix::from_fn(g.n(), g.n(), |i, j| rat(g.has_edge(i, j) as i64))
    }

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn graph_pattern_of_k2() {
        let p = graph_pattern(&complete(2));
        assert_eq!(p, PatternMatrix::from_fn(2, 2, |i, j| if i == j { Any } else { Star }));
    }

    #[test]
    fn probe_pattern_examples() {
        let pg = ProbeGraph::new(complete(2), set(&[1])).unwrap();
        let (p, ord) = probe_pattern(&pg);
        assert_eq!((p.rows(), p.cols()), (1, 2));
        assert_eq!((p.get(0, 0), p.get(0, 1)), (Any, Star));
        assert_eq!(ord.order, vec![0, 1]);

        // K_{2,3}: vertices 0,1 on one side, 2,3,4 on the other
        let pg = ProbeGraph::new(complete_bipartite(2, 3), set(&[2, 3, 4])).unwrap();
        let (p, _) = probe_pattern(&pg);
        assert_eq!((p.rows(), p.cols()), (2, 5));
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(p.get(i, j), if i == j { Any } else { Zero });
            }
            for j in 2..5 {
                assert_eq!(p.get(i, j), Star);
            }
        }
    }

    #[test]
    fn probe_order_moves_nonprobes_last() {
        let pg = ProbeGraph::new(paw(), set(&[0, 3])).unwrap();
        let ord = ProbeOrder::new(&pg);
        assert_eq!(ord.order, vec![1, 2, 0, 3]);
        let a = adjacency(pg.graph());
        assert_eq!(ord.restore(&ord.apply(&a)), a);
    }

    #[test]
    fn matches_pattern_examples() {
        let g = paw();
        let a = adjacency(&g);
        assert_eq!(matches_pattern(&a, &graph_pattern(&g)), Ok(true));
        assert_eq!(matches_pattern(&a, &PatternMatrix::from_fn(4, 4, |_, _| Any)), Ok(true));
        assert_eq!(matches_pattern(&RationalMatrix::zeros(2, 2), &graph_pattern(&complete(2))), Ok(false));
        assert!(matches_pattern(&a, &graph_pattern(&complete(3))).is_err());
    }

    #[test]
    fn in_s_probe_examples() {
        let g = paw();
        let pg = ProbeGraph::new(g.clone(), set(&[0, 3])).unwrap();
        let a = adjacency(&g);
        assert_eq!(in_s_probe(&a, &pg), Ok(true));
        let mut m = a.clone();
        m[(0, 3)] = rat(5);
        m[(3, 0)] = rat(5);
        assert_eq!(in_s_probe(&m, &pg), Ok(true));
        let mut bad = a.clone();
        bad[(1, 3)] = rat(1);
        bad[(3, 1)] = rat(1);
        assert_eq!(in_s_probe(&bad, &pg), Ok(false));
        let mut asym = a;
        asym[(0, 3)] = rat(1);
        assert_eq!(in_s_probe(&asym, &pg), Err(LinalgError::NotSymmetric));
    }
}
