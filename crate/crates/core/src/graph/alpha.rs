use serde::{Deserialize, Serialize};

use super::{Graph, GraphError, MAX_VERTICES};

/// Shape parameters of an α-graph: an outer cycle `c_0..c_{r-1}`, interior
/// edges `c_0 c_i`, two pendant paths at `c_0`, one at `c_{r-1}` and one at `c_1`.
///
/// Pendant lengths count vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlphaParams {
    pub r: usize,
    pub p1: usize,
    pub p2: usize,
    pub p3: usize,
    pub p4: usize,
    /// Indices `i` of interior edges `c_0 c_i`, sorted.
    pub interior: Vec<usize>,
}

impl AlphaParams {
    pub fn validate(&self) -> Result<(), GraphError> {
        let bad = |m: String| Err(GraphError::AlphaParams(m));
        if self.r < 3 {
            return bad(format!("outer cycle needs r >= 3, got {}", self.r));
        }
        if self.p1 == 0 || self.p2 == 0 {
            return bad("the two pendant paths at c0 must be nonempty".into());
        }
        if let Some(&i) = self.interior.iter().find(|&&i| i < 2 || i + 1 >= self.r) {
            return bad(format!("interior edge c0c{i} must have 2 <= i <= r-2"));
        }
        let n = self.r + self.p1 + self.p2 + self.p3 + self.p4;
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.r + self.p1 + self.p2 + self.p3 + self.p4
    }
}

/// Builds the α-graph. Labels: `c_i = i`, then the pendant paths `P1..P4` in
/// order, each listed from its attaching vertex outward.
pub fn make_alpha_graph(params: &AlphaParams) -> Result<Graph, GraphError> {
    params.validate()?;
    let r = params.r;
    let mut g = Graph::empty(params.vertex_count());
    for i in 0..r {
        g.add_edge(i, (i + 1) % r);
    }
    for &i in &params.interior {
        g.add_edge(0, i);
    }
    let mut next = r;
    for (len, anchor) in [(params.p1, 0), (params.p2, 0), (params.p3, r - 1), (params.p4, 1)] {
        let mut prev = anchor;
        for _ in 0..len {
            g.add_edge(prev, next);
            prev = next;
            next += 1;
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(r: usize, p: [usize; 4], interior: &[usize]) -> AlphaParams {
        AlphaParams { r, p1: p[0], p2: p[1], p3: p[2], p4: p[3], interior: interior.to_vec() }
    }

    #[test]
    fn triangle_with_two_pendants() {
        let g = make_alpha_graph(&params(3, [1, 1, 0, 0], &[])).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (0, 2), (0, 3), (0, 4), (1, 2)]);
    }

    #[test]
    fn larger_alpha_graph() {
        let g = make_alpha_graph(&params(5, [1, 1, 1, 1], &[3])).unwrap();
        assert_eq!(g.n(), 9);
        assert!(g.has_edge(0, 3));
        assert!(g.has_edge(4, 7) && g.has_edge(1, 8));
        assert_eq!(g.core_vertices().to_vec(), vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(make_alpha_graph(&params(2, [1, 1, 0, 0], &[])).is_err());
        assert!(make_alpha_graph(&params(4, [0, 1, 0, 0], &[])).is_err());
        assert!(make_alpha_graph(&params(5, [1, 1, 0, 0], &[1])).is_err());
        assert!(make_alpha_graph(&params(5, [1, 1, 0, 0], &[4])).is_err());
        assert!(make_alpha_graph(&params(5, [1, 1, 0, 0], &[2, 3])).is_ok());
    }
}
