//! Graphs of two parallel paths: certificates, a brute-force oracle, the
//! structural recognizer, and the case analysis for adding one edge.

mod core;
mod gplus;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

pub use self::core::{
    core_structure, dstar, phi_assignments, spokes_assignment, CoreStructure, InducedCycle, Pendant, PhiAssignment,
    StructureError,
};
pub use gplus::{gplus_is_two_parallel_paths, GplusCase, GplusVerdict};

/// Largest vertex count for the brute-force search.
pub const BRUTE_FORCE_LIMIT: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PathsError {
    #[error("brute-force search is limited to {limit} vertices, got {n}")]
    SizeLimit { n: usize, limit: usize },
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("vertices {0} and {1} are not connected once interior edges are removed")]
    Unreachable(usize, usize),
}

/// Two induced paths, in order, partitioning the vertex set. `path_q` may be
/// empty, which covers `G = P_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwoPathsCertificate {
    pub path_p: Vec<usize>,
    pub path_q: Vec<usize>,
}

impl TwoPathsCertificate {
    pub fn vertex_sets(&self) -> (VertexSet, VertexSet) {
        (self.path_p.iter().copied().collect(), self.path_q.iter().copied().collect())
    }
}

fn is_induced_path_in_order(g: &Graph, order: &[usize]) -> bool {
    let s: VertexSet = order.iter().copied().collect();
    s.len() == order.len()
        && order.windows(2).all(|w| g.has_edge(w[0], w[1]))
        && g.edges_within(s) + 1 == order.len().max(1)
}

/// Checks the partition, that both lists are induced paths in the given
/// order, and that no two cross edges cross.
pub fn certificate_valid(g: &Graph, cert: &TwoPathsCertificate) -> bool {
    let (p, q) = cert.vertex_sets();
    if cert.path_p.is_empty() || p.len() != cert.path_p.len() || q.len() != cert.path_q.len() {
        return false;
    }
    if !(p & q).is_empty() || (p | q) != g.vertices() {
        return false;
    }
    if !is_induced_path_in_order(g, &cert.path_p)
        || !(cert.path_q.is_empty() || is_induced_path_in_order(g, &cert.path_q))
    {
        return false;
    }
    let mut cross = Vec::new();
    for (i, &v) in cert.path_p.iter().enumerate() {
        for (j, &u) in cert.path_q.iter().enumerate() {
            if g.has_edge(v, u) {
                cross.push((i, j));
            }
        }
    }
    cross.iter().all(|&(i, j)| cross.iter().all(|&(x, y)| !((x > i && y < j) || (x < i && y > j))))
}

/// Every unordered partition `{V(P), V(Q)}` (with `V(P)` holding vertex 0)
/// realized by some valid certificate, together with one certificate each.
pub fn all_partitions(g: &Graph) -> Result<Vec<TwoPathsCertificate>, PathsError> {
    let n = g.n();
    if n > BRUTE_FORCE_LIMIT {
        return Err(PathsError::SizeLimit { n, limit: BRUTE_FORCE_LIMIT });
    }
    let mut out = Vec::new();
    if n == 0 {
        return Ok(out);
    }
    let rest = g.vertices().without(0);
    for qs in rest.subsets() {
        let ps = g.vertices() - qs;
        let Some(p) = g.induced_path_order(ps) else { continue };
        let q = if qs.is_empty() {
            Vec::new()
        } else {
            match g.induced_path_order(qs) {
                Some(q) => q,
                None => continue,
            }
        };
        let mut q_rev = q.clone();
        q_rev.reverse();
        for path_q in [q, q_rev] {
            let cert = TwoPathsCertificate { path_p: p.clone(), path_q };
            if certificate_valid(g, &cert) {
                out.push(cert);
                break;
            }
        }
    }
    Ok(out)
}

/// Ground-truth oracle: exhaustive search over bipartitions and orientations.
pub fn find_certificate_bruteforce(g: &Graph) -> Result<Option<TwoPathsCertificate>, PathsError> {
    let n = g.n();
    if n > BRUTE_FORCE_LIMIT {
        return Err(PathsError::SizeLimit { n, limit: BRUTE_FORCE_LIMIT });
    }
    if n == 0 {
        return Ok(None);
    }
    // path edges n - 2 plus at most n - 1 non-crossing cross edges
    if n >= 2 && g.edge_count() + 3 > 2 * n {
        return Ok(None);
    }
    Ok(all_partitions(g)?.into_iter().next())
}

/// Tree criterion: no degree above 3, at most two vertices of degree 3, and
/// those adjacent. Two-component forests qualify when both are paths; other
/// inputs are rejected.
pub fn recognize_tree(g: &Graph) -> bool {
    if !g.is_forest() {
        return false;
    }
    let comps = g.components();
    match comps.len() {
        0 => false,
        1 => {
            let s: Vec<usize> = g.vertices().iter().filter(|&v| g.degree(v) == 3).collect();
            g.max_degree() <= 3 && (s.len() <= 1 || (s.len() == 2 && g.has_edge(s[0], s[1])))
        }
        2 => comps.iter().all(|&c| g.induced_path_order(c).is_some()),
        _ => false,
    }
}

/// Certificate for a tree or two-path forest accepted by [`recognize_tree`],
/// following the maximal-path construction.
fn tree_certificate(g: &Graph) -> Option<TwoPathsCertificate> {
    let comps = g.components();
    if comps.len() == 2 {
        let path_p = g.induced_path_order(comps[0])?;
        let path_q = g.induced_path_order(comps[1])?;
        return Some(TwoPathsCertificate { path_p, path_q });
    }
    let start = g.vertices().iter().find(|&v| g.degree(v) <= 1)?;
    let mut walk = vec![start];
    let mut prev = None;
    let mut cur = start;
    loop {
        let next: Vec<usize> = g.neighbors(cur).iter().filter(|&u| Some(u) != prev).collect();
        let Some(&v) = next.iter().find(|&&u| g.degree(u) != 3).or(next.first()) else { break };
        walk.push(v);
        prev = Some(cur);
        cur = v;
    }
    let ps: VertexSet = walk.iter().copied().collect();
    let qs = g.vertices() - ps;
    let path_q = if qs.is_empty() { Vec::new() } else { g.induced_path_order(qs)? };
    let cert = TwoPathsCertificate { path_p: walk, path_q };
    certificate_valid(g, &cert).then_some(cert)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Recognition {
    pub two_parallel_paths: bool,
    /// Whether the characterization's conditions held (trees: the degree
    /// criterion; cyclic graphs: conditions 1 to 4).
    pub conditions_hold: bool,
    pub certificate: Option<TwoPathsCertificate>,
    pub core_structure: Option<CoreStructure>,
    /// Why the graph was rejected.
    pub reason: Option<String>,
}

impl Recognition {
    fn reject(reason: impl Into<String>, core_structure: Option<CoreStructure>, conditions_hold: bool) -> Self {
        Recognition {
            two_parallel_paths: false,
            conditions_hold,
            certificate: None,
            core_structure,
            reason: Some(reason.into()),
        }
    }
}

/// Structural recognition. Forests use the degree criterion; graphs with a
/// cycle use the core conditions, and the certificate is assembled from the
/// outer-cycle arcs and pendant paths as in the characterization's proof.
pub fn recognize(g: &Graph) -> Recognition {
    if g.n() == 0 {
        return Recognition::reject("empty graph", None, false);
    }
    if g.is_forest() {
        if !recognize_tree(g) {
            return Recognition::reject("forest fails the degree criterion", None, false);
        }
        return match tree_certificate(g) {
            Some(cert) => Recognition {
                two_parallel_paths: true,
                conditions_hold: true,
                certificate: Some(cert),
                core_structure: None,
                reason: None,
            },
            None => Recognition::reject("criterion holds but no certificate", None, true),
        };
    }
    if !g.is_connected() {
        return Recognition::reject("disconnected graph with a cycle", None, false);
    }
    let cs = match core_structure(g) {
        Ok(cs) => cs,
        Err(e) => return Recognition::reject(e.to_string(), None, false),
    };
    let conditions = self::core::theorem_conditions(&cs);
    let cert = self::core::assemble_certificate(g, &cs);
    match (conditions, cert) {
        (Ok(()), Some(cert)) => Recognition {
            two_parallel_paths: true,
            conditions_hold: true,
            certificate: Some(cert),
            core_structure: Some(cs),
            reason: None,
        },
        (Ok(()), None) => Recognition::reject("conditions hold but no certificate assembles", Some(cs), true),
        (Err(why), _) => Recognition::reject(why, Some(cs), false),
    }
}

pub fn is_two_parallel_paths(g: &Graph) -> bool {
    recognize(g).two_parallel_paths
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    fn cert(p: &[usize], q: &[usize]) -> TwoPathsCertificate {
        TwoPathsCertificate { path_p: p.to_vec(), path_q: q.to_vec() }
    }

    #[test]
    fn certificate_examples() {
        assert!(certificate_valid(&path(4), &cert(&[0, 1], &[2, 3])));
        assert!(certificate_valid(&cycle(4), &cert(&[0, 1], &[3, 2])));
        assert!(!certificate_valid(&cycle(4), &cert(&[0, 1], &[2, 3])));
        assert!(!certificate_valid(&path(4), &cert(&[0, 2], &[1, 3])));
        assert!(!certificate_valid(&path(4), &cert(&[0, 1], &[2])));
        assert!(certificate_valid(&path(3), &cert(&[0, 1, 2], &[])));
    }

    #[test]
    fn bruteforce_examples() {
        for n in 1..8 {
            assert!(find_certificate_bruteforce(&path(n)).unwrap().is_some());
        }
        let c = find_certificate_bruteforce(&paw()).unwrap().unwrap();
        assert!(certificate_valid(&paw(), &c));
        assert!(find_certificate_bruteforce(&complete(4)).unwrap().is_none());
        assert!(find_certificate_bruteforce(&Graph::empty(17)).is_err());
    }

    #[test]
    fn tree_examples() {
        assert!(recognize_tree(&spider(&[2, 2, 2])));
        assert!(!recognize_tree(&star(4)));
        // degree-3 vertices 0 and 3 joined through 1, 2
        let g = Graph::from_edges(8, &[(0, 1), (1, 2), (2, 3), (0, 4), (0, 5), (3, 6), (3, 7)]).unwrap();
        assert!(!recognize_tree(&g));
        assert!(recognize_tree(&path(3).disjoint_union(&path(2))));
        assert!(!recognize_tree(&path(1).disjoint_union(&path(1)).disjoint_union(&path(1))));
    }

    #[test]
    fn recognize_examples() {
        let r = recognize(&cycle(6).with_edge(0, 3));
        assert!(r.two_parallel_paths);
        assert!(certificate_valid(&cycle(6).with_edge(0, 3), r.certificate.as_ref().unwrap()));
        assert!(!recognize(&complete(4)).two_parallel_paths);
        assert!(recognize(&path(5)).two_parallel_paths);
        assert!(recognize(&paw()).two_parallel_paths);
    }
}
