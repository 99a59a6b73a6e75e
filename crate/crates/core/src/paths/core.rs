//! Core structure of a connected outerplanar graph with a cycle: the
//! outer-cycle, interior edges, induced cycles, and pendant paths.

use std::collections::VecDeque;

use serde::Serialize;
use thiserror::Error;

use super::{certificate_valid, PathsError, TwoPathsCertificate};
use crate::graph::{is_outerplanar, AlphaParams, Graph, VertexSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StructureError {
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph is not outerplanar")]
    NotOuterplanar,
    #[error("core is empty")]
    EmptyCore,
    #[error("core has no Hamiltonian outer-cycle")]
    CoreNotHamiltonian,
    #[error("pendant component attached at {0} is not a path ending there")]
    PendantNotPath(usize),
    #[error("{0} pendant paths, at most 4 allowed")]
    TooManyPendants(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Pendant {
    /// Vertices from the attaching leaf `x` outward.
    pub path: Vec<usize>,
    /// The edge `x y` with `y` in the core.
    pub attach: (usize, usize),
}

impl Pendant {
    pub fn insertion_point(&self) -> usize {
        self.attach.1
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.path.iter().copied().collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InducedCycle {
    /// Vertices in outer-cycle order.
    pub vertices: Vec<usize>,
    pub interior_edges: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoreStructure {
    /// `c_0 .. c_{r-1}`, starting at the lowest label towards its smaller neighbour.
    pub outer_cycle: Vec<usize>,
    pub interior_edges: Vec<(usize, usize)>,
    pub induced_cycles: Vec<InducedCycle>,
    /// Induced cycles with exactly one interior edge, as vertex lists.
    pub one_interior_cycles: Vec<Vec<usize>>,
    pub pendants: Vec<Pendant>,
    pub insertion_points: Vec<usize>,
    pub alpha: Option<AlphaParams>,
}

impl CoreStructure {
    pub fn core(&self) -> VertexSet {
        self.outer_cycle.iter().copied().collect()
    }

    pub fn r(&self) -> usize {
        self.outer_cycle.len()
    }

    pub fn is_cycle_core(&self) -> bool {
        self.interior_edges.is_empty()
    }

    pub fn position(&self, v: usize) -> Option<usize> {
        self.outer_cycle.iter().position(|&c| c == v)
    }

    /// Whether `u v` is an edge of the outer-cycle.
    pub fn outer_adjacent(&self, u: usize, v: usize) -> bool {
        match (self.position(u), self.position(v)) {
            (Some(a), Some(b)) => {
                let d = a.abs_diff(b);
                d == 1 || d == self.r() - 1
            }
            _ => false,
        }
    }

    /// `C[x, y]` (inclusive) or `C(x, y)` (exclusive): the vertices met going
    /// forward from `x` to `y`.
    pub fn arc(&self, x: usize, y: usize, inclusive: bool) -> VertexSet {
        let (a, b) = (self.position(x).expect("x on the outer-cycle"), self.position(y).expect("y on the outer-cycle"));
        let r = self.r();
        let mut s = VertexSet::EMPTY;
        let mut i = a;
        loop {
            s.insert(self.outer_cycle[i]);
            if i == b {
                break;
            }
            i = (i + 1) % r;
        }
        if !inclusive {
            s = s.without(x).without(y);
        }
        s
    }

    pub fn distinct_insertion_points(&self) -> bool {
        let s: VertexSet = self.insertion_points.iter().copied().collect();
        s.len() == self.insertion_points.len()
    }

    /// Index of the pendant containing `v`.
    pub fn pendant_of(&self, v: usize) -> Option<usize> {
        self.pendants.iter().position(|p| p.path.contains(&v))
    }

    pub fn pendant_vertices(&self) -> VertexSet {
        self.pendants.iter().fold(VertexSet::EMPTY, |acc, p| acc | p.vertex_set())
    }

    fn one_interior_sets(&self) -> Vec<VertexSet> {
        self.one_interior_cycles.iter().map(|c| c.iter().copied().collect()).collect()
    }
}

/// Normalized outer-cycle, interior edges, induced cycles, pendant paths and,
/// for α-shaped graphs, the α parameters.
pub fn core_structure(g: &Graph) -> Result<CoreStructure, StructureError> {
    if !g.is_connected() {
        return Err(StructureError::Disconnected);
    }
    let op = is_outerplanar(g);
    if !op.outerplanar {
        return Err(StructureError::NotOuterplanar);
    }
    let core = g.core_vertices();
    if core.is_empty() {
        return Err(StructureError::EmptyCore);
    }
    let outer_cycle = op.outer_cycle.ok_or(StructureError::CoreNotHamiltonian)?;
    let r = outer_cycle.len();
    let mut pos = vec![usize::MAX; g.n()];
    for (i, &c) in outer_cycle.iter().enumerate() {
        pos[c] = i;
    }
    let on_cycle = |u: usize, v: usize| {
        let d = pos[u].abs_diff(pos[v]);
        d == 1 || d == r - 1
    };
    let interior_edges: Vec<(usize, usize)> =
        g.edges().into_iter().filter(|&(u, v)| core.contains(u) && core.contains(v) && !on_cycle(u, v)).collect();

    let mut induced_cycles = Vec::new();
    for s in core.subsets() {
        if g.induces_cycle(s) {
            let mut vertices = s.to_vec();
            vertices.sort_by_key(|&v| pos[v]);
            let interior = interior_edges.iter().copied().filter(|&(u, v)| s.contains(u) && s.contains(v)).collect();
            induced_cycles.push(InducedCycle { vertices, interior_edges: interior });
        }
    }
    induced_cycles.sort_by(|a, b| a.vertices.cmp(&b.vertices));
    let one_interior_cycles =
        induced_cycles.iter().filter(|c| c.interior_edges.len() == 1).map(|c| c.vertices.clone()).collect();

    let mut pendants = Vec::new();
    for comp in g.components_within(g.vertices() - core) {
        let (x, y) = comp
            .iter()
            .find_map(|x| (g.neighbors(x) & core).first().map(|y| (x, y)))
            .expect("connected graph: every pendant component touches the core");
        let order = g.induced_path_order(comp.with(y)).ok_or(StructureError::PendantNotPath(y))?;
        let path: Vec<usize> = if order[0] == y {
            order[1..].to_vec()
        } else if *order.last().unwrap() == y {
            order[..order.len() - 1].iter().rev().copied().collect()
        } else {
            return Err(StructureError::PendantNotPath(y));
        };
        debug_assert_eq!(path[0], x);
        pendants.push(Pendant { path, attach: (x, y) });
    }
    if pendants.len() > 4 {
        return Err(StructureError::TooManyPendants(pendants.len()));
    }
    pendants.sort_by_key(|p| (pos[p.attach.1], p.attach.0));
    let insertion_points = pendants.iter().map(Pendant::insertion_point).collect();
    let mut cs = CoreStructure {
        outer_cycle,
        interior_edges,
        induced_cycles,
        one_interior_cycles,
        pendants,
        insertion_points,
        alpha: None,
    };
    cs.alpha = alpha_parameters(&cs);
    Ok(cs)
}

/// α parameters when two pendants share an insertion point `y`, every
/// interior edge meets `y`, and the other insertion points are distinct
/// outer-cycle neighbours of `y`.
fn alpha_parameters(cs: &CoreStructure) -> Option<AlphaParams> {
    let ys = &cs.insertion_points;
    let shared = ys.iter().copied().find(|&y| ys.iter().filter(|&&z| z == y).count() == 2)?;
    if ys.iter().filter(|&&z| z == shared).count() != 2 {
        return None;
    }
    let others: Vec<usize> = ys.iter().copied().filter(|&z| z != shared).collect();
    let other_set: VertexSet = others.iter().copied().collect();
    if other_set.len() != others.len() || !others.iter().all(|&z| cs.outer_adjacent(shared, z)) {
        return None;
    }
    if !cs.interior_edges.iter().all(|&(u, v)| u == shared || v == shared) {
        return None;
    }
    let r = cs.r();
    let s = cs.position(shared).unwrap();
    let c = |i: usize| cs.outer_cycle[(s + i) % r];
    let len_at = |v: usize| cs.pendants.iter().find(|p| p.insertion_point() == v).map_or(0, |p| p.path.len());
    let at_shared: Vec<usize> =
        cs.pendants.iter().filter(|p| p.insertion_point() == shared).map(|p| p.path.len()).collect();
    let mut interior: Vec<usize> = cs
        .interior_edges
        .iter()
        .map(|&(u, v)| {
            let other = if u == shared { v } else { u };
            (cs.position(other).unwrap() + r - s) % r
        })
        .collect();
    interior.sort_unstable();
    Some(AlphaParams { r, p1: at_shared[0], p2: at_shared[1], p3: len_at(c(r - 1)), p4: len_at(c(1)), interior })
}

/// The map `φ` from insertion points to the one-interior-edge cycles `C¹, C²`
/// (indices 0 and 1). Empty for a cycle core.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PhiAssignment {
    pub map: Vec<(usize, usize)>,
}

/// Every `φ` with `y ∈ φ(y)`, at most two points per cycle, and points
/// sharing a cycle consecutive on the outer-cycle.
pub fn phi_assignments(cs: &CoreStructure, points: &[usize], cycles: &[VertexSet]) -> Vec<Vec<usize>> {
    let k = points.len();
    let m = cycles.len();
    let mut out = Vec::new();
    let total = m.pow(k as u32);
    'maps: for code in 0..total {
        let mut phi = Vec::with_capacity(k);
        let mut c = code;
        for _ in 0..k {
            phi.push(c % m);
            c /= m;
        }
        for i in 0..k {
            if !cycles[phi[i]].contains(points[i]) {
                continue 'maps;
            }
        }
        for j in 0..m {
            if phi.iter().filter(|&&p| p == j).count() > 2 {
                continue 'maps;
            }
        }
        for i in 0..k {
            for j in i + 1..k {
                if phi[i] == phi[j] && !cs.outer_adjacent(points[i], points[j]) {
                    continue 'maps;
                }
            }
        }
        out.push(phi);
    }
    out
}

/// Induced subgraphs allowed on three or four insertion points of a cycle core:
/// `K₂∪K₁, 2K₂, P₃, P₄, C₃, C₄`, recognized by (vertex count, degree sequence).
fn allowed_cycle_core_points(cs: &CoreStructure, ys: &[usize]) -> bool {
    let mut degs: Vec<usize> = ys.iter().map(|&a| ys.iter().filter(|&&b| cs.outer_adjacent(a, b)).count()).collect();
    degs.sort_unstable();
    matches!(
        (ys.len(), degs.as_slice()),
        (3, [0, 1, 1]) | (4, [1, 1, 1, 1]) | (3, [1, 1, 2]) | (4, [1, 1, 2, 2]) | (3, [2, 2, 2]) | (4, [2, 2, 2, 2])
    )
}

/// The insertion-point condition: for a non-cycle core a valid `φ` onto the
/// two one-interior-edge cycles; for a cycle core with at least three
/// pendants, the induced subgraph on the insertion points is in the allowed
/// list. Insertion points must be distinct.
pub fn spokes_assignment(cs: &CoreStructure) -> Result<Option<PhiAssignment>, PathsError> {
    if !cs.distinct_insertion_points() {
        return Err(PathsError::Precondition("insertion points are not distinct".into()));
    }
    let ys = &cs.insertion_points;
    if cs.is_cycle_core() {
        let ok = ys.len() < 3 || allowed_cycle_core_points(cs, ys);
        return Ok(ok.then(|| PhiAssignment { map: Vec::new() }));
    }
    let cycles = cs.one_interior_sets();
    if cycles.len() != 2 {
        return Err(PathsError::Precondition(format!("{} one-interior-edge cycles, expected 2", cycles.len())));
    }
    Ok(phi_assignments(cs, ys, &cycles)
        .into_iter()
        .next()
        .map(|phi| PhiAssignment { map: ys.iter().copied().zip(phi).collect() }))
}

/// Conditions 2 to 4 of the characterization (1 is checked while building `cs`).
pub(super) fn theorem_conditions(cs: &CoreStructure) -> Result<(), String> {
    if cs.induced_cycles.iter().any(|c| c.interior_edges.len() > 2) {
        return Err("an induced cycle has more than two interior edges".into());
    }
    if !cs.is_cycle_core() && cs.one_interior_cycles.len() != 2 {
        return Err(format!("{} induced cycles with exactly one interior edge", cs.one_interior_cycles.len()));
    }
    if cs.alpha.is_some() {
        return Ok(());
    }
    if !cs.distinct_insertion_points() {
        return Err("repeated insertion point outside the α shape".into());
    }
    match spokes_assignment(cs) {
        Ok(Some(_)) => Ok(()),
        Ok(None) => Err("no valid insertion-point assignment".into()),
        Err(e) => Err(e.to_string()),
    }
}

/// Splits the outer-cycle into two arcs for `P` and `Q`, hangs each pendant
/// path off an arc end at its insertion point, and returns the first
/// combination that is a valid certificate.
pub(super) fn assemble_certificate(g: &Graph, cs: &CoreStructure) -> Option<TwoPathsCertificate> {
    let r = cs.r();
    let c = &cs.outer_cycle;
    for start in 0..r {
        for len in 1..r {
            let p_arc: Vec<usize> = (0..len).map(|i| c[(start + i) % r]).collect();
            let q_arc: Vec<usize> = (len..r).map(|i| c[(start + i) % r]).collect();
            if [&p_arc, &q_arc].iter().any(|arc| g.induced_path_order(arc.iter().copied().collect()).is_none()) {
                continue;
            }
            // slots: (arc, front?) with the vertex at that end
            let slots = [
                (0, true, p_arc[0]),
                (0, false, *p_arc.last().unwrap()),
                (1, true, q_arc[0]),
                (1, false, *q_arc.last().unwrap()),
            ];
            let mut chosen = vec![usize::MAX; cs.pendants.len()];
            if let Some(cert) = place(g, cs, &p_arc, &q_arc, &slots, 0, &mut chosen) {
                return Some(cert);
            }
        }
    }
    None
}

fn place(
    g: &Graph,
    cs: &CoreStructure,
    p_arc: &[usize],
    q_arc: &[usize],
    slots: &[(usize, bool, usize); 4],
    i: usize,
    chosen: &mut Vec<usize>,
) -> Option<TwoPathsCertificate> {
    if i == cs.pendants.len() {
        let build = |arc_idx: usize, arc: &[usize]| {
            let mut out = Vec::new();
            for (j, &s) in chosen.iter().enumerate() {
                if slots[s].0 == arc_idx && slots[s].1 {
                    out.extend(cs.pendants[j].path.iter().rev());
                }
            }
            out.extend_from_slice(arc);
            for (j, &s) in chosen.iter().enumerate() {
                if slots[s].0 == arc_idx && !slots[s].1 {
                    out.extend(cs.pendants[j].path.iter());
                }
            }
            out
        };
        let path_p = build(0, p_arc);
        let q = build(1, q_arc);
        let mut q_rev = q.clone();
        q_rev.reverse();
        for path_q in [q, q_rev] {
            let cert = TwoPathsCertificate { path_p: path_p.clone(), path_q };
            if certificate_valid(g, &cert) {
                return Some(cert);
            }
        }
        return None;
    }
    let y = cs.pendants[i].insertion_point();
    for (s, slot) in slots.iter().enumerate() {
        if slot.2 == y && !chosen[..i].contains(&s) {
            chosen[i] = s;
            if let Some(cert) = place(g, cs, p_arc, q_arc, slots, i + 1, chosen) {
                return Some(cert);
            }
        }
    }
    None
}

/// Number of outer-cycle edges on a shortest `x`–`y` walk that avoids
/// interior edges; pendant edges cost nothing.
pub fn dstar(g: &Graph, cs: &CoreStructure, x: usize, y: usize) -> Result<usize, PathsError> {
    let n = g.n();
    if x >= n || y >= n {
        return Err(PathsError::Precondition(format!("vertex out of range for n = {n}")));
    }
    let core = cs.core();
    let mut dist = vec![usize::MAX; n];
    let mut dq = VecDeque::new();
    dist[x] = 0;
    dq.push_back(x);
    while let Some(u) = dq.pop_front() {
        for v in g.neighbors(u).iter() {
            let both_core = core.contains(u) && core.contains(v);
            if both_core && !cs.outer_adjacent(u, v) {
                continue;
            }
            let w = usize::from(both_core);
            if dist[u] + w < dist[v] {
                dist[v] = dist[u] + w;
                if w == 0 {
                    dq.push_front(v);
                } else {
                    dq.push_back(v);
                }
            }
        }
    }
    match dist[y] {
        usize::MAX => Err(PathsError::Unreachable(x, y)),
        d => Ok(d),
    }
}
