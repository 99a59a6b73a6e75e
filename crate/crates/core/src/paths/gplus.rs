//! When does adding the edge `xy` (for a non-probe pair `N = {x, y}`) keep a
//! graph of two parallel paths a graph of two parallel paths?
//!
//! [`gplus_literal`] evaluates the case propositions exactly as stated.
//! [`gplus_is_two_parallel_paths`] is the corrected decider: it applies the
//! characterization directly to `G⁺`, which the propositions specialize, and
//! reports the literal clause alongside.

use serde::Serialize;

use super::core::{core_structure, dstar, phi_assignments, CoreStructure};
use super::{is_two_parallel_paths, recognize_tree, PathsError};
use crate::graph::{Graph, ProbeGraph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GplusCase {
    /// `G` is two disjoint paths.
    Disconnected,
    /// Empty core.
    Tree,
    /// Core not a cycle, `N ⊆ R`.
    CoreNoncycleInside,
    /// Core not a cycle, a non-probe on a pendant path.
    CoreNoncyclePendant,
    /// Core a cycle, `N ⊆ R`.
    CoreCycleInside,
    /// Core a cycle, a non-probe on a pendant path.
    CoreCyclePendant,
    /// Repeated insertion point.
    Alpha,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GplusVerdict {
    /// Whether `G + xy` is a graph of two parallel paths.
    pub value: bool,
    /// The case proposition's clause evaluated as written.
    pub literal: bool,
    pub case: GplusCase,
}

fn nonprobe_pair(pg: &ProbeGraph) -> Result<(usize, usize), PathsError> {
    let n = pg.nonprobes().to_vec();
    if n.len() != 2 {
        return Err(PathsError::Precondition(format!("|N| = {}, expected 2", n.len())));
    }
    Ok((n[0], n[1]))
}

/// Decides whether `G⁺ = G + xy` is a graph of two parallel paths.
pub fn gplus_is_two_parallel_paths(pg: &ProbeGraph) -> Result<GplusVerdict, PathsError> {
    let (literal, case) = gplus_literal(pg)?;
    let (x, y) = nonprobe_pair(pg)?;
    let value = is_two_parallel_paths(&pg.graph().with_edge(x, y));
    Ok(GplusVerdict { value, literal, case })
}

/// The case propositions, read literally.
pub fn gplus_literal(pg: &ProbeGraph) -> Result<(bool, GplusCase), PathsError> {
    let g = pg.graph();
    let (x, y) = nonprobe_pair(pg)?;
    if !is_two_parallel_paths(g) {
        return Err(PathsError::Precondition("G is not a graph of two parallel paths".into()));
    }
    if !g.is_connected() {
        let comps = g.components();
        let split = comps.iter().any(|c| c.contains(x) != c.contains(y));
        let value = split && recognize_tree(&g.with_edge(x, y));
        return Ok((value, GplusCase::Disconnected));
    }
    if g.is_tree() {
        return Ok((tree_clause(g, x, y), GplusCase::Tree));
    }
    let cs = core_structure(g)?;
    if cs.alpha.is_some() || !cs.distinct_insertion_points() {
        return Ok((alpha_clause(g, &cs, x, y)?, GplusCase::Alpha));
    }
    let core = cs.core();
    let inside = core.contains(x) && core.contains(y);
    Ok(match (cs.is_cycle_core(), inside) {
        (false, true) => (mess1(g, &cs, x, y), GplusCase::CoreNoncycleInside),
        (false, false) => (either_on_pendant(&cs, x, y, |a, b| mess2(&cs, a, b)), GplusCase::CoreNoncyclePendant),
        (true, true) => (cycle_mess1(&cs, x, y), GplusCase::CoreCycleInside),
        (true, false) => (either_on_pendant(&cs, x, y, |a, b| cycle_mess2(g, &cs, a, b)), GplusCase::CoreCyclePendant),
    })
}

/// Applies a clause stated "with `x` on a pendant path" to each labeling of
/// the pair that puts the first argument on a pendant.
fn either_on_pendant(cs: &CoreStructure, x: usize, y: usize, clause: impl Fn(usize, usize) -> bool) -> bool {
    let on = |v: usize| cs.pendant_of(v).is_some();
    match (on(x), on(y)) {
        (true, true) => clause(x, y) || clause(y, x),
        (true, false) => clause(x, y),
        (false, true) => clause(y, x),
        (false, false) => false,
    }
}

fn tree_clause(g: &Graph, x: usize, y: usize) -> bool {
    let s: Vec<usize> = g.vertices().iter().filter(|&v| g.degree(v) == 3).collect();
    if s.len() <= 1 {
        return true;
    }
    let (a, b) = (s[0], s[1]);
    let h = g.without_edge(a, b);
    let side = h.reach(a, h.vertices());
    let sset: VertexSet = [a, b].into_iter().collect();
    side.contains(x) != side.contains(y) && VertexSet::from_iter([x, y]) != sset
}

fn crosses_interior(cs: &CoreStructure, x: usize, y: usize) -> bool {
    let (l, r) = (cs.arc(x, y, false), cs.arc(y, x, false));
    cs.interior_edges.iter().any(|&(u, v)| (l.contains(u) && r.contains(v)) || (l.contains(v) && r.contains(u)))
}

/// Induced cycles of the core of `g + xy` with their interior-edge counts,
/// relative to the unchanged outer-cycle.
fn core_cycles_plus(g: &Graph, cs: &CoreStructure, x: usize, y: usize) -> Vec<(VertexSet, usize)> {
    let h = g.with_edge(x, y);
    let core = cs.core();
    core.subsets()
        .filter(|&s| h.induces_cycle(s))
        .map(|s| {
            let interior = h
                .edges()
                .into_iter()
                .filter(|&(u, v)| s.contains(u) && s.contains(v) && !cs.outer_adjacent(u, v))
                .count();
            (s, interior)
        })
        .collect()
}

fn mess1(g: &Graph, cs: &CoreStructure, x: usize, y: usize) -> bool {
    if crosses_interior(cs, x, y) {
        return false;
    }
    let cycles = core_cycles_plus(g, cs, x, y);
    if cycles.iter().any(|&(_, k)| k > 2) {
        return false;
    }
    let ends: Vec<VertexSet> = cycles.iter().filter(|&&(_, k)| k == 1).map(|&(s, _)| s).collect();
    if ends.len() > 2 {
        return false;
    }
    let ys = &cs.insertion_points;
    if ys.is_empty() {
        return true;
    }
    !ends.is_empty() && !phi_assignments(cs, ys, &ends).is_empty()
}

fn g_end_cycles(cs: &CoreStructure) -> Vec<VertexSet> {
    cs.one_interior_cycles.iter().map(|c| c.iter().copied().collect()).collect()
}

/// `x` on pendant `P¹`.
fn mess2(cs: &CoreStructure, x: usize, y: usize) -> bool {
    let i1 = cs.pendant_of(x).expect("x on a pendant");
    let y1 = cs.pendants[i1].insertion_point();
    let ys = &cs.insertion_points;
    let cycles = g_end_cycles(cs);
    let phis = phi_assignments(cs, ys, &cycles);
    let idx = |v: usize| ys.iter().position(|&z| z == v).unwrap();
    // 1a ∧ 2a over every choice of P²
    let clause_a = cs.pendants.iter().enumerate().any(|(i2, p2)| {
        if i2 == i1 {
            return false;
        }
        let y2 = p2.insertion_point();
        let closed = p2.vertex_set().with(y2);
        cs.outer_adjacent(y1, y2) && closed.contains(y) && phis.iter().any(|phi| phi[idx(y1)] == phi[idx(y2)])
    });
    // 1b ∧ 2b, reading |φ⁻¹(y₁)| = 1 as "φ(y₁) receives only y₁"
    let clause_b =
        cs.outer_adjacent(y, y1) && phis.iter().any(|phi| phi.iter().filter(|&&c| c == phi[idx(y1)]).count() == 1);
    clause_a || clause_b
}

/// Sides of each insertion point: bit 0 for `C[x,y]`, bit 1 for `C[y,x]`.
fn sides(cs: &CoreStructure, x: usize, y: usize) -> Vec<u8> {
    let (l, r) = (cs.arc(x, y, true), cs.arc(y, x, true));
    cs.insertion_points.iter().map(|&p| u8::from(l.contains(p)) | (u8::from(r.contains(p)) << 1)).collect()
}

fn cycle_mess1(cs: &CoreStructure, x: usize, y: usize) -> bool {
    let ys = &cs.insertion_points;
    let side = sides(cs, x, y);
    let k = ys.len();
    // every way of putting each point on a side it lies on
    let mut choices = Vec::new();
    for code in 0..(1u32 << k) {
        let pick: Vec<u8> = (0..k).map(|i| if code >> i & 1 == 0 { 1 } else { 2 }).collect();
        if (0..k).all(|i| side[i] & pick[i] != 0) {
            choices.push(pick);
        }
    }
    let adjacent_pair = |members: &[usize]| members.len() == 2 && cs.outer_adjacent(ys[members[0]], ys[members[1]]);
    match k {
        0 | 1 => true,
        2 => choices.iter().any(|p| p[0] != p[1]),
        3 | 4 => choices.iter().any(|p| {
            let a: Vec<usize> = (0..k).filter(|&i| p[i] == 1).collect();
            let b: Vec<usize> = (0..k).filter(|&i| p[i] == 2).collect();
            if k == 3 {
                (adjacent_pair(&a) && b.len() == 1) || (adjacent_pair(&b) && a.len() == 1)
            } else {
                adjacent_pair(&a) && adjacent_pair(&b)
            }
        }),
        _ => false,
    }
}

fn cycle_mess2(g: &Graph, cs: &CoreStructure, x: usize, y: usize) -> bool {
    if dstar(g, cs, x, y).ok() != Some(1) {
        return false;
    }
    let i1 = cs.pendant_of(x).expect("x on a pendant");
    let others: Vec<usize> = (0..cs.pendants.len()).filter(|&i| i != i1).collect();
    let in_closed = |i: usize| cs.pendants[i].vertex_set().with(cs.pendants[i].insertion_point()).contains(y);
    match cs.pendants.len() {
        1 | 2 => true,
        3 => {
            others.iter().any(|&i| in_closed(i))
                || cs.outer_adjacent(cs.pendants[others[0]].insertion_point(), cs.pendants[others[1]].insertion_point())
        }
        4 => others.iter().any(|&i| in_closed(i)),
        _ => false,
    }
}

fn alpha_clause(g: &Graph, cs: &CoreStructure, x: usize, y: usize) -> Result<bool, PathsError> {
    if cs.alpha.is_none() {
        return Err(PathsError::Precondition("repeated insertion point without α shape".into()));
    }
    let c0 = cs
        .insertion_points
        .iter()
        .copied()
        .find(|&p| cs.insertion_points.iter().filter(|&&q| q == p).count() == 2)
        .unwrap();
    let core = cs.core();
    if core.contains(x) && core.contains(y) {
        return Ok(x == c0 || y == c0);
    }
    let near: VertexSet = cs
        .pendants
        .iter()
        .filter(|p| p.insertion_point() == c0)
        .fold(VertexSet::singleton(c0), |acc, p| acc | p.vertex_set());
    if !(near.contains(x) || near.contains(y)) {
        return Ok(false);
    }
    Ok(dstar(g, cs, x, y)? == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    fn probe(g: Graph, x: usize, y: usize) -> ProbeGraph {
        ProbeGraph::new(g, [x, y].into_iter().collect::<VertexSet>()).unwrap()
    }

    #[test]
    fn path_closing_into_cycle() {
        let v = gplus_is_two_parallel_paths(&probe(path(6), 0, 5)).unwrap();
        assert!(v.value && v.literal);
        assert_eq!(v.case, GplusCase::Tree);
    }

    #[test]
    fn double_spider_same_side() {
        // degree-3 vertices 0 and 1; leaves 2,3 on 0's side
        let g = Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]).unwrap();
        let v = gplus_is_two_parallel_paths(&probe(g.clone(), 2, 3)).unwrap();
        assert!(!v.value && !v.literal);
        let v = gplus_is_two_parallel_paths(&probe(g, 2, 4)).unwrap();
        assert!(v.value && v.literal);
    }

    #[test]
    fn pendant_too_far() {
        let mut g = cycle(6).disjoint_union(&Graph::empty(1));
        g.add_edge(0, 6);
        let v = gplus_is_two_parallel_paths(&probe(g, 6, 2)).unwrap();
        assert!(!v.value && !v.literal);
        assert_eq!(v.case, GplusCase::CoreCyclePendant);
    }

    #[test]
    fn preconditions() {
        assert!(gplus_is_two_parallel_paths(&ProbeGraph::plain(path(3))).is_err());
        assert!(gplus_is_two_parallel_paths(&probe(complete_bipartite(2, 3), 0, 1)).is_err());
    }
}
