//! All reversals of a probe forcing set, and the vertex-cut structure of
//! probe graphs whose forcing number equals `|N|`.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use super::{is_probe_forcing_set, minimum_probe_forcing_sets, probe_zero_forcing_number, ForcingError, Rules};
use crate::graph::{subsets_of_size, ProbeGraph, VertexSet};

/// Largest vertex count for which every force order is explored.
pub const STRUCTURE_LIMIT: usize = 8;

/// Every reversal of `initial` over all orders in which forces can be
/// applied, sorted. Empty if `initial` is not a probe forcing set.
///
/// A vertex forces at most once (afterwards it has no white neighbour), so
/// the chain ends are the blue vertices that have not forced yet, and the
/// state is (blue, used forcers).
pub fn all_reversals(pg: &ProbeGraph, initial: VertexSet) -> Vec<VertexSet> {
    let rules = Rules { g: pg.graph(), nonprobes: pg.nonprobes() };
    let all = pg.graph().vertices();
    let mut memo: HashMap<(VertexSet, VertexSet), BTreeSet<VertexSet>> = HashMap::new();

    fn explore(
        rules: &Rules,
        all: VertexSet,
        blue: VertexSet,
        used: VertexSet,
        memo: &mut HashMap<(VertexSet, VertexSet), BTreeSet<VertexSet>>,
    ) -> BTreeSet<VertexSet> {
        if blue == all {
            return BTreeSet::from([blue - used]);
        }
        if let Some(r) = memo.get(&(blue, used)) {
            return r.clone();
        }
        let mut out = BTreeSet::new();
        for v in blue.iter().filter(|&v| rules.may_force(v, blue)) {
            let white = rules.g.neighbors(v) - blue;
            if white.len() == 1 {
                out.extend(explore(rules, all, blue | white, used.with(v), memo));
            }
        }
        memo.insert((blue, used), out.clone());
        out
    }

    explore(&rules, all, initial, VertexSet::EMPTY, &mut memo).into_iter().collect()
}

/// Outcome of checking the vertex-cut theorem on one probe graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexCutReport {
    pub nonprobes: VertexSet,
    /// `G − N` has at least two components.
    pub nonprobes_cut: bool,
    pub minimum_sets: Vec<VertexSet>,
    /// Every reversal of every minimum forcing set not containing `N` is `N`.
    pub minimum_reading_holds: bool,
    /// The same statement over all forcing sets not containing `N`; a
    /// larger set has a larger reversal, so this reading fails as soon as
    /// such a set of size `|N| + 1` exists. Reported, not asserted.
    pub all_sets_reading_holds: bool,
    /// A minimum set with a reversal other than `N`, when `N` is no cut.
    pub counterexample: Option<(VertexSet, VertexSet)>,
    pub theorem_holds: bool,
}

pub fn check_min_forcing_structure(pg: &ProbeGraph) -> Result<VertexCutReport, ForcingError> {
    let n = pg.n();
    if n > STRUCTURE_LIMIT {
        return Err(ForcingError::SearchLimit { n, limit: STRUCTURE_LIMIT });
    }
    let nonprobes = pg.nonprobes();
    let (z, _) = probe_zero_forcing_number(pg)?;
    if z != nonprobes.len() {
        return Err(ForcingError::ForcingNumberNotN { z, nonprobes: nonprobes.len() });
    }
    let nonprobes_cut = pg.graph().is_vertex_cut(nonprobes);
    let minimum_sets = minimum_probe_forcing_sets(pg)?;
    let mut counterexample = None;
    for &b in minimum_sets.iter().filter(|b| !nonprobes.is_subset(**b)) {
        if let Some(&r) = all_reversals(pg, b).iter().find(|&&r| r != nonprobes) {
            counterexample = Some((b, r));
            break;
        }
    }
    let minimum_reading_holds = counterexample.is_none();
    let larger_exists = subsets_of_size(n, z + 1).any(|b| !nonprobes.is_subset(b) && is_probe_forcing_set(pg, b));
    Ok(VertexCutReport {
        nonprobes,
        nonprobes_cut,
        minimum_sets,
        minimum_reading_holds,
        all_sets_reading_holds: nonprobes_cut || (minimum_reading_holds && !larger_exists),
        counterexample: if nonprobes_cut { None } else { counterexample },
        theorem_holds: nonprobes_cut || minimum_reading_holds,
    })
}
