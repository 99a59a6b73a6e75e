//! Deciders for the extreme minimum-rank classes of a probe graph.

mod catalog;
mod complement;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, ProbeGraph, VertexSet};
use crate::linalg::{rat, RationalMatrix};
use crate::paths::{gplus_is_two_parallel_paths, is_two_parallel_paths, PathsError};
use crate::witness::{mr_interval, RankInterval, WitnessError};

pub use catalog::{CatalogEntry, EntryKind, SpecialGraphCatalog, SpecialMatch};
pub use complement::{complement_form_exhaustive, complement_form_recognizer, ComplementForm};

/// Largest `|N|` for which completions are enumerated.
pub const COMPLETION_LIMIT: usize = 6;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("special graph catalog has no transcribed entries")]
    CatalogNotInitialized,
    #[error("catalog: {0}")]
    Catalog(String),
    #[error("{nonprobes} non-probes exceed the completion limit of {limit}")]
    CompletionBudget { nonprobes: usize, limit: usize },
    #[error("the graph must be connected")]
    NotConnected,
    #[error(transparent)]
    Paths(#[from] PathsError),
    #[error(transparent)]
    Witness(#[from] WitnessError),
}

pub fn is_mr0(pg: &ProbeGraph) -> bool {
    pg.graph().edge_count() == 0
}

/// `G = (K_a ∨ K̄_b) ∪ K̄_c`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplitDecomposition {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub clique: VertexSet,
    pub independent: VertexSet,
    pub isolated: VertexSet,
}

/// The decomposition when `mr(G^N) = 1`: a complete split graph plus isolated
/// vertices, with the independent side inside `N` once it has two vertices.
pub fn is_mr1(pg: &ProbeGraph) -> Option<SplitDecomposition> {
    let g = pg.graph();
    if g.edge_count() == 0 {
        return None;
    }
    let isolated: VertexSet = g.vertices().iter().filter(|&v| g.degree(v) == 0).collect();
    let rest = g.vertices() - isolated;
    let clique: VertexSet = rest.iter().filter(|&v| g.degree(v) + 1 == rest.len()).collect();
    let independent = rest - clique;
    let split = !clique.is_empty()
        && g.is_independent_set(independent)
        && independent.iter().all(|v| clique.is_subset(g.neighbors(v)));
    if !split || (independent.len() >= 2 && !independent.is_subset(pg.nonprobes())) {
        return None;
    }
    Some(SplitDecomposition { a: clique.len(), b: independent.len(), c: isolated.len(), clique, independent, isolated })
}

/// The rank-one all-ones matrix on `clique ∪ independent`, in `S(G^N)` when
/// the decomposition is valid.
pub fn mr1_matrix(pg: &ProbeGraph, d: &SplitDecomposition) -> RationalMatrix {
    let support = d.clique | d.independent;
    RationalMatrix::from_fn(pg.n(), pg.n(), |i, j| rat(i64::from(support.contains(i) && support.contains(j))))
}

/// A completion of `G^N` whose minimum rank is at most two, as the added
/// edge set.
pub fn is_mr_le2(pg: &ProbeGraph) -> Result<Option<Vec<(usize, usize)>>, ClassifyError> {
    let k = pg.nonprobes().len();
    if k > COMPLETION_LIMIT {
        return Err(ClassifyError::CompletionBudget { nonprobes: k, limit: COMPLETION_LIMIT });
    }
    Ok(pg.completions().find(|(h, _)| complement_form_recognizer(h).is_some()).map(|(_, s)| s))
}

pub fn is_mr_nminus1(pg: &ProbeGraph) -> bool {
    pg.nonprobes().len() <= 1 && pg.graph().is_path()
}

/// Matches `g` against the bundled catalog.
pub fn special_graph_match(g: &Graph) -> Result<Option<SpecialMatch>, ClassifyError> {
    SpecialGraphCatalog::bundled().find(g)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NMinus2Case {
    /// `|N| ≤ 1`, parallel paths other than a path, or a special type.
    FewNonprobes,
    /// `|N| = 2`, non-empty core, `G⁺` parallel paths.
    CoreGplus,
    /// `|N| = 2`, tree, `G⁺` parallel paths.
    TreeGplus,
    /// A special type with the listed non-probe pair.
    SpecialPair,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NMinus2Verdict {
    pub value: bool,
    pub case: Option<NMinus2Case>,
    /// False when the special catalog could not be consulted.
    pub catalog_consulted: bool,
}

/// Pairs `(type index, label, label)` for which a special type keeps rank `n − 2`.
const SPECIAL_PAIRS: [(usize, &str, &str); 3] = [(2, "b", "e"), (3, "b", "d"), (5, "b", "e")];

/// `mr(G^N) = n − 2` for connected `G`, by the four cases of the
/// characterization. The `G⁺` cases use the corrected decider.
pub fn is_mr_nminus2_with(pg: &ProbeGraph, catalog: &SpecialGraphCatalog) -> Result<NMinus2Verdict, ClassifyError> {
    let g = pg.graph();
    if !g.is_connected() {
        return Err(ClassifyError::NotConnected);
    }
    let special = match catalog.find(g) {
        Ok(m) => Some(m),
        Err(ClassifyError::CatalogNotInitialized) => None,
        Err(e) => return Err(e),
    };
    let catalog_consulted = special.is_some();
    let special = special.flatten();
    let found = |case| Ok(NMinus2Verdict { value: true, case: Some(case), catalog_consulted });
    let k = pg.nonprobes().len();
    if k <= 1 {
        if (is_two_parallel_paths(g) && !g.is_path()) || special.is_some() {
            return found(NMinus2Case::FewNonprobes);
        }
    } else if k == 2 {
        if is_two_parallel_paths(g) && gplus_is_two_parallel_paths(pg)?.value {
            return found(if g.is_tree() { NMinus2Case::TreeGplus } else { NMinus2Case::CoreGplus });
        }
        if let Some(m) = &special {
            let hit = SPECIAL_PAIRS.iter().any(|&(i, l1, l2)| {
                m.index == i && [l1, l2].iter().all(|l| m.labeling.get(*l).is_some_and(|&v| pg.nonprobes().contains(v)))
            });
            if hit {
                return found(NMinus2Case::SpecialPair);
            }
        }
    }
    Ok(NMinus2Verdict { value: false, case: None, catalog_consulted })
}

pub fn is_mr_nminus2(pg: &ProbeGraph) -> Result<NMinus2Verdict, ClassifyError> {
    is_mr_nminus2_with(pg, &SpecialGraphCatalog::bundled())
}

/// Exact values of `mr(G^N)` established by the positive characterizations.
pub fn characterization_bounds(pg: &ProbeGraph) -> Vec<(usize, &'static str)> {
    let n = pg.n();
    let mut out = Vec::new();
    if is_mr0(pg) {
        out.push((0, "empty graph"));
    }
    if is_mr1(pg).is_some() {
        out.push((1, "complete split graph"));
    }
    if let Ok(Some(_)) = is_mr_le2(pg) {
        out.push((2, "complement form of a completion"));
    }
    if is_mr_nminus1(pg) {
        out.push((n - 1, "path"));
    }
    if let Ok(NMinus2Verdict { value: true, .. }) = is_mr_nminus2(pg) {
        out.push((n - 2, "two parallel paths or special type"));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Zero,
    One { decomposition: SplitDecomposition },
    AtMostTwo { added_edges: Vec<(usize, usize)> },
    ExactlyNMinus2 { case: NMinus2Case },
    ExactlyNMinus1,
    Unresolved,
}

impl Verdict {
    /// The exact value or upper bound the verdict asserts.
    pub fn value(&self, n: usize) -> Option<usize> {
        match self {
            Verdict::Zero => Some(0),
            Verdict::One { .. } => Some(1),
            Verdict::AtMostTwo { .. } => Some(2),
            Verdict::ExactlyNMinus2 { .. } => Some(n - 2),
            Verdict::ExactlyNMinus1 => Some(n - 1),
            Verdict::Unresolved => None,
        }
    }

    pub fn is_exact(&self) -> bool {
        !matches!(self, Verdict::AtMostTwo { .. } | Verdict::Unresolved)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MrClassification {
    pub verdict: Verdict,
    /// Every class that matched, in checking order.
    pub matched: Vec<&'static str>,
    pub interval: RankInterval,
}

/// First matching class in the order zero, one, at most two, `n − 1`,
/// `n − 2`; an exact `n − 1` or `n − 2` verdict replaces "at most two"
/// when both hold.
pub fn classify(pg: &ProbeGraph) -> Result<MrClassification, ClassifyError> {
    let n = pg.n();
    let interval = mr_interval(pg, None)?;
    let mut matched = Vec::new();
    let mut verdict = Verdict::Unresolved;
    if is_mr0(pg) {
        matched.push("zero");
        verdict = Verdict::Zero;
    }
    if let Some(decomposition) = is_mr1(pg) {
        matched.push("one");
        if verdict == Verdict::Unresolved {
            verdict = Verdict::One { decomposition };
        }
    }
    match is_mr_le2(pg) {
        Ok(Some(added_edges)) => {
            matched.push("at_most_two");
            if verdict == Verdict::Unresolved {
                verdict = Verdict::AtMostTwo { added_edges };
            }
        }
        Ok(None) | Err(ClassifyError::CompletionBudget { .. }) => {}
        Err(e) => return Err(e),
    }
    let replaceable = matches!(verdict, Verdict::Unresolved | Verdict::AtMostTwo { .. });
    let mut exact = None;
    if n >= 1 && is_mr_nminus1(pg) {
        matched.push("n_minus_1");
        exact = Some(Verdict::ExactlyNMinus1);
    }
    if n >= 2 && pg.graph().is_connected() {
        let v = is_mr_nminus2(pg)?;
        if let (true, Some(case)) = (v.value, v.case) {
            matched.push("n_minus_2");
            exact = exact.or(Some(Verdict::ExactlyNMinus2 { case }));
        }
    }
    if let (true, Some(e)) = (replaceable, exact) {
        verdict = e;
    }
    Ok(MrClassification { verdict, matched, interval })
}
