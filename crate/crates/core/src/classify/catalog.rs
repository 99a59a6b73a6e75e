//! The special graph types with maximum nullity two, stored as data.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::ClassifyError;
use crate::graph::{canonical_form, Graph};

const BUNDLED: &str = include_str!("../../data/special_graphs.json");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EntryKind {
    /// Exactly the base graph.
    Fixed,
    /// The base graph with each marked edge subdivided any number of times.
    Family,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    /// 1-based type index.
    pub index: usize,
    pub kind: EntryKind,
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    /// Named vertices used by the non-probe table, e.g. `b`, `d`, `e`.
    #[serde(default)]
    pub labels: BTreeMap<String, usize>,
    /// Edges that may be subdivided (families only).
    #[serde(default)]
    pub subdividable: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecialGraphCatalog {
    pub version: u32,
    pub status: String,
    #[serde(default)]
    pub note: String,
    pub entries: Vec<CatalogEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpecialMatch {
    pub index: usize,
    /// Catalog label to vertex of the matched graph.
    pub labeling: BTreeMap<String, usize>,
}

impl SpecialGraphCatalog {
    pub fn bundled() -> Self {
        serde_json::from_str(BUNDLED).expect("bundled catalog is valid JSON")
    }

    pub fn from_json(text: &str) -> Result<Self, ClassifyError> {
        serde_json::from_str(text).map_err(|e| ClassifyError::Catalog(e.to_string()))
    }

    pub fn is_initialized(&self) -> bool {
        !self.entries.is_empty()
    }

    /// The first entry `g` is isomorphic to (families: some subdivision of
    /// the marked edges), with the labeled vertices carried over.
    pub fn find(&self, g: &Graph) -> Result<Option<SpecialMatch>, ClassifyError> {
        if !self.is_initialized() {
            return Err(ClassifyError::CatalogNotInitialized);
        }
        for entry in &self.entries {
            for candidate in entry.instances(g.n())? {
                if let Some(map) = isomorphism(&candidate, g) {
                    let labeling = entry.labels.iter().map(|(k, &v)| (k.clone(), map[v])).collect();
                    return Ok(Some(SpecialMatch { index: entry.index, labeling }));
                }
            }
        }
        Ok(None)
    }
}

impl CatalogEntry {
    fn base(&self) -> Result<Graph, ClassifyError> {
        Graph::from_edges(self.n, &self.edges).map_err(|e| ClassifyError::Catalog(e.to_string()))
    }

    /// Members of the entry on exactly `n` vertices. Base labels are kept.
    fn instances(&self, n: usize) -> Result<Vec<Graph>, ClassifyError> {
        let base = self.base()?;
        if n < self.n {
            return Ok(Vec::new());
        }
        let extra = n - self.n;
        match self.kind {
            EntryKind::Fixed => Ok(if extra == 0 { vec![base] } else { Vec::new() }),
            EntryKind::Family => {
                let m = self.subdividable.len();
                if m == 0 {
                    return Ok(if extra == 0 { vec![base] } else { Vec::new() });
                }
                let mut out = Vec::new();
                let mut split = vec![0; m];
                compositions(extra, 0, &mut split, &mut |counts| {
                    out.push(subdivide(&base, &self.subdividable, counts))
                });
                Ok(out)
            }
        }
    }
}

fn compositions(left: usize, i: usize, split: &mut Vec<usize>, emit: &mut impl FnMut(&[usize])) {
    if i + 1 == split.len() {
        split[i] = left;
        emit(split);
        return;
    }
    for k in 0..=left {
        split[i] = k;
        compositions(left - k, i + 1, split, emit);
    }
}

fn subdivide(base: &Graph, marked: &[(usize, usize)], counts: &[usize]) -> Graph {
    let total: usize = counts.iter().sum();
    let mut g = base.disjoint_union(&Graph::empty(total));
    let mut next = base.n();
    for (&(u, v), &k) in marked.iter().zip(counts) {
        if k == 0 {
            continue;
        }
        g.remove_edge(u, v);
        let mut prev = u;
        for _ in 0..k {
            g.add_edge(prev, next);
            prev = next;
            next += 1;
        }
        g.add_edge(prev, v);
    }
    g
}

/// `map[a] = b` when `a` and `b` are isomorphic.
fn isomorphism(a: &Graph, b: &Graph) -> Option<Vec<usize>> {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return None;
    }
    let (ca, oa) = canonical_form(a);
    let (cb, ob) = canonical_form(b);
    if ca != cb {
        return None;
    }
    let mut map = vec![0; a.n()];
    for (i, &v) in oa.iter().enumerate() {
        map[v] = ob[i];
    }
    Some(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    fn fixture() -> SpecialGraphCatalog {
        SpecialGraphCatalog::from_json(
            r#"{"version":1,"status":"fixture","entries":[
                {"index":1,"kind":"fixed","n":4,"edges":[[0,1],[1,2],[2,3],[3,0],[0,2]],"labels":{"b":1,"e":3}},
                {"index":2,"kind":"family","n":3,"edges":[[0,1],[1,2],[2,0]],"subdividable":[[0,1]],"labels":{"b":2}}
            ]}"#,
        )
        .unwrap()
    }

    #[test]
    fn bundled_catalog_is_untranscribed() {
        let c = SpecialGraphCatalog::bundled();
        assert!(!c.is_initialized());
        assert_eq!(c.find(&path(5)), Err(ClassifyError::CatalogNotInitialized));
    }

    #[test]
    fn fixture_matches_with_labels() {
        let c = fixture();
        let diamond = cycle(4).with_edge(1, 3);
        let m = c.find(&diamond).unwrap().unwrap();
        assert_eq!(m.index, 1);
        // the labeled pair is the non-adjacent pair of the diamond
        assert!(!diamond.has_edge(m.labeling["b"], m.labeling["e"]));
        assert_eq!(c.find(&path(5)).unwrap(), None);
    }

    #[test]
    fn family_entries_allow_subdivision() {
        let c = fixture();
        let m = c.find(&cycle(6)).unwrap().unwrap();
        assert_eq!(m.index, 2);
        assert_eq!(c.find(&cycle(3)).unwrap().unwrap().index, 2);
    }
}
