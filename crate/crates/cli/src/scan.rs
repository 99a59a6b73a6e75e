//! Batch verification scans over enumerated or streamed corpora.
//!
//! Every check maps one corpus graph to a [`Tally`]; the graphs are
//! processed in parallel and the tallies merged in corpus order, so the
//! report content does not depend on the thread count.

use std::collections::BTreeMap;
use std::time::Instant;

use clap::ValueEnum;
use probe_core::classify::{classify, is_mr0, is_mr1, is_mr_nminus1, is_mr_nminus2, ClassifyError};
use probe_core::forcing::{
    all_reversals, check_min_forcing_structure, is_probe_forcing_set, minimum_probe_forcing_sets,
    probe_zero_forcing_number, zero_forcing_number,
};
use probe_core::graph::families::{cycle, path};
use probe_core::graph::{emit_graph6, enumerate_graphs, Graph, ProbeGraph, VertexSet};
use probe_core::linalg::in_s_probe;
use probe_core::paths::{certificate_valid, find_certificate_bruteforce, gplus_is_two_parallel_paths, recognize};
use probe_core::witness::{construct_q, nullity_witness, sandwich_bounds, Realization};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::input::InputGraph;
use crate::CliError;

/// Failure exhibits kept per report; the failure count is always complete.
pub const MAX_EXHIBITS: usize = 25;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    /// Structural two-parallel-paths recognizer against brute force.
    OracleEquivalence,
    /// G+xy decider against brute force on G+xy.
    GplusCases,
    /// Z(G^N) against |N|, Z(G) and the nullity witness.
    ForcingBounds,
    /// Symmetric completion Q of random realizations.
    WitnessRanks,
    /// Reversals of minimum probe forcing sets are forcing sets.
    Reversal,
    /// Vertex-cut structure when Z(G^N) = |N|.
    Vertexcut,
    /// Classifier verdicts against the rank interval.
    MrConsistency,
    /// Z = M = |N| on probe paths and cycles.
    PathCycle,
    /// Z(G) = 2 iff two parallel paths and not a path.
    #[value(name = "row-z2")]
    #[serde(rename = "row-z2")]
    RowZ2,
}

impl Check {
    pub fn name(self) -> String {
        self.to_possible_value().expect("no skipped variants").get_name().to_string()
    }

    pub fn parse(name: &str) -> Result<Check, CliError> {
        Check::from_str(name, false).map_err(|_| CliError::UnknownCheck(name.to_string()))
    }

    pub fn connected_only(self) -> bool {
        matches!(self, Check::OracleEquivalence | Check::Reversal | Check::Vertexcut | Check::RowZ2)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Exhibit {
    pub graph6: String,
    pub nonprobes: VertexSet,
    pub detail: String,
}

/// Outcome of a check on part of the corpus. Merging is associative.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub tested: usize,
    pub failed: usize,
    pub exhibits: Vec<Exhibit>,
    /// Named counters for reported but non-failing observations.
    pub notes: BTreeMap<&'static str, usize>,
}

impl Tally {
    fn check(&mut self, ok: bool, g: &Graph, nonprobes: VertexSet, detail: impl FnOnce() -> String) {
        self.tested += 1;
        if !ok {
            self.fail_untested(g, nonprobes, detail());
        }
    }

    fn fail_untested(&mut self, g: &Graph, nonprobes: VertexSet, detail: String) {
        self.failed += 1;
        if self.exhibits.len() < MAX_EXHIBITS {
            self.exhibits.push(Exhibit { graph6: emit_graph6(g), nonprobes, detail });
        }
    }

    fn error(&mut self, g: &Graph, nonprobes: VertexSet, e: impl std::fmt::Display) {
        self.tested += 1;
        self.fail_untested(g, nonprobes, format!("error: {e}"));
    }

    fn note(&mut self, key: &'static str) {
        *self.notes.entry(key).or_default() += 1;
    }

    pub fn merge(mut self, other: Tally) -> Tally {
        self.tested += other.tested;
        self.failed += other.failed;
        let room = MAX_EXHIBITS.saturating_sub(self.exhibits.len());
        self.exhibits.extend(other.exhibits.into_iter().take(room));
        for (k, v) in other.notes {
            *self.notes.entry(k).or_default() += v;
        }
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Corpus {
    /// Isomorphism classes on `n_min..=n_max` vertices.
    #[serde(rename = "enumerated")]
    Enumerated,
    /// Paths and cycles on `max(n_min, 4)..=n_max` vertices.
    #[serde(rename = "path-cycle-families")]
    Families,
    /// Graphs read from a file or standard input.
    #[serde(rename = "streamed")]
    Streamed { source: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanParams {
    pub n_min: usize,
    pub n_max: usize,
    pub corpus: Corpus,
    /// Only connected graphs are checked.
    pub connected_only: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanReport {
    pub check: Check,
    pub params: ScanParams,
    pub graphs: usize,
    pub tested: usize,
    pub passed: usize,
    pub failed: usize,
    pub exhibits: Vec<Exhibit>,
    pub notes: BTreeMap<&'static str, usize>,
    pub wall_time_secs: f64,
}

impl ScanReport {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

/// Builds the corpus for `check`: paths and cycles for `path-cycle`,
/// otherwise the isomorphism classes on `n_min..=n_max` vertices.
pub fn enumerated_corpus(check: Check, n_min: usize, n_max: usize) -> Result<(Vec<Graph>, Corpus), CliError> {
    if check == Check::PathCycle {
        let graphs = (n_min.max(4)..=n_max).flat_map(|n| [path(n), cycle(n)]).collect();
        return Ok((graphs, Corpus::Families));
    }
    let mut graphs = Vec::new();
    for n in n_min.max(1)..=n_max {
        graphs.extend(enumerate_graphs(n, check.connected_only())?);
    }
    Ok((graphs, Corpus::Enumerated))
}

/// Streamed graphs, filtered by size and, where the check needs it, connectivity.
pub fn streamed_corpus(check: Check, input: &[InputGraph], n_min: usize, n_max: usize) -> Vec<Graph> {
    input
        .iter()
        .map(|ig| ig.graph.clone())
        .filter(|g| (n_min..=n_max).contains(&g.n()) && (!check.connected_only() || g.is_connected()))
        .collect()
}

/// Runs `check` over `graphs` on `threads` worker threads (0: rayon's default).
pub fn run_scan(check: Check, graphs: &[Graph], params: ScanParams, threads: usize) -> Result<ScanReport, CliError> {
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build()?;
    let tallies: Vec<Tally> =
        pool.install(|| graphs.par_iter().enumerate().map(|(i, g)| check_graph(check, i, g)).collect());
    let total = tallies.into_iter().fold(Tally::default(), Tally::merge);
    Ok(ScanReport {
        check,
        params,
        graphs: graphs.len(),
        tested: total.tested,
        passed: total.tested - total.failed,
        failed: total.failed,
        exhibits: total.exhibits,
        notes: total.notes,
        wall_time_secs: start.elapsed().as_secs_f64(),
    })
}

fn independent_sets(g: &Graph) -> impl Iterator<Item = VertexSet> + '_ {
    g.vertices().subsets().filter(|&s| g.is_independent_set(s))
}

fn probe(g: &Graph, s: VertexSet) -> ProbeGraph {
    ProbeGraph::new(g.clone(), s).expect("independent sets only")
}

/// Runs one check on one corpus graph; `index` seeds randomized checks so
/// results depend only on the corpus order.
pub fn check_graph(check: Check, index: usize, g: &Graph) -> Tally {
    let mut t = Tally::default();
    match check {
        Check::OracleEquivalence => oracle_equivalence(g, &mut t),
        Check::GplusCases => gplus_cases(g, &mut t),
        Check::ForcingBounds => forcing_bounds(g, &mut t),
        Check::WitnessRanks => witness_ranks(g, index, &mut t),
        Check::Reversal => reversals(g, &mut t),
        Check::Vertexcut => vertex_cut(g, &mut t),
        Check::MrConsistency => mr_consistency(g, &mut t),
        Check::PathCycle => path_cycle(g, &mut t),
        Check::RowZ2 => row_z2(g, &mut t),
    }
    t
}

fn oracle_equivalence(g: &Graph, t: &mut Tally) {
    let r = recognize(g);
    match find_certificate_bruteforce(g) {
        Ok(brute) => {
            let cert_ok = r.certificate.as_ref().is_none_or(|c| certificate_valid(g, c));
            t.check(r.two_parallel_paths == brute.is_some() && cert_ok, g, VertexSet::EMPTY, || {
                format!(
                    "structural {}, brute force {}, certificate valid {cert_ok}",
                    r.two_parallel_paths,
                    brute.is_some()
                )
            });
        }
        Err(e) => t.error(g, VertexSet::EMPTY, e),
    }
}

fn gplus_cases(g: &Graph, t: &mut Tally) {
    match find_certificate_bruteforce(g) {
        Ok(Some(_)) => {}
        Ok(None) => return,
        Err(e) => return t.error(g, VertexSet::EMPTY, e),
    }
    for (x, y) in g.non_edges() {
        let s: VertexSet = [x, y].into_iter().collect();
        let verdict = gplus_is_two_parallel_paths(&probe(g, s));
        let truth = find_certificate_bruteforce(&g.with_edge(x, y));
        match (verdict, truth) {
            (Ok(v), Ok(truth)) => {
                let truth = truth.is_some();
                t.check(v.value == truth, g, s, || format!("decider {} ({:?}), brute force {truth}", v.value, v.case));
                if v.literal != truth {
                    t.note("literal_case_clauses_disagree");
                }
            }
            (Err(e), _) => t.error(g, s, e),
            (_, Err(e)) => t.error(g, s, e),
        }
    }
}

fn forcing_bounds(g: &Graph, t: &mut Tally) {
    let z_plain = match zero_forcing_number(g) {
        Ok((z, _)) => z,
        Err(e) => return t.error(g, VertexSet::EMPTY, e),
    };
    for s in independent_sets(g) {
        let pg = probe(g, s);
        let z = match probe_zero_forcing_number(&pg) {
            Ok((z, _)) => z,
            Err(e) => {
                t.error(g, s, e);
                continue;
            }
        };
        let w = nullity_witness(&pg);
        let nullity = w.nullity().unwrap_or(usize::MAX);
        let in_s = in_s_probe(&w, &pg) == Ok(true);
        t.check(in_s && nullity == s.len() && z >= s.len() && z >= z_plain, g, s, || {
            format!("Z(G^N)={z}, Z(G)={z_plain}, witness nullity {nullity}, in pattern {in_s}")
        });
    }
}

fn witness_ranks(g: &Graph, index: usize, t: &mut Tally) {
    for s in independent_sets(g) {
        let pg = probe(g, s);
        let seed = (index as u64) << 32 | u64::from(s.bits());
        let real = Realization::random(&pg, &mut ChaCha8Rng::seed_from_u64(seed));
        let (qc, iv) = match (construct_q(&real), sandwich_bounds(&real)) {
            (Ok(qc), Ok(iv)) => (qc, iv),
            (Err(e), _) | (_, Err(e)) => {
                t.error(g, s, e);
                continue;
            }
        };
        let k = real.a.rows();
        let top = qc.q.select(&(0..k).collect::<Vec<_>>(), &(0..g.n()).collect::<Vec<_>>());
        let ok = qc.q.is_symmetric()
            && top == real.top_block()
            && qc.rank_q <= qc.upper_bound()
            && qc.rank_q == qc.congruent_rank
            && iv.lower <= qc.rank_q
            && in_s_probe(&qc.q_original(), &pg) == Ok(true);
        t.check(ok, g, s, || {
            format!(
                "seed {seed}: rank Q {} (congruent {}), rank A {}, rank B_perp {}",
                qc.rank_q, qc.congruent_rank, qc.rank_a, qc.rank_b_perp
            )
        });
    }
}

fn reversals(g: &Graph, t: &mut Tally) {
    for s in independent_sets(g) {
        let pg = probe(g, s);
        let sets = match minimum_probe_forcing_sets(&pg) {
            Ok(sets) => sets,
            Err(e) => {
                t.error(g, s, e);
                continue;
            }
        };
        for b in sets {
            for r in all_reversals(&pg, b) {
                t.check(is_probe_forcing_set(&pg, r), g, s, || format!("set {b} has reversal {r}, not forcing"));
            }
        }
    }
}

fn vertex_cut(g: &Graph, t: &mut Tally) {
    for s in independent_sets(g) {
        let pg = probe(g, s);
        match probe_zero_forcing_number(&pg) {
            Ok((z, _)) if z == s.len() => {}
            Ok(_) => continue,
            Err(e) => {
                t.error(g, s, e);
                continue;
            }
        }
        match check_min_forcing_structure(&pg) {
            Ok(r) => {
                if !r.all_sets_reading_holds {
                    t.note("all_sets_reading_fails");
                }
                t.check(r.theorem_holds, g, s, || {
                    format!("N is no cut and {:?} is a counterexample", r.counterexample)
                });
            }
            Err(e) => t.error(g, s, e),
        }
    }
}

fn mr_consistency(g: &Graph, t: &mut Tally) {
    for s in independent_sets(g) {
        let pg = probe(g, s);
        let n = pg.n();
        let c = match classify(&pg) {
            Ok(c) => c,
            Err(ClassifyError::CompletionBudget { .. }) => {
                t.note("skipped_completion_budget");
                continue;
            }
            Err(e) => {
                t.error(g, s, e);
                continue;
            }
        };
        let in_interval = match c.verdict.value(n) {
            Some(v) if c.verdict.is_exact() => c.interval.contains(v),
            Some(v) => c.interval.lower <= v,
            None => true,
        };
        let exclusive = !(is_mr0(&pg) && is_mr1(&pg).is_some());
        let ends_apart =
            !(n >= 5 && g.is_connected() && is_mr_nminus1(&pg) && is_mr_nminus2(&pg).map(|v| v.value).unwrap_or(false));
        if c.verdict.is_exact() {
            t.note("exact_verdicts");
        }
        t.check(in_interval && exclusive && ends_apart, g, s, || {
            format!("verdict {:?} against [{}, {}]", c.verdict, c.interval.lower, c.interval.upper)
        });
    }
}

fn path_cycle(g: &Graph, t: &mut Tally) {
    for s in independent_sets(g).filter(|s| s.len() >= 2) {
        let pg = probe(g, s);
        match probe_zero_forcing_number(&pg) {
            Ok((z, _)) => {
                let nullity = nullity_witness(&pg).nullity().unwrap_or(usize::MAX);
                t.check(z == s.len() && nullity == s.len(), g, s, || format!("Z={z}, witness nullity {nullity}"));
            }
            Err(e) => t.error(g, s, e),
        }
    }
}

fn row_z2(g: &Graph, t: &mut Tally) {
    match (zero_forcing_number(g), find_certificate_bruteforce(g)) {
        (Ok((z, _)), Ok(cert)) => {
            let pp = cert.is_some() && !g.is_path();
            t.check((z == 2) == pp, g, VertexSet::EMPTY, || format!("Z={z}, parallel paths and not a path {pp}"));
        }
        (Err(e), _) => t.error(g, VertexSet::EMPTY, e),
        (_, Err(e)) => t.error(g, VertexSet::EMPTY, e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scan(check: Check, n_max: usize, threads: usize) -> ScanReport {
        let (graphs, corpus) = enumerated_corpus(check, 1, n_max).unwrap();
        let params = ScanParams { n_min: 1, n_max, corpus, connected_only: check.connected_only() };
        run_scan(check, &graphs, params, threads).unwrap()
    }

    #[test]
    fn names_round_trip() {
        for &c in Check::value_variants() {
            assert_eq!(Check::parse(&c.name()).unwrap(), c);
            assert_eq!(serde_json::to_value(c).unwrap(), serde_json::Value::String(c.name()));
        }
        assert_eq!(Check::RowZ2.name(), "row-z2");
        assert!(matches!(Check::parse("nope"), Err(CliError::UnknownCheck(_))));
    }

    #[test]
    fn every_check_passes_on_small_graphs() {
        for &c in Check::value_variants() {
            let r = scan(c, 5, 2);
            assert!(r.ok(), "{c:?}: {:?}", r.exhibits);
            assert_eq!(r.passed + r.failed, r.tested);
            assert!(r.tested > 0, "{c:?}");
        }
    }

    #[test]
    fn thread_count_does_not_change_content() {
        for c in [Check::WitnessRanks, Check::GplusCases] {
            let a = scan(c, 5, 1);
            let b = scan(c, 5, 4);
            assert_eq!((a.tested, a.failed, &a.exhibits, &a.notes), (b.tested, b.failed, &b.exhibits, &b.notes));
        }
    }

    #[test]
    fn merge_keeps_order_and_caps_exhibits() {
        let g = Graph::empty(1);
        let mut parts = Vec::new();
        for i in 0..40 {
            let mut t = Tally::default();
            t.check(false, &g, VertexSet::EMPTY, || i.to_string());
            t.check(true, &g, VertexSet::EMPTY, String::new);
            parts.push(t);
        }
        let total = parts.into_iter().fold(Tally::default(), Tally::merge);
        assert_eq!((total.tested, total.failed, total.exhibits.len()), (80, 40, MAX_EXHIBITS));
        assert_eq!(total.exhibits[3].detail, "3");
    }
}
