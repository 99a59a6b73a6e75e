//! Per-graph queries. Each returns a serializable record; `main` decides
//! whether to print it as JSON or as a one-line summary.

use probe_core::classify::{classify, MrClassification};
use probe_core::forcing::{probe_zero_forcing_number, zero_forcing_number};
use probe_core::graph::{ProbeGraph, VertexSet};
use probe_core::linalg::{emit_matrix_text, in_s_probe, RationalMatrix};
use probe_core::paths::{recognize, Recognition};
use probe_core::witness::{construct_q, nullity_witness, sandwich_bounds, RankInterval, Realization};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::input::InputGraph;
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum ForcingMode {
    Standard,
    Probe,
}

#[derive(Debug, Serialize)]
pub struct RecognizeOutput {
    pub graph6: String,
    #[serde(flatten)]
    pub recognition: Recognition,
}

pub fn cmd_recognize(input: &InputGraph) -> RecognizeOutput {
    RecognizeOutput { graph6: input.graph6.clone(), recognition: recognize(&input.graph) }
}

#[derive(Debug, Serialize)]
pub struct ForcingOutput {
    pub graph6: String,
    pub mode: ForcingMode,
    pub nonprobes: VertexSet,
    #[serde(rename = "Z")]
    pub z: usize,
    pub witness: VertexSet,
}

/// Standard mode ignores `nonprobes` apart from validating them.
pub fn cmd_forcing(input: &InputGraph, nonprobes: VertexSet, mode: ForcingMode) -> Result<ForcingOutput, CliError> {
    let pg = ProbeGraph::new(input.graph.clone(), nonprobes)?;
    let (z, witness) = match mode {
        ForcingMode::Standard => zero_forcing_number(pg.graph())?,
        ForcingMode::Probe => probe_zero_forcing_number(&pg)?,
    };
    Ok(ForcingOutput { graph6: input.graph6.clone(), mode, nonprobes, z, witness })
}

/// A witness matrix with the claims it is meant to back.
#[derive(Debug, Serialize)]
pub struct MatrixEnvelope {
    pub graph6: String,
    pub nonprobes: VertexSet,
    pub kind: &'static str,
    pub claimed_rank: usize,
    pub claimed_nullity: usize,
    pub in_pattern: bool,
    /// Exact rational text format: a `rows cols` line, then the rows.
    pub matrix: String,
}

fn envelope(
    input: &InputGraph,
    pg: &ProbeGraph,
    kind: &'static str,
    m: &RationalMatrix,
) -> Result<MatrixEnvelope, CliError> {
    let rank = m.rank();
    Ok(MatrixEnvelope {
        graph6: input.graph6.clone(),
        nonprobes: pg.nonprobes(),
        kind,
        claimed_rank: rank,
        claimed_nullity: m.cols() - rank,
        in_pattern: in_s_probe(m, pg)?,
        matrix: emit_matrix_text(m),
    })
}

#[derive(Debug, Serialize)]
pub struct WitnessOutput {
    pub nullity_witness: MatrixEnvelope,
    /// Present when a realization seed was given.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sandwich: Option<SandwichOutput>,
}

#[derive(Debug, Serialize)]
pub struct SandwichOutput {
    pub seed: u64,
    pub rank_a: usize,
    pub rank_b_perp: usize,
    pub rank_q: usize,
    pub interval: RankInterval,
    pub q: MatrixEnvelope,
}

pub fn cmd_witness(input: &InputGraph, nonprobes: VertexSet, seed: Option<u64>) -> Result<WitnessOutput, CliError> {
    let pg = ProbeGraph::new(input.graph.clone(), nonprobes)?;
    let nullity_witness = envelope(input, &pg, "nullity-witness", &nullity_witness(&pg))?;
    let sandwich = match seed {
        None => None,
        Some(seed) => {
            let real = Realization::random(&pg, &mut ChaCha8Rng::seed_from_u64(seed));
            let qc = construct_q(&real)?;
            Some(SandwichOutput {
                seed,
                rank_a: qc.rank_a,
                rank_b_perp: qc.rank_b_perp,
                rank_q: qc.rank_q,
                interval: sandwich_bounds(&real)?,
                q: envelope(input, &pg, "sandwich-q", &qc.q_original())?,
            })
        }
    };
    Ok(WitnessOutput { nullity_witness, sandwich })
}

#[derive(Debug, Serialize)]
pub struct ClassifyOutput {
    pub graph6: String,
    pub nonprobes: VertexSet,
    #[serde(flatten)]
    pub classification: MrClassification,
    /// Envelope of the nullity witness, when one was requested.
    #[serde(skip)]
    pub witness: Option<MatrixEnvelope>,
}

pub fn cmd_classify(input: &InputGraph, nonprobes: VertexSet, with_witness: bool) -> Result<ClassifyOutput, CliError> {
    let pg = ProbeGraph::new(input.graph.clone(), nonprobes)?;
    let classification = classify(&pg)?;
    let witness =
        if with_witness { Some(envelope(input, &pg, "nullity-witness", &nullity_witness(&pg))?) } else { None };
    Ok(ClassifyOutput { graph6: input.graph6.clone(), nonprobes, classification, witness })
}
