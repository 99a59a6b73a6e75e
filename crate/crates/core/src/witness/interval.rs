use serde::Serialize;

use super::{construct_q, nullity_witness, triangle_number, Realization, WitnessError};
use crate::classify::characterization_bounds;
use crate::forcing::probe_zero_forcing_number;
use crate::graph::ProbeGraph;
use crate::linalg::probe_pattern;

/// Where a bound on `mr(G^N)` comes from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RankSource {
    /// `mr ≥ n − Z(G^N)`.
    ForcingBound,
    /// Rank of the nullity-`|N|` witness matrix.
    WitnessMatrix,
    /// Rank of the symmetric completion of a supplied realization.
    QConstruction,
    /// Top-half rank of a realization; a valid lower bound only when certified.
    PatternRealization { certified: bool },
    /// Triangle number of the probe-row pattern.
    PatternTriangle,
    /// A characterization theorem, named.
    Characterization { name: String },
    /// `rank ≥ 0`, or `mr ≤ n − 1` for a nonempty graph (shift the diagonal).
    Trivial,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankInterval {
    pub lower: usize,
    pub upper: usize,
    pub lower_source: RankSource,
    pub upper_source: RankSource,
}

impl RankInterval {
    pub fn contains(&self, v: usize) -> bool {
        self.lower <= v && v <= self.upper
    }

    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }

    fn raise(&mut self, v: usize, src: RankSource) {
        if v > self.lower {
            self.lower = v;
            self.lower_source = src;
        }
    }

    fn cap(&mut self, v: usize, src: RankSource) {
        if v < self.upper {
            self.upper = v;
            self.upper_source = src;
        }
    }
}

/// Bounds on `mr(G^N)` from forcing, the witness matrices, the positive
/// characterizations, and optionally a supplied realization.
pub fn mr_interval(pg: &ProbeGraph, realization: Option<&Realization>) -> Result<RankInterval, WitnessError> {
    let n = pg.n();
    let mut iv = RankInterval {
        lower: 0,
        upper: n.saturating_sub(1),
        lower_source: RankSource::Trivial,
        upper_source: RankSource::Trivial,
    };
    let (z, _) = probe_zero_forcing_number(pg)?;
    iv.raise(n - z, RankSource::ForcingBound);
    iv.raise(triangle_number(&probe_pattern(pg).0), RankSource::PatternTriangle);
    iv.cap(nullity_witness(pg).rank(), RankSource::WitnessMatrix);
    for (value, name) in characterization_bounds(pg) {
        iv.cap(value, RankSource::Characterization { name: name.to_string() });
    }
    if let Some(real) = realization {
        let qc = construct_q(real)?;
        iv.cap(qc.rank_q, RankSource::QConstruction);
    }
    assert!(iv.lower <= iv.upper, "inconsistent rank interval {iv:?} for {pg:?}");
    Ok(iv)
}
