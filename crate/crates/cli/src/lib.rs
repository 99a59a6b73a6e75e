//! Library half of the `probe` command: input handling, the per-graph
//! commands, and the batch scans. `main.rs` only parses arguments.

pub mod commands;
pub mod input;
pub mod scan;

use probe_core::classify::ClassifyError;
use probe_core::forcing::ForcingError;
use probe_core::graph::GraphError;
use probe_core::linalg::LinalgError;
use probe_core::paths::PathsError;
use probe_core::witness::WitnessError;
use thiserror::Error;

/// Process exit codes; a stable contract for scripts.
pub mod exit {
    pub const OK: u8 = 0;
    pub const CHECK_FAILED: u8 = 1;
    pub const USAGE: u8 = 2;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("line {line}: {source}")]
    Parse { line: usize, source: GraphError },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Forcing(#[from] ForcingError),
    #[error(transparent)]
    Paths(#[from] PathsError),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error(transparent)]
    Witness(#[from] WitnessError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("unknown check {0:?}")]
    UnknownCheck(String),
    #[error("no graphs in the input")]
    EmptyInput,
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("thread pool: {0}")]
    ThreadPool(#[from] rayon::ThreadPoolBuildError),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
