use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use probe_cli::commands::{cmd_classify, cmd_forcing, cmd_recognize, cmd_witness, ForcingMode};
use probe_cli::input::{read_graphs, InputGraph};
use probe_cli::scan::{enumerated_corpus, run_scan, streamed_corpus, Check, Corpus, ScanParams, ScanReport};
use probe_cli::{exit, CliError};
use probe_core::graph::{parse_vertex_list, VertexSet};
use probe_core::paths::Recognition;
use serde::Serialize;

/// Probe-graph queries and exhaustive verification scans.
///
/// Graphs are graph6 strings, given as arguments, in a file (`--file`), or
/// one per line on standard input.
#[derive(Parser)]
#[command(name = "probe", version)]
struct Cli {
    /// Emit JSON (one object per line) instead of text summaries.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GraphInput {
    /// graph6 strings; read from --file or standard input when absent.
    graphs: Vec<String>,
    /// File with one graph6 string per line.
    #[arg(long, short)]
    file: Option<PathBuf>,
}

#[derive(Args)]
struct NonprobeArg {
    /// Comma-separated non-probe vertices, e.g. `1,4`.
    #[arg(long, short = 'N', default_value = "", value_parser = parse_nonprobes)]
    nonprobes: VertexSet,
}

fn parse_nonprobes(text: &str) -> Result<VertexSet, String> {
    parse_vertex_list(text).map_err(|e| e.to_string())
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether each graph is a graph of two parallel paths.
    Recognize {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Zero forcing number and a minimum forcing set.
    Zf {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        n: NonprobeArg,
        #[arg(long, value_enum, default_value_t = ForcingMode::Probe)]
        mode: ForcingMode,
    },
    /// Minimum-rank classification with the rank interval.
    Classify {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        n: NonprobeArg,
        /// Write the nullity witness envelopes (JSON lines) to this file.
        #[arg(long)]
        witness_out: Option<PathBuf>,
    },
    /// Nullity witness matrix, and optionally the completion of a random realization.
    Witness {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        n: NonprobeArg,
        /// Seed for a random realization whose symmetric completion is also emitted.
        #[arg(long)]
        sandwich_seed: Option<u64>,
    },
    /// Run a verification check over all graphs up to a size, or over a streamed corpus.
    Scan {
        #[arg(long, value_enum)]
        check: Check,
        /// Largest vertex count.
        #[arg(long = "n")]
        n_max: usize,
        /// Smallest vertex count.
        #[arg(long, default_value_t = 1)]
        n_min: usize,
        /// Worker threads; 0 uses every core.
        #[arg(long, env = "PROBE_THREADS", default_value_t = 0)]
        threads: usize,
        /// Check graphs from this file (`-` for standard input) instead of enumerating.
        #[arg(long, short)]
        file: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("probe: {e}");
            ExitCode::from(exit::USAGE)
        }
    }
}

fn load(input: &GraphInput) -> Result<Vec<InputGraph>, CliError> {
    read_graphs(&input.graphs, input.file.as_deref(), io::stdin().lock())
}

fn emit<T: Serialize>(
    out: &mut impl Write,
    json: bool,
    value: &T,
    text: impl FnOnce() -> String,
) -> Result<(), CliError> {
    let line = if json { serde_json::to_string(value)? } else { text() };
    writeln!(out, "{line}").map_err(|source| CliError::Io { path: "standard output".into(), source })
}

fn run(cli: Cli) -> Result<u8, CliError> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let json = cli.json;
    match cli.command {
        Command::Recognize { input } => {
            for g in load(&input)? {
                let r = cmd_recognize(&g);
                emit(&mut out, json, &r, || format!("{} {}", r.graph6, recognition_text(&r.recognition)))?;
            }
        }
        Command::Zf { input, n, mode } => {
            for g in load(&input)? {
                let r = cmd_forcing(&g, n.nonprobes, mode)?;
                emit(&mut out, json, &r, || format!("{} N={} Z={} witness={}", r.graph6, r.nonprobes, r.z, r.witness))?;
            }
        }
        Command::Classify { input, n, witness_out } => {
            let mut sink = match &witness_out {
                Some(path) => Some(BufWriter::new(
                    File::create(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })?,
                )),
                None => None,
            };
            for g in load(&input)? {
                let r = cmd_classify(&g, n.nonprobes, sink.is_some())?;
                if let (Some(sink), Some(w)) = (sink.as_mut(), &r.witness) {
                    emit(sink, true, w, String::new)?;
                }
                let c = &r.classification;
                emit(&mut out, json, &r, || {
                    format!(
                        "{} N={} verdict={} mr in [{}, {}] matched={}",
                        r.graph6,
                        r.nonprobes,
                        serde_json::to_value(&c.verdict)
                            .ok()
                            .and_then(|v| v["verdict"].as_str().map(String::from))
                            .unwrap_or_default(),
                        c.interval.lower,
                        c.interval.upper,
                        c.matched.join(",")
                    )
                })?;
            }
        }
        Command::Witness { input, n, sandwich_seed } => {
            for g in load(&input)? {
                let r = cmd_witness(&g, n.nonprobes, sandwich_seed)?;
                emit(&mut out, json, &r, || {
                    let w = &r.nullity_witness;
                    let mut s = format!(
                        "{} N={} rank={} nullity={}\n{}",
                        w.graph6,
                        w.nonprobes,
                        w.claimed_rank,
                        w.claimed_nullity,
                        w.matrix.trim_end()
                    );
                    if let Some(q) = &r.sandwich {
                        s += &format!(
                            "\nQ (seed {}): rank {} <= {} + 2*{}\n{}",
                            q.seed,
                            q.rank_q,
                            q.rank_a,
                            q.rank_b_perp,
                            q.q.matrix.trim_end()
                        );
                    }
                    s
                })?;
            }
        }
        Command::Scan { check, n_max, n_min, threads, file } => {
            let (graphs, corpus) = match &file {
                None => enumerated_corpus(check, n_min, n_max)?,
                Some(path) => {
                    let (input, source) = if path.as_os_str() == "-" {
                        (read_graphs(&[], None, io::stdin().lock())?, "standard input".to_string())
                    } else {
                        (read_graphs(&[], Some(path), io::empty())?, path.display().to_string())
                    };
                    (streamed_corpus(check, &input, n_min, n_max), Corpus::Streamed { source })
                }
            };
            eprintln!("scan {}: {} graphs", check.name(), graphs.len());
            let params = ScanParams { n_min, n_max, corpus, connected_only: check.connected_only() };
            let report = run_scan(check, &graphs, params, threads)?;
            emit(&mut out, json, &report, || scan_text(&report))?;
            out.flush().map_err(|source| CliError::Io { path: "standard output".into(), source })?;
            return Ok(if report.ok() { exit::OK } else { exit::CHECK_FAILED });
        }
    }
    out.flush().map_err(|source| CliError::Io { path: "standard output".into(), source })?;
    Ok(exit::OK)
}

fn recognition_text(r: &Recognition) -> String {
    match (&r.certificate, &r.reason) {
        (Some(c), _) => format!("two parallel paths: P={:?} Q={:?}", c.path_p, c.path_q),
        (None, Some(why)) => format!("not two parallel paths: {why}"),
        (None, None) => "not two parallel paths".into(),
    }
}

fn scan_text(r: &ScanReport) -> String {
    let mut s = format!(
        "{}: {} passed, {} failed of {} instances on {} graphs [{:.2}s]",
        r.check.name(),
        r.passed,
        r.failed,
        r.tested,
        r.graphs,
        r.wall_time_secs
    );
    for (k, v) in &r.notes {
        s += &format!("\n  note {k}: {v}");
    }
    for e in &r.exhibits {
        s += &format!("\n  FAIL {} N={} {}", e.graph6, e.nonprobes, e.detail);
    }
    s
}
