use std::io::{BufRead, BufReader, Read};
use std::path::Path;

use probe_core::graph::{parse_graph6, Graph};

use crate::CliError;

/// A parsed input graph with the text it came from.
#[derive(Clone, Debug)]
pub struct InputGraph {
    pub graph6: String,
    pub graph: Graph,
}

/// Parses one graph6 string per non-blank line; `#` starts a comment line.
pub fn parse_lines(reader: impl BufRead, source: &str) -> Result<Vec<InputGraph>, CliError> {
    let mut out = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line.map_err(|source_err| CliError::Io { path: source.to_string(), source: source_err })?;
        let text = line.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        let graph = parse_graph6(text).map_err(|e| CliError::Parse { line: i + 1, source: e })?;
        out.push(InputGraph { graph6: text.to_string(), graph });
    }
    Ok(out)
}

/// Graphs from the command line if any were given, else from `file`, else
/// from `stdin`.
pub fn read_graphs(args: &[String], file: Option<&Path>, stdin: impl Read) -> Result<Vec<InputGraph>, CliError> {
    let graphs = if !args.is_empty() {
        parse_lines(args.join("\n").as_bytes(), "arguments")?
    } else if let Some(path) = file {
        let shown = path.display().to_string();
        let f = std::fs::File::open(path).map_err(|source| CliError::Io { path: shown.clone(), source })?;
        parse_lines(BufReader::new(f), &shown)?
    } else {
        parse_lines(BufReader::new(stdin), "standard input")?
    };
    if graphs.is_empty() {
        return Err(CliError::EmptyInput);
    }
    Ok(graphs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn skips_blanks_and_comments() {
        let text = "# corpus\nC~\n\n>>graph6<<Bw\n";
        let gs = parse_lines(text.as_bytes(), "test").unwrap();
        assert_eq!(gs.len(), 2);
        assert_eq!(gs[0].graph.edge_count(), 6);
        assert_eq!(gs[1].graph.n(), 3);
    }

    #[test]
    fn reports_the_bad_line() {
        let err = parse_lines("C~\nC\u{7f}\n".as_bytes(), "test").unwrap_err();
        assert!(matches!(err, CliError::Parse { line: 2, .. }), "{err}");
    }

    #[test]
    fn arguments_take_precedence() {
        let gs = read_graphs(&["Bw".into()], None, "C~\n".as_bytes()).unwrap();
        assert_eq!(gs[0].graph.n(), 3);
        assert!(matches!(read_graphs(&[], None, "\n".as_bytes()), Err(CliError::EmptyInput)));
    }
}
