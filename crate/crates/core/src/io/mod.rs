//! Graph interchange formats and report output.

pub mod dimacs;
pub mod graph6;
pub mod report;

use std::path::Path;

use thiserror::Error;

use crate::graph::Multigraph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Dimacs { line: usize, message: String },
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("{0}")]
    Io(String),
}

/// Reads a graph, choosing the format by extension: `.col` is DIMACS, `.g6`
/// is graph6. Other extensions are sniffed: a `p` or `c` line means DIMACS.
pub fn read_graph(path: &Path) -> Result<Multigraph, FormatError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| FormatError::Io(format!("{}: {e}", path.display())))?;
    match path.extension().and_then(|e| e.to_str()) {
        Some("col") => dimacs::parse_dimacs(&text),
        Some("g6") => graph6::decode_first(&text),
        _ => {
            let first = text.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or("");
            if first.starts_with("p ") || first.starts_with("c") && !first.starts_with(">>") {
                dimacs::parse_dimacs(&text)
            } else {
                graph6::decode_first(&text)
            }
        }
    }
}
