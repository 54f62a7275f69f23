//! DIMACS colouring format (`p edge n m`, `e u v`, 1-indexed).

use std::fmt::Write as _;

use crate::graph::Multigraph;

use super::FormatError;

fn err(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Dimacs {
        line,
        message: message.into(),
    }
}

/// Parses DIMACS `.col` text. Repeated `e` lines add multiplicity. The edge
/// count on the problem line is not enforced.
pub fn parse_dimacs(text: &str) -> Result<Multigraph, FormatError> {
    let mut order: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let mut fields = raw.split_whitespace();
        let Some(tag) = fields.next() else {
            continue;
        };
        match tag {
            "c" => continue,
            "p" => {
                if order.is_some() {
                    return Err(err(line, "duplicate problem line"));
                }
                let kind = fields.next();
                if !matches!(kind, Some("edge" | "col")) {
                    return Err(err(line, "expected `p edge <n> <m>`"));
                }
                let n = fields
                    .next()
                    .and_then(|s| s.parse::<usize>().ok())
                    .ok_or_else(|| err(line, "invalid vertex count"))?;
                fields
                    .next()
                    .and_then(|s| s.parse::<usize>().ok())
                    .ok_or_else(|| err(line, "invalid edge count"))?;
                if n == 0 {
                    return Err(err(line, "a graph needs at least one vertex"));
                }
                order = Some(n);
            }
            "e" => {
                let mut endpoint = || {
                    fields
                        .next()
                        .and_then(|s| s.parse::<usize>().ok())
                        .ok_or_else(|| err(line, "malformed edge line"))
                };
                let (u, v) = (endpoint()?, endpoint()?);
                if u == v {
                    return Err(err(line, format!("loop edge at vertex {u}")));
                }
                let n = order.ok_or_else(|| err(line, "edge before problem line"))?;
                for w in [u, v] {
                    if w == 0 || w > n {
                        return Err(err(line, format!("vertex {w} out of range 1..={n}")));
                    }
                }
                edges.push((u - 1, v - 1));
            }
            other => return Err(err(line, format!("unknown line type `{other}`"))),
        }
    }
    let n = order.ok_or_else(|| err(text.lines().count().max(1), "missing problem line"))?;
    Multigraph::new(n, edges).map_err(|e| err(0, e.to_string()))
}

/// Writes `g` with vertices numbered by position from 1; parallel edges are
/// written as repeated `e` lines.
pub fn write_dimacs(g: &Multigraph) -> String {
    let mut out = String::new();
    writeln!(out, "p edge {} {}", g.order(), g.edge_count()).unwrap();
    for (u, v, m) in g.edges() {
        let (i, j) = (g.position(u).unwrap() + 1, g.position(v).unwrap() + 1);
        for _ in 0..m {
            writeln!(out, "e {i} {j}").unwrap();
        }
    }
    out
}
