//! graph6 short form (orders 0..=62).
//!
//! The order is one byte `n + 63`, followed by the upper triangle of the
//! adjacency matrix read column by column, `(0,1), (0,2), (1,2), (0,3), ...`,
//! packed six bits per byte (most significant first) with 63 added to each.

use crate::graph::Multigraph;

use super::FormatError;

pub const GRAPH6_MAX_ORDER: usize = 62;
const HEADER: &str = ">>graph6<<";

fn err(message: impl Into<String>) -> FormatError {
    FormatError::Graph6(message.into())
}

/// Encodes the underlying simple graph of `g`, vertices taken in id order.
pub fn encode(g: &Multigraph) -> Result<String, FormatError> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(err(format!(
            "order {n} exceeds the short-form limit of {GRAPH6_MAX_ORDER}"
        )));
    }
    let mut out = String::with_capacity(1 + (n * n).div_ceil(12));
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.adjacent_at(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

/// Decodes one graph6 string, with or without the `>>graph6<<` header.
pub fn decode(line: &str) -> Result<Multigraph, FormatError> {
    let body = line.trim();
    let body = body.strip_prefix(HEADER).unwrap_or(body).as_bytes();
    if let Some(&bad) = body.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(err(format!("invalid character {:?}", bad as char)));
    }
    let (&first, data) = body.split_first().ok_or_else(|| err("empty input"))?;
    if first == 126 {
        return Err(err("orders above 62 are not supported"));
    }
    let n = (first - 63) as usize;
    if n == 0 {
        return Err(err("a graph needs at least one vertex"));
    }
    let pairs = n * (n - 1) / 2;
    let expected = pairs.div_ceil(6);
    if data.len() < expected {
        return Err(err(format!(
            "truncated bitmap: {} of {expected} bytes",
            data.len()
        )));
    }
    if data.len() > expected {
        return Err(err("trailing data after bitmap"));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if (data[k / 6] - 63) >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Multigraph::new(n, edges).map_err(|e| err(e.to_string()))
}

/// Decodes the first non-empty line.
pub fn decode_first(text: &str) -> Result<Multigraph, FormatError> {
    let line = text
        .lines()
        .find(|l| !l.trim().is_empty())
        .ok_or_else(|| err("empty input"))?;
    decode(line)
}

/// Decodes every non-empty line.
pub fn decode_all(text: &str) -> Result<Vec<Multigraph>, FormatError> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(decode)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_string() {
        // a-c, a-e, b-d, d-e
        let g = Multigraph::new(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode(&g).unwrap(), "DQc");
        assert_eq!(decode("DQc").unwrap(), g);
        assert_eq!(decode(">>graph6<<DQc\n").unwrap(), g);
    }

    #[test]
    fn single_vertex() {
        let k1 = Multigraph::new(1, []).unwrap();
        assert_eq!(encode(&k1).unwrap(), "@");
        assert_eq!(decode("@").unwrap(), k1);
    }

    #[test]
    fn multiplicities_are_dropped() {
        let g = Multigraph::new(2, [(0, 1), (0, 1)]).unwrap();
        assert_eq!(decode(&encode(&g).unwrap()).unwrap(), g.underlying_simple());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(decode("junk~~~").is_err());
        assert!(decode("D Q").is_err());
        assert!(decode("DQcc").is_err());
        assert!(decode("~?@").is_err());
        assert!(decode("").is_err());
        let big = Multigraph::new(63, []).unwrap();
        assert!(encode(&big).is_err());
    }
}
