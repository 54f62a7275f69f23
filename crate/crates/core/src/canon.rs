//! Canonical forms of the underlying simple graph.
//!
//! The canonical labelling is the lexicographically smallest relabelled
//! adjacency matrix over all leaves of an individualization/refinement tree:
//! cells of an ordered partition are split by neighbour counts until
//! equitable, and the first non-singleton cell is branched on. The leaf set is
//! isomorphism-invariant, so minimizing over it is exact. Branches on a vertex
//! that is a twin (same neighbourhood up to each other) of an already explored
//! vertex of the same cell are skipped: swapping the twins is an automorphism
//! that maps one subtree onto the other.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::bits::{BitGraph, MAX_BIT_ORDER};
use crate::graph::Multigraph;

/// Relabelling-invariant identifier of a graph's underlying simple structure.
///
/// Byte layout: the order, then the upper triangle of the canonical adjacency
/// matrix packed column by column, most significant bit first.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey({})", self.to_hex())
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

impl Serialize for CanonicalKey {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_hex())
    }
}

/// Canonical key of `g`, ignoring multiplicities and vertex ids.
///
/// # Panics
///
/// Panics if `g` has more than 64 vertices.
pub fn canonical_key(g: &Multigraph) -> CanonicalKey {
    let bits = BitGraph::from_multigraph(g).unwrap_or_else(|_| {
        panic!("canonical keys support at most {MAX_BIT_ORDER} vertices")
    });
    canonical_key_bits(&bits)
}

/// Whether the underlying simple graphs of `a` and `b` are isomorphic.
pub fn is_isomorphic(a: &Multigraph, b: &Multigraph) -> bool {
    a.order() == b.order()
        && a.simple_edge_count() == b.simple_edge_count()
        && canonical_key(a) == canonical_key(b)
}

/// Canonical vertex order: `result[k]` is the position that receives label `k`.
pub(crate) fn canonical_order(g: &BitGraph) -> Vec<usize> {
    let n = g.order();
    if n == 0 {
        return Vec::new();
    }
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut best: Option<(Vec<u64>, Vec<usize>)> = None;
    explore(g, vec![all], &mut best);
    best.expect("search reaches at least one leaf").1
}

pub(crate) fn canonical_key_bits(g: &BitGraph) -> CanonicalKey {
    let n = g.order();
    let order = canonical_order(g);
    let rows = relabel(g, &order);
    let mut bytes = Vec::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(8));
    bytes.push(n as u8);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for row in rows.iter().take(j) {
            acc = acc << 1 | (row >> j & 1) as u8;
            filled += 1;
            if filled == 8 {
                bytes.push(acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push(acc << (8 - filled));
    }
    CanonicalKey(bytes)
}

fn relabel(g: &BitGraph, order: &[usize]) -> Vec<u64> {
    let n = order.len();
    let mut label = vec![0usize; n];
    for (k, &v) in order.iter().enumerate() {
        label[v] = k;
    }
    order
        .iter()
        .map(|&v| {
            let mut r = g.row(v);
            let mut out = 0u64;
            while r != 0 {
                let u = r.trailing_zeros() as usize;
                r &= r - 1;
                out |= 1u64 << label[u];
            }
            out
        })
        .collect()
}

fn explore(g: &BitGraph, mut cells: Vec<u64>, best: &mut Option<(Vec<u64>, Vec<usize>)>) {
    refine(g, &mut cells);
    let Some(target) = cells.iter().position(|c| c.count_ones() > 1) else {
        let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let cert = relabel(g, &order);
        if best.as_ref().is_none_or(|(b, _)| cert < *b) {
            *best = Some((cert, order));
        }
        return;
    };
    let cell = cells[target];
    let mut explored: Vec<usize> = Vec::new();
    let mut members = cell;
    while members != 0 {
        let v = members.trailing_zeros() as usize;
        members &= members - 1;
        if explored.iter().any(|&w| twins(g, v, w)) {
            continue;
        }
        explored.push(v);
        let mut next = Vec::with_capacity(cells.len() + 1);
        next.extend_from_slice(&cells[..target]);
        next.push(1u64 << v);
        next.push(cell & !(1u64 << v));
        next.extend_from_slice(&cells[target + 1..]);
        explore(g, next, best);
    }
}

fn twins(g: &BitGraph, v: usize, w: usize) -> bool {
    g.row(v) & !(1u64 << w) == g.row(w) & !(1u64 << v)
}

/// Splits cells by neighbour counts into each splitter cell until the
/// partition is equitable. Sub-cells are ordered by ascending count.
fn refine(g: &BitGraph, cells: &mut Vec<u64>) {
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < cells.len() {
            let splitter = cells[s];
            let mut next = Vec::with_capacity(cells.len());
            for &cell in cells.iter() {
                if cell.count_ones() == 1 {
                    next.push(cell);
                    continue;
                }
                let mut groups = [0u64; MAX_BIT_ORDER + 1];
                let mut members = cell;
                while members != 0 {
                    let v = members.trailing_zeros() as usize;
                    members &= members - 1;
                    groups[(g.row(v) & splitter).count_ones() as usize] |= 1u64 << v;
                }
                next.extend(groups.iter().copied().filter(|&m| m != 0));
            }
            if next.len() != cells.len() {
                changed = true;
                *cells = next;
            }
            s += 1;
        }
        if !changed {
            return;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Multigraph {
        Multigraph::new(n, edges.iter().copied()).unwrap()
    }

    #[test]
    fn relabelled_paths_agree() {
        let a = graph(4, &[(0, 1), (1, 2), (2, 3)]);
        let b = graph(4, &[(2, 0), (0, 3), (3, 1)]);
        assert_eq!(canonical_key(&a), canonical_key(&b));
    }

    #[test]
    fn path_and_star_differ() {
        let p4 = graph(4, &[(0, 1), (1, 2), (2, 3)]);
        let star = graph(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_ne!(canonical_key(&p4), canonical_key(&star));
        assert!(!is_isomorphic(&p4, &star));
    }

    #[test]
    fn multiplicity_is_ignored() {
        let simple = graph(3, &[(0, 1), (1, 2), (0, 2)]);
        let doubled = graph(3, &[(0, 1), (0, 1), (1, 2), (0, 2)]);
        assert_eq!(canonical_key(&simple), canonical_key(&doubled));
    }

    #[test]
    fn regular_graphs_of_equal_degree_are_separated() {
        // C6 and two disjoint triangles are both 2-regular on 6 vertices.
        let c6 = graph(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]);
        let two_k3 = graph(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]);
        assert_ne!(canonical_key(&c6), canonical_key(&two_k3));
    }

    #[test]
    fn key_layout() {
        assert_eq!(canonical_key(&graph(1, &[])).as_bytes(), &[1]);
        // K2: single pair bit set
        assert_eq!(canonical_key(&graph(2, &[(0, 1)])).as_bytes(), &[2, 0x80]);
    }
}
