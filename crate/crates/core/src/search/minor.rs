//! Hadwiger number by exhaustive search over connected vertex partitions.
//!
//! In a connected graph any model of a complete minor extends to a partition
//! of all vertices (leftover pieces can be absorbed into an adjacent branch
//! set), so it suffices to enumerate set partitions whose blocks are connected
//! and pairwise adjacent. Bell-number growth limits this to small graphs.

use serde::Serialize;

use crate::bits::BitGraph;
use crate::error::{Error, Result};
use crate::graph::{Multigraph, VertexId};

use super::{Certificate, SearchResult};

pub const HADWIGER_MAX_ORDER: usize = 12;

/// Branch sets of a complete minor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinorModel {
    blocks: Vec<Vec<VertexId>>,
}

impl MinorModel {
    pub fn new(blocks: Vec<Vec<VertexId>>) -> Self {
        MinorModel { blocks }
    }

    pub fn blocks(&self) -> &[Vec<VertexId>] {
        &self.blocks
    }

    /// Order of the complete graph this model exhibits.
    pub fn order(&self) -> usize {
        self.blocks.len()
    }

    /// Blocks are non-empty, disjoint, induce connected subgraphs of `g` and
    /// are joined pairwise by an edge.
    pub fn is_valid_for(&self, g: &Multigraph) -> bool {
        let Ok(bits) = BitGraph::from_multigraph(g) else {
            return false;
        };
        let mut masks = Vec::with_capacity(self.blocks.len());
        let mut seen = 0u64;
        for block in &self.blocks {
            let mut mask = 0u64;
            for &v in block {
                let Some(p) = g.position(v) else {
                    return false;
                };
                mask |= 1u64 << p;
            }
            if mask & seen != 0 || !bits.induced_connected(mask) {
                return false;
            }
            seen |= mask;
            masks.push(mask);
        }
        masks.iter().enumerate().all(|(a, &ma)| {
            let reach = bits.neighbourhood_of(ma);
            masks[a + 1..].iter().all(|&mb| reach & mb != 0)
        })
    }
}

struct Partitioner<'a> {
    g: &'a BitGraph,
    blocks: Vec<u64>,
    best: Vec<u64>,
    states: u64,
}

impl Partitioner<'_> {
    fn assign(&mut self, v: usize) {
        self.states += 1;
        let n = self.g.order();
        if self.best.len() == n {
            return;
        }
        if v == n {
            if self.blocks.len() > self.best.len() && self.is_clique_model() {
                self.best = self.blocks.clone();
            }
            return;
        }
        if self.blocks.len() + (n - v) <= self.best.len() {
            return;
        }
        let bit = 1u64 << v;
        self.blocks.push(bit);
        self.assign(v + 1);
        self.blocks.pop();
        for b in 0..self.blocks.len() {
            self.blocks[b] |= bit;
            self.assign(v + 1);
            self.blocks[b] &= !bit;
        }
    }

    fn is_clique_model(&self) -> bool {
        self.blocks.iter().all(|&m| self.g.induced_connected(m))
            && self.blocks.iter().enumerate().all(|(a, &ma)| {
                let reach = self.g.neighbourhood_of(ma);
                self.blocks[a + 1..].iter().all(|&mb| reach & mb != 0)
            })
    }
}

/// Largest `k` such that `K_k` is a minor of `g`, with branch sets.
pub fn hadwiger_number(g: &Multigraph) -> Result<SearchResult> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.order() > HADWIGER_MAX_ORDER {
        return Err(Error::TooLarge {
            order: g.order(),
            max: HADWIGER_MAX_ORDER,
        });
    }
    let bits = BitGraph::from_multigraph(g)?;
    let mut p = Partitioner {
        g: &bits,
        blocks: Vec::new(),
        best: Vec::new(),
        states: 0,
    };
    p.assign(0);
    let blocks = p
        .best
        .iter()
        .map(|&mask| {
            (0..g.order())
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| g.vertices()[i])
                .collect()
        })
        .collect();
    let model = MinorModel::new(blocks);
    Ok(SearchResult {
        value: model.order(),
        certificate: Certificate::Minor(model),
        states_visited: p.states,
        memo_hits: 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Multigraph {
        Multigraph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn check(g: &Multigraph, expected: usize) {
        let r = hadwiger_number(g).unwrap();
        assert_eq!(r.value, expected);
        let model = r.certificate.as_minor().unwrap();
        assert!(model.is_valid_for(g));
        assert_eq!(model.order(), expected);
    }

    #[test]
    fn small_cases() {
        check(&Multigraph::new(1, []).unwrap(), 1);
        check(&Multigraph::new(4, [(0, 1), (1, 2), (1, 3)]).unwrap(), 2);
        check(&cycle(5), 3);
        check(&Multigraph::complete(4).unwrap(), 4);
        // K_{2,3}
        let k23 = Multigraph::new(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        check(&k23, 3);
    }

    #[test]
    fn invalid_models() {
        let c4 = cycle(4);
        let v = VertexId;
        // {0,2} is not connected in C4
        assert!(!MinorModel::new(vec![vec![v(0), v(2)], vec![v(1)]]).is_valid_for(&c4));
        // {0} and {2} are not adjacent
        assert!(!MinorModel::new(vec![vec![v(0)], vec![v(2)]]).is_valid_for(&c4));
        assert!(MinorModel::new(vec![vec![v(0)], vec![v(1)]]).is_valid_for(&c4));
    }

    #[test]
    fn rejects_large_and_disconnected() {
        assert_eq!(
            hadwiger_number(&Multigraph::new(2, []).unwrap()).unwrap_err(),
            Error::Disconnected
        );
        assert!(matches!(
            hadwiger_number(&cycle(13)),
            Err(Error::TooLarge { order: 13, .. })
        ));
    }
}
